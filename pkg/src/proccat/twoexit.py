"""A second formulation of corecursion used to cross-check the solver.

Here the seed map has two exits up front: it may answer immediately, or
hand over a running process whose result is again answer-or-seed.  A
solution assigns to every seed either an immediate answer or a finished
process.  The two formulations determine each other; the translations in
both directions are provided, along with an exhaustive search for
solutions that does not involve the solver at all, so uniqueness can be
established independently.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .finset import DEFAULT_CAP
from .fixpoints import CoiterProblem, coiter_equation_gap
from .operators import join_live
from .process import LiveSpace, live_map
from .temporal import (
    TemporalMor,
    TemporalObj,
    enumerate_nat_trans,
    mor_equal,
    pointwise_coproduct,
    temporal_mor,
    t_compose,
    t_copairing,
    t_coproduct_mor,
    t_identity,
    t_inj,
)
from .times import TermBound


class TwoExitProblem:
    """``g`` maps seeds to ``b + (running process with answer-or-seed
    result)``.  Solutions are natural maps from seeds to ``b + (finished
    process)`` satisfying :meth:`is_solution`."""

    def __init__(self, w: TermBound, a: TemporalObj, b: TemporalObj,
                 c: TemporalObj, g: TemporalMor, check: bool = True):
        self.w, self.a, self.b, self.c = w, a, b, c
        self.inner = LiveSpace(w, a, pointwise_coproduct([b, c]))
        self.target = LiveSpace(w, a, b)
        self.answers = pointwise_coproduct([b, self.target.obj])
        if check:
            if g.dom != c:
                raise ValueError("seed map must start from the seed object")
            if g.cod != pointwise_coproduct([b, self.inner.obj]):
                raise ValueError("seed map must have answer and process exits")
        self.g = g

    def graft(self, cand: TemporalMor) -> TemporalMor:
        """Turn a candidate solution into a collapser of running
        processes: map each answer-or-seed result through the candidate,
        then concatenate."""
        res = t_copairing([t_inj([self.b, self.target.obj], 0), cand])
        lifted = live_map(
            self.inner, LiveSpace(self.w, self.a, self.answers),
            res=res, check=False,
        )
        return t_compose(join_live(self.target, check=False), lifted)

    def classify(self, collapse: TemporalMor) -> TemporalMor:
        """Turn a collapser back into a candidate solution: run the seed
        map, collapsing the process exit."""
        return t_compose(
            t_coproduct_mor([t_identity(self.b), collapse]), self.g
        )

    def is_solution(self, cand: TemporalMor) -> bool:
        """A candidate solves the problem when classifying its own graft
        reproduces it."""
        return mor_equal(cand, self.classify(self.graft(cand)))

    def solve(self, check: bool = True) -> TemporalMor:
        """The canonical solution, obtained through the one-exit solver:
        defer every seed through the seed map, iterate, classify."""
        inner_obj = self.inner.obj
        res = t_copairing([t_inj([self.b, inner_obj], 0), self.g])
        restart = live_map(
            self.inner,
            LiveSpace(self.w, self.a, pointwise_coproduct([self.b, inner_obj])),
            res=res, check=False,
        )
        collapse = CoiterProblem(
            self.w, self.a, self.b, inner_obj, restart, check=False
        ).solve(check=False)
        out = self.classify(collapse)
        if check:
            return temporal_mor(out.dom, out.cod, out.at)
        return out

    def search(self, cap: int = DEFAULT_CAP) -> list:
        """All solutions, found by filtering every natural map from seeds
        to answers.  Independent of the solver; used to establish that
        the solution is unique."""
        return [
            cand
            for cand in enumerate_nat_trans(self.c, self.answers, cap=cap)
            if self.is_solution(cand)
        ]


def defer_all(w: TermBound, a: TemporalObj, b: TemporalObj, c: TemporalObj,
              f: TemporalMor, check: bool = True) -> TwoExitProblem:
    """View a one-exit seed map as a two-exit problem that never answers
    immediately."""
    inner = LiveSpace(w, a, pointwise_coproduct([b, c]))
    g = t_compose(t_inj([b, inner.obj], 1), f)
    return TwoExitProblem(w, a, b, c, g, check=check)


def collapse_from_answers(pr: TwoExitProblem, f: TemporalMor,
                          cand: TemporalMor) -> TemporalMor:
    """Given the one-exit seed map ``f`` underlying ``pr`` and a two-exit
    solution, recover the one-exit solution: graft, then run ``f``."""
    return t_compose(pr.graft(cand), f)


def answers_from_collapse(pr: TwoExitProblem, sol: TemporalMor) -> TemporalMor:
    """Recover a two-exit solution from a one-exit one by deferring into
    it: the process exit of every seed is collapsed by ``sol``."""
    return t_compose(t_inj([pr.b, pr.target.obj], 1), sol)


@dataclass(frozen=True)
class RoundtripReport:
    """Everything the equivalence of the two formulations promises, on one
    problem instance."""

    equation_ok: bool
    solution_count: int
    search_matches: bool
    collapse_match: Optional[bool] = None
    answers_match: Optional[bool] = None
    one_exit_count: Optional[int] = None

    @property
    def ok(self) -> bool:
        if not (self.equation_ok and self.solution_count == 1
                and self.search_matches):
            return False
        for flag in (self.collapse_match, self.answers_match):
            if flag is False:
                return False
        return self.one_exit_count in (None, 1)


def check_roundtrips(pr: TwoExitProblem, one_exit: Optional[TemporalMor] = None,
                     cap: int = DEFAULT_CAP) -> RoundtripReport:
    """Solve canonically, confirm the solution equation, count solutions by
    exhaustive search, and, when the underlying one-exit seed map is
    supplied, confirm that translating solutions back and forth lands on
    the one-exit solver's answer (and that the one-exit solution is itself
    unique under exhaustive search)."""
    cand = pr.solve(check=False)
    equation_ok = pr.is_solution(cand)
    found = pr.search(cap)
    search_matches = len(found) == 1 and mor_equal(found[0], cand)
    if one_exit is None:
        return RoundtripReport(equation_ok, len(found), search_matches)
    cpr = CoiterProblem(pr.w, pr.a, pr.b, pr.c, one_exit, check=False)
    sol = cpr.solve(check=False)
    collapse_match = mor_equal(collapse_from_answers(pr, one_exit, cand), sol)
    answers_match = mor_equal(answers_from_collapse(pr, sol), cand)
    one_exit_count = sum(
        1
        for x in enumerate_nat_trans(pr.c, cpr.target.obj, cap=cap)
        if coiter_equation_gap(cpr, x) is None
    )
    return RoundtripReport(
        equation_ok, len(found), search_matches,
        collapse_match, answers_match, one_exit_count,
    )
