"""Finite time scales, termination bounds, and the temporal index category.

A time scale is a finite, strictly ascending tuple of exact rationals.  The
index category over a scale has objects (t, t0) with t <= t0 (present time,
observation time) and exactly one morphism (t, t0') -> (t, t0) whenever
t0 <= t0', recorded as the triple (t, t0, t0').  Restriction along such a
morphism forgets everything learned after t0.

Termination bounds live in the scale extended with an "unbounded" top
element: bounded values compare by time, and every bound is below
unbounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

Time = Fraction


def as_time(value: Union[int, str, Fraction]) -> Time:
    return Fraction(value)


class ScaleParseError(ValueError):
    pass


class ScaleOverlapError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class IndexPair:
    """Object (t, t0) of the index category: present time t, observed up to t0."""

    t: Time
    t0: Time

    def __post_init__(self) -> None:
        if self.t > self.t0:
            raise ValueError(f"index pair needs t <= t0, got ({self.t}, {self.t0})")

    def __repr__(self) -> str:
        return f"({self.t}, {self.t0})"


@dataclass(frozen=True, order=True)
class IndexMor:
    """Morphism (t, t0, t0'): forgets information acquired after t0.

    Runs from the better-informed object (t, t0') to (t, t0); t0 <= t0'.
    """

    t: Time
    t0: Time
    t0p: Time

    def __post_init__(self) -> None:
        if not (self.t <= self.t0 <= self.t0p):
            raise ValueError(f"index morphism needs t <= t0 <= t0', got {self}")

    @property
    def src(self) -> IndexPair:
        return IndexPair(self.t, self.t0p)

    @property
    def dst(self) -> IndexPair:
        return IndexPair(self.t, self.t0)

    @property
    def is_identity(self) -> bool:
        return self.t0 == self.t0p

    def __repr__(self) -> str:
        return f"({self.t}, {self.t0}, {self.t0p})"


def compose_index(i: IndexMor, j: IndexMor) -> IndexMor:
    """Composite i after j; j forgets down to t0', then i down to t0."""
    if i.src != j.dst:
        raise ValueError(f"index morphisms not composable: {i} after {j}")
    return IndexMor(i.t, i.t0, j.t0p)


@dataclass(frozen=True)
class TimeScale:
    points: tuple[Time, ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("time scale needs at least one point")
        if any(b <= a for a, b in zip(self.points, self.points[1:])):
            raise ValueError(f"time scale points must be strictly ascending: {self.points}")

    @classmethod
    def of(cls, *values: Union[int, str, Fraction]) -> "TimeScale":
        return cls(tuple(as_time(v) for v in values))

    @property
    def start(self) -> Time:
        return self.points[0]

    @property
    def end(self) -> Time:
        return self.points[-1]

    def __contains__(self, t: Time) -> bool:
        return t in self.points

    def open_open(self, a: Time, b: Time) -> tuple[Time, ...]:
        return tuple(p for p in self.points if a < p < b)

    def open_closed(self, a: Time, b: Time) -> tuple[Time, ...]:
        return tuple(p for p in self.points if a < p <= b)

    def closed_closed(self, a: Time, b: Time) -> tuple[Time, ...]:
        return tuple(p for p in self.points if a <= p <= b)

    def indices(self) -> tuple[IndexPair, ...]:
        return tuple(
            IndexPair(t, t0) for t in self.points for t0 in self.points if t <= t0
        )

    def index_mors(self) -> tuple[IndexMor, ...]:
        return tuple(
            IndexMor(t, t0, t0p)
            for t in self.points
            for t0 in self.points
            for t0p in self.points
            if t <= t0 <= t0p
        )

    def __repr__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.points) + "}"


def index_objects(scale: TimeScale) -> tuple[IndexPair, ...]:
    return scale.indices()


def hom(scale: TimeScale, src: IndexPair, dst: IndexPair) -> Optional[IndexMor]:
    """The unique index morphism src -> dst if one exists, else None."""
    for pair in (src, dst):
        if pair.t not in scale or pair.t0 not in scale:
            raise ValueError(f"{pair} is not an index of {scale}")
    if src.t == dst.t and dst.t0 <= src.t0:
        return IndexMor(src.t, dst.t0, src.t0)
    return None


@dataclass(frozen=True)
class TermBound:
    """Upper bound on termination time: a scale point, or None for no bound."""

    time: Optional[Time]

    @classmethod
    def at(cls, value: Union[int, str, Fraction]) -> "TermBound":
        return cls(as_time(value))

    @property
    def bounded(self) -> bool:
        return self.time is not None

    def __repr__(self) -> str:
        return "inf" if self.time is None else str(self.time)


UNBOUNDED = TermBound(None)


def w_leq(a: TermBound, b: TermBound) -> bool:
    """Order with unbounded on top: bounded values compare by time."""
    if b.time is None:
        return True
    if a.time is None:
        return False
    return a.time <= b.time


def w_meet(a: TermBound, b: TermBound) -> TermBound:
    if a.time is None:
        return b
    if b.time is None:
        return a
    return a if a.time <= b.time else b


# -- symbolic scale expressions and the well-foundedness validator ----------
#
# finite(..)      a finite set of rational points
# desc_above(z)   the descending chain {z + 1/n : n >= 1}, converging to z
#                 from above; well-founded (no infinite descent *below* any
#                 member stays inside)
# asc_below(z)    the ascending chain {z - 1/n : n >= 1}, bounded above by
#                 its limit z; rejected, since it encodes infinitely many
#                 steps before a finite horizon
# union(..)       disjoint union of the above


@dataclass(frozen=True)
class FiniteScale:
    points: tuple[Time, ...]

    def __post_init__(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise ScaleParseError(f"duplicate points in finite scale: {self.points}")


@dataclass(frozen=True)
class DescAbove:
    base: Time


@dataclass(frozen=True)
class AscBelow:
    limit: Time


@dataclass(frozen=True)
class ScaleUnion:
    parts: tuple["ScaleExpr", ...]


ScaleExpr = Union[FiniteScale, DescAbove, AscBelow, ScaleUnion]


@dataclass(frozen=True)
class ScaleVerdict:
    accepted: bool
    witness: Optional[str]


def _chain_member(p: Time, anchor: Time, sign: int) -> bool:
    """Is p = anchor + sign/n for a positive integer n."""
    gap = (p - anchor) * sign
    if gap <= 0:
        return False
    inv = 1 / gap
    return inv.denominator == 1


def _chain_points_equal_gap(d: Fraction, s1: int, s2: int) -> bool:
    """Does s1/n - s2/m = d have a solution in positive integers n, m.

    Covers chain/chain intersection: anchor1 + s1/n = anchor2 + s2/m with
    d = anchor2 - anchor1.
    """
    if d == 0:
        return s1 == s2
    # s1/n = d + s2/m.  The larger of |s1/n|, |s2/m| is at least |d|/2, which
    # confines one of the indices to a finite range; test both roles.
    half = abs(d) / 2
    bound = int(1 / half) + 1
    for k in range(1, bound + 1):
        recip = Fraction(1, k)
        other = recip * s1 - d  # candidate for s2/m with n = k
        if other * s2 > 0 and (s2 / other).denominator == 1 and s2 / other >= 1:
            return True
        other = recip * s2 + d  # candidate for s1/n with m = k
        if other * s1 > 0 and (s1 / other).denominator == 1 and s1 / other >= 1:
            return True
    return False


def _parts_overlap(x: ScaleExpr, y: ScaleExpr) -> bool:
    if isinstance(x, ScaleUnion) or isinstance(y, ScaleUnion):
        xs = x.parts if isinstance(x, ScaleUnion) else (x,)
        ys = y.parts if isinstance(y, ScaleUnion) else (y,)
        return any(_parts_overlap(a, b) for a in xs for b in ys)
    if isinstance(x, FiniteScale) and isinstance(y, FiniteScale):
        return bool(set(x.points) & set(y.points))
    if isinstance(x, FiniteScale) or isinstance(y, FiniteScale):
        fin, chain = (x, y) if isinstance(x, FiniteScale) else (y, x)
        anchor, sign = (
            (chain.base, 1) if isinstance(chain, DescAbove) else (chain.limit, -1)
        )
        return any(_chain_member(p, anchor, sign) for p in fin.points)
    a1, s1 = (x.base, 1) if isinstance(x, DescAbove) else (x.limit, -1)
    a2, s2 = (y.base, 1) if isinstance(y, DescAbove) else (y.limit, -1)
    return _chain_points_equal_gap(a2 - a1, s1, s2)


def _check_union_disjoint(expr: ScaleExpr) -> None:
    if isinstance(expr, ScaleUnion):
        for part in expr.parts:
            _check_union_disjoint(part)
        for i, a in enumerate(expr.parts):
            for b in expr.parts[i + 1 :]:
                if _parts_overlap(a, b):
                    raise ScaleOverlapError(f"union members overlap: {a} and {b}")


def validate_scale(expr: ScaleExpr) -> ScaleVerdict:
    """Accept iff no component ascends toward a finite limit from below.

    A descending chain above its base always has a least element ahead of
    any present position, so stepwise constructions terminate.  An ascending
    chain below its limit packs infinitely many points before the limit;
    any process crossing it would need infinitely many steps in finite time.
    Unions must be disjoint; overlap is a structural error, not a verdict.
    """
    _check_union_disjoint(expr)
    bad = _find_asc(expr)
    if bad is None:
        return ScaleVerdict(True, None)
    return ScaleVerdict(
        False,
        f"ascending chain approaching {bad.limit} from below: "
        f"{bad.limit}-1, {bad.limit}-1/2, {bad.limit}-1/3, ... has no final step",
    )


def _find_asc(expr: ScaleExpr) -> Optional[AscBelow]:
    if isinstance(expr, AscBelow):
        return expr
    if isinstance(expr, ScaleUnion):
        for part in expr.parts:
            found = _find_asc(part)
            if found is not None:
                return found
    return None


# -- textual syntax ----------------------------------------------------------


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ScaleParseError(f"bad rational {text!r}") from exc


def _tokenize_scale(text: str) -> list[str]:
    tokens: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "(),":
            tokens.append(ch)
            i += 1
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        elif ch.isdigit() or ch == "-":
            j = i + 1
            while j < len(text) and (text[j].isdigit() or text[j] == "/"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ScaleParseError(f"unexpected character {ch!r} in scale expression")
    return tokens


class _ScaleParser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: Optional[str] = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ScaleParseError("unexpected end of scale expression")
        if expected is not None and tok != expected:
            raise ScaleParseError(f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def expr(self) -> ScaleExpr:
        head = self.take()
        if head == "finite":
            return FiniteScale(tuple(self.rational_args()))
        if head == "desc_above":
            (base,) = self.rational_args()
            return DescAbove(base)
        if head == "asc_below":
            (limit,) = self.rational_args()
            return AscBelow(limit)
        if head == "union":
            self.take("(")
            parts = [self.expr()]
            while self.peek() == ",":
                self.take(",")
                parts.append(self.expr())
            self.take(")")
            return ScaleUnion(tuple(parts))
        raise ScaleParseError(f"unknown scale constructor {head!r}")

    def rational_args(self) -> list[Fraction]:
        self.take("(")
        args = [parse_fraction(self.take())]
        while self.peek() == ",":
            self.take(",")
            args.append(parse_fraction(self.take()))
        self.take(")")
        return args


def parse_scale_expr(text: str) -> ScaleExpr:
    parser = _ScaleParser(_tokenize_scale(text))
    expr = parser.expr()
    if parser.peek() is not None:
        raise ScaleParseError(f"trailing input after scale expression: {parser.peek()!r}")
    if isinstance(expr, FiniteScale) and not expr.points:
        raise ScaleParseError("finite scale needs at least one point")
    return expr


def scale_from_expr(expr: ScaleExpr) -> TimeScale:
    """Concrete scale for a finite expression; chains have no finite model."""
    if isinstance(expr, FiniteScale):
        return TimeScale(tuple(sorted(expr.points)))
    raise ScaleParseError(f"only finite(..) scales can be evaluated, got {expr}")
