"""Time-indexed objects and natural families over a finite time scale.

A temporal object assigns a finite set to every index pair (t, t0) and a
restriction map to every index morphism, contravariantly in the observation
time: restricting along (t, t0, t0') forgets what was learned after t0.
Temporal morphisms are families of maps, one per index, commuting with all
restrictions.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Callable, Optional, Sequence

from .finset import (
    CapExceeded,
    DEFAULT_CAP,
    EMPTY,
    FinMor,
    FinObj,
    FnTab,
    Tup,
    UNIT,
    compose as f_compose,
    copairing,
    coproduct,
    coproduct_mor,
    elem_key,
    enumerate_mors,
    fin_mor,
    fin_obj,
    flag_obj,
    identity as f_identity,
    inj,
    pairing,
    product,
    product_mor,
    proj,
)
from .times import IndexMor, IndexPair, TimeScale, compose_index


@dataclass(frozen=True, eq=True)
class TemporalObj:
    scale: TimeScale
    carrier: dict  # IndexPair -> FinObj
    restrict: dict  # IndexMor -> FinMor

    __hash__ = None

    def at(self, index: IndexPair) -> FinObj:
        return self.carrier[index]

    def res(self, mor: IndexMor) -> FinMor:
        return self.restrict[mor]


def temporal_obj(
    scale: TimeScale,
    carrier_at: Callable[[IndexPair], FinObj],
    restrict_at: Callable[[IndexMor], FinMor],
    check: bool = True,
) -> TemporalObj:
    carrier = {i: carrier_at(i) for i in scale.indices()}
    restrict = {m: restrict_at(m) for m in scale.index_mors()}
    obj = TemporalObj(scale, carrier, restrict)
    if check:
        report = check_functor(obj)
        if not report.ok:
            raise ValueError(f"not a functor: {report.witness}")
    return obj


@dataclass(frozen=True)
class FunctorReport:
    ok: bool
    witness: Optional[str]


def check_functor(obj: TemporalObj) -> FunctorReport:
    """Identities map to identities; restriction composes as the indices do."""
    for index in obj.scale.indices():
        mor = IndexMor(index.t, index.t0, index.t0)
        res = obj.res(mor)
        if res.dom != obj.at(index) or res.cod != obj.at(index):
            return FunctorReport(False, f"identity at {index} has wrong endpoints")
        if res != f_identity(obj.at(index)):
            return FunctorReport(
                False, f"restriction along identity {mor} is not the identity"
            )
    for mor in obj.scale.index_mors():
        res = obj.res(mor)
        if res.dom != obj.at(mor.src) or res.cod != obj.at(mor.dst):
            return FunctorReport(False, f"restriction along {mor} has wrong endpoints")
    for i in obj.scale.index_mors():
        for j in obj.scale.index_mors():
            if i.src != j.dst:
                continue
            direct = obj.res(compose_index(i, j))
            composed = f_compose(obj.res(i), obj.res(j))
            if direct != composed:
                bad = next(e for e in obj.at(j.src) if direct(e) != composed(e))
                return FunctorReport(
                    False,
                    f"composition fails along {i} after {j} at {bad!r}: "
                    f"{direct(bad)!r} vs {composed(bad)!r}",
                )
    return FunctorReport(True, None)


@dataclass(frozen=True, eq=True)
class TemporalMor:
    dom: TemporalObj
    cod: TemporalObj
    components: dict  # IndexPair -> FinMor

    __hash__ = None

    def at(self, index: IndexPair) -> FinMor:
        return self.components[index]


def temporal_mor(
    dom: TemporalObj,
    cod: TemporalObj,
    component_at: Callable[[IndexPair], FinMor],
    check: bool = True,
) -> TemporalMor:
    mor = TemporalMor(dom, cod, {i: component_at(i) for i in dom.scale.indices()})
    if check:
        witness = naturality_witness(mor)
        if witness is not None:
            raise ValueError(f"not natural: {witness}")
    return mor


def naturality_witness(mor: TemporalMor) -> Optional[str]:
    for index in mor.dom.scale.indices():
        comp = mor.at(index)
        if comp.dom != mor.dom.at(index) or comp.cod != mor.cod.at(index):
            return f"component at {index} has wrong endpoints"
    for i in mor.dom.scale.index_mors():
        if i.is_identity:
            continue
        left = f_compose(mor.cod.res(i), mor.at(i.src))
        right = f_compose(mor.at(i.dst), mor.dom.res(i))
        if left != right:
            bad = next(e for e in mor.dom.at(i.src) if left(e) != right(e))
            return f"square for {i} fails at {bad!r}: {left(bad)!r} vs {right(bad)!r}"
    return None


def is_natural(mor: TemporalMor) -> bool:
    return naturality_witness(mor) is None


def mor_equal(f: TemporalMor, g: TemporalMor) -> bool:
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("comparing morphisms with different endpoints")
    return f.components == g.components


def first_difference(f: TemporalMor, g: TemporalMor) -> Optional[str]:
    """Where two parallel morphisms first disagree: the index, the element,
    and the two images, as a printable witness.  None when equal."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("comparing morphisms with different endpoints")
    for i in f.dom.scale.indices():
        for e in f.dom.at(i).elements:
            left, right = f.at(i)(e), g.at(i)(e)
            if left != right:
                return f"at {i}: {e!r} maps to {left!r} vs {right!r}"
    return None


# -- constructions on objects ----------------------------------------------


def const_obj(scale: TimeScale, value: FinObj) -> TemporalObj:
    return temporal_obj(
        scale, lambda i: value, lambda m: f_identity(value), check=False
    )


def unit_obj(scale: TimeScale) -> TemporalObj:
    return const_obj(scale, UNIT)


def empty_obj(scale: TimeScale) -> TemporalObj:
    return const_obj(scale, EMPTY)


def flag_temporal(scale: TimeScale, n: int = 2) -> TemporalObj:
    return const_obj(scale, flag_obj(n))


def pointwise_product(factors: Sequence[TemporalObj]) -> TemporalObj:
    scale = factors[0].scale
    if any(f.scale != scale for f in factors):
        raise ValueError("factors live over different scales")
    return temporal_obj(
        scale,
        lambda i: product([f.at(i) for f in factors]),
        lambda m: product_mor([f.res(m) for f in factors]),
        check=False,
    )


def pointwise_coproduct(summands: Sequence[TemporalObj]) -> TemporalObj:
    scale = summands[0].scale
    if any(s.scale != scale for s in summands):
        raise ValueError("summands live over different scales")
    return temporal_obj(
        scale,
        lambda i: coproduct([s.at(i) for s in summands]),
        lambda m: coproduct_mor([s.res(m) for s in summands]),
        check=False,
    )


# -- combinators on morphisms ----------------------------------------------


def t_identity(obj: TemporalObj) -> TemporalMor:
    return temporal_mor(obj, obj, lambda i: f_identity(obj.at(i)), check=False)


def t_compose(f: TemporalMor, g: TemporalMor) -> TemporalMor:
    """f after g."""
    if g.cod != f.dom:
        raise ValueError("temporal morphisms not composable")
    return TemporalMor(
        g.dom, f.cod, {i: f_compose(f.at(i), g.at(i)) for i in g.dom.scale.indices()}
    )


def t_chain(*fs: TemporalMor) -> TemporalMor:
    """Composite running the given morphisms left to right."""
    result = fs[0]
    for f in fs[1:]:
        result = t_compose(f, result)
    return result


def t_proj(factors: Sequence[TemporalObj], k: int) -> TemporalMor:
    src = pointwise_product(factors)
    return temporal_mor(
        src, factors[k], lambda i: proj([f.at(i) for f in factors], k), check=False
    )


def t_pairing(fs: Sequence[TemporalMor]) -> TemporalMor:
    dom = fs[0].dom
    cod = pointwise_product([f.cod for f in fs])
    return TemporalMor(
        dom, cod, {i: pairing([f.at(i) for f in fs]) for i in dom.scale.indices()}
    )


def t_product_mor(fs: Sequence[TemporalMor]) -> TemporalMor:
    dom = pointwise_product([f.dom for f in fs])
    cod = pointwise_product([f.cod for f in fs])
    return TemporalMor(
        dom, cod, {i: product_mor([f.at(i) for f in fs]) for i in dom.scale.indices()}
    )


def t_inj(summands: Sequence[TemporalObj], k: int) -> TemporalMor:
    cod = pointwise_coproduct(summands)
    return temporal_mor(
        summands[k], cod, lambda i: inj([s.at(i) for s in summands], k), check=False
    )


def t_copairing(fs: Sequence[TemporalMor]) -> TemporalMor:
    dom = pointwise_coproduct([f.dom for f in fs])
    cod = fs[0].cod
    return TemporalMor(
        dom, cod, {i: copairing([f.at(i) for f in fs]) for i in dom.scale.indices()}
    )


def t_coproduct_mor(fs: Sequence[TemporalMor]) -> TemporalMor:
    dom = pointwise_coproduct([f.dom for f in fs])
    cod = pointwise_coproduct([f.cod for f in fs])
    return TemporalMor(
        dom, cod, {i: coproduct_mor([f.at(i) for f in fs]) for i in dom.scale.indices()}
    )


# -- function spaces --------------------------------------------------------


def _fn_tab(m: FinMor) -> FnTab:
    return FnTab(tuple(sorted(m.table.items(), key=lambda kv: elem_key(kv[0]))))


def exponential_end(a: TemporalObj, b: TemporalObj, cap: int = DEFAULT_CAP) -> TemporalObj:
    """Internal hom b^a: at (t, t0), the compatible families of maps
    a(t, t'') -> b(t, t'') for every scale point t'' in [t, t0].

    Compatible means every restriction square between two family members
    commutes.  Elements are tuples of function tables in ascending t''
    order; restriction drops the members beyond the new horizon.
    """
    scale = a.scale
    if b.scale != scale:
        raise ValueError("objects live over different scales")

    def carrier_at(i: IndexPair) -> FinObj:
        times = scale.closed_closed(i.t, i.t0)
        total = 1
        spaces = []
        for tq in times:
            here = IndexPair(i.t, tq)
            total *= len(b.at(here)) ** len(a.at(here))
            if total > cap:
                raise CapExceeded(total, cap)
            spaces.append(enumerate_mors(a.at(here), b.at(here), cap))
        families = []
        for choice in iter_product(*spaces):
            ok = True
            for x in range(len(times)):
                for y in range(x + 1, len(times)):
                    m = IndexMor(i.t, times[x], times[y])
                    if f_compose(b.res(m), choice[y]) != f_compose(choice[x], a.res(m)):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                families.append(Tup(tuple(_fn_tab(c) for c in choice)))
        return fin_obj(families)

    carrier_cache = {i: carrier_at(i) for i in scale.indices()}

    def restrict_at(m: IndexMor) -> FinMor:
        keep = len(scale.closed_closed(m.t, m.t0))
        return fin_mor(
            carrier_cache[m.src],
            carrier_cache[m.dst],
            lambda fam: Tup(fam.items[:keep]),
        )

    return temporal_obj(scale, lambda i: carrier_cache[i], restrict_at, check=True)


# -- exhaustive enumeration of natural families -----------------------------


def nat_trans_space(a: TemporalObj, b: TemporalObj) -> int:
    count = 1
    for i in a.scale.indices():
        count *= len(b.at(i)) ** len(a.at(i))
    return count


def enumerate_nat_trans(
    a: TemporalObj, b: TemporalObj, cap: int = DEFAULT_CAP
) -> list[TemporalMor]:
    """Every natural family a -> b, by pruned depth-first search.

    Visits candidate component assignments in lexicographic order (indices
    ascending, maps in enumerate_mors order), discarding a partial
    assignment as soon as a naturality square over assigned indices fails.
    The result order matches a plain filter over the full space.
    """
    space = nat_trans_space(a, b)
    if space > cap:
        raise CapExceeded(space, cap)
    indices = a.scale.indices()
    per_index = {i: enumerate_mors(a.at(i), b.at(i), cap) for i in indices}
    pos_of = {i: k for k, i in enumerate(indices)}
    mors_by_pos: dict[int, list[IndexMor]] = {}
    for m in a.scale.index_mors():
        if m.is_identity:
            continue
        latest = max(pos_of[m.src], pos_of[m.dst])
        mors_by_pos.setdefault(latest, []).append(m)

    found: list[TemporalMor] = []
    chosen: dict[IndexPair, FinMor] = {}

    def square_ok(m: IndexMor) -> bool:
        left = f_compose(b.res(m), chosen[m.src])
        right = f_compose(chosen[m.dst], a.res(m))
        return left == right

    def descend(k: int) -> None:
        if k == len(indices):
            found.append(TemporalMor(a, b, dict(chosen)))
            return
        index = indices[k]
        for cand in per_index[index]:
            chosen[index] = cand
            if all(square_ok(m) for m in mors_by_pos.get(k, ())):
                descend(k + 1)
        if index in chosen:
            del chosen[index]

    descend(0)
    return found


def brute_nat_trans(
    a: TemporalObj, b: TemporalObj, cap: int = DEFAULT_CAP
) -> list[TemporalMor]:
    """Unpruned filter over the whole candidate space; oracle for the search."""
    space = nat_trans_space(a, b)
    if space > cap:
        raise CapExceeded(space, cap)
    indices = a.scale.indices()
    per_index = [enumerate_mors(a.at(i), b.at(i), cap) for i in indices]
    out = []
    for choice in iter_product(*per_index):
        cand = TemporalMor(a, b, dict(zip(indices, choice)))
        if is_natural(cand):
            out.append(cand)
    return out
