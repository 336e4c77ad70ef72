import pytest
from hypothesis import given, settings, strategies as st

from proccat.finset import Atom, CapExceeded, fin_mor, fin_obj, flag_obj
from proccat.temporal import (
    brute_nat_trans,
    check_functor,
    const_obj,
    empty_obj,
    enumerate_nat_trans,
    exponential_end,
    first_difference,
    flag_temporal,
    mor_equal,
    nat_trans_space,
    naturality_witness,
    pointwise_coproduct,
    pointwise_product,
    t_compose,
    t_identity,
    temporal_mor,
    temporal_obj,
    unit_obj,
)
from proccat.times import IndexPair, TimeScale

SCALE = TimeScale.of(0, 1, 2)
SMALL = TimeScale.of(0, 1)


def test_constant_objects_are_functors():
    for obj in (empty_obj(SCALE), unit_obj(SCALE), flag_temporal(SCALE, 3)):
        assert check_functor(obj).ok


def test_broken_restriction_is_caught():
    # identity components but a non-identity self-restriction
    def carrier(i):
        return flag_obj(2)

    def restrict(m):
        def go(e):
            if m.t0 == m.t0p:
                return Atom("v0")
            return e
        return fin_mor(flag_obj(2), flag_obj(2), go)

    broken = temporal_obj(SMALL, carrier, restrict, check=False)
    rep = check_functor(broken)
    assert not rep.ok and rep.witness


def test_naturality_witness_localizes_the_failure():
    a = flag_temporal(SMALL, 2)

    def component(i):
        def go(e):
            if i.t0 > i.t:
                return Atom("v1")
            return e
        return fin_mor(a.at(i), a.at(i), go)

    mor = temporal_mor(a, a, component, check=False)
    witness = naturality_witness(mor)
    assert witness is not None and "square" in witness


def test_first_difference_reports_the_first_index():
    a = flag_temporal(SMALL, 2)
    flip = temporal_mor(
        a, a,
        lambda i: fin_mor(a.at(i), a.at(i),
                          lambda e: Atom("v1") if e == Atom("v0")
                          else Atom("v0")),
    )
    ident = t_identity(a)
    assert first_difference(ident, ident) is None
    gap = first_difference(flip, ident)
    assert gap is not None and "(0, 0)" in gap
    with pytest.raises(ValueError):
        first_difference(flip, t_identity(unit_obj(SMALL)))


@given(st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=20, deadline=None)
def test_nat_trans_space_counts_componentwise(n, m):
    # oracle: the unconstrained family space is the product of |B|^|A|
    a, b = flag_temporal(SMALL, n), flag_temporal(SMALL, m)
    expected = 1
    for i in SMALL.indices():
        expected *= len(b.at(i)) ** len(a.at(i))
    assert nat_trans_space(a, b) == expected


def test_enumeration_agrees_with_brute_filter():
    # the pruned search must return exactly the brute-force survivors
    a = flag_temporal(SMALL, 2)
    b = pointwise_coproduct([unit_obj(SMALL), unit_obj(SMALL)])
    fast = enumerate_nat_trans(a, b)
    slow = brute_nat_trans(a, b)
    assert len(fast) == len(slow)
    for f in fast:
        assert any(mor_equal(f, g) for g in slow)
    for f in fast:
        assert naturality_witness(f) is None


def test_enumeration_cap():
    a = flag_temporal(SCALE, 2)
    with pytest.raises(CapExceeded):
        enumerate_nat_trans(a, a, cap=3)


def test_composition_and_identity():
    a = flag_temporal(SMALL, 3)
    rot = temporal_mor(
        a, a,
        lambda i: fin_mor(a.at(i), a.at(i),
                          lambda e: Atom("v" + str((int(e.name[1]) + 1) % 3))),
    )
    assert mor_equal(t_compose(t_identity(a), rot), rot)
    assert mor_equal(t_compose(rot, t_identity(a)), rot)
    triple = t_compose(rot, t_compose(rot, rot))
    assert mor_equal(triple, t_identity(a))


def test_products_and_coproducts_are_pointwise():
    a, b = flag_temporal(SMALL, 2), flag_temporal(SMALL, 3)
    p = pointwise_product([a, b])
    s = pointwise_coproduct([a, b])
    for i in SMALL.indices():
        assert len(p.at(i)) == 6
        assert len(s.at(i)) == 5
    assert check_functor(p).ok and check_functor(s).ok


def test_exponential_collects_compatible_families():
    # maps 1 -> Flag pick one flag per observation level, coherently
    e = exponential_end(unit_obj(SMALL), flag_temporal(SMALL, 2))
    assert check_functor(e).ok
    i = IndexPair(SMALL.points[0], SMALL.points[1])
    # at (0,1) a family fixes images at (0,0) and (0,1); restriction of a
    # constant object forces them equal, so exactly two families remain
    assert len(e.at(i)) == 2


def test_const_obj_restricts_by_identity():
    obj = const_obj(SMALL, flag_obj(2))
    for m in SMALL.index_mors():
        comp = obj.res(m)
        assert comp.table == {e: e for e in flag_obj(2).elements}
