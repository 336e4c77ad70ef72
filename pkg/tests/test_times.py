from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from proccat.times import (
    IndexMor,
    IndexPair,
    ScaleOverlapError,
    ScaleParseError,
    TermBound,
    TimeScale,
    UNBOUNDED,
    parse_scale_expr,
    scale_from_expr,
    validate_scale,
    w_leq,
    w_meet,
)

SCALE = TimeScale.of(0, 1, 2)

bounds = st.sampled_from(
    [UNBOUNDED, TermBound.at(0), TermBound.at(1), TermBound.at(2)]
)


def test_scale_needs_ascending_points():
    with pytest.raises(ValueError):
        TimeScale.of(1, 0)
    with pytest.raises(ValueError):
        TimeScale.of(0, 0)
    with pytest.raises(ValueError):
        TimeScale(())


def test_index_pair_and_mor_validation():
    with pytest.raises(ValueError):
        IndexPair(Fraction(2), Fraction(1))
    with pytest.raises(ValueError):
        IndexMor(Fraction(0), Fraction(2), Fraction(1))


def test_index_counts_match_direct_enumeration():
    # oracle: count pairs t <= t0 and triples t <= t0 <= t0' directly
    for pts in [(0,), (0, 1), (0, 1, 2), (0, "1/2", 1, 5)]:
        scale = TimeScale.of(*pts)
        pairs = [
            (t, t0)
            for t in scale.points
            for t0 in scale.points
            if t <= t0
        ]
        triples = [
            (t, t0, t0p)
            for t in scale.points
            for t0 in scale.points
            for t0p in scale.points
            if t <= t0 <= t0p
        ]
        assert len(scale.indices()) == len(pairs)
        assert len(scale.index_mors()) == len(triples)


def test_interval_helpers():
    two = Fraction(2)
    assert SCALE.open_closed(Fraction(0), two) == (Fraction(1), two)
    assert SCALE.open_open(Fraction(0), two) == (Fraction(1),)
    assert SCALE.closed_closed(Fraction(0), two) == SCALE.points
    assert SCALE.open_closed(two, two) == ()
    assert SCALE.start == Fraction(0) and SCALE.end == two


@given(bounds)
def test_no_bound_is_top(x):
    assert w_leq(x, UNBOUNDED)


@given(bounds, bounds)
def test_meet_is_a_lower_bound(x, y):
    m = w_meet(x, y)
    assert w_leq(m, x) and w_leq(m, y)
    assert w_meet(y, x) == m


@given(bounds, bounds, bounds)
def test_meet_is_associative(x, y, z):
    assert w_meet(w_meet(x, y), z) == w_meet(x, w_meet(y, z))


@given(st.lists(st.integers(0, 30), min_size=1, max_size=5, unique=True))
def test_finite_expression_roundtrip(points):
    text = "finite(" + ",".join(str(p) for p in points) + ")"
    scale = scale_from_expr(parse_scale_expr(text))
    assert scale == TimeScale.of(*sorted(points))


def test_parse_accepts_fractions_and_nesting():
    expr = parse_scale_expr("union(finite(0, 1/2), desc_above(3))")
    assert validate_scale(expr).accepted


def test_parse_errors():
    for bad in ["finite()", "finite(0", "finite(0,0)", "finite(0) junk",
                "mystery(1)", "finite(one)"]:
        with pytest.raises(ScaleParseError):
            parse_scale_expr(bad)


def test_validator_accepts_descending_chains():
    verdict = validate_scale(
        parse_scale_expr("union(desc_above(0), desc_above(1))")
    )
    assert verdict.accepted and verdict.witness is None


def test_validator_rejects_ascent_to_a_limit_anywhere():
    verdict = validate_scale(
        parse_scale_expr("union(finite(10), union(desc_above(5), asc_below(1)))")
    )
    assert not verdict.accepted
    assert "1" in verdict.witness


def test_overlapping_union_is_a_structural_error():
    with pytest.raises(ScaleOverlapError):
        validate_scale(parse_scale_expr("union(desc_above(0), desc_above(0))"))


def test_only_finite_expressions_evaluate():
    with pytest.raises(ScaleParseError):
        scale_from_expr(parse_scale_expr("desc_above(0)"))
