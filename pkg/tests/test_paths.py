import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from farey_sl2 import (
    INF,
    ZERO,
    DomainError,
    ExtRational,
    FareyPath,
    ItinerarySpec,
    LiftVec,
    PathError,
    classify_tail_limit,
    contains_cycle_sequence,
    is_clockwise,
    is_clockwise_simple_closed,
    is_cycle_sequence,
    is_simple_closed,
    itinerary_of,
    lift_path,
    mobius,
    path_from_itinerary,
    period_transform,
)
from farey_sl2.paths import attracting_fixed_point, turn
from farey_sl2.samples import random_path, random_sl2, random_spec

from golden import HEXAGON_ITINERARY, HEXAGON_LOOP, golden_zigzag_path

seeds = st.integers(0, 10**9)


def test_lift_path_signs_steps_and_detects_loops():
    p = lift_path(["inf", "0", "1", "inf"])
    assert p.kind == "closed"
    assert all(p.lifts[k].det(p.lifts[k + 1]) == 1 for k in range(3))
    assert lift_path(["0", "1"]).kind == "finite"


def test_lift_path_rejects_non_adjacent():
    with pytest.raises(PathError, match="not adjacent"):
        lift_path(["0", "2"])


def test_farey_path_rejects_negative_step():
    with pytest.raises(PathError):
        FareyPath((LiftVec(0, 1), LiftVec(1, 0)))
    with pytest.raises(PathError):
        FareyPath((LiftVec(0, 1), LiftVec(-1, 0)), kind="closed")


def test_turn_examples():
    assert turn(ZERO, INF, ExtRational(3, 1)) == 3
    assert turn(ZERO, INF, ExtRational(-1, 1)) == -1
    assert turn(ZERO, INF, ZERO) == 0
    with pytest.raises(PathError):
        turn(ZERO, INF, ExtRational(1, 2))


def test_itinerary_of_closed_loop():
    assert itinerary_of(lift_path(HEXAGON_LOOP)) == HEXAGON_ITINERARY
    tri = lift_path(["inf", "1", "0", "inf"])
    assert itinerary_of(tri) == [1, 1, 1]


def test_itinerary_spec_entries_and_json():
    spec = ItinerarySpec(core=(5, 6), left_period=(1, 2), right_period=(3,), origin=0)
    assert [spec.entry(i) for i in range(-4, 5)] == [1, 2, 1, 2, 5, 6, 3, 3, 3]
    assert ItinerarySpec.from_json(spec.to_json()) == spec
    with pytest.raises(PathError):
        ItinerarySpec.from_json({"cor": [1]})
    with pytest.raises(PathError):
        ItinerarySpec(core=(1,)).entry(5)


@given(seeds)
def test_realized_itinerary_matches_word(seed):
    rng = random.Random(seed)
    spec = random_spec(rng)
    path = random_path(rng, (-8, 8), spec)
    assert itinerary_of(path) == [spec.entry(i) for i in range(-7, 8)]


@given(seeds)
def test_itinerary_is_sl2_invariant(seed):
    rng = random.Random(seed)
    path = random_path(rng, (-5, 5))
    g = random_sl2(rng)
    assert itinerary_of(path.transformed(g)) == itinerary_of(path)
    assert path.transformed(g).vertices == [mobius(g, v) for v in path.vertices]


@given(seeds)
def test_path_is_determined_by_itinerary_and_two_vertices(seed):
    rng = random.Random(seed)
    path = random_path(rng, (-6, 6))
    word = itinerary_of(path)
    spec = ItinerarySpec(core=tuple(word), origin=-5)
    again = path_from_itinerary(spec, (-6, 6), seed=(path.vertex(0), path.vertex(1)))
    assert again.vertices == path.vertices


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6), seeds)
def test_period_transform_advances_lifts(word, seed):
    rng = random.Random(seed)
    n = len(word)
    path = random_path(rng, (0, n + 1), ItinerarySpec.periodic(word))
    T = period_transform(word)
    for coord in ("a", "b"):
        x = [getattr(path.lift(i), coord) for i in range(n + 2)]
        assert T.apply(LiftVec(x[0], x[1])) == LiftVec(x[n], x[n + 1])


def test_period_transform_signs():
    assert period_transform([1, 2, 2, 3, 1, 2, 4]).is_pm_identity()
    assert period_transform([1, 2, 2, 3, 1, 2, 4]).p == -1
    assert period_transform(HEXAGON_ITINERARY).p == 1
    assert period_transform([0, 0]).p == -1
    with pytest.raises(DomainError):
        period_transform([])


def test_clockwise_and_simple():
    loop = lift_path(["inf", "2", "1", "0", "-1", "inf"])
    assert is_simple_closed(loop) and is_clockwise_simple_closed(loop)
    backwards = lift_path(["inf", "-1", "0", "1", "2", "inf"])
    assert not is_clockwise_simple_closed(backwards)
    wound = lift_path(HEXAGON_LOOP)
    assert not is_simple_closed(wound)
    assert is_clockwise(lift_path(["2", "1", "1/2", "0"]))
    with pytest.raises(DomainError):
        is_clockwise(lift_path(["0", "inf", "0", "1"]))


# cycle sequences


@pytest.mark.parametrize(
    "word,expected",
    [([1, 2, 2, 3, 1, 2], True), ([1, 1], True), ([0], False), ([2, 2], False), ([1, 2, 1], True), ([1, 3, 1, 3], False)],
)
def test_is_cycle_sequence(word, expected):
    assert is_cycle_sequence(word) is expected


def contains_by_subwords(word):
    return any(is_cycle_sequence(word[s:t]) for s in range(len(word)) for t in range(s + 1, len(word) + 1))


@settings(max_examples=300)
@given(st.lists(st.integers(1, 5), max_size=12))
def test_contains_cycle_sequence_matches_subword_scan(word):
    assert contains_cycle_sequence(word) == contains_by_subwords(word)


# tail limits


def test_golden_zigzag_limits():
    path = golden_zigzag_path(-12, 12)
    for direction in ("forward", "backward"):
        lim = classify_tail_limit(path, [3], direction)
        assert lim.tag == "quadratic_irrational"
        assert str(lim.value) == "(-1 + 1*sqrt(5))/2"


def test_rational_limits():
    path = lift_path([f"{-i}/{abs(i) + 1}" for i in range(-10, 11)], start=-10)
    assert classify_tail_limit(path, [2], "forward").value == ExtRational(-1, 1)
    assert classify_tail_limit(path, [2], "backward").value == ExtRational(1, 1)


def test_tail_limit_checks_the_tail():
    path = lift_path([f"{-i}/{abs(i) + 1}" for i in range(-10, 11)], start=-10)
    with pytest.raises(DomainError, match="not a rotation"):
        classify_tail_limit(path, [3], "forward")
    with pytest.raises(DomainError):
        classify_tail_limit(path, [2], "sideways")


def test_no_limit_for_elliptic_or_identity_periods():
    assert attracting_fixed_point(period_transform([1])).tag == "none"
    assert attracting_fixed_point(period_transform([1, 1, 1])).tag == "none"


def circle_gap(x, y: float) -> float:
    """Chordal distance between a vertex and a real number on the boundary circle."""

    def pt(z):
        if z is None:
            return 0.0, 1.0
        return 2 * z / (z * z + 1), (z * z - 1) / (z * z + 1)

    zx = None if x.is_inf else float(Fraction(x.num, x.den))
    (a, b), (c, d) = pt(zx), pt(y)
    return ((a - c) ** 2 + (b - d) ** 2) ** 0.5


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_hyperbolic_tail_limit_is_fixed_and_approached(seed):
    rng = random.Random(seed)
    spec = random_spec(rng)
    path = random_path(rng, (-70, 70), spec)
    for word, direction, end in ((spec.right_period, "forward", 70), (spec.left_period, "backward", -70)):
        lim = classify_tail_limit(path, word, direction)
        if lim.tag != "quadratic_irrational":
            continue
        x = lim.value
        z = (x.p + x.q * sympy.sqrt(x.d)) / x.r
        # the limit is fixed by the map advancing the tail one period
        k = 60 if direction == "forward" else -60
        u, v = path.lift(k), path.lift(k + len(word))
        w, y = path.lift(k + 1), path.lift(k + len(word) + 1)
        M = sympy.Matrix([[v.a, y.a], [v.b, y.b]]) * sympy.Matrix([[u.a, w.a], [u.b, w.b]]).inv()
        assert sympy.simplify((M[0, 0] * z + M[0, 1]) - z * (M[1, 0] * z + M[1, 1])) == 0
        assert circle_gap(path.vertex(end), float(x)) < 1e-6
