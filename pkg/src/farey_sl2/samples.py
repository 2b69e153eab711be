"""Random inputs shared by the round-trip self-test and the test suite."""

from __future__ import annotations

import random

from .core import IDENTITY, INF, ZERO, J, Mat2Z, mobius
from .paths import FareyPath, ItinerarySpec, path_from_itinerary
from .tilings import PathPair


def random_sl2(rng: random.Random, steps: int = 4) -> Mat2Z:
    g = IDENTITY
    for _ in range(steps):
        k = rng.randint(-3, 3)
        g = g @ Mat2Z(1, k, 0, 1) @ J
    return g


def random_word(rng: random.Random, n: int, lo: int = -4, hi: int = 4) -> tuple[int, ...]:
    return tuple(rng.randint(lo, hi) for _ in range(n))


def random_spec(rng: random.Random, lo: int = -4, hi: int = 4) -> ItinerarySpec:
    """Eventually periodic itinerary: random left period, core and right period."""
    return ItinerarySpec(
        core=random_word(rng, rng.randint(0, 4), lo, hi),
        left_period=random_word(rng, rng.randint(1, 3), lo, hi),
        right_period=random_word(rng, rng.randint(1, 3), lo, hi),
        origin=rng.randint(-2, 2),
    )


def random_path(rng: random.Random, window: tuple[int, int], spec: ItinerarySpec | None = None) -> FareyPath:
    spec = spec or random_spec(rng)
    g = random_sl2(rng)
    return path_from_itinerary(spec, window, seed=(mobius(g, ZERO), mobius(g, INF)))


def random_pair(rng: random.Random, i_range=(-4, 4), j_range=(-4, 4)) -> PathPair:
    return PathPair(random_path(rng, i_range), random_path(rng, j_range))
