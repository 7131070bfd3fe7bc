"""Shared strategies and deterministic character generators."""

from __future__ import annotations

import random
from fractions import Fraction

import hypothesis.strategies as st

from amplecheck import ChernCharacter, Surface, classify_global_generation
from amplecheck.rationals import ceil_frac

ALL_SURFACES = (
    Surface.projective_plane(),
    Surface.hirzebruch(0),
    Surface.hirzebruch(1),
    Surface.hirzebruch(2),
    Surface.hirzebruch(3),
)


def surfaces_strategy():
    return st.sampled_from(ALL_SURFACES)


@st.composite
def integral_divisors(draw, surface: Surface | None = None, low: int = -8, high: int = 8):
    s = surface if surface is not None else draw(surfaces_strategy())
    coords = [draw(st.integers(low, high)) for _ in s.basis]
    return s.divisor(*coords)


@st.composite
def characters(draw, surface: Surface | None = None, min_rank: int = 1, max_rank: int = 5):
    """Arbitrary valid characters: c2 is drawn as an integer, so integrality holds."""
    s = surface if surface is not None else draw(surfaces_strategy())
    rank = draw(st.integers(min_rank, max_rank))
    coords = [draw(st.integers(-8, 8)) for _ in s.basis]
    c1 = s.divisor(*coords)
    c2 = draw(st.integers(-15, 15))
    return ChernCharacter(rank, c1, c1.self_intersection / 2 - c2)


def random_divisor(rng: random.Random, surface: Surface, low: int = -8, high: int = 8):
    return surface.divisor(*[rng.randint(low, high) for _ in surface.basis])


def random_valid_character(rng: random.Random, surface: Surface, max_rank: int = 5) -> ChernCharacter:
    rank = rng.randint(1, max_rank)
    c1 = random_divisor(rng, surface)
    c2 = rng.randint(-15, 15)
    return ChernCharacter(rank, c1, c1.self_intersection / 2 - c2)


def random_slope_character(
    rng: random.Random,
    surface: Surface,
    *,
    max_extra: int = 8,
    delta_slack: int = 10,
) -> ChernCharacter:
    """A valid character with delta >= 0 satisfying the sharp slope hypotheses.

    The slopes are pushed strictly past every threshold (nu.H >= 1 + 2/rank
    on the plane), so the result qualifies for both the fixed-rank and the
    asymptotic hypotheses.
    """
    rank = rng.randint(2, 5)
    if surface.is_plane:
        c1 = surface.divisor(rank + rng.randint(2, 2 + max_extra))
    else:
        e = surface.e
        p = rank + rng.randint(1, max_extra)
        if e == 0:
            q = rank + rng.randint(1, max_extra)
        else:
            q = e * p + rank + rng.randint(0, max_extra)
        c1 = surface.divisor(p, q)
    c2_min = ceil_frac(Fraction(int(c1.self_intersection) * (rank - 1), 2 * rank))
    c2 = c2_min + rng.randint(0, delta_slack)
    return ChernCharacter(rank, c1, c1.self_intersection / 2 - c2)


def random_gg_slope_character(rng: random.Random, surface: Surface) -> ChernCharacter:
    """A character satisfying slopes *and* the global-generation classification."""
    while True:
        v = random_slope_character(rng, surface, delta_slack=4)
        if classify_global_generation(v).globally_generated:
            return v
