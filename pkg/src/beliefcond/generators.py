"""Seeded random belief functions and probability vectors for sweeps."""

from __future__ import annotations

import random
from fractions import Fraction

from .frame import Frame
from .setfunctions import MAX_FRAME_SIZE, BeliefFunction, MassFunction, belief_from_mass


def default_frame(n: int) -> Frame:
    if not 1 <= n <= MAX_FRAME_SIZE:
        raise ValueError(f"frame size must be between 1 and {MAX_FRAME_SIZE}, got {n}")
    return Frame(tuple(f"x{i}" for i in range(n)))


def random_mass(seed, n: int, focal_count: int, max_weight: int = 9) -> MassFunction:
    """Mass spread over ``focal_count`` distinct random nonempty subsets.

    Weights are integers in ``[1, max_weight]`` normalized by their sum, so
    every focal set has strictly positive mass and denominators stay small.
    """
    frame = default_frame(n)
    nonempty = (1 << n) - 1
    if not 1 <= focal_count <= nonempty:
        raise ValueError(f"focal_count must be in [1, {nonempty}] for n={n}, got {focal_count}")
    rng = random.Random(seed)
    focal = rng.sample(range(1, 1 << n), focal_count)
    weights = [rng.randint(1, max_weight) for _ in focal]
    total = sum(weights)
    values = [Fraction(0)] * (1 << n)
    for bits, w in zip(focal, weights):
        values[bits] = Fraction(w, total)
    return MassFunction(frame, values)


def random_belief(seed, n: int, focal_count: int) -> BeliefFunction:
    return belief_from_mass(random_mass(seed, n, focal_count))


def random_probability(seed, n: int, max_weight: int = 9) -> tuple[Fraction, ...]:
    """A rational point of the probability simplex; some coordinates may be 0."""
    if not 1 <= n <= MAX_FRAME_SIZE:
        raise ValueError(f"frame size must be between 1 and {MAX_FRAME_SIZE}, got {n}")
    rng = random.Random(seed)
    while True:
        weights = [rng.randint(0, max_weight) for _ in range(n)]
        total = sum(weights)
        if total:
            return tuple(Fraction(w, total) for w in weights)
