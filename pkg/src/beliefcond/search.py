"""Seeded searches for the counterexamples stored in :mod:`beliefcond.fixtures`.

The searches are deterministic for a given seed.  They are slow enough
that the test suite uses the frozen fixtures and only re-runs a search in
one dedicated test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .conditioning import ConditioningRule, iterate, sure_thing_check
from .errors import ConditioningUndefined
from .frame import Subset
from .generators import random_belief
from .setfunctions import BeliefFunction


@dataclass(frozen=True)
class NonCommuting:
    belief: BeliefFunction
    target: Subset
    first: Subset
    second: Subset


@dataclass(frozen=True)
class SureThingViolation:
    belief: BeliefFunction
    p: Subset
    q: Subset


def _random_instance(rng: random.Random, sizes):
    n = rng.choice(sizes)
    focal = rng.randint(1, min(6, (1 << n) - 1))
    return random_belief(rng.randrange(1 << 30), n, focal)


def find_noncommuting(seed=0, sizes=(3, 4), attempts=20000, rule=ConditioningRule.FH, distinct=True):
    """First instance where B-then-C, C-then-B and B&C disagree at some event.

    With ``distinct`` all three values must differ pairwise; otherwise it
    suffices that B-then-C differs from conditioning on B&C.
    """
    rng = random.Random(seed)
    for _ in range(attempts):
        bel = _random_instance(rng, sizes)
        subsets = list(bel.frame.subsets())
        b = rng.choice(subsets)
        c = rng.choice(subsets)
        try:
            bc = iterate(bel, [b, c], rule).belief
            cb = iterate(bel, [c, b], rule).belief
            both = iterate(bel, [b & c], rule).belief
        except ConditioningUndefined:
            continue
        for a in subsets:
            x, y, z = bc[a], cb[a], both[a]
            if (distinct and len({x, y, z}) == 3) or (not distinct and x != z):
                return NonCommuting(bel, a, b, c)
    return None


def find_sure_thing_violation(seed=0, sizes=(2, 3, 4), attempts=20000, rule=ConditioningRule.DS):
    rng = random.Random(seed)
    for _ in range(attempts):
        bel = _random_instance(rng, sizes)
        subsets = list(bel.frame.subsets())
        p = rng.choice(subsets)
        q = rng.choice(subsets)
        try:
            result = sure_thing_check(bel, p, q, rule)
        except ConditioningUndefined:
            continue
        if not result.holds:
            return SureThingViolation(bel, p, q)
    return None
