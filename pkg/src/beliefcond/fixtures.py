"""Counterexamples found once by :mod:`beliefcond.search` and frozen here.

``NONCOMMUTING`` came from ``find_noncommuting(seed=0)`` and
``DS_SURE_THING`` from ``find_sure_thing_violation(seed=0)``; neither search
finds an instance on three-element frames.
"""

from __future__ import annotations

from fractions import Fraction

from .frame import Frame
from .search import NonCommuting, SureThingViolation
from .setfunctions import MassFunction, belief_from_mass

FRAME = Frame(("x0", "x1", "x2", "x3"))


def _belief(masses):
    return belief_from_mass(MassFunction.from_mapping(FRAME, {k: Fraction(v) for k, v in masses.items()}))


def noncommuting() -> NonCommuting:
    """Lower-envelope updates on B then C, C then B, and B&C all differ at the target."""
    bel = _belief({
        ("x1",): "7/33",
        ("x3",): "1/11",
        ("x1", "x2"): "3/11",
        ("x0", "x3"): "3/11",
        ("x0", "x1", "x2", "x3"): "5/33",
    })
    return NonCommuting(
        bel,
        target=FRAME.subset(["x3"]),
        first=FRAME.subset(["x0", "x1", "x3"]),
        second=FRAME.subset(["x0", "x2", "x3"]),
    )


# values at the target: B then C, C then B, B&C
NONCOMMUTING_FH = (Fraction(12, 89), Fraction(51, 415), Fraction(3, 17))
NONCOMMUTING_DS = Fraction(3, 17)


def ds_sure_thing() -> SureThingViolation:
    """Dempster conditioning raises belief in p on both q and ~q above Bel(p)."""
    bel = _belief({
        ("x1",): "2/11",
        ("x1", "x2"): "2/11",
        ("x0", "x3"): "1/11",
        ("x1", "x3"): "7/33",
        ("x2", "x3"): "5/33",
        ("x0", "x1", "x3"): "2/11",
    })
    return SureThingViolation(bel, p=FRAME.subset(["x0", "x3"]), q=FRAME.subset(["x2", "x3"]))


# Bel(p), Bel(p||q), Bel(p||~q)
DS_SURE_THING_VALUES = (Fraction(1, 11), Fraction(16, 27), Fraction(3, 28))
