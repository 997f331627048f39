"""Named constructions with their known exact values.

Three prisoners
    Outcome ``"xy"`` means prisoner ``x`` is pardoned and the jailer names
    ``y`` as one of the two to be executed.  Each prisoner is pardoned with
    probability 1/3; when ``a`` is pardoned the jailer's choice between
    ``b`` and ``c`` is unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .credal import ConstraintSystem, CredalSet, LinearConstraint, PartitionScenario, partition_belief
from .frame import Frame, Subset
from .setfunctions import BeliefFunction

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class Scenario:
    name: str
    frame: Frame
    events: Mapping[str, Subset]
    belief: BeliefFunction | None = None
    credal: CredalSet | None = None
    partition: PartitionScenario | None = None
    constraints: ConstraintSystem | None = None
    expected: Mapping[str, Fraction] = field(default_factory=dict)


PRISONERS_FRAME = Frame(("ab", "ac", "bc", "cb"))


def prisoner_events() -> dict[str, Subset]:
    f = PRISONERS_FRAME
    return {
        "lives-a": f.subset(["ab", "ac"]),
        "lives-b": f.subset(["bc"]),
        "lives-c": f.subset(["cb"]),
        "says-b": f.subset(["ab", "cb"]),
        "says-c": f.subset(["ac", "bc"]),
    }


def three_prisoners_partition() -> PartitionScenario:
    ev = prisoner_events()
    return PartitionScenario(PRISONERS_FRAME, (ev["lives-b"], ev["lives-c"], ev["lives-a"]), (THIRD,) * 3)


def three_prisoners() -> Scenario:
    ps = three_prisoners_partition()
    return Scenario(
        "three-prisoners",
        PRISONERS_FRAME,
        prisoner_events(),
        belief=partition_belief(ps),
        partition=ps,
        expected={
            "Bel(says-b)": THIRD,
            "Pl(says-b)": 2 * THIRD,
            "Bel(lives-a & says-b)": Fraction(0),
            "Pl(lives-a & says-b)": THIRD,
            "Bel(lives-a | says-b)": Fraction(0),
            "Pl(lives-a | says-b)": HALF,
            "Bel(lives-a || says-b)": HALF,
            "Pl(lives-a || says-b)": HALF,
        },
    )


LOST_INFO_FRAME = Frame(("a", "b", "c"))


def lost_information() -> Scenario:
    """Probabilities with ``Pr(a) = Pr(b)``, each between 1/4 and 1/2."""
    f = LOST_INFO_FRAME
    system = ConstraintSystem(f, (
        LinearConstraint.on(f, {"a": 1}, ">=", QUARTER),
        LinearConstraint.on(f, {"a": 1}, "<=", HALF),
        LinearConstraint.on(f, {"b": 1}, ">=", QUARTER),
        LinearConstraint.on(f, {"b": 1}, "<=", HALF),
        LinearConstraint.on(f, {"a": 1, "b": -1}, "=", 0),
    ))
    return Scenario(
        "lost-info",
        f,
        {name: f.singleton(name) for name in f.elements},
        credal=system.vertices(),
        constraints=system,
        expected={"Bel({a})": QUARTER, "Bel({b})": QUARTER, "Pl({a})": HALF, "Pl({b})": HALF},
    )


def non_belief_envelope() -> CredalSet:
    """Three distributions whose lower envelope is not a belief function."""
    return CredalSet(LOST_INFO_FRAME, (
        (HALF, HALF, Fraction(0)),
        (Fraction(0), HALF, HALF),
        (HALF, Fraction(0), HALF),
    ))
