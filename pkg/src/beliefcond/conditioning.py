"""Closed-form conditioning of belief functions.

Two rules are provided:

``FH``
    lower-envelope conditioning.  ``Bel(A|B)`` is the infimum of ``Pr(A|B)``
    over every probability consistent with ``Bel``; the closed form is
    ``Bel(A&B) / (Bel(A&B) + Pl(~A&B))``.  Defined when ``Bel(B) > 0``.

``DS``
    Dempster's rule, ``(Bel(A union ~B) - Bel(~B)) / (1 - Bel(~B))``.  Defined when
    ``Pl(B) > 0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConditioningUndefined, FrameMismatchError
from .frame import Subset
from .setfunctions import BeliefFunction


class ConditioningRule(str, enum.Enum):
    FH = "fh"
    DS = "ds"

    @classmethod
    def parse(cls, value) -> ConditioningRule:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown conditioning rule {value!r}; expected 'fh' or 'ds'") from None


@dataclass(frozen=True)
class ConditionalReport:
    """A materialized conditional belief function.

    ``history`` lists every event conditioned on, in order; ``event`` is
    the last one (the full frame when nothing was conditioned on).
    """

    rule: ConditioningRule
    event: Subset
    belief: BeliefFunction
    history: tuple[Subset, ...] = ()

    def __post_init__(self):
        if not self.history:
            object.__setattr__(self, "history", (self.event,))

    @property
    def frame(self):
        return self.belief.frame

    def plausibility(self, subset: Subset) -> Fraction:
        return self.belief.plausibility(subset)

    def __getitem__(self, subset: Subset) -> Fraction:
        return self.belief[subset]


def _check(bel: BeliefFunction, *subsets: Subset):
    for s in subsets:
        if s.frame != bel.frame:
            raise FrameMismatchError("event belongs to a different frame than the belief function")


def fh_bounds(bel: BeliefFunction, a: Subset, b: Subset) -> tuple[Fraction, Fraction]:
    """``(Bel(A|B), Pl(A|B))`` from the two closed-form expressions."""
    _check(bel, a, b)
    if bel[b] <= 0:
        raise ConditioningUndefined(f"Bel({b}) = 0; lower-envelope conditioning needs Bel(B) > 0")
    inside, outside = a & b, ~a & b
    lower = bel[inside] / (bel[inside] + bel.plausibility(outside))
    upper = bel.plausibility(inside) / (bel.plausibility(inside) + bel[outside])
    return lower, upper


def ds_bounds(bel: BeliefFunction, a: Subset, b: Subset) -> tuple[Fraction, Fraction]:
    """``(Bel(A||B), Pl(A||B))`` under Dempster's rule."""
    _check(bel, a, b)
    pl_b = bel.plausibility(b)
    if pl_b <= 0:
        raise ConditioningUndefined(f"Pl({b}) = 0; Dempster conditioning needs Pl(B) > 0")
    rest = bel[~b]
    lower = (bel[a | ~b] - rest) / (1 - rest)
    upper = bel.plausibility(a & b) / pl_b
    return lower, upper


def fh_condition(bel: BeliefFunction, b: Subset) -> ConditionalReport:
    _check(bel, b)
    if bel[b] <= 0:
        raise ConditioningUndefined(f"Bel({b}) = 0; lower-envelope conditioning needs Bel(B) > 0")
    values = bel.values
    full = bel.frame.full_mask
    bb = b.bits
    out = []
    for k in range(len(values)):
        inside = k & bb
        outside = ~k & bb
        lower = values[inside]
        out.append(lower / (lower + 1 - values[full ^ outside]))
    return ConditionalReport(ConditioningRule.FH, b, BeliefFunction(bel.frame, out))


def ds_condition(bel: BeliefFunction, b: Subset) -> ConditionalReport:
    _check(bel, b)
    values = bel.values
    full = bel.frame.full_mask
    rest_bits = full ^ b.bits
    rest = values[rest_bits]
    if rest >= 1:
        raise ConditioningUndefined(f"Pl({b}) = 0; Dempster conditioning needs Pl(B) > 0")
    scale = 1 - rest
    out = [(values[k | rest_bits] - rest) / scale for k in range(len(values))]
    return ConditionalReport(ConditioningRule.DS, b, BeliefFunction(bel.frame, out))


def condition(bel: BeliefFunction, b: Subset, rule=ConditioningRule.FH) -> ConditionalReport:
    rule = ConditioningRule.parse(rule)
    if rule is ConditioningRule.FH:
        return fh_condition(bel, b)
    return ds_condition(bel, b)


def iterate(bel: BeliefFunction, events: Sequence[Subset], rule=ConditioningRule.FH) -> ConditionalReport:
    """Condition on each event in turn, left to right.

    A failing step raises :class:`ConditioningUndefined` whose ``step`` is
    the 0-based position of the offending event.
    """
    rule = ConditioningRule.parse(rule)
    current = bel
    history = []
    for step, event in enumerate(events):
        try:
            current = condition(current, event, rule).belief
        except ConditioningUndefined as exc:
            raise ConditioningUndefined(str(exc), step=step) from None
        history.append(event)
    last = history[-1] if history else bel.frame.full
    return ConditionalReport(rule, last, current, tuple(history) or (last,))


@dataclass(frozen=True)
class ContainmentResult:
    """``(Bel(A|B), Bel(A||B), Pl(A||B), Pl(A|B))`` and whether it is ordered."""

    values: tuple[Fraction, Fraction, Fraction, Fraction]

    @property
    def holds(self) -> bool:
        v = self.values
        return v[0] <= v[1] <= v[2] <= v[3]

    def __bool__(self):
        return self.holds


def containment_check(bel: BeliefFunction, a: Subset, b: Subset) -> ContainmentResult:
    fh_lo, fh_hi = fh_bounds(bel, a, b)
    ds_lo, ds_hi = ds_bounds(bel, a, b)
    return ContainmentResult((fh_lo, ds_lo, ds_hi, fh_hi))


@dataclass(frozen=True)
class SureThingResult:
    rule: ConditioningRule
    belief: Fraction
    given: Fraction
    given_not: Fraction

    @property
    def holds(self) -> bool:
        return self.belief >= min(self.given, self.given_not)

    def __bool__(self):
        return self.holds


def sure_thing_check(bel: BeliefFunction, p: Subset, q: Subset, rule=ConditioningRule.FH) -> SureThingResult:
    """Compare ``Bel(p)`` with the smaller of its two conditionals on ``q`` and ``~q``."""
    rule = ConditioningRule.parse(rule)
    bounds = fh_bounds if rule is ConditioningRule.FH else ds_bounds
    given = bounds(bel, p, q)[0]
    given_not = bounds(bel, p, ~q)[0]
    return SureThingResult(rule, bel[p], given, given_not)
