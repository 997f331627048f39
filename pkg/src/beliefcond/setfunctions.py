"""Dense set functions, mass functions and belief functions.

All values are :class:`fractions.Fraction`.  Floats are rejected on input so
that no rounding can leak into an identity that is supposed to hold exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    FrameMismatchError,
    FrameTooLargeError,
    InvalidMassError,
    NotABeliefFunctionError,
)
from .frame import Frame, Subset, canonical_order

MAX_FRAME_SIZE = 12
MAX_DIRECT_CHECK_SIZE = 3

RationalLike = Union[int, Fraction, str]


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction, refusing floats and booleans."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rationals required, got {type(value).__name__} {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def zeta_transform(values: Sequence) -> list:
    """Subset sums: ``out[A] = sum(values[B] for B subset of A)``, O(n 2^n)."""
    out = list(values)
    size = len(out)
    bit = 1
    while bit < size:
        for k in range(size):
            if k & bit:
                out[k] += out[k ^ bit]
        bit <<= 1
    return out


def mobius_transform(values: Sequence) -> list:
    """Inverse of :func:`zeta_transform`."""
    out = list(values)
    size = len(out)
    bit = 1
    while bit < size:
        for k in range(size):
            if k & bit:
                out[k] -= out[k ^ bit]
        bit <<= 1
    return out


class SetFunction:
    """A total function from the subsets of a frame to the rationals."""

    __slots__ = ("frame", "values")

    def __init__(self, frame: Frame, values: Iterable[RationalLike]):
        if frame.size > MAX_FRAME_SIZE:
            raise FrameTooLargeError(frame.size, MAX_FRAME_SIZE, "dense set functions")
        values = tuple(as_rational(v) for v in values)
        if len(values) != 1 << frame.size:
            raise ValueError(
                f"a set function on {frame.size} elements needs {1 << frame.size} values, "
                f"got {len(values)}"
            )
        self.frame = frame
        self.values = values

    @classmethod
    def from_mapping(cls, frame: Frame, mapping: Mapping, default=0):
        """Build from ``{subset: value}``; keys may be Subsets or label iterables."""
        values = [as_rational(default)] * (1 << frame.size)
        for key, value in mapping.items():
            if isinstance(key, Subset):
                if key.frame != frame:
                    raise FrameMismatchError("subset belongs to a different frame")
                bits = key.bits
            else:
                bits = frame.subset(key).bits
            values[bits] = as_rational(value)
        return cls(frame, values)

    def __getitem__(self, subset: Union[Subset, int]) -> Fraction:
        if isinstance(subset, Subset):
            if subset.frame != self.frame:
                raise FrameMismatchError("subset belongs to a different frame")
            return self.values[subset.bits]
        return self.values[subset]

    def items(self):
        """(subset, value) pairs in canonical display order."""
        for bits in canonical_order(self.frame.size):
            yield Subset(self.frame, bits), self.values[bits]

    def __eq__(self, other):
        if not isinstance(other, SetFunction):
            return NotImplemented
        return self.frame == other.frame and self.values == other.values

    def __hash__(self):
        return hash((self.frame, self.values))

    def __repr__(self):
        body = ", ".join(f"{s}: {v}" for s, v in self.items() if v)
        return f"{type(self).__name__}({body})"


class MassFunction(SetFunction):
    """A nonnegative set function vanishing on the empty set and summing to 1."""

    __slots__ = ()

    def __init__(self, frame: Frame, values: Iterable[RationalLike]):
        super().__init__(frame, values)
        if self.values[0] != 0:
            raise InvalidMassError("M1", frame.empty, f"mass of the empty set is {self.values[0]}, not 0")
        for bits in canonical_order(frame.size):
            if self.values[bits] < 0:
                witness = Subset(frame, bits)
                raise InvalidMassError(
                    "nonnegativity", witness, f"mass of {witness} is negative ({self.values[bits]})"
                )
        total = sum(self.values)
        if total != 1:
            raise InvalidMassError("M2", frame.full, f"masses sum to {total}, not 1")

    def focal_sets(self) -> list[Subset]:
        """Subsets with strictly positive mass, in canonical order."""
        return [s for s, v in self.items() if v > 0]


class BeliefFunction(SetFunction):
    """A set function satisfying B0-B3, checked through its Moebius inverse.

    The mass function is computed once at construction and kept.
    """

    __slots__ = ("_mass",)

    def __init__(self, frame: Frame, values: Iterable[RationalLike]):
        super().__init__(frame, values)
        self._mass = _mass_or_raise(self)

    @classmethod
    def from_mass(cls, mass: MassFunction) -> BeliefFunction:
        return belief_from_mass(mass)

    @property
    def mass(self) -> MassFunction:
        return self._mass

    def belief(self, subset: Subset) -> Fraction:
        return self[subset]

    def plausibility(self, subset: Subset) -> Fraction:
        return plausibility(self, subset)

    def plausibilities(self) -> tuple[Fraction, ...]:
        full = self.frame.full_mask
        return tuple(1 - self.values[full ^ k] for k in range(len(self.values)))

    def is_probability(self) -> bool:
        """True when every focal set is a singleton."""
        return all(len(s) == 1 for s in self._mass.focal_sets())


def belief_from_mass(mass: MassFunction) -> BeliefFunction:
    """Belief function whose value at A is the total mass of subsets of A."""
    if not isinstance(mass, MassFunction):
        mass = MassFunction(mass.frame, mass.values)
    bel = object.__new__(BeliefFunction)
    bel.frame = mass.frame
    bel.values = tuple(zeta_transform(mass.values))
    bel._mass = mass
    return bel


def _mass_or_raise(f: SetFunction) -> MassFunction:
    n = f.frame.size
    if f.values[0] != 0:
        raise NotABeliefFunctionError("B0", f.frame.empty, f"value at the empty set is {f.values[0]}, not 0")
    m = mobius_transform(f.values)
    for bits in canonical_order(n):
        if m[bits] < 0:
            witness = Subset(f.frame, bits)
            raise NotABeliefFunctionError(
                "B3", witness, f"not a belief function: Moebius inverse at {witness} is {m[bits]}"
            )
    if f.values[-1] != 1:
        raise NotABeliefFunctionError("B2", f.frame.full, f"value at the full frame is {f.values[-1]}, not 1")
    mass = object.__new__(MassFunction)
    mass.frame = f.frame
    mass.values = tuple(m)
    return mass


def mass_from_belief(bel: SetFunction) -> MassFunction:
    """The unique mass function whose subset sums reproduce ``bel``.

    Raises :class:`NotABeliefFunctionError` with a witness subset when the
    Moebius inverse is negative somewhere or fails normalization.
    """
    if isinstance(bel, BeliefFunction):
        return bel.mass
    return _mass_or_raise(bel)


def plausibility(bel: SetFunction, subset: Subset) -> Fraction:
    return 1 - bel[~subset]


def probability_belief(frame: Frame, probabilities: Sequence[RationalLike]) -> BeliefFunction:
    """The additive belief function of a probability vector over the elements."""
    probs = [as_rational(p) for p in probabilities]
    if len(probs) != frame.size:
        raise ValueError(f"expected {frame.size} probabilities, got {len(probs)}")
    values = [Fraction(0)] * (1 << frame.size)
    for i, p in enumerate(probs):
        values[1 << i] = p
    return belief_from_mass(MassFunction(frame, values))


def vacuous_belief(frame: Frame) -> BeliefFunction:
    values = [Fraction(0)] * (1 << frame.size)
    values[-1] = Fraction(1)
    return belief_from_mass(MassFunction(frame, values))


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of :func:`check_belief_axioms`.

    ``violated`` names the first failing axiom (``"B0"`` .. ``"B3"``) or is
    None.  ``witness`` is a single subset in mobius mode and the offending
    collection of subsets in direct mode.
    """

    mode: str
    violated: str | None
    witness: tuple[Subset, ...] = ()
    mobius: tuple[Fraction, ...] | None = field(default=None, compare=False)
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.violated is None

    def __bool__(self):
        return self.ok


def check_belief_axioms(f: SetFunction, mode: str = "mobius") -> AxiomReport:
    """Check B0-B3 for ``f``.

    ``mobius`` decides B3 by nonnegativity of the Moebius inverse and works
    on any frame.  ``direct`` evaluates the B3 inequality for every
    collection of at least two distinct nonempty subsets, so it is limited
    to frames of at most three elements.
    """
    if mode not in ("mobius", "direct"):
        raise ValueError(f"unknown mode {mode!r}")
    frame = f.frame
    n = frame.size
    if mode == "direct" and n > MAX_DIRECT_CHECK_SIZE:
        raise FrameTooLargeError(n, MAX_DIRECT_CHECK_SIZE, "direct axiom check")

    if f.values[0] != 0:
        return AxiomReport(mode, "B0", (frame.empty,), message=f"f(empty) = {f.values[0]}")
    for bits in canonical_order(n):
        if f.values[bits] < 0:
            s = Subset(frame, bits)
            return AxiomReport(mode, "B1", (s,), message=f"f({s}) = {f.values[bits]} < 0")
    if f.values[-1] != 1:
        return AxiomReport(mode, "B2", (frame.full,), message=f"f(S) = {f.values[-1]}")

    if mode == "mobius":
        m = tuple(mobius_transform(f.values))
        for bits in canonical_order(n):
            if m[bits] < 0:
                s = Subset(frame, bits)
                return AxiomReport(
                    mode, "B3", (s,), m, f"Moebius inverse at {s} is {m[bits]} < 0"
                )
        return AxiomReport(mode, None, (), m)

    nonempty = canonical_order(n)[1:]
    for k in range(2, len(nonempty) + 1):
        for collection in combinations(nonempty, k):
            union = 0
            for bits in collection:
                union |= bits
            rhs = Fraction(0)
            for sel in range(1, 1 << k):
                inter = frame.full_mask
                count = 0
                for j in range(k):
                    if sel >> j & 1:
                        inter &= collection[j]
                        count += 1
                rhs += f.values[inter] if count % 2 else -f.values[inter]
            if f.values[union] < rhs:
                witness = tuple(Subset(frame, b) for b in collection)
                names = ", ".join(str(s) for s in witness)
                return AxiomReport(
                    mode, "B3", witness,
                    message=f"f(union of {names}) = {f.values[union]} < {rhs}",
                )
    return AxiomReport(mode, None)
