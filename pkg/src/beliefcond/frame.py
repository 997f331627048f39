"""Finite frames and their subsets.

A subset of an ``n``-element frame is an integer bitmask: bit ``i`` is set
exactly when the ``i``-th element of the frame belongs to the subset.  Dense
set functions are indexed by that integer, so ``values[k]`` is the value at
the subset whose mask is ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FrameMismatchError


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def canonical_order(n: int) -> list[int]:
    """All masks of an ``n``-element frame, by cardinality then mask value."""
    return sorted(range(1 << n), key=lambda k: (popcount(k), k))


def submasks(bits: int) -> Iterator[int]:
    """Every submask of ``bits``, including ``bits`` itself and 0."""
    sub = bits
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & bits


@dataclass(frozen=True)
class Frame:
    """An ordered collection of distinct, non-empty element labels."""

    elements: tuple[str, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise ValueError("a frame needs at least one element")
        for label in elements:
            if not isinstance(label, str) or not label:
                raise ValueError(f"element labels must be non-empty strings, got {label!r}")
        if len(set(elements)) != len(elements):
            raise ValueError("element labels must be unique")

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not an element of the frame") from None

    def subset(self, labels: Iterable[str] = ()) -> Subset:
        bits = 0
        for label in labels:
            bits |= 1 << self.index(label)
        return Subset(self, bits)

    def mask(self, bits: int) -> Subset:
        return Subset(self, bits)

    def singleton(self, label: str) -> Subset:
        return Subset(self, 1 << self.index(label))

    @property
    def full(self) -> Subset:
        return Subset(self, self.full_mask)

    @property
    def empty(self) -> Subset:
        return Subset(self, 0)

    def subsets(self) -> Iterator[Subset]:
        """Every subset, in mask (storage) order."""
        for bits in range(1 << self.size):
            yield Subset(self, bits)

    def canonical_subsets(self) -> Iterator[Subset]:
        """Every subset, by cardinality then mask value (display order)."""
        for bits in canonical_order(self.size):
            yield Subset(self, bits)

    def restrict(self, subset: Subset) -> Frame:
        """The frame made of the elements of ``subset``, in frame order."""
        self._check(subset)
        if subset.bits == 0:
            raise ValueError("cannot restrict a frame to the empty set")
        return Frame(tuple(subset.labels))

    def _check(self, subset: Subset):
        if subset.frame != self:
            raise FrameMismatchError("subset belongs to a different frame")


@dataclass(frozen=True)
class Subset:
    """A subset of a specific frame."""

    frame: Frame
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits <= self.frame.full_mask:
            raise ValueError(f"mask {self.bits} out of range for a {self.frame.size}-element frame")

    def _other(self, other: Subset) -> int:
        if not isinstance(other, Subset):
            return NotImplemented
        if other.frame != self.frame:
            raise FrameMismatchError("subsets of different frames cannot be combined")
        return other.bits

    def __and__(self, other):
        return Subset(self.frame, self.bits & self._other(other))

    def __or__(self, other):
        return Subset(self.frame, self.bits | self._other(other))

    def __sub__(self, other):
        return Subset(self.frame, self.bits & ~self._other(other))

    def __invert__(self):
        return Subset(self.frame, self.frame.full_mask & ~self.bits)

    @property
    def complement(self) -> Subset:
        return ~self

    def issubset(self, other: Subset) -> bool:
        return self.bits & ~self._other(other) == 0

    def issuperset(self, other: Subset) -> bool:
        return self._other(other) & ~self.bits == 0

    def isdisjoint(self, other: Subset) -> bool:
        return self.bits & self._other(other) == 0

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e for i, e in enumerate(self.frame.elements) if self.bits >> i & 1)

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return popcount(self.bits)

    def __contains__(self, label):
        return label in self.labels

    def __str__(self):
        return "{" + ",".join(self.labels) + "}"

    def __repr__(self):
        return f"Subset({self})"


def pack_bits(bits: int, within: int) -> int:
    """Re-index ``bits`` (a submask of ``within``) onto the elements of ``within``.

    The ``j``-th set bit of ``within`` becomes bit ``j`` of the result; this
    maps subsets of a frame onto subsets of its restriction.
    """
    out = 0
    j = 0
    i = 0
    while within >> i:
        if within >> i & 1:
            if bits >> i & 1:
                out |= 1 << j
            j += 1
        i += 1
    return out


def unpack_bits(bits: int, within: int) -> int:
    """Inverse of :func:`pack_bits`."""
    out = 0
    j = 0
    i = 0
    while within >> i:
        if within >> i & 1:
            if bits >> j & 1:
                out |= 1 << i
            j += 1
        i += 1
    return out
