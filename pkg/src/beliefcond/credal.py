"""Credal sets given by explicit vertex lists, and the envelopes they induce.

This module is the brute-force side of every cross-check: nothing here uses
the closed-form conditioning formulas.  Extrema of ``Pr(A)`` and of
``Pr(A & B) / Pr(B)`` over a polytope are attained at vertices (the first is
linear, the second linear-fractional with a positive denominator, hence
quasi-linear), so scanning the vertex list is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Iterable, Mapping, Sequence

from .errors import (
    ConditioningUndefined,
    FrameMismatchError,
    FrameTooLargeError,
    InfeasibleConstraintsError,
    InvalidScenarioError,
)
from .frame import Frame, Subset, pack_bits
from .setfunctions import (
    AxiomReport,
    BeliefFunction,
    MassFunction,
    SetFunction,
    as_rational,
    belief_from_mass,
    check_belief_axioms,
    zeta_transform,
)

MAX_PERMUTATION_SIZE = 7
MAX_POLYTOPE_SIZE = 5


@dataclass(frozen=True)
class CredalSet:
    """The convex hull of finitely many probability vectors.

    Vertices are deduplicated and stored in sorted order so that equal
    credal sets compare equal and serialize identically.
    """

    frame: Frame
    vertices: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        clean = set()
        for v in self.vertices:
            v = tuple(as_rational(x) for x in v)
            if len(v) != self.frame.size:
                raise ValueError(f"vertex {v} has {len(v)} coordinates, frame has {self.frame.size}")
            if any(x < 0 for x in v) or sum(v) != 1:
                raise ValueError(f"vertex {v} is not a probability distribution")
            clean.add(v)
        if not clean:
            raise ValueError("a credal set needs at least one vertex")
        object.__setattr__(self, "vertices", tuple(sorted(clean)))

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def _scaled(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        # common denominator so the sweeps can compare integers
        denom = 1
        for v in self.vertices:
            for x in v:
                denom = denom * x.denominator // math.gcd(denom, x.denominator)
        return denom, tuple(tuple(int(x * denom) for x in v) for v in self.vertices)

    def probability(self, vertex: Sequence[Fraction], subset: Subset) -> Fraction:
        if subset.frame != self.frame:
            raise FrameMismatchError("subset belongs to a different frame")
        return sum((vertex[i] for i in range(self.frame.size) if subset.bits >> i & 1), Fraction(0))


def extreme_points(bel: BeliefFunction) -> CredalSet:
    """Vertices of the set of probabilities consistent with ``bel``.

    Each ordering of the frame yields one vertex by handing every focal
    set's mass to its earliest member under that ordering.
    """
    n = bel.frame.size
    if n > MAX_PERMUTATION_SIZE:
        raise FrameTooLargeError(n, MAX_PERMUTATION_SIZE, "extreme-point enumeration")
    focal = [(s.bits, bel.mass[s]) for s in bel.mass.focal_sets()]
    found = set()
    for order in permutations(range(n)):
        vertex = [Fraction(0)] * n
        for bits, weight in focal:
            for i in order:
                if bits >> i & 1:
                    vertex[i] += weight
                    break
        found.add(tuple(vertex))
    return CredalSet(bel.frame, tuple(found))


def envelope(cs: CredalSet, a: Subset) -> tuple[Fraction, Fraction]:
    """``(min, max)`` of ``Pr(a)`` over the credal set."""
    probs = [cs.probability(v, a) for v in cs.vertices]
    return min(probs), max(probs)


def conditional_envelope(cs: CredalSet, a: Subset, b: Subset) -> tuple[Fraction, Fraction]:
    """``(min, max)`` of ``Pr(a & b) / Pr(b)`` over the credal set."""
    ratios = []
    for v in cs.vertices:
        pb = cs.probability(v, b)
        if pb == 0:
            raise ConditioningUndefined(f"a vertex of the credal set gives Pr({b}) = 0")
        ratios.append(cs.probability(v, a & b) / pb)
    return min(ratios), max(ratios)


def _subset_sums(vec: Sequence[int]) -> list[int]:
    values = [0] * (1 << len(vec))
    for i, x in enumerate(vec):
        values[1 << i] = x
    return zeta_transform(values)


def envelopes(cs: CredalSet) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Lower and upper envelope at every subset, in mask order."""
    denom, scaled = cs._scaled
    lo = hi = None
    for v in scaled:
        sums = _subset_sums(v)
        if lo is None:
            lo, hi = list(sums), list(sums)
        else:
            lo = [min(x, y) for x, y in zip(lo, sums)]
            hi = [max(x, y) for x, y in zip(hi, sums)]
    return tuple(Fraction(x, denom) for x in lo), tuple(Fraction(x, denom) for x in hi)


def conditional_envelopes(cs: CredalSet, b: Subset) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """``conditional_envelope(cs, A, b)`` for every subset ``A`` at once.

    Only the restriction of each vertex to ``b`` matters, so vertices are
    projected, rescaled to lowest integer terms and deduplicated first.
    """
    if b.frame != cs.frame:
        raise FrameMismatchError("event belongs to a different frame")
    if b.bits == 0:
        raise ConditioningUndefined("cannot condition on the empty set")
    _, scaled = cs._scaled
    idx = [i for i in range(cs.frame.size) if b.bits >> i & 1]
    restricted = set()
    for v in scaled:
        sub = [v[i] for i in idx]
        g = 0
        for x in sub:
            g = math.gcd(g, x)
        if g == 0:
            raise ConditioningUndefined(f"a vertex of the credal set gives Pr({b}) = 0")
        restricted.add(tuple(x // g for x in sub))

    size = 1 << len(idx)
    lo_num = hi_num = None
    lo_den = hi_den = None
    for w in restricted:
        sums = _subset_sums(w)
        total = sums[-1]
        if lo_num is None:
            lo_num, hi_num = list(sums), list(sums)
            lo_den, hi_den = [total] * size, [total] * size
            continue
        for k in range(size):
            x = sums[k]
            if x * lo_den[k] < lo_num[k] * total:
                lo_num[k], lo_den[k] = x, total
            if x * hi_den[k] > hi_num[k] * total:
                hi_num[k], hi_den[k] = x, total

    lower, upper = [], []
    for k in range(1 << cs.frame.size):
        j = pack_bits(k & b.bits, b.bits)
        lower.append(Fraction(lo_num[j], lo_den[j]))
        upper.append(Fraction(hi_num[j], hi_den[j]))
    return tuple(lower), tuple(upper)


@dataclass(frozen=True)
class EnvelopeVerdict:
    """Lower envelope of a credal set and whether it is a belief function."""

    lower: SetFunction
    report: AxiomReport

    @property
    def is_belief(self) -> bool:
        return self.report.ok

    @property
    def witness(self):
        return self.report.witness


def envelope_setfunction(cs: CredalSet) -> EnvelopeVerdict:
    lower, _ = envelopes(cs)
    f = SetFunction(cs.frame, lower)
    return EnvelopeVerdict(f, check_belief_axioms(f, "mobius"))


# linear constraint polytopes


RELATIONS = ("<=", "=", ">=")


@dataclass(frozen=True)
class LinearConstraint:
    """``coefficients . Pr  relation  bound`` over the frame's elements."""

    coefficients: tuple[Fraction, ...]
    relation: str
    bound: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(as_rational(c) for c in self.coefficients))
        object.__setattr__(self, "bound", as_rational(self.bound))
        if self.relation not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}, got {self.relation!r}")

    @classmethod
    def on(cls, frame: Frame, weights: Mapping[str, object], relation: str, bound) -> LinearConstraint:
        coefficients = [Fraction(0)] * frame.size
        for label, c in weights.items():
            coefficients[frame.index(label)] = as_rational(c)
        return cls(tuple(coefficients), relation, bound)

    def value(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.coefficients, point)), Fraction(0))

    def satisfied(self, point: Sequence[Fraction]) -> bool:
        lhs = self.value(point)
        if self.relation == "<=":
            return lhs <= self.bound
        if self.relation == ">=":
            return lhs >= self.bound
        return lhs == self.bound


def _solve(rows: list[tuple[Sequence[Fraction], Fraction]], n: int):
    """Unique solution of a square-or-taller exact system, or None."""
    matrix = [list(coeffs) + [rhs] for coeffs, rhs in rows]
    pivot_row = 0
    pivots = []
    for col in range(n):
        pick = next((r for r in range(pivot_row, len(matrix)) if matrix[r][col] != 0), None)
        if pick is None:
            continue
        matrix[pivot_row], matrix[pick] = matrix[pick], matrix[pivot_row]
        p = matrix[pivot_row][col]
        matrix[pivot_row] = [x / p for x in matrix[pivot_row]]
        for r in range(len(matrix)):
            if r != pivot_row and matrix[r][col] != 0:
                f = matrix[r][col]
                matrix[r] = [x - f * y for x, y in zip(matrix[r], matrix[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    for r in range(pivot_row, len(matrix)):
        if matrix[r][n] != 0:
            return None
    if len(pivots) < n:
        return None
    return tuple(matrix[i][n] for i in range(n))


def _rank(rows: list[Sequence[Fraction]], n: int) -> int:
    matrix = [list(r) for r in rows]
    rank = 0
    for col in range(n):
        pick = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pick is None:
            continue
        matrix[rank], matrix[pick] = matrix[pick], matrix[rank]
        p = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            if matrix[r][col] != 0:
                f = matrix[r][col] / p
                matrix[r] = [x - f * y for x, y in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


def polytope_vertices(constraints: Iterable[LinearConstraint], frame: Frame) -> CredalSet:
    """All vertices of ``{Pr in the simplex : constraints hold}``.

    Every choice of inequality rows that, together with the equalities,
    pins down a unique point is solved exactly; the feasible solutions are
    the vertices.
    """
    n = frame.size
    if n > MAX_POLYTOPE_SIZE:
        raise FrameTooLargeError(n, MAX_POLYTOPE_SIZE, "constraint-polytope enumeration")
    constraints = list(constraints)
    for c in constraints:
        if len(c.coefficients) != n:
            raise ValueError(f"constraint has {len(c.coefficients)} coefficients, frame has {n}")
    one = Fraction(1)
    zero = Fraction(0)
    simplex = LinearConstraint((one,) * n, "=", one)
    nonneg = [LinearConstraint(tuple(one if j == i else zero for j in range(n)), ">=", zero) for i in range(n)]
    every = constraints + [simplex] + nonneg
    equalities = [(c.coefficients, c.bound) for c in every if c.relation == "="]
    inequalities = [(c.coefficients, c.bound) for c in every if c.relation != "="]
    needed = n - _rank([coeffs for coeffs, _ in equalities], n)

    found = set()
    for chosen in combinations(inequalities, needed):
        point = _solve(equalities + list(chosen), n)
        if point is not None and all(c.satisfied(point) for c in every):
            found.add(point)
    if not found:
        raise InfeasibleConstraintsError("the constraint system has no solution in the probability simplex")
    return CredalSet(frame, tuple(found))


# partition ("beehive") scenarios


@dataclass(frozen=True)
class PartitionScenario:
    """Cell ``X_i`` is chosen with probability ``a_i``; the point inside it is unknown."""

    frame: Frame
    cells: tuple[Subset, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        cells = tuple(self.cells)
        weights = tuple(as_rational(w) for w in self.weights)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "weights", weights)
        if not cells:
            raise InvalidScenarioError("a partition needs at least one cell")
        if len(cells) != len(weights):
            raise InvalidScenarioError("one weight per cell is required")
        covered = 0
        for cell in cells:
            if cell.frame != self.frame:
                raise InvalidScenarioError("cell belongs to a different frame")
            if cell.is_empty:
                raise InvalidScenarioError("cells must be nonempty")
            if covered & cell.bits:
                raise InvalidScenarioError(f"cell {cell} overlaps another cell")
            covered |= cell.bits
        if covered != self.frame.full_mask:
            raise InvalidScenarioError("cells do not cover the frame")
        if any(w <= 0 for w in weights):
            raise InvalidScenarioError("cell weights must be positive")
        if sum(weights) != 1:
            raise InvalidScenarioError(f"cell weights sum to {sum(weights)}, not 1")


def partition_belief(ps: PartitionScenario) -> BeliefFunction:
    values = [Fraction(0)] * (1 << ps.frame.size)
    for cell, w in zip(ps.cells, ps.weights):
        values[cell.bits] = w
    return belief_from_mass(MassFunction(ps.frame, values))


def _product_credal(frame: Frame, supports: list[tuple[int, ...]], weights) -> CredalSet:
    found = set()
    for choice in product(*supports):
        vertex = [Fraction(0)] * frame.size
        for i, w in zip(choice, weights):
            vertex[i] += w
        found.add(tuple(vertex))
    return CredalSet(frame, tuple(found))


def _members(bits: int) -> tuple[int, ...]:
    return tuple(i for i in range(bits.bit_length()) if bits >> i & 1)


def partition_credal(ps: PartitionScenario) -> CredalSet:
    """``{Pr : Pr(X_i) = a_i for every cell}`` as a product of sub-simplices."""
    return _product_credal(ps.frame, [_members(c.bits) for c in ps.cells], ps.weights)


def redistribution_credal(ps: PartitionScenario, b: Subset) -> CredalSet:
    """Credal set of the process that picks a point of ``b`` whenever it can.

    A cell meeting both ``b`` and its complement spends its whole weight
    inside ``b``; every other cell spreads its weight freely as before.
    """
    if b.frame != ps.frame:
        raise FrameMismatchError("event belongs to a different frame")
    supports = []
    for cell in ps.cells:
        inside = cell.bits & b.bits
        supports.append(_members(inside if inside else cell.bits))
    if not any(cell.bits & b.bits for cell in ps.cells):
        raise InvalidScenarioError(f"every member of the redistributed credal set gives Pr({b}) = 0")
    return _product_credal(ps.frame, supports, ps.weights)


@dataclass(frozen=True)
class ConstraintSystem:
    """A named set of linear constraints over a frame's elements."""

    frame: Frame
    constraints: tuple[LinearConstraint, ...]

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))

    def vertices(self) -> CredalSet:
        return polytope_vertices(self.constraints, self.frame)
