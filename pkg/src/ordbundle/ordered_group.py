"""Finite-rank ordered abelian groups with exact positivity tests.

A group is Z^k together with one of two positive cones:

* a hyperplane cone ``{x : f(x) > 0} ∪ {0}`` for a nonzero functional f
  with coefficients in Q(sqrt(D)) — nonzero kernel vectors are incomparable
  to 0, so the order is total exactly when f has trivial integer kernel;
* a simplicial cone: nonnegative integer combinations of a unimodular
  basis of Z^k.

All operations are pure and exact; no square root is ever evaluated
numerically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    DimensionMismatchError,
    InvalidIdealError,
    OrderingError,
    UnsupportedConeError,
)
from .quadfield import QuadExact

Vector = tuple[int, ...]


def as_vector(x: Sequence[int]) -> Vector:
    return tuple(int(v) for v in x)


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class LinearFunctional:
    """Functional on Z^k with coefficients sharing one radicand."""

    coeffs: tuple[QuadExact, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs or not any(coeffs):
            raise ValueError("functional must have a nonzero coefficient")
        rads = {c.radicand for c in coeffs if c.surd != 0}
        if len(rads) > 1:
            raise ValueError(f"coefficients mix radicands {sorted(rads)}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def radicand(self) -> int:
        for c in self.coeffs:
            if c.surd != 0:
                return c.radicand
        return 0

    def __call__(self, x: Sequence[int]) -> QuadExact:
        if len(x) != len(self.coeffs):
            raise DimensionMismatchError(
                f"element has length {len(x)}, functional expects {len(self.coeffs)}"
            )
        total = QuadExact.zero()
        for c, v in zip(self.coeffs, x):
            if v:
                total = total + c * v
        return total

    def negated(self) -> LinearFunctional:
        return LinearFunctional(tuple(-c for c in self.coeffs))

    def scaled(self, factor: QuadExact) -> LinearFunctional:
        return LinearFunctional(tuple(c * factor for c in self.coeffs))

    def rational_rows(self) -> list[list[Fraction]]:
        """Rational-part and surd-part coefficient rows (surd row omitted if zero)."""
        rows = [[c.rational for c in self.coeffs]]
        if any(c.surd for c in self.coeffs):
            rows.append([c.surd for c in self.coeffs])
        return rows


@dataclass(frozen=True)
class HyperplaneCone:
    functional: LinearFunctional

    @property
    def rank(self) -> int:
        return self.functional.rank

    def contains(self, x: Sequence[int]) -> bool:
        if not any(x):
            return True
        return self.functional(x).sign() > 0


@dataclass(frozen=True)
class SimplicialCone:
    """Cone of nonnegative combinations of a unimodular basis of Z^k."""

    basis: tuple[Vector, ...]
    _inverse_rows: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, default=()
    )

    def __post_init__(self):
        basis = tuple(as_vector(b) for b in self.basis)
        object.__setattr__(self, "basis", basis)
        k = len(basis)
        if k and any(len(b) != k for b in basis):
            raise ValueError("simplicial basis must be square")
        if k:
            cols = [[Fraction(basis[j][i]) for j in range(k)] for i in range(k)]
            if abs(linalg.det(cols)) != 1:
                raise ValueError("simplicial basis must be unimodular (determinant ±1)")
            inv = linalg.invert(cols)
            inverse_rows = tuple(tuple(int(v) for v in row) for row in inv)
        else:
            inverse_rows = ()
        object.__setattr__(self, "_inverse_rows", inverse_rows)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, x: Sequence[int]) -> Vector:
        """Integer coordinates of x in the cone basis (exact, since the basis is unimodular)."""
        if len(x) != self.rank:
            raise DimensionMismatchError(
                f"element has length {len(x)}, cone expects {self.rank}"
            )
        return tuple(sum(r * v for r, v in zip(row, x)) for row in self._inverse_rows)

    def contains(self, x: Sequence[int]) -> bool:
        return all(c >= 0 for c in self.coordinates(x))


Cone = HyperplaneCone | SimplicialCone


@dataclass(frozen=True)
class OrderedGroup:
    rank: int
    cone: Cone

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.cone.rank != self.rank:
            raise DimensionMismatchError(
                f"cone dimension {self.cone.rank} does not match rank {self.rank}"
            )
        if isinstance(self.cone, HyperplaneCone) and self.rank < 1:
            raise ValueError("hyperplane cones need rank at least 1")

    @property
    def is_simplicial(self) -> bool:
        return isinstance(self.cone, SimplicialCone)


@dataclass(frozen=True)
class OrderIdeal:
    """Sublattice of Z^k given by generators; order-convexity is checked on demand."""

    generators: tuple[Vector, ...]
    dim: int

    def lattice(self) -> linalg.IntLattice:
        return linalg.IntLattice.spanned_by(self.generators, self.dim)

    @property
    def rank(self) -> int:
        return self.lattice().rank

    def is_zero(self) -> bool:
        return self.rank == 0


def standard_simplicial(k: int) -> OrderedGroup:
    basis = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    return OrderedGroup(k, SimplicialCone(basis))


def hyperplane_group(coeffs: Iterable[QuadExact]) -> OrderedGroup:
    f = LinearFunctional(tuple(coeffs))
    return OrderedGroup(f.rank, HyperplaneCone(f))


def _check_dim(G: OrderedGroup, *xs: Sequence[int]) -> None:
    for x in xs:
        if len(x) != G.rank:
            raise DimensionMismatchError(
                f"element {tuple(x)} has length {len(x)}, group has rank {G.rank}"
            )


def is_positive(G: OrderedGroup, x: Sequence[int]) -> bool:
    """Membership of x in the positive cone (0 is always positive)."""
    _check_dim(G, x)
    return G.cone.contains(x)


def compare(G: OrderedGroup, x: Sequence[int], y: Sequence[int]) -> Ordering:
    """Exact order relation; Incomparable when neither difference is in the cone."""
    _check_dim(G, x, y)
    if tuple(x) == tuple(y):
        return Ordering.EQUAL
    diff = tuple(b - a for a, b in zip(x, y))
    if G.cone.contains(diff):
        return Ordering.LESS
    if G.cone.contains(tuple(-d for d in diff)):
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


def leq(G: OrderedGroup, x: Sequence[int], y: Sequence[int]) -> bool:
    return compare(G, x, y) in (Ordering.LESS, Ordering.EQUAL)


def kernel_lattice_basis(f: LinearFunctional) -> list[Vector]:
    """Basis of {x in Z^k : f(x) = 0}.

    Since sqrt(D) is irrational (or the surd row is absent), f(x) = 0 for
    integer x exactly when x annihilates the rational-part and surd-part
    rows separately, so this is an integer kernel computation.
    """
    int_rows = []
    for row in f.rational_rows():
        denom = 1
        for v in row:
            denom = denom * v.denominator // math.gcd(denom, v.denominator)
        int_row = [int(v * denom) for v in row]
        if any(int_row):
            int_rows.append(int_row)
    basis = linalg.integer_kernel_basis(int_rows, f.rank)
    lat = linalg.IntLattice.spanned_by(basis, f.rank)
    return [tuple(row) for row in lat.basis]


def is_totally_ordered(G: OrderedGroup) -> bool:
    """Total order test: trivial integer kernel (hyperplane) or rank <= 1 (simplicial)."""
    if isinstance(G.cone, HyperplaneCone):
        return not kernel_lattice_basis(G.cone.functional)
    return G.rank <= 1


def order_ideal_generated(G: OrderedGroup, basis_subset: Iterable[int]) -> OrderIdeal:
    """Order ideal spanned by the selected cone-basis columns of a simplicial group."""
    if not isinstance(G.cone, SimplicialCone):
        raise UnsupportedConeError(
            "ideals from basis subsets need a simplicial cone; "
            "hyperplane-cone ideals arrive via state kernel ideals"
        )
    indices = sorted(set(int(i) for i in basis_subset))
    if any(i < 0 or i >= G.rank for i in indices):
        raise ValueError(f"basis indices {indices} out of range 0..{G.rank - 1}")
    return OrderIdeal(tuple(G.cone.basis[i] for i in indices), G.rank)


def _simplicial_ideal_indices(G: OrderedGroup, H: OrderIdeal) -> list[int]:
    """Indices S with lattice(H) = span{basis[i] : i in S}, or raise."""
    cone = G.cone
    assert isinstance(cone, SimplicialCone)
    lat = H.lattice()
    indices = [i for i in range(G.rank) if list(cone.basis[i]) in lat]
    sub = linalg.IntLattice.spanned_by([cone.basis[i] for i in indices], G.rank)
    if not all(list(g) in sub for g in H.generators):
        raise InvalidIdealError(
            "ideal is not spanned by a subset of the cone basis; "
            "only basis-subset ideals of simplicial groups are supported"
        )
    return indices


def quotient(G: OrderedGroup, H: OrderIdeal) -> OrderedGroup:
    """Quotient group with the pushed-forward cone.

    The zero ideal returns G itself.  For a simplicial G and an ideal
    spanned by cone-basis columns, the quotient is the standard simplicial
    group on the remaining coordinates.
    """
    if H.dim != G.rank:
        raise DimensionMismatchError("ideal lives in a different rank")
    if H.is_zero():
        return G
    if isinstance(G.cone, HyperplaneCone):
        # States on hyperplane cones kill no positive element, so the only
        # ideal reaching here legitimately is the zero ideal.
        raise InvalidIdealError(
            "nonzero quotients of hyperplane-cone groups are not supported"
        )
    indices = _simplicial_ideal_indices(G, H)
    return standard_simplicial(G.rank - len(indices))


def quotient_map(G: OrderedGroup, H: OrderIdeal) -> list[Vector]:
    """Rows of the projection Z^k -> Z^(k-|S|) used by ``quotient`` (cone coordinates kept)."""
    if H.is_zero():
        return [tuple(int(i == j) for j in range(G.rank)) for i in range(G.rank)]
    cone = G.cone
    if not isinstance(cone, SimplicialCone):
        raise InvalidIdealError("nonzero quotients need a simplicial cone")
    dropped = set(_simplicial_ideal_indices(G, H))
    return [cone._inverse_rows[i] for i in range(G.rank) if i not in dropped]


def is_unperforated_witness(G: OrderedGroup, x: Sequence[int], n: int) -> bool:
    """Check the unperforation implication (n*x >= 0 implies x >= 0) for one pair."""
    if n <= 0:
        raise ValueError("multiplier n must be a positive integer")
    _check_dim(G, x)
    nx = tuple(n * v for v in x)
    return (not is_positive(G, nx)) or is_positive(G, x)


def riesz_interpolate(
    G: OrderedGroup,
    x1: Sequence[int],
    x2: Sequence[int],
    y1: Sequence[int],
    y2: Sequence[int],
    box_radius: int,
) -> Vector | None:
    """Bounded search for z with x1, x2 <= z <= y1, y2.

    Scans the integer box of the given radius centred at floor((x1+y1)/2)
    in lexicographic order and returns the first interpolant, or None when
    the box holds none (which does not disprove the Riesz property).
    """
    if box_radius <= 0:
        raise ValueError("box_radius must be positive")
    _check_dim(G, x1, x2, y1, y2)
    lows = (x1, x2)
    highs = (y1, y2)
    for lo in lows:
        for hi in highs:
            if not leq(G, lo, hi):
                raise OrderingError(
                    f"precondition failed: {tuple(lo)} is not <= {tuple(hi)}"
                )
    centre = [(a + b) // 2 for a, b in zip(x1, y1)]
    ranges = [range(c - box_radius, c + box_radius + 1) for c in centre]
    for z in itertools.product(*ranges):
        if all(leq(G, lo, z) for lo in lows) and all(leq(G, z, hi) for hi in highs):
            return z
    return None


def is_order_unit(G: OrderedGroup, u: Sequence[int], generator_bound: int) -> bool:
    """Order-unit test.

    Hyperplane cones are Archimedean: every u with f(u) > 0 dominates all
    of Z^k, so the answer is True outright.  In a simplicial cone u is an
    order unit exactly when every cone coordinate of u is >= 1; then n = 1
    already dominates each basis vector, so any positive bound decides.
    """
    if generator_bound <= 0:
        raise ValueError("generator_bound must be positive")
    _check_dim(G, u)
    if not is_positive(G, u) or not any(u):
        raise ValueError(f"unit {tuple(u)} is not a nonzero positive element")
    if isinstance(G.cone, HyperplaneCone):
        return True
    coords = G.cone.coordinates(u)
    return all(c >= 1 for c in coords)


def is_order_convex_in_box(G: OrderedGroup, H: OrderIdeal, radius: int) -> bool:
    """Finite convexity check: x, y in H, x <= z <= y inside the box implies z in H."""
    lat = H.lattice()
    box = list(itertools.product(range(-radius, radius + 1), repeat=G.rank))
    members = [p for p in box if list(p) in lat]
    for x in members:
        for y in members:
            if not leq(G, x, y):
                continue
            for z in box:
                if leq(G, x, z) and leq(G, z, y) and list(z) not in lat:
                    return False
    return True
