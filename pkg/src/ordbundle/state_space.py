"""States on ordered groups: construction, discreteness, kernel ideals,
convex decompositions and pointwise evaluation of the natural map.

Only the two finitely presentable cases are materialized: a simplicial
group contributes its normalized coordinate projections as extreme states,
and a hyperplane-cone group has exactly one state f/f(u).  The latter holds
whether or not the order is total: for any x with f(x) != 0 the value s(x)
is squeezed between rationals p/q with p*f(u) <> q*f(x), and any x in the
kernel satisfies n*s(x) + s(y) >= 0 for all n and some positive y, forcing
s(x) = 0.  So every state agrees with f/f(u).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DecompositionError, NoUniqueStateError
from .ordered_group import (
    HyperplaneCone,
    LinearFunctional,
    OrderedGroup,
    OrderIdeal,
    SimplicialCone,
    Vector,
    is_order_unit,
    is_positive,
    is_totally_ordered,
)
from .quadfield import QuadExact


@dataclass(frozen=True)
class State:
    """Normalized positive functional on (G, u); s(u) = 1 exactly."""

    functional: LinearFunctional
    unit: Vector

    def __post_init__(self):
        object.__setattr__(self, "unit", tuple(int(v) for v in self.unit))
        if self.functional(self.unit) != QuadExact.one():
            raise ValueError("state must evaluate to exactly 1 at the order unit")

    def __call__(self, x: Sequence[int]) -> QuadExact:
        return self.functional(x)


def _require_positive_unit(G: OrderedGroup, u: Sequence[int]) -> None:
    if not any(u) or not is_positive(G, u):
        raise ValueError(f"unit {tuple(u)} is not a nonzero positive element")


def unique_state(G: OrderedGroup, u: Sequence[int]) -> State:
    """The single state of a totally ordered hyperplane-cone group: f/f(u)."""
    if not isinstance(G.cone, HyperplaneCone):
        raise NoUniqueStateError("unique_state needs a hyperplane cone")
    if not is_totally_ordered(G):
        raise NoUniqueStateError(
            "group is not totally ordered; no unique-state construction"
        )
    _require_positive_unit(G, u)
    f = G.cone.functional
    return State(f.scaled(f(u).reciprocal()), tuple(u))


def extreme_states(G: OrderedGroup, u: Sequence[int]) -> tuple[State, ...]:
    """Extreme points of the state space of (G, u).

    Simplicial case: the normalized coordinate projections, one per cone
    basis vector.  Hyperplane case: the singleton f/f(u); when the order is
    total this is the unique-state construction, and for a degenerate
    (rational-direction) cone the same functional is still the only state
    by the squeeze argument in the module docstring.
    """
    _require_positive_unit(G, u)
    if isinstance(G.cone, HyperplaneCone):
        f = G.cone.functional
        return (State(f.scaled(f(u).reciprocal()), tuple(u)),)
    cone = G.cone
    if not is_order_unit(G, u, 1):
        raise ValueError(f"{tuple(u)} is not an order unit of the simplicial group")
    coords_u = cone.coordinates(u)
    states = []
    for i in range(G.rank):
        row = cone._inverse_rows[i]
        coeffs = tuple(QuadExact.of(Fraction(v, coords_u[i])) for v in row)
        states.append(State(LinearFunctional(coeffs), tuple(u)))
    return tuple(states)


def is_discrete_state(s: State, sample_generators: Sequence[Sequence[int]]) -> bool:
    """True when s(G) is cyclic: all generator values rational.

    Any irrational value makes s(G) dense (it contains 1 = s(u) and an
    irrational, so it is not cyclic); all-rational values on a generating
    set give s(G) = (1/q) Z for the common denominator q.
    """
    dim = len(s.unit)
    lat = linalg.IntLattice.spanned_by([list(g) for g in sample_generators], dim)
    if not lat.covers_standard():
        raise ValueError("sample generators do not span the full lattice")
    return all(s(g).is_rational() for g in sample_generators)


def state_image_generator(s: State, sample_generators: Sequence[Sequence[int]]) -> Fraction:
    """Positive generator of the cyclic group s(G) for a discrete state.

    gcd of fractions: gcd of the numerators over the lcm of the denominators.
    """
    if not is_discrete_state(s, sample_generators):
        raise ValueError("state is not discrete")
    g_num = 0
    l_den = 1
    for g in sample_generators:
        v = s(g).rational
        g_num = math.gcd(g_num, v.numerator)
        l_den = l_den * v.denominator // math.gcd(l_den, v.denominator)
    return Fraction(g_num, l_den)


def kernel_ideal(G: OrderedGroup, s: State) -> OrderIdeal:
    """Order ideal generated by differences of positive kernel elements of s.

    For a simplicial cone this is the span of the basis vectors killed by s;
    for a hyperplane cone the positive kernel is {0}, giving the zero ideal.
    """
    if isinstance(G.cone, HyperplaneCone):
        return OrderIdeal((), G.rank)
    cone = G.cone
    gens = tuple(b for b in cone.basis if not s(b))
    return OrderIdeal(gens, G.rank)


def rational_convex_decomposition(
    s: State, extremes: Sequence[State]
) -> tuple[Fraction, ...]:
    """Exact nonnegative rationals with sum 1 expressing s over the extremes.

    Solves the affine system over Q; when the extreme list is affinely
    dependent, basic solutions (vertices of the feasible polytope) are
    enumerated, so a nonnegative solution is found whenever one exists.
    """
    if not extremes:
        raise DecompositionError("empty extreme-state list")
    if not s(s.unit) == QuadExact.one():  # pragma: no cover - guarded by State
        raise ValueError("not a state")
    coeff_rows = [s.functional.coeffs] + [e.functional.coeffs for e in extremes]
    for row in coeff_rows:
        if any(not c.is_rational() for c in row):
            raise DecompositionError(
                "decomposition requires discrete (rational-valued) states"
            )
    dim = len(s.functional.coeffs)
    # Columns are extremes; rows are the dim coefficients plus the sum-to-1 row.
    a_rows = [
        [e.functional.coeffs[j].rational for e in extremes] for j in range(dim)
    ]
    a_rows.append([Fraction(1)] * len(extremes))
    rhs = [s.functional.coeffs[j].rational for j in range(dim)] + [Fraction(1)]

    def try_columns(cols: Sequence[int]) -> tuple[Fraction, ...] | None:
        sub = [[row[c] for c in cols] for row in a_rows]
        try:
            sol = linalg.solve_exact(sub, rhs)
        except ValueError:
            return None
        if sol is None or any(v < 0 for v in sol):
            return None
        full = [Fraction(0)] * len(extremes)
        for c, v in zip(cols, sol):
            full[c] = v
        return tuple(full)

    n = len(extremes)
    r = linalg.rank(a_rows)
    for size in range(1, min(n, r) + 1):
        for cols in itertools.combinations(range(n), size):
            sol = try_columns(cols)
            if sol is not None:
                return sol
    raise DecompositionError(
        "no nonnegative rational solution: state is outside the rational convex hull"
    )


def natural_map_eval(
    G: OrderedGroup, u: Sequence[int], x: Sequence[int]
) -> tuple[QuadExact, ...]:
    """Evaluate x against every extreme state (the affine-representation vector)."""
    return tuple(s(x) for s in extreme_states(G, u))


def affine_dimension(
    states: Sequence[State], probe_elements: Sequence[Sequence[int]]
) -> int:
    """Affine dimension of a finite state list, as a matrix rank over Q(sqrt(D))."""
    if not states:
        raise ValueError("affine_dimension of an empty state list")
    dim = len(states[0].unit)
    lat = linalg.IntLattice.spanned_by([list(p) for p in probe_elements], dim)
    if not lat.covers_standard():
        raise ValueError("probe elements do not span the full lattice")
    base = states[0]
    rows = []
    for s in states[1:]:
        rows.append([s(p) - base(p) for p in probe_elements])
    if not rows:
        return 0
    return linalg.rank(rows)


def check_state_positivity(
    G: OrderedGroup, s: State, samples: Sequence[Sequence[int]]
) -> bool:
    """Positivity of s on given cone samples (used by property tests)."""
    return all(s(x).sign() >= 0 for x in samples if is_positive(G, x))
