"""Exact dense linear algebra over Q and over integer lattices.

Everything here works on plain lists.  Field routines are generic over any
exact value supporting +, -, *, / and truthiness (Fraction or QuadExact);
lattice routines use integer row reduction with extended gcd, so results
are exact sublattice data rather than rational approximations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


# -- generic field elimination ------------------------------------------


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c]
        work[r] = [v / inv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [v - factor * w for v, w in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def solve_exact(rows: Sequence[Sequence], rhs: Sequence) -> list | None:
    """Solve A x = b exactly; None if inconsistent, error if underdetermined."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return None
    if len(pivots) < ncols:
        raise ValueError("underdetermined system")
    zero = rows[0][0] - rows[0][0]
    sol = [zero] * ncols
    for row, p in zip(red, pivots):
        sol[p] = row[-1]
    return sol


def invert(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]] | None:
    n = len(rows)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    n = len(rows)
    work = [list(map(Fraction, r)) for r in rows]
    result = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if work[i][c]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            result = -result
        result *= work[c][c]
        inv = work[c][c]
        for i in range(c + 1, n):
            if work[i][c]:
                factor = work[i][c] / inv
                work[i] = [v - factor * w for v, w in zip(work[i], work[c])]
    return result


def nullspace(rows: Sequence[Sequence]) -> list[list]:
    """Basis of the rational kernel {x : A x = 0}, from the RREF free columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    one = Fraction(1)
    zero = Fraction(0)
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for row, p in zip(red, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


# -- integer lattices ------------------------------------------------------


def primitive(vec: Sequence[Fraction]) -> list[int]:
    """Scale a nonzero rational vector by a positive rational to a primitive integer vector."""
    fracs = [Fraction(v) for v in vec]
    if not any(fracs):
        raise ValueError("zero vector has no primitive form")
    denom_lcm = 1
    for f in fracs:
        denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


def sign_normalized(vec: Sequence[int]) -> list[int]:
    """Flip the vector so its first nonzero entry is positive."""
    for v in vec:
        if v:
            return list(vec) if v > 0 else [-x for x in vec]
    return list(vec)


def integer_kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of the integer kernel lattice {x in Z^n : A x = 0}.

    Unimodular column reduction: gcd-combine columns row by row so each
    processed row keeps a single pivot column; columns never touched by a
    pivot end up annihilating every row and their accumulated transforms
    form a lattice basis of the kernel.
    """
    m = [list(r) for r in rows]
    # u_cols[j] tracks the current j-th column as a combination of the originals.
    u_cols = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    active = list(range(ncols))
    for row in m:
        live = [j for j in active if row[j] != 0]
        if not live:
            continue
        j0 = live[0]
        for j in live[1:]:
            a, b = row[j0], row[j]
            g, x, y = xgcd(a, b)
            aa, bb = a // g, b // g
            for mat_row in m:
                vj0, vj = mat_row[j0], mat_row[j]
                mat_row[j0] = x * vj0 + y * vj
                mat_row[j] = -bb * vj0 + aa * vj
            for i in range(ncols):
                vj0, vj = u_cols[j0][i], u_cols[j][i]
                u_cols[j0][i] = x * vj0 + y * vj
                u_cols[j][i] = -bb * vj0 + aa * vj
        active.remove(j0)
    return [sign_normalized(u_cols[j]) for j in active]


class IntLattice:
    """Sublattice of Z^n kept in row-reduced (Hermite-style) form.

    Supports exact membership tests and equality; used for order ideals,
    kernel lattices and span checks.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.basis: list[list[int]] = []

    @classmethod
    def spanned_by(cls, vectors: Sequence[Sequence[int]], dim: int) -> IntLattice:
        lat = cls(dim)
        for v in vectors:
            lat.add(v)
        return lat

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _pivot(self, row: Sequence[int]) -> int:
        return next((j for j, v in enumerate(row) if v), self.dim)

    def _row_with_pivot(self, j: int) -> list[int] | None:
        return next((r for r in self.basis if self._pivot(r) == j), None)

    def add(self, vec0: Sequence[int]) -> None:
        if len(vec0) != self.dim:
            raise ValueError("vector length does not match lattice dimension")
        vec = list(vec0)
        # Reduce column-ascending so every combined row keeps zeros left of
        # its pivot; this is what makes membership tests sound.
        j = 0
        while j < self.dim:
            if vec[j] == 0:
                j += 1
                continue
            row = self._row_with_pivot(j)
            if row is None:
                self.basis.append(sign_normalized(vec))
                self.basis.sort(key=self._pivot)
                self._back_reduce()
                return
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [v - q * r for v, r in zip(vec, row)]
            else:
                g, x, y = xgcd(a, b)
                aa, bb = a // g, b // g
                new_row = [x * r + y * v for r, v in zip(row, vec)]
                vec = [-bb * r + aa * v for r, v in zip(row, vec)]
                row[:] = new_row
        self._back_reduce()

    def _back_reduce(self) -> None:
        for i in reversed(range(len(self.basis))):
            p = self._pivot(self.basis[i])
            for k in range(i):
                row = self.basis[k]
                if row[p]:
                    q = row[p] // self.basis[i][p]
                    if q:
                        for j in range(self.dim):
                            row[j] -= q * self.basis[i][j]

    def __contains__(self, vec0: Sequence[int]) -> bool:
        vec = list(vec0)
        for j in range(self.dim):
            if vec[j] == 0:
                continue
            row = self._row_with_pivot(j)
            if row is None or vec[j] % row[j] != 0:
                return False
            q = vec[j] // row[j]
            vec = [v - q * r for v, r in zip(vec, row)]
        return not any(vec)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntLattice):
            return NotImplemented
        return self.dim == other.dim and all(r in other for r in self.basis) and all(
            r in self for r in other.basis
        )

    def covers_standard(self) -> bool:
        """True if the lattice is all of Z^n."""
        return self.rank == self.dim and all(
            row[self._pivot(row)] in (1, -1) for row in self.basis
        )
