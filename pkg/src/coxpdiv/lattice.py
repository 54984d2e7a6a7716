"""Exact integer and rational linear algebra.

Everything in this package reduces sooner or later to integer matrices:
Smith/Hermite normal forms drive class-group computations, kernel and
cokernel bases, sections of surjections and retractions onto saturated
sublattices.  All arithmetic is exact (``int`` / ``fractions.Fraction``);
no floats appear anywhere.

Matrices are tuples of row tuples.  A matrix ``A`` of shape (m, n) acts on
column vectors of length n: ``mat_vec(A, v)`` is A.v.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InconsistentSequence, NotSurjective

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]
RatVector = tuple[Fraction, ...]
RatMatrix = tuple[RatVector, ...]


# ---------------------------------------------------------------------------
# vector / matrix basics
# ---------------------------------------------------------------------------

def as_matrix(rows: Iterable[Sequence[int]]) -> Matrix:
    """Freeze an iterable of rows into a rectangular integer matrix."""
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if mat and any(len(row) != len(mat[0]) for row in mat):
        raise DimensionMismatch("rows have unequal lengths")
    return mat


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(mat: Sequence[Sequence]) -> tuple:
    if not mat:
        return ()
    return tuple(zip(*mat))


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionMismatch(f"dot of lengths {len(u)} and {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"sum of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"difference of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> tuple:
    return tuple(c * x for x in v)


def mat_vec(mat: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in mat)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"product of {len(a)}x{len(a[0])} and {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries (sign preserved)."""
    g = math.gcd(*(int(x) for x in v)) if v else 0
    if g == 0:
        raise ValueError("primitive() of the zero vector")
    return tuple(int(x) // g for x in v)


def primitive_of_rational(v: Sequence) -> Vector:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    fracs = [Fraction(x) for x in v]
    denom = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
    return primitive(tuple(int(f * denom) for f in fracs))


# ---------------------------------------------------------------------------
# Smith normal form and friends
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """U.A.V = D with U, V unimodular and D in Smith normal form."""

    left: Matrix
    diagonal: Matrix
    right: Matrix

    def invariant_factors(self) -> tuple[int, ...]:
        d = self.diagonal
        k = min(len(d), len(d[0]) if d else 0)
        return tuple(d[i][i] for i in range(k) if d[i][i] != 0)


def _swap_rows(mat: list[list[int]], i: int, j: int) -> None:
    mat[i], mat[j] = mat[j], mat[i]


def _swap_cols(mat: list[list[int]], i: int, j: int) -> None:
    for row in mat:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith decomposition of an integer matrix.

    The pivot at each stage is the entry of smallest absolute value in the
    remaining submatrix (ties broken by lowest row, then column); pivots are
    normalised positive and the divisibility chain d1 | d2 | ... is enforced.
    """
    mat = as_matrix(a)
    m = len(mat)
    n = len(mat[0]) if mat else 0
    d = [list(row) for row in mat]
    u = [list(row) for row in identity(m)]
    v = [list(row) for row in identity(n)]

    for k in range(min(m, n)):
        while True:
            # locate the smallest nonzero entry of the trailing submatrix
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != k:
                _swap_rows(d, k, best[0])
                _swap_rows(u, k, best[0])
            if best[1] != k:
                _swap_cols(d, k, best[1])
                _swap_cols(v, k, best[1])

            dirty = False
            for i in range(k + 1, m):
                if d[i][k] != 0:
                    q = d[i][k] // d[k][k]
                    for j in range(n):
                        d[i][j] -= q * d[k][j]
                    for j in range(m):
                        u[i][j] -= q * u[k][j]
                    dirty = dirty or d[i][k] != 0
            for j in range(k + 1, n):
                if d[k][j] != 0:
                    q = d[k][j] // d[k][k]
                    for i in range(m):
                        d[i][j] -= q * d[i][k]
                    for i in range(n):
                        v[i][j] -= q * v[i][k]
                    dirty = dirty or d[k][j] != 0
            if dirty:
                continue

            # pivot now isolated; pull in any entry it does not divide yet
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if d[i][j] % d[k][k] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(n):
                d[k][j] += d[offender][j]
            for j in range(m):
                u[k][j] += u[offender][j]

        if k < min(m, n) and d[k][k] < 0:
            for j in range(n):
                d[k][j] = -d[k][j]
            for j in range(m):
                u[k][j] = -u[k][j]

    return SmithDecomposition(as_matrix(u), as_matrix(d), as_matrix(v))


def kernel_basis(a: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
    """Basis of the integer kernel {x : A.x = 0}, as a tuple of vectors.

    The basis spans a saturated sublattice (every kernel is saturated), so
    it extends to a basis of the ambient lattice.
    """
    mat = as_matrix(a)
    if not mat:
        return ()
    n = len(mat[0])
    snf = smith_normal_form(mat)
    rank = len(snf.invariant_factors())
    cols = transpose(snf.right)
    return tuple(cols[j] for j in range(rank, n))


@dataclass(frozen=True)
class Cokernel:
    """Cokernel of an integer matrix A : Z^n -> Z^m.

    ``projection`` maps Z^m onto the free part Z^free_rank and kills im(A);
    ``torsion`` lists the invariant factors larger than one.
    """

    free_rank: int
    torsion: tuple[int, ...]
    projection: Matrix


def cokernel(a: Sequence[Sequence[int]]) -> Cokernel:
    mat = as_matrix(a)
    m = len(mat)
    snf = smith_normal_form(mat)
    factors = snf.invariant_factors()
    rank = len(factors)
    proj = tuple(snf.left[i] for i in range(rank, m))
    return Cokernel(m - rank, tuple(f for f in factors if f != 1), proj)


def section_of_surjection(a: Sequence[Sequence[int]]) -> Matrix:
    """Right inverse s of a surjective A : Z^n -> Z^m, so that A.s = id.

    Raises NotSurjective when A fails to be onto over the integers.
    """
    mat = as_matrix(a)
    m = len(mat)
    snf = smith_normal_form(mat)
    factors = snf.invariant_factors()
    if len(factors) != m or any(f != 1 for f in factors):
        raise NotSurjective(f"invariant factors {factors} on {m} rows")
    first_cols = tuple(row[:m] for row in snf.right)
    return mat_mul(first_cols, snf.left)


def cosection(inj: Sequence[Sequence[int]], sec: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Split Z^n along an injection i : Z^k -> Z^n and a complement s : Z^(n-k) -> Z^n.

    Returns (t, p) with t.i = id, t.s = 0, p.i = 0, p.s = id; in other
    words [t; p] is the inverse of the unimodular block matrix [i | s].
    Raises InconsistentSequence when [i | s] is not unimodular.
    """
    left = as_matrix(inj)
    right = as_matrix(sec)
    if len(left) != len(right):
        raise DimensionMismatch("injection and complement target different lattices")
    n = len(left)
    k = len(left[0]) if left else 0
    if k + (len(right[0]) if right else 0) != n:
        raise DimensionMismatch("block matrix [i | s] is not square")
    block = tuple(left[i] + right[i] for i in range(n))
    try:
        inv = inverse_unimodular(block)
    except ValueError as exc:
        raise InconsistentSequence(f"[i | s] is not unimodular: {exc}") from None
    return inv[:k], inv[k:]


def quotient_by_sublattice(span: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Quotient map onto Z^n / L for the saturated sublattice L spanned by ``span``.

    Returns (projection, lift): projection kills L and is onto Z^(n-k);
    lift is a right inverse landing in a complement of L.  Raises
    InconsistentSequence when the span is not saturated.
    """
    vecs = as_matrix(span)
    if not vecs:
        raise DimensionMismatch("empty spanning set (ambient dimension unknown)")
    n = len(vecs[0])
    cols = transpose(vecs)  # n x k, sublattice as column span
    snf = smith_normal_form(cols)
    factors = snf.invariant_factors()
    if any(f != 1 for f in factors):
        raise InconsistentSequence(f"sublattice is not saturated: invariant factors {factors}")
    k = len(factors)
    u_inv = inverse_unimodular(snf.left)
    projection = tuple(snf.left[i] for i in range(k, n))
    lift = tuple(row[k:] for row in u_inv)
    return projection, lift


# ---------------------------------------------------------------------------
# Hermite normal form
# ---------------------------------------------------------------------------

def hermite_basis(rows: Iterable[Sequence[int]]) -> tuple[Vector, ...]:
    """Canonical basis of the lattice spanned by the given row vectors.

    Row-style Hermite normal form: echelon shape, positive pivots, entries
    above a pivot reduced into [0, pivot).  Two spanning sets of the same
    lattice produce identical output, so this doubles as a canonical form.
    """
    work = [list(r) for r in as_matrix(list(rows)) if any(r)]
    if not work:
        return ()
    n = len(work[0])
    top = 0
    for col in range(n):
        while True:
            live = [i for i in range(top, len(work)) if work[i][col] != 0]
            if not live:
                break
            best = min(live, key=lambda i: (abs(work[i][col]), i))
            work[top], work[best] = work[best], work[top]
            done = True
            for i in range(top + 1, len(work)):
                if work[i][col] != 0:
                    q = work[i][col] // work[top][col]
                    work[i] = [x - q * y for x, y in zip(work[i], work[top])]
                    done = done and work[i][col] == 0
            if done:
                break
        if top < len(work) and work[top][col] != 0:
            if work[top][col] < 0:
                work[top] = [-x for x in work[top]]
            for i in range(top):
                q = work[i][col] // work[top][col]
                if q:
                    work[i] = [x - q * y for x, y in zip(work[i], work[top])]
            top += 1
    return tuple(tuple(r) for r in work[:top])


def saturate(rows: Iterable[Sequence[int]]) -> tuple[Vector, ...]:
    """Canonical basis of the saturation (rational row span intersect Z^n)."""
    mat = as_matrix(list(rows))
    if not mat:
        return ()
    perp = kernel_basis(mat)
    if not perp:
        return hermite_basis(identity(len(mat[0])))
    return hermite_basis(kernel_basis(perp))


# ---------------------------------------------------------------------------
# rational elimination
# ---------------------------------------------------------------------------

def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place fraction-free-ish Gauss elimination; returns (rows, pivot columns)."""
    if not rows:
        return rows, []
    n = len(rows[0])
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rational_rank(a: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in row] for row in a]
    _, pivots = _echelon(rows)
    return len(pivots)


def rational_solve(a: Sequence[Sequence], b: Sequence) -> RatVector | None:
    """One solution of A.x = b over the rationals, or None if inconsistent."""
    if len(a) != len(b):
        raise DimensionMismatch("matrix and right-hand side disagree")
    if not a:
        return ()
    n = len(a[0])
    rows = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    rows, pivots = _echelon(rows)
    for i in range(len(rows)):
        if all(x == 0 for x in rows[i][:n]) and rows[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        if c < n:
            x[c] = rows[r][n]
        elif rows[r][n] != 0:
            return None
    return tuple(x)


def rational_inverse(a: Sequence[Sequence]) -> RatMatrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatch("inverse of a non-square matrix")
    rows = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(a)]
    rows, pivots = _echelon(rows)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def inverse_unimodular(a: Sequence[Sequence[int]]) -> Matrix:
    """Integer inverse of a unimodular matrix; raises ValueError otherwise."""
    inv = rational_inverse(a)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is invertible over Q but not over Z")
    return tuple(tuple(int(x) for x in row) for row in inv)
