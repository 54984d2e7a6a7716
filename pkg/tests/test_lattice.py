import random
from fractions import Fraction

import pytest

from coxpdiv.errors import InconsistentSequence, NotSurjective
from coxpdiv.lattice import (
    Cokernel,
    as_matrix,
    cokernel,
    cosection,
    dot,
    hermite_basis,
    identity,
    inverse_unimodular,
    kernel_basis,
    mat_mul,
    mat_vec,
    primitive,
    primitive_of_rational,
    quotient_by_sublattice,
    rational_inverse,
    rational_rank,
    rational_solve,
    saturate,
    section_of_surjection,
    smith_normal_form,
    transpose,
)


def random_unimodular(rng, n, steps=12):
    """Product of random elementary row operations, so det = +/-1."""
    mat = [list(row) for row in identity(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        mat[i] = [x + c * y for x, y in zip(mat[i], mat[j])]
        if rng.random() < 0.3:
            mat[i], mat[j] = mat[j], mat[i]
    return as_matrix(mat)


class TestSmith:
    def test_diag_2_3(self):
        snf = smith_normal_form([[2, 0], [0, 3]])
        assert snf.diagonal == ((1, 0), (0, 6))
        assert mat_mul(mat_mul(snf.left, ((2, 0), (0, 3))), snf.right) == snf.diagonal

    def test_single_row(self):
        snf = smith_normal_form([[1, 1, 1]])
        assert snf.diagonal == ((1, 0, 0),)

    def test_torsion(self):
        assert smith_normal_form([[1, 1], [1, -1]]).invariant_factors() == (1, 2)

    def test_zero_matrix(self):
        snf = smith_normal_form([[0, 0], [0, 0]])
        assert snf.invariant_factors() == ()

    @pytest.mark.parametrize("seed", range(8))
    def test_random_decomposition(self, seed):
        rng = random.Random(seed)
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        a = as_matrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)])
        snf = smith_normal_form(a)
        assert mat_mul(mat_mul(snf.left, a), snf.right) == snf.diagonal
        # unimodularity
        inverse_unimodular(snf.left)
        inverse_unimodular(snf.right)
        # diagonal shape with divisibility chain
        d = snf.diagonal
        for i, row in enumerate(d):
            for j, x in enumerate(row):
                if i != j:
                    assert x == 0
        factors = snf.invariant_factors()
        assert all(f > 0 for f in factors)
        for a_, b_ in zip(factors, factors[1:]):
            assert b_ % a_ == 0


class TestKernelCokernel:
    def test_kernel_of_sum(self):
        basis = kernel_basis([[1, 1, 1]])
        assert len(basis) == 2
        for v in basis:
            assert sum(v) == 0

    def test_kernel_saturated(self):
        basis = kernel_basis([[2, 4]])
        assert basis == ((2, -1),) or basis == ((-2, 1),)

    def test_cokernel_free(self):
        cok = cokernel([[1, 0], [-1, 0]])
        assert isinstance(cok, Cokernel)
        assert cok.free_rank == 1
        assert cok.torsion == ()
        # projection kills the image
        for col in transpose([[1, 0], [-1, 0]]):
            assert mat_vec(cok.projection, col) == (0,)

    def test_cokernel_torsion(self):
        cok = cokernel([[1, 1], [1, -1]])
        assert cok.free_rank == 0
        assert cok.torsion == (2,)


class TestSectionCosection:
    def test_not_surjective(self):
        with pytest.raises(NotSurjective):
            section_of_surjection([[2, 0]])

    @pytest.mark.parametrize("seed", range(6))
    def test_section_right_inverse(self, seed):
        rng = random.Random(100 + seed)
        n = rng.randint(2, 5)
        m = rng.randint(1, n)
        # build a guaranteed surjection as U . [I | 0] . V
        u = random_unimodular(rng, m)
        v = random_unimodular(rng, n)
        proj = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(m))
        a = mat_mul(mat_mul(u, proj), v)
        s = section_of_surjection(a)
        assert mat_mul(a, s) == identity(m)

    def test_cosection_splits(self):
        inj = ((1,), (2,))
        sec = ((0,), (1,))
        t, p = cosection(inj, sec)
        assert mat_mul(t, inj) == identity(1)
        assert mat_mul(p, sec) == identity(1)
        assert mat_mul(t, sec) == ((0,),)
        assert mat_mul(p, inj) == ((0,),)

    def test_cosection_rejects_non_unimodular(self):
        with pytest.raises(InconsistentSequence):
            cosection(((2,), (0,)), ((0,), (1,)))

    @pytest.mark.parametrize("seed", range(5))
    def test_cosection_random(self, seed):
        rng = random.Random(200 + seed)
        n = rng.randint(2, 5)
        k = rng.randint(1, n - 1)
        u = random_unimodular(rng, n)
        cols = transpose(u)
        inj = transpose(cols[:k])
        sec = transpose(cols[k:])
        t, p = cosection(inj, sec)
        assert mat_mul(t, inj) == identity(k)
        assert mat_mul(p, sec) == identity(n - k)


class TestHermite:
    def test_canonical_under_row_ops(self):
        rng = random.Random(7)
        base = ((2, 1, 0), (0, 3, 1))
        h = hermite_basis(base)
        for _ in range(10):
            u = random_unimodular(rng, 2)
            assert hermite_basis(mat_mul(u, base)) == h

    def test_drops_zero_rows(self):
        assert hermite_basis([(0, 0), (3, 6)]) == ((3, 6),)

    def test_saturate(self):
        assert saturate([(2, 4)]) == ((1, 2),)
        assert saturate([(1, 0), (0, 2)]) == ((1, 0), (0, 1))


class TestQuotient:
    def test_projection_and_lift(self):
        span = ((1, 2, 3),)
        proj, lift = quotient_by_sublattice(span)
        assert len(proj) == 2 and len(proj[0]) == 3
        assert mat_vec(proj, span[0]) == (0, 0)
        assert mat_mul(proj, lift) == identity(2)

    def test_rejects_unsaturated(self):
        with pytest.raises(InconsistentSequence):
            quotient_by_sublattice(((2, 0),))


class TestRationalHelpers:
    def test_primitive(self):
        assert primitive((4, -6)) == (2, -3)
        assert primitive_of_rational((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
        with pytest.raises(ValueError):
            primitive((0, 0))

    def test_rank_and_solve(self):
        assert rational_rank([[1, 2], [2, 4]]) == 1
        x = rational_solve([[2, 0], [0, 3]], [1, 1])
        assert x == (Fraction(1, 2), Fraction(1, 3))
        assert rational_solve([[1, 1], [1, 1]], [0, 1]) is None

    def test_inverse(self):
        inv = rational_inverse([[2, 1], [1, 1]])
        assert mat_mul(inv, ((2, 1), (1, 1))) == ((1, 0), (0, 1))
        with pytest.raises(ValueError):
            rational_inverse([[1, 1], [1, 1]])
        with pytest.raises(ValueError):
            inverse_unimodular([[2, 0], [0, 1]])

    def test_dot_exact(self):
        assert dot((Fraction(1, 3), 1), (3, Fraction(1, 2))) == Fraction(3, 2)
