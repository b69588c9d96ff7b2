import random

import pytest

from algdouble.scalar import Scalar
from algdouble.algebra import Algebra, DimensionMismatch
from algdouble.tensor import Tensor2, Tensor3, aybe_residual, r_as_map

A2_DIM1 = Algebra(1, {(0, 0): [1]})
A2 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1]})
A5 = Algebra(2)

a11, a12, a21, a22 = (Scalar.var(n) for n in ("a11", "a12", "a21", "a22"))


def basis_tensor(algebra, i, j):
    n = algebra.dim
    return Tensor2(algebra, [[Scalar(1) if (p, q) == (i, j) else Scalar(0)
                              for q in range(n)] for p in range(n)])


def random_tensor(rng, algebra):
    n = algebra.dim
    return Tensor2(algebra, [[Scalar(rng.randint(-3, 3)) for _ in range(n)]
                             for _ in range(n)])


class TestSigma:
    def test_swaps_slots(self):
        assert basis_tensor(A2, 0, 1).sigma() == basis_tensor(A2, 1, 0)

    def test_fixes_symmetric(self):
        r = Tensor2(A2, [[a11, a12], [a12, a22]])
        assert r.sigma() == r

    def test_involution(self):
        rng = random.Random(5)
        for _ in range(50):
            r = random_tensor(rng, A2)
            assert r.sigma().sigma() == r


class TestSymmetryPredicates:
    def test_antisymmetric_pair(self):
        r = Tensor2(A2, [[0, a12], [-a12, 0]])
        assert r.is_antisymmetric()
        assert not r.is_symmetric()

    def test_symmetric_single_diagonal(self):
        r = Tensor2(A2, [[0, 0], [0, a22]])
        assert r.is_symmetric()

    def test_single_off_diagonal_is_neither(self):
        r = Tensor2(A2, [[0, a12], [0, 0]])
        assert not r.is_symmetric()
        assert not r.is_antisymmetric()

    def test_constraints_applied_before_predicate(self):
        from algdouble.scalar import Constraint
        r = Tensor2(A2, [[0, a12], [a21, 0]],
                    constraints=[Constraint.equality("a21", -a12)])
        assert not r.is_antisymmetric()
        assert r.with_constraints_applied().is_antisymmetric()


class TestAybeResidual:
    def test_solution_family_member(self):
        assert aybe_residual(A2, basis_tensor(A2, 0, 1)).is_zero()

    def test_dim1_square_obstruction(self):
        r = Tensor2(A2_DIM1, [[a11]])
        residual = aybe_residual(A2_DIM1, r)
        assert list(residual.nonzero_entries()) == [(0, 0, 0, a11 ** 2)]
        assert residual.substitute({"a11": Scalar(0)}).is_zero()

    def test_single_surviving_contraction(self):
        # r = e2 (x) e1 on A2: only r13 r23 survives, giving e2 (x) e2 (x) e1
        residual = aybe_residual(A2, basis_tensor(A2, 1, 0))
        assert list(residual.nonzero_entries()) == [(1, 1, 0, Scalar(1))]

    def test_quadratic_scaling(self):
        t = Scalar.var("t")
        rng = random.Random(11)
        for _ in range(10):
            r = random_tensor(rng, A2)
            scaled = aybe_residual(A2, r.scale(t))
            plain = aybe_residual(A2, r)
            for i in range(2):
                for j in range(2):
                    for k in range(2):
                        assert scaled.t[i][j][k] == \
                            t ** 2 * plain.t[i][j][k]

    def test_zero_product_algebra_fully_general(self):
        r = Tensor2.generic(A5)
        assert aybe_residual(A5, r).is_zero()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            aybe_residual(A2, Tensor2(A2_DIM1, [[a11]]))


class TestInducedMap:
    def test_single_diagonal_term(self):
        r = Tensor2(A2, [[0, 0], [0, a22]])
        image = r.as_map().apply((Scalar(0), Scalar(1)))
        assert image == (Scalar(0), a22)

    def test_zero_tensor(self):
        image = Tensor2.zero(A2).as_map().apply((Scalar(1), Scalar(1)))
        assert all(v.is_zero() for v in image)

    def test_pairs_against_first_slot(self):
        r = Tensor2(A2, [[0, a12], [a21, 0]])
        image = r_as_map(r).apply((Scalar(1), Scalar(0)))
        assert image == (Scalar(0), a12)


class TestTensor3:
    def test_rendering(self):
        r = Tensor2(A2_DIM1, [[a11]])
        residual = aybe_residual(A2_DIM1, r)
        assert str(residual) == "a11^2*(e1 x e1 x e1)"
        assert str(Tensor3(A2_DIM1, [[[0]]])) == "0"
