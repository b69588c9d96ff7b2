import random
from fractions import Fraction

import pytest

from algdouble.scalar import Scalar
from algdouble.algebra import (Algebra, DimensionMismatch, OperatorMatrix,
                               determinant, residual_is_zero,
                               nonzero_residual_entries)

# the seven 2-dimensional associative algebras of the bundled catalog
A1 = Algebra(2, {(0, 0): [0, 1]})
A2 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1]})
A3 = Algebra(2, {(0, 0): [1, 0], (1, 0): [0, 1]})
A4 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]})
A5 = Algebra(2)
A6 = Algebra(2, {(1, 1): [0, 1]})
A7 = Algebra(2, {(0, 0): [1, 0], (1, 1): [0, 1]})
ALL_DIM2 = [A1, A2, A3, A4, A5, A6, A7]

A2_DIM1 = Algebra(1, {(0, 0): [1]})


def brute_force_assoc_residual(algebra):
    """Oracle: expand (xy)z - x(yz) triple by triple via multiply only."""
    n = algebra.dim
    basis = algebra.basis()
    out = []
    for i in range(n):
        plane = []
        for j in range(n):
            row = []
            for k in range(n):
                left = algebra.multiply(
                    algebra.multiply(basis[i], basis[j]), basis[k])
                right = algebra.multiply(
                    basis[i], algebra.multiply(basis[j], basis[k]))
                row.append((left - right).coeffs)
            plane.append(row)
        out.append(plane)
    return out


class TestMultiply:
    def test_square_of_first_basis_vector(self):
        e1 = A1.basis_element(0)
        assert A1.multiply(e1, e1) == A1.basis_element(1)

    def test_zero_left_factor(self):
        for alg in ALL_DIM2:
            assert alg.multiply(alg.zero_element(),
                                alg.basis_element(1)).is_zero()

    def test_unlisted_product_is_zero(self):
        assert A2.multiply(A2.basis_element(1), A2.basis_element(0)).is_zero()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            A2.multiply(A2_DIM1.basis_element(0), A2.basis_element(0))


class TestAssociativityResidual:
    def test_zero_product_algebra(self):
        assert residual_is_zero(A5.associativity_residual())

    def test_all_catalog_algebras_associative(self):
        for alg in ALL_DIM2 + [A2_DIM1, Algebra(1)]:
            assert alg.is_associative()

    def test_perturbed_algebra_fails(self):
        perturbed = Algebra(2, {(0, 0): [0, 1], (1, 1): [1, 0]})
        residual = perturbed.associativity_residual()
        entries = dict(nonzero_residual_entries(residual))
        assert entries == {
            (0, 0, 1, 0): Scalar(1),
            (0, 1, 1, 1): Scalar(-1),
            (1, 0, 0, 0): Scalar(-1),
            (1, 1, 0, 1): Scalar(1),
        }

    def test_matches_brute_force_oracle(self):
        rng = random.Random(7)
        for _ in range(20):
            table = [[[Scalar(rng.randint(-2, 2)) for _ in range(2)]
                      for _ in range(2)] for _ in range(2)]
            alg = Algebra(2, table=table)
            residual = alg.associativity_residual()
            oracle = brute_force_assoc_residual(alg)
            for i in range(2):
                for j in range(2):
                    for k in range(2):
                        assert tuple(residual[i][j][k]) == oracle[i][j][k]


class TestOperators:
    def test_left_matrix_dim1(self):
        e1 = A2_DIM1.basis_element(0)
        assert A2_DIM1.left_matrix(e1).entries == ((Scalar(1),),)

    def test_left_matrix_of_zero(self):
        m = A3.left_matrix(A3.zero_element())
        assert all(v.is_zero() for row in m.entries for v in row)

    def test_right_matrix_identity(self):
        m = A3.right_matrix(A3.basis_element(0))
        assert m.entries == ((Scalar(1), Scalar(0)), (Scalar(0), Scalar(1)))

    def test_dual_right_dim1(self):
        e1 = A2_DIM1.basis_element(0)
        assert A2_DIM1.dual_right_matrix(e1).entries == ((Scalar(1),),)

    def test_dual_is_transpose(self):
        rng = random.Random(13)
        for alg in ALL_DIM2:
            x = alg.element([Scalar(rng.randint(-3, 3)) for _ in range(2)])
            assert alg.dual_left_matrix(x).entries == \
                alg.left_matrix(x).transpose().entries
            assert alg.dual_right_matrix(x).entries == \
                alg.right_matrix(x).transpose().entries

    def test_dual_left_identity_for_left_unit(self):
        m = A2.dual_left_matrix(A2.basis_element(0))
        assert m.entries == ((Scalar(1), Scalar(0)), (Scalar(0), Scalar(1)))

    def test_operators_linear_in_element(self):
        alpha, beta = Scalar.var("al"), Scalar.var("be")
        rng = random.Random(3)
        for alg in ALL_DIM2:
            x = alg.element([Scalar(rng.randint(-2, 2)) for _ in range(2)])
            y = alg.element([Scalar(rng.randint(-2, 2)) for _ in range(2)])
            combo = x.scale(alpha) + y.scale(beta)
            expect = alg.left_matrix(x).scale(alpha) + \
                alg.left_matrix(y).scale(beta)
            assert alg.left_matrix(combo).entries == expect.entries

    def test_associativity_via_operator_identities(self):
        # associative iff L(ei.ej) = L(ei)L(ej) and R(ei.ej) = R(ej)R(ei)
        for alg in ALL_DIM2:
            for i in range(2):
                for j in range(2):
                    ei, ej = alg.basis_element(i), alg.basis_element(j)
                    prod = alg.multiply(ei, ej)
                    assert alg.left_matrix(prod).entries == \
                        (alg.left_matrix(ei) @ alg.left_matrix(ej)).entries
                    assert alg.right_matrix(prod).entries == \
                        (alg.right_matrix(ej) @ alg.right_matrix(ei)).entries


class TestDeterminant:
    def test_identity(self):
        rows = [[Scalar(1), Scalar(0)], [Scalar(0), Scalar(1)]]
        assert determinant(rows) == Scalar(1)

    def test_symbolic_three_by_three(self):
        x = Scalar.var("x")
        rows = [[x, Scalar(1), Scalar(0)],
                [Scalar(0), x, Scalar(1)],
                [Scalar(1), Scalar(0), x]]
        assert determinant(rows) == x ** 3 + 1

    def test_rejects_ragged(self):
        with pytest.raises(DimensionMismatch):
            determinant([[Scalar(1)], [Scalar(1), Scalar(2)]])


class TestNames:
    def test_duplicate_basis_names_rejected(self):
        with pytest.raises(ValueError):
            Algebra(2, basis_names=("e1", "e1"))

    def test_element_rendering(self):
        e = A2.element([Scalar(Fraction(-1, 2)), Scalar(1)])
        assert str(e) == "-1/2*e1 + e2"
