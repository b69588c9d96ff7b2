import itertools
import random
from fractions import Fraction

import pytest

from algdouble.scalar import Scalar, Constraint
from algdouble.algebra import Algebra
from algdouble.tensor import Tensor2
from algdouble.dendriform import DendriformStructure
from algdouble.solver import (PolySystem, UnboundUnknown, extract_aybe_system,
                              extract_deq_system, generic_tensor,
                              verify_family, grid_scan)

a11, a12, a21, a22 = (Scalar.var(n) for n in ("a11", "a12", "a21", "a22"))

A2_DIM1 = Algebra(1, {(0, 0): [1]})
A2 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1]})
A5 = Algebra(2)


def oracle_aybe_equations(algebra):
    """Independent expansion of the three contractions, term by term."""
    n = algebra.dim
    c = algebra.c
    coeff = [[Scalar.var(f"a{i + 1}{j + 1}") for j in range(n)]
             for i in range(n)]
    residual = {}
    for i, p, j, q in itertools.product(range(n), repeat=4):
        w = coeff[i][p] * coeff[j][q]
        for k in range(n):
            residual[(k, p, q)] = residual.get((k, p, q), Scalar(0)) \
                + w * c[i][j][k]
            residual[(i, j, k)] = residual.get((i, j, k), Scalar(0)) \
                + w * c[p][q][k]
            residual[(j, k, p)] = residual.get((j, k, p), Scalar(0)) \
                - w * c[i][q][k]
    return [residual[key].sign_normalized()
            for key in sorted(residual) if not residual[key].is_zero()]


class TestExtraction:
    def test_unital_line(self):
        system = extract_aybe_system(A2_DIM1)
        assert system.unknowns == ("a11",)
        assert list(system.equations) == [a11 ** 2]

    def test_zero_plane_has_empty_system(self):
        system = extract_aybe_system(A5)
        assert system.equations == ()

    def test_two_dimensional_against_oracle(self):
        system = extract_aybe_system(A2)
        oracle = oracle_aybe_equations(A2)
        assert sorted(map(str, system.equations)) == sorted(map(str, oracle))
        assert len(system.equations) == 8
        assert set().union(*(e.variables() for e in system.equations)) <= \
            {"a11", "a12", "a21", "a22"}

    def test_extraction_is_stable(self):
        for alg in (A2, A5, A2_DIM1):
            first = extract_aybe_system(alg)
            second = extract_aybe_system(alg)
            assert first.equations == second.equations
            assert first.unknowns == second.unknowns

    def test_deq_zero_structure(self):
        system = extract_deq_system(DendriformStructure(1))
        assert system.equations == ()

    def test_deq_dim1_split(self):
        structure = DendriformStructure(1, succ={(0, 0): [1]})
        system = extract_deq_system(structure)
        # e1 > e1 = e1, e1 < e1 = 0: residual (1 - 0 - 1) a11^2 vanishes
        assert system.equations == ()

    def test_deq_dim1_split_residual_always_cancels(self):
        # in dimension 1 the * term always cancels against the two halves
        structure = DendriformStructure(1, succ={(0, 0): [2]},
                                        prec={(0, 0): [-1]})
        assert extract_deq_system(structure).equations == ()

    def test_deq_two_dimensional_system(self):
        structure = DendriformStructure(
            2, prec={(0, 0): [1, 0], (0, 1): [0, 1]})
        system = extract_deq_system(structure)
        assert system.equations
        # claimed family (0 0; 0 a22) solves it, a generic tensor does not
        assert verify_family(system, {"a11": 0, "a12": 0, "a21": 0,
                                      "a22": a22})
        assert not verify_family(system, {"a11": a11, "a12": a12,
                                          "a21": a21, "a22": a22})


class TestVerifyFamily:
    def test_first_family(self):
        system = extract_aybe_system(A2)
        family = {"a11": 0, "a21": 0, "a12": a12, "a22": a22}
        assert verify_family(system, family)

    def test_constrained_family(self):
        system = extract_aybe_system(A2)
        family = {"a11": 0, "a22": 0, "a12": a12, "a21": a21}
        equalities = [Constraint.equality("a21", -a12)]
        assert verify_family(system, family, equalities)
        assert not verify_family(system, family)

    def test_free_coefficient_fails_on_the_line(self):
        system = extract_aybe_system(A2_DIM1)
        assert not verify_family(system, {"a11": a11})

    def test_unbound_unknown(self):
        system = extract_aybe_system(A2)
        with pytest.raises(UnboundUnknown):
            verify_family(system, {"a11": 0})

    def test_unoriented_equality_rejected(self):
        from algdouble.scalar import EQUALS_ZERO
        system = extract_aybe_system(A2)
        family = {"a11": 0, "a22": 0, "a12": a12, "a21": a21}
        bare = Constraint(EQUALS_ZERO, a12 + a21)
        with pytest.raises(ValueError):
            verify_family(system, family, [bare])


class TestGridScan:
    def test_unital_line_grid(self):
        system = extract_aybe_system(A2_DIM1)
        result = grid_scan(system, range(-2, 3))
        assert len(result) == 5
        assert result.satisfying_points() == [{"a11": 0}]

    def test_zero_plane_grid(self):
        system = extract_aybe_system(A5)
        result = grid_scan(system, (-1, 0, 1))
        assert len(result) == 81
        assert len(result.satisfying_points()) == 81

    def test_side_conditions_gate_satisfaction(self):
        system = PolySystem(("x",), [Scalar.var("x") ** 2 - 1],
                            [Constraint.nonzero(Scalar.var("x") - 1)])
        result = grid_scan(system, (-1, 0, 1))
        assert result.satisfying_points() == [{"x": -1}]

    def test_guard_on_grid_size(self):
        system = extract_aybe_system(A2)
        with pytest.raises(ValueError):
            grid_scan(system, range(100))

    def test_free_parameters_rejected(self):
        system = PolySystem(("x",), [Scalar.var("x") - Scalar.var("t")])
        with pytest.raises(UnboundUnknown):
            grid_scan(system, (0, 1))

    def test_scan_soundness_against_verify_family(self):
        system = extract_aybe_system(A2)
        result = grid_scan(system, (-1, 0, 1))
        rng = random.Random(17)
        sample = rng.sample(result.points, 30)
        satisfying = [p for p, ok in result.points if ok]
        for point, ok in sample:
            if ok:
                assert verify_family(system, point)
        for point in satisfying:
            assert verify_family(system, point)

    def test_enumeration_order_row_major(self):
        system = PolySystem(("x", "y"), [])
        result = grid_scan(system, (0, 1))
        order = [tuple(p.values()) for p, _ in result.points]
        assert order == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_values_are_exact_fractions(self):
        system = PolySystem(("x",), [Scalar.var("x") * 3 - 1])
        result = grid_scan(system, (Fraction(1, 3), 1))
        assert result.satisfying_points() == [{"x": Fraction(1, 3)}]
