import random
from fractions import Fraction

import pytest

from algdouble.scalar import (Scalar, Constraint, EQUALS_ZERO, NONZERO,
                              apply_bindings)


def var(name):
    return Scalar.var(name)


def random_scalar(rng, names=("a", "b", "c"), max_terms=4):
    total = Scalar(0)
    for _ in range(rng.randint(0, max_terms)):
        term = Scalar(Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
        for _ in range(rng.randint(0, 3)):
            term = term * var(rng.choice(names))
        total = total + term
    return total


class TestArithmetic:
    def test_rational_add(self):
        assert Scalar(Fraction(1, 2)) + Scalar(Fraction(1, 3)) == Fraction(5, 6)

    def test_monomial_product(self):
        assert var("a11") * var("a11") == var("a11") ** 2
        assert str(var("a11") * var("a11")) == "a11^2"

    def test_cancellation_under_substitution(self):
        s = (var("a12") + var("a21")).substitute({"a21": -var("a12")})
        assert s.is_zero()

    def test_pow(self):
        s = var("x") + 1
        assert s ** 3 == s * s * s
        assert s ** 0 == Scalar(1)
        with pytest.raises(ValueError):
            s ** -1

    def test_truediv_by_rational(self):
        assert (var("x") * 6) / 3 == var("x") * 2
        with pytest.raises(ValueError):
            var("x") / var("y")


class TestSubstitute:
    def test_kills_product_at_lambda_one(self):
        s = Scalar(1) - var("lam")
        assert s.substitute({"lam": Scalar(1)}).is_zero()

    def test_empty_binding_is_identity(self):
        assert var("a11").substitute({}) == var("a11")

    def test_forced_by_ring_laws(self):
        s = (var("a12") * var("a21")).substitute({"a21": -var("a12")})
        assert s == -(var("a12") ** 2)

    def test_simultaneous_not_sequential(self):
        # x -> y, y -> x swaps rather than collapsing
        s = (var("x") - var("y")).substitute({"x": var("y"), "y": var("x")})
        assert s == var("y") - var("x")


class TestZeroTest:
    def test_difference(self):
        assert (var("a12") - var("a12")).is_zero()

    def test_sum_of_distinct(self):
        assert not (var("a12") + var("a21")).is_zero()

    def test_zero_annihilates(self):
        assert (var("a11") ** 2 * Scalar(0)).is_zero()


class TestRingLaws:
    def test_random_triples(self):
        rng = random.Random(20240817)
        for _ in range(1000):
            x = random_scalar(rng)
            y = random_scalar(rng)
            z = random_scalar(rng)
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x + y == y + x
            assert x * y == y * x
            assert x * (y + z) == x * y + x * z

    def test_substitute_is_ring_homomorphism(self):
        rng = random.Random(91)
        for _ in range(300):
            x = random_scalar(rng)
            y = random_scalar(rng)
            bindings = {"a": random_scalar(rng, names=("u", "v")),
                        "b": Scalar(rng.randint(-3, 3))}
            assert (x * y).substitute(bindings) == \
                x.substitute(bindings) * y.substitute(bindings)
            assert (x + y).substitute(bindings) == \
                x.substitute(bindings) + y.substitute(bindings)

    def test_canonical_form_unique(self):
        a, b = var("a"), var("b")
        first = (a + b) * (a - b)
        second = a * a - b * b
        assert first == second
        assert hash(first) == hash(second)
        assert str(first) == str(second)


class TestRendering:
    def test_zero(self):
        assert str(Scalar(0)) == "0"

    def test_rational_display(self):
        assert str(Scalar(Fraction(-3, 2))) == "-3/2"
        assert str(Scalar(7)) == "7"

    def test_graded_lex_order(self):
        a, b = var("a"), var("b")
        s = Scalar(1) + a + b * b + a * b
        assert str(s) == "a*b + b^2 + a + 1"

    def test_unit_coefficients_suppressed(self):
        assert str(var("x") - var("y")) == "x - y"
        assert str(-var("x")) == "-x"
        assert str(Scalar(2) * var("x") * var("x")) == "2*x^2"

    def test_evaluate(self):
        s = var("x") * var("y") + 1
        assert s.evaluate({"x": 2, "y": Fraction(1, 2)}) == 2
        with pytest.raises(ValueError):
            s.evaluate({"x": 2})


class TestConstraint:
    def test_nonzero_rejects_zero_expression(self):
        with pytest.raises(ValueError):
            Constraint(NONZERO, Scalar(0))

    def test_equality_binding(self):
        c = Constraint.equality("a21", -var("a12"))
        assert c.kind == EQUALS_ZERO
        assert c.binding == ("a21", -var("a12"))
        assert str(c) == "a21 = -a12"

    def test_self_referential_binding_rejected(self):
        with pytest.raises(ValueError):
            Constraint.equality("x", var("x") + 1)

    def test_apply_bindings_chains(self):
        cs = [Constraint.equality("a", var("b")),
              Constraint.equality("b", Scalar(2))]
        assert apply_bindings(var("a") + var("b"), cs) == Scalar(4)

    def test_apply_bindings_detects_cycles(self):
        cs = [Constraint.equality("a", var("b")),
              Constraint.equality("b", var("a"))]
        with pytest.raises(ValueError):
            apply_bindings(var("a"), cs)
