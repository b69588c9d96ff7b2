"""Exact coefficient arithmetic: multivariate polynomials over the rationals.

Every quantity the engine manipulates (structure constants, tensor
coefficients, residuals) is a ``Scalar``: a polynomial with ``Fraction``
coefficients in named indeterminates such as ``a12`` or ``lam``.  All
arithmetic is exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

Rational = Fraction

# A monomial is a tuple of (name, exponent) pairs, sorted by name, with all
# exponents positive.  The empty tuple is the constant monomial.
Monomial = tuple

_ONE_MONOMIAL: Monomial = ()


def _monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def _monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_cmp(m1: Monomial, m2: Monomial) -> int:
    """Graded lexicographic comparison, names ordered lexicographically."""
    d1, d2 = _monomial_degree(m1), _monomial_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    e1, e2 = dict(m1), dict(m2)
    for name in sorted(set(e1) | set(e2)):
        a, b = e1.get(name, 0), e2.get(name, 0)
        if a != b:
            # higher power of the earliest differing name is lex-larger
            return 1 if a > b else -1
    return 0


_grlex_key = cmp_to_key(_grlex_cmp)


class Scalar:
    """A multivariate polynomial with exact rational coefficients.

    Terms are stored as a map from monomial to nonzero ``Fraction``; the
    representation is canonical, so two equal polynomials always compare
    equal and hash alike.  Instances are immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, value: "Scalar | Rational | int" = 0):
        if isinstance(value, Scalar):
            self.terms = value.terms
        else:
            q = Fraction(value)
            self.terms = {_ONE_MONOMIAL: q} if q else {}
        self._hash = None

    @classmethod
    def var(cls, name: str) -> "Scalar":
        """The degree-1 polynomial consisting of a single indeterminate."""
        s = cls.__new__(cls)
        s.terms = {((name, 1),): Fraction(1)}
        s._hash = None
        return s

    @classmethod
    def _from_terms(cls, terms: dict) -> "Scalar":
        s = cls.__new__(cls)
        s.terms = {m: c for m, c in terms.items() if c}
        s._hash = None
        return s

    # -- ring arithmetic --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Scalar | None":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other)
        return None

    def __add__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, None)
            if s is None:
                res[m] = c
            else:
                s = s + c
                if s:
                    res[m] = s
                else:
                    del res[m]
        return Scalar._from_terms(res)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._from_terms({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        res: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _monomial_mul(m1, m2)
                res[m] = res.get(m, Fraction(0)) + c1 * c2
        return Scalar._from_terms(res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int) or n < 0:
            raise ValueError("Scalar powers must be non-negative integers")
        result = Scalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            q = other.constant_value()
            if q is None:
                raise ValueError("can only divide by a rational constant")
            other = q
        return self * (Fraction(1) / Fraction(other))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        """True iff the canonical form has no terms."""
        return not self.terms

    def variables(self) -> set:
        return {name for m in self.terms for name, _ in m}

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self.terms:
            return -1
        return max(_monomial_degree(m) for m in self.terms)

    def constant_value(self) -> Rational | None:
        """The value as a Fraction if degree <= 0, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and _ONE_MONOMIAL in self.terms:
            return self.terms[_ONE_MONOMIAL]
        return None

    def leading_coefficient(self) -> Rational:
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms, key=_grlex_key)]

    def sign_normalized(self) -> "Scalar":
        """Scaled by -1 when the leading grlex coefficient is negative."""
        return -self if self.leading_coefficient() < 0 else self

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: dict) -> "Scalar":
        """Simultaneously replace indeterminates and re-canonicalize.

        ``bindings`` maps indeterminate names to Scalars (or rationals);
        unbound names are left in place.  Substitution is a ring
        homomorphism.
        """
        if not bindings:
            return self
        result = Scalar(0)
        for m, c in self.terms.items():
            term = Scalar(c)
            for name, e in m:
                repl = bindings.get(name)
                if repl is None:
                    factor = Scalar._from_terms({((name, e),): Fraction(1)})
                else:
                    if not isinstance(repl, Scalar):
                        repl = Scalar(repl)
                    factor = repl ** e
                term = term * factor
            result = result + term
        return result

    def evaluate(self, point: dict) -> Rational:
        """Evaluate at a rational point binding every indeterminate."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for name, e in m:
                if name not in point:
                    raise ValueError(f"no value for indeterminate {name!r}")
                v *= Fraction(point[name]) ** e
            total += v
        return total

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[m]
            factors = [name if e == 1 else f"{name}^{e}" for name, e in m]
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar(0)
ONE = Scalar(1)


def as_scalar(value) -> Scalar:
    """Coerce an int, Fraction or Scalar to a Scalar."""
    if isinstance(value, Scalar):
        return value
    return Scalar(value)


EQUALS_ZERO = "equals-zero"
NONZERO = "nonzero"


class Constraint:
    """A side condition carried as metadata, never folded into arithmetic.

    ``equals-zero`` constraints may carry a ``binding`` (var, replacement)
    orientation so the engine can realize them by substitution; ``nonzero``
    constraints only gate reporting.
    """

    __slots__ = ("kind", "expression", "binding")

    def __init__(self, kind: str, expression: Scalar, binding=None):
        if kind not in (EQUALS_ZERO, NONZERO):
            raise ValueError(f"unknown constraint kind {kind!r}")
        expression = as_scalar(expression)
        if kind == NONZERO and expression.is_zero():
            raise ValueError("a nonzero constraint cannot assert 0 != 0")
        self.kind = kind
        self.expression = expression
        self.binding = binding

    @classmethod
    def equality(cls, var: str, replacement) -> "Constraint":
        """The constraint var = replacement, oriented for substitution."""
        replacement = as_scalar(replacement)
        if var in replacement.variables():
            raise ValueError(f"binding for {var!r} mentions itself")
        return cls(EQUALS_ZERO, Scalar.var(var) - replacement,
                   binding=(var, replacement))

    @classmethod
    def nonzero(cls, expression) -> "Constraint":
        return cls(NONZERO, expression)

    def substitute(self, bindings: dict) -> "Constraint":
        """Push a substitution through the constraint's expressions."""
        binding = self.binding
        if binding is not None:
            var, repl = binding
            if var in bindings:
                raise ValueError(
                    f"substitution rebinds constrained name {var!r}")
            binding = (var, repl.substitute(bindings))
        c = Constraint.__new__(Constraint)
        c.kind = self.kind
        c.expression = self.expression.substitute(bindings)
        c.binding = binding
        return c

    def __eq__(self, other):
        if not isinstance(other, Constraint):
            return NotImplemented
        return (self.kind, self.expression, self.binding) == \
               (other.kind, other.expression, other.binding)

    def __str__(self) -> str:
        if self.kind == NONZERO:
            return f"{self.expression} != 0"
        if self.binding is not None:
            var, repl = self.binding
            return f"{var} = {repl}"
        return f"{self.expression} = 0"

    def __repr__(self) -> str:
        return f"Constraint({self})"


def binding_map(constraints) -> dict:
    """Collect the equality bindings of ``constraints``, rejecting cycles."""
    bindings = {}
    for c in constraints:
        if isinstance(c, Constraint):
            if c.kind != EQUALS_ZERO or c.binding is None:
                continue
            var, repl = c.binding
        else:
            var, repl = c
            repl = as_scalar(repl)
        if var in bindings:
            raise ValueError(f"duplicate binding for {var!r}")
        bindings[var] = repl
    # reject circular chains such as a = b, b = a
    state: dict = {}

    def visit(name):
        if state.get(name) == "done":
            return
        if state.get(name) == "open":
            raise ValueError(f"circular equality bindings through {name!r}")
        state[name] = "open"
        for dep in bindings[name].variables():
            if dep in bindings:
                visit(dep)
        state[name] = "done"

    for name in bindings:
        visit(name)
    return bindings


def apply_bindings(scalar: Scalar, constraints) -> Scalar:
    """Substitute the equality bindings of ``constraints`` into a Scalar.

    Bindings are applied repeatedly until the value is stable, so chains
    such as ``b = c`` after ``a = b`` resolve fully.  Circular binding
    sets are rejected.
    """
    bindings = binding_map(constraints)
    if not bindings:
        return scalar
    while True:
        updated = scalar
        for var, repl in bindings.items():
            updated = updated.substitute({var: repl})
        if updated == scalar:
            return updated
        scalar = updated
