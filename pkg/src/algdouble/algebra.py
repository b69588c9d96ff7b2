"""Finite-dimensional algebras presented by structure constants.

An algebra of dimension n is the table c[i][j][k] with
e_i . e_j = sum_k c[i][j][k] e_k.  Entries are Scalars, so parameterized
families (structure constants containing indeterminates) live in the same
type; such a family is associative iff its associativity residual is the
zero polynomial in every slot.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, as_scalar


class DimensionMismatch(ValueError):
    pass


def _freeze_vector(vec, dim):
    vec = tuple(as_scalar(v) for v in vec)
    if len(vec) != dim:
        raise DimensionMismatch(f"expected length {dim}, got {len(vec)}")
    return vec


def _freeze_matrix(rows, dim):
    return tuple(_freeze_vector(row, dim) for row in rows)


class Element:
    """A vector of Scalar coefficients over an algebra's basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = _freeze_vector(coeffs, algebra.dim)

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra,
                       [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra,
                       [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Element":
        return Element(self.algebra, [-a for a in self.coeffs])

    def scale(self, factor) -> "Element":
        factor = as_scalar(factor)
        return Element(self.algebra, [factor * a for a in self.coeffs])

    def substitute(self, bindings: dict) -> "Element":
        return Element(self.algebra,
                       [a.substitute(bindings) for a in self.coeffs])

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)

    def _check(self, other: "Element"):
        if self.algebra.dim != other.algebra.dim:
            raise DimensionMismatch("elements live over different dimensions")

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __str__(self) -> str:
        return format_combination(self.coeffs, self.algebra.basis_names)

    def __repr__(self) -> str:
        return f"Element({self})"


def format_combination(coeffs, names) -> str:
    """Render a linear combination of named basis vectors."""
    parts = []
    for c, name in zip(coeffs, names):
        if c.is_zero():
            continue
        if c == 1:
            body, negative = name, False
        elif c == -1:
            body, negative = name, True
        elif len(c.terms) > 1:
            body, negative = f"({c})*{name}", False
        elif c.leading_coefficient() < 0:
            body, negative = f"{-c}*{name}", True
        else:
            body, negative = f"{c}*{name}", False
        if not parts:
            parts.append("-" + body if negative else body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts) if parts else "0"


class OperatorMatrix:
    """A square Scalar matrix with a record of which operator it is."""

    __slots__ = ("entries", "meaning", "element")

    def __init__(self, entries, meaning: str = "", element=None):
        dim = len(entries)
        self.entries = _freeze_matrix(entries, dim)
        self.meaning = meaning
        self.element = element

    @property
    def dim(self) -> int:
        return len(self.entries)

    def transpose(self) -> "OperatorMatrix":
        n = self.dim
        rows = [[self.entries[j][i] for j in range(n)] for i in range(n)]
        meaning = {"L": "L*", "R": "R*", "L*": "L", "R*": "R"}.get(
            self.meaning, self.meaning + "^T")
        return OperatorMatrix(rows, meaning, self.element)

    def apply(self, coeffs):
        """Matrix-vector product on a coefficient vector."""
        n = self.dim
        if len(coeffs) != n:
            raise DimensionMismatch("operator/vector dimension mismatch")
        return tuple(
            sum((self.entries[i][j] * coeffs[j] for j in range(n)), ZERO)
            for i in range(n))

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        n = self.dim
        if other.dim != n:
            raise DimensionMismatch("operator dimensions differ")
        rows = [[sum((self.entries[i][k] * other.entries[k][j]
                      for k in range(n)), ZERO)
                 for j in range(n)] for i in range(n)]
        return OperatorMatrix(rows, f"{self.meaning}.{other.meaning}")

    def scale(self, factor) -> "OperatorMatrix":
        factor = as_scalar(factor)
        return OperatorMatrix([[factor * e for e in row]
                               for row in self.entries], self.meaning)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        n = self.dim
        if other.dim != n:
            raise DimensionMismatch("operator dimensions differ")
        rows = [[self.entries[i][j] + other.entries[i][j] for j in range(n)]
                for i in range(n)]
        return OperatorMatrix(rows, self.meaning)

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        rows = "; ".join(
            ", ".join(str(e) for e in row) for row in self.entries)
        return f"OperatorMatrix[{self.meaning}]({rows})"


class Algebra:
    """An algebra given by structure constants over named basis vectors."""

    __slots__ = ("dim", "basis_names", "c", "constraints")

    def __init__(self, dim: int, products: dict | None = None,
                 basis_names=None, constraints=(), table=None):
        """Build from sparse ``products`` or a full ``table``.

        ``products`` maps (i, j) basis-index pairs to coefficient vectors
        of length ``dim``; omitted pairs multiply to zero.  ``table`` is a
        complete dim x dim x dim nested sequence.
        """
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        if basis_names is None:
            basis_names = tuple(f"e{i + 1}" for i in range(dim))
        basis_names = tuple(basis_names)
        if len(basis_names) != dim or len(set(basis_names)) != dim:
            raise ValueError("basis names must be distinct, one per slot")
        self.basis_names = basis_names
        if table is not None:
            self.c = tuple(_freeze_matrix(plane, dim) for plane in table)
            if len(self.c) != dim:
                raise DimensionMismatch("structure constant table is ragged")
        else:
            products = products or {}
            full = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
            for (i, j), vec in products.items():
                full[i][j] = list(_freeze_vector(vec, dim))
            self.c = tuple(_freeze_matrix(plane, dim) for plane in full)
        self.constraints = tuple(constraints)

    # -- elements ----------------------------------------------------------

    def element(self, coeffs) -> Element:
        return Element(self, coeffs)

    def basis_element(self, i: int) -> Element:
        return Element(self, [Scalar(1) if k == i else ZERO
                              for k in range(self.dim)])

    def zero_element(self) -> Element:
        return Element(self, [ZERO] * self.dim)

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    # -- multiplication ----------------------------------------------------

    def multiply(self, x: Element, y: Element) -> Element:
        """Bilinear extension of the structure constants."""
        if x.algebra.dim != self.dim or y.algebra.dim != self.dim:
            raise DimensionMismatch("elements do not match algebra dimension")
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            xi = x.coeffs[i]
            if xi.is_zero():
                continue
            for j in range(n):
                yj = y.coeffs[j]
                if yj.is_zero():
                    continue
                w = xi * yj
                for k in range(n):
                    cijk = self.c[i][j][k]
                    if not cijk.is_zero():
                        out[k] = out[k] + w * cijk
        return Element(self, out)

    # -- residuals and operators --------------------------------------------

    def associativity_residual(self):
        """Coefficients of (e_i e_j) e_k - e_i (e_j e_k), all basis triples."""
        n = self.dim
        c = self.c
        res = [[[[ZERO] * n for _ in range(n)] for _ in range(n)]
               for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for m in range(n):
                        left = sum((c[i][j][p] * c[p][k][m] for p in range(n)
                                    if not c[i][j][p].is_zero()), ZERO)
                        right = sum((c[j][k][q] * c[i][q][m] for q in range(n)
                                     if not c[j][k][q].is_zero()), ZERO)
                        res[i][j][k][m] = left - right
        return res

    def is_associative(self) -> bool:
        return all(entry.is_zero()
                   for plane in self.associativity_residual()
                   for row in plane for col in row for entry in col)

    def left_matrix(self, x: Element) -> OperatorMatrix:
        """Matrix of y -> x.y; column j holds the coefficients of x.e_j."""
        n = self.dim
        cols = [self.multiply(x, self.basis_element(j)).coeffs
                for j in range(n)]
        rows = [[cols[j][k] for j in range(n)] for k in range(n)]
        return OperatorMatrix(rows, "L", x)

    def right_matrix(self, x: Element) -> OperatorMatrix:
        """Matrix of y -> y.x; column j holds the coefficients of e_j.x."""
        n = self.dim
        cols = [self.multiply(self.basis_element(j), x).coeffs
                for j in range(n)]
        rows = [[cols[j][k] for j in range(n)] for k in range(n)]
        return OperatorMatrix(rows, "R", x)

    def dual_left_matrix(self, x: Element) -> OperatorMatrix:
        """Matrix of L*(x) on the dual space: the transpose of L(x)."""
        return self.left_matrix(x).transpose()

    def dual_right_matrix(self, x: Element) -> OperatorMatrix:
        """Matrix of R*(x) on the dual space: the transpose of R(x)."""
        return self.right_matrix(x).transpose()

    # -- misc ----------------------------------------------------------------

    def substitute(self, bindings: dict) -> "Algebra":
        table = [[[entry.substitute(bindings) for entry in col]
                  for col in plane] for plane in self.c]
        return Algebra(self.dim, basis_names=self.basis_names,
                       constraints=[c.substitute(bindings)
                                    for c in self.constraints],
                       table=table)

    def product_equations(self):
        """Nonzero basis products as (i, j, Element) triples."""
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                vec = Element(self, self.c[i][j])
                if not vec.is_zero():
                    out.append((i, j, vec))
        return out

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.dim == other.dim and self.c == other.c

    def __repr__(self) -> str:
        eqs = "; ".join(
            f"{self.basis_names[i]}.{self.basis_names[j]} = {vec}"
            for i, j, vec in self.product_equations())
        return f"Algebra(dim={self.dim}: {eqs or 'zero product'})"


def determinant(rows) -> Scalar:
    """Determinant of a square Scalar matrix by cofactor expansion."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("determinant needs a square matrix")
    if n == 1:
        return as_scalar(rows[0][0])
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = ZERO
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [[rows[i][k] for k in range(n) if k != j]
                 for i in range(1, n)]
        cofactor = entry * determinant(minor)
        total = total + cofactor if j % 2 == 0 else total - cofactor
    return total


def residual_is_zero(residual) -> bool:
    """True iff a nested residual array contains only zero polynomials."""
    if isinstance(residual, Scalar):
        return residual.is_zero()
    return all(residual_is_zero(part) for part in residual)


def nonzero_residual_entries(residual, prefix=()):
    """Yield (index-path, Scalar) for every nonzero slot, in index order."""
    if isinstance(residual, Scalar):
        if not residual.is_zero():
            yield prefix, residual
        return
    for idx, part in enumerate(residual):
        yield from nonzero_residual_entries(part, prefix + (idx,))
