"""Elements of A (x) A and A (x) A (x) A, and the Yang-Baxter residual.

A 2-tensor r = sum a[i][j] e_i (x) e_j is stored as its coefficient
matrix.  The residual of

    r12 r13 + r13 r23 - r23 r12

is expanded with the contractions

    r12 r13 = sum (e_i . e_j) (x) e_p (x) e_q   * a[i][p] a[j][q]
    r13 r23 = sum e_i (x) e_j (x) (e_p . e_q)   * a[i][p] a[j][q]
    r23 r12 = sum e_j (x) (e_i . e_q) (x) e_p   * a[i][p] a[j][q]

so a tensor solves the equation iff every slot of the residual is the
zero polynomial (after substituting any equality constraints).
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, as_scalar, apply_bindings
from .algebra import (Algebra, DimensionMismatch, OperatorMatrix,
                      format_combination)


class Tensor2:
    """An element of A (x) A with Scalar coefficients."""

    __slots__ = ("algebra", "a", "constraints")

    def __init__(self, algebra: Algebra, coefficients, constraints=()):
        self.algebra = algebra
        n = algebra.dim
        rows = tuple(tuple(as_scalar(v) for v in row) for row in coefficients)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionMismatch("coefficient matrix must be dim x dim")
        self.a = rows
        self.constraints = tuple(constraints)

    @classmethod
    def zero(cls, algebra: Algebra) -> "Tensor2":
        n = algebra.dim
        return cls(algebra, [[ZERO] * n for _ in range(n)])

    @classmethod
    def generic(cls, algebra: Algebra, prefix: str = "a") -> "Tensor2":
        """Fully general tensor with fresh coefficients ``a11, a12, ...``."""
        n = algebra.dim
        return cls(algebra, [[Scalar.var(f"{prefix}{i + 1}{j + 1}")
                              for j in range(n)] for i in range(n)])

    def sigma(self) -> "Tensor2":
        """Exchange of tensor slots; the coefficient matrix transpose."""
        n = self.algebra.dim
        return Tensor2(self.algebra,
                       [[self.a[j][i] for j in range(n)] for i in range(n)],
                       self.constraints)

    def is_antisymmetric(self) -> bool:
        n = self.algebra.dim
        return all((self.a[i][j] + self.a[j][i]).is_zero()
                   for i in range(n) for j in range(n))

    def is_symmetric(self) -> bool:
        n = self.algebra.dim
        return all((self.a[i][j] - self.a[j][i]).is_zero()
                   for i in range(n) for j in range(n))

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.a for v in row)

    def __add__(self, other: "Tensor2") -> "Tensor2":
        if other.algebra.dim != self.algebra.dim:
            raise DimensionMismatch("tensor dimensions differ")
        n = self.algebra.dim
        return Tensor2(self.algebra,
                       [[self.a[i][j] + other.a[i][j] for j in range(n)]
                        for i in range(n)])

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return self + other.scale(-1)

    def scale(self, factor) -> "Tensor2":
        factor = as_scalar(factor)
        n = self.algebra.dim
        return Tensor2(self.algebra,
                       [[factor * v for v in row] for row in self.a],
                       self.constraints)

    def substitute(self, bindings: dict) -> "Tensor2":
        return Tensor2(self.algebra,
                       [[v.substitute(bindings) for v in row]
                        for row in self.a],
                       constraints=[c.substitute(bindings)
                                    for c in self.constraints])

    def with_constraints_applied(self) -> "Tensor2":
        """Substitute this tensor's own equality bindings into its entries."""
        n = self.algebra.dim
        rows = [[apply_bindings(v, self.constraints) for v in row]
                for row in self.a]
        return Tensor2(self.algebra, rows, self.constraints)

    def as_map(self) -> OperatorMatrix:
        """The induced map A* -> A, pairing the input against slot one.

        r(e_i*) = sum_j a[i][j] e_j, so column i of the matrix is row i of
        the coefficient matrix.
        """
        n = self.algebra.dim
        rows = [[self.a[i][k] for i in range(n)] for k in range(n)]
        return OperatorMatrix(rows, "r")

    def apply_to_dual(self, dual_coeffs) -> "tuple":
        """Coefficients in A of r(a*) for a dual vector a* = sum u_i e_i*."""
        return self.as_map().apply(dual_coeffs)

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.a == other.a

    def __str__(self) -> str:
        names = self.algebra.basis_names
        parts = []
        n = self.algebra.dim
        for i in range(n):
            for j in range(n):
                v = self.a[i][j]
                if not v.is_zero():
                    parts.append((f"({names[i]} x {names[j]})", v))
        if not parts:
            return "0"
        return format_combination([v for _, v in parts],
                                  [k for k, _ in parts])

    def __repr__(self) -> str:
        return f"Tensor2({self})"


class Tensor3:
    """An element of A (x) A (x) A with Scalar coefficients."""

    __slots__ = ("algebra", "t")

    def __init__(self, algebra: Algebra, coefficients):
        self.algebra = algebra
        n = algebra.dim
        cube = tuple(tuple(tuple(as_scalar(v) for v in row) for row in plane)
                     for plane in coefficients)
        if len(cube) != n or any(len(p) != n for p in cube) or \
                any(len(r) != n for p in cube for r in p):
            raise DimensionMismatch("coefficient cube must be dim^3")
        self.t = cube

    def is_zero(self) -> bool:
        return all(v.is_zero()
                   for plane in self.t for row in plane for v in row)

    def nonzero_entries(self):
        """(i, j, k, value) for every nonzero slot, in index order."""
        n = self.algebra.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if not self.t[i][j][k].is_zero():
                        yield i, j, k, self.t[i][j][k]

    def substitute(self, bindings: dict) -> "Tensor3":
        return Tensor3(self.algebra,
                       [[[v.substitute(bindings) for v in row]
                         for row in plane] for plane in self.t])

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.t == other.t

    def __str__(self) -> str:
        names = self.algebra.basis_names
        entries = list(self.nonzero_entries())
        if not entries:
            return "0"
        keys = [f"({names[i]} x {names[j]} x {names[k]})"
                for i, j, k, _ in entries]
        return format_combination([v for *_, v in entries], keys)


def aybe_residual(algebra: Algebra, r: Tensor2) -> Tensor3:
    """Residual of r12 r13 + r13 r23 - r23 r12 as a Tensor3."""
    if r.algebra.dim != algebra.dim:
        raise DimensionMismatch("tensor does not live over this algebra")
    n = algebra.dim
    c = algebra.c
    a = r.a
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for p in range(n):
            aip = a[i][p]
            if aip.is_zero():
                continue
            for j in range(n):
                for q in range(n):
                    ajq = a[j][q]
                    if ajq.is_zero():
                        continue
                    w = aip * ajq
                    for k in range(n):
                        cij = c[i][j][k]
                        if not cij.is_zero():
                            out[k][p][q] = out[k][p][q] + w * cij
                        cpq = c[p][q][k]
                        if not cpq.is_zero():
                            out[i][j][k] = out[i][j][k] + w * cpq
                        ciq = c[i][q][k]
                        if not ciq.is_zero():
                            out[j][k][p] = out[j][k][p] - w * ciq
    return Tensor3(algebra, out)


def r_as_map(r: Tensor2) -> OperatorMatrix:
    """Module-level alias for Tensor2.as_map."""
    return r.as_map()
