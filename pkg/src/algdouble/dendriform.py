"""Dendriform structures: a product split into left and right halves.

A dendriform structure on a basis e_1..e_n is a pair of structure
constant tables, written here as ``succ`` for x > y and ``prec`` for
x < y, subject to the three axioms

    (x < y) < z = x < (y * z)
    (x > y) < z = x > (y < z)
    x > (y > z) = (x * y) > z

with x * y = x < y + x > y.  The sum product is then associative, and a
structure is *compatible* with a parent algebra when the sums reproduce
the parent's structure constants.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, as_scalar
from .algebra import (Algebra, DimensionMismatch, OperatorMatrix,
                      determinant, format_combination, _freeze_matrix)
from .tensor import Tensor2, Tensor3


def _freeze_cube(table, dim):
    cube = tuple(tuple(tuple(as_scalar(v) for v in row) for row in plane)
                 for plane in table)
    if len(cube) != dim or any(len(p) != dim for p in cube) or \
            any(len(r) != dim for p in cube for r in p):
        raise DimensionMismatch("structure constant table must be dim^3")
    return cube


def _cube_from_products(dim, products):
    full = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), vec in (products or {}).items():
        vec = [as_scalar(v) for v in vec]
        if len(vec) != dim:
            raise DimensionMismatch("product vector has wrong length")
        full[i][j] = vec
    return full


class DendriformStructure:
    """Two structure-constant tables over a shared basis."""

    __slots__ = ("dim", "basis_names", "succ", "prec", "constraints",
                 "parent")

    def __init__(self, dim: int, succ=None, prec=None, basis_names=None,
                 constraints=(), parent: Algebra | None = None,
                 succ_table=None, prec_table=None):
        """Build from sparse ``succ``/``prec`` maps or full tables.

        The sparse maps send (i, j) index pairs to coefficient vectors,
        exactly as for :class:`Algebra`.
        """
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        if basis_names is None:
            basis_names = tuple(f"e{i + 1}" for i in range(dim))
        self.basis_names = tuple(basis_names)
        if succ_table is not None:
            self.succ = _freeze_cube(succ_table, dim)
        else:
            self.succ = _freeze_cube(_cube_from_products(dim, succ), dim)
        if prec_table is not None:
            self.prec = _freeze_cube(prec_table, dim)
        else:
            self.prec = _freeze_cube(_cube_from_products(dim, prec), dim)
        self.constraints = tuple(constraints)
        self.parent = parent

    # -- products ------------------------------------------------------------

    def _bilinear(self, table, x, y):
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            if x[i].is_zero():
                continue
            for j in range(n):
                if y[j].is_zero():
                    continue
                w = x[i] * y[j]
                for k in range(n):
                    if not table[i][j][k].is_zero():
                        out[k] = out[k] + w * table[i][j][k]
        return tuple(out)

    def succ_product(self, x, y):
        """Coefficient vector of x > y."""
        return self._bilinear(self.succ, x, y)

    def prec_product(self, x, y):
        """Coefficient vector of x < y."""
        return self._bilinear(self.prec, x, y)

    def star_product(self, x, y):
        """Coefficient vector of x * y = x < y + x > y."""
        p = self.prec_product(x, y)
        s = self.succ_product(x, y)
        return tuple(a + b for a, b in zip(p, s))

    def _basis_vec(self, i):
        return tuple(Scalar(1) if k == i else ZERO for k in range(self.dim))

    # -- operators -------------------------------------------------------------

    def _operator(self, product, meaning, left, x):
        n = self.dim
        if left:
            cols = [product(x, self._basis_vec(j)) for j in range(n)]
        else:
            cols = [product(self._basis_vec(j), x) for j in range(n)]
        rows = [[cols[j][k] for j in range(n)] for k in range(n)]
        return OperatorMatrix(rows, meaning)

    def succ_left(self, x) -> OperatorMatrix:
        return self._operator(self.succ_product, "L>", True, x)

    def succ_right(self, x) -> OperatorMatrix:
        return self._operator(self.succ_product, "R>", False, x)

    def prec_left(self, x) -> OperatorMatrix:
        return self._operator(self.prec_product, "L<", True, x)

    def prec_right(self, x) -> OperatorMatrix:
        return self._operator(self.prec_product, "R<", False, x)

    def star_left(self, x) -> OperatorMatrix:
        return self._operator(self.star_product, "L", True, x)

    def star_right(self, x) -> OperatorMatrix:
        return self._operator(self.star_product, "R", False, x)

    # -- residuals -------------------------------------------------------------

    def axiom_residuals(self):
        """Three dim^4 residual arrays, one per dendriform axiom.

        Entry [i][j][k][m] is the coefficient of e_m in the left-minus-right
        side of the axiom evaluated on (e_i, e_j, e_k).
        """
        n = self.dim
        basis = [self._basis_vec(i) for i in range(n)]
        first = [[[None] * n for _ in range(n)] for _ in range(n)]
        second = [[[None] * n for _ in range(n)] for _ in range(n)]
        third = [[[None] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    x, y, z = basis[i], basis[j], basis[k]
                    lhs = self.prec_product(self.prec_product(x, y), z)
                    rhs = self.prec_product(x, self.star_product(y, z))
                    first[i][j][k] = tuple(a - b for a, b in zip(lhs, rhs))
                    lhs = self.prec_product(self.succ_product(x, y), z)
                    rhs = self.succ_product(x, self.prec_product(y, z))
                    second[i][j][k] = tuple(a - b for a, b in zip(lhs, rhs))
                    lhs = self.succ_product(x, self.succ_product(y, z))
                    rhs = self.succ_product(self.star_product(x, y), z)
                    third[i][j][k] = tuple(a - b for a, b in zip(lhs, rhs))
        return first, second, third

    def is_dendriform(self) -> bool:
        return all(entry.is_zero()
                   for residual in self.axiom_residuals()
                   for plane in residual for row in plane
                   for vec in row for entry in vec)

    def sum_algebra(self) -> Algebra:
        """The associative algebra with products x * y = x < y + x > y."""
        n = self.dim
        table = [[[self.succ[i][j][k] + self.prec[i][j][k]
                   for k in range(n)] for j in range(n)] for i in range(n)]
        return Algebra(n, basis_names=self.basis_names,
                       constraints=self.constraints, table=table)

    def is_compatible_with_parent(self) -> bool:
        """True when succ + prec reproduces the parent's table exactly."""
        if self.parent is None:
            return True
        return self.sum_algebra().c == self.parent.c

    def substitute(self, bindings: dict) -> "DendriformStructure":
        subst = lambda cube: [[[v.substitute(bindings) for v in row]
                               for row in plane] for plane in cube]
        parent = self.parent.substitute(bindings) if self.parent else None
        return DendriformStructure(
            self.dim, basis_names=self.basis_names,
            constraints=[c.substitute(bindings) for c in self.constraints],
            parent=parent,
            succ_table=subst(self.succ), prec_table=subst(self.prec))

    def product_equations(self):
        """Nonzero basis products as (op, i, j, coeff-vector) tuples."""
        out = []
        for op, table in (("succ", self.succ), ("prec", self.prec)):
            for i in range(self.dim):
                for j in range(self.dim):
                    vec = table[i][j]
                    if any(not v.is_zero() for v in vec):
                        out.append((op, i, j, vec))
        return out

    def __repr__(self) -> str:
        sym = {"succ": ">", "prec": "<"}
        names = self.basis_names
        eqs = "; ".join(
            f"{names[i]} {sym[op]} {names[j]} = "
            f"{format_vec(vec, names)}"
            for op, i, j, vec in self.product_equations())
        return f"DendriformStructure(dim={self.dim}: {eqs or 'zero'})"


def format_vec(vec, names):
    return format_combination(vec, names)


def deq_residual(structure: DendriformStructure, r: Tensor2) -> Tensor3:
    """Residual of r12 * r13 - r13 < r23 - r23 > r12 as a Tensor3.

    The slot conventions mirror the Yang-Baxter contractions, with the
    product in the shared slot replaced by the indicated dendriform
    operation:

        r12 * r13 = sum (e_i * e_j) (x) e_p (x) e_q
        r13 < r23 = sum e_i (x) e_j (x) (e_p < e_q)
        r23 > r12 = sum e_j (x) (e_i > e_q) (x) e_p
    """
    n = structure.dim
    if r.algebra.dim != n:
        raise DimensionMismatch("tensor does not live over this structure")
    a = r.a
    succ, prec = structure.succ, structure.prec
    star = [[[succ[i][j][k] + prec[i][j][k] for k in range(n)]
             for j in range(n)] for i in range(n)]
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
                        if not star[i][j][k].is_zero():
                            out[k][p][q] = out[k][p][q] + w * star[i][j][k]
                        if not prec[p][q][k].is_zero():
                            out[i][j][k] = out[i][j][k] - w * prec[p][q][k]
                        if not succ[i][q][k].is_zero():
                            out[j][k][p] = out[j][k][p] - w * succ[i][q][k]
    # the sum algebra is a convenient carrier for the 3-tensor
    return Tensor3(structure.sum_algebra(), out)


def dendriform_coboundaries(structure: DendriformStructure, r: Tensor2):
    """The comultiplication pair induced by a symmetric tensor.

    For each basis element x = e_m this returns the 2-tensors

        (id (x) L(x) - R<(x) (x) id) applied to -r
        (id (x) L>(x) - R(x) (x) id) applied to  r

    as two lists of Tensor2 values, in basis order.
    """
    n = structure.dim
    a = r.a
    succ_part, prec_part = [], []
    for m in range(n):
        x = structure._basis_vec(m)
        lm = structure.star_left(x).entries
        rm_prec = structure.prec_right(x).entries
        lm_succ = structure.succ_left(x).entries
        rm = structure.star_right(x).entries
        # (id (x) M) r has matrix a.M^T; (M (x) id) r has matrix M.a
        succ_rows = [[sum((rm_prec[i][p] * a[p][k] for p in range(n)), ZERO)
                      - sum((a[i][p] * lm[k][p] for p in range(n)), ZERO)
                      for k in range(n)] for i in range(n)]
        prec_rows = [[sum((a[i][p] * lm_succ[k][p] for p in range(n)), ZERO)
                      - sum((rm[i][p] * a[p][k] for p in range(n)), ZERO)
                      for k in range(n)] for i in range(n)]
        succ_part.append(Tensor2(r.algebra, succ_rows))
        prec_part.append(Tensor2(r.algebra, prec_rows))
    return succ_part, prec_part


def anti_isomorphism_check(d1: DendriformStructure,
                           d2: DendriformStructure, f) -> bool:
    """Check F(x >1 y) = F(y) <2 F(x) and F(x <1 y) = F(y) >2 F(x).

    ``f`` is a square Scalar matrix whose column i is the image of e_i.
    Returns True iff both identities hold on every basis pair and det(F)
    is not the zero polynomial.
    """
    n = d1.dim
    if d2.dim != n:
        raise DimensionMismatch("structures have different dimensions")
    rows = _freeze_matrix(f, n)
    if determinant(rows).is_zero():
        return False
    cols = [tuple(rows[k][i] for k in range(n)) for i in range(n)]

    def image(vec):
        return tuple(
            sum((rows[k][i] * vec[i] for i in range(n)), ZERO)
            for k in range(n))

    for i in range(n):
        for j in range(n):
            ei = d1._basis_vec(i)
            ej = d1._basis_vec(j)
            lhs = image(d1.succ_product(ei, ej))
            rhs = d2.prec_product(cols[j], cols[i])
            if any((x - y) != 0 for x, y in zip(lhs, rhs)):
                return False
            lhs = image(d1.prec_product(ei, ej))
            rhs = d2.succ_product(cols[j], cols[i])
            if any((x - y) != 0 for x, y in zip(lhs, rhs)):
                return False
    return True


def splitting_unknowns(dim: int):
    """Names of the splitting coefficients, succ first, in index order."""
    succ_names = [[[f"a{k + 1}_{i + 1}{j + 1}" for k in range(dim)]
                   for j in range(dim)] for i in range(dim)]
    prec_names = [[[f"b{k + 1}_{i + 1}{j + 1}" for k in range(dim)]
                   for j in range(dim)] for i in range(dim)]
    return succ_names, prec_names


def splitting_system(algebra: Algebra):
    """Polynomial system for splitting an associative product.

    Unknowns are one coefficient per slot of the two candidate tables;
    the equations are the linear compatibility conditions (the two tables
    must sum to the parent's structure constants) plus the quadratic
    residuals of the three dendriform axioms.
    """
    from .solver import PolySystem

    n = algebra.dim
    succ_names, prec_names = splitting_unknowns(n)
    succ = [[[Scalar.var(succ_names[i][j][k]) for k in range(n)]
             for j in range(n)] for i in range(n)]
    prec = [[[Scalar.var(prec_names[i][j][k]) for k in range(n)]
             for j in range(n)] for i in range(n)]
    generic = DendriformStructure(n, succ_table=succ, prec_table=prec,
                                  basis_names=algebra.basis_names)
    equations = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                eq = succ[i][j][k] + prec[i][j][k] - algebra.c[i][j][k]
                equations.append(eq.sign_normalized())
    for residual in generic.axiom_residuals():
        for plane in residual:
            for row in plane:
                for vec in row:
                    for entry in vec:
                        if not entry.is_zero():
                            equations.append(entry.sign_normalized())
    unknowns = sorted({name
                       for plane in succ_names for row in plane
                       for name in row} |
                      {name
                       for plane in prec_names for row in plane
                       for name in row})
    return PolySystem(unknowns, equations, ())
