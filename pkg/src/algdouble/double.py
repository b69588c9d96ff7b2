"""Double constructions on A + A* and the checks they must satisfy.

Given an algebra A with dual basis pairing <e_i, e_j*> = delta_ij, both
constructions here produce a product table on the 2n-dimensional space
with basis (e_1..e_n, e_1*..e_n*):

* the Frobenius double, from an antisymmetric Yang-Baxter solution,
  carrying the symmetric pairing form B(x + a*, y + b*) = <x,b*> + <a*,y>;
* the Connes-cocycle double, from a symmetric D-equation solution in a
  dendriform structure, carrying the antisymmetric form
  omega(x + a*, y + b*) = -<x,b*> + <a*,y>.

Every property the constructions promise (associativity, invariance, the
cyclic cocycle identity, nondegeneracy, subalgebra closure) is exposed as
an exact residual so a harness can verify it slot by slot.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, as_scalar
from .algebra import (Algebra, DimensionMismatch, determinant,
                      residual_is_zero, nonzero_residual_entries)
from .tensor import Tensor2, aybe_residual
from .dendriform import DendriformStructure, deq_residual

FROBENIUS = "frobenius"
CONNES = "connes"

SYMMETRIC_FORM = "B-symmetric"
ANTISYMMETRIC_FORM = "omega-antisymmetric"


class PreconditionError(ValueError):
    """A double construction was fed data violating its hypotheses."""

    def __init__(self, message: str, offending=None):
        if offending is not None:
            path, value = offending
            message = f"{message} (first offending entry {path}: {value})"
        super().__init__(message)
        self.offending = offending


class BilinearFormMatrix:
    """Gram matrix of a bilinear form on A + A* in the standard basis."""

    __slots__ = ("gram", "flavor")

    def __init__(self, gram, flavor: str):
        dim = len(gram)
        rows = tuple(tuple(as_scalar(v) for v in row) for row in gram)
        if any(len(r) != dim for r in rows):
            raise DimensionMismatch("Gram matrix must be square")
        self.gram = rows
        self.flavor = flavor

    def value(self, u, v) -> Scalar:
        """The form evaluated on two coefficient vectors."""
        n = len(self.gram)
        if len(u) != n or len(v) != n:
            raise DimensionMismatch("vector does not match the form")
        total = ZERO
        for i in range(n):
            if u[i].is_zero():
                continue
            for j in range(n):
                g = self.gram[i][j]
                if not g.is_zero() and not v[j].is_zero():
                    total = total + u[i] * g * v[j]
        return total


def symmetric_pairing_form(n: int) -> BilinearFormMatrix:
    """Gram [[0, I], [I, 0]] of the natural symmetric pairing."""
    gram = [[Scalar(1) if abs(i - j) == n else ZERO for j in range(2 * n)]
            for i in range(2 * n)]
    return BilinearFormMatrix(gram, SYMMETRIC_FORM)


def antisymmetric_pairing_form(n: int) -> BilinearFormMatrix:
    """Gram [[0, -I], [I, 0]] of the natural antisymmetric pairing."""
    gram = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        gram[i][n + i] = Scalar(-1)
        gram[n + i][i] = Scalar(1)
    return BilinearFormMatrix(gram, ANTISYMMETRIC_FORM)


class DoubleAlgebra:
    """A 2n-dimensional product table on A + A*."""

    __slots__ = ("base", "algebra", "kind", "dual_succ", "dual_prec")

    def __init__(self, base, algebra: Algebra, kind: str,
                 dual_succ=None, dual_prec=None):
        self.base = base
        self.algebra = algebra
        self.kind = kind
        # for the Connes kind: the split dual products a* > b*, a* < b*,
        # stored as n x n arrays of dual-part coefficient vectors
        self.dual_succ = dual_succ
        self.dual_prec = dual_prec

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def base_dim(self) -> int:
        return self.algebra.dim // 2

    def product_table(self):
        return self.algebra.c

    def block_closure(self):
        """(A closed, A* closed): no products leaking across the blocks."""
        n = self.base_dim
        c = self.algebra.c
        a_closed = all(c[i][j][k].is_zero()
                       for i in range(n) for j in range(n)
                       for k in range(n, 2 * n))
        dual_closed = all(c[i][j][k].is_zero()
                          for i in range(n, 2 * n) for j in range(n, 2 * n)
                          for k in range(n))
        return a_closed, dual_closed


def double_basis_names(base_names):
    return tuple(base_names) + tuple(f"f{i + 1}" for i in range(len(base_names)))


def _embed(vec_a, vec_dual, n):
    vec_a = list(vec_a) if vec_a is not None else [ZERO] * n
    vec_dual = list(vec_dual) if vec_dual is not None else [ZERO] * n
    return tuple(vec_a + vec_dual)


def _unit(n, i):
    return tuple(Scalar(1) if k == i else ZERO for k in range(n))


def frobenius_double(algebra: Algebra, r: Tensor2):
    """Double construction from an antisymmetric Yang-Baxter solution.

    The products extend A's own product by

        a* . b* = R*(r(a*)) b* + L*(r(b*)) a*
        x  . a* = x r(a*) - r(R*(x) a*) + R*(x) a*
        a* . x  = r(a*) x - r(L*(x) a*) + L*(x) a*

    and come paired with the symmetric form B.
    """
    n = algebra.dim
    assoc = algebra.associativity_residual()
    if not residual_is_zero(assoc):
        path, value = next(nonzero_residual_entries(assoc))
        raise PreconditionError("base algebra is not associative",
                                (path, value))
    if not r.is_antisymmetric():
        bad = next((i, j) for i in range(n) for j in range(n)
                   if not (r.a[i][j] + r.a[j][i]).is_zero())
        raise PreconditionError("tensor is not antisymmetric",
                                (bad, r.a[bad[0]][bad[1]] + r.a[bad[1]][bad[0]]))
    residual = aybe_residual(algebra, r)
    if not residual.is_zero():
        i, j, k, value = next(residual.nonzero_entries())
        raise PreconditionError("tensor does not solve the Yang-Baxter "
                                "equation", ((i, j, k), value))

    rmap = r.as_map()
    table = [[None] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            table[i][j] = _embed(algebra.c[i][j], None, n)
    for a_idx in range(n):
        ra = algebra.element(rmap.apply(_unit(n, a_idx)))
        rstar_ra = algebra.dual_right_matrix(ra)
        for b_idx in range(n):
            rb = algebra.element(rmap.apply(_unit(n, b_idx)))
            lstar_rb = algebra.dual_left_matrix(rb)
            dual = tuple(x + y for x, y in zip(
                rstar_ra.apply(_unit(n, b_idx)),
                lstar_rb.apply(_unit(n, a_idx))))
            table[n + a_idx][n + b_idx] = _embed(None, dual, n)
    for i in range(n):
        x = algebra.basis_element(i)
        rstar_x = algebra.dual_right_matrix(x)
        lstar_x = algebra.dual_left_matrix(x)
        for a_idx in range(n):
            astar = _unit(n, a_idx)
            ra = algebra.element(rmap.apply(astar))
            # x . a*
            dual_part = rstar_x.apply(astar)
            a_part = algebra.multiply(x, ra).coeffs
            corr = rmap.apply(dual_part)
            a_part = tuple(p - q for p, q in zip(a_part, corr))
            table[i][n + a_idx] = _embed(a_part, dual_part, n)
            # a* . x
            dual_part = lstar_x.apply(astar)
            a_part = algebra.multiply(ra, x).coeffs
            corr = rmap.apply(dual_part)
            a_part = tuple(p - q for p, q in zip(a_part, corr))
            table[n + a_idx][i] = _embed(a_part, dual_part, n)

    names = double_basis_names(algebra.basis_names)
    product = Algebra(2 * n, basis_names=names, table=table,
                      constraints=algebra.constraints + r.constraints)
    return (DoubleAlgebra(algebra, product, FROBENIUS),
            symmetric_pairing_form(n))


def connes_double(structure: DendriformStructure, r: Tensor2):
    """Double construction from a symmetric D-equation solution.

    The nine dendriform product formulas on A + A* are evaluated on dual
    basis elements with the sign convention rho = -r in every induced-map
    argument; this is the convention under which the split comultiplication
    pair (built from -r and r) dualizes to the products below.  The *-table
    is assembled from the three *-formulas, and the split dual products
    are retained for the a* * b* = a* > b* + a* < b* check.
    """
    n = structure.dim
    for residual in structure.axiom_residuals():
        if not residual_is_zero(residual):
            path, value = next(nonzero_residual_entries(residual))
            raise PreconditionError("structure is not dendriform",
                                    (path, value))
    if not r.is_symmetric():
        bad = next((i, j) for i in range(n) for j in range(n)
                   if not (r.a[i][j] - r.a[j][i]).is_zero())
        raise PreconditionError("tensor is not symmetric",
                                (bad, r.a[bad[0]][bad[1]] - r.a[bad[1]][bad[0]]))
    residual = deq_residual(structure, r)
    if not residual.is_zero():
        i, j, k, value = next(residual.nonzero_entries())
        raise PreconditionError("tensor does not solve the D-equation",
                                ((i, j, k), value))

    sum_alg = structure.sum_algebra()
    rmap = r.scale(-1).as_map()

    def rho(dual_vec):
        return rmap.apply(dual_vec)

    table = [[None] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            table[i][j] = _embed(sum_alg.c[i][j], None, n)

    dual_succ = [[None] * n for _ in range(n)]
    dual_prec = [[None] * n for _ in range(n)]
    for a_idx in range(n):
        astar = _unit(n, a_idx)
        ra = rho(astar)
        rstar_prec_ra = structure.prec_right(ra).transpose()
        rstar_succ_ra = structure.succ_right(ra).transpose()
        rstar_ra = structure.star_right(ra).transpose()
        for b_idx in range(n):
            bstar = _unit(n, b_idx)
            rb = rho(bstar)
            lstar_succ_rb = structure.succ_left(rb).transpose()
            lstar_prec_rb = structure.prec_left(rb).transpose()
            lstar_rb = structure.star_left(rb).transpose()
            prec = tuple(-x + y for x, y in zip(
                rstar_succ_ra.apply(bstar), lstar_rb.apply(astar)))
            succ = tuple(x - y for x, y in zip(
                rstar_ra.apply(bstar), lstar_prec_rb.apply(astar)))
            star = tuple(x + y for x, y in zip(
                rstar_prec_ra.apply(bstar), lstar_succ_rb.apply(astar)))
            dual_prec[a_idx][b_idx] = prec
            dual_succ[a_idx][b_idx] = succ
            table[n + a_idx][n + b_idx] = _embed(None, star, n)

    for i in range(n):
        x = _unit(n, i)
        rstar_prec_x = structure.prec_right(x).transpose()
        lstar_succ_x = structure.succ_left(x).transpose()
        for a_idx in range(n):
            astar = _unit(n, a_idx)
            ra = rho(astar)
            # x * a* = x * rho(a*) - rho(R*<(x) a*) + R*<(x) a*
            dual_part = rstar_prec_x.apply(astar)
            a_part = structure.star_product(x, ra)
            corr = rho(dual_part)
            a_part = tuple(p - q for p, q in zip(a_part, corr))
            table[i][n + a_idx] = _embed(a_part, dual_part, n)
            # a* * x = rho(a*) * x - rho(L*>(x) a*) + L*>(x) a*
            dual_part = lstar_succ_x.apply(astar)
            a_part = structure.star_product(ra, x)
            corr = rho(dual_part)
            a_part = tuple(p - q for p, q in zip(a_part, corr))
            table[n + a_idx][i] = _embed(a_part, dual_part, n)

    names = double_basis_names(structure.basis_names)
    product = Algebra(2 * n, basis_names=names, table=table,
                      constraints=structure.constraints + r.constraints)
    return (DoubleAlgebra(structure, product, CONNES,
                          dual_succ=dual_succ, dual_prec=dual_prec),
            antisymmetric_pairing_form(n))


def bialgebra_coboundary(algebra: Algebra, r: Tensor2):
    """The comultiplication (id (x) L(x) - R(x) (x) id) r on each basis x."""
    n = algebra.dim
    a = r.a
    deltas = []
    for m in range(n):
        x = algebra.basis_element(m)
        lm = algebra.left_matrix(x).entries
        rm = algebra.right_matrix(x).entries
        rows = [[sum((a[i][p] * lm[k][p] for p in range(n)), ZERO)
                 - sum((rm[i][p] * a[p][k] for p in range(n)), ZERO)
                 for k in range(n)] for i in range(n)]
        deltas.append(Tensor2(algebra, rows))
    return deltas


def bialgebra_residuals(algebra: Algebra, deltas):
    """Residuals of the two compatibility equations for (A, Delta).

    Returns two n x n arrays of Tensor2 values: for each basis pair
    (x, y) = (e_i, e_j),

        Delta(x y) - (id (x) L(x)) Delta(y) - (R(y) (x) id) Delta(x)
        (L(y) (x) id - id (x) R(y)) Delta(x)
            + sigma[(L(x) (x) id - id (x) R(x)) Delta(y)]
    """
    n = algebra.dim
    if len(deltas) != n:
        raise DimensionMismatch("one comultiplication value per basis element")

    def mat(t2):
        return t2.a

    def left_tensor_id(m, t):   # (M (x) id) T -> M . t
        return [[sum((m[i][p] * t[p][k] for p in range(n)), ZERO)
                 for k in range(n)] for i in range(n)]

    def id_tensor(m, t):        # (id (x) M) T -> t . M^T
        return [[sum((t[i][p] * m[k][p] for p in range(n)), ZERO)
                 for k in range(n)] for i in range(n)]

    def add(t1, t2, sign=1):
        return [[t1[i][k] + sign * t2[i][k] for k in range(n)]
                for i in range(n)]

    first = [[None] * n for _ in range(n)]
    second = [[None] * n for _ in range(n)]
    for i in range(n):
        x = algebra.basis_element(i)
        lx = algebra.left_matrix(x).entries
        rx = algebra.right_matrix(x).entries
        for j in range(n):
            y = algebra.basis_element(j)
            ly = algebra.left_matrix(y).entries
            ry = algebra.right_matrix(y).entries
            # Delta extended linearly to the product x.y
            prod = [[ZERO] * n for _ in range(n)]
            for m in range(n):
                coeff = algebra.c[i][j][m]
                if coeff.is_zero():
                    continue
                dm = mat(deltas[m])
                prod = [[prod[p][q] + coeff * dm[p][q] for q in range(n)]
                        for p in range(n)]
            lhs = add(prod, id_tensor(lx, mat(deltas[j])), -1)
            lhs = add(lhs, left_tensor_id(ry, mat(deltas[i])), -1)
            first[i][j] = Tensor2(algebra, lhs)

            term1 = add(left_tensor_id(ly, mat(deltas[i])),
                        id_tensor(ry, mat(deltas[i])), -1)
            inner = add(left_tensor_id(lx, mat(deltas[j])),
                        id_tensor(rx, mat(deltas[j])), -1)
            flipped = [[inner[q][p] for q in range(n)] for p in range(n)]
            second[i][j] = Tensor2(algebra, add(term1, flipped))
    return first, second


def invariance_residual(double: DoubleAlgebra, form: BilinearFormMatrix):
    """B(u v, w) - B(u, v w) over all basis triples of the double."""
    if form.flavor != SYMMETRIC_FORM:
        raise ValueError("invariance residual expects the symmetric form")
    return _form_residual(double, form, cyclic=False)


def connes_cocycle_residual(double: DoubleAlgebra, form: BilinearFormMatrix):
    """omega(uv, w) + omega(vw, u) + omega(wu, v) over all basis triples."""
    if form.flavor != ANTISYMMETRIC_FORM:
        raise ValueError("cocycle residual expects the antisymmetric form")
    return _form_residual(double, form, cyclic=True)


def _form_residual(double: DoubleAlgebra, form: BilinearFormMatrix,
                   cyclic: bool):
    alg = double.algebra
    m = alg.dim
    units = [_unit(m, i) for i in range(m)]
    prods = [[alg.multiply(alg.basis_element(i),
                           alg.basis_element(j)).coeffs
              for j in range(m)] for i in range(m)]
    out = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    for u in range(m):
        for v in range(m):
            for w in range(m):
                if cyclic:
                    val = form.value(prods[u][v], units[w]) \
                        + form.value(prods[v][w], units[u]) \
                        + form.value(prods[w][u], units[v])
                else:
                    val = form.value(prods[u][v], units[w]) \
                        - form.value(units[u], prods[v][w])
                out[u][v][w] = val
    return out


def nondegeneracy_check(form: BilinearFormMatrix) -> bool:
    """True iff the Gram determinant is not the zero polynomial."""
    return not determinant(form.gram).is_zero()
