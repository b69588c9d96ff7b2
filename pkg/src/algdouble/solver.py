"""Polynomial systems extracted from residuals, and two ways to check them.

``verify_family`` certifies a parameterized family symbolically: after
substituting the family (and its equality constraints) every equation must
be the zero polynomial in the remaining free parameters.  ``grid_scan``
enumerates a finite rational grid exhaustively and evaluates the system at
each point; it is the desk-scale discovery cross-check, not a proof of
completeness over the ground field.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .scalar import Scalar, Constraint, EQUALS_ZERO, NONZERO, as_scalar
from .algebra import Algebra
from .tensor import Tensor2, aybe_residual
from .dendriform import DendriformStructure, deq_residual

GRID_POINT_LIMIT = 10 ** 6


class UnboundUnknown(ValueError):
    pass


class PolySystem:
    """Equations (each asserted identically zero) over named unknowns."""

    __slots__ = ("unknowns", "equations", "side_conditions")

    def __init__(self, unknowns, equations, side_conditions=()):
        self.unknowns = tuple(unknowns)
        self.equations = tuple(as_scalar(e) for e in equations)
        self.side_conditions = tuple(side_conditions)

    def free_parameters(self) -> set:
        """Indeterminates that appear in equations but are not unknowns."""
        seen = set()
        for eq in self.equations:
            seen |= eq.variables()
        return seen - set(self.unknowns)

    def substitute(self, bindings: dict) -> "PolySystem":
        return PolySystem(self.unknowns,
                          [e.substitute(bindings) for e in self.equations],
                          self.side_conditions)

    def __repr__(self) -> str:
        eqs = "; ".join(f"{e} = 0" for e in self.equations) or "empty"
        return f"PolySystem({', '.join(self.unknowns)}: {eqs})"


class GridScanResult:
    """Every grid assignment with its satisfaction flag, in grid order."""

    __slots__ = ("points", "grid_spec")

    def __init__(self, points, grid_spec):
        self.points = tuple(points)
        self.grid_spec = grid_spec

    def satisfying_points(self):
        return [assignment for assignment, ok in self.points if ok]

    def __len__(self):
        return len(self.points)


def _coefficient_names(dim: int, prefix: str = "a"):
    return [[f"{prefix}{i + 1}{j + 1}" for j in range(dim)]
            for i in range(dim)]


def generic_tensor(algebra_or_dim, prefix: str = "a") -> Tensor2:
    """Fully general 2-tensor with fresh named coefficients."""
    if isinstance(algebra_or_dim, int):
        algebra = Algebra(algebra_or_dim)
    else:
        algebra = algebra_or_dim
    names = _coefficient_names(algebra.dim, prefix)
    return Tensor2(algebra, [[Scalar.var(name) for name in row]
                             for row in names])


def extract_aybe_system(algebra: Algebra) -> PolySystem:
    """Yang-Baxter residual equations for a fully general tensor."""
    names = _coefficient_names(algebra.dim)
    r = Tensor2(algebra, [[Scalar.var(name) for name in row]
                          for row in names])
    residual = aybe_residual(algebra, r)
    equations = [value.sign_normalized()
                 for *_unused, value in residual.nonzero_entries()]
    unknowns = [name for row in names for name in row]
    return PolySystem(unknowns, equations)


def extract_deq_system(structure: DendriformStructure) -> PolySystem:
    """D-equation residual equations for a fully general tensor."""
    names = _coefficient_names(structure.dim)
    carrier = Algebra(structure.dim, basis_names=structure.basis_names)
    r = Tensor2(carrier, [[Scalar.var(name) for name in row]
                          for row in names])
    residual = deq_residual(structure, r)
    equations = [value.sign_normalized()
                 for *_unused, value in residual.nonzero_entries()]
    unknowns = [name for row in names for name in row]
    return PolySystem(unknowns, equations)


def verify_family(system: PolySystem, family: dict, equalities=()) -> bool:
    """Symbolic membership certificate for a solution family.

    ``family`` must bind every unknown of the system (possibly to itself,
    for a free coefficient).  The family bindings and then the equality
    constraints are substituted into every equation; the family verifies
    iff each result is identically zero as a polynomial in whatever
    parameters remain.
    """
    bindings = {}
    for unknown in system.unknowns:
        if unknown not in family:
            raise UnboundUnknown(f"family does not bind unknown {unknown!r}")
    for name, value in family.items():
        bindings[name] = as_scalar(value)
    eq_bindings = []
    for constraint in equalities:
        if isinstance(constraint, Constraint):
            if constraint.kind != EQUALS_ZERO:
                continue
            if constraint.binding is None:
                raise ValueError(
                    f"equality constraint {constraint} has no substitution "
                    "orientation")
            eq_bindings.append(constraint.binding)
        else:
            var, repl = constraint
            eq_bindings.append((var, as_scalar(repl)))
    for equation in system.equations:
        value = equation.substitute(bindings)
        for _ in range(len(eq_bindings) + 1):
            updated = value
            for var, repl in eq_bindings:
                updated = updated.substitute({var: repl})
            if updated == value:
                break
            value = updated
        if not value.is_zero():
            return False
    return True


def grid_scan(system: PolySystem, values_per_unknown) -> GridScanResult:
    """Exhaustively evaluate the system on a rational grid.

    The same value list is used for every unknown; the full Cartesian
    product is enumerated exactly once, in row-major order over the
    system's unknown sequence.
    """
    values = [Fraction(v) for v in values_per_unknown]
    unknowns = system.unknowns
    size = len(values) ** len(unknowns) if unknowns else 1
    if size > GRID_POINT_LIMIT:
        raise ValueError(f"grid of {size} points exceeds the "
                         f"{GRID_POINT_LIMIT}-point guard")
    free = system.free_parameters()
    if free:
        raise UnboundUnknown(
            f"system has free parameters {sorted(free)}; bind them before "
            "scanning")
    points = []
    for combo in itertools.product(values, repeat=len(unknowns)):
        assignment = dict(zip(unknowns, combo))
        ok = all(eq.evaluate(assignment) == 0 for eq in system.equations)
        if ok:
            for cond in system.side_conditions:
                if cond.kind == NONZERO:
                    if cond.expression.evaluate(assignment) == 0:
                        ok = False
                        break
                elif cond.expression.evaluate(assignment) != 0:
                    ok = False
                    break
        points.append((assignment, ok))
    return GridScanResult(points, {u: list(values) for u in unknowns})
