"""Exact verification of Yang-Baxter and D-equation solution families and
the Frobenius / Connes-cocycle double constructions they induce on A + A*,
for low-dimensional algebras presented by structure constants."""

from .scalar import (Scalar, Rational, Constraint, EQUALS_ZERO, NONZERO,
                     as_scalar, apply_bindings)
from .algebra import (Algebra, Element, OperatorMatrix, DimensionMismatch,
                      determinant, residual_is_zero,
                      nonzero_residual_entries)
from .tensor import Tensor2, Tensor3, aybe_residual, r_as_map
from .dendriform import (DendriformStructure, deq_residual,
                         dendriform_coboundaries, anti_isomorphism_check,
                         splitting_system)
from .double import (DoubleAlgebra, BilinearFormMatrix, PreconditionError,
                     frobenius_double, connes_double, bialgebra_coboundary,
                     bialgebra_residuals, invariance_residual,
                     connes_cocycle_residual, nondegeneracy_check,
                     symmetric_pairing_form, antisymmetric_pairing_form)
from .solver import (PolySystem, GridScanResult, UnboundUnknown,
                     extract_aybe_system, extract_deq_system, generic_tensor,
                     verify_family, grid_scan)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
