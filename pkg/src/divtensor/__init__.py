"""Exact tensor pairing of hypersurfaces and the Chern-class checks around it."""

from .chern import (
    chern_tensor_formula,
    chern_tensor_oracle,
    hurewicz_pullback,
    obstruction_membership,
    obstruction_solve,
    pairing_pullback,
    reduce_to_elementary,
)
from .cycles import Cycle, degree, reduced_tensor, render_cycle, stabilize, tensor_cycles
from .errors import (
    BoundsError,
    DivTensorError,
    DomainError,
    InvariantViolation,
    ResourceError,
    ShapeError,
    TruncationError,
)
from .graded import GradedClass, GradedRing, RingMap
from .parsing import ParseError, parse_cycle, parse_polynomial
from .poly import Monomial, Polynomial, VariableSpace, X, Y, Z, from_json, render, substitute, to_json
from .psi import psi, suspend_linear, tensor_divisor, tensor_fast

__version__ = "0.1.0"
