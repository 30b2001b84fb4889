"""Codimension-1 cycles as integer-weighted sums of homogeneous polynomials.

Components are kept exactly as given (no factorization): two cycles are equal
when their tables of ``polynomial -> multiplicity`` agree after merging
identical polynomials.  Negative multiplicities are allowed everywhere.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .errors import DomainError, ShapeError
from .poly import Polynomial, VariableSpace, Z
from .psi import tensor_divisor, tensor_fast


class Cycle:
    __slots__ = ("space", "_components")

    def __init__(self, space: VariableSpace, components: Iterable[tuple] = ()):
        acc: dict = {}
        for poly, mult in components:
            if not isinstance(mult, int):
                raise TypeError(f"multiplicity must be an integer, got {mult!r}")
            if poly.space.kind != space.kind or not space.contains(poly.space):
                raise ShapeError(f"component {poly} lives in {poly.space}, cycle space is {space}")
            if poly.is_zero():
                raise DomainError("a cycle component cannot be the zero polynomial")
            if poly.degree < 1:
                raise DomainError(f"cycle component {poly} is constant; need degree >= 1")
            if poly.space != space:
                poly = poly.rehoused(space)
            acc[poly] = acc.get(poly, 0) + mult
        self.space = space
        self._components = {p: k for p, k in acc.items() if k}

    @classmethod
    def of(cls, poly: Polynomial, mult: int = 1) -> "Cycle":
        return cls(poly.space, [(poly, mult)])

    @property
    def components(self) -> Mapping:
        return dict(self._components)

    def items(self) -> list:
        return list(self._components.items())

    def is_empty(self) -> bool:
        return not self._components

    def is_effective(self) -> bool:
        return all(k > 0 for k in self._components.values())

    def degree(self) -> int:
        return sum(k * p.degree for p, k in self._components.items())

    def multiplicity(self, poly: Polynomial) -> int:
        return self._components.get(poly, 0)

    def __add__(self, other: "Cycle") -> "Cycle":
        if not isinstance(other, Cycle):
            return NotImplemented
        if self.space != other.space:
            raise ShapeError(f"cannot add cycles in {self.space} and {other.space}")
        return Cycle(self.space, self.items() + other.items())

    def __neg__(self) -> "Cycle":
        return Cycle(self.space, [(p, -k) for p, k in self.items()])

    def __sub__(self, other: "Cycle") -> "Cycle":
        return self + (-other)

    def scale(self, c: int) -> "Cycle":
        return Cycle(self.space, [(p, c * k) for p, k in self.items()])

    def __eq__(self, other):
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.space.kind == other.space.kind and self._components == other._components

    def __hash__(self):
        return hash((self.space.kind, frozenset(self._components.items())))

    def __str__(self):
        return render_cycle(self)

    def __repr__(self):
        return f"Cycle({str(self)!r}, space={self.space})"


def degree(c: Cycle) -> int:
    return c.degree()


def cycle_add(a: Cycle, b: Cycle) -> Cycle:
    return a + b


def cycle_neg(a: Cycle) -> Cycle:
    return -a


def render_cycle(c: Cycle) -> str:
    """``2*[x0^2 - 3*x1*x2] + -1*[x0]``; the empty cycle renders as ``0``."""
    if c.is_empty():
        return "0"
    return " + ".join(f"{k}*[{p}]" for p, k in c.items())


def tensor_cycles(
    eta: Cycle,
    xi: Cycle,
    pairing: Callable[[Polynomial, Polynomial], Polynomial] = tensor_fast,
) -> Cycle:
    """Biadditive extension: ``sum_ij a_i b_j [f_i (x) g_j]``."""
    if eta.space.kind != "x" or xi.space.kind != "y":
        raise ShapeError(f"expected an X-cycle and a Y-cycle, got {eta.space} and {xi.space}")
    zspace = Z(eta.space.shape[0], xi.space.shape[0])
    comps = []
    for f, a in eta.items():
        for g, b in xi.items():
            comps.append((pairing(f, g).rehoused(zspace), a * b))
    return Cycle(zspace, comps)


def default_basepoints(eta_space: VariableSpace, xi_space: VariableSpace) -> tuple:
    """The hyperplanes ``x0`` and ``y0``."""
    return Polynomial.var(eta_space, 0), Polynomial.var(xi_space, 0)


def reduced_tensor(
    eta: Cycle,
    xi: Cycle,
    eta0: Polynomial | None = None,
    xi0: Polynomial | None = None,
    pairing: Callable[[Polynomial, Polynomial], Polynomial] = tensor_fast,
) -> Cycle:
    """``eta (x) xi + eta (x) xi0 + eta0 (x) xi`` for basepoint hyperplanes eta0, xi0."""
    d_eta0, d_xi0 = default_basepoints(eta.space, xi.space)
    eta0 = d_eta0 if eta0 is None else eta0
    xi0 = d_xi0 if xi0 is None else xi0
    for name, h in (("eta0", eta0), ("xi0", xi0)):
        if h.degree != 1 or h.is_zero():
            raise DomainError(f"basepoint {name} must be a hyperplane (nonzero linear form), got {h}")
    return (
        tensor_cycles(eta, xi, pairing)
        + tensor_cycles(eta, Cycle(xi.space, [(xi0, 1)]), pairing)
        + tensor_cycles(Cycle(eta.space, [(eta0, 1)]), xi, pairing)
    )


def well_definedness_check(
    f1: Polynomial, f2: Polynomial, g: Polynomial, pairing=tensor_divisor
) -> bool:
    """Whether pairing the single polynomial ``f1*f2`` agrees with pairing its factors."""
    return pairing(f1 * f2, g) == pairing(f1, g) * pairing(f2, g)


def stabilize(c: Cycle, size: int | tuple) -> Cycle:
    """Re-house ``c`` in a larger space of the same family."""
    shape = (size,) if isinstance(size, int) else tuple(size)
    if len(shape) != len(c.space.shape) or any(a < b for a, b in zip(shape, c.space.shape)):
        raise ShapeError(f"cannot stabilize {c.space} to shape {shape}: bounds may only grow")
    space = VariableSpace(c.space.kind, shape)
    return Cycle(space, [(p.rehoused(space), k) for p, k in c.items()])

