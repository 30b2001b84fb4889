"""Sparse homogeneous polynomials with exact integer coefficients.

Three variable families are supported: ``x0 .. x(n-1)``, ``y0 .. y(m-1)`` and
the doubly indexed ``z[i,j]`` with ``0 <= i < n``, ``0 <= j < m``.  A monomial
is stored as its non-decreasing sequence of variable indices (pairs for the
z-family, compared row-major), so the degree-d monomials sorted as tuples give
the lexicographically ordered monomial basis the pairing is defined on.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import groupby
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import BoundsError, ResourceError, ShapeError

DEFAULT_TERM_CAP = 10**6

Index = Union[int, tuple]


def term_cap(override: int | None = None) -> int:
    """Resolve the term cap: explicit value, then ``DTL_TERM_CAP``, then the default."""
    if override is not None:
        return int(override)
    env = os.environ.get("DTL_TERM_CAP")
    if env:
        return int(env)
    return DEFAULT_TERM_CAP


def check_term_cap(count: int, cap: int | None = None, what: str = "expansion") -> None:
    limit = term_cap(cap)
    if count > limit:
        raise ResourceError(f"{what} would produce {count} terms, above the cap of {limit}")


@dataclass(frozen=True)
class VariableSpace:
    """An indexed variable family: ``x`` or ``y`` of one size, or ``z`` of shape n x m."""

    kind: str
    shape: tuple

    def __post_init__(self):
        if self.kind in ("x", "y"):
            ok = len(self.shape) == 1
        elif self.kind == "z":
            ok = len(self.shape) == 2
        else:
            raise ShapeError(f"unknown variable family {self.kind!r}")
        if not ok or any(not isinstance(s, int) or s < 1 for s in self.shape):
            raise ShapeError(f"invalid shape {self.shape!r} for family {self.kind!r}")

    @property
    def size(self) -> int:
        """Number of variables in the family."""
        if self.kind == "z":
            return self.shape[0] * self.shape[1]
        return self.shape[0]

    def check_index(self, idx) -> None:
        if self.kind == "z":
            if (
                not isinstance(idx, tuple)
                or len(idx) != 2
                or not all(isinstance(v, int) for v in idx)
                or not (0 <= idx[0] < self.shape[0] and 0 <= idx[1] < self.shape[1])
            ):
                raise BoundsError(f"index {idx!r} out of bounds for {self}")
        elif not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < self.shape[0]:
            raise BoundsError(f"index {idx!r} out of bounds for {self}")

    def indices(self) -> list:
        if self.kind == "z":
            return [(i, j) for i in range(self.shape[0]) for j in range(self.shape[1])]
        return list(range(self.shape[0]))

    def var_name(self, idx) -> str:
        if self.kind == "z":
            return f"z[{idx[0]},{idx[1]}]"
        return f"{self.kind}{idx}"

    def contains(self, other: "VariableSpace") -> bool:
        """True when every index of ``other`` is a valid index here."""
        return self.kind == other.kind and all(a >= b for a, b in zip(self.shape, other.shape))

    def __str__(self):
        return f"{self.kind.upper()}({','.join(map(str, self.shape))})"


def X(n: int) -> VariableSpace:
    return VariableSpace("x", (n,))


def Y(m: int) -> VariableSpace:
    return VariableSpace("y", (m,))


def Z(n: int, m: int) -> VariableSpace:
    return VariableSpace("z", (n, m))


@dataclass(frozen=True, order=False)
class Monomial:
    space: VariableSpace
    indices: tuple

    @property
    def degree(self) -> int:
        return len(self.indices)

    def exponents(self) -> tuple:
        """Exponent-vector view: ``((index, exponent), ...)`` in index order."""
        return tuple((k, len(list(g))) for k, g in groupby(self.indices))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.space != other.space:
            raise ShapeError(f"cannot multiply monomials from {self.space} and {other.space}")
        return Monomial(self.space, tuple(sorted(self.indices + other.indices)))

    def __str__(self):
        return render_monomial(self.space, self.indices) or "1"


def canonicalize(space: VariableSpace, indices: Iterable) -> Monomial:
    idx = tuple(indices)
    for i in idx:
        space.check_index(i)
    return Monomial(space, tuple(sorted(idx)))


def lex_compare(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 comparing sorted index sequences lexicographically."""
    if a.space != b.space or a.degree != b.degree:
        raise ShapeError(
            f"cannot compare monomials of {a.space}/deg {a.degree} and {b.space}/deg {b.degree}"
        )
    return (a.indices > b.indices) - (a.indices < b.indices)


class Polynomial:
    """Homogeneous polynomial; immutable.

    Equality and hashing use the family, the degree and the term table.  The
    bounds of the space are a housing detail: the same polynomial re-housed in
    a larger space compares equal.
    """

    __slots__ = ("space", "degree", "_terms", "_hash")

    def __init__(self, space: VariableSpace, degree: int, terms: Mapping | None = None):
        if degree < 0:
            raise ShapeError(f"negative degree {degree}")
        acc: dict = {}
        for key, coeff in (terms or {}).items():
            if not isinstance(coeff, int):
                raise TypeError(f"coefficients must be integers, got {coeff!r}")
            mono = canonicalize(space, key).indices
            if len(mono) != degree:
                raise ShapeError(
                    f"monomial {render_monomial(space, mono) or '1'} has degree {len(mono)}, "
                    f"polynomial degree is {degree}"
                )
            acc[mono] = acc.get(mono, 0) + coeff
        self.space = space
        self.degree = degree
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _trusted(cls, space: VariableSpace, degree: int, terms: dict) -> "Polynomial":
        # keys already canonical and in bounds; zeros already dropped
        p = object.__new__(cls)
        p.space = space
        p.degree = degree
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, space: VariableSpace, degree: int = 0) -> "Polynomial":
        return cls._trusted(space, degree, {})

    @classmethod
    def constant(cls, space: VariableSpace, c: int) -> "Polynomial":
        return cls._trusted(space, 0, {(): c} if c else {})

    @classmethod
    def var(cls, space: VariableSpace, idx) -> "Polynomial":
        space.check_index(idx)
        return cls._trusted(space, 1, {(idx,): 1})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: int = 1) -> "Polynomial":
        return cls(mono.space, mono.degree, {mono.indices: coeff})

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def items(self) -> list:
        """Terms in canonical order: ascending index tuples, i.e. x0 > x1 > ... lex."""
        return sorted(self._terms.items())

    def monomials(self) -> list:
        return [Monomial(self.space, k) for k, _ in self.items()]

    def coefficient(self, indices: Sequence) -> int:
        return self._terms.get(tuple(sorted(indices)), 0)

    def rehoused(self, space: VariableSpace) -> "Polynomial":
        """The same terms in another space of the same family."""
        if space.kind != self.space.kind:
            raise ShapeError(f"cannot move a {self.space} polynomial into {space}")
        for key in self._terms:
            for i in key:
                space.check_index(i)
        return Polynomial._trusted(space, self.degree, dict(self._terms))

    def _check_compatible(self, other: "Polynomial", op: str) -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot {op} Polynomial and {type(other).__name__}")
        if self.space != other.space:
            raise ShapeError(f"cannot {op} polynomials from {self.space} and {other.space}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other, "add")
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ShapeError(f"cannot add polynomials of degree {self.degree} and {other.degree}")
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial._trusted(self.space, self.degree, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._trusted(self.space, self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.space, self.degree)
        return Polynomial._trusted(self.space, self.degree, {k: c * v for k, v in self._terms.items()})

    def mul(self, other: "Polynomial", cap: int | None = None) -> "Polynomial":
        self._check_compatible(other, "multiply")
        check_term_cap(len(self._terms) * len(other._terms), cap, "product")
        out: dict = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                key = tuple(sorted(a + b))
                out[key] = out.get(key, 0) + ca * cb
        return Polynomial._trusted(
            self.space, self.degree + other.degree, {k: v for k, v in out.items() if v}
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.space, 1)
        base = self
        while k:
            if k & 1:
                result = result.mul(base)
            k >>= 1
            if k:
                base = base.mul(base)
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.space.kind == other.space.kind
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space.kind, self.degree, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, space={self.space}, degree={self.degree})"


def substitute(g: Polynomial, images: Sequence[Polynomial], cap: int | None = None) -> Polynomial:
    """Replace variable ``j`` of ``g`` by ``images[j]`` and expand.

    ``g`` must live in a one-index family (x or y); the images must share one
    space and one degree ``k``, and the result has degree ``deg(g) * k``.
    """
    if g.space.kind == "z":
        raise ShapeError("substitute expects a polynomial in the x- or y-family")
    if len(images) != g.space.size:
        raise ShapeError(f"need {g.space.size} images for {g.space}, got {len(images)}")
    target = images[0].space
    k = images[0].degree
    for j, im in enumerate(images):
        if im.space != target:
            raise ShapeError(f"image {j} lives in {im.space}, expected {target}")
        if im.degree != k:
            raise ShapeError(f"image {j} has degree {im.degree}, expected {k}")
    powers: dict = {}
    result = Polynomial.zero(target, g.degree * k)
    for mono, coeff in g.items():
        term = Polynomial.constant(target, coeff)
        for idx, e in groupby(mono):
            e = len(list(e))
            key = (idx, e)
            if key not in powers:
                powers[key] = images[idx] ** e
            term = term.mul(powers[key], cap)
        result = result + term
    return result


def render_monomial(space: VariableSpace, indices: tuple) -> str:
    parts = []
    for idx, grp in groupby(indices):
        e = len(list(grp))
        name = space.var_name(idx)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def render(p: Polynomial) -> str:
    """Canonical text: ``x0^2 - 3*x1*x2``, ``z[0,5]^2*z[0,7]^2``, ``0`` for zero."""
    if p.is_zero():
        return "0"
    out = []
    for i, (mono, c) in enumerate(p.items()):
        body = render_monomial(p.space, mono)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if i == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)


def to_json(p: Polynomial) -> dict:
    """JSON-ready dict: ``{"space", "degree", "terms": [{"coeff", "vars"}]}``.

    ``vars`` lists ``[i, j, exp]`` triples for z-polynomials and ``[i, exp]``
    pairs for x/y-polynomials.
    """
    terms = []
    for mono, c in p.items():
        vars_ = []
        for idx, grp in groupby(mono):
            e = len(list(grp))
            vars_.append([idx[0], idx[1], e] if p.space.kind == "z" else [idx, e])
        terms.append({"coeff": c, "vars": vars_})
    return {
        "space": {"kind": p.space.kind, "shape": list(p.space.shape)},
        "degree": p.degree,
        "terms": terms,
    }


def from_json(data: Mapping) -> Polynomial:
    space = VariableSpace(data["space"]["kind"], tuple(data["space"]["shape"]))
    terms: dict = {}
    for t in data["terms"]:
        key: list = []
        for v in t["vars"]:
            if space.kind == "z":
                i, j, e = v
                key.extend([(i, j)] * e)
            else:
                i, e = v
                key.extend([i] * e)
        key_t = tuple(sorted(key))
        terms[key_t] = terms.get(key_t, 0) + t["coeff"]
    return Polynomial(space, data["degree"], terms)
