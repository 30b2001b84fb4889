"""Truncated graded polynomial rings over the rationals.

Used for characteristic-class bookkeeping: Chern classes ``cj(E)`` of weight
``j``, cohomology generators ``i2k`` of weight ``k``, and tensor products of
two such rings (``split`` marks where the right-hand factor begins).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InvariantViolation, ShapeError, TruncationError


def _natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


class GradedRing:
    """Polynomial ring on named generators of fixed positive weights.

    ``top`` truncates: a product landing above it raises ``TruncationError``.
    Terms print by decreasing weight, then decreasing lex order of exponent
    vectors in declaration order; factors inside a term print in name order.
    """

    def __init__(
        self,
        names: Sequence[str],
        weights: Sequence[int],
        top: int | None = None,
        split: int | None = None,
    ):
        if len(names) != len(weights):
            raise ShapeError("names and weights differ in length")
        if len(set(names)) != len(names):
            raise ShapeError(f"duplicate generator names in {names}")
        if any(w < 1 for w in weights):
            raise ShapeError("generator weights must be positive")
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.top = top
        self.split = split
        self._pos = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other):
        return isinstance(other, GradedRing) and (
            self.names,
            self.weights,
            self.top,
            self.split,
        ) == (other.names, other.weights, other.top, other.split)

    def __hash__(self):
        return hash((self.names, self.weights, self.top, self.split))

    def __repr__(self):
        return f"GradedRing({list(self.names)}, top={self.top})"

    def weight(self, exps: tuple) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def key(self, powers: Mapping[str, int]) -> tuple:
        exps = [0] * len(self.names)
        for name, e in powers.items():
            if name not in self._pos:
                raise ShapeError(f"{name!r} is not a generator of {self}")
            exps[self._pos[name]] += e
        return tuple(exps)

    def zero(self) -> "GradedClass":
        return GradedClass(self, {})

    def one(self) -> "GradedClass":
        return GradedClass(self, {(0,) * len(self.names): Fraction(1)})

    def gen(self, name: str) -> "GradedClass":
        return GradedClass(self, {self.key({name: 1}): Fraction(1)})

    def monomial(self, powers: Mapping[str, int], coeff=1) -> "GradedClass":
        return GradedClass(self, {self.key(powers): Fraction(coeff)})

    def _factors(self, exps: tuple, lo: int, hi: int) -> str:
        parts = []
        for i in sorted(range(lo, hi), key=lambda i: _natural_key(self.names[i])):
            e = exps[i]
            if e:
                parts.append(self.names[i] if e == 1 else f"{self.names[i]}^{e}")
        return "*".join(parts)

    def render_monomial(self, exps: tuple) -> str:
        if self.split is None:
            return self._factors(exps, 0, len(self.names)) or "1"
        left = self._factors(exps, 0, self.split) or "1"
        right = self._factors(exps, self.split, len(self.names)) or "1"
        return f"{left}(x){right}"


class GradedClass:
    __slots__ = ("ring", "_terms")

    def __init__(self, ring: GradedRing, terms: Mapping[tuple, object]):
        clean = {}
        for exps, c in terms.items():
            c = Fraction(c)
            if not c:
                continue
            if len(exps) != len(ring.names):
                raise ShapeError(f"exponent vector {exps} does not match {ring}")
            if ring.top is not None and ring.weight(exps) > ring.top:
                raise TruncationError(
                    f"class {ring.render_monomial(exps)} has weight {ring.weight(exps)}, "
                    f"above the top weight {ring.top}"
                )
            clean[tuple(exps)] = c
        self.ring = ring
        self._terms = clean

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, powers: Mapping[str, int] | tuple) -> Fraction:
        key = powers if isinstance(powers, tuple) else self.ring.key(powers)
        return self._terms.get(key, Fraction(0))

    def weight_part(self, w: int) -> "GradedClass":
        return GradedClass(self.ring, {k: c for k, c in self._terms.items() if self.ring.weight(k) == w})

    def weights(self) -> set:
        return {self.ring.weight(k) for k in self._terms}

    def _coerce(self, other) -> "GradedClass":
        if isinstance(other, GradedClass):
            if other.ring != self.ring:
                raise ShapeError(f"classes live in different rings: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.one() * Fraction(other) if other else self.ring.zero()
        raise TypeError(f"cannot combine GradedClass with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return GradedClass(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GradedClass(self.ring, {k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                out[k] = out.get(k, 0) + ca * cb
        return GradedClass(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def sorted_terms(self) -> list:
        r = self.ring
        return sorted(self._terms.items(), key=lambda kv: (-r.weight(kv[0]), tuple(-e for e in kv[0])))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (exps, c) in enumerate(self.sorted_terms()):
            body = self.ring.render_monomial(exps)
            mag = abs(c)
            if body == "1":
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

    def __repr__(self):
        return f"GradedClass({str(self)!r})"


class RingMap:
    """Multiplicative map fixed by the images of the source generators."""

    def __init__(self, source: GradedRing, target: GradedRing, images: Mapping[str, GradedClass]):
        missing = set(source.names) - set(images)
        if missing:
            raise ShapeError(f"no image given for generators {sorted(missing)}")
        for name, img in images.items():
            if img.ring != target:
                raise ShapeError(f"image of {name} is not in the target ring")
            w = source.weights[source.names.index(name)]
            if not img.is_zero() and img.weights() != {w}:
                raise ShapeError(f"image of {name} is not homogeneous of weight {w}")
        self.source = source
        self.target = target
        self.images = dict(images)

    def __call__(self, cls: GradedClass) -> GradedClass:
        if cls.ring != self.source:
            raise ShapeError("class does not live in the source ring")
        result = self.target.zero()
        for exps, c in cls._terms.items():
            term = self.target.one() * c
            for name, e in zip(self.source.names, exps):
                if e:
                    term = term * self.images[name] ** e
            result = result + term
        return result


def rref(rows: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form over the rationals; returns ``(rows, pivot_columns)``."""
    m = [[Fraction(v) for v in row] for row in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def solve_unique(coeffs: Sequence[Sequence], rhs: Sequence) -> list:
    """The unique solution of ``coeffs @ v = rhs``; raises if none or many."""
    nvars = len(coeffs[0])
    aug = [list(row) + [b] for row, b in zip(coeffs, rhs)]
    r_coef = rank(coeffs)
    reduced, pivots = rref(aug)
    if len(pivots) != r_coef:
        raise InvariantViolation("linear system is inconsistent")
    if r_coef != nvars:
        raise InvariantViolation(f"linear system has {nvars - r_coef} free parameters")
    sol = [Fraction(0)] * nvars
    for row, col in zip(reduced, pivots):
        sol[col] = row[-1]
    return sol
