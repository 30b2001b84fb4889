"""The multilinear pairing on monomial bases and the divisor tensor product.

Given ``e`` forms of degree ``d`` in the x-variables and ``d`` forms of degree
``e`` in the y-variables, a choice of one basis monomial per slot gives two
index grids: ``X`` (e rows of length d) and ``Y`` (d rows of length e).  The
pairing sends that choice to the z-monomial

    prod_{a < e} prod_{b < d} z[X[a][b], Y[b][a]]

and is extended multilinearly.  ``tensor_divisor(f, g)`` feeds ``e`` copies of
``f`` and ``d`` copies of ``g``.
"""

from __future__ import annotations

from itertools import product
from math import prod
from typing import Sequence

from .errors import DomainError, ShapeError
from .poly import Polynomial, VariableSpace, Z, check_term_cap, substitute


def psi_monomial(xgrid: Sequence[Sequence[int]], ygrid: Sequence[Sequence[int]]) -> tuple:
    """Sorted z-index tuple for one choice of basis monomials.

    ``xgrid`` is e x d, ``ygrid`` is d x e; every row must be non-decreasing.
    """
    e = len(xgrid)
    d = len(ygrid)
    if any(len(row) != d for row in xgrid) or any(len(row) != e for row in ygrid):
        raise ShapeError(
            f"grid shapes disagree: x-grid rows {[len(r) for r in xgrid]}, "
            f"y-grid rows {[len(r) for r in ygrid]} (need {e}x{d} and {d}x{e})"
        )
    for row in list(xgrid) + list(ygrid):
        if any(row[t] > row[t + 1] for t in range(len(row) - 1)):
            raise ShapeError(f"grid row {tuple(row)} is not a canonical (sorted) monomial")
    return tuple(sorted((xgrid[a][b], ygrid[b][a]) for a in range(e) for b in range(d)))


def _check_slots(xs: Sequence[Polynomial], ys: Sequence[Polynomial]) -> tuple:
    if not xs or not ys:
        raise ShapeError("need at least one x-slot and one y-slot")
    e, d = len(xs), len(ys)
    xspace, yspace = xs[0].space, ys[0].space
    if xspace.kind != "x" or yspace.kind != "y":
        raise ShapeError(f"x-slots must be in an X space and y-slots in a Y space, got {xspace}, {yspace}")
    for a, p in enumerate(xs):
        if p.space != xspace:
            raise ShapeError(f"x-slot {a} lives in {p.space}, expected {xspace}")
        if p.degree != d:
            raise ShapeError(f"x-slot {a} has degree {p.degree}; with {d} y-slots it must be {d}")
    for b, q in enumerate(ys):
        if q.space != yspace:
            raise ShapeError(f"y-slot {b} lives in {q.space}, expected {yspace}")
        if q.degree != e:
            raise ShapeError(f"y-slot {b} has degree {q.degree}; with {e} x-slots it must be {e}")
    return d, e, Z(xspace.shape[0], yspace.shape[0])


def psi(xs: Sequence[Polynomial], ys: Sequence[Polynomial], cap: int | None = None) -> Polynomial:
    """Full multilinear expansion over one basis monomial per slot."""
    d, e, zspace = _check_slots(xs, ys)
    slots = [p.items() for p in xs] + [q.items() for q in ys]
    check_term_cap(prod(len(s) for s in slots), cap, "multilinear expansion")
    out: dict = {}
    for choice in product(*slots):
        coeff = 1
        for _, c in choice:
            coeff *= c
        xgrid = [m for m, _ in choice[:e]]
        ygrid = [m for m, _ in choice[e:]]
        key = tuple(sorted((xgrid[a][b], ygrid[b][a]) for a in range(e) for b in range(d)))
        out[key] = out.get(key, 0) + coeff
    return Polynomial._trusted(zspace, d * e, {k: v for k, v in out.items() if v})


def _check_divisors(f: Polynomial, g: Polynomial) -> None:
    if f.space.kind != "x" or g.space.kind != "y":
        raise ShapeError(f"expected f in an X space and g in a Y space, got {f.space} and {g.space}")
    for name, p in (("f", f), ("g", g)):
        if p.is_zero():
            raise DomainError(f"{name} is the zero polynomial; divisors need a nonzero form")
        if p.degree < 1:
            raise DomainError(f"{name} is constant; divisors need degree >= 1")


def tensor_divisor(f: Polynomial, g: Polynomial, cap: int | None = None) -> Polynomial:
    """``f (x) g``: the pairing on deg(g) copies of f and deg(f) copies of g."""
    _check_divisors(f, g)
    return psi([f] * g.degree, [g] * f.degree, cap)


def column_form(g: Polynomial, column: tuple, zspace: VariableSpace) -> Polynomial:
    """``g`` with the t-th variable ``y_k`` of every monomial replaced by ``z[column[t], k]``."""
    terms = {tuple(sorted(zip(column, mono))): c for mono, c in g.items()}
    # distinct y-monomials can collide only if column repeats an index
    if len(terms) != len(g):
        return Polynomial(zspace, g.degree, _merge(column, g))
    return Polynomial._trusted(zspace, g.degree, terms)


def _merge(column: tuple, g: Polynomial) -> dict:
    out: dict = {}
    for mono, c in g.items():
        key = tuple(sorted(zip(column, mono)))
        out[key] = out.get(key, 0) + c
    return out


def tensor_fast(f: Polynomial, g: Polynomial, cap: int | None = None) -> Polynomial:
    """Same value as :func:`tensor_divisor`, expanding only the x-slots.

    For a fixed choice of x-monomials the y-slots factor: the sum over y-choices
    is the product over columns b of ``column_form(g, X[:, b])``.  Every x-slot
    choice is enumerated independently; only the per-column forms are cached.
    """
    _check_divisors(f, g)
    d, e = f.degree, g.degree
    zspace = Z(f.space.shape[0], g.space.shape[0])
    fterms = f.items()
    check_term_cap(len(fterms) ** e, cap, "x-slot expansion")
    columns: dict = {}
    products: dict = {}
    acc: dict = {}
    for choice in product(fterms, repeat=e):
        coeff = 1
        for _, c in choice:
            coeff *= c
        cols = tuple(sorted(tuple(choice[a][0][b] for a in range(e)) for b in range(d)))
        acc[cols] = acc.get(cols, 0) + coeff
    result = Polynomial.zero(zspace, d * e)
    for cols, coeff in acc.items():
        if not coeff:
            continue
        if cols not in products:
            term = None
            for col in cols:
                if col not in columns:
                    columns[col] = column_form(g, col, zspace)
                term = columns[col] if term is None else term.mul(columns[col], cap)
            products[cols] = term
        result = result + products[cols].scale(coeff)
    return result


def suspend_linear(f: Polynomial, g: Polynomial, cap: int | None = None) -> Polynomial:
    """``g(f(z[.,0]), ..., f(z[.,m-1]))`` for a linear form ``f``."""
    _check_divisors(f, g)
    if f.degree != 1:
        raise DomainError(f"suspend_linear needs a linear f, got degree {f.degree}")
    n, m = f.space.shape[0], g.space.shape[0]
    zspace = Z(n, m)
    images = [
        Polynomial._trusted(zspace, 1, {((i, j),): c for (i,), c in f.items()}) for j in range(m)
    ]
    return substitute(g, images, cap)
