"""Text input for polynomials and cycles.

Grammar (whitespace-insensitive, explicit ``*`` required)::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := INT | [INT '*'] factor ('*' factor)*
    factor := var ['^' INT]
    var    := 'x' INT | 'y' INT | 'z[' INT ',' INT ']'
    cycle  := '0' | cterm (('+'|'-') cterm)*
    cterm  := ['-'] INT '*' '[' poly ']'

Polynomials must be homogeneous and use a single variable family.  Errors
carry a line/column and print the offending line with a caret under it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cycles import Cycle
from .errors import BoundsError, DivTensorError, ShapeError
from .poly import Polynomial, VariableSpace

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<zvar>z\s*\[\s*(?P<zi>\d+)\s*,\s*(?P<zj>\d+)\s*\])
  | (?P<var>(?P<fam>[xy])(?P<idx>\d+))
  | (?P<op>[-+*^\[\]])
    """,
    re.VERBOSE,
)


class ParseError(DivTensorError, ValueError):
    def __init__(self, message: str, src: str, pos: int):
        self.message = message
        self.src = src
        self.pos = pos
        self.line = src.count("\n", 0, pos) + 1
        start = src.rfind("\n", 0, pos) + 1
        self.col = pos - start + 1
        end = src.find("\n", pos)
        self.source_line = src[start : end if end >= 0 else len(src)]
        super().__init__(str(self))

    def __str__(self):
        caret = " " * (self.col - 1) + "^"
        return f"line {self.line}, column {self.col}: {self.message}\n  {self.source_line}\n  {caret}"


@dataclass
class _Tok:
    kind: str  # int, var, op, eof
    text: str
    pos: int
    value: object = None


def _tokenize(src: str) -> list:
    toks = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", src, pos)
        if m.group("int"):
            toks.append(_Tok("int", m.group(), pos, int(m.group())))
        elif m.group("zvar"):
            toks.append(_Tok("var", m.group(), pos, ("z", (int(m.group("zi")), int(m.group("zj"))))))
        elif m.group("var"):
            toks.append(_Tok("var", m.group(), pos, (m.group("fam"), int(m.group("idx")))))
        elif m.group("op"):
            toks.append(_Tok("op", m.group(), pos))
        pos = m.end()
    toks.append(_Tok("eof", "", len(src)))
    return toks


@dataclass
class _RawPoly:
    """A parsed polynomial before it is given a space."""

    kind: str | None
    degree: int
    terms: dict
    pos: int
    var_pos: dict  # index -> first position it appeared at


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        return ParseError(message, self.src, tok.pos)

    def is_op(self, ch: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == ch

    def expect_op(self, ch: str) -> _Tok:
        if not self.is_op(ch):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        return self.advance()

    def expect_end(self):
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")

    def poly(self) -> _RawPoly:
        start = self.tok.pos
        raw = _RawPoly(None, -1, {}, start, {})
        sign = 1
        if self.is_op("-") or self.is_op("+"):
            sign = -1 if self.advance().text == "-" else 1
        self.term(raw, sign)
        while self.is_op("+") or self.is_op("-"):
            sign = -1 if self.advance().text == "-" else 1
            self.term(raw, sign)
        if raw.degree < 0:
            raw.degree = 0
        raw.terms = {k: v for k, v in raw.terms.items() if v}
        return raw

    def term(self, raw: _RawPoly, sign: int):
        start = self.tok
        coeff = 1
        indices: list = []
        if self.tok.kind == "int":
            coeff = self.advance().value
            if self.tok.kind == "var":
                raise self.error("write an explicit '*' between a coefficient and a variable")
            if not self.is_op("*"):
                self._add_term(raw, start, coeff * sign, indices)
                return
            self.advance()
        self.factor(raw, indices)
        while self.is_op("*"):
            self.advance()
            self.factor(raw, indices)
        if self.tok.kind in ("var", "int"):
            raise self.error("write an explicit '*' between factors")
        self._add_term(raw, start, coeff * sign, indices)

    def factor(self, raw: _RawPoly, indices: list):
        tok = self.tok
        if tok.kind != "var":
            found = tok.text or "end of input"
            raise self.error(f"expected a variable (x<i>, y<j> or z[i,j]), found {found!r}")
        self.advance()
        fam, idx = tok.value
        if raw.kind is None:
            raw.kind = fam
        elif raw.kind != fam:
            raise self.error(
                f"mixed variable families: {tok.text} in a polynomial over {raw.kind}-variables", tok
            )
        raw.var_pos.setdefault(idx, tok.pos)
        exp = 1
        if self.is_op("^"):
            self.advance()
            if self.tok.kind != "int":
                raise self.error("expected an integer exponent")
            exp = self.advance().value
        indices.extend([idx] * exp)

    def _add_term(self, raw: _RawPoly, start: _Tok, coeff: int, indices: list):
        deg = len(indices)
        if raw.degree < 0:
            raw.degree = deg
        elif deg != raw.degree:
            raise ParseError(
                f"inhomogeneous polynomial: this term has degree {deg}, earlier terms have degree "
                f"{raw.degree} (degrees {raw.degree} and {deg})",
                self.src,
                start.pos,
            )
        key = tuple(sorted(indices))
        raw.terms[key] = raw.terms.get(key, 0) + coeff


def _infer_space(raws: list, src: str, space: VariableSpace | None) -> VariableSpace:
    kinds = {r.kind for r in raws if r.kind is not None}
    if space is not None:
        for r in raws:
            if r.kind is not None and r.kind != space.kind:
                raise ParseError(f"expected a polynomial over {space.kind}-variables", src, r.pos)
            for idx, pos in r.var_pos.items():
                try:
                    space.check_index(idx)
                except BoundsError as exc:
                    raise ParseError(str(exc), src, pos) from None
        return space
    if len(kinds) > 1:
        first = next(r.kind for r in raws if r.kind is not None)
        bad = next(r for r in raws if r.kind is not None and r.kind != first)
        raise ParseError(f"mixed variable families {sorted(kinds)} in one cycle", src, bad.pos)
    kind = kinds.pop() if kinds else "x"
    idxs = [i for r in raws for i in r.var_pos]
    if kind == "z":
        shape = (max((i for i, _ in idxs), default=0) + 1, max((j for _, j in idxs), default=0) + 1)
    else:
        shape = (max(idxs, default=0) + 1,)
    return VariableSpace(kind, shape)


def parse_polynomial(src: str, space: VariableSpace | None = None) -> Polynomial:
    """Parse one homogeneous polynomial.

    Without ``space`` the family comes from the variables used and the bounds
    are the smallest that fit.
    """
    p = _Parser(src)
    raw = p.poly()
    p.expect_end()
    sp = _infer_space([raw], src, space)
    return Polynomial(sp, raw.degree, raw.terms)


def parse_cycle(src: str, space: VariableSpace | None = None) -> Cycle:
    p = _Parser(src)
    if p.tok.kind == "int" and p.tok.value == 0 and p.toks[1].kind == "eof":
        return Cycle(space or VariableSpace("x", (1,)), [])
    entries = []
    sign = 1
    if p.is_op("-"):
        p.advance()
        sign = -1
    while True:
        if p.is_op("-"):
            p.advance()
            sign = -sign
        tok = p.tok
        if tok.kind != "int":
            found = tok.text or "end of input"
            raise p.error(f"expected an integer multiplicity, found {found!r}")
        mult = sign * p.advance().value
        p.expect_op("*")
        p.expect_op("[")
        raw = p.poly()
        p.expect_op("]")
        entries.append((raw, mult))
        if p.is_op("+") or p.is_op("-"):
            sign = -1 if p.advance().text == "-" else 1
            continue
        break
    p.expect_end()
    sp = _infer_space([r for r, _ in entries], src, space)
    comps = []
    for raw, mult in entries:
        try:
            poly = Polynomial(sp, raw.degree, raw.terms)
            comps.append((poly, mult))
            Cycle(sp, [(poly, 1)])
        except (ShapeError, ValueError) as exc:
            raise ParseError(str(exc), src, raw.pos) from None
    return Cycle(sp, comps)
