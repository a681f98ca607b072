"""Polynomial expressions: ``x^5 - x - 1``, ``y^4+7*y^2-2*y+14`` and, over a
number field, bracketed power-basis coefficients such as
``x^4 - ([0,0,1]+3)*x^2 - 1`` where ``[c0,c1,...]`` means c0 + c1*y + ...
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .nf import MonicPoly, NFElem, NumberField


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}\n  {text}\n  {' ' * pos}^"
        super().__init__(message)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


@dataclass
class _Tok:
    kind: str  # int, name, op, end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out, i = [], 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            out.append(_Tok("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(_Tok("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch == "*" and text.startswith("**", m.start(3)):
                out.append(_Tok("op", "^", m.start(3)))
                i = m.start(3) + 2
                continue
            if ch not in "+-*^()[],":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            out.append(_Tok("op", ch, m.start(3)))
        i = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent over dense polynomials {degree: coefficient}."""

    def __init__(self, text: str, var: str, K: NumberField | None):
        self.text, self.var, self.K = text, var, K
        self.toks = _tokenize(text)
        self.i = 0

    # coefficient ring helpers
    def _const(self, c):
        return self.K(c) if self.K is not None else c

    def _peek(self) -> _Tok:
        return self.toks[self.i]

    def _take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def _error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self._peek()
        raise ParseError(msg, self.text, tok.pos)

    def parse(self) -> dict:
        if self._peek().kind == "end":
            raise ParseError("empty expression", self.text, 0)
        p = self._expr()
        if self._peek().kind != "end":
            self._error(f"unexpected {self._peek().text!r}")
        return p

    def _expr(self) -> dict:
        acc = self._term()
        while self._peek().kind == "op" and self._peek().text in "+-":
            op = self._take().text
            rhs = self._term()
            acc = _padd(acc, rhs if op == "+" else _pneg(rhs))
        return acc

    def _starts_factor(self, t: _Tok) -> bool:
        return t.kind in ("int", "name") or (t.kind == "op" and t.text in "([")

    def _term(self) -> dict:
        acc = self._unary()
        while True:
            t = self._peek()
            if t.kind == "op" and t.text == "*":
                self._take()
                acc = _pmul(acc, self._unary())
            elif self._starts_factor(t):
                # juxtaposition, e.g. 3x or 2(x+1)
                acc = _pmul(acc, self._power())
            else:
                return acc

    def _unary(self) -> dict:
        t = self._peek()
        if t.kind == "op" and t.text in "+-":
            self._take()
            v = self._unary()
            return v if t.text == "+" else _pneg(v)
        return self._power()

    def _power(self) -> dict:
        base = self._atom()
        if self._peek().kind == "op" and self._peek().text == "^":
            self._take()
            t = self._take()
            if t.kind != "int":
                self._error("exponent must be a nonnegative integer literal", t)
            n = int(t.text)
            out = {0: self._const(1)}
            for _ in range(n):
                out = _pmul(out, base)
            return out
        return base

    def _atom(self) -> dict:
        t = self._take()
        if t.kind == "int":
            return {0: self._const(int(t.text))}
        if t.kind == "name":
            if t.text != self.var:
                self._error(f"unknown variable {t.text!r} (expected {self.var!r})", t)
            return {1: self._const(1)}
        if t.kind == "op" and t.text == "(":
            v = self._expr()
            close = self._take()
            if close.text != ")":
                self._error("expected ')'", close)
            return v
        if t.kind == "op" and t.text == "[":
            return {0: self._bracket(t)}
        self._error("expected a number, variable or '('", t)

    def _bracket(self, open_tok: _Tok):
        if self.K is None:
            self._error("bracketed coefficients need a number field (--field)", open_tok)
        coords = []
        while True:
            sign = 1
            t = self._take()
            if t.kind == "op" and t.text in "+-":
                sign = -1 if t.text == "-" else 1
                t = self._take()
            if t.kind != "int":
                self._error("expected an integer coordinate", t)
            coords.append(sign * int(t.text))
            t = self._take()
            if t.text == "]":
                break
            if t.text != ",":
                self._error("expected ',' or ']'", t)
        if len(coords) > self.K.m:
            self._error(f"too many coordinates for a degree-{self.K.m} field", open_tok)
        return self.K(coords)


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for d, c in b.items():
        out[d] = out[d] + c if d in out else c
    return out


def _pneg(a: dict) -> dict:
    return {d: -c for d, c in a.items()}


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            v = x * y
            out[i + j] = out[i + j] + v if i + j in out else v
    return out


def _dense(p: dict) -> list:
    nz = [d for d, c in p.items() if c]
    if not nz:
        return []
    n = max(nz)
    zero = next(iter(p.values())) * 0
    return [p.get(d, zero) for d in range(n + 1)]


def parse_zpoly(text: str, var: str = "x") -> list[int]:
    """Integer polynomial in ``var`` as a coefficient list (lowest degree first)."""
    return _dense(_Parser(text, var, None).parse())


def parse_poly(text: str, var: str = "x", field: NumberField | None = None) -> MonicPoly:
    """Monic polynomial in ``var`` over ``field`` (default Q)."""
    if not text or not text.strip():
        raise ParseError("empty expression")
    K = field or NumberField.rationals()
    coeffs = _dense(_Parser(text, var, None if K.is_rational else K).parse())
    if len(coeffs) < 2:
        raise ParseError("polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise ParseError(f"polynomial is not monic (leading coefficient {coeffs[-1]})")
    return MonicPoly(K, tuple(coeffs))


def parse_field(text: str | None) -> NumberField:
    """K = Q[y]/(g) from the text of g; ``None``, '' or 'Q' give the rationals."""
    if text is None or text.strip() in ("", "Q", "QQ"):
        return NumberField.rationals()
    g = parse_zpoly(text, "y")
    if len(g) < 2 or g[-1] != 1:
        raise ParseError("field polynomial must be monic of degree >= 1")
    return NumberField(tuple(g))


# ---------------------------------------------------------------------------
# printing


def _monomial(var: str, d: int) -> str:
    return "" if d == 0 else var if d == 1 else f"{var}^{d}"


def format_zpoly(coeffs: list[int], var: str = "x") -> str:
    """Canonical text: descending powers, ``x^5 - x - 1``."""
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        mono = _monomial(var, d)
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _elem_text(c: NFElem) -> str:
    return "[" + ",".join(str(v) for v in c.coords) + "]"


def format_poly(f: MonicPoly, var: str = "x") -> str:
    if f.K.is_rational:
        return format_zpoly(f.int_coeffs(), var)
    parts = []
    for d in range(f.k, -1, -1):
        c = f.coeffs[d]
        if not c:
            continue
        mono = _monomial(var, d)
        if all(v == 0 for v in c.coords[1:]):
            n = c.coords[0]
            mag = abs(n)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if n < 0 else "+"
        else:
            body = _elem_text(c) if not mono else f"{_elem_text(c)}*{mono}"
            sign = "+"
        if not parts:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
