"""Parsers for the textual input grammars.

Coefficient atoms are rationals ``p/q`` and cyclotomic literals
``cyc(m; c0, c1, ...)``.  Polynomials use ``+ - * / ^`` with explicit
multiplication, variables ``x, y`` (homogeneous pairs), ``x`` (univariate)
and ``X, Y, Z`` (space maps).  Points are ``[expr : expr]``, 2x2 matrices
``[[a, b], [c, d]]``.
"""
from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, euler_phi
from .errors import ParseError
from .poly import MPoly, UPoly, URatFun, HPoly2, POLY3_VARS


class _Tok:
    __slots__ = ("kind", "val", "pos")

    def __init__(self, kind, val, pos):
        self.kind, self.val, self.pos = kind, val, pos


def _tokenize(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("num", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()[]:,;=":
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}")
    toks.append(_Tok("end", None, n))
    return toks


class _Parser:
    """Recursive-descent expression parser over a coefficient environment.

    ``env`` maps variable names to ring values.  Division is delegated to
    ``divide`` so each target ring can allow or reject it.
    """

    def __init__(self, text: str, env: dict, const, divide):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.env = env
        self.const = const
        self.divide = divide

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.toks[self.i]
        if kind is not None and t.kind != kind:
            raise ParseError(f"expected {kind!r}, found {t.kind!r} "
                             f"at position {t.pos} in {self.text!r}")
        self.i += 1
        return t

    def done(self):
        if self.peek().kind != "end":
            t = self.peek()
            raise ParseError(f"trailing input at position {t.pos} in {self.text!r}")

    def expr(self):
        t = self.peek()
        if t.kind in "+-":
            self.take()
            v = self.term()
            v = -v if t.kind == "-" else v
        else:
            v = self.term()
        while self.peek().kind in "+-":
            op = self.take().kind
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.power()
        while self.peek().kind in "*/":
            op = self.take().kind
            rhs = self.power()
            v = v * rhs if op == "*" else self.divide(v, rhs)
        return v

    def power(self):
        v = self.atom()
        while self.peek().kind == "^":
            self.take()
            e = self.take("num").val
            v = v ** e
        return v

    def atom(self):
        t = self.take()
        if t.kind == "num":
            return self.const(Fraction(t.val))
        if t.kind == "(":
            v = self.expr()
            self.take(")")
            return v
        if t.kind == "name":
            if t.val == "cyc":
                return self.const(self.cyc_literal())
            if t.val in self.env:
                return self.env[t.val]
            raise ParseError(f"unknown variable {t.val!r} at position {t.pos}")
        raise ParseError(f"unexpected token {t.kind!r} at position {t.pos}")

    def signed_rational(self) -> Fraction:
        sign = 1
        while self.peek().kind in "+-":
            if self.take().kind == "-":
                sign = -sign
        num = self.take("num").val
        den = 1
        if self.peek().kind == "/":
            self.take()
            den = self.take("num").val
        return Fraction(sign * num, den)

    def cyc_literal(self) -> CycNum:
        self.take("(")
        m = self.take("num").val
        if m < 1:
            raise ParseError("cyclotomic conductor must be positive")
        self.take(";")
        coeffs = [self.signed_rational()]
        while self.peek().kind == ",":
            self.take()
            coeffs.append(self.signed_rational())
        self.take(")")
        if len(coeffs) > euler_phi(m):
            raise ParseError(
                f"cyc({m}; ...) takes at most {euler_phi(m)} coefficients")
        return CycNum.from_coeffs(m, coeffs)


def _div_generic(a, b):
    try:
        return a / b
    except ZeroDivisionError as e:
        raise ParseError(str(e)) from e


def _div_mpoly(a: MPoly, b: MPoly):
    if not b.is_zero() and b.total_degree() == 0:
        inv = next(iter(b.c.values())).inverse()
        return a * inv
    raise ParseError("division by a non-constant is not allowed here")


def parse_constant(text: str) -> CycNum:
    p = _Parser(text, {}, lambda q: CycNum(q), _div_generic)
    v = p.expr()
    p.done()
    return v


def parse_ratfun(text: str) -> URatFun:
    env = {"x": URatFun.x(), "t": URatFun.x()}
    p = _Parser(text, env, URatFun.const, _div_generic)
    v = p.expr()
    p.done()
    return v


def parse_upoly(text: str) -> UPoly:
    v = parse_ratfun(text)
    if not v.is_poly():
        raise ParseError(f"{text!r} is not a polynomial")
    return v.num  # denominator is monic constant 1 after reduction


def _parse_mpoly(text: str, variables) -> MPoly:
    env = {name: MPoly.var(variables, name) for name in variables}
    p = _Parser(text, env, lambda q: MPoly.const(variables, q), _div_mpoly)
    v = p.expr()
    p.done()
    return v


def parse_poly3(text: str) -> MPoly:
    return _parse_mpoly(text, POLY3_VARS)


def parse_hpoly(text: str) -> HPoly2:
    mp = _parse_mpoly(text, ("x", "y"))
    if mp.is_zero():
        return HPoly2.zero()
    degrees = {i + j for (i, j) in mp.c}
    if len(degrees) != 1:
        raise ParseError(f"{text!r} is not homogeneous")
    d = degrees.pop()
    return HPoly2(d, {i: v for (i, j), v in mp.c.items()})


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def parse_point(text: str) -> tuple[CycNum, CycNum]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"point must look like [a : b], got {text!r}")
    inner = text[1:-1]
    parts = _split_top(inner, ":")
    if len(parts) != 2:
        raise ParseError(f"point must have two coordinates: {text!r}")
    return parse_constant(parts[0]), parse_constant(parts[1])


def parse_points(text: str) -> list[tuple[CycNum, CycNum]]:
    parts = _split_top(text.strip(), ",")
    # points contain commas only inside cyc(...) which sits inside brackets
    out = []
    for chunk in parts:
        if chunk:
            out.append(parse_point(chunk))
    if not out:
        raise ParseError("empty point list")
    return out


def parse_matrix2(text: str) -> tuple[CycNum, CycNum, CycNum, CycNum]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"matrix must look like [[a,b],[c,d]]: {text!r}")
    rows = _split_top(text[1:-1], ",")
    if len(rows) != 2:
        raise ParseError("matrix needs two rows")
    entries = []
    for row in rows:
        row = row.strip()
        if not (row.startswith("[") and row.endswith("]")):
            raise ParseError(f"matrix row must be bracketed: {row!r}")
        cols = _split_top(row[1:-1], ",")
        if len(cols) != 2:
            raise ParseError("matrix row needs two entries")
        entries.extend(parse_constant(c) for c in cols)
    return tuple(entries)


def parse_poly3_triple(text: str) -> tuple[MPoly, MPoly, MPoly]:
    parts = _split_top(text.strip(), ";")
    if len(parts) != 3:
        raise ParseError("expected three components separated by ';'")
    return tuple(parse_poly3(p) for p in parts)


def parse_ratfun_triple(text: str) -> tuple[URatFun, URatFun, URatFun]:
    parts = _split_top(text.strip(), ";")
    if len(parts) != 3:
        raise ParseError("expected three components separated by ';'")
    return tuple(parse_ratfun(p) for p in parts)
