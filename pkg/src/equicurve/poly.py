"""Polynomial and rational-function arithmetic over CycNum coefficients.

Four shapes cover everything the constructions need:

* :class:`UPoly` - dense univariate polynomials (curve data on A^1);
* :class:`URatFun` - reduced univariate rational functions;
* :class:`HPoly2` - homogeneous bivariate polynomials, a sparse map from
  x-exponent to coefficient (monomial ``x^i y^(d-i)``);
* :class:`MPoly` - sparse multivariate polynomials with named variables
  (polynomial maps of A^3, witness polynomials, identity checking).
"""
from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, as_cyc
from .errors import DegreeMismatchError, ZeroPolynomialError

_C0 = CycNum(0)
_C1 = CycNum(1)


def _fmt_coeff(c: CycNum) -> str:
    return str(c)


def _fmt_term(c: CycNum, mono: str, first: bool) -> str:
    s = _fmt_coeff(c)
    neg = s.startswith("-") and not s.startswith("-c")  # plain negative rational
    if neg:
        s = s[1:]
    if mono:
        if s == "1":
            s = mono
        else:
            s = f"{s}*{mono}"
    sign = ("-" if neg else "") if first else (" - " if neg else " + ")
    return sign + s


# ---------------------------------------------------------------------------


class UPoly:
    """Dense univariate polynomial, coefficients ascending by degree."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        cs = [as_cyc(v) for v in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.c = tuple(cs)

    @staticmethod
    def const(v) -> "UPoly":
        return UPoly([as_cyc(v)])

    @staticmethod
    def x() -> "UPoly":
        return UPoly([0, 1])

    @staticmethod
    def from_roots(roots) -> "UPoly":
        out = UPoly.const(1)
        for r in roots:
            out = out * UPoly([-as_cyc(r), _C1])
        return out

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def lead(self) -> CycNum:
        if not self.c:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.c == other.c

    __hash__ = None

    def __add__(self, other):
        a, b = self.c, other.c
        n = max(len(a), len(b))
        return UPoly([(a[i] if i < len(a) else _C0) + (b[i] if i < len(b) else _C0)
                      for i in range(n)])

    def __sub__(self, other):
        a, b = self.c, other.c
        n = max(len(a), len(b))
        return UPoly([(a[i] if i < len(a) else _C0) - (b[i] if i < len(b) else _C0)
                      for i in range(n)])

    def __neg__(self):
        return UPoly([-v for v in self.c])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            s = as_cyc(other)
            return UPoly([v * s for v in self.c])
        a, b = self.c, other.c
        if not a or not b:
            return UPoly()
        out = [_C0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def divmod(self, other: "UPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        db = other.degree
        inv = other.lead().inverse()
        q = [_C0] * max(0, len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            if rem[i]:
                f = rem[i] * inv
                q[i - db] = f
                for j, bj in enumerate(other.c):
                    if bj:
                        rem[i - db + j] = rem[i - db + j] - f * bj
        return UPoly(q), UPoly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def divexact(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ZeroPolynomialError("inexact polynomial division")
        return q

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        inv = self.lead().inverse()
        return UPoly([v * inv for v in self.c])

    def derivative(self) -> "UPoly":
        return UPoly([self.c[i] * i for i in range(1, len(self.c))])

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "UPoly"):
        """(g, u, v) with u*self + v*other = g, g monic."""
        r0, r1 = self, other
        u0, u1 = UPoly.const(1), UPoly()
        v0, v1 = UPoly(), UPoly.const(1)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            u0, u1 = u1, u0 - q * u1
            v0, v1 = v1, v0 - q * v1
        if r0.is_zero():
            return r0, u0, v0
        inv = r0.lead().inverse()
        return r0.monic(), u0 * inv, v0 * inv

    def squarefree_part(self) -> "UPoly":
        if self.is_zero():
            raise ZeroPolynomialError("squarefree part of zero")
        d = self.derivative()
        if d.is_zero():
            return UPoly.const(1)
        return self.divexact(self.gcd(d)).monic()

    def eval(self, v: CycNum) -> CycNum:
        out = _C0
        for coeff in reversed(self.c):
            out = out * v + coeff
        return out

    def compose(self, inner):
        """Substitute ``inner`` (UPoly or URatFun) for the variable."""
        if isinstance(inner, URatFun):
            out = URatFun(UPoly(), UPoly.const(1))
            for coeff in reversed(self.c):
                out = out * inner + URatFun(UPoly.const(coeff), UPoly.const(1))
            return out
        out = UPoly()
        for coeff in reversed(self.c):
            out = out * inner + UPoly.const(coeff)
        return out

    def __str__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            v = self.c[i]
            if not v:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            parts.append(_fmt_term(v, mono, not parts))
        return "".join(parts)

    __repr__ = __str__


class URatFun:
    """Rational function num/den, gcd-reduced, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly | None = None):
        if den is None:
            den = UPoly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = UPoly(), UPoly.const(1)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num.divexact(g), den.divexact(g)
        lead_inv = den.lead().inverse()
        self.num, self.den = num * lead_inv, den * lead_inv

    @staticmethod
    def const(v) -> "URatFun":
        return URatFun(UPoly.const(v))

    @staticmethod
    def x() -> "URatFun":
        return URatFun(UPoly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = URatFun.const(other)
        return isinstance(other, URatFun) and self.num == other.num and self.den == other.den

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = URatFun.const(other)
        return URatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = URatFun.const(other)
        return URatFun(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return URatFun.const(other) - self

    def __neg__(self):
        return URatFun(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return URatFun(self.num * as_cyc(other), self.den)
        return URatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = URatFun.const(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return URatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return URatFun.const(other) / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("inverse of zero")
            return URatFun(self.den, self.num) ** (-n)
        out = URatFun.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def compose(self, inner: "URatFun") -> "URatFun":
        n = self.num.compose(inner)
        d = self.den.compose(inner)
        if not isinstance(n, URatFun):
            n = URatFun(n)
        if not isinstance(d, URatFun):
            d = URatFun(d)
        return n / d

    def eval(self, v: CycNum) -> CycNum:
        d = self.den.eval(v)
        if not d:
            raise ZeroDivisionError("pole at the evaluation point")
        return self.num.eval(v) / d

    def __str__(self) -> str:
        if self.is_poly():
            return str(self.num)
        num = str(self.num)
        if " " in num:
            num = f"({num})"
        den = str(self.den)
        if " " in den or "*" in den:
            den = f"({den})"
        return f"{num} / {den}"

    __repr__ = __str__


# ---------------------------------------------------------------------------


class HPoly2:
    """Homogeneous polynomial in x, y; sparse on the x-exponent."""

    __slots__ = ("d", "c")

    def __init__(self, d: int = -1, coeffs: dict | None = None):
        c = {i: as_cyc(v) for i, v in (coeffs or {}).items() if as_cyc(v)}
        if not c:
            d = -1
        self.d = d
        self.c = c

    @staticmethod
    def zero() -> "HPoly2":
        return HPoly2()

    @staticmethod
    def term(coeff, i: int, j: int) -> "HPoly2":
        return HPoly2(i + j, {i: as_cyc(coeff)})

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    @property
    def degree(self) -> int:
        return self.d

    def x_valuation(self) -> int:
        if not self.c:
            raise ZeroPolynomialError("valuation of zero")
        return min(self.c)

    def y_valuation(self) -> int:
        if not self.c:
            raise ZeroPolynomialError("valuation of zero")
        return self.d - max(self.c)

    def lead(self) -> CycNum:
        """Coefficient at the highest x-exponent."""
        if not self.c:
            raise ZeroPolynomialError("zero polynomial")
        return self.c[max(self.c)]

    def __eq__(self, other):
        if not isinstance(other, HPoly2):
            return NotImplemented
        return self.d == other.d and self.keys_eq(other)

    def keys_eq(self, other):
        if set(self.c) != set(other.c):
            return False
        return all(self.c[k] == other.c[k] for k in self.c)

    __hash__ = None

    def __add__(self, other: "HPoly2"):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.d != other.d:
            raise DegreeMismatchError(
                f"cannot add homogeneous degrees {self.d} and {other.d}")
        out = dict(self.c)
        for i, v in other.c.items():
            s = out.get(i, _C0) + v
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        return HPoly2(self.d, out)

    def __sub__(self, other: "HPoly2"):
        return self + (-other)

    def __neg__(self):
        return HPoly2(self.d, {i: -v for i, v in self.c.items()})

    def scale(self, s) -> "HPoly2":
        s = as_cyc(s)
        if not s:
            return HPoly2()
        return HPoly2(self.d, {i: v * s for i, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return HPoly2()
        out: dict[int, CycNum] = {}
        for i, a in self.c.items():
            for j, b in other.c.items():
                k = i + j
                s = out.get(k, _C0) + a * b
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return HPoly2(self.d + other.d, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = HPoly2.term(1, 0, 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def eval(self, a, b) -> CycNum:
        a, b = as_cyc(a), as_cyc(b)
        if self.is_zero():
            return _C0
        pa = {0: _C1}
        pb = {0: _C1}
        out = _C0
        for i in sorted(self.c):
            j = self.d - i
            if i not in pa:
                pa[i] = a ** i
            if j not in pb:
                pb[j] = b ** j
            out = out + self.c[i] * pa[i] * pb[j]
        return out

    def compose_matrix(self, mat) -> "HPoly2":
        """Substitute (x, y) <- (m11 x + m12 y, m21 x + m22 y)."""
        if self.is_zero():
            return self
        m11, m12, m21, m22 = (as_cyc(v) for v in mat)
        d = self.d
        if not m12 and not m21:
            return HPoly2(d, {i: v * m11 ** i * m22 ** (d - i)
                              for i, v in self.c.items()})
        if not m11 and not m22:
            return HPoly2(d, {d - i: v * m12 ** i * m21 ** (d - i)
                              for i, v in self.c.items()})
        ax = [_C1]  # powers of m11 x + m12 y as coefficient lists on x-exp
        lin_a = [m12, m11]
        lin_b = [m22, m21]
        pows_a = [[_C1]]
        pows_b = [[_C1]]
        for _ in range(d):
            pows_a.append(_lin_mul(pows_a[-1], lin_a))
            pows_b.append(_lin_mul(pows_b[-1], lin_b))
        out: dict[int, CycNum] = {}
        for i, v in self.c.items():
            pa, pb = pows_a[i], pows_b[d - i]
            for s, cs in enumerate(pa):
                if not cs:
                    continue
                for t, ct in enumerate(pb):
                    if not ct:
                        continue
                    k = s + t
                    acc = out.get(k, _C0) + v * cs * ct
                    if acc:
                        out[k] = acc
                    else:
                        out.pop(k, None)
        return HPoly2(d, out)

    # -- divisibility and gcd ------------------------------------------------

    def dehomogenize(self) -> UPoly:
        """f(x, 1) as a univariate polynomial."""
        if self.is_zero():
            return UPoly()
        out = [_C0] * (max(self.c) + 1)
        for i, v in self.c.items():
            out[i] = v
        return UPoly(out)

    @staticmethod
    def rehomogenize(u: UPoly, d: int) -> "HPoly2":
        if u.is_zero():
            return HPoly2()
        if u.degree > d:
            raise ValueError("degree too large to homogenize")
        return HPoly2(d, {i: v for i, v in enumerate(u.c) if v})

    def divexact(self, other: "HPoly2") -> "HPoly2":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return HPoly2()
        vx, vy = self.x_valuation(), self.y_valuation()
        wx, wy = other.x_valuation(), other.y_valuation()
        if vx < wx or vy < wy:
            raise ZeroPolynomialError("inexact homogeneous division")
        # strip the x valuation, divide dehomogenizations exactly
        a_u = UPoly([self.c.get(i, _C0) for i in range(vx, max(self.c) + 1)])
        b_u = UPoly([other.c.get(i, _C0) for i in range(wx, max(other.c) + 1)])
        q_u = a_u.divexact(b_u)
        dq = self.d - other.d
        q = HPoly2(dq, {i + (vx - wx): v for i, v in enumerate(q_u.c) if v})
        return q

    def gcd(self, other: "HPoly2") -> "HPoly2":
        if self.is_zero():
            return other.normalized()
        if other.is_zero():
            return self.normalized()
        vx = min(self.x_valuation(), other.x_valuation())
        vy = min(self.y_valuation(), other.y_valuation())
        a_u = UPoly([self.c.get(i, _C0)
                     for i in range(self.x_valuation(), max(self.c) + 1)])
        b_u = UPoly([other.c.get(i, _C0)
                     for i in range(other.x_valuation(), max(other.c) + 1)])
        g_u = a_u.gcd(b_u)
        g = HPoly2(g_u.degree + vx + vy,
                   {i + vx: v for i, v in enumerate(g_u.c) if v})
        return g.normalized()

    def squarefree_decomp(self) -> tuple["HPoly2", "HPoly2"]:
        """(squarefree part, cofactor) with self = part * cofactor."""
        if self.is_zero():
            raise ZeroPolynomialError("squarefree part of zero")
        vx, vy = self.x_valuation(), self.y_valuation()
        core_u = UPoly([self.c.get(i, _C0) for i in range(vx, max(self.c) + 1)])
        sf_u = core_u.squarefree_part()
        d_sf = sf_u.degree + min(vx, 1) + min(vy, 1)
        sf = HPoly2(d_sf, {i + min(vx, 1): v for i, v in enumerate(sf_u.c) if v})
        sf = sf.normalized()
        return sf, self.divexact(sf)

    def normalized(self) -> "HPoly2":
        """Scale so the coefficient at the highest x-exponent is 1."""
        if self.is_zero():
            return self
        return self.scale(self.lead().inverse())

    def proportional_to(self, other: "HPoly2") -> CycNum | None:
        """Scalar s with self = s * other, or None."""
        if self.is_zero():
            return _C0
        if other.is_zero() or self.d != other.d or set(self.c) != set(other.c):
            return None
        k = max(self.c)
        s = self.c[k] / other.c[k]
        for i, v in self.c.items():
            if v != s * other.c[i]:
                return None
        return s

    def __str__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for i in sorted(self.c, reverse=True):
            j = self.d - i
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            ys = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            mono = "*".join(s for s in (xs, ys) if s)
            parts.append(_fmt_term(self.c[i], mono, not parts))
        return "".join(parts)

    __repr__ = __str__


def _lin_mul(coeffs: list[CycNum], lin: list[CycNum]) -> list[CycNum]:
    # multiply a dense x-exponent list by (lin[1] x + lin[0] y), homogeneous
    out = [_C0] * (len(coeffs) + 1)
    c0, c1 = lin
    for i, v in enumerate(coeffs):
        if v:
            out[i] = out[i] + v * c0
            out[i + 1] = out[i + 1] + v * c1
    return out


def compose_matrix_many(polys, mat):
    """Substitute one matrix into several same-degree homogeneous polys,
    sharing the powers of the two substituted linear forms."""
    degs = {p.d for p in polys if not p.is_zero()}
    if not degs:
        return list(polys)
    if len(degs) != 1:
        return [p.compose_matrix(mat) for p in polys]
    d = degs.pop()
    m11, m12, m21, m22 = (as_cyc(v) for v in mat)
    if (not m12 and not m21) or (not m11 and not m22):
        return [p.compose_matrix(mat) for p in polys]
    lin_a = [m12, m11]
    lin_b = [m22, m21]
    pows_a = [[_C1]]
    pows_b = [[_C1]]
    for _ in range(d):
        pows_a.append(_lin_mul(pows_a[-1], lin_a))
        pows_b.append(_lin_mul(pows_b[-1], lin_b))
    prods: dict[int, list[CycNum]] = {}
    needed = sorted({i for p in polys for i in p.c})
    for i in needed:
        pa, pb = pows_a[i], pows_b[d - i]
        dense = [_C0] * (d + 1)
        for s, cs in enumerate(pa):
            if cs:
                for t, ct in enumerate(pb):
                    if ct:
                        dense[s + t] = dense[s + t] + cs * ct
        prods[i] = dense
    out = []
    for p in polys:
        if p.is_zero():
            out.append(p)
            continue
        acc = [_C0] * (d + 1)
        for i, v in p.c.items():
            row = prods[i]
            for k in range(d + 1):
                if row[k]:
                    acc[k] = acc[k] + v * row[k]
        out.append(HPoly2(d, {k: c for k, c in enumerate(acc) if c}))
    return out


def hpoly_from_pairs(pairs) -> HPoly2:
    """Build from (coeff, x_exp, y_exp) triples; degrees must agree."""
    out = HPoly2()
    for coeff, i, j in pairs:
        out = out + HPoly2.term(coeff, i, j)
    return out


# ---------------------------------------------------------------------------


class MPoly:
    """Sparse multivariate polynomial with named variables."""

    __slots__ = ("vars", "c")

    def __init__(self, variables: tuple[str, ...], coeffs: dict | None = None):
        self.vars = tuple(variables)
        n = len(self.vars)
        c = {}
        for e, v in (coeffs or {}).items():
            v = as_cyc(v)
            if v:
                if len(e) != n:
                    raise ValueError("exponent arity mismatch")
                c[tuple(e)] = v
        self.c = c

    @staticmethod
    def const(variables, v) -> "MPoly":
        z = tuple(0 for _ in variables)
        return MPoly(variables, {z: as_cyc(v)})

    @staticmethod
    def var(variables, name) -> "MPoly":
        e = tuple(1 if n == name else 0 for n in variables)
        if sum(e) != 1:
            raise ValueError(f"unknown variable {name}")
        return MPoly(variables, {e: _C1})

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.c), default=-1)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        if self.vars != other.vars or set(self.c) != set(other.c):
            return False
        return all(self.c[k] == other.c[k] for k in self.c)

    __hash__ = None

    def _check(self, other: "MPoly"):
        if self.vars != other.vars:
            raise ValueError("variable sets differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = MPoly.const(self.vars, other)
        self._check(other)
        out = dict(self.c)
        for e, v in other.c.items():
            s = out.get(e, _C0) + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = MPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return MPoly.const(self.vars, other) - self

    def __neg__(self):
        return MPoly(self.vars, {e: -v for e, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            s = as_cyc(other)
            return MPoly(self.vars, {e: v * s for e, v in self.c.items()})
        self._check(other)
        out: dict[tuple, CycNum] = {}
        for e1, a in self.c.items():
            for e2, b in other.c.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                s = out.get(e, _C0) + a * b
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def substitute(self, values):
        """Evaluate at ring elements (CycNum, URatFun, MPoly, ...)."""
        values = list(values)
        if len(values) != len(self.vars):
            raise ValueError("wrong number of substitution values")
        one = values[0] ** 0 if values else 1
        pows = [{} for _ in values]
        total = one * 0
        for e in sorted(self.c):
            term = one * self.c[e]
            for i, ei in enumerate(e):
                if ei:
                    if ei not in pows[i]:
                        pows[i][ei] = values[i] ** ei
                    term = term * pows[i][ei]
            total = total + term
        return total

    def __str__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            monos = []
            for name, ei in zip(self.vars, e):
                if ei == 1:
                    monos.append(name)
                elif ei > 1:
                    monos.append(f"{name}^{ei}")
            parts.append(_fmt_term(self.c[e], "*".join(monos), not parts))
        return "".join(parts)

    __repr__ = __str__


POLY3_VARS = ("X", "Y", "Z")


def poly3_const(v) -> MPoly:
    return MPoly.const(POLY3_VARS, v)


def poly3_var(name: str) -> MPoly:
    return MPoly.var(POLY3_VARS, name)


def poly3_compose(outer, inner):
    """Component-wise substitution of one A^3 polynomial triple in another."""
    return tuple(f.substitute(inner) for f in outer)


def poly3_identity():
    return tuple(poly3_var(n) for n in POLY3_VARS)
