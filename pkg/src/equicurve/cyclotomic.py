"""Exact arithmetic in Q and in the cyclotomic fields Q(zeta_m).

A value is stored as its residue modulo the m-th cyclotomic polynomial, a
dense tuple of ``phi(m)`` rationals in the power basis 1, zeta, ...,
zeta^(phi(m)-1).  Reduction modulo the cyclotomic polynomial (rather than
x^m - 1) makes equality of same-conductor values a tuple comparison.

Conductors are kept normalized: m = 2 mod 4 never occurs, since
Q(zeta_2k) = Q(zeta_k) for odd k.  Mixed-conductor arithmetic unifies into
Q(zeta_lcm) automatically; growth past a configurable degree cap raises
:class:`ConductorCapError`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ConductorCapError

_ZERO = Fraction(0)
_ONE = Fraction(1)

_conductor_cap = 256


def set_conductor_cap(max_degree: int) -> None:
    """Set the maximal allowed field degree phi(m); default 256."""
    global _conductor_cap
    if max_degree < 1:
        raise ValueError("conductor cap must be positive")
    _conductor_cap = max_degree


def get_conductor_cap() -> int:
    return _conductor_cap


def _check_cap(m: int) -> None:
    if euler_phi(m) > _conductor_cap:
        raise ConductorCapError(
            f"conductor {m} needs field degree {euler_phi(m)} "
            f"> cap {_conductor_cap}; raise it with set_conductor_cap()"
        )


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    ps = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            ps.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        ps.append(n)
    return tuple(ps)


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    out = m
    for p in _prime_factors(m):
        out = out // p * (p - 1)
    return out


def _normal_conductor(m: int) -> int:
    # Q(zeta_2k) = Q(zeta_k) for odd k
    return m // 2 if m % 4 == 2 else m


def _int_poly_div(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, ascending degree, monic."""
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _int_poly_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_vector(m: int, e: int) -> tuple[int, ...]:
    """x^e mod Phi_m as an integer coefficient tuple of length phi(m)."""
    phi = euler_phi(m)
    e %= m
    if e < phi:
        return tuple(1 if i == e else 0 for i in range(phi))
    phim = cyclotomic_polynomial(m)
    # x^e = x * x^(e-1), reduced
    prev = _power_vector(m, e - 1)
    shifted = [0] + list(prev)
    top = shifted.pop()
    if top:
        for j in range(phi):
            shifted[j] -= top * phim[j]
    return tuple(shifted)


def _reduce_coeffs(m: int, raw: list[Fraction]) -> tuple[Fraction, ...]:
    phi = euler_phi(m)
    out = list(raw[:phi]) + [_ZERO] * (phi - min(phi, len(raw)))
    for e in range(phi, len(raw)):
        c = raw[e]
        if c:
            vec = _power_vector(m, e)
            for j in range(phi):
                if vec[j]:
                    out[j] += c * vec[j]
    return tuple(out)


@lru_cache(maxsize=None)
def _embed_vectors(m: int, big: int) -> tuple[tuple[int, ...], ...]:
    step = big // m
    return tuple(_power_vector(big, i * step) for i in range(euler_phi(m)))


def _embed(c: tuple[Fraction, ...], m: int, big: int) -> tuple[Fraction, ...]:
    if m == big:
        return c
    _check_cap(big)
    vecs = _embed_vectors(m, big)
    out = [_ZERO] * euler_phi(big)
    for i, ci in enumerate(c):
        if ci:
            vec = vecs[i]
            for j in range(len(out)):
                if vec[j]:
                    out[j] += ci * vec[j]
    return tuple(out)


# ---------------------------------------------------------------------------
# small helpers on Fraction polynomials (used for inversion and descent)

def _fpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = len(b) - 1
    while b and not b[-1]:
        b = b[:-1]
        db -= 1
    q = [_ZERO] * max(0, len(a) - db)
    inv_lead = 1 / b[db]
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            f = a[i] * inv_lead
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    while a and not a[-1]:
        a.pop()
    return q, a


def _fpoly_xgcd(a: list[Fraction], b: list[Fraction]):
    # returns (g, u) with u*a = g mod b, g the gcd of a and b
    r0, r1 = list(a), list(b)
    u0, u1 = [_ONE], []
    while r1:
        q, r = _fpoly_divmod(r0, r1)
        r0, r1 = r1, r
        # u0 - q*u1
        prod = [_ZERO] * (len(q) + len(u1) - 1 if q and u1 else 0)
        for i, qi in enumerate(q):
            if qi:
                for j, uj in enumerate(u1):
                    prod[i + j] += qi * uj
        nxt = [_ZERO] * max(len(u0), len(prod))
        for i, c in enumerate(u0):
            nxt[i] += c
        for i, c in enumerate(prod):
            nxt[i] -= c
        while nxt and not nxt[-1]:
            nxt.pop()
        u0, u1 = u1, nxt
    return r0, u0


class CycNum:
    """Exact element of a cyclotomic field Q(zeta_m).

    Immutable; all arithmetic is pure and may be shared freely between
    threads.  Mixing conductors unifies into the least common one.
    """

    __slots__ = ("m", "c")

    def __init__(self, value=0):
        if isinstance(value, CycNum):
            object.__setattr__(self, "m", value.m)
            object.__setattr__(self, "c", value.c)
            return
        q = Fraction(value)
        object.__setattr__(self, "m", 1)
        object.__setattr__(self, "c", (q,))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CycNum is immutable")

    @staticmethod
    def _make(m: int, coeffs: tuple[Fraction, ...]) -> "CycNum":
        self = object.__new__(CycNum)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "c", coeffs)
        return self

    @staticmethod
    def from_coeffs(m: int, coeffs) -> "CycNum":
        """Build from a residue coefficient sequence of length phi(m)."""
        m = _normal_conductor(m)
        _check_cap(m)
        cs = [Fraction(v) for v in coeffs]
        if len(cs) > euler_phi(m):
            raise ValueError(f"expected at most {euler_phi(m)} coefficients")
        cs += [_ZERO] * (euler_phi(m) - len(cs))
        return CycNum._make(m, tuple(cs))

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(v):
        if isinstance(v, CycNum):
            return v
        if isinstance(v, (int, Fraction)):
            return CycNum(v)
        return None

    def _with(self, other: "CycNum"):
        if self.m == other.m:
            return self.m, self.c, other.c
        big = self.m * other.m // gcd(self.m, other.m)
        return big, _embed(self.c, self.m, big), _embed(other.c, other.m, big)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m, a, b = self._with(o)
        return CycNum._make(m, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m, a, b = self._with(o)
        return CycNum._make(m, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycNum._make(self.m, tuple(-x for x in self.c))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            q = o.c[0]
            if not q:
                return CycNum(0)
            return CycNum._make(self.m, tuple(x * q for x in self.c))
        if self.is_rational():
            q = self.c[0]
            if not q:
                return CycNum(0)
            return CycNum._make(o.m, tuple(x * q for x in o.c))
        m, a, b = self._with(o)
        raw = [_ZERO] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        raw[i + j] += ai * bj
        return CycNum._make(m, _reduce_coeffs(m, raw))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycNum._make(1, (1 / self.c[0],))
        if len(self.c) == 2:
            # degree-2 field: conjugate over Phi = x^2 + p x + q
            phim = cyclotomic_polynomial(self.m)
            q, p = phim[0], phim[1]
            a, b = self.c
            norm = a * a - a * b * p + b * b * q
            return CycNum._make(self.m, ((a - b * p) / norm, -b / norm))
        phim = [Fraction(v) for v in cyclotomic_polynomial(self.m)]
        g, u = _fpoly_xgcd(list(self.c), phim)
        # g is a nonzero constant since Phi_m is irreducible
        scale = 1 / g[0]
        inv = [ci * scale for ci in u]
        return CycNum._make(self.m, _reduce_coeffs(self.m, inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = CycNum(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.m == o.m:
            return self.c == o.c
        _, a, b = self._with(o)
        return a == b

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    __hash__ = None  # mixed-conductor equality makes hashing unsafe

    # -- structure ----------------------------------------------------------

    def as_monomial(self):
        """Return (q, k) with self = q * zeta_m^k and q rational, else None."""
        if self.is_rational():
            return self.c[0], 0
        for k in range(1, self.m):
            t = self * _root_in(self.m, self.m - k)
            if t.is_rational():
                return t.c[0], k
        return None

    def key_under(self, big: int) -> tuple:
        """Coefficient tuple inside Q(zeta_big); for deterministic sorting."""
        return _embed(self.c, self.m, big)

    def embedded(self, big: int) -> "CycNum":
        """The same value rewritten over Q(zeta_big); big must be a multiple."""
        big = _normal_conductor(big)
        if big % self.m:
            raise ValueError(f"{big} is not a multiple of conductor {self.m}")
        return CycNum._make(big, _embed(self.c, self.m, big))

    def reduced(self) -> "CycNum":
        """Rewrite over the smallest cyclotomic subfield containing the value."""
        m, c = self.m, self.c
        while m > 1:
            if not any(c[1:]):
                return CycNum._make(1, (c[0],))
            cands = {_normal_conductor(m // p) for p in _prime_factors(m)}
            cands.discard(m)
            if cands <= {1}:
                break  # no proper subfield above Q; nothing to try
            for m2 in sorted(cands):
                v = _descend(m, m2, c)
                if v is not None:
                    m, c = m2, v
                    break
            else:
                break
        return CycNum._make(m, c)

    # -- output -------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.c[0])
        return f"cyc({self.m}; " + ", ".join(str(x) for x in self.c) + ")"

    __repr__ = __str__


@lru_cache(maxsize=None)
def _descent_solver(m: int, m2: int):
    """Row-reduced data solving embed(m2->m) @ x = c for x, with consistency."""
    cols = [[Fraction(v) for v in vec] for vec in _embed_vectors(m2, m)]
    rows = euler_phi(m)
    ncol = euler_phi(m2)
    # augmented with identity to track row operations
    mat = [[cols[j][i] for j in range(ncol)] for i in range(rows)]
    ops = [[_ONE if i == j else _ZERO for j in range(rows)] for i in range(rows)]
    piv = []
    r = 0
    for col in range(ncol):
        sel = next((i for i in range(r, rows) if mat[i][col]), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        ops[r], ops[sel] = ops[sel], ops[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        ops[r] = [v * inv for v in ops[r]]
        for i in range(rows):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
                ops[i] = [a - f * b for a, b in zip(ops[i], ops[r])]
        piv.append(col)
        r += 1
    return tuple(piv), tuple(tuple(row) for row in ops), r


def _descend(m: int, m2: int, c: tuple[Fraction, ...]):
    piv, ops, rank = _descent_solver(m, m2)
    rows = len(ops)
    tc = [sum((ops[i][j] * c[j] for j in range(rows) if c[j]), _ZERO)
          for i in range(rows)]
    if any(tc[rank:]):
        return None
    out = [_ZERO] * euler_phi(m2)
    for i, col in enumerate(piv):
        out[col] = tc[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# roots of unity and bounded square roots

def _root_in(m: int, e: int) -> CycNum:
    vec = _power_vector(m, e % m)
    return CycNum._make(m, tuple(Fraction(v) for v in vec))


def root_of_unity(m: int, k: int = 1) -> CycNum:
    """zeta_m^k, stored over the smallest conductor that contains it."""
    if m < 1:
        raise ValueError("m must be positive")
    k %= m
    g = gcd(m, k) if k else m
    order = m // g
    k = k // g
    if order == 1:
        return CycNum(1)
    if order == 2:
        return CycNum(-1)
    if order % 4 == 2:
        # zeta_order = -zeta_(order/2)^((order/2 + 1)/2)
        half = order // 2
        sign = -1 if k % 2 else 1
        e = (k * ((half + 1) // 2)) % half
        v = _root_in(half, e)
        return CycNum._make(half, tuple(sign * x for x in v.c))
    _check_cap(order)
    return _root_in(order, k)


def _split_square(n: int) -> tuple[int, int]:
    """n = base^2 * rem with rem squarefree (n > 0)."""
    base, rem = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            base *= d ** (e // 2)
            if e % 2:
                rem *= d
        d += 1 if d == 2 else 2
    if n > 1:
        rem *= n
    return base, rem


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CycNum:
    """A square root of the odd prime p (quadratic Gauss sum), or of 2."""
    if p == 2:
        _check_cap(8)
        return CycNum.from_coeffs(8, [0, 1, 0, -1])  # zeta_8 - zeta_8^3
    _check_cap(p if p % 4 == 1 else 4 * p)
    legendre = [0] * p
    for t in range(1, p):
        legendre[(t * t) % p] = 1
    acc = CycNum(0)
    for t in range(1, p):
        term = root_of_unity(p, t)
        acc = acc + term if legendre[t] else acc - term
    if p % 4 == 3:
        acc = acc * root_of_unity(4, 1)  # gauss^2 = -p, fix with i
    return acc


def _sqrt_rational(q: Fraction) -> CycNum:
    if not q:
        return CycNum(0)
    n, d = q.numerator, q.denominator
    base, rem = _split_square(abs(n) * d)
    s = CycNum(Fraction(base, d))
    for p in _prime_factors(rem):
        s = s * _sqrt_prime(p)
    if n < 0:
        s = s * root_of_unity(4, 1)
    return s


def try_sqrt(a) -> CycNum | None:
    """Search for s with s*s = a.

    Strategy: rational values via integer factorization (Gauss sums supply
    square roots of squarefree parts); otherwise monomial values q*zeta^k.
    ``None`` only means the bounded search failed, not that a is a
    non-square.  Non-rational results are tie-broken to the candidate with
    the lexicographically smaller coefficient tuple.
    """
    a = CycNum(a) if not isinstance(a, CycNum) else a
    if not a:
        return CycNum(0)
    try:
        if a.is_rational():
            s = _sqrt_rational(a.as_fraction())
        else:
            mono = a.as_monomial()
            if mono is None:
                return None
            q, k = mono
            m = a.m
            if k % 2 == 0:
                root = root_of_unity(m, k // 2)
            elif m % 2 == 1:
                root = root_of_unity(m, (k + m) // 2)
            else:
                root = root_of_unity(2 * m, k)
            s = _sqrt_rational(q) * root
    except ConductorCapError:
        return None
    assert s * s == a
    if s.is_rational():
        return s if s.as_fraction() > 0 else -s
    s = s.reduced()
    return s if s.c <= (-s).c else -s


def torsion_order(u: CycNum) -> int | None:
    """Multiplicative order of u if it is a root of unity, else None."""
    if not u:
        return None
    bound = u.m if u.m % 2 == 0 else 2 * u.m
    if u ** bound != 1:
        return None
    order = bound
    for p in _prime_factors(bound):
        while order % p == 0 and u ** (order // p) == 1:
            order //= p
    return order


def as_cyc(v) -> CycNum:
    """Coerce an int, Fraction or CycNum into a CycNum."""
    return v if isinstance(v, CycNum) else CycNum(v)


def unify_keys(values) -> list[tuple]:
    """Coefficient tuples of all values under one common conductor."""
    big = 1
    for v in values:
        big = big * v.m // gcd(big, v.m)
    return [v.key_under(big) for v in values]
