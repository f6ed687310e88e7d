"""Equivariant self-maps of P^1 with a prescribed fixed locus.

The engine behind the embeddings: a point set invariant under a finite
Moebius group H is realized as the exact fixed locus of an H-equivariant
self-map [x:y] -> [f1 : f2].  The construction works orbit by orbit:

* the orbit polynomial p (squarefree, roots = orbit) is a semi-invariant
  of the SL(2) pullback G; some power P = p^d is G-fixed;
* P splits as f1*y - f2*x for a pair (f1, f2), and averaging the pair over
  G makes it G-fixed without changing the contraction;
* the per-orbit pairs combine into one pair whose contraction is the
  product of all the P_i, and whose reduced form has fixed locus exactly
  the prescribed set.

Everything is verified by exact polynomial identities; the verifiers
return certificates rather than trusting the construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificates import Certificate
from .cyclotomic import CycNum, torsion_order
from .errors import (
    ConstantTermError,
    DegeneratePointsError,
    DegreeAlignmentError,
    NotSemiInvariantError,
    PNotInvariantError,
    ZeroPolynomialError,
)
from .poly import HPoly2
from .projline import FinSubgroupG, FinSubgroupH, P1Point, SL2Elem, sl2_pullback

_C0 = CycNum(0)
_C1 = CycNum(1)


@dataclass(frozen=True)
class EndoPair:
    """Endomorphism (x, y) -> (f1, f2) of the plane, both forms of one degree."""

    f1: HPoly2
    f2: HPoly2

    def __post_init__(self):
        if self.f1 and self.f2 and self.f1.degree != self.f2.degree:
            raise DegreeAlignmentError(
                f"component degrees differ: {self.f1.degree} vs {self.f2.degree}")

    @property
    def degree(self) -> int:
        return self.f1.degree if self.f1 else self.f2.degree

    def is_zero(self) -> bool:
        return self.f1.is_zero() and self.f2.is_zero()

    def __eq__(self, other):
        return self.f1 == other.f1 and self.f2 == other.f2


def contract(pair: EndoPair) -> HPoly2:
    """The SL(2)-equivariant contraction (f1, f2) -> f1*y - f2*x."""
    t1 = pair.f1 * HPoly2.term(1, 0, 1)
    t2 = pair.f2 * HPoly2.term(1, 1, 0)
    if t1.is_zero():
        return -t2
    if t2.is_zero():
        return t1
    return t1 - t2


def act_on_pair(g: SL2Elem, pair: EndoPair) -> EndoPair:
    """The action g . F = g o F o g^(-1) on plane endomorphisms."""
    from .poly import compose_matrix_many
    mat = g.inverse().entries()
    u1, u2 = compose_matrix_many((pair.f1, pair.f2), mat)
    return EndoPair(_combine(g.a, u1, g.b, u2), _combine(g.c, u1, g.d, u2))


def _combine(s1: CycNum, h1: HPoly2, s2: CycNum, h2: HPoly2) -> HPoly2:
    a = h1.scale(s1)
    b = h2.scale(s2)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return a + b


def orbit_polynomial(points: list[P1Point]) -> HPoly2:
    """Product of (b_k x - a_k y) over [a_k : b_k]; roots exactly the points."""
    seen: list[P1Point] = []
    out = HPoly2.term(1, 0, 0)
    for p in points:
        if any(p == q for q in seen):
            raise DegeneratePointsError(f"duplicate point {p}")
        seen.append(p)
        out = out * HPoly2(1, {1: p.b, 0: -p.a})
    return out.normalized()


def invariant_power(p: HPoly2, G: FinSubgroupG):
    """Smallest exponent d with p^d fixed by G, plus the character values.

    Requires the zero set of p to be invariant under the projection of G:
    p o g must be a scalar multiple chi(g) * p for every generator.
    """
    if p.is_zero():
        raise ZeroPolynomialError("invariant power of zero")
    chis: list[CycNum] = []
    d = 1
    for g in G.generators:
        moved = p.compose_matrix(g.entries())
        chi = moved.proportional_to(p)
        if chi is None or not chi:
            raise NotSemiInvariantError(
                f"zero set of {p} is not invariant under {g}")
        order = torsion_order(chi)
        if order is None:
            raise NotSemiInvariantError(
                f"character value {chi} is not a root of unity")
        chis.append(chi)
        d = d * order // _gcd(d, order)
    P = p ** d
    for g in G.generators:
        if P.compose_matrix(g.entries()) != P:
            raise NotSemiInvariantError("p^d is not fixed by a generator")
    return d, chis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def split_pair(P: HPoly2) -> EndoPair:
    """A deterministic pair with contraction P: monomials with y feed f1
    (divided by y), pure-x monomials feed -f2 (divided by x)."""
    if P.is_zero():
        return EndoPair(HPoly2.zero(), HPoly2.zero())
    d = P.degree
    if d == 0:
        raise ConstantTermError("cannot split a nonzero constant")
    f1 = {}
    f2 = {}
    for i, v in P.c.items():
        if i < d:
            f1[i] = v
        else:
            f2[i - 1] = -v
    return EndoPair(HPoly2(d - 1, f1), HPoly2(d - 1, f2))


def reynolds_average(pair: EndoPair, G: FinSubgroupG) -> EndoPair:
    """Average of the G-orbit of the pair; G-fixed, same contraction.

    Precondition (checked): the contraction of the pair is G-fixed.
    """
    P = contract(pair)
    for g in G.generators:
        if P.compose_matrix(g.entries()) != P:
            raise PNotInvariantError(
                "contraction is not fixed by the group; cannot average")
    acc1, acc2 = HPoly2.zero(), HPoly2.zero()
    for g in G.elements:
        moved = act_on_pair(g, pair)
        acc1 = moved.f1 if acc1.is_zero() else (
            acc1 if moved.f1.is_zero() else acc1 + moved.f1)
        acc2 = moved.f2 if acc2.is_zero() else (
            acc2 if moved.f2.is_zero() else acc2 + moved.f2)
    s = CycNum(Fraction(1, len(G.elements)))
    return EndoPair(acc1.scale(s), acc2.scale(s))


@dataclass
class OrbitData:
    """One orbit's construction data.

    ``points`` may be empty when the orbit is handed over as a polynomial
    only (roots need not split over a cyclotomic field).
    """

    points: list[P1Point]
    p: HPoly2                # squarefree orbit polynomial
    d: int                   # invariant power
    P: HPoly2                # p^d, fixed by G
    pair: EndoPair           # G-fixed, contract(pair) = P

    def verify_identity(self) -> bool:
        return contract(self.pair) == self.P


@dataclass
class P1SelfMap:
    """Self-map [x:y] -> [g1 : g2] plus its coprime reduced pair."""

    g1: HPoly2
    g2: HPoly2
    reduced1: HPoly2
    reduced2: HPoly2

    @staticmethod
    def from_pair(g1: HPoly2, g2: HPoly2) -> "P1SelfMap":
        if g1.is_zero() and g2.is_zero():
            raise ZeroPolynomialError("self-map needs a nonzero pair")
        if g1.is_zero() or g2.is_zero():
            unit = HPoly2.term(1, 0, 0)
            r1 = HPoly2.zero() if g1.is_zero() else unit
            r2 = HPoly2.zero() if g2.is_zero() else unit
            return P1SelfMap(g1, g2, r1, r2)
        alpha = g1.gcd(g2)
        r1, r2 = g1.divexact(alpha), g2.divexact(alpha)
        r1, r2 = _pair_normalize(r1, r2)
        return P1SelfMap(g1, g2, r1, r2)


def _pair_normalize(f1: HPoly2, f2: HPoly2):
    """Scale a pair jointly so its first nonzero coefficient is 1."""
    lead = None
    for f in (f1, f2):
        if not f.is_zero():
            lead = f.lead()
            break
    if lead is None or lead == 1:
        return f1, f2
    inv = lead.inverse()
    return f1.scale(inv), f2.scale(inv)


def build_orbit_data(p: HPoly2, G: FinSubgroupG,
                     points: list[P1Point] | None = None) -> OrbitData:
    """Run the per-orbit pipeline on a squarefree orbit polynomial."""
    sf, cof = p.squarefree_decomp()
    if cof.degree > 0:
        raise DegeneratePointsError(f"orbit polynomial {p} is not squarefree")
    d, _ = invariant_power(p, G)
    P = p ** d
    pair = reynolds_average(split_pair(P), G)
    data = OrbitData(points or [], p, d, P, pair)
    assert data.verify_identity()
    return data


def combine_orbits(orbits: list[OrbitData]) -> P1SelfMap:
    """Combine per-orbit pairs into one pair with contraction prod P_i."""
    if not orbits:
        raise DegeneratePointsError("need at least one orbit")
    degs = {o.pair.degree + sum(q.P.degree for q in orbits) - o.P.degree
            for o in orbits}
    if len(degs) != 1:
        raise DegreeAlignmentError(f"summand degrees differ: {sorted(degs)}")
    r = len(orbits)
    g1, g2 = HPoly2.zero(), HPoly2.zero()
    for i, o in enumerate(orbits):
        factor = HPoly2.term(1, 0, 0)
        for j, q in enumerate(orbits):
            if j != i:
                factor = factor * q.P
        t1 = o.pair.f1 * factor
        t2 = o.pair.f2 * factor
        g1 = t1 if g1.is_zero() else g1 + t1
        g2 = t2 if g2.is_zero() else g2 + t2
    s = CycNum(Fraction(1, r))
    g1, g2 = g1.scale(s), g2.scale(s)
    total = HPoly2.term(1, 0, 0)
    for o in orbits:
        total = total * o.P
    if contract(EndoPair(g1, g2)) != total:
        raise DegreeAlignmentError("combined contraction identity failed")
    return P1SelfMap.from_pair(g1, g2)


def selfmap_with_fixed_locus(h: FinSubgroupH, points: list[P1Point],
                             G: FinSubgroupG | None = None):
    """Equivariant self-map whose fixed locus is exactly the given set.

    Returns (selfmap, orbit data list, G).  The point set must be nonempty
    and H-invariant; both output properties are re-checked by the verifiers
    below.
    """
    if not points:
        raise DegeneratePointsError("the removed set must be nonempty")
    from .projline import orbit_decompose
    orbits_pts = orbit_decompose(h, points)
    G = G or sl2_pullback(h)
    orbits = [build_orbit_data(orbit_polynomial(o), G, o) for o in orbits_pts]
    return combine_orbits(orbits), orbits, G


def selfmap_from_orbit_polynomials(h: FinSubgroupH, polys: list[HPoly2],
                                   G: FinSubgroupG | None = None):
    """Same pipeline when orbits are described by squarefree polynomials.

    Used when orbit points do not split over a cyclotomic field (generic
    preset parameters).  Pairwise coprimality is checked.
    """
    if not polys:
        raise DegeneratePointsError("need at least one orbit polynomial")
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if polys[i].gcd(polys[j]).degree > 0:
                raise DegeneratePointsError(
                    f"orbit polynomials {i} and {j} share a factor")
    G = G or sl2_pullback(h)
    orbits = [build_orbit_data(p.normalized(), G) for p in polys]
    return combine_orbits(orbits), orbits, G


# ---------------------------------------------------------------------------
# verifiers


def verify_selfmap_equivariance(sm: P1SelfMap, h: FinSubgroupH) -> Certificate:
    """Exact identity per generator (a,b;c,d):
    f1(h(x,y)) * (c f1 + d f2) - f2(h(x,y)) * (a f1 + b f2) = 0."""
    cert = Certificate("self-map equivariance")
    from .poly import compose_matrix_many
    f1, f2 = sm.reduced1, sm.reduced2
    for g in h.generators:
        a, b, c, d = g.entries()
        lhs1, lhs2 = compose_matrix_many((f1, f2), (a, b, c, d))
        diff = _sub_safe(lhs1 * _combine(c, f1, d, f2),
                         lhs2 * _combine(a, f1, b, f2))
        cert.check(f"commutes with generator {g}", diff.is_zero(),
                   witness=f"residual {diff}")
    return cert


def verify_fixed_locus(sm: P1SelfMap, locus: HPoly2 | list[P1Point]) -> Certificate:
    """Fixed locus of the reduced map equals the zero set of the locus poly.

    Compared through squarefree parts, both divisibility directions, so the
    check is field-agnostic (roots never need to split).
    """
    cert = Certificate("fixed locus")
    target = (locus if isinstance(locus, HPoly2)
              else orbit_polynomial(locus)).normalized()
    fix = _sub_safe(sm.reduced1 * HPoly2.term(1, 0, 1),
                    sm.reduced2 * HPoly2.term(1, 1, 0))
    if not cert.check("fixed-point form is not identically zero",
                      not fix.is_zero(),
                      witness="the map is the identity; locus is all of P^1"):
        return cert
    sf = fix.squarefree_decomp()[0]
    ok_fwd = _divides(target, sf)
    cert.check("every fixed point lies in the prescribed set",
               ok_fwd, witness=f"squarefree fixed form {sf}")
    ok_bwd = _divides(sf, target)
    cert.check("every prescribed point is fixed",
               ok_bwd, witness=f"target {target}")
    return cert


def _divides(divisor: HPoly2, multiple: HPoly2) -> bool:
    try:
        multiple.divexact(divisor)
        return True
    except (ZeroPolynomialError, ZeroDivisionError):
        return False


def _sub_safe(a: HPoly2, b: HPoly2) -> HPoly2:
    if a.is_zero():
        return -b
    if b.is_zero():
        return a
    return a - b


def verify_locus_invariance(h: FinSubgroupH,
                            locus: HPoly2 | list[P1Point]) -> Certificate:
    """The fixed locus is setwise invariant under every element of h."""
    cert = Certificate("locus invariance under the group")
    if isinstance(locus, HPoly2):
        target = locus.normalized()
        for g in h.elements:
            moved = target.compose_matrix(g.inverse().entries())
            cert.check(f"{g} preserves the locus",
                       moved.proportional_to(target) is not None)
    else:
        for g in h.elements:
            ok = all(any(g.apply(p) == q for q in locus) for p in locus)
            cert.check(f"{g} preserves the locus", ok)
    return cert
