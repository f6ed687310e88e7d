"""Equivariant closed embeddings of punctured projective lines into A^3.

The chart iota maps a pair of distinct points of P^1 onto the affine
quadric yz = x^2 - 1; composed with q -> (q, delta(q)) for an equivariant
self-map delta with fixed locus the removed set, it embeds the curve into
A^3.  Each Moebius map acts on A^3 through an explicit 3x3 matrix, making
the embedding equivariant; all of this is certified by exact polynomial
identities.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificates import Certificate, merge
from .cyclotomic import CycNum, as_cyc
from .equivariant import (
    EndoPair,
    OrbitData,
    P1SelfMap,
    combine_orbits,
    contract,
    selfmap_from_orbit_polynomials,
    selfmap_with_fixed_locus,
    verify_fixed_locus,
    verify_selfmap_equivariance,
)
from .errors import (
    DegenerateParamsError,
    NotOnQuadricError,
    NotSquarefreeError,
    OnDiagonalError,
    ZeroPolynomialError,
)
from .poly import HPoly2, MPoly, URatFun, compose_matrix_many, poly3_var
from .projline import FinSubgroupG, FinSubgroupH, Moebius, P1Point, group_closure

_C0 = CycNum(0)
_C1 = CycNum(1)

Rep3 = tuple  # 9 CycNum entries, row-major


def rep3(h: Moebius) -> Rep3:
    """The 3x3 matrix by which a Moebius map (a,b;c,d) acts on A^3."""
    a, b, c, d = h.entries()
    det = a * d - b * c
    s = det.inverse()
    return (
        s * (a * d + b * c), s * (a * c), s * (b * d),
        s * (2 * a * b), s * (a * a), s * (b * b),
        s * (2 * c * d), s * (c * c), s * (d * d),
    )


def rep3_mul(m1: Rep3, m2: Rep3) -> Rep3:
    out = []
    for i in range(3):
        for j in range(3):
            out.append(sum((m1[3 * i + k] * m2[3 * k + j] for k in range(3)),
                           _C0))
    return tuple(out)


def rep3_apply(m: Rep3, v) -> tuple[CycNum, CycNum, CycNum]:
    return tuple(sum((m[3 * i + k] * v[k] for k in range(3)), _C0)
                 for i in range(3))


def rep3_eq(m1: Rep3, m2: Rep3) -> bool:
    return all(x == y for x, y in zip(m1, m2))


def to_quadric(p: P1Point, q: P1Point) -> tuple[CycNum, CycNum, CycNum]:
    """iota: an off-diagonal pair of P^1 points onto yz = x^2 - 1."""
    w = p.a * q.b - p.b * q.a
    if not w:
        raise OnDiagonalError(f"({p}, {q}) lies on the diagonal")
    wi = w.inverse()
    return ((p.a * q.b + p.b * q.a) * wi,
            2 * p.a * q.a * wi,
            2 * p.b * q.b * wi)


def from_quadric(pt) -> tuple[P1Point, P1Point]:
    """Inverse chart; the input must satisfy yz = x^2 - 1 exactly."""
    x, y, z = (as_cyc(v) for v in pt)
    if y * z != x * x - 1:
        raise NotOnQuadricError(f"({x}, {y}, {z}) is not on yz = x^2 - 1")
    if x != -1:
        return P1Point(x + 1, z), P1Point(y, x + 1)
    return P1Point(y, x - 1), P1Point(x - 1, z)


_QVARS = ("y0", "y1", "z0", "z1")


def verify_quadric_equivariance(h: Moebius) -> Certificate:
    """Symbolic identity iota(h p, h q) = rep3(h) iota(p, q), denominators
    cleared, in the four homogeneous coordinates."""
    y0, y1, z0, z1 = (MPoly.var(_QVARS, n) for n in _QVARS)
    nums = (y0 * z1 + y1 * z0, 2 * y0 * z0, 2 * y1 * z1)
    den = y0 * z1 - y1 * z0
    a, b, c, d = h.entries()
    sub = (a * y0 + b * y1, c * y0 + d * y1, a * z0 + b * z1, c * z0 + d * z1)
    nums_h = tuple(n.substitute(sub) for n in nums)
    den_h = den.substitute(sub)
    m = rep3(h)
    cert = Certificate(f"quadric chart equivariance for {h}")
    for i in range(3):
        lin = sum((m[3 * i + j] * nums[j] for j in range(3)),
                  MPoly.const(_QVARS, 0))
        diff = nums_h[i] * den - lin * den_h
        cert.check(f"coordinate {i + 1} transforms linearly", diff.is_zero(),
                   witness=f"residual {diff}")
    return cert


# ---------------------------------------------------------------------------


@dataclass
class EmbeddingA3:
    """A closed embedding of P^1 minus the zero set of ``lambda_poly``.

    ``nums`` over ``den`` are the three coordinates as ratios of
    equal-degree homogeneous forms with no common factor; ``orbit_terms``
    is the per-orbit summand presentation (numerators x3 plus denominator,
    one tuple per orbit, to be averaged with weight 1/r); ``reps`` carries
    the 3x3 action of each group generator.
    """

    group: FinSubgroupH
    lambda_poly: HPoly2
    lambda_points: list[P1Point] | None
    nums: tuple[HPoly2, HPoly2, HPoly2]
    den: HPoly2
    orbit_terms: list[tuple[HPoly2, HPoly2, HPoly2, HPoly2]]
    reps: list[tuple[Moebius, Rep3]]
    orbits: list[OrbitData]
    selfmap: P1SelfMap

    @property
    def components(self):
        return [(n, self.den) for n in self.nums]


def _orbit_term(pair: EndoPair) -> tuple[HPoly2, HPoly2, HPoly2, HPoly2]:
    f1, f2 = pair.f1, pair.f2
    x, y = HPoly2.term(1, 1, 0), HPoly2.term(1, 0, 1)
    raw = (_add(x * f2, y * f1), 2 * x * f1, 2 * y * f2, _sub(x * f2, y * f1))
    g = raw[0].gcd(raw[1]).gcd(raw[2]).gcd(raw[3])
    if g.degree > 0:
        raw = tuple(t.divexact(g) for t in raw)
    lead = raw[3].lead().inverse()
    return tuple(t.scale(lead) for t in raw)


def _add(a: HPoly2, b: HPoly2) -> HPoly2:
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return a + b


def _sub(a: HPoly2, b: HPoly2) -> HPoly2:
    if a.is_zero():
        return -b
    if b.is_zero():
        return a
    return a - b


def assemble_embedding(h: FinSubgroupH, sm: P1SelfMap, orbits: list[OrbitData],
                       lambda_points: list[P1Point] | None = None) -> EmbeddingA3:
    """Compose the quadric chart with q -> (q, delta(q))."""
    f1, f2 = sm.reduced1, sm.reduced2
    x, y = HPoly2.term(1, 1, 0), HPoly2.term(1, 0, 1)
    n1 = _add(x * f2, y * f1)
    n2 = 2 * x * f1
    n3 = 2 * y * f2
    den = _sub(x * f2, y * f1)
    if den.is_zero():
        raise ZeroPolynomialError("the self-map is the identity; no embedding")
    scale = den.lead().inverse()
    n1, n2, n3, den = (t.scale(scale) for t in (n1, n2, n3, den))
    lam = HPoly2.term(1, 0, 0)
    for o in orbits:
        lam = lam * o.p.squarefree_decomp()[0]
    reps = [(g, rep3(g)) for g in h.generators]
    return EmbeddingA3(
        group=h,
        lambda_poly=lam.normalized(),
        lambda_points=lambda_points,
        nums=(n1, n2, n3),
        den=den,
        orbit_terms=[_orbit_term(o.pair) for o in orbits],
        reps=reps,
        orbits=orbits,
        selfmap=sm,
    )


def build_embedding(h: FinSubgroupH, points: list[P1Point] | None = None,
                    orbit_polys: list[HPoly2] | None = None,
                    G: FinSubgroupG | None = None):
    """Full pipeline; returns (embedding, certificate).

    The removed set comes either as explicit points (decomposed into
    orbits) or as squarefree orbit polynomials (when roots do not split
    over a cyclotomic field).
    """
    if points is not None:
        sm, orbits, G = selfmap_with_fixed_locus(h, points, G)
    elif orbit_polys is not None:
        sm, orbits, G = selfmap_from_orbit_polynomials(h, orbit_polys, G)
    else:
        raise DegenerateParamsError("provide points or orbit polynomials")
    emb = assemble_embedding(h, sm, orbits, points)
    cert = merge("embedding construction", [
        verify_selfmap_equivariance(sm, h),
        verify_fixed_locus(sm, emb.lambda_poly),
        verify_embedding(emb),
    ])
    return emb, cert


def verify_embedding(e: EmbeddingA3) -> Certificate:
    """Equivariance, regularity and injectivity of the embedding, exactly."""
    cert = Certificate("embedding into A^3")
    n1, n2, n3 = e.nums
    den = e.den

    for g, m in e.reps:
        mat = g.entries()
        nh0, nh1, nh2, dh = compose_matrix_many((n1, n2, n3, den), mat)
        nh = (nh0, nh1, nh2)
        for i in range(3):
            lin = HPoly2.zero()
            for j, nj in enumerate((n1, n2, n3)):
                lin = _add(lin, nj.scale(m[3 * i + j]))
            diff = _sub(nh[i] * den, lin * dh)
            cert.check(f"coordinate {i + 1} equivariant under {g}",
                       diff.is_zero(), witness=f"residual {diff}")

    sf = den.squarefree_decomp()[0]
    cert.check("final denominator vanishes exactly on the removed set",
               sf.normalized() == e.lambda_poly,
               witness=f"denominator squarefree part {sf}")

    for k, (ai, bi, ci, wi) in enumerate(e.orbit_terms):
        sf_w = wi.squarefree_decomp()[0]
        sf_p = e.orbits[k].p.squarefree_decomp()[0]
        cert.check(f"orbit {k + 1} denominator vanishes exactly on its orbit",
                   sf_w == sf_p, witness=f"{sf_w} vs {sf_p}")

    quad = _sub(n2 * n3, _sub(n1 * n1, den * den))
    cert.check("image satisfies yz = x^2 - 1", quad.is_zero(),
               witness=f"residual {quad}")

    x, y = HPoly2.term(1, 1, 0), HPoly2.term(1, 0, 1)
    inj1 = _sub(_add(n1, den) * y, n3 * x)
    inj2 = _sub(n2 * y, _sub(n1, den) * x)
    cert.check("first chart coordinate of the inverse is the point itself",
               inj1.is_zero() and inj2.is_zero(),
               witness=f"residuals {inj1}; {inj2}")
    return cert


# ---------------------------------------------------------------------------
# closed-form preset families


def standard_group(kind: str, n: int | None = None) -> FinSubgroupH:
    """The reference subgroup of PGL(2) for each preset family."""
    from .cyclotomic import root_of_unity
    if kind == "cyclic":
        if n is None or n < 1:
            raise DegenerateParamsError("cyclic preset needs n >= 1")
        if n == 1:
            return group_closure([])
        return group_closure([Moebius(root_of_unity(n), 0, 0, 1)])
    if kind == "dihedral":
        if n is None or n < 2:
            raise DegenerateParamsError("dihedral preset needs n >= 2")
        return group_closure([Moebius(root_of_unity(n), 0, 0, 1),
                              Moebius(0, 1, 1, 0)])
    if kind == "tetrahedral":
        i = root_of_unity(4)
        return group_closure([Moebius(i, i, 1, -1), Moebius(1, 0, 0, -1)])
    if kind == "octahedral":
        i = root_of_unity(4)
        return group_closure([Moebius(i, i, 1, -1), Moebius(i, 0, 0, 1)])
    if kind == "icosahedral":
        z5 = root_of_unity(5)
        golden = -(z5 ** 2 + z5 ** 3)
        return group_closure([Moebius(z5, 0, 0, 1),
                              Moebius(0, -1, 1, 0),
                              Moebius(golden, 1, 1, -golden)])
    raise DegenerateParamsError(f"unknown preset kind {kind!r}")


def closed_form_pair(kind: str, n: int | None, a, b):
    """The explicit (p, P, pair) for one orbit of a preset family.

    Identities P = contract(pair) and G-fixedness hold for every parameter
    choice with (a, b) != (0, 0); they are what the acceptance suite pins.
    """
    a, b = as_cyc(a), as_cyc(b)
    if not a and not b:
        raise DegenerateParamsError("(a, b) = (0, 0) is not allowed")
    if kind == "cyclic":
        p = HPoly2(n, {n: a, 0: b})
        pair = EndoPair(HPoly2.term(1, 0, n - 1).scale(b) * p,
                        HPoly2.term(-1, n - 1, 0).scale(a) * p)
        return p, p * p, pair
    if kind == "dihedral":
        p = HPoly2(2 * n, {2 * n: a, n: 2 * b, 0: a})
        f1 = HPoly2(n, {n: b, 0: a}) * HPoly2.term(1, 0, n - 1) * p
        f2 = HPoly2(n, {n: a, 0: b}) * HPoly2.term(-1, n - 1, 0) * p
        return p, p * p, EndoPair(f1, f2)
    if kind == "tetrahedral":
        sext = HPoly2(6, {5: 1, 1: -1})            # x^5 y - x y^5
        quart = HPoly2(4, {4: 1, 0: 1})            # x^4 + y^4
        octic = HPoly2(8, {8: 1, 4: -34, 0: 1})    # x^8 - 34 x^4 y^4 + y^8
        p = _add((sext * sext).scale(6 * a), (quart * octic).scale(b))
        f1 = _add(HPoly2(11, {10: 1, 6: -6, 2: 5}).scale(a),
                  HPoly2(11, {8: -11, 4: -22, 0: 1}).scale(b))
        f2 = _add(HPoly2(11, {9: -5, 5: 6, 1: -1}).scale(a),
                  HPoly2(11, {11: -1, 7: 22, 3: 11}).scale(b))
        return p, p, EndoPair(f1, f2)
    raise DegenerateParamsError(f"no closed form for kind {kind!r}")


@dataclass
class PresetFamily:
    kind: str
    n: int | None
    params: list[tuple[CycNum, CycNum]]
    h: FinSubgroupH
    g: FinSubgroupG
    orbits: list[OrbitData]
    embedding: EmbeddingA3
    certificate: Certificate


def preset_family(kind: str, n: int | None, params,
                  require_squarefree: bool = True) -> PresetFamily:
    """Closed-form embedding family; verifies the defining identities.

    ``require_squarefree=False`` admits degenerate parameters whose form
    has multiple roots (the removed set is then the support of the form);
    forms are always required pairwise coprime.
    """
    from .projline import sl2_pullback
    h = standard_group(kind, n)
    G = sl2_pullback(h)
    params = [(as_cyc(a), as_cyc(b)) for a, b in params]
    orbit_data: list[OrbitData] = []
    cert = Certificate(f"{kind} preset family")
    for idx, (a, b) in enumerate(params):
        p, P, pair = closed_form_pair(kind, n, a, b)
        sf = p.squarefree_decomp()[0]
        if sf.degree != p.degree:
            if require_squarefree:
                raise NotSquarefreeError(
                    f"orbit form {idx + 1} ({p}) has multiple roots")
            cert.check(f"orbit {idx + 1} form accepted with multiplicity",
                       True, witness=str(p))
        cert.check(f"orbit {idx + 1}: contraction identity f1*y - f2*x = P",
                   contract(pair) == P)
        cert.check(f"orbit {idx + 1}: pair fixed by every element of G",
                   all(_pair_fixed(g, pair) for g in G.elements))
        d = 1 if kind == "tetrahedral" else 2
        orbit_data.append(OrbitData([], p, d, P, pair))
    for i in range(len(orbit_data)):
        for j in range(i + 1, len(orbit_data)):
            if orbit_data[i].p.gcd(orbit_data[j].p).degree > 0:
                raise DegenerateParamsError(
                    f"orbit forms {i + 1} and {j + 1} share a root")
    sm = combine_orbits(orbit_data)
    emb = assemble_embedding(h, sm, orbit_data)
    cert = merge(f"{kind} preset family", [
        cert,
        verify_selfmap_equivariance(sm, h),
        verify_fixed_locus(sm, emb.lambda_poly),
        verify_embedding(emb),
    ])
    return PresetFamily(kind, n, params, h, G, orbit_data, emb, cert)


def _pair_fixed(g, pair: EndoPair) -> bool:
    from .equivariant import act_on_pair
    return act_on_pair(g, pair) == pair


# ---------------------------------------------------------------------------
# the two special curves: the affine line and the punctured affine line


def affine_line_embedding():
    """t -> (t, 0, 0) with the affine group acting linearly on A^3.

    Returns (tau, action, certificate): ``action(a, b)`` is the matrix map
    extending t -> a t + b, namely (x, y, z) -> (a x + b(y+1), y, z).
    """
    t = URatFun.x()
    tau = (t, URatFun.const(0), URatFun.const(0))
    X, Y, Z = (poly3_var(v) for v in "XYZ")

    def action(a, b):
        a, b = as_cyc(a), as_cyc(b)
        if not a:
            raise DegenerateParamsError("a must be nonzero")
        return (a * X + b * Y + b, Y, Z)

    cert = Certificate("affine line special case")
    samples = [(1, 0), (2, 3), (-1, 1), (Fraction(1, 2), -2), (3, Fraction(2, 5))]
    for a, b in samples:
        mapped = [f.substitute(tau) for f in action(a, b)]
        target = (as_cyc(a) * t + as_cyc(b), URatFun.const(0), URatFun.const(0))
        cert.check(f"extends t -> {a}*t + {b} on the curve",
                   all(u == v for u, v in zip(mapped, target)))
    for a, b in samples:
        img = action(a, b)
        cert.check(f"action (a,b)=({a},{b}) preserves the ideal (y, z)",
                   img[1] == Y and img[2] == Z)
    comp = tuple(f.substitute(action(5, 7)) for f in action(2, 3))
    cert.check("composition law matches (a,b) composition",
               all(u == v for u, v in zip(comp, action(10, 17))))
    return tau, action, cert


def punctured_line_embedding():
    """t -> (t, 1/t, 0) with scalings and the inversion acting linearly.

    ``scaling(lam)`` extends t -> lam t; ``inversion(lam)`` extends
    t -> lam / t via (x, y, z) -> (lam y, lam^(-1) x, z).
    """
    t = URatFun.x()
    tau = (t, 1 / t, URatFun.const(0))
    X, Y, Z = (poly3_var(v) for v in "XYZ")

    def scaling(lam):
        lam = as_cyc(lam)
        return (lam * X, lam.inverse() * Y, Z)

    def inversion(lam):
        lam = as_cyc(lam)
        return (lam * Y, lam.inverse() * X, Z)

    cert = Certificate("punctured line special case")
    lams = [as_cyc(v) for v in (1, 2, 3, Fraction(1, 2), -1)]
    for lam in lams:
        mapped = [f.substitute(tau) for f in scaling(lam)]
        target = (lam * t, (lam * t) ** -1, URatFun.const(0))
        cert.check(f"scaling matrix extends t -> {lam}*t",
                   all(u == v for u, v in zip(mapped, target)))
        mapped = [f.substitute(tau) for f in inversion(lam)]
        lam_over_t = URatFun.const(lam) / t
        target = (lam_over_t, lam_over_t ** -1, URatFun.const(0))
        cert.check(f"inversion matrix extends t -> {lam}/t",
                   all(u == v for u, v in zip(mapped, target)))
    for lam in lams:
        for fam, name in ((scaling(lam), "scaling"), (inversion(lam), "inversion")):
            on_ideal = (fam[2] == Z and fam[0] * fam[1] == X * Y)
            cert.check(f"{name}({lam}) preserves the ideal (z, xy - 1)", on_ideal)
    comp = tuple(f.substitute(inversion(3)) for f in inversion(6))
    cert.check("inversion o inversion is a scaling",
               all(u == v for u, v in zip(comp, scaling(2))))
    return tau, scaling, inversion, cert
