"""Normalization of planar embeddings in A^3 and extension verification.

A planar embedding x -> (0, Q(x), R(x)) of the curve A^1 minus the roots
of a squarefree P is carried to the normal form x -> (x, 1/P(x), 0) by an
explicit chain of four automorphisms of A^3, each with an exact inverse.
The witnesses (bivariate polynomials expressing one generator of the
coordinate ring in terms of two others) are found by bounded-degree exact
linear algebra and re-verified independently of the solver.
"""
from __future__ import annotations

from dataclasses import dataclass

from .certificates import Certificate
from .cyclotomic import CycNum, as_cyc
from .errors import (
    DegenerateParamsError,
    PoleConditionError,
    WitnessNotFoundError,
    ZeroPolynomialError,
)
from .linalg import solve_linear
from .poly import MPoly, UPoly, URatFun, HPoly2, POLY3_VARS, poly3_var
from .projline import Moebius

_C0 = CycNum(0)


@dataclass
class Aut3:
    """Automorphism of A^3 with an explicit two-sided inverse witness."""

    forward: tuple[MPoly, MPoly, MPoly]
    inverse: tuple[MPoly, MPoly, MPoly]
    label: str = ""

    def __post_init__(self):
        ident = tuple(poly3_var(v) for v in POLY3_VARS)
        fwd_inv = tuple(f.substitute(self.inverse) for f in self.forward)
        inv_fwd = tuple(f.substitute(self.forward) for f in self.inverse)
        if not (all(a == b for a, b in zip(fwd_inv, ident)) and
                all(a == b for a, b in zip(inv_fwd, ident))):
            raise DegenerateParamsError(
                f"forward and inverse are not mutually inverse ({self.label})")

    def apply(self, triple):
        return tuple(f.substitute(triple) for f in self.forward)

    def apply_inverse(self, triple):
        return tuple(f.substitute(triple) for f in self.inverse)


def compose_aut3(outer: Aut3, inner: Aut3) -> Aut3:
    """outer after inner."""
    return Aut3(
        tuple(f.substitute(inner.forward) for f in outer.forward),
        tuple(f.substitute(outer.inverse) for f in inner.inverse),
        label=f"{outer.label} o {inner.label}".strip(" o"),
    )


def compose_chain(chain: list[Aut3]) -> Aut3:
    """Compose a chain applied left to right (chain[0] first)."""
    out = Aut3(tuple(poly3_var(v) for v in POLY3_VARS),
               tuple(poly3_var(v) for v in POLY3_VARS), label="id")
    for step in chain:
        out = compose_aut3(step, out)
    return out


@dataclass
class PlanarEmbedding:
    """x -> (0, Q(x), R(x)) on the curve A^1 minus the roots of P.

    P must be squarefree and Q, R pole-free on the curve.  Whether (Q, R)
    generate the full coordinate ring is decided during normalization;
    failure there raises WitnessNotFoundError.
    """

    P: UPoly
    Q: URatFun
    R: URatFun

    def __post_init__(self):
        if self.P.is_zero():
            raise ZeroPolynomialError("P must be nonzero")
        if self.P.squarefree_part().degree != self.P.monic().degree:
            raise DegenerateParamsError(f"P = {self.P} is not squarefree")
        for name, f in (("Q", self.Q), ("R", self.R)):
            if f.den.degree > 0:
                sf = f.den.squarefree_part()
                if not (self.P % sf).is_zero():
                    raise DegenerateParamsError(
                        f"{name} has a pole away from the removed points")

    def triple(self):
        return (URatFun.const(0), self.Q, self.R)


def subalgebra_witness(target: URatFun, gens: tuple[URatFun, URatFun],
                       degree_cap: int = 12,
                       variables: tuple[str, str] = ("Y", "Z")) -> MPoly | None:
    """Bivariate A with A(gens[0], gens[1]) = target, minimal total degree.

    For each degree the linear system from clearing denominators is solved
    exactly; free variables are zeroed, so the answer is deterministic.
    Returns None when the cap is reached, which signals either a too-small
    cap or a genuine subalgebra gap.
    """
    q, r = gens
    for d in range(1, degree_cap + 1):
        monos = [(i, j) for tot in range(d + 1)
                 for i in range(tot + 1) for j in (tot - i,)]
        q1_p = [q.num ** i for i in range(d + 1)]
        q2_p = [q.den ** i for i in range(d + 1)]
        r1_p = [r.num ** i for i in range(d + 1)]
        r2_p = [r.den ** i for i in range(d + 1)]
        cols = []
        for (i, j) in monos:
            cols.append(q1_p[i] * q2_p[d - i] * r1_p[j] * r2_p[d - j]
                        * target.den)
        rhs_poly = target.num * q2_p[d] * r2_p[d]
        nrows = max(max((c.degree for c in cols), default=-1),
                    rhs_poly.degree) + 1
        rows = [[(col.c[k] if k <= col.degree else _C0) for col in cols]
                for k in range(nrows)]
        rhs = [rhs_poly.c[k] if k <= rhs_poly.degree else _C0
               for k in range(nrows)]
        sol = solve_linear(rows, rhs)
        if sol is None:
            continue
        witness = MPoly(variables,
                        {(i, j): sol[idx] for idx, (i, j) in enumerate(monos)})
        # soundness re-check, independently of the solver
        value = witness.substitute((q, r))
        if value == target:
            return witness
    return None


_AB_SAMPLES = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 3), (3, 2), (1, 2),
               (2, -1), (5, 7), (3, -4), (7, 2), (4, 9)]


def normalize_planar(e: PlanarEmbedding, degree_cap: int = 12):
    """The four-step chain carrying x -> (0, Q, R) onto x -> (x, 1/P, 0).

    Returns (chain, certificate).  The chain is applied left to right; the
    affine repositioning into the (0, Q, R) form is the caller's business.
    """
    X, Y, Z = (poly3_var(v) for v in POLY3_VARS)
    x = URatFun.x()
    cert = Certificate("planar normalization")

    A = subalgebra_witness(x, (e.Q, e.R), degree_cap, ("Y", "Z"))
    if A is None:
        raise WitnessNotFoundError(
            f"no witness A(Q, R) = x within degree {degree_cap}: "
            f"(Q, R) may not generate the coordinate ring")
    a_poly3 = MPoly(POLY3_VARS, {(0, i, j): v for (i, j), v in A.c.items()})
    f2 = Aut3((X + a_poly3, Y, Z), (X - a_poly3, Y, Z), label="f2")
    cert.check("witness A(Q, R) = x verified",
               A.substitute((e.Q, e.R)) == x)

    chosen = None
    for (a, b) in _AB_SAMPLES:
        if a == 0:
            continue  # (X, aY+bZ, Z) must stay invertible
        cand = as_cyc(a) * e.Q + as_cyc(b) * e.R
        if cand.den.degree > 0 and (cand.den % e.P.monic()).is_zero():
            chosen = (as_cyc(a), as_cyc(b), cand)
            break
    if chosen is None:
        raise PoleConditionError(
            "no sampled (a, b) makes every root of P a pole of aQ + bR")
    a, b, qprime = chosen
    ainv = a.inverse()
    f3 = Aut3((X, a * Y + b * Z, Z), (X, ainv * Y - ainv * b * Z, Z),
              label="f3")
    cert.check(f"pole condition holds for (a, b) = ({a}, {b})", True)

    q1, q2 = qprime.num, qprime.den
    g, u, v = q1.xgcd(e.P.monic())
    cert.check("gcd(Q1, P) = 1 (Bezout identity verified)",
               g.degree == 0 and (u * q1 + v * e.P.monic()) == g)

    one_over_p = URatFun(UPoly.const(1), e.P)
    target_b = one_over_p - e.R
    B = subalgebra_witness(target_b, (x, qprime), degree_cap, ("X", "Y"))
    if B is None:
        raise WitnessNotFoundError(
            f"no witness B(x, Q') = 1/P - R within degree {degree_cap}")
    b_poly3 = MPoly(POLY3_VARS, {(i, j, 0): v for (i, j), v in B.c.items()})
    f4 = Aut3((X, Y, Z + b_poly3), (X, Y, Z - b_poly3), label="f4")
    cert.check("witness B(x, Q') = 1/P - R verified",
               B.substitute((x, qprime)) == target_b)

    C = subalgebra_witness(qprime, (x, one_over_p), degree_cap, ("X", "Z"))
    if C is None:
        raise WitnessNotFoundError(
            f"no witness C(x, 1/P) = Q' within degree {degree_cap}")
    c_y = MPoly(POLY3_VARS, {(i, j, 0): v for (i, j), v in C.c.items()})
    c_z = MPoly(POLY3_VARS, {(i, 0, j): v for (i, j), v in C.c.items()})
    f5 = Aut3((X, Z, Y - c_z), (X, Z + c_y, Y), label="f5")
    cert.check("witness C(x, 1/P) = Q' verified",
               C.substitute((x, one_over_p)) == qprime)

    chain = [f2, f3, f4, f5]
    final = e.triple()
    for step in chain:
        final = step.apply(final)
    normal = (x, one_over_p, URatFun.const(0))
    cert.check("chain lands on the normal form (x, 1/P, 0)",
               all(f == n for f, n in zip(final, normal)),
               witness="; ".join(str(f) for f in final))
    return chain, cert


def connect_planar(e1: PlanarEmbedding, e2: PlanarEmbedding,
                   degree_cap: int = 12):
    """An explicit automorphism of A^3 carrying e1 onto e2 (same curve).

    Composes chain(e1) with the inverse of chain(e2); returns
    (automorphism, certificate).
    """
    if e1.P.monic() != e2.P.monic():
        raise DegenerateParamsError("the two embeddings remove different points")
    chain1, c1 = normalize_planar(e1, degree_cap)
    chain2, c2 = normalize_planar(e2, degree_cap)
    fwd = compose_chain(chain1)
    back = compose_chain(chain2)
    bridge = Aut3(back.inverse, back.forward, label="chain2^-1")
    total = compose_aut3(bridge, fwd)
    cert = Certificate("equivalence of two planar embeddings")
    cert.check("both normalizations succeeded", c1.ok and c2.ok)
    image = total.apply(e1.triple())
    cert.check("composite carries the first embedding onto the second",
               all(u == v for u, v in zip(image, e2.triple())))
    return total, cert


def verify_extension(forward: tuple[MPoly, MPoly, MPoly],
                     tau: tuple[URatFun, URatFun, URatFun],
                     phi: Moebius) -> Certificate:
    """Exact identity F(tau(phi(x))) = tau(x) for a curve automorphism phi.

    phi must preserve the pole set of tau on P^1 (checked through the
    squarefree pole form, so roots never need to be extracted).
    """
    cert = Certificate("extension identity F o tau o phi = tau")
    pole = UPoly.const(1)
    infinite_pole = False
    for comp in tau:
        if comp.den.degree > 0:
            g = pole.gcd(comp.den)
            pole = pole * comp.den.divexact(g)
        if comp.num.degree > comp.den.degree:
            infinite_pole = True
    pole_form = HPoly2.rehomogenize(pole.squarefree_part(),
                                    pole.squarefree_part().degree)
    if infinite_pole:
        pole_form = pole_form * HPoly2.term(1, 0, 1)
    moved = pole_form.compose_matrix(phi.inverse().entries())
    cert.check("phi preserves the pole set of tau",
               moved.squarefree_decomp()[0].normalized()
               == pole_form.squarefree_decomp()[0].normalized(),
               witness=f"pole form {pole_form}")

    a, b, c, d = phi.entries()
    phi_rf = URatFun(UPoly([b, a]), UPoly([d, c]))
    tau_phi = tuple(comp.compose(phi_rf) for comp in tau)
    lhs = tuple(f.substitute(tau_phi) for f in forward)
    for i, (u, v) in enumerate(zip(lhs, tau)):
        diff = u - v
        cert.check(f"component {i + 1} residual is zero", diff.is_zero(),
                   witness=f"residual {diff}")
    return cert
