"""Command-line interface.

Subcommands: aut, delta, embed, preset, planar-normalize, verify-extension,
plane-extend, cor25.  All arithmetic is exact; every construction is
re-verified and the full certificate is part of the report (--certificate
prints the clause-by-clause transcript, --format json the same content as
one JSON object).

Exit status: 0 all certificates pass, 1 a certificate failed, 2 malformed
input, 3 a construction precondition failed.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import cyclotomic
from .certificates import Certificate
from .errors import CertificateFailure, ConstructionError, EquicurveError, ParseError
from .parsing import (
    parse_constant,
    parse_matrix2,
    parse_points,
    parse_poly3_triple,
    parse_ratfun,
    parse_ratfun_triple,
    parse_upoly,
)
from .planar import PlanarEmbedding, normalize_planar, verify_extension
from .plane import (
    CurveAut,
    Extendable,
    Obstructed,
    cube_symmetric_family,
    decide_extendability,
    verify_cube_symmetry,
)
from .projline import Moebius, P1Point, aut_of_lambda, group_closure, sort_points


def _points(text: str) -> list[P1Point]:
    return [P1Point(a, b) for a, b in parse_points(text)]


def _gens(text: str) -> list[Moebius]:
    from .parsing import _split_top
    mats = [parse_matrix2(part) for part in _split_top(text.strip(), ";") if part]
    if not mats:
        raise ParseError("empty generator list")
    return [Moebius(*m) for m in mats]


def _group_for(args, pts: list[P1Point]):
    if getattr(args, "gens", None):
        return group_closure(_gens(args.gens), cap=args.group_cap)
    if len(pts) >= 3:
        return aut_of_lambda(pts, cap=args.group_cap)
    return group_closure([], cap=args.group_cap)


def _cmd_aut(args) -> dict:
    pts = _points(args.lam)
    h = aut_of_lambda(pts, cap=args.group_cap)
    cert = Certificate("stabilizer checks")
    for g in h.elements:
        cert.check(f"{g} preserves the set",
                   all(any(g.apply(p) == q for q in pts) for p in pts))
    return {
        "command": "aut",
        "lambda": [str(p) for p in sort_points(pts)],
        "kind": str(h.kind),
        "order": h.order,
        "generators": [str(g) for g in h.generators],
        "elements": [str(g) for g in h.elements],
        "certificates": [cert.to_json()],
    }


def _cmd_delta(args) -> dict:
    from .equivariant import (
        selfmap_with_fixed_locus,
        verify_fixed_locus,
        verify_locus_invariance,
        verify_selfmap_equivariance,
    )
    pts = _points(args.lam)
    h = _group_for(args, pts)
    sm, orbits, _ = selfmap_with_fixed_locus(h, pts)
    certs = [
        verify_selfmap_equivariance(sm, h),
        verify_fixed_locus(sm, pts),
        verify_locus_invariance(h, pts),
    ]
    return {
        "command": "delta",
        "lambda": [str(p) for p in sort_points(pts)],
        "group": str(h.kind),
        "orbits": [
            {
                "points": [str(p) for p in o.points],
                "orbit_polynomial": str(o.p),
                "invariant_power": o.d,
                "pair": [str(o.pair.f1), str(o.pair.f2)],
            }
            for o in orbits
        ],
        "map": [str(sm.reduced1), str(sm.reduced2)],
        "certificates": [c.to_json() for c in certs],
    }


def _cmd_embed(args) -> dict:
    from .embed3 import build_embedding
    pts = _points(args.lam)
    h = _group_for(args, pts)
    emb, cert = build_embedding(h, points=pts)
    comp_names = ("x", "y", "z")
    return {
        "command": "embed",
        "lambda": [str(p) for p in sort_points(pts)],
        "group": str(h.kind),
        "removed_form": str(emb.lambda_poly),
        "components": {
            name: f"({num}) / ({emb.den})"
            for name, num in zip(comp_names, emb.nums)
        },
        "generator_actions": [
            {"generator": str(g), "matrix": _mat3_str(m)}
            for g, m in emb.reps
        ],
        "certificates": [cert.to_json()],
    }


def _mat3_str(m) -> str:
    rows = ["[" + ", ".join(str(m[3 * i + j]) for j in range(3)) + "]"
            for i in range(3)]
    return "[" + ", ".join(rows) + "]"


def _cmd_preset(args) -> dict:
    from .embed3 import preset_family
    pairs = []
    from .parsing import _split_top
    for chunk in _split_top(args.pairs.strip(), ";"):
        if not chunk:
            continue
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ParseError(f"parameter pair must look like (a, b): {chunk!r}")
        items = _split_top(chunk[1:-1], ",")
        if len(items) != 2:
            raise ParseError(f"parameter pair needs two entries: {chunk!r}")
        pairs.append((parse_constant(items[0]), parse_constant(items[1])))
    fam = preset_family(args.kind, args.n, pairs,
                        require_squarefree=not args.allow_multiplicity)
    comp_names = ("x", "y", "z")
    emb = fam.embedding
    return {
        "command": "preset",
        "kind": fam.kind,
        "n": fam.n,
        "parameters": [f"({a}, {b})" for a, b in fam.params],
        "group": str(fam.h.kind),
        "removed_form": str(emb.lambda_poly),
        "orbit_forms": [str(o.p) for o in fam.orbits],
        "components": {
            name: f"({num}) / ({emb.den})"
            for name, num in zip(comp_names, emb.nums)
        },
        "generator_actions": [
            {"generator": str(g), "matrix": _mat3_str(m)}
            for g, m in emb.reps
        ],
        "certificates": [fam.certificate.to_json()],
    }


def _cmd_planar_normalize(args) -> dict:
    emb = PlanarEmbedding(parse_upoly(args.p), parse_ratfun(args.q),
                          parse_ratfun(args.r))
    chain, cert = normalize_planar(emb, degree_cap=args.cap)
    return {
        "command": "planar-normalize",
        "P": str(emb.P),
        "Q": str(emb.Q),
        "R": str(emb.R),
        "chain": [
            {
                "label": step.label,
                "forward": [str(f) for f in step.forward],
                "inverse": [str(f) for f in step.inverse],
            }
            for step in chain
        ],
        "certificates": [cert.to_json()],
    }


def _cmd_verify_extension(args) -> dict:
    forward = parse_poly3_triple(args.f)
    tau = parse_ratfun_triple(args.tau)
    phi = Moebius(*parse_matrix2(args.phi))
    cert = verify_extension(forward, tau, phi)
    return {
        "command": "verify-extension",
        "F": [str(f) for f in forward],
        "tau": [str(t) for t in tau],
        "phi": str(phi),
        "certificates": [cert.to_json()],
    }


def _cmd_plane_extend(args) -> dict:
    pts = _points(args.lam)
    g = Moebius(*parse_matrix2(args.g))
    aut = CurveAut(pts, g)
    verdict = decide_extendability(aut)
    out = {
        "command": "plane-extend",
        "lambda": [str(p) for p in sort_points(pts)],
        "g": str(g),
        "order": str(aut.order),
        "fixed_points_on_curve": aut.fixed_on_curve,
    }
    if isinstance(verdict, Extendable):
        out["verdict"] = "Extendable"
        out["embedding"] = [str(c) for c in verdict.embedding]
        out["extension"] = verdict.extension_desc
        out["certificates"] = [verdict.certificate.to_json()]
    elif isinstance(verdict, Obstructed):
        out["verdict"] = "Obstructed"
        out["reason"] = verdict.reason
        out["fixed_form"] = str(verdict.fixed_form)
        out["certificates"] = []
    else:
        out["verdict"] = "OpenCase"
        out["reason"] = verdict.reason
        out["certificates"] = []
    return out


def _cmd_cor25(args) -> dict:
    from .parsing import _split_top
    a_vals = [parse_constant(chunk) for chunk in _split_top(args.a.strip(), ",")
              if chunk]
    pts = cube_symmetric_family(args.k, a_vals)
    cert = verify_cube_symmetry(pts)
    return {
        "command": "cor25",
        "k": args.k,
        "a": [str(v) for v in a_vals],
        "points": [str(p) for p in pts],
        "certificates": [cert.to_json()],
    }


_HANDLERS = {
    "aut": _cmd_aut,
    "delta": _cmd_delta,
    "embed": _cmd_embed,
    "preset": _cmd_preset,
    "planar-normalize": _cmd_planar_normalize,
    "verify-extension": _cmd_verify_extension,
    "plane-extend": _cmd_plane_extend,
    "cor25": _cmd_cor25,
}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="equicurve",
        description="Exact equivariant embeddings of punctured projective "
                    "lines, with machine-checked certificates.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--certificate", action="store_true",
                       help="print the full verification transcript")
        p.add_argument("--conductor-cap", type=int, default=256,
                       help="maximal cyclotomic field degree")
        p.add_argument("--group-cap", type=int, default=120,
                       help="maximal group order for closures")

    p = sub.add_parser("aut", help="automorphism group of P^1 preserving a set")
    p.add_argument("--lambda", dest="lam", required=True,
                   help='points, e.g. "[0:1],[1:1],[1:0]"')
    common(p)

    p = sub.add_parser("delta",
                       help="equivariant self-map with prescribed fixed locus")
    p.add_argument("--lambda", dest="lam", required=True,
                   help='invariant point set, e.g. "[1:1],[-1:1]"')
    p.add_argument("--gens", help='group generators "[[a,b],[c,d]];..." '
                                  "(default: full stabilizer)")
    common(p)

    p = sub.add_parser("embed", help="equivariant closed embedding into A^3")
    p.add_argument("--lambda", dest="lam", required=True,
                   help='removed point set, e.g. "[1:1],[-1:1]"')
    p.add_argument("--gens", help="group generators (default: full stabilizer "
                                  "when at least 3 points, else trivial)")
    common(p)

    p = sub.add_parser("preset", help="closed-form embedding families")
    p.add_argument("--kind", required=True,
                   choices=("cyclic", "dihedral", "tetrahedral"))
    p.add_argument("--n", type=int, help="rotation order (cyclic/dihedral)")
    p.add_argument("--pairs", required=True,
                   help='orbit parameters "(a, b);(a, b);..."')
    p.add_argument("--allow-multiplicity", action="store_true",
                   help="accept orbit forms with multiple roots")
    common(p)

    p = sub.add_parser("planar-normalize",
                       help="normalize a planar embedding of a curve in A^3")
    p.add_argument("--P", dest="p", required=True, help="squarefree polynomial")
    p.add_argument("--Q", dest="q", required=True, help="rational function")
    p.add_argument("--R", dest="r", required=True, help="rational function")
    p.add_argument("--cap", type=int, default=12, help="witness degree cap")
    common(p)

    p = sub.add_parser("verify-extension",
                       help="check F o tau o phi = tau exactly")
    p.add_argument("--F", dest="f", required=True,
                   help='automorphism of A^3, "p1; p2; p3" in X, Y, Z')
    p.add_argument("--tau", required=True,
                   help='embedding, "q1; q2; q3" rational in x')
    p.add_argument("--phi", required=True, help="Moebius matrix [[a,b],[c,d]]")
    common(p)

    p = sub.add_parser("plane-extend",
                       help="decide plane extendability of an automorphism")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="removed point set preserved by the map")
    p.add_argument("--g", required=True, help="Moebius matrix [[a,b],[c,d]]")
    common(p)

    p = sub.add_parser("cor25", help="threefold-symmetric point families")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", required=True, help='values "1, 2, 5/2, ..."')
    common(p)
    return top


def _render_text(data: dict, show_cert: bool) -> str:
    lines = []
    for key, val in data.items():
        if key == "certificates":
            continue
        if isinstance(val, dict):
            lines.append(f"{key}:")
            for k2, v2 in val.items():
                lines.append(f"  {k2}: {v2}")
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{key}:")
            for item in val:
                parts = []
                for k2, v2 in item.items():
                    parts.append(f"{k2}={v2}")
                lines.append("  " + "; ".join(parts))
        elif isinstance(val, list):
            lines.append(f"{key}: " + ", ".join(str(v) for v in val))
        else:
            lines.append(f"{key}: {val}")
    certs = data.get("certificates", [])
    total = sum(len(c["clauses"]) for c in certs)
    failed = sum(1 for c in certs for cl in c["clauses"]
                 if cl["status"] != "PASS")
    if certs:
        lines.append(f"certificates: {total} clauses, "
                     + ("all PASS" if not failed else f"{failed} FAIL"))
        if show_cert or failed:
            for c in certs:
                lines.append(f"certificate: {c['title']}")
                for cl in c["clauses"]:
                    tail = (f"  [{cl['witness']}]"
                            if cl["witness"] and cl["status"] != "PASS" else "")
                    lines.append(f"  {cl['status']}  {cl['claim']}{tail}")
    return "\n".join(lines)


def _all_pass(data: dict) -> bool:
    return all(cl["status"] == "PASS"
               for c in data.get("certificates", []) for cl in c["clauses"])


def run(argv) -> tuple[int, str]:
    """Run one job; returns (exit status, report text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    cyclotomic.set_conductor_cap(args.conductor_cap)
    try:
        data = _HANDLERS[args.command](args)
    except ParseError as e:
        return 2, f"parse error: {e}"
    except CertificateFailure as e:
        return 1, f"certificate failure: {e}"
    except (ConstructionError, ZeroDivisionError) as e:
        return 3, f"construction error: {e}"
    except EquicurveError as e:
        return 3, f"error: {e}"
    ok = _all_pass(data)
    data["exit"] = 0 if ok else 1
    if args.format == "json":
        text = json.dumps(data, indent=2, sort_keys=True)
    else:
        text = _render_text(data, args.certificate)
    return data["exit"], text


def main(argv=None) -> int:
    code, text = run(argv if argv is not None else sys.argv[1:])
    print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
