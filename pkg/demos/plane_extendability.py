"""When does a curve automorphism extend to the ambient plane?

Three curves, three answers: a scaling with its fixed points among the
removed ones extends through x -> (x, 1/P(x)); an involution fixing two
curve points extends through a hyperbola-style embedding; an order-3 map
fixing two curve points extends under no plane embedding at all.
"""
from equicurve.plane import CurveAut, decide_extendability
from equicurve.projline import Moebius, P1Point


def show(title, points, matrix):
    print(title)
    aut = CurveAut(points, Moebius(*matrix))
    print(f"  order {aut.order}, fixed points on the curve:"
          f" {aut.fixed_on_curve}")
    verdict = decide_extendability(aut)
    kind = type(verdict).__name__
    print(f"  verdict: {kind}")
    if kind == "Extendable":
        e1, e2 = verdict.embedding
        print(f"  embedding: x -> ({e1}, {e2})")
        print(f"  extension: {verdict.extension_desc}")
        print(f"  certificate: {'all pass' if verdict.certificate.ok else 'FAILED'}")
    else:
        print(f"  reason: {verdict.reason}")
    print()


show("1) doubling map on the twice-punctured line (fixed points removed)",
     [P1Point(0, 1), P1Point.infinity()], (2, 0, 0, 1))

show("2) sign flip on the line minus {2, -2} (fixed points 0, oo on curve)",
     [P1Point(2, 1), P1Point(-2, 1)], (-1, 0, 0, 1))

show("3) x -> 1/(1 - x) on the line minus {0, 1} (order 3, two fixed"
     " points on the curve)",
     [P1Point(0, 1), P1Point(1, 1), P1Point.infinity()], (0, 1, -1, 1))
