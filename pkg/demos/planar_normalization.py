"""Carry a planar embedding in 3-space to the normal form (x, 1/P(x), 0).

The curve below is the affine line minus {0}; the input embedding lands in
the plane X = 0 with coordinates (1/x, x + 1/x).  Four explicit shears and
one linear mix bring it to the standard form, and the whole chain is
verified as one exact identity of rational-function triples.
"""
from equicurve.parsing import parse_ratfun, parse_upoly
from equicurve.planar import PlanarEmbedding, compose_chain, normalize_planar

embedding = PlanarEmbedding(
    P=parse_upoly("x"),
    Q=parse_ratfun("1/x"),
    R=parse_ratfun("x + 1/x"),
)
print("input embedding: x -> (0, 1/x, x + 1/x) on the curve x != 0")

chain, certificate = normalize_planar(embedding)

print("\nnormalization chain (each step is an automorphism of A^3")
print("with an exact inverse):")
state = embedding.triple()
for step in chain:
    state = step.apply(state)
    forward = ", ".join(str(f) for f in step.forward)
    print(f"  {step.label}: (X, Y, Z) -> ({forward})")
    print(f"      image now x -> ({state[0]}, {state[1]}, {state[2]})")

print(f"\ncertificate: {'all pass' if certificate.ok else 'FAILED'}")
for clause in certificate.clauses:
    print("  PASS" if clause.ok else "  FAIL", clause.claim)

composite = compose_chain(chain)
print("\ncomposite automorphism, first coordinate:")
print(f"  X -> {composite.forward[0]}")
