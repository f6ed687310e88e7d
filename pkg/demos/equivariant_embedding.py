"""Build an equivariant closed embedding of a punctured line into 3-space.

The curve is P^1 minus the six points {0, oo, 1, -1, i, -i}.  That set is
one orbit of the tetrahedral rotation group, so the curve's automorphisms
include all twelve rotations; the embedding below is equivariant for a
linear action of that group on A^3.
"""
from equicurve.cyclotomic import root_of_unity
from equicurve.embed3 import build_embedding, standard_group
from equicurve.projline import P1Point

i = root_of_unity(4)
removed = [P1Point(0, 1), P1Point.infinity(), P1Point(1, 1), P1Point(-1, 1),
           P1Point(i, 1), P1Point(-i, 1)]

group = standard_group("tetrahedral")
print(f"symmetry group: {group}")

embedding, certificate = build_embedding(group, points=removed)

print(f"removed set cut out by: {embedding.lambda_poly}")
print("embedding of [x : y], as ratios of homogeneous forms:")
for name, num in zip("xyz", embedding.nums):
    print(f"  {name} = ({num}) / ({embedding.den})")

print("\neach group generator acts on A^3 by a 3x3 matrix:")
for g, m in embedding.reps:
    rows = [", ".join(str(m[3 * r + c]) for c in range(3)) for r in range(3)]
    print(f"  {g}  ->  [{'; '.join(rows)}]")

print(f"\nall {len(certificate.clauses)} certificate clauses pass:"
      f" {certificate.ok}")
print("sample clauses:")
for clause in certificate.clauses[:4]:
    print("  PASS" if clause.ok else "  FAIL", clause.claim)
