"""Realize an invariant point set as the exact fixed locus of a self-map.

Given a finite Moebius group H and an H-invariant finite set, the library
produces a self-map [x:y] -> [f1 : f2] of P^1 that commutes with H and
whose fixed points are exactly the given set.  The construction averages
a split of the invariant power of each orbit polynomial over the SL(2)
pullback of H.
"""
from equicurve.equivariant import (
    contract,
    selfmap_with_fixed_locus,
    verify_fixed_locus,
    verify_selfmap_equivariance,
)
from equicurve.projline import Moebius, P1Point, group_closure

H = group_closure([Moebius(-1, 0, 0, 1)])  # x -> -x
print(f"group: {H}")

removed = [P1Point(1, 1), P1Point(-1, 1), P1Point(0, 1), P1Point.infinity()]
selfmap, orbits, G = selfmap_with_fixed_locus(H, removed)

print(f"\n{len(orbits)} orbits:")
for o in orbits:
    print(f"  points {', '.join(str(p) for p in o.points)}")
    print(f"    orbit polynomial p = {o.p}")
    print(f"    invariant power  d = {o.d},  P = p^d = {o.P}")
    print(f"    group-fixed pair   = ({o.pair.f1}, {o.pair.f2})")
    assert contract(o.pair) == o.P

print(f"\ncombined self-map: [x : y] -> [{selfmap.reduced1} : {selfmap.reduced2}]")

for cert in (verify_selfmap_equivariance(selfmap, H),
             verify_fixed_locus(selfmap, removed)):
    print(f"\n{cert.title}: {'all pass' if cert.ok else 'FAILED'}")
    for clause in cert.clauses:
        print("  PASS" if clause.ok else "  FAIL", clause.claim)
