"""The two curves with infinite automorphism groups get bespoke embeddings.

The affine line embeds as the X-axis with t -> a t + b acting by the
linear map (x, y, z) -> (a x + b (y + 1), y, z); the punctured line embeds
as the hyperbola x y = 1 in the plane z = 0, with scalings acting
diagonally and the inversions swapping the two coordinates.
"""
from equicurve.embed3 import affine_line_embedding, punctured_line_embedding

tau, action, cert = affine_line_embedding()
print("affine line: t -> (t, 0, 0)")
fwd = ", ".join(str(f) for f in action(2, 3))
print(f"  t -> 2t + 3 extends to (X, Y, Z) -> ({fwd})")
print(f"  certificate ({len(cert.clauses)} clauses):"
      f" {'all pass' if cert.ok else 'FAILED'}")

tau, scaling, inversion, cert = punctured_line_embedding()
print("\npunctured line: t -> (t, 1/t, 0)")
fwd = ", ".join(str(f) for f in scaling(5))
print(f"  t -> 5t extends to      (X, Y, Z) -> ({fwd})")
fwd = ", ".join(str(f) for f in inversion(5))
print(f"  t -> 5/t extends to     (X, Y, Z) -> ({fwd})")
print(f"  certificate ({len(cert.clauses)} clauses):"
      f" {'all pass' if cert.ok else 'FAILED'}")
