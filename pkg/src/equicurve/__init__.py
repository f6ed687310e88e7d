"""Equivariant embeddings of punctured projective lines into affine 3-space.

Exact symbolic constructions and machine-checked certificates for:

* self-maps of the projective line, equivariant under a finite Moebius
  group, whose fixed locus is a prescribed invariant point set;
* closed embeddings of P^1 minus a finite set into A^3, together with the
  3x3 linear action of the curve's automorphism group;
* normalization of planar embeddings in A^3 to the standard form
  x -> (x, 1/P(x), 0) by an explicit automorphism chain;
* extendability decisions for a curve automorphism under plane embeddings.

All arithmetic is exact, over cyclotomic fields.
"""

from .cyclotomic import CycNum, root_of_unity, set_conductor_cap, try_sqrt
from .embed3 import build_embedding, preset_family, standard_group
from .equivariant import selfmap_with_fixed_locus
from .planar import PlanarEmbedding, normalize_planar, verify_extension
from .plane import CurveAut, decide_extendability
from .projline import Moebius, P1Point, aut_of_lambda, group_closure

__all__ = [
    "CycNum",
    "CurveAut",
    "Moebius",
    "P1Point",
    "PlanarEmbedding",
    "aut_of_lambda",
    "build_embedding",
    "decide_extendability",
    "group_closure",
    "normalize_planar",
    "preset_family",
    "root_of_unity",
    "selfmap_with_fixed_locus",
    "set_conductor_cap",
    "standard_group",
    "try_sqrt",
    "verify_extension",
]

__version__ = "0.1.0"
