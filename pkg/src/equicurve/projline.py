"""Points of P^1, Moebius transformations and finite subgroup machinery.

Moebius transformations are 2x2 matrices over CycNum up to scalar; the
stored form is canonical (first nonzero entry in row-major order equals 1)
so projective equality is entrywise equality.  Finite subgroups are closed
element lists classified by their order statistics, which distinguish the
five possible types (cyclic, dihedral, tetrahedral, octahedral,
icosahedral).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclotomic import CycNum, _split_square, as_cyc, try_sqrt
from .errors import (
    ConductorCapError,
    DegeneratePointsError,
    NotFiniteWithinCapError,
    NotInvariantError,
    RootFieldUnsupportedError,
    SqrtNotFoundError,
    TooFewPointsError,
)
from .poly import HPoly2

_C0 = CycNum(0)
_C1 = CycNum(1)


class P1Point:
    """Point [a : b] of the projective line, stored in canonical form."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a, b = as_cyc(a), as_cyc(b)
        if b:
            a, b = (a / b).reduced(), _C1
        elif a:
            a, b = _C1, _C0
        else:
            raise DegeneratePointsError("[0 : 0] is not a point of P^1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("P1Point is immutable")

    @staticmethod
    def infinity() -> "P1Point":
        return P1Point(1, 0)

    @staticmethod
    def of(value) -> "P1Point":
        return P1Point(as_cyc(value), 1)

    def is_infinity(self) -> bool:
        return not self.b

    def __eq__(self, other):
        if not isinstance(other, P1Point):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    __hash__ = None

    def __str__(self):
        return f"[{self.a} : {self.b}]"

    __repr__ = __str__


def sort_points(points: list[P1Point]) -> list[P1Point]:
    """Deterministic order: lexicographic on conductor-unified coordinates."""
    big = 1
    for p in points:
        for v in (p.a, p.b):
            big = big * v.m // gcd(big, v.m)
    return sorted(points, key=lambda p: (p.a.key_under(big), p.b.key_under(big)))


def _common_conductor(points: list[P1Point]) -> int:
    big = 1
    for p in points:
        for v in (p.a, p.b):
            big = big * v.m // gcd(big, v.m)
    return big


def point_key(p: P1Point, big: int) -> tuple:
    return (p.a.key_under(big), p.b.key_under(big))


def dedupe_points(points: list[P1Point]) -> list[P1Point]:
    out: list[P1Point] = []
    for p in points:
        if not any(p == q for q in out):
            out.append(p)
    return out


class Moebius:
    """Projective 2x2 matrix [[a, b], [c, d]] acting by [x:y] -> [ax+by : cx+dy]."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        entries = [as_cyc(v) for v in (a, b, c, d)]
        lead = next((v for v in entries if v), None)
        if lead is None:
            raise DegeneratePointsError("zero matrix is not a Moebius map")
        if lead != 1:
            inv = lead.inverse()
            entries = [(v * inv).reduced() for v in entries]
        if not entries[0] * entries[3] - entries[1] * entries[2]:
            raise DegeneratePointsError("Moebius matrix must be invertible")
        for name, v in zip("abcd", entries):
            object.__setattr__(self, name, v)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Moebius is immutable")

    @staticmethod
    def identity() -> "Moebius":
        return Moebius(1, 0, 0, 1)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def det(self) -> CycNum:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "Moebius") -> "Moebius":
        return Moebius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Moebius":
        return Moebius(self.d, -self.b, -self.c, self.a)

    def apply(self, p: P1Point) -> P1Point:
        return P1Point(self.a * p.a + self.b * p.b, self.c * p.a + self.d * p.b)

    def is_identity(self) -> bool:
        return (not self.b) and (not self.c) and self.a == 1 and self.d == 1

    def order(self, cap: int = 200) -> int | None:
        """Multiplicative order, or None if it exceeds the cap."""
        g = self
        for k in range(1, cap + 1):
            if g.is_identity():
                return k
            g = g * self
        return None

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    __hash__ = None

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    __repr__ = __str__


def sort_moebius(elements: list[Moebius]) -> list[Moebius]:
    big = 1
    for g in elements:
        for v in g.entries():
            big = big * v.m // gcd(big, v.m)
    return sorted(elements, key=lambda g: tuple(v.key_under(big) for v in g.entries()))


class SL2Elem:
    """2x2 matrix with determinant exactly 1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        entries = [as_cyc(v).reduced() for v in (a, b, c, d)]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if det != 1:
            raise DegeneratePointsError(f"determinant {det} is not 1")
        for name, v in zip("abcd", entries):
            object.__setattr__(self, name, v)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("SL2Elem is immutable")

    @staticmethod
    def identity() -> "SL2Elem":
        return SL2Elem(1, 0, 0, 1)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __neg__(self) -> "SL2Elem":
        return SL2Elem(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other: "SL2Elem") -> "SL2Elem":
        return SL2Elem(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2Elem":
        return SL2Elem(self.d, -self.b, -self.c, self.a)

    def project(self) -> Moebius:
        return Moebius(*self.entries())

    def __eq__(self, other):
        if not isinstance(other, SL2Elem):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    __hash__ = None

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    __repr__ = __str__


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupKind:
    name: str          # Cyclic | Dihedral | Tetrahedral | Octahedral | Icosahedral
    n: int | None = None

    def __str__(self):
        return f"{self.name}({self.n})" if self.n is not None else self.name

    @property
    def order(self) -> int:
        if self.name == "Cyclic":
            return self.n
        if self.name == "Dihedral":
            return 2 * self.n
        return {"Tetrahedral": 12, "Octahedral": 24, "Icosahedral": 60}[self.name]


@dataclass
class FinSubgroupH:
    """A finite subgroup of PGL(2), closed element list plus classification."""

    elements: list[Moebius]
    generators: list[Moebius]
    kind: GroupKind

    @property
    def order(self) -> int:
        return len(self.elements)

    def __str__(self):
        return f"{self.kind} of order {self.order}"


@dataclass
class FinSubgroupG:
    """Pullback of a FinSubgroupH under SL(2) -> PGL(2); order doubles."""

    elements: list[SL2Elem]
    projections: list[Moebius]   # aligned with elements
    generators: list[SL2Elem]
    h: FinSubgroupH

    @property
    def order(self) -> int:
        return len(self.elements)


def _element_orders(elements: list[Moebius]) -> list[int]:
    return [g.order(cap=len(elements) + 1) for g in elements]


def classify_group(elements: list[Moebius]) -> GroupKind:
    n = len(elements)
    orders = _element_orders(elements)
    if any(o is None for o in orders):  # pragma: no cover - closure guarantees
        raise NotFiniteWithinCapError("element order exceeded the group order")
    if max(orders) == n:
        return GroupKind("Cyclic", n)
    stats = {}
    for o in orders:
        stats[o] = stats.get(o, 0) + 1
    if n == 12 and stats == {1: 1, 2: 3, 3: 8}:
        return GroupKind("Tetrahedral")
    if n == 24 and stats == {1: 1, 2: 9, 3: 8, 4: 6}:
        return GroupKind("Octahedral")
    if n == 60 and stats == {1: 1, 2: 15, 3: 20, 5: 24}:
        return GroupKind("Icosahedral")
    if n % 2 == 0 and max(orders) == n // 2:
        return GroupKind("Dihedral", n // 2)
    raise NotFiniteWithinCapError(
        f"order statistics {stats} match no finite subgroup of PGL(2)")


def group_closure(gens: list[Moebius], cap: int = 120) -> FinSubgroupH:
    """Breadth-first closure of the generated subgroup, then classification."""
    gens = [g for g in gens if not g.is_identity()]
    elements = [Moebius.identity()]
    frontier = [Moebius.identity()]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = a * g
                if not any(b == e for e in elements):
                    elements.append(b)
                    new.append(b)
                    if len(elements) > cap:
                        raise NotFiniteWithinCapError(
                            f"closure exceeded cap {cap}; group may be infinite")
        frontier = new
    elements = sort_moebius(elements)
    return FinSubgroupH(elements, gens or [Moebius.identity()],
                        classify_group(elements))


def minimal_generators(elements: list[Moebius]) -> list[Moebius]:
    """A small generating subsequence of a closed element list."""
    target = len(elements)
    gens: list[Moebius] = []
    have = [Moebius.identity()]
    for e in elements:
        if any(e == h for h in have):
            continue
        gens.append(e)
        have = group_closure(gens, cap=target).elements
        if len(have) == target:
            break
    return gens or [Moebius.identity()]


def _triple_matrix(p1: P1Point, p2: P1Point, p3: P1Point):
    # rows vanish at p1 resp. p3; scaled to agree at p2; sends the triple
    # to [0:1], [1:1], [1:0]
    lam = p3.b * p2.a - p3.a * p2.b
    mu = p1.b * p2.a - p1.a * p2.b
    return (lam * p1.b, -lam * p1.a, mu * p3.b, -mu * p3.a)


def _adj_mul(m, n):
    # adjugate(m) @ n, entrywise
    a, b, c, d = m
    return (d * n[0] - b * n[2], d * n[1] - b * n[3],
            a * n[2] - c * n[0], a * n[3] - c * n[1])


def moebius_through(src: tuple[P1Point, P1Point, P1Point],
                    dst: tuple[P1Point, P1Point, P1Point]) -> Moebius:
    """The unique Moebius map with src_i -> dst_i (triples of distinct points)."""
    return Moebius(*_adj_mul(_triple_matrix(*dst), _triple_matrix(*src)))


def aut_of_lambda(points: list[P1Point], cap: int = 120,
                  base: tuple[int, int, int] = (0, 1, 2),
                  reverse: bool = False) -> FinSubgroupH:
    """All Moebius maps preserving the set, found by triple transport.

    Each ordered triple of distinct points is a candidate image of one fixed
    base triple; three-point transitivity pins the map, set preservation
    filters.  O(r^3) solves, fine for r <= 60.  ``base`` and ``reverse``
    exist so tests can cross-check with an independent enumeration.
    """
    pts = dedupe_points(points)
    if len(pts) < 3:
        raise TooFewPointsError("automorphism search needs at least 3 points")
    pts = sort_points(pts)
    b = (pts[base[0]], pts[base[1]], pts[base[2]])
    idx = range(len(pts))
    triples = [(i, j, k) for i in idx for j in idx for k in idx
               if i != j and j != k and i != k]
    if reverse:
        triples.reverse()
    big = _common_conductor(pts)
    keyset = {point_key(p, big) for p in pts}
    base_m = _triple_matrix(*b)
    found: list[Moebius] = []
    for (i, j, k) in triples:
        g = Moebius(*_adj_mul(_triple_matrix(pts[i], pts[j], pts[k]), base_m))
        if all(point_key(g.apply(p), big) in keyset for p in pts):
            found.append(g)
    elements = sort_moebius(found)
    return FinSubgroupH(elements, minimal_generators(elements),
                        classify_group(elements))


def sl2_pullback(h: FinSubgroupH) -> FinSubgroupG:
    """The preimage in SL(2): both unit-determinant rescalings of each element."""
    elements: list[SL2Elem] = []
    projections: list[Moebius] = []
    lift_of: list[SL2Elem] = []
    for g in h.elements:
        s = try_sqrt(g.det().inverse())
        if s is None:
            raise SqrtNotFoundError(
                f"no square root found for 1/det = {g.det().inverse()} "
                f"of element {g}")
        lift = SL2Elem(s * g.a, s * g.b, s * g.c, s * g.d)
        lift_of.append(lift)
        for cand in (lift, -lift):
            elements.append(cand)
            projections.append(g)
    gens = []
    for g in h.generators:
        i = next(i for i, e in enumerate(h.elements) if e == g)
        gens.append(lift_of[i])
    gens.append(-SL2Elem.identity())
    return FinSubgroupG(elements, projections, gens, h)


def orbit_decompose(h: FinSubgroupH, points: list[P1Point]) -> list[list[P1Point]]:
    """Partition an invariant set into group orbits, deterministically ordered."""
    pts = sort_points(dedupe_points(points))
    for g in h.elements:
        for p in pts:
            q = g.apply(p)
            if not any(q == t for t in pts):
                raise NotInvariantError(
                    f"set is not invariant: {g} sends {p} to {q}")
    remaining = list(pts)
    orbits = []
    while remaining:
        p = remaining[0]
        orbit = dedupe_points([g.apply(p) for g in h.elements])
        orbit = sort_points(orbit)
        orbits.append(orbit)
        remaining = [q for q in remaining if not any(q == t for t in orbit)]
    return orbits


def cross_ratio(p1: P1Point, p2: P1Point, p3: P1Point, p4: P1Point) -> CycNum:
    """Cross-ratio, normalized so that ([0:1], [1:0], [1:1], [x:1]) -> x.

    Equivalently the image of p4 under the chart sending (p1, p2, p3) to
    (0, infinity, 1).  Moebius-invariant in all four arguments.
    """
    pts = [p1, p2, p3, p4]
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DegeneratePointsError(
                    f"cross-ratio needs distinct points, got {pts[i]} twice")

    def d(p, q):
        return p.a * q.b - q.a * p.b

    return (d(p4, p1) * d(p3, p2)) / (d(p4, p2) * d(p3, p1))


ALL_OF_P1 = "all of P^1"


def fixed_point_form(g: Moebius) -> HPoly2:
    """Homogeneous degree-2 form whose roots are the fixed points of g."""
    # [x:y] fixed  <=>  (a x + b y) y - (c x + d y) x = 0
    return HPoly2(2, {2: -g.c, 1: g.a - g.d, 0: g.b})


def fixed_points(g: Moebius):
    """Fixed points of g: a list of one or two points, or ALL_OF_P1.

    Quadratic roots are extracted with try_sqrt; if the square root is not
    found the discriminant is retried over a once-enlarged conductor, after
    which RootFieldUnsupportedError is raised.
    """
    if g.is_identity():
        return ALL_OF_P1
    form = fixed_point_form(g)
    cc, bb, aa = (-g.c), (g.a - g.d), g.b  # cc x^2 + bb x y + aa y^2
    if not cc:
        pts = [P1Point.infinity()]
        if bb:
            pts.append(P1Point(-aa / bb, 1))
        return sort_points(dedupe_points(pts))
    disc = bb * bb - 4 * cc * aa
    if not disc:
        return [P1Point(-bb / (2 * cc), 1)]
    s = try_sqrt(disc)
    if s is None:
        # one level of growth: fold in i and the squarefree kernel of the
        # rational content, then search again over the larger conductor
        big = 4 * disc.m
        if disc.is_rational():
            q = disc.as_fraction()
            big *= _split_square(abs(q.numerator) * q.denominator)[1]
        if big % 4 == 2:
            big //= 2
        try:
            s = try_sqrt(disc.embedded(big))
        except ConductorCapError:
            s = None
        if s is None:
            raise RootFieldUnsupportedError(
                f"fixed points of {g} live outside the reachable "
                f"cyclotomic fields (discriminant {disc})")
    inv = (2 * cc).inverse()
    r1 = (-bb + s) * inv
    r2 = (-bb - s) * inv
    pts = [P1Point(r1, 1), P1Point(r2, 1)]
    assert not form.eval(pts[0].a, pts[0].b)
    return sort_points(dedupe_points(pts))
