import random

import pytest

from equicurve.cyclotomic import CycNum, root_of_unity
from equicurve.errors import (
    DegeneratePointsError,
    NotFiniteWithinCapError,
    NotInvariantError,
    TooFewPointsError,
)
from equicurve.projline import (
    ALL_OF_P1,
    Moebius,
    P1Point,
    SL2Elem,
    aut_of_lambda,
    cross_ratio,
    fixed_point_form,
    fixed_points,
    group_closure,
    moebius_through,
    orbit_decompose,
    sl2_pullback,
    sort_points,
)
from oracles import same_group, stabilizer_oracle

W = root_of_unity(3)
I4 = root_of_unity(4)


def pt(v):
    return P1Point(CycNum(v) if not isinstance(v, CycNum) else v, 1)


INF = P1Point.infinity()


def test_moebius_apply_examples():
    assert Moebius.identity().apply(pt(5)) == pt(5)
    assert Moebius(0, 1, 1, 0).apply(P1Point(0, 1)) == INF
    assert Moebius(W, 0, 0, 1).apply(pt(1)) == P1Point(W, 1)


def test_group_closure_examples():
    h = group_closure([Moebius(W, 0, 0, 1)])
    assert str(h.kind) == "Cyclic(3)" and h.order == 3
    h = group_closure([Moebius(I4, 0, 0, 1), Moebius(0, 1, 1, 0)])
    assert str(h.kind) == "Dihedral(4)" and h.order == 8
    # the tetrahedral group generated by [i(x+y) : x-y] and [x : -y]
    h = group_closure([Moebius(I4, I4, 1, -1), Moebius(1, 0, 0, -1)])
    assert str(h.kind) == "Tetrahedral" and h.order == 12


def test_group_closure_closed_and_classified():
    for gens in ([Moebius(I4, 0, 0, 1)],
                 [Moebius(W, 0, 0, 1), Moebius(0, 1, 1, 0)]):
        h = group_closure(gens)
        for a in h.elements:
            assert any(a.inverse() == e for e in h.elements)
            for b in h.elements:
                assert any(a * b == e for e in h.elements)
        assert h.kind.order == h.order


def test_group_closure_cap():
    with pytest.raises(NotFiniteWithinCapError):
        group_closure([Moebius(2, 0, 0, 1)], cap=50)


def test_octahedral_icosahedral_classification():
    h = group_closure([Moebius(I4, I4, 1, -1), Moebius(I4, 0, 0, 1)])
    assert str(h.kind) == "Octahedral" and h.order == 24
    z5 = root_of_unity(5)
    golden = -(z5 ** 2 + z5 ** 3)
    h = group_closure([Moebius(z5, 0, 0, 1), Moebius(0, -1, 1, 0),
                       Moebius(golden, 1, 1, -golden)])
    assert str(h.kind) == "Icosahedral" and h.order == 60


def test_moebius_through():
    src = (P1Point(0, 1), pt(1), INF)
    dst = (pt(2), pt(3), pt(5))
    g = moebius_through(src, dst)
    for s, d in zip(src, dst):
        assert g.apply(s) == d


def test_aut_of_lambda_examples():
    h = aut_of_lambda([P1Point(0, 1), pt(1), INF])
    assert h.order == 6
    rho = Moebius(0, 1, -1, 1)
    sigma = Moebius(-1, 1, 0, 1)
    assert any(g == rho for g in h.elements)
    assert any(g == sigma for g in h.elements)

    h = aut_of_lambda([pt(1), P1Point(W, 1), P1Point(W * W, 1)])
    assert h.order == 6

    with pytest.raises(TooFewPointsError):
        aut_of_lambda([pt(1), pt(2)])


def test_aut_of_lambda_nine_point_family():
    from equicurve.plane import cube_symmetric_family
    pts = cube_symmetric_family(3, [1, 2, 5])
    h = aut_of_lambda(pts)
    rot = Moebius(1, 0, 0, W)
    assert any(g == rot for g in h.elements)
    assert h.order % 3 == 0


def test_aut_of_lambda_oracle_equivalence():
    rng = random.Random(23)
    pool = [0, 1, -1, 2, -2, 3, 5, CycNum(1) / 2, W, W * W, I4, -I4,
            2 * W, 1 + W]
    for trial in range(20):
        size = rng.randint(3, 9)
        vals = rng.sample(range(len(pool)), min(size, len(pool)))
        pts = [pt(pool[v]) for v in vals[:size]]
        if rng.random() < 0.4:
            pts = pts[:-1] + [INF]
        pts = sort_points(pts)
        h1 = aut_of_lambda(pts)
        h2 = stabilizer_oracle(pts)
        assert same_group(h1, h2), f"trial {trial} disagreed"


def test_sl2_pullback_examples():
    for n in (2, 3, 4, 6):
        h = group_closure([Moebius(root_of_unity(n), 0, 0, 1)])
        g = sl2_pullback(h)
        assert g.order == 2 * h.order
        z2n = root_of_unity(2 * n)
        assert any(e == SL2Elem(z2n, 0, 0, z2n ** -1) for e in g.elements)
    h = group_closure([Moebius(I4, 0, 0, 1), Moebius(0, 1, 1, 0)])
    g = sl2_pullback(h)
    assert any(e == SL2Elem(0, I4, I4, 0) for e in g.elements)
    h = group_closure([])
    g = sl2_pullback(h)
    assert g.order == 2
    assert any(e == -SL2Elem.identity() for e in g.elements)


def test_sl2_pullback_tetrahedral_matches_reference():
    h = group_closure([Moebius(I4, I4, 1, -1), Moebius(1, 0, 0, -1)])
    g = sl2_pullback(h)
    assert g.order == 24
    half = CycNum(1) / 2
    ref = SL2Elem((I4 - 1) * half, (I4 - 1) * half,
                  (I4 + 1) * half, (-I4 - 1) * half)
    assert any(e == ref for e in g.elements)
    for e in g.elements:
        assert e.a * e.d - e.b * e.c == 1


def test_pullback_projection_two_to_one():
    h = group_closure([Moebius(W, 0, 0, 1)])
    g = sl2_pullback(h)
    for elem, proj in zip(g.elements, g.projections):
        assert elem.project() == proj
    for hel in h.elements:
        lifts = [e for e, p in zip(g.elements, g.projections) if p == hel]
        assert len(lifts) == 2
        assert lifts[0] == -lifts[1]


def test_orbit_decompose_examples():
    h3 = group_closure([Moebius(W, 0, 0, 1)])
    orbs = orbit_decompose(h3, [pt(1), P1Point(W, 1), P1Point(W * W, 1)])
    assert [len(o) for o in orbs] == [3]
    orbs = orbit_decompose(h3, [P1Point(0, 1), INF])
    assert [len(o) for o in orbs] == [1, 1]
    h2 = group_closure([Moebius(-1, 0, 0, 1)])
    orbs = orbit_decompose(h2, [pt(2), pt(-2), pt(3), pt(-3)])
    assert [len(o) for o in orbs] == [2, 2]
    with pytest.raises(NotInvariantError):
        orbit_decompose(h3, [pt(1), pt(2)])


def test_cross_ratio_normalization():
    x = CycNum(7)
    assert cross_ratio(P1Point(0, 1), INF, pt(1), pt(x)) == x


def test_cross_ratio_reference_value():
    # the four-tuple (1, w, w^2, a2); with the first two slots swapped this
    # normalization reproduces the value w(w - a2)/(a2 - 1)
    a2 = CycNum(5)
    val = cross_ratio(P1Point(W, 1), pt(1), P1Point(W * W, 1), pt(a2))
    assert val == W * (W - a2) / (a2 - 1)


def test_cross_ratio_invariance():
    rng = random.Random(3)
    pool = [0, 1, 2, 3, -1, 5, CycNum(1) / 3, W, I4]
    for _ in range(100):
        vals = rng.sample(range(len(pool)), 4)
        pts = [pt(pool[v]) for v in vals]
        entries = [rng.randint(-3, 3) for _ in range(4)]
        if not (entries[0] * entries[3] - entries[1] * entries[2]):
            continue
        g = Moebius(*entries)
        moved = [g.apply(p) for p in pts]
        assert cross_ratio(*moved) == cross_ratio(*pts)
    with pytest.raises(DegeneratePointsError):
        cross_ratio(pt(1), pt(1), pt(2), pt(3))


def test_fixed_points_examples():
    assert fixed_points(Moebius(1, 1, 0, 1)) == [INF]
    got = fixed_points(Moebius(0, 1, -1, 1))
    assert len(got) == 2
    for p in got:
        # the reference orbit {w : w^2 - w + 1 = 0}
        assert p.a * p.a - p.a + 1 == 0
    assert fixed_points(Moebius(-1, 0, 0, 1)) == sort_points([P1Point(0, 1), INF])
    assert fixed_points(Moebius.identity()) == ALL_OF_P1


def test_fixed_points_are_fixed_and_two_for_finite_order():
    rng = random.Random(17)
    count = 0
    while count < 25:
        entries = [rng.randint(-3, 3) for _ in range(4)]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if not det:
            continue
        g = Moebius(*entries)
        if g.is_identity():
            continue
        count += 1
        form = fixed_point_form(g)
        try:
            pts = fixed_points(g)
        except Exception:
            continue
        for p in pts:
            assert g.apply(p) == p
        if g.order(cap=60) is not None and g.order(cap=60) > 1:
            assert len(pts) == 2
        assert not any(form.eval(p.a, p.b) for p in pts)


def test_point_canonicalization():
    assert P1Point(CycNum(4), CycNum(2)) == pt(2)
    assert P1Point(CycNum(3), CycNum(0)) == INF
    with pytest.raises(DegeneratePointsError):
        P1Point(0, 0)


def test_aut_of_lambda_cube_roots_contains_reference_elements():
    pts = [pt(1), P1Point(W, 1), P1Point(W * W, 1)]
    h = aut_of_lambda(pts)
    rotation = Moebius(W, 0, 0, 1)
    assert any(g == rotation for g in h.elements)
    for i in range(3):
        involution = Moebius(0, 1, W ** i, 0)  # x -> 1/(w^i x)
        assert any(g == involution for g in h.elements)
