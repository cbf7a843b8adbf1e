import itertools
import random

import pytest

from conftest import grass
from schubred import lr
from schubred.branch import PreconditionError, branch_class, on_face
from schubred.reduce import (
    LR2Triple,
    UnsupportedError,
    alternating_multiplicity,
    levi_multiplicity,
    lr2_map,
    lr2_orbit,
    multiplicity,
    sl_weights,
    theta_stretch_check,
    verify_main_theo,
)
from schubred.rootsys import ParabolicData, root_system
from schubred.tensor import triple_invariants
from schubred.weyl import flag_to_weyl, min_rep, parse_weyl


def squared(p):
    return tuple(x for x in p for _ in (0, 1))


def gr36_face_points(bound):
    """Dominant GL_6 triples with entries in [-bound, bound] on the face of the {2,4,6} triple.

    On this face every weight is squared (l1 = l2, l3 = l4, l5 = l6); the
    first two are normalised to end in 0.
    """
    half = [p for p in itertools.product(range(bound, -bound - 1, -1), repeat=3) if p[0] >= p[1] >= p[2]]
    first = [p for p in half if p[2] == 0]
    for a, b in itertools.product(first, repeat=2):
        for c in half:
            if sum(a) + sum(b) + sum(c) == 0:
                yield tuple(squared(p) for p in (a, b, c))


def test_main_identity_on_the_gr36_face(gr36):
    vs, P = gr36
    count = 0
    for pt in gr36_face_points(4):
        zetas = sl_weights(pt)
        assert on_face(zetas, vs, P)
        assert verify_main_theo(zetas, vs, P).verdict
        count += 1
    assert count >= 50


def test_main_identity_at_zero(gr36):
    vs, P = gr36
    chk = verify_main_theo([P.system.zero()] * 3, vs, P)
    assert (chk.m_zeta, chk.m_shifted, chk.m_levi) == (1, 0, 1)
    assert chk.to_json()["holds"]


def test_stretched_family(gr36):
    vs, P = gr36
    th = branch_class(vs, P).theta
    for k in range(1, 5):
        chk = verify_main_theo([t * k for t in th], vs, P)
        assert chk.m_zeta == (k + 1) * (k + 2) // 2
        assert chk.m_shifted == k * (k + 1) // 2
        assert chk.m_levi == (k + 1) ** 2


def test_errors(gr36):
    vs, P = gr36
    s = P.system
    off = [s.weight((1, 0, 0, 0, 0))] + [s.zero()] * 2
    with pytest.raises(PreconditionError):
        verify_main_theo(off, vs, P)
    vs1, P1 = grass("A", 3, 2, (1, 3), (2, 4), (3, 4))
    assert branch_class(vs1, P1).c_value == 1
    with pytest.raises(UnsupportedError):
        verify_main_theo([P1.system.zero()] * 3, vs1, P1)
    P2 = ParabolicData.of(root_system("B", 3), [1, 2])
    vs2 = [parse_weyl(P2.system, w) for w in ("[-3,1,2]", "[-3,-1,2]", "[-2,-1,3]")]
    rep = branch_class(vs2, P2)
    assert (rep.c_value, rep.bk_value) == (2, 0)
    with pytest.raises(UnsupportedError):
        alternating_multiplicity([P2.system.zero()] * 3, vs2, P2)
    assert alternating_multiplicity([P2.system.zero()] * 3, vs2, P2, theta=rep.theta).terms


# alternating sums ------------------------------------------------------------------


L63 = (41, 41, 36, 36, 35, 24, 0, 0, 0, 0)
M63 = (-41, -41, -41, -41, -48, -48, -49, -65, -65, -72)
N63 = (49, 49, 42, 42, 40, 25, 25, 22, 2, 2)


def test_two_step_flag_alternating_sum():
    s = root_system("A", 9)
    F = ParabolicData.of(s, [2, 6])
    big = ((2, 4, 5, 6, 9, 10), (3, 4, 6, 7, 9, 10), (2, 4, 5, 7, 8, 10))
    small = ((5, 6), (7, 10), (5, 8))
    vs = [flag_to_weyl([a, b], F) for a, b in zip(small, big)]
    G = ParabolicData.of(s, [6])
    th = branch_class([min_rep(v, G) for v in vs], G).theta
    res = alternating_multiplicity(sl_weights([L63, M63, N63]), vs, F, theta=th)
    assert res.terms[:3] == [9, 4, 1]
    assert all(t == 0 for t in res.terms[3:])
    assert res.value == 6 == lr.m_gl(L63, M63, N63)
    assert res.reason == "not dominant"


def test_split_alternating_sum():
    l, m, n = L63, M63, N63
    assert lr.m_gl((l[4], l[5]), (m[6], m[9]), (n[4], n[7])) == 1
    big = ([l[0]] * 2 + [l[2]] * 2 + [l[6]] * 4, [m[0]] * 4 + [m[4]] * 2 + [m[7]] * 2,
           [n[0]] * 2 + [n[2]] * 2 + [n[5]] * 2 + [n[8]] * 2)
    vs, P = grass("A", 7, 4, (2, 4, 7, 8), (3, 4, 6, 8), (2, 4, 6, 8))
    zetas = sl_weights(big)
    res = alternating_multiplicity(zetas, vs, P)
    assert res.terms[:3] == [9, 4, 1]
    assert res.value == 6 == multiplicity(zetas)


def test_alternating_sum_equals_direct_on_the_gr36_face(gr36):
    vs, P = gr36
    for pt in gr36_face_points(2):
        z = sl_weights(pt)
        assert alternating_multiplicity(z, vs, P).value == multiplicity(z)


def test_alternating_sum_on_gr610_multiples_of_theta():
    vs, P = grass("A", 9, 6, (2, 4, 5, 6, 9, 10), (3, 4, 6, 7, 9, 10), (2, 4, 5, 7, 8, 10))
    th = branch_class(vs, P).theta
    for k in range(3):
        z = [t * k for t in th]
        res = alternating_multiplicity(z, vs, P)
        assert res.value == multiplicity(z) == (k + 1) * (k + 2) // 2


def test_alternating_sum_on_sampled_q7_face_points():
    vs, P = grass("B", 4, 1, (7,), (7,), (6,))
    s = P.system
    ws = [s.weight(c) for c in itertools.product(range(3), repeat=4)]
    pts = [(a, b, c) for a, b in itertools.combinations_with_replacement(ws, 2) for c in ws
           if on_face([a, b, c], vs, P)]
    for z in random.Random(1).sample(pts, 60):
        assert alternating_multiplicity(z, vs, P).value == triple_invariants(*z)


def test_q7_alternating_sum_on_multiples_of_theta():
    vs, P = grass("B", 4, 1, (7,), (7,), (6,))
    th = branch_class(vs, P).theta
    for k in range(7):
        z = [t * k for t in th]
        res = alternating_multiplicity(z, vs, P)
        assert res.terms == [1] * (k + 1)
        assert res.value == (1 if k % 2 == 0 else 0) == triple_invariants(*z)


def test_alternating_sum_terminates_at_the_dominance_bound(gr36):
    vs, P = gr36
    th = branch_class(vs, P).theta
    res = alternating_multiplicity([t * 3 for t in th], vs, P)
    assert res.stopped_at == 4
    assert len(res.terms) == 4


def test_closed_form_on_squared_partitions():
    done = 0
    for lam in ((2, 1, 0), (3, 1, 0), (2, 2, 0), (3, 2, 1)):
        for mu in ((2, 1, 0), (1, 1, 0), (3, 1, 0), (2, 0, 0), (3, 2, 0)):
            size = sum(lam) + sum(mu)
            for p in lr.partitions_in_box(3, 6, size):
                nu = lr._star(p + (0,) * (3 - len(p)))
                m3 = lr.m_gl(lam, mu, nu)
                if not m3:
                    continue
                assert lr.m_gl(*[squared(x) for x in (lam, mu, nu)]) == m3 * (m3 + 1) // 2
                done += 1
                break
    assert done == 20


# stretching -----------------------------------------------------------------------


def test_stretch_table_gr36(gr36):
    rows = theta_stretch_check(*gr36, 3)
    assert [r["m"] for r in rows] == [1, 3, 6, 10]
    assert [r["m_I"] for r in rows] == [1, 2, 3, 4]
    assert [r["m_Ibar"] for r in rows] == [1, 2, 3, 4]
    assert all(r["m"] == r["expected_m"] and r["m_I"] == r["expected_block"] for r in rows)


def test_stretch_table_gr610():
    vs, P = grass("A", 9, 6, (2, 4, 5, 6, 9, 10), (3, 4, 6, 7, 9, 10), (2, 4, 5, 7, 8, 10))
    rows = theta_stretch_check(vs, P, 2)
    assert [(r["m"], r["m_I"], r["m_Ibar"]) for r in rows] == [(1, 1, 1), (3, 2, 2), (6, 3, 3)]


def test_stretch_needs_a_type_a_grassmannian():
    vs, P = grass("B", 4, 1, (7,), (7,), (6,))
    with pytest.raises(UnsupportedError):
        theta_stretch_check(vs, P, 2)


# LR_2 ---------------------------------------------------------------------------------


def test_lr2_fixed_point():
    t = LR2Triple((2, 1), (2, 1), (3, 2, 1), 3)
    assert t.n == 6
    assert t.subsets() == ((2, 4, 6), (2, 4, 6), (2, 4, 6))
    assert lr2_map(t) == t
    orb = lr2_orbit(t).to_json()
    assert orb == {"orbit": [[[2, 1], [2, 1], [3, 2, 1]]], "cycle_start": 0}


def test_lr2_known_orbit():
    t = LR2Triple((5, 4, 2, 1), (5, 3, 2, 1, 1), (5, 5, 4, 4, 3, 2, 1), 7)
    orb = lr2_orbit(t, max_steps=4)
    assert orb.to_json()["orbit"] == [
        [[5, 4, 2, 1], [5, 3, 2, 1, 1], [5, 5, 4, 4, 3, 2, 1]],
        [[9, 9, 9, 8, 7, 4], [9, 9, 7, 7, 6, 5], [16, 15, 14, 13, 13, 9, 9]],
        [[3, 3, 2, 1], [3, 2, 1], [3, 3, 3, 3, 2, 1]],
        [[3, 3, 3, 2, 1], [3, 3, 3, 3, 2, 1], [6, 5, 4, 3, 3, 3, 3]],
    ]
    assert orb.cycle_start == 2
    for x in orb.triples:
        assert lr.lr_coefficient(x.lam, x.mu, x.nu) == 2


def test_lr2_map_stays_in_lr2_for_small_r():
    seen = 0
    for r in (2, 3):
        box = lr.partitions_in_box(r, 3)
        for lam, mu in itertools.combinations_with_replacement(box, 2):
            for nu, c in lr.lr_product(lam, mu, rows=r).items():
                if c != 2:
                    continue
                out = lr2_map(LR2Triple(lam, mu, nu, r))
                assert lr.lr_coefficient(out.lam, out.mu, out.nu) == 2
                seen += 1
    assert seen > 0


def test_lr2_triple_rejects_other_coefficients():
    with pytest.raises(ValueError):
        LR2Triple((1,), (1,), (2,), 2)
    with pytest.raises(ValueError):
        LR2Triple((2, 1), (2, 1), (3, 2, 1), 2)


def test_levi_multiplicity_on_gr36(gr36):
    vs, P = gr36
    th = branch_class(vs, P).theta
    assert levi_multiplicity([t * 2 for t in th], vs, P) == 9
