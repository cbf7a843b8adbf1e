import itertools
import random

import pytest

from conftest import grass
from schubred.rootsys import ParabolicData, root_system
from schubred.schubert import (
    CohClass,
    bk_degree,
    bk_intersection_number,
    chevalley_multiply,
    choose_backend,
    intersection_number,
    levi_movable,
    product,
    richmond_bk_twostep,
)
from schubred.weyl import (
    identity,
    longest_coset_rep,
    min_coset_reps,
    parse_weyl,
    poincare_dual,
    reflection,
)


def triples(P):
    reps = min_coset_reps(P)
    for a, b, c in itertools.combinations_with_replacement(reps, 3):
        if a.length + b.length + c.length == 2 * P.dim:
            yield a, b, c


def test_chevalley_of_zero_weight():
    P = ParabolicData.of(root_system("A", 3), [2])
    top = CohClass.fundamental(P)
    assert not chevalley_multiply(P.system.zero(), top)


def test_chevalley_on_the_fundamental_class_sl3():
    s = root_system("A", 2)
    B = ParabolicData.borel(s)
    top = CohClass.fundamental(B)
    for i in (1, 2):
        w = s.weight(tuple(int(j == i) for j in (1, 2)))
        expected = longest_coset_rep(B) * reflection(s, s.simple_roots[i - 1])
        assert chevalley_multiply(w, top).terms == {expected: 1}


@pytest.mark.parametrize("kind,rank,node", [("A", 4, 2), ("B", 3, 1), ("C", 3, 2), ("D", 4, 2)])
def test_chevalley_agrees_with_cup_product_by_the_divisor(kind, rank, node):
    # c_1(L(w_node)) is the divisor class; multiplying by it both ways must agree
    P = ParabolicData.of(root_system(kind, rank), [node])
    w = P.system.weight(tuple(int(j == node) for j in range(1, rank + 1)))
    divisor = CohClass.schubert(poincare_dual(min_coset_reps(P)[1], P), P)
    rng = random.Random(node)
    reps = list(min_coset_reps(P))
    for v in rng.sample(reps, min(len(reps), 12)):
        tv = CohClass.schubert(v, P)
        assert chevalley_multiply(w, tv).terms == product(divisor, tv, "localization").terms


def test_known_intersection_numbers(gr36):
    vs, P = gr36
    assert intersection_number(vs, P) == 2
    assert intersection_number(vs, P, "localization") == 2
    s = root_system("A", 7)
    P8 = ParabolicData.of(s, [4])
    u, v = parse_weyl(s, "[35681247]"), parse_weyl(s, "[24681357]")
    assert intersection_number([u, v, v], P8) == 3
    vs, P = grass("D", 4, 2, (6, 8), (3, 7), (3, 7))
    assert intersection_number(vs, P) == 2


def test_degree_condition_gives_zero(gr36):
    vs, P = gr36
    assert intersection_number([vs[0], vs[1], identity(P.system)], P) == 0


def test_mixed_parabolics_rejected():
    vs, P = grass("A", 5, 3, (2, 4, 6), (2, 4, 6))
    other = ParabolicData.of(root_system("A", 5), [2])
    with pytest.raises(ValueError):
        intersection_number(vs, other)


@pytest.mark.parametrize("kind,rank,node", [("A", 5, 3), ("B", 3, 2), ("C", 3, 1), ("D", 4, 1), ("B", 4, 4)])
def test_poincare_pairing(kind, rank, node):
    P = ParabolicData.of(root_system(kind, rank), [node])
    for v in min_coset_reps(P):
        assert intersection_number([v, poincare_dual(v, P)], P) == 1


@pytest.mark.parametrize("n", range(2, 7))
def test_backends_agree_exhaustively(n):
    for r in range(1, n):
        P = ParabolicData.of(root_system("A", n - 1), [r])
        for vs in triples(P):
            assert intersection_number(vs, P, "lr") == intersection_number(vs, P, "localization")


@pytest.mark.parametrize("n,r", [(7, 3), (7, 2), (8, 4), (8, 3)])
def test_backends_agree_sampled(n, r):
    P = ParabolicData.of(root_system("A", n - 1), [r])
    reps = min_coset_reps(P)
    by_len = {}
    for v in reps:
        by_len.setdefault(v.length, []).append(v)
    rng = random.Random(n * 10 + r)
    for _ in range(15):
        a, b = rng.sample(reps, 2)
        need = 2 * P.dim - a.length - b.length
        if need not in by_len:
            continue
        c = rng.choice(by_len[need])
        assert intersection_number([a, b, c], P, "lr") == intersection_number([a, b, c], P, "localization")


def test_symmetry_sampled():
    rng = random.Random(5)
    for kind, rank, node in (("B", 3, 2), ("C", 3, 2), ("A", 5, 3)):
        P = ParabolicData.of(root_system(kind, rank), [node])
        ts = list(triples(P))
        for vs in rng.sample(ts, min(10, len(ts))):
            vals = {intersection_number(list(p), P) for p in itertools.permutations(vs)}
            assert len(vals) == 1


def test_backend_selection(monkeypatch):
    _, P = grass("A", 5, 3)
    assert choose_backend(P) == "lr"
    monkeypatch.setenv("SCHUBRED_BACKEND", "localization")
    assert choose_backend(P) == "localization"
    _, Q = grass("B", 3, 1)
    monkeypatch.setenv("SCHUBRED_BACKEND", "auto")
    assert choose_backend(Q) == "localization"
    with pytest.raises(ValueError):
        choose_backend(Q, "lr")
    with pytest.raises(ValueError):
        choose_backend(P, "tableaux")


def test_cohclass_validation():
    s = root_system("A", 2)
    P = ParabolicData.of(s, [1])
    with pytest.raises(ValueError):
        CohClass.schubert(parse_weyl(s, "[213]") * parse_weyl(s, "[132]") * parse_weyl(s, "[213]"), P)
    pt = CohClass.point(P)
    assert pt.degree() == 1 and pt.is_homogeneous()
    assert not (pt + pt.scale(-1))


# Belkale-Kumar -------------------------------------------------------------


def test_bk_examples():
    vs, P = grass("C", 4, 4, (2, 5, 6, 8), (3, 4, 7, 8), (2, 4, 6, 8))
    assert bk_intersection_number(vs, P) == 2
    vs, P = grass("D", 4, 2, (6, 8), (3, 7), (3, 7))
    assert intersection_number(vs, P) == 2
    assert bk_intersection_number(vs, P) == 0
    assert not levi_movable(vs, P)
    vs, P = grass("B", 4, 1, (7,), (7,), (6,))
    assert levi_movable(vs, P)


def test_levi_movable_gr36(gr36):
    assert levi_movable(*gr36)


def test_bk_degree_of_the_identity_is_zero():
    P = ParabolicData.of(root_system("C", 3), [1, 3])
    assert bk_degree(identity(P.system), P) == 0


@pytest.mark.parametrize("kind,rank,node,cominuscule", [
    ("A", 4, 2, True), ("B", 3, 1, True), ("C", 3, 3, True), ("D", 4, 1, True), ("D", 4, 4, True),
    ("B", 3, 2, False), ("C", 3, 1, False), ("C", 3, 2, False),
])
def test_bk_bounded_by_cup_and_equal_when_cominuscule(kind, rank, node, cominuscule):
    P = ParabolicData.of(root_system(kind, rank), [node])
    for vs in triples(P):
        c, bk = intersection_number(vs, P), bk_intersection_number(vs, P)
        assert 0 <= bk <= c
        if cominuscule:
            assert bk == c


# two-step flags -------------------------------------------------------------


def test_richmond_two_step():
    I = (2, 3, 5, 6, 8, 9)
    assert richmond_bk_twostep([((3, 6, 9), I)] * 3, 3, 6, 9) == 6
    flags = [((5, 6), (2, 4, 5, 6, 9, 10)), ((7, 10), (3, 4, 6, 7, 9, 10)), ((5, 8), (2, 4, 5, 7, 8, 10))]
    assert richmond_bk_twostep(flags, 2, 6, 10) == 2
    same = [((2, 4, 6), (2, 4, 6))] * 3
    assert richmond_bk_twostep(same, 3, 3, 6) == 2
    with pytest.raises(ValueError):
        richmond_bk_twostep([((1, 7), I)] * 3, 2, 6, 9)
