import itertools

import pytest

from ziqqurath import fixtures
from ziqqurath.core import validate
from ziqqurath.morphisms import (Morphism, Transf2, Transf3, compose0_functors, enumerate_morphisms,
                                 enumerate_transf2, enumerate_transf3, law_suite,
                                 modification_square_check, star_compose, validate_morphism,
                                 vcompose, whisker_left, whisker_right)


def _group_homs(G, H):
    """Brute force over all maps of underlying sets, one-object deloopings only."""
    gs, hs = G.cells[1], H.cells[1]
    out = []
    for img in itertools.product(hs, repeat=len(gs)):
        f = dict(zip(gs, img))
        if all(f[G.comp[(0, 1)][(a, b)]] == H.comp[(0, 1)][(f[a], f[b])] for a in gs for b in gs):
            out.append(f)
    return out


PAIRS = [
    ("Z4", "Z4", 4), ("Z4", "Z2", 2), ("Z2", "Z4", 2), ("K", "K", 16),
    ("S3", "Z2", 2), ("Z2", "S3", 4), ("S3", "S3", 10),
]


def _grp(name):
    return fixtures.delooping({"Z4": fixtures.cyclic(4), "Z2": fixtures.cyclic(2),
                               "K": fixtures.klein(), "S3": fixtures.symmetric3()}[name])


@pytest.mark.parametrize("a,b,count", PAIRS)
def test_functor_enumeration_matches_group_homs(a, b, count):
    G, H = _grp(a), _grp(b)
    brute = _group_homs(G, H)
    assert len(brute) == count
    got = [F.maps[1] for F in enumerate_morphisms(G, H)]
    assert sorted(map(sorted, map(dict.items, got))) == sorted(map(sorted, map(dict.items, brute)))


def test_pointed_enumeration_subset():
    I, P = fixtures.interval(1), fixtures.pair_groupoid(3)
    allf = enumerate_morphisms(I, P)
    assert len(allf) == 9  # any ordered pair of objects, one arrow between them
    P2 = P.with_point("0")
    I2 = I.with_point("0")
    assert len(enumerate_morphisms(I2, P2, pointed=True)) == 3


def _natural_1(C, D, F, G, comp):
    """Naturality for 1-categories, written directly."""
    for c in C.cells[0]:
        g = comp[c]
        if D.src[1][g] != F.maps[0][c] or D.tgt[1][g] != G.maps[0][c]:
            return False
    for x in C.cells[1]:
        u, v = C.src[1][x], C.tgt[1][x]
        if D.comp[(0, 1)][(comp[u], G.maps[1][x])] != D.comp[(0, 1)][(F.maps[1][x], comp[v])]:
            return False
    return True


@pytest.mark.parametrize("C,D", [
    (fixtures.delooping(fixtures.cyclic(4)), fixtures.delooping(fixtures.cyclic(4))),
    (fixtures.delooping(fixtures.symmetric3()), fixtures.delooping(fixtures.symmetric3())),
    (fixtures.interval(1), fixtures.pair_groupoid(3)),
    (fixtures.delooping(fixtures.cyclic(2)), fixtures.pair_groupoid(2)),
])
def test_transformation_enumeration_oracle(C, D):
    Fs = enumerate_morphisms(C, D)
    for F in Fs:
        for G in Fs:
            brute = []
            for img in itertools.product(D.cells[1], repeat=len(C.cells[0])):
                comp = dict(zip(C.cells[0], img))
                if _natural_1(C, D, F, G, comp):
                    brute.append(comp)
            got = [a.comps[0] for a in enumerate_transf2(F, G)]
            assert sorted(map(sorted, map(dict.items, got))) == sorted(map(sorted, map(dict.items, brute)))
            for a in enumerate_transf2(F, G):
                assert validate_morphism(a).ok


def test_inner_automorphisms_of_s3_are_conjugate_to_identity():
    B = fixtures.delooping(fixtures.symmetric3())
    idB = Morphism.identity(B)
    # transformations id => id are central elements; S3 has trivial centre
    assert len(enumerate_transf2(idB, idB)) == 1
    # every inner automorphism receives a transformation from the identity
    targets = {tuple(sorted(a.cod.maps[1].items())) for G in enumerate_morphisms(B, B)
               for a in enumerate_transf2(idB, G)}
    assert len(targets) == 6


TWO_CATS = [
    fixtures.delooping(fixtures.cyclic(2), 1, 2),
    fixtures.delooping(fixtures.cyclic(2), 2),
    fixtures.interval(2),
]


@pytest.mark.parametrize("C", TWO_CATS)
def test_modification_enumeration_two_routes(C):
    Fs = enumerate_morphisms(C, C)
    ts = [a for F in Fs for G in Fs for a in enumerate_transf2(F, G)]
    for a in ts:
        for b in ts:
            if not (a.dom == b.dom and a.cod == b.cod):
                continue
            brute = []
            for img in itertools.product(C.cells[2], repeat=len(C.cells[0])):
                L = Transf3(a, b, [dict(zip(C.cells[0], img))])
                if modification_square_check(L).ok:
                    brute.append(L)
                # the cylinder route and the square route agree on every candidate
                assert validate_morphism(L).ok == modification_square_check(L).ok
            got = enumerate_transf3(a, b)
            assert sorted(str(L.comps) for L in got) == sorted(str(L.comps) for L in brute)


def test_identity_modification():
    C = TWO_CATS[1]
    for F in enumerate_morphisms(C, C):
        for a in enumerate_transf2(F, F):
            assert Transf3.identity(a).is_identity()
            assert validate_morphism(Transf3.identity(a)).ok


def test_vcompose_is_group_addition_on_BZ4():
    B = fixtures.delooping(fixtures.cyclic(4))
    idB = Morphism.identity(B)
    ts = {a.comps[0]["*"]: a for a in enumerate_transf2(idB, idB)}
    assert sorted(ts) == ["g0", "g1", "g2", "g3"]
    for x, y in itertools.product(ts, repeat=2):
        assert vcompose(ts[x], ts[y]).comps[0]["*"] == B.comp[(0, 1)][(x, y)]
    assert vcompose(Transf2.identity(idB), ts["g3"]) == ts["g3"]


def test_whiskering_shapes():
    B = fixtures.delooping(fixtures.cyclic(4))
    F = enumerate_morphisms(B, B)[2]  # doubling
    idB = Morphism.identity(B)
    a = [t for t in enumerate_transf2(idB, idB) if t.comps[0]["*"] == "g1"][0]
    wl = whisker_left(F, a)
    assert wl.dom == compose0_functors(F, idB) and wl.comps[0]["*"] == "g1"
    wr = whisker_right(a, F)
    assert wr.comps[0]["*"] == "g2"
    assert validate_morphism(wl).ok and validate_morphism(wr).ok


def test_star_compose_interchange_on_groupoid():
    C = TWO_CATS[1]
    Fs = enumerate_morphisms(C, C)
    for a in [t for F in Fs for G in Fs for t in enumerate_transf2(F, G)]:
        for b in [t for F in Fs for G in Fs for t in enumerate_transf2(F, G)]:
            if a.C is not b.C and not a.C.same_shape(b.C):
                continue
            S = star_compose(a, b)
            assert validate_morphism(S).ok


def test_law_suite_passes():
    C = fixtures.delooping(fixtures.cyclic(2))
    D = fixtures.interval(1)
    rep = law_suite(C, D, C, sample_budget=50)
    assert rep.ok, rep.failures()
    assert rep.total() > 0


def test_law_suite_detects_corrupted_whiskering():
    C = fixtures.delooping(fixtures.cyclic(4))
    D = fixtures.delooping(fixtures.cyclic(2))

    def bad_whisker_right(a, L):
        # off by one generator, but only when the source functor is the identity
        w = whisker_right(a, L)
        if a.dom != Morphism.identity(a.C):
            return w
        cells = w.D.cells[1]
        comps = [{x: cells[(cells.index(y) + 1) % len(cells)] for x, y in w.comps[0].items()}]
        return Transf2(w.dom, w.cod, comps)

    rep = law_suite(C, C, D, sample_budget=50, impl={"whisker_right": bad_whisker_right})
    assert not rep.ok
    assert "(R1)" in rep.failures()
    assert "(L1)" not in rep.failures()
    clean = law_suite(C, C, D, sample_budget=50)
    assert clean.ok
