"""Acceptance run: one PASS/FAIL line per criterion.

Run directly (``python tests/test_acceptance.py``) for the summary, or through pytest.
Criterion 10 asks for a bottom row of 3*n = 6 terms on an n = 2 fixture; the tower built
here has 9 (level d has 3(n-d+1) terms). That literal check is kept and fails; see
notes/decisions.md. The rest of criterion 10 is checked separately and passes.
"""
import itertools
import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ziqqurath import fixtures  # noqa: E402
from ziqqurath.core import iso_search, terminal, validate  # noqa: E402
from ziqqurath.exactness import (classify, fibration_sequence, hom_map, is_exact, is_ngroupoid,  # noqa: E402
                                 kv_condition, ziqqurath)
from ziqqurath.functors import (comparison_S, discretize, eta_and_triangles, loop_monoid_check,  # noqa: E402
                                omega, pi0, pi1, pi1_vs_pi0_omega)
from ziqqurath.limits import h_pullback, mediate  # noqa: E402
from ziqqurath.morphisms import (Morphism, _same, compose0_functors, enumerate_morphisms,  # noqa: E402
                                 enumerate_transf2, law_suite, whisker_left)
from mutants import mutants  # noqa: E402

FIXTURES = fixtures.standard_fixtures(3)
POINTED = {k: v for k, v in FIXTURES.items() if v.point is not None}
MORPHISMS = fixtures.standard_morphisms()


# 1


def criterion_1():
    t = time.time()
    bad = [name for name, C in FIXTURES.items() if not validate(C).ok]
    missed = []
    for label, C, check, cell in mutants():
        rep = validate(C)
        if rep.ok or not any(v[0] == check and tuple(cell) in map(tuple, v[1]) for v in rep.violations):
            missed.append(label)
    dt = time.time() - t
    ok = not bad and not missed and len(mutants()) >= 10 and dt < 10
    return ok, f"{len(FIXTURES)} fixtures valid, {len(mutants()) - len(missed)}/{len(mutants())} mutants caught with witness, {dt:.2f}s"


# 2


def criterion_2():
    B2, B4 = fixtures.delooping(fixtures.cyclic(2)), fixtures.delooping(fixtures.cyclic(4))
    BB = fixtures.delooping(fixtures.cyclic(2), 2)
    parts, ok = [], True
    for label, cats in (("BZ/2,BZ/4,BZ/2", (B2, B4, B2)), ("B2Z/2 x3", (BB, BB, BB))):
        rep = law_suite(*cats, sample_budget=1500)
        skipped = [k for k, v in rep.laws.items() if v["status"] == "skipped"]
        ok = ok and rep.ok and not skipped and rep.total() >= 1000
        parts.append(f"{label}: {len(rep.laws)} laws, {rep.total()} instances, {len(rep.failures())} failures")
    return ok, "; ".join(parts)


# 3


def cospans():
    Z4, Z2 = fixtures.delooping(fixtures.cyclic(4)), fixtures.delooping(fixtures.cyclic(2))
    I, P2 = fixtures.interval(1), fixtures.pair_groupoid(2)
    T = terminal(1)
    q = MORPHISMS["quotient Z/4->Z/2"]
    return [
        (q, Morphism.constant(T, q.cod, "*")),
        (Morphism.constant(T, q.cod, "*"), q),
        (Morphism.identity(Z2), Morphism.identity(Z2)),
        (enumerate_morphisms(I, P2)[1], Morphism.constant(T, P2, "0")),
        (q, q),
    ]


def _cones(F, G, X):
    for M in enumerate_morphisms(X, F.dom):
        for N in enumerate_morphisms(X, G.dom):
            for w in enumerate_transf2(compose0_functors(M, F), compose0_functors(N, G)):
                yield M, N, w


def criterion_3():
    total, exhaustive, bad = 0, 0, []
    for ci, (F, G) in enumerate(cospans()):
        pb = h_pullback(F, G)
        cells = sum(F.dom.sizes()) + sum(G.dom.sizes()) + sum(F.cod.sizes())
        taken = 0
        for X in (terminal(1), fixtures.interval(1)):
            every = enumerate_morphisms(X, pb.apex) if cells <= 12 else None
            for M, N, w in _cones(F, G, X):
                if taken == 4:
                    break
                L = mediate(pb, M, N, w)
                if not (compose0_functors(L, pb.P) == M and compose0_functors(L, pb.Q) == N
                        and whisker_left(L, pb.eps).comps == w.comps):
                    bad.append((ci, "equations"))
                if every is not None:
                    hits = [K for K in every if compose0_functors(K, pb.P) == M
                            and compose0_functors(K, pb.Q) == N and whisker_left(K, pb.eps).comps == w.comps]
                    exhaustive += 1
                    if hits != [L]:
                        bad.append((ci, "uniqueness"))
                taken += 1
        total += taken
    return total == 20 and not bad and exhaustive > 0, \
        f"{total} cones over 5 cospans, {exhaustive} checked exhaustively for uniqueness, problems: {bad or 'none'}"


# 4


def criterion_4():
    bad = []
    for name, S in FIXTURES.items():
        if not is_ngroupoid(discretize(S)).ok or pi0(discretize(S)) != S:
            bad.append(f"{name}: pi0 D S != S")
        if S.n == 0:
            continue
        _, rep = eta_and_triangles(S, list(enumerate_morphisms(S, S)[:3]))
        if not rep.ok:
            bad.append(f"{name}: {rep.first()}")
    return not bad, f"{len(FIXTURES)} fixtures; {bad or 'counit strict, both triangles hold'}"


# 5


def criterion_5():
    bad = []
    count = 0
    for name, C in POINTED.items():
        if C.n == 0:
            continue
        count += 1
        if not comparison_S(C, C.point, C.point).ok:
            bad.append(f"{name}: S not bijective")
        rep = pi1_vs_pi0_omega(C)
        if not rep.ok:
            bad.append(f"{name}: {rep.first()}")
    return not bad, f"{count} pointed fixtures; {bad or 'S bijective, pi0 Omega = pi1 cell-for-cell'}"


# 6


def fixture_triples():
    """(F, phi, G) built from the fixture morphisms, plus both fibration sequences."""
    out = []
    ms = list(MORPHISMS.values())
    for F, G in itertools.product(ms, repeat=2):
        if not _same(F.cod, G.dom):
            continue
        for phi in enumerate_transf2(Morphism.zero(F.dom, G.cod), compose0_functors(F, G)):
            out.append((F, phi, G))
    for base in (fixtures.brown_fixture(), fixtures.ziqqurath_fixture_n2()):
        for t in fibration_sequence(base).triples:
            out.append((t.F, t.phi, t.G))
    return out


def _pointed_cell(phi):
    D = phi.D
    return phi.comps[0][phi.C.point] == D.ident[0][D.point]


def _omega_faithful_at_point(t):
    A = t.F.dom
    return classify(hom_map(t.comparison, A.point, A.point)).faithful


def criterion_6_parts():
    """Each preservation statement on every applicable fixture triple, with the failures it finds."""
    parts = {"D": [0, []], "pi0": [0, []], "Omega": [0, []], "pi0pi1": [0, []]}
    ms = list(MORPHISMS.items())
    for (a, F), (b, G) in itertools.product(ms, repeat=2):
        if not _same(F.cod, G.cod):
            continue
        lhs = discretize(h_pullback(F, G).apex)
        rhs = h_pullback(discretize(F), discretize(G)).apex
        parts["D"][0] += 1
        if iso_search(lhs, rhs) is None:
            parts["D"][1].append((a, b))
    for F, phi, G in fixture_triples():
        t = is_exact(F, phi, G)
        if not t.exact:
            continue
        parts["pi0"][0] += 1
        if not is_exact(pi0(F), pi0(phi), pi0(G)).exact:
            parts["pi0"][1].append(t)
        if t.orientation == "past" and _pointed_cell(phi):
            parts["Omega"][0] += 1
            OF, Ophi, OG = omega(F), omega(phi), omega(G)
            if not (Ophi.dom == compose0_functors(OF, OG) and is_exact(OF, Ophi, OG, "future").exact):
                parts["Omega"][1].append(t)
    for name, C in POINTED.items():
        if C.n >= 2:
            parts["pi0pi1"][0] += 1
            if pi0(pi1(C)) != pi1(pi0(C)):
                parts["pi0pi1"][1].append(name)
    return parts


def _triple_name(t):
    names = {id(v): k for k, v in MORPHISMS.items()}
    return f"({names.get(id(t.F), 'F')}, phi, {names.get(id(t.G), 'G')})"


def criterion_6():
    parts = criterion_6_parts()
    ok = all(n and not bad for n, bad in parts.values())
    summary = ", ".join(f"{k} {n - len(bad)}/{n}" for k, (n, bad) in parts.items())
    extra = ""
    if parts["Omega"][1]:
        extra = ("; Omega counterexample " + ", ".join(_triple_name(t) for t in parts["Omega"][1])
                 + ": comparison not faithful at the point, so Omega of it is not full (ledger)")
    return ok, summary + extra


# 7


def brown_oracle(F):
    """Sizes of 1 -> K_s(b,b) -> B(b,b) -> C(Fb,Fb) -> pi0 K_s -> pi0 B -> pi0 C, by direct enumeration."""
    B, C = F.dom, F.cod
    b = B.point
    e = C.ident[0][F.maps[0][b]]
    loops_B = [x for x in B.cells[1] if B.src[1][x] == b and B.tgt[1][x] == b]
    loops_C = [y for y in C.cells[1] if C.src[1][y] == F.maps[0][b] == C.tgt[1][y]]
    fiber_objs = [o for o in B.cells[0] if F.maps[0][o] == F.maps[0][b]]
    fiber_arrows = [x for x in B.cells[1] if F.maps[1][x] == e]
    ks_loops = [x for x in fiber_arrows if B.src[1][x] == b == B.tgt[1][x]]

    def classes(objs, arrows, src, tgt):
        root = {o: o for o in objs}

        def find(o):
            while root[o] != o:
                o = root[o]
            return o
        for x in arrows:
            if src[x] in root and tgt[x] in root:
                root[find(src[x])] = find(tgt[x])
        return len({find(o) for o in objs})

    return (len(ks_loops), len(loops_B), len(loops_C),
            classes(fiber_objs, fiber_arrows, B.src[1], B.tgt[1]),
            classes(B.cells[0], B.cells[1], B.src[1], B.tgt[1]),
            classes(C.cells[0], C.cells[1], C.src[1], C.tgt[1]))


def criterion_7():
    F = fixtures.brown_fixture()
    Z = ziqqurath(F)
    sizes = tuple(X.sizes()[0] for X in Z.bottom.terms)
    oracle = brown_oracle(F)
    shape = [n.split()[0] for n in Z.bottom.names] == ["pi1"] * 3 + ["pi0"] * 3
    exact = len(Z.bottom.triples) == 4 and all(t.exact for t in Z.bottom.triples)
    ok = Z.report.ok and sizes == oracle == (2, 4, 2, 1, 1, 1) and shape and exact
    return ok, f"bottom {Z.bottom.names} sizes {sizes} (oracle {oracle}), all nodes exact: {exact}"


# 8


def criterion_8():
    parts, ok = [], True
    for m in (2, 3):
        rep = loop_monoid_check(fixtures.delooping(fixtures.cyclic(m), 2))
        ok = ok and rep.ok and len(rep.info.get("omega2_elements", ())) == m
        parts.append(f"B2Z/{m}: {'coincide and commute' if rep.ok else rep.first()}")
    return ok, "; ".join(parts)


# 9


def criterion_9():
    cats = dict(FIXTURES)
    ng = fixtures.non_groupoids()
    cats.update(ng)
    bad = [name for name, C in cats.items() if is_ngroupoid(C).ok != kv_condition(C).ok]
    detected = all(not is_ngroupoid(C).ok for C in ng.values())
    return not bad and detected and len(ng) >= 3, \
        f"{len(FIXTURES)} fixtures + {len(ng)} non-groupoids, disagreements: {bad or 'none'}"


# 10


def _tower_n2():
    t = time.time()
    Z = ziqqurath(fixtures.ziqqurath_fixture_n2())
    return Z, time.time() - t


def criterion_10_structure():
    Z, dt = _tower_n2()
    exact = all(t.exact for lv in Z.levels for t in lv.triples)
    ntriples = sum(len(lv.triples) for lv in Z.levels)
    left = Z.bottom.annotations[:3]
    abelian = all(a.get("group_like") and a.get("commutative") for a in left)
    ok = Z.report.ok and Z.row_lengths() == [3, 6, 9] and exact and abelian and dt < 60
    return ok, (f"rows {Z.row_lengths()}, {ntriples} triples all exact: {exact}, "
                f"leftmost bottom groups abelian: {abelian}, {dt:.2f}s")


def criterion_10():
    Z, _ = _tower_n2()
    ok_struct, detail = criterion_10_structure()
    literal = len(Z.bottom.terms) == 3 * Z.n
    return ok_struct and literal, (f"bottom row has {len(Z.bottom.terms)} terms, stated count 3*n = {3 * Z.n} "
                                   f"not met (ledger: row-count conflict); {detail}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(i, ok, detail):
    return f"criterion {i:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


def _report(capsys, i, fn):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(i, ok, detail))
    return ok, detail


@pytest.mark.parametrize("i", [1, 2, 3, 4, 5, 7, 8, 9])
def test_criterion(i, capsys):
    ok, detail = _report(capsys, i, CRITERIA[i - 1])
    assert ok, detail


@pytest.mark.xfail(strict=True, reason="Omega fails to preserve exactness on (zero BZ/4->BZ/2, phi, id BZ/2): "
                                       "D does not preserve h-surjectivity; see notes/decisions.md")
def test_criterion_6(capsys):
    ok, detail = _report(capsys, 6, criterion_6)
    assert ok, detail


def test_criterion_6_parts():
    parts = criterion_6_parts()
    for key in ("D", "pi0", "pi0pi1"):
        n, bad = parts[key]
        assert n and not bad, key
    n, bad = parts["Omega"]
    # exactly one counterexample, the zero-then-identity triple
    assert n >= 10 and len(bad) == 1
    t = bad[0]
    assert t.F == MORPHISMS["zero BZ/4->BZ/2"] and t.G == MORPHISMS["identity BZ/2"]


def test_criterion_6_refined_omega_statement():
    """Omega of an exact triple is exact exactly when the comparison is faithful at the base point."""
    seen = 0
    for F, phi, G in fixture_triples():
        t = is_exact(F, phi, G)
        if not (t.exact and t.orientation == "past" and _pointed_cell(phi)):
            continue
        r = is_exact(omega(F), omega(phi), omega(G), "future")
        assert r.exact == _omega_faithful_at_point(t)
        seen += 1
    assert seen >= 10


def test_criterion_10_structure(capsys):
    ok, detail = criterion_10_structure()
    assert ok, detail


@pytest.mark.xfail(strict=True, reason="stated bottom-row count 3*n contradicts the 3(n+1) terms "
                                       "the construction produces; see notes/decisions.md")
def test_criterion_10(capsys):
    ok, detail = _report(capsys, 10, criterion_10)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        results.append(ok)
        print(_line(i, ok, detail), flush=True)
    print(f"{sum(results)}/{len(results)} criteria pass")
