"""Property tests for the structural invariants, over randomly drawn small inputs."""
import itertools

from hypothesis import HealthCheck, given, settings, strategies as st

from ziqqurath import fixtures
from ziqqurath.cli import dumps, loads
from ziqqurath.core import hom, iso_search, product, terminal, validate
from ziqqurath.exactness import classify, hom_map, is_exact, is_ngroupoid, kv_condition
from ziqqurath.functors import discretize, omega, pi0, pi1
from ziqqurath.limits import h_pullback, mediate
from ziqqurath.morphisms import (Morphism, compose0_functors, enumerate_morphisms, enumerate_transf2,
                                 star_compose, validate_morphism, vcompose, whisker_left)

SET = settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])

GROUPS = [fixtures.cyclic(2), fixtures.cyclic(3), fixtures.cyclic(4), fixtures.klein(), fixtures.symmetric3()]
ABELIAN = GROUPS[:4]


@st.composite
def small_cat(draw, n=None):
    n = draw(st.integers(1, 2)) if n is None else n
    kind = draw(st.sampled_from(["delooping", "pair", "discrete", "interval", "double"]))
    if kind == "delooping":
        return fixtures.delooping(draw(st.sampled_from(GROUPS)), 1, n)
    if kind == "double" and n == 2:
        return fixtures.delooping(draw(st.sampled_from(ABELIAN[:2])), 2)
    if kind == "pair":
        return fixtures.pair_groupoid(draw(st.integers(1, 3)), n)
    if kind == "discrete":
        return fixtures.discrete(draw(st.integers(1, 3)), n)
    return fixtures.interval(n)


@st.composite
def group_triple(draw):
    """Pointed morphisms BA -> BB -> BC with a 2-cell 0 => F.G, or None when there is none."""
    A, B, C = (fixtures.delooping(draw(st.sampled_from(GROUPS[:4]))) for _ in range(3))
    F = draw(st.sampled_from(enumerate_morphisms(A, B, pointed=True)))
    G = draw(st.sampled_from(enumerate_morphisms(B, C, pointed=True)))
    phis = enumerate_transf2(Morphism.zero(A, C), compose0_functors(F, G))
    if not phis:
        return None
    return F, draw(st.sampled_from(phis)), G


# core


@SET
@given(small_cat(), small_cat())
def test_products_validate_and_have_product_homs(C, D):
    if C.n != D.n or sum(C.sizes()) * sum(D.sizes()) > 400:
        return
    P, p, q = product(C, D)
    assert validate(P).ok
    x, u = C.cells[0][0], D.cells[0][-1]
    y, v = C.cells[0][-1], D.cells[0][0]
    H = hom(P, f"({x}|{u})", f"({y}|{v})")
    H2, _, _ = product(hom(C, x, y), hom(D, u, v))
    assert H.sizes() == H2.sizes()
    assert sorted(H.cells[-1]) == sorted(H2.cells[-1])


@SET
@given(small_cat())
def test_hom_of_valid_is_valid(C):
    for x, y in itertools.product(C.cells[0], repeat=2):
        assert validate(hom(C, x, y)).ok


@SET
@given(small_cat())
def test_serialization_round_trip(C):
    text = dumps(C)
    assert dumps(loads(text)) == text
    assert loads(text).same_shape(C)


# morphisms


@SET
@given(st.sampled_from(GROUPS), st.data())
def test_vcompose_closed_and_associative(G, data):
    B = fixtures.delooping(G)
    Fs = enumerate_morphisms(B, B)
    F = data.draw(st.sampled_from(Fs))
    ts = [a for H in Fs for a in enumerate_transf2(F, H)]
    a = data.draw(st.sampled_from(ts))
    b = data.draw(st.sampled_from([t for t in enumerate_transf2(a.cod, a.cod)]))
    c = data.draw(st.sampled_from([t for t in enumerate_transf2(b.cod, b.cod)]))
    ab = vcompose(a, b)
    assert validate_morphism(ab).ok
    assert vcompose(ab, c) == vcompose(a, vcompose(b, c))


@SET
@given(st.sampled_from([fixtures.delooping(fixtures.cyclic(2), 1, 2),
                        fixtures.delooping(fixtures.cyclic(2), 2), fixtures.interval(2)]), st.data())
def test_star_with_strict_right_factor_is_identity(C, data):
    Fs = enumerate_morphisms(C, C)
    ts = [a for F in Fs for G in Fs for a in enumerate_transf2(F, G)]
    a = data.draw(st.sampled_from(ts))
    strict = [b for b in ts if b.is_strict()]
    b = data.draw(st.sampled_from(strict))
    S = star_compose(a, b)
    assert S.dom == S.cod
    assert S.is_identity()


# limits


@SET
@given(st.data())
def test_mediator_equations_and_groupoid_closure(data):
    C = data.draw(small_cat(1))
    D = data.draw(small_cat(1))
    B = data.draw(small_cat(1))
    if sum(C.sizes()) + sum(D.sizes()) + sum(B.sizes()) > 20:
        return
    F = data.draw(st.sampled_from(enumerate_morphisms(C, B)))
    G = data.draw(st.sampled_from(enumerate_morphisms(D, B)))
    pb = h_pullback(F, G)
    assert validate(pb.apex).ok
    if is_ngroupoid(C).ok and is_ngroupoid(D).ok and is_ngroupoid(B).ok:
        assert is_ngroupoid(pb.apex).ok
    T = terminal(1)
    M = data.draw(st.sampled_from(enumerate_morphisms(T, C)))
    N = data.draw(st.sampled_from(enumerate_morphisms(T, D)))
    ws = enumerate_transf2(compose0_functors(M, F), compose0_functors(N, G))
    if ws:
        w = data.draw(st.sampled_from(ws))
        L = mediate(pb, M, N, w)
        assert compose0_functors(L, pb.P) == M and compose0_functors(L, pb.Q) == N
        assert whisker_left(L, pb.eps).comps == w.comps


@SET
@given(small_cat(), st.data())
def test_pullback_of_points_is_discrete(C, data):
    n = C.n
    T = terminal(n)
    x = data.draw(st.sampled_from(C.cells[0]))
    y = data.draw(st.sampled_from(C.cells[0]))
    pb = h_pullback(Morphism.constant(T, C, x), Morphism.constant(T, C, y))
    A = pb.apex
    # above the path level every cell is an identity
    for k in range(2, n + 1):
        assert all(A.is_identity((k, c)) for c in A.cells[k])


# functors


@SET
@given(small_cat(), small_cat())
def test_pi0_commutes_with_products(C, D):
    if C.n != D.n or sum(C.sizes()) * sum(D.sizes()) > 400:
        return
    if not (is_ngroupoid(C).ok and is_ngroupoid(D).ok):
        return
    P, _, _ = product(C, D)
    Q, _, _ = product(pi0(C), pi0(D))
    assert pi0(P).same_shape(Q)


@SET
@given(small_cat(1), small_cat(1), small_cat(1), st.data())
def test_D_preserves_hpullbacks(A, C, B, data):
    if sum(A.sizes()) + sum(B.sizes()) + sum(C.sizes()) > 16:
        return
    F = data.draw(st.sampled_from(enumerate_morphisms(A, B)))
    G = data.draw(st.sampled_from(enumerate_morphisms(C, B)))
    lhs = discretize(h_pullback(F, G).apex)
    rhs = h_pullback(discretize(F), discretize(G)).apex
    assert iso_search(lhs, rhs) is not None


@SET
@given(st.sampled_from([fixtures.delooping(G, 1, 2) for G in GROUPS]
                       + [fixtures.delooping(G, 2) for G in ABELIAN[:2]]
                       + [fixtures.delooping(fixtures.cyclic(2), 3)]))
def test_pi0_pi1_commute(C):
    assert pi0(pi1(C)) == pi1(pi0(C))


@SET
@given(small_cat())
def test_groupoid_conditions_agree(C):
    assert is_ngroupoid(C).ok == kv_condition(C).ok


# exactness


@SET
@given(group_triple())
def test_pi0_preserves_exactness(t):
    if t is None:
        return
    F, phi, G = t
    if not is_exact(F, phi, G).exact:
        return
    assert is_exact(pi0(F), pi0(phi), pi0(G)).exact


@SET
@given(group_triple())
def test_omega_exactness_follows_faithfulness_at_point(t):
    # Omega keeps exactness exactly when the comparison is faithful on the loops at the point
    if t is None:
        return
    F, phi, G = t
    D = phi.D
    if phi.comps[0][phi.C.point] != D.ident[0][D.point]:
        return
    e = is_exact(F, phi, G)
    if not e.exact:
        return
    r = is_exact(omega(F), omega(phi), omega(G), orientation="future")
    assert r.orientation == "future"
    assert omega(phi).dom == compose0_functors(omega(F), omega(G))
    A = F.dom
    faithful = classify(hom_map(e.comparison, A.point, A.point)).faithful
    assert r.exact == faithful


@SET
@given(small_cat(1), small_cat(1), st.data())
def test_pi0_preserves_h_surjectivity(C, D, data):
    if not (is_ngroupoid(C).ok and is_ngroupoid(D).ok):
        return
    F = data.draw(st.sampled_from(enumerate_morphisms(C, D)))
    if classify(F).h_surjective:
        assert classify(pi0(F)).h_surjective
