"""Groupoid predicates, weak inverses, exact triples, connecting data and the Ziqqurath tower.

Exactness of ``(F, phi, G)`` is decided by building the h-kernel of ``G``,
mediating the cone ``(!, F, phi)`` into it and asking whether the comparison is
h-surjective.  A triple whose 2-cell points *into* the zero morphism (as
produced by pi_1 and Omega, which reverse 2-cells) is read against the future
kernel ``h_pullback(G, [*])`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import NCat, NotComposable, Report, terminal, hom
from .functors import (NotAGroupoid, comparison_S, omega, path_space, pi0, pi1, _bang)
from .limits import HPullback, MediationError, h_pullback, mediate, mediate2
from .morphisms import (Morphism, Transf2, Transf3, compose0_functors, star_compose,
                        validate_morphism, whisker_left, whisker_right, _same)


# ---------------------------------------------------------------------------
# equivalence cells, classify


def _rel(C: NCat, x, y):
    """x and y are k-cells joined by a (k+1)-cell, or equal when k = n."""
    k = x[0]
    if x == y:
        return True
    if k >= C.n:
        return False
    return bool(C.between(k + 1, x[1], y[1]))


def is_equivalence_cell(C: NCat, x) -> bool:
    """Raw weak invertibility: some y with x y and y x equivalent to identities."""
    memo = C._cache.setdefault("eqcell", {})
    if x in memo:
        return memo[x]
    memo[x] = False         # guards against cycles during the search
    k, c = x
    u, v = C.src[k][c], C.tgt[k][c]
    eu, ev = C.e((k - 1, u)), C.e((k - 1, v))

    def equiv(p, q):
        if p == q:
            return True
        if k >= C.n:
            return False
        return any(is_equivalence_cell(C, (k + 1, f)) for f in C.between(k + 1, p[1], q[1]))

    ok = False
    for y in C.between(k, v, u):
        if equiv(C.cmp(k - 1, x, (k, y)), eu) and equiv(C.cmp(k - 1, (k, y), x), ev):
            ok = True
            break
    memo[x] = ok
    return ok


@dataclass
class Flags:
    h_surjective: bool
    faithful: bool
    equivalence: bool
    witness: dict = field(default_factory=dict)

    def as_dict(self):
        return {"h_surjective": self.h_surjective, "faithful": self.faithful,
                "equivalence": self.equivalence, "witness": self.witness}


def hom_map(F: Morphism, c, c2) -> Morphism:
    """F_1^{c,c2}: hom(C, c, c2) -> hom(D, F c, F c2)."""
    H = hom(F.dom, c, c2)
    K = hom(F.cod, F.maps[0][c], F.maps[0][c2])
    return Morphism(H, K, [{x: F.maps[k + 1][x] for x in H.cells[k]} for k in range(H.n + 1)])


def _hsurj(F: Morphism, groupoid: bool, path=()):
    C, D = F.dom, F.cod
    img = set(F.maps[0].values())
    if D.n == 0:
        for d in D.cells[0]:
            if d not in img:
                return {"object": d, "path": path}
        return None
    for d in D.cells[0]:
        if d in img:
            continue
        if groupoid:
            hit = any(D.between(1, d, t) for t in img)
        else:
            hit = any(is_equivalence_cell(D, (1, f)) for t in img for f in D.between(1, d, t))
        if not hit:
            return {"object": d, "path": path}
    for c in C.cells[0]:
        for c2 in C.cells[0]:
            w = _hsurj(hom_map(F, c, c2), groupoid, path + ((c, c2),))
            if w is not None:
                return w
    return None


def _faithful(F: Morphism, path=()):
    C, D = F.dom, F.cod
    if C.n == 0:
        seen = {}
        for c in C.cells[0]:
            d = F.maps[0][c]
            if d in seen:
                return {"cells": (seen[d], c), "path": path}
            seen[d] = c
        return None
    for c in C.cells[0]:
        for c2 in C.cells[0]:
            w = _faithful(hom_map(F, c, c2), path + ((c, c2),))
            if w is not None:
                return w
    return None


def _hom_faithful(F: Morphism):
    # faithful: every F_1^{c,c'} is faithful; at the bottom, injective
    C = F.dom
    if C.n == 0:
        return None
    for c in C.cells[0]:
        for c2 in C.cells[0]:
            w = _faithful(hom_map(F, c, c2), ((c, c2),))
            if w is not None:
                return w
    return None


def classify(F: Morphism, groupoid=None) -> Flags:
    """h-surjectivity, faithfulness and equivalence of a morphism, evaluated recursively on homs."""
    if groupoid is None:
        groupoid = _is_gpd(F.cod)
    if F.dom.n == 0:
        ws, wf = _hsurj(F, True), _faithful(F)
    else:
        ws, wf = _hsurj(F, groupoid), _hom_faithful(F)
    wit = {}
    if ws is not None:
        wit["h_surjective"] = ws
    if wf is not None:
        wit["faithful"] = wf
    hs, fa = ws is None, wf is None
    return Flags(hs, fa, hs and fa, wit)


# ---------------------------------------------------------------------------
# groupoid conditions


def _is_gpd(C: NCat) -> bool:
    ok = C._cache.get("isgpd")
    if ok is None:
        ok = C._cache["isgpd"] = is_ngroupoid(C).ok
    return ok


def _pre(C, c, y, z):
    """hom(y, z) -> hom(x, z), u |-> c *0 u for c: x -> y."""
    H = hom(C, y, z)
    x = C.src[1][c]
    K = hom(C, x, z)
    maps = [{u: C.cmp(0, (1, c), (k + 1, u))[1] for u in H.cells[k]} for k in range(H.n + 1)]
    return Morphism(H, K, maps)


def _post(C, c, z, x):
    """hom(z, x) -> hom(z, y), u |-> u *0 c for c: x -> y."""
    H = hom(C, z, x)
    y = C.tgt[1][c]
    K = hom(C, z, y)
    maps = [{u: C.cmp(0, (k + 1, u), (1, c))[1] for u in H.cells[k]} for k in range(H.n + 1)]
    return Morphism(H, K, maps)


def is_ngroupoid(C: NCat) -> Report:
    """Homs are (n-1)-groupoids and composing with any 1-cell on either side is an equivalence."""
    rep = Report()
    if C.n == 0:
        C._cache["isgpd"] = True
        return rep
    objs = C.cells[0]
    for x in objs:
        for y in objs:
            H = hom(C, x, y)
            if not _is_gpd(H):
                sub = is_ngroupoid(H)
                rep.add("groupoid:hom", ((0, x), (0, y)), f"hom is not a groupoid: {sub.first()}")
    if not rep.ok:
        C._cache["isgpd"] = False
        return rep
    for c in C.cells[1]:
        x, y = C.src[1][c], C.tgt[1][c]
        for z in objs:
            if not classify(_pre(C, c, y, z), groupoid=True).equivalence:
                rep.add("groupoid:1-cell", ((1, c),), f"c *0 - : hom({y},{z}) -> hom({x},{z}) is not an equivalence")
                break
            if not classify(_post(C, c, z, x), groupoid=True).equivalence:
                rep.add("groupoid:1-cell", ((1, c),), f"- *0 c : hom({z},{x}) -> hom({z},{y}) is not an equivalence")
                break
    C._cache["isgpd"] = rep.ok
    return rep


def kv_condition(C: NCat) -> Report:
    """Exhaustive check of the solvability axioms GR'_{i,k} and GR''_{i,k} for i < k <= n."""
    rep = Report()
    n = C.n

    def solved(p, b):
        return _rel(C, p, b)

    for k in range(1, n + 1):
        # GR'_{k-1,k} and GR''_{k-1,k}
        for a in C.cells[k]:
            for b in C.cells[k]:
                A, B = (k, a), (k, b)
                if C.tgt[k][a] == C.tgt[k][b]:
                    if not any(solved(C.cmp(k - 1, (k, x), A), B)
                               for x in C.between(k, C.src[k][b], C.src[k][a])):
                        rep.add(f"GR'_{k-1},{k}", (A, B), "no x with x*a ~ b")
                if C.src[k][a] == C.src[k][b]:
                    if not any(solved(C.cmp(k - 1, A, (k, x)), B)
                               for x in C.between(k, C.tgt[k][a], C.tgt[k][b])):
                        rep.add(f"GR''_{k-1},{k}", (A, B), "no x with a*x ~ b")
        # GR'_{i,k} and GR''_{i,k}, i < k-1
        for i in range(k - 1):
            byt = C.by_boundary(k - 1, i, 1)
            bys = C.by_boundary(k - 1, i, 0)
            for a in C.cells[i + 1]:
                A = (i + 1, a)
                for side, idx, anchor in ((0, byt, C.s(A, i)[1]), (1, bys, C.t(A, i)[1])):
                    us = idx.get(anchor, [])
                    comp = {}
                    for u in us:
                        U = (k - 1, u)
                        r = C.cmp(i, U, A) if side == 0 else C.cmp(i, A, U)
                        comp.setdefault(r[1], []).append(u)
                    for u in us:
                        U = (k - 1, u)
                        su = C.cmp(i, U, A) if side == 0 else C.cmp(i, A, U)
                        for b in C.by_boundary(k, k - 1, 0).get(su[1], []):
                            for v in comp.get(C.tgt[k][b], []):
                                def prod(x):
                                    X = (k, x)
                                    return C.cmp(i, X, A) if side == 0 else C.cmp(i, A, X)
                                if not any(solved(prod(x), (k, b)) for x in C.between(k, u, v)):
                                    name = f"GR'_{i},{k}" if side == 0 else f"GR''_{i},{k}"
                                    rep.add(name, (A, (k, b), (k - 1, u), (k - 1, v)), "no solution x")
    return rep


# ---------------------------------------------------------------------------
# weak inverses


@dataclass
class InverseSystem:
    entries: dict
    report: Report


def weak_inverses(C: NCat) -> InverseSystem:
    """For every k-cell c: an inverse c*, unit i, counit e, and the adjointified unit i'.

    Triangle composites are checked to be joined to identities by a (k+2)-cell
    (or equal when k+1 = n).
    """
    rep = Report()
    out = {}
    n = C.n
    for k in range(1, n + 1):
        for c in C.cells[k]:
            X = (k, c)
            u, v = C.src[k][c], C.tgt[k][c]
            eu, ev = C.e((k - 1, u)), C.e((k - 1, v))
            if k == n:
                inv = next((y for y in C.between(k, v, u)
                            if C.cmp(k - 1, X, (k, y)) == eu and C.cmp(k - 1, (k, y), X) == ev), None)
                if inv is None:
                    rep.add("inverse:search", (X,), "no strict inverse for a top cell")
                else:
                    out[X] = {"inverse": inv, "unit": None, "counit": None, "adjoint_unit": None}
                continue
            found = None
            for y in C.between(k, v, u):
                Y = (k, y)
                cy, yc = C.cmp(k - 1, X, Y), C.cmp(k - 1, Y, X)
                for i in C.between(k + 1, eu[1], cy[1]):
                    ist = _inverse_of(C, (k + 1, i))
                    if ist is None:
                        continue
                    for e in C.between(k + 1, yc[1], ev[1]):
                        est = _inverse_of(C, (k + 1, e))
                        if est is None:
                            continue
                        found = (Y, (k + 1, i), ist, (k + 1, e), est)
                        break
                    if found:
                        break
                if found:
                    break
            if found is None:
                rep.add("inverse:search", (X,), "no weak inverse with invertible unit and counit")
                continue
            Y, I, Ist, E, Est = found
            m = k - 1
            mid = C.cmp(m, C.cmp(m, X, Est), Y)          # c e* c* : c c* => c c* c c*
            last = C.cmp(m, C.cmp(m, Ist, X), Y)         # i* c c* : c c* c c* => c c*
            Iad = C.cmp(k, C.cmp(k, I, mid), last)
            t1 = C.cmp(k, C.cmp(m, Iad, X), C.cmp(m, X, E))      # c => c c* c => c
            t2 = C.cmp(k, C.cmp(m, Y, Iad), C.cmp(m, E, Y))      # c* => c* c c* => c*
            if not _rel(C, t1, C.e(X)):
                rep.add("adjoint:triangle-left", (X, t1), "not joined to the identity")
            if not _rel(C, t2, C.e(Y)):
                rep.add("adjoint:triangle-right", (X, t2), "not joined to the identity")
            out[X] = {"inverse": Y[1], "unit": I[1], "counit": E[1], "adjoint_unit": Iad[1],
                      "unit_inverse": Ist[1], "counit_inverse": Est[1]}
    return InverseSystem(out, rep)


def _inverse_of(C, X):
    """A cell X* in the opposite direction with both composites joined to identities."""
    k, c = X
    u, v = C.src[k][c], C.tgt[k][c]
    eu, ev = C.e((k - 1, u)), C.e((k - 1, v))
    for y in C.between(k, v, u):
        Y = (k, y)
        if _rel(C, C.cmp(k - 1, X, Y), eu) and _rel(C, C.cmp(k - 1, Y, X), ev):
            return Y
    return None


# ---------------------------------------------------------------------------
# exactness


def past_fiber(F: Morphism, d=None) -> HPullback:
    """h_pullback([d], F), cached on F (d defaults to the base point)."""
    d = F.cod.point if d is None else d
    cache = F.__dict__.setdefault("_past", {})
    if d not in cache:
        T = terminal(F.dom.n)
        cache[d] = h_pullback(Morphism.constant(T, F.cod, d), F)
    return cache[d]


def future_fiber(F: Morphism, d=None) -> HPullback:
    """h_pullback(F, [d]), cached on F."""
    d = F.cod.point if d is None else d
    cache = F.__dict__.setdefault("_future", {})
    if d not in cache:
        T = terminal(F.dom.n)
        cache[d] = h_pullback(F, Morphism.constant(T, F.cod, d))
    return cache[d]


@dataclass
class ExactTriple:
    F: Morphism
    phi: Transf2
    G: Morphism
    comparison: Morphism
    kernel: HPullback
    orientation: str
    exact: bool
    witness: dict = field(default_factory=dict)

    @property
    def verdict(self):
        return "exact" if self.exact else "inexact"


class BoundaryMismatch(ValueError):
    pass


def is_exact(F: Morphism, phi: Transf2, G: Morphism, orientation=None) -> ExactTriple:
    """Decide exactness of (F, phi, G) against the past or future kernel of G.

    The kernel is chosen from the direction of phi. When F.G is itself zero both
    readings typecheck; the past kernel is used unless ``orientation`` says otherwise.
    """
    if orientation not in (None, "past", "future"):
        raise ValueError("orientation must be past or future")
    if not _same(F.cod, G.dom):
        raise BoundaryMismatch("cod(F) != dom(G)")
    A, C = F.dom, G.cod
    if A.point is None or C.point is None or F.cod.point is None:
        raise ValueError("is_exact needs pointed data")
    if not (F.is_pointed() and G.is_pointed()):
        raise ValueError("is_exact needs pointed morphisms")
    FG = compose0_functors(F, G)
    zero = Morphism.zero(A, C)
    past_ok = phi.dom.maps == zero.maps and phi.cod.maps == FG.maps
    future_ok = phi.cod.maps == zero.maps and phi.dom.maps == FG.maps
    if orientation == "future" and not future_ok or orientation == "past" and not past_ok:
        raise BoundaryMismatch(f"phi does not fit the {orientation} reading")
    if past_ok and orientation != "future":
        pb = past_fiber(G)
        L = mediate(pb, _bang(A), F, phi)
        orient = "past"
    elif future_ok:
        pb = future_fiber(G)
        L = mediate(pb, F, _bang(A), phi)
        orient = "future"
    else:
        raise BoundaryMismatch("phi must run between the zero morphism and F.G")
    fl = classify(L, groupoid=True)
    wit = fl.witness.get("h_surjective", {})
    return ExactTriple(F, phi, G, L, pb, orient, fl.h_surjective, wit)


# ---------------------------------------------------------------------------
# connecting data


@dataclass
class Connecting:
    nabla: Morphism
    sigma: Transf2
    kernel: HPullback
    PF: Morphism
    report: Report
    triples: list = field(default_factory=list)


def _path_map(F, b0, b1):
    """P(F): P_{b0,b1}(B) -> P_{F b0, F b1}(C)."""
    B, C = F.dom, F.cod
    if b0 == b1 == B.point and F.is_pointed():
        return omega(F)
    LB = path_space(B, b0, b1)
    LC = path_space(C, F.maps[0][b0], F.maps[0][b1])
    bang = _bang(LB.apex)
    return mediate(LC.pb, bang, bang, whisker_right(LB.pb.eps, F))


def connecting(F: Morphism, beta=None, beta2=None, check=True) -> Connecting:
    """nabla: P_{F b, F b'}(C) -> K and sigma: [(*, 1, b)] => P(F).nabla, K the past fiber of F at F b."""
    B, C = F.dom, F.cod
    beta = B.point if beta is None else (beta[1] if isinstance(beta, tuple) else beta)
    beta2 = B.point if beta2 is None else (beta2[1] if isinstance(beta2, tuple) else beta2)
    for b in (beta, beta2):
        if b not in B._cellset(0):
            raise ValueError(f"{b!r} is not an object")
    fb, fb2 = F.maps[0][beta], F.maps[0][beta2]
    K = past_fiber(F, fb)
    LC = path_space(C, fb, fb2)
    LB = path_space(B, beta, beta2)
    PC, PB = LC.apex, LB.apex
    nabla = mediate(K, _bang(PC), Morphism.constant(PC, B, beta2), LC.pb.eps)
    PF = _path_map(F, beta, beta2)
    epsB = LB.pb.eps
    w1 = Transf2.identity(Morphism.constant(PB, C, fb))
    L1 = mediate(K, _bang(PB), Morphism.constant(PB, B, beta), w1)
    L2 = compose0_functors(PF, nabla)
    w2 = whisker_right(epsB, F)
    Sigma = Transf3.identity(w2)
    sigma = mediate2(K, Transf2.identity(_bang(PB)), epsB, Sigma, w1, w2, L1=L1, L2=L2)
    rep = Report()
    if whisker_right(sigma, K.Q).comps != epsB.comps:
        rep.add("sigma:projection", (), "sigma . K != eps_B")
    st = star_compose(sigma, K.eps)
    if not st.is_identity():
        rep.add("sigma:star", (), "sigma * eps_K is not the identity modification")
    out = Connecting(nabla, sigma, K, PF, rep)
    if check and beta == beta2 == B.point and F.is_pointed():
        t1 = is_exact(nabla, Transf2.identity(compose0_functors(nabla, K.Q)), K.Q)
        t2 = is_exact(PF, sigma, nabla)
        out.triples = [t1, t2]
        if not t1.exact:
            rep.add("exact:(nabla, id, K)", (), str(t1.witness))
        if not t2.exact:
            rep.add("exact:(P(F), sigma, nabla)", (), str(t2.witness))
    return out


# ---------------------------------------------------------------------------
# fibration sequence


@dataclass
class FibrationSequence:
    names: list
    objects: list
    arrows: list
    phis: list
    triples: list
    report: Report


def fibration_sequence(F: Morphism) -> FibrationSequence:
    """Omega^2 B -> Omega^2 C -> Omega K -> Omega B -> Omega C -> K -> B -> C with its six triples."""
    if not F.is_pointed():
        raise ValueError("fibration_sequence needs a pointed morphism")
    B, C = F.dom, F.cod
    K = past_fiber(F)
    q, kappa = K.Q, K.eps
    con = connecting(F, check=False)
    nabla, sigma, OF = con.nabla, con.sigma, con.PF
    idq = Transf2.identity(compose0_functors(nabla, q))
    arrows = [omega(OF), omega(nabla), omega(q), OF, nabla, q, F]
    phis = [omega(sigma), omega(idq), omega(kappa), sigma, idq, kappa]
    objects = [omega(omega(B)), omega(omega(C)), omega(K.apex), omega(B), omega(C), K.apex, B, C]
    names = ["Omega2 B", "Omega2 C", "Omega K", "Omega B", "Omega C", "K", "B", "C"]
    rep = Report()
    rep.extend(con.report, "connecting:")
    for i, a in enumerate(arrows):
        if not (_same(a.dom, objects[i]) and _same(a.cod, objects[i + 1])):
            rep.add("sequence:boundary", (), f"arrow {i} does not run {names[i]} -> {names[i + 1]}")
    triples = []
    for i in range(len(phis)):
        # the first three 2-cells came through Omega and are reversed
        t = is_exact(arrows[i], phis[i], arrows[i + 1], "future" if i < 3 else "past")
        triples.append(t)
        if not t.exact:
            rep.add("sequence:inexact", (), f"at {names[i + 1]}: {t.witness}")
    return FibrationSequence(names, objects, arrows, phis, triples, rep)


# ---------------------------------------------------------------------------
# Ziqqurath


@dataclass
class Level:
    dim: int
    words: list
    terms: list
    arrows: list
    phis: list
    triples: list = field(default_factory=list)
    annotations: list = field(default_factory=list)

    @property
    def names(self):
        return [_word_name(w) for w in self.words]

    def sizes(self):
        return [t.size(0) for t in self.terms]


def _word_name(w):
    ops, base = w
    return "".join(f"{o} " for o in ops) + base


@dataclass
class Ziqqurath:
    n: int
    levels: list
    report: Report
    connecting: Connecting = None

    def level(self, d):
        return self.levels[self.n - d]

    @property
    def bottom(self):
        return self.levels[-1]

    def row_lengths(self):
        return [len(lv.terms) for lv in self.levels]


def _pointed_equal(X, Y):
    return X.same_shape(Y) and X.point == Y.point


def _monoid_annotation(Y: NCat, E: NCat, word):
    """Structure on E = pi1(Y) from the 0-composition of Y's loops at the point."""
    objs = E.cells[0]
    unit = E.point
    tab = {(x, y): Y.cmp(0, (1, x), (1, y))[1] for x in objs for y in objs}

    def conn(p, q):
        return p == q or (E.n >= 1 and bool(E.between(1, p, q)))

    assoc = all(tab[(tab[(x, y)], z)] == tab[(x, tab[(y, z)])] for x in objs for y in objs for z in objs)
    unital = all(tab[(unit, x)] == x and tab[(x, unit)] == x for x in objs)
    inv = all(any(conn(tab[(x, y)], unit) and conn(tab[(y, x)], unit) for y in objs) for x in objs)
    comm = all(conn(tab[(x, y)], tab[(y, x)]) for x in objs for y in objs)
    return {"word": _word_name(word), "monoidal": assoc and unital, "group_like": assoc and unital and inv,
            "commutative": assoc and unital and inv and comm, "order": len(objs)}


def _apply_word(base, ops):
    X = base
    for o in reversed(ops):
        X = pi1(X) if o == "pi1" else pi0(X)
    return X


def ziqqurath(F: Morphism, check=True) -> Ziqqurath:
    """The tower of exact sequences obtained from (K, kappa, F) by pi_1 / pi_0 with the (Delta, delta) gluing."""
    if not F.is_pointed():
        raise ValueError("ziqqurath needs a pointed morphism")
    B, C = F.dom, F.cod
    for X in (B, C):
        if not _is_gpd(X):
            raise NotAGroupoid("ziqqurath needs a morphism of n-groupoids")
    n = B.n
    rep = Report()
    Kpb = past_fiber(F)
    K, q, kappa = Kpb.apex, Kpb.Q, Kpb.eps
    bases = {"K": K, "B": B, "C": C}
    top = Level(n, [((), "K"), ((), "B"), ((), "C")], [K, B, C], [q, F], [kappa])
    levels = [top]
    con = None
    if n >= 1:
        con = connecting(F, check=False)
        rep.extend(con.report, "connecting:")
        SB = comparison_S(B, B.point, B.point).morphism
        SC = comparison_S(C, C.point, C.point).morphism
        Delta = compose0_functors(pi0(SC), pi0(con.nabla))
        delta = whisker_left(pi0(SB), pi0(con.sigma))
        idq = Transf2.identity(compose0_functors(con.nabla, q))
        phiD = whisker_left(pi0(SC), pi0(idq))
        words = [(("pi1",), b) for b in "KBC"] + [(("pi0",), b) for b in "KBC"]
        terms = [pi1(K), pi1(B), pi1(C), pi0(K), pi0(B), pi0(C)]
        arrows = [pi1(q), pi1(F), Delta, pi0(q), pi0(F)]
        phis = [pi1(kappa), delta, phiD, pi0(kappa)]
        if delta.cod.maps != compose0_functors(pi1(F), Delta).maps:
            rep.add("glue:delta", (), "pi0(S_B).pi0(sigma) does not land on pi1(F).Delta")
        levels.append(Level(n - 1, words, terms, arrows, phis))
    while levels[-1].dim >= 1:
        lv = levels[-1]
        L = len(lv.terms)
        terms = [pi1(t) for t in lv.terms] + [pi0(t) for t in lv.terms[-3:]]
        arrows = [pi1(a) for a in lv.arrows] + [pi0(lv.arrows[L - 4]), pi0(lv.arrows[L - 3]),
                                                 pi0(lv.arrows[L - 2])]
        phis = [pi1(p) for p in lv.phis] + [pi0(lv.phis[L - 5]), pi0(lv.phis[L - 4]), pi0(lv.phis[L - 3])]
        words = [(("pi1",) + w[0], w[1]) for w in lv.words] + [(("pi0",) + w[0], w[1]) for w in lv.words[-3:]]
        # pi0 pi1 = pi1 pi0 at the seam
        if not _pointed_equal(pi0(lv.terms[L - 4]), pi1(lv.terms[L - 1])):
            rep.add("glue:pi0pi1", (), f"pi0({_word_name(lv.words[L - 4])}) != pi1({_word_name(lv.words[L - 1])})")
        if pi0(lv.arrows[L - 5]) != pi1(lv.arrows[L - 2]):
            rep.add("glue:arrow", (), f"pi0 and pi1 images of the seam arrow differ at level {lv.dim - 1}")
        levels.append(Level(lv.dim - 1, words, terms, arrows, phis))
    for lv in levels:
        for i, a in enumerate(lv.arrows):
            if not (_same(a.dom, lv.terms[i]) and _same(a.cod, lv.terms[i + 1])):
                rep.add("level:boundary", (), f"level {lv.dim}, arrow {i}")
        for i, p in enumerate(lv.phis):
            r = validate_morphism(p)
            if not r.ok:
                rep.add("level:2-cell", (), f"level {lv.dim}, triple {i}: {r.first()}")
        if check:
            for i, p in enumerate(lv.phis):
                try:
                    t = is_exact(lv.arrows[i], p, lv.arrows[i + 1])
                except (BoundaryMismatch, MediationError, NotComposable) as err:
                    rep.add("level:triple", (), f"level {lv.dim}, triple {i}: {err}")
                    continue
                lv.triples.append(t)
                if not t.exact:
                    rep.add("level:inexact", (), f"level {lv.dim}, at {lv.names[i + 1]}: {t.witness}")
        for w, E in zip(lv.words, lv.terms):
            a = w[0].count("pi1")
            if a == 0:
                lv.annotations.append({"word": _word_name(w), "monoidal": False})
                continue
            ops = list(w[0])
            ops.remove("pi1")
            Y = _apply_word(bases[w[1]], ("pi1",) * (a - 1) + ("pi0",) * (len(ops) - a + 1))
            if not _pointed_equal(pi1(Y), E):
                rep.add("annotation:word", (), f"{_word_name(w)} is not pi1 of its reduced word")
            lv.annotations.append(_monoid_annotation(Y, E, w))
    return Ziqqurath(n, levels, rep, con)


__all__ = ["is_equivalence_cell", "Flags", "hom_map", "classify", "is_ngroupoid", "kv_condition",
           "InverseSystem", "weak_inverses", "past_fiber", "future_fiber", "ExactTriple",
           "BoundaryMismatch", "is_exact", "Connecting", "connecting", "FibrationSequence",
           "fibration_sequence", "Level", "Ziqqurath", "ziqqurath"]
