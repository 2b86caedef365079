"""pi_0, the discretizer D, the unit eta, path spaces, Omega, pi_1 and the comparison S.

pi_0 quotients the top cells of an n-groupoid by connectivity and keeps the
least id of every class as its name.  D adds a dimension of formal identities,
named like the cells they sit on, so ``pi0(discretize(S))`` is literally ``S``.

pi_1 is contravariant on 2-morphisms: ``pi1(a)`` for ``a: F => G`` runs
``pi1(G) => pi1(F)``.  Omega on 2-morphisms follows the same direction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import NCat, NotComposable, Report, terminal, hom
from .fixtures import add_top_identities
from .limits import HPullback, h_pullback, mediate, mediate2
from .morphisms import (Morphism, Transf2, Transf3, compose0_functors, validate_morphism,
                        whisker_left, whisker_right)


class NotAGroupoid(ValueError):
    pass


def _require_groupoid(C: NCat, what="pi0"):
    ok = C._cache.get("isgpd")
    if ok is None:
        from .exactness import is_ngroupoid
        ok = C._cache["isgpd"] = is_ngroupoid(C).ok
    if not ok:
        raise NotAGroupoid(f"{what} needs an n-groupoid")


# ---------------------------------------------------------------------------
# pi_0


def _classes(C: NCat):
    """Union-find over (n-1)-cells joined by n-cells; returns member -> least member."""
    n = C.n
    parent = {c: c for c in C.cells[n - 1]}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in C.cells[n]:
        a, b = find(C.src[n][c]), find(C.tgt[n][c])
        if a != b:
            if b < a:
                a, b = b, a
            parent[b] = a
    return {c: find(c) for c in C.cells[n - 1]}


def _pi0_cat(C: NCat):
    hit = C._cache.get("pi0")
    if hit is not None:
        return hit
    if C.n == 0:
        raise ValueError("pi0 of a 0-category")
    _require_groupoid(C)
    n = C.n
    cls = _classes(C)
    reps = sorted(set(cls.values()))
    top = n - 1
    cells = [list(C.cells[k]) for k in range(top)] + [reps]
    src = [dict(C.src[k]) for k in range(top)] + [{r: C.src[top][r] for r in reps} if top else {}]
    tgt = [dict(C.tgt[k]) for k in range(top)] + [{r: C.tgt[top][r] for r in reps} if top else {}]
    ident = [dict(C.ident[k]) for k in range(top - 1)]
    if top:
        ident.append({c: cls[C.ident[top - 1][c]] for c in C.cells[top - 1]})
    ident.append({})
    comp = {}
    for k in range(1, top + 1):
        for m in range(k):
            if k < top:
                comp[(m, k)] = dict(C.comp[(m, k)])
            else:
                tab = C.comp[(m, k)]
                comp[(m, k)] = {(a, b): cls[tab[(a, b)]] for (a, b) in tab if a in cls and cls[a] == a
                                and cls[b] == b}
    point = C.point
    if point is not None and top == 0:
        point = cls[point]
    P = NCat(top, cells, src, tgt, ident, comp, point)
    P._cache["isgpd"] = True
    hit = C._cache["pi0"] = (P, cls)
    return hit


def pi0(x):
    """pi_0 of an n-groupoid, a morphism of n-groupoids or a 2-morphism between them."""
    if isinstance(x, NCat):
        return _pi0_cat(x)[0]
    if isinstance(x, Transf2):
        F, G = x.dom, x.cod
        C, D = x.C, x.D
        PF, PG = pi0(F), pi0(G)
        _, clsD = _pi0_cat(D)
        n = C.n
        comps = []
        for k in range(n - 1):
            if k == n - 2:
                comps.append({c: clsD[x.comps[k][c]] for c in C.cells[k]})
            else:
                comps.append(dict(x.comps[k]))
        return Transf2(PF, PG, comps)
    if isinstance(x, Morphism):
        key = "_pi0"
        hit = x.__dict__.get(key)
        if hit is not None:
            return hit
        PC, clsC = _pi0_cat(x.dom)
        PD, clsD = _pi0_cat(x.cod)
        n = x.dom.n
        maps = [dict(x.maps[k]) for k in range(n - 1)]
        maps.append({r: clsD[x.maps[n - 1][r]] for r in PC.cells[n - 1]})
        hit = x.__dict__[key] = Morphism(PC, PD, maps)
        return hit
    raise TypeError(f"pi0 of {type(x).__name__}")


def pi0_class(C: NCat, c):
    """The representative of the class of the (n-1)-cell c."""
    return _pi0_cat(C)[1][c]


# ---------------------------------------------------------------------------
# D


def discretize(x):
    """Add one dimension of identity cells (named like the cells below them)."""
    if isinstance(x, NCat):
        hit = x._cache.get("D")
        if hit is None:
            hit = x._cache["D"] = add_top_identities(x)
        return hit
    if isinstance(x, Transf2):
        C = x.C
        n = C.n
        lax = x.lax()
        top = {c: lax.phi((n, c), n)[1] for c in C.cells[n]}
        return Transf2(discretize(x.dom), discretize(x.cod), [dict(m) for m in x.comps] + [top])
    if isinstance(x, Morphism):
        hit = x.__dict__.get("_D")
        if hit is None:
            n = x.dom.n
            hit = x.__dict__["_D"] = Morphism(discretize(x.dom), discretize(x.cod),
                                               [dict(m) for m in x.maps] + [dict(x.maps[n])])
        return hit
    raise TypeError(f"discretize of {type(x).__name__}")


# ---------------------------------------------------------------------------
# eta and the triangle identities


def eta(C: NCat) -> Morphism:
    """eta_C: C -> D(pi0 C); identity below n-1, classes at n-1, source classes at n."""
    hit = C._cache.get("eta")
    if hit is not None:
        return hit
    P, cls = _pi0_cat(C)
    n = C.n
    maps = [{c: c for c in C.cells[k]} for k in range(n - 1)]
    maps.append({c: cls[c] for c in C.cells[n - 1]})
    maps.append({c: cls[C.src[n][c]] for c in C.cells[n]})
    hit = C._cache["eta"] = Morphism(C, discretize(P), maps)
    return hit


def eta_and_triangles(C: NCat, morphisms=(), transfs=()):
    """eta_C with a Report on: validity, eta_{D S} = id, pi0(eta_C) = id, pi0(D S) = S, naturality.

    ``morphisms`` are functors C -> C' and ``transfs`` 2-morphisms F => G: C -> C'
    for which the naturality squares are checked.
    """
    rep = Report()
    e = eta(C)
    r = validate_morphism(e)
    rep.extend(r, "eta:")
    S = pi0(C)
    DS = discretize(S)
    if pi0(DS) != S:
        rep.add("counit:pi0(D S) != S", (), "")
    eDS = eta(DS)
    if eDS != Morphism.identity(DS):
        bad = next(((k, c) for k in range(DS.n + 1) for c in DS.cells[k] if eDS.maps[k][c] != c), ())
        rep.add("triangle:eta_DS", (bad,), "eta at D(S) is not the identity")
    pe = pi0(e)
    if pe.maps != Morphism.identity(S).maps:
        bad = next(((k, c) for k in range(S.n + 1) for c in S.cells[k] if pe.maps[k][c] != c), ())
        rep.add("triangle:pi0_eta", (bad,), "pi0(eta) is not the identity")
    for F in morphisms:
        lhs = compose0_functors(F, eta(F.cod))
        rhs = compose0_functors(e, discretize(pi0(F)))
        if lhs.maps != rhs.maps:
            rep.add("naturality:functor", (), repr(F))
    for a in transfs:
        lhs = whisker_right(a, eta(a.D))
        rhs = whisker_left(e, discretize(pi0(a)))
        if lhs.comps != rhs.comps:
            rep.add("naturality:2-morphism", (), repr(a))
    return e, rep


# ---------------------------------------------------------------------------
# path spaces and Omega


@dataclass
class LoopSpace:
    C: NCat
    c0: str
    c1: str
    pb: HPullback
    extra: dict = field(default_factory=dict)

    @property
    def apex(self):
        return self.pb.apex

    @property
    def is_loop(self):
        return self.c0 == self.c1 == self.C.point

    @property
    def unit(self):
        return self.pb.apex.point if self.is_loop else None

    def tensor(self, k, x, y):
        """x (x) y on k-cells: the b-parts are 0-composed in C."""
        pb, C = self.pb, self.C
        A = pb.apex
        bx, by = pb.parts[k][x][1], pb.parts[k][y][1]
        b = C.cmp(0, (k + 1, bx), (k + 1, by))[1] if k < C.n else None
        U = V = None
        if k:
            U = self.tensor(k - 1, A.src[k][x], A.src[k][y])
            V = self.tensor(k - 1, A.tgt[k][x], A.tgt[k][y])
        r = pb.lookup(k, "*", b, "*", U, V)
        if r is None:
            raise NotComposable(f"{x} (x) {y} has no {k}-cell in the loop space")
        return r


def _obj(c0):
    return c0[1] if isinstance(c0, tuple) else c0


def path_space(C: NCat, c0, c1) -> LoopSpace:
    c0, c1 = _obj(c0), _obj(c1)
    for c in (c0, c1):
        if c not in C._cellset(0):
            raise ValueError(f"{c!r} is not an object")
    key = ("path", c0, c1)
    hit = C._cache.get(key)
    if hit is None:
        T = terminal(C.n)
        pb = h_pullback(Morphism.constant(T, C, c0), Morphism.constant(T, C, c1))
        hit = C._cache[key] = LoopSpace(C, c0, c1, pb)
    return hit


def _bang(X: NCat) -> Morphism:
    T = terminal(X.n)
    return Morphism(X, T, [{c: "*" for c in cs} for cs in X.cells])


def _pointed(C, what):
    if C.point is None:
        raise ValueError(f"{what} needs a pointed input")


def omega(x):
    """Omega on pointed n-categories, pointed morphisms and pointed 2-morphisms (reversed)."""
    if isinstance(x, NCat):
        _pointed(x, "omega")
        return path_space(x, x.point, x.point).apex
    if isinstance(x, Transf2):
        return _omega2(x)
    if isinstance(x, Morphism):
        hit = x.__dict__.get("_omega")
        if hit is not None:
            return hit
        if not x.is_pointed():
            raise ValueError("omega needs a pointed morphism")
        C, D = x.dom, x.cod
        LC = path_space(C, C.point, C.point)
        LD = path_space(D, D.point, D.point)
        b = _bang(LC.apex)
        hit = x.__dict__["_omega"] = mediate(LD.pb, b, b, whisker_right(LC.pb.eps, x))
        return hit
    raise TypeError(f"omega of {type(x).__name__}")


def _omega2(a: Transf2) -> Transf2:
    F, G = a.dom, a.cod
    C, D = a.C, a.D
    if not (F.is_pointed() and G.is_pointed()):
        raise ValueError("omega needs pointed functors")
    if C.n and a.comps[0][C.point] != D.ident[0][D.point]:
        raise ValueError("omega needs a pointed 2-morphism (component at the point must be an identity)")
    _require_groupoid(C, "omega on 2-morphisms")
    _require_groupoid(D, "omega on 2-morphisms")
    LC = path_space(C, C.point, C.point)
    LD = path_space(D, D.point, D.point)
    OC = LC.apex
    epsC = LC.pb.eps
    w, w2 = whisker_right(epsC, G), whisker_right(epsC, F)
    n = C.n
    sig = [{x: a.comps[k + 1][epsC.comps[k][x]] for x in OC.cells[k]} for k in range(n - 1)]
    Sigma = Transf3(w, w2, sig)
    idb = Transf2.identity(_bang(OC))
    lam = mediate2(LD.pb, idb, idb, Sigma, w, w2, L1=omega(G), L2=omega(F))
    return lam


# ---------------------------------------------------------------------------
# pi_1


def pi1(x):
    """pi_1 = hom at the point, pointed at the identity; reversed on 2-morphisms."""
    if isinstance(x, NCat):
        _pointed(x, "pi1")
        hit = x._cache.get("pi1")
        if hit is None:
            if x.n == 0:
                raise ValueError("pi1 of a 0-category")
            H = hom(x, x.point, x.point)
            hit = x._cache["pi1"] = H.with_point(x.ident[0][x.point])
        return hit
    if isinstance(x, Transf2):
        F, G = x.dom, x.cod
        H = pi1(x.C)
        comps = [{c: x.comps[k + 1][c] for c in H.cells[k]} for k in range(H.n)]
        return Transf2(pi1(G), pi1(F), comps)
    if isinstance(x, Morphism):
        hit = x.__dict__.get("_pi1")
        if hit is None:
            if not x.is_pointed():
                raise ValueError("pi1 needs a pointed morphism")
            H, K = pi1(x.dom), pi1(x.cod)
            hit = x.__dict__["_pi1"] = Morphism(H, K, [{c: x.maps[k + 1][c] for c in H.cells[k]}
                                                       for k in range(H.n + 1)])
        return hit
    raise TypeError(f"pi1 of {type(x).__name__}")


# ---------------------------------------------------------------------------
# the comparison S


@dataclass
class ComparisonS:
    morphism: Morphism
    loop: LoopSpace
    report: Report

    @property
    def ok(self):
        return self.report.ok


def comparison_S(C: NCat, c0, c1) -> ComparisonS:
    """D(hom(C, c0, c1)) -> P_{c0,c1}(C), c |-> (*, c, *)."""
    c0, c1 = _obj(c0), _obj(c1)
    key = ("S", c0, c1)
    hit = C._cache.get(key)
    if hit is not None:
        return hit
    L = path_space(C, c0, c1)
    if c0 == c1 == C.point:
        H = pi1(C)
    else:
        H = hom(C, c0, c1)
    DH = discretize(H)
    pb = L.pb
    n = C.n
    maps = [dict() for _ in range(n + 1)]
    rep = Report()
    for k in range(n + 1):
        for c in DH.cells[k]:
            U = maps[k - 1].get(DH.src[k][c]) if k else None
            V = maps[k - 1].get(DH.tgt[k][c]) if k else None
            b = c if k < n else None
            r = pb.lookup(k, "*", b, "*", U, V)
            if r is None:
                rep.add("S:missing", ((k, c),), "no matching cell in the path space")
            else:
                maps[k][c] = r
    S = Morphism(DH, L.apex, maps)
    if rep.ok:
        rep.extend(validate_morphism(S), "S:")
        for k in range(n + 1):
            img = set(maps[k].values())
            if len(img) != len(maps[k]) or len(img) != L.apex.size(k):
                rep.add("S:not-bijective", ((k, None),), f"{len(maps[k])} cells onto {len(img)} of {L.apex.size(k)}")
    hit = C._cache[key] = ComparisonS(S, L, rep)
    return hit


def S_naturality(F: Morphism, c0=None, c1=None) -> Report:
    """D(F_1) . S_D = S_C . P(F) on every cell (for pointed F at the point by default)."""
    C, D = F.dom, F.cod
    c0 = _obj(c0) if c0 is not None else C.point
    c1 = _obj(c1) if c1 is not None else C.point
    SC = comparison_S(C, c0, c1).morphism
    SD = comparison_S(D, F.maps[0][c0], F.maps[0][c1]).morphism
    rep = Report()
    if c0 == c1 == C.point and F.is_pointed():
        F1 = pi1(F)
        PF = omega(F)
    else:
        H = hom(C, c0, c1)
        HD = hom(D, F.maps[0][c0], F.maps[0][c1])
        F1 = Morphism(H, HD, [{c: F.maps[k + 1][c] for c in H.cells[k]} for k in range(H.n + 1)])
        LC, LD = path_space(C, c0, c1), path_space(D, F.maps[0][c0], F.maps[0][c1])
        b = _bang(LC.apex)
        PF = mediate(LD.pb, b, b, whisker_right(LC.pb.eps, F))
    lhs = compose0_functors(discretize(F1), SD)
    rhs = compose0_functors(SC, PF)
    for k in range(C.n + 1):
        for c in sorted(lhs.maps[k]):
            if lhs.maps[k][c] != rhs.maps[k][c]:
                rep.add("S:naturality", ((k, c),), f"{lhs.maps[k][c]} != {rhs.maps[k][c]}")
    return rep


def transport_pi0_omega(C: NCat) -> Morphism:
    """pi0(S): pi1(C) -> pi0(Omega C), the bridge used to compare pi1 with pi0 Omega."""
    S = comparison_S(C, C.point, C.point).morphism
    return pi0(S)


def pi1_vs_pi0_omega(C: NCat) -> Report:
    """pi0(Omega C) transported back along pi0(S) equals pi1(C) cell-for-cell."""
    rep = Report()
    H = pi1(C)
    T = transport_pi0_omega(C)
    if not T.dom.same_shape(H) or T.dom.point != H.point:
        rep.add("bridge:domain", (), "pi0(D(pi1 C)) differs from pi1 C")
        return rep
    OC = pi0(omega(C))
    inv = [{v: c for c, v in m.items()} for m in T.maps]
    for k in range(OC.n + 1):
        if len(inv[k]) != OC.size(k) or set(inv[k]) != set(OC.cells[k]):
            rep.add("bridge:not-bijective", ((k, None),), "")
            return rep
    # transport every piece of structure of pi0(Omega C) along the inverse bijection
    for k in range(1, OC.n + 1):
        for c in OC.cells[k]:
            d = inv[k][c]
            if inv[k - 1][OC.src[k][c]] != H.src[k][d] or inv[k - 1][OC.tgt[k][c]] != H.tgt[k][d]:
                rep.add("bridge:boundary", ((k, c),), "")
    for k in range(OC.n):
        for c in OC.cells[k]:
            if inv[k + 1][OC.ident[k][c]] != H.ident[k][inv[k][c]]:
                rep.add("bridge:identity", ((k, c),), "")
    for (m, k), tab in OC.comp.items():
        htab = H.comp[(m, k)]
        if len(tab) != len(htab):
            rep.add("bridge:composition-domain", ((k, None),), f"*{m}")
        for (a, b), r in tab.items():
            if htab.get((inv[k][a], inv[k][b])) != inv[k][r]:
                rep.add("bridge:composition", ((k, a), (k, b)), f"*{m}")
    if OC.point is not None and inv[0][OC.point] != H.point:
        rep.add("bridge:point", (), "")
    return rep


# ---------------------------------------------------------------------------
# loop monoidal structure and Eckmann-Hilton


def loop_monoid_check(C: NCat) -> Report:
    """(x) on Omega C is associative, unital, with weak inverses; on Omega^2 the two products agree and commute."""
    _pointed(C, "loop_monoid_check")
    _require_groupoid(C, "loop_monoid_check")
    rep = Report()
    L = path_space(C, C.point, C.point)
    O = L.apex
    objs = list(O.cells[0])
    unit = L.unit
    try:
        table = {(x, y): L.tensor(0, x, y) for x in objs for y in objs}
    except NotComposable as err:
        rep.add("monoid:closure", (), str(err))
        return rep
    for x in objs:
        if table[(unit, x)] != x or table[(x, unit)] != x:
            rep.add("monoid:unit", ((0, x),), "")
        for y in objs:
            for z in objs:
                if table[(table[(x, y)], z)] != table[(x, table[(y, z)])]:
                    rep.add("monoid:associativity", ((0, x), (0, y), (0, z)), "")

    def connected(u, v):
        return u == v or (O.n >= 1 and bool(O.between(1, u, v)))

    for x in objs:
        if not any(connected(table[(x, y)], unit) and connected(table[(y, x)], unit) for y in objs):
            rep.add("monoid:inverse", ((0, x),), "no weak inverse")
    rep.info["omega_elements"] = objs
    rep.info["omega_table"] = table
    if C.n < 2:
        rep.info["omega2"] = "skipped: n < 2"
        return rep
    # Omega^2: 1-cells of Omega C from the unit to itself
    loops = sorted(O.between(1, unit, unit))
    op1, op2 = {}, {}
    for a in loops:
        for b in loops:
            op1[(a, b)] = O.cmp(0, (1, a), (1, b))[1]
            op2[(a, b)] = L.tensor(1, a, b)
    for a in loops:
        for b in loops:
            if op1[(a, b)] != op2[(a, b)]:
                rep.add("eckmann-hilton:coincide", ((1, a), (1, b)), f"{op1[(a, b)]} vs {op2[(a, b)]}")
            if op1[(a, b)] != op1[(b, a)]:
                rep.add("eckmann-hilton:commute", ((1, a), (1, b)), "")
    # the same statement read on the 2-cells of C
    e = C.ident[0][C.point]
    cells = sorted(C.between(2, e, e))
    for a in cells:
        for b in cells:
            h = C.cmp(0, (2, a), (2, b))
            v = C.cmp(1, (2, a), (2, b))
            if h != v or h != C.cmp(1, (2, b), (2, a)):
                rep.add("eckmann-hilton:C", ((2, a), (2, b)), "")
    rep.info["omega2_elements"] = loops
    rep.info["omega2_table"] = op1
    return rep


__all__ = ["NotAGroupoid", "pi0", "pi0_class", "discretize", "eta", "eta_and_triangles", "LoopSpace",
           "path_space", "omega", "pi1", "ComparisonS", "comparison_S", "S_naturality",
           "transport_pi0_omega", "pi1_vs_pi0_omega", "loop_monoid_check"]
