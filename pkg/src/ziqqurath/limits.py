"""Standard h-pullbacks, strict pullbacks, h-fibers and the two mediators.

For a cospan ``F: A -> B <- C :G`` the apex has

* k-cells (k < n): triples ``(a, b, c)`` with ``a`` a k-cell of A, ``c`` a k-cell
  of C and ``b`` a (k+1)-cell of B running from ``Phi_k`` to ``Psi_k``, the lax
  boundary composites built from the b-parts of the boundary cells;
* n-cells: pairs ``(a, c)`` for which ``Phi_n = Psi_n``.

The middle projection is the 2-cell ``eps: P.F => Q.G``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .core import NCat, NotComposable, terminal
from .morphisms import (Lax, Morphism, Transf2, compose0_functors, pair_bd, pair_dim,
                        vc, whisker_left, whisker_right, _same)


class MediationError(ValueError):
    def __init__(self, msg, witness=()):
        super().__init__(msg)
        self.witness = witness


@dataclass
class HPullback:
    apex: NCat
    P: Morphism
    Q: Morphism
    eps: Transf2
    F: Morphism
    G: Morphism
    parts: list
    index: list

    @property
    def proj_left(self):
        return self.P

    @property
    def proj_right(self):
        return self.Q

    def lookup(self, k, a, b, c, U, V):
        return self.index[k].get((a, b, c, U, V))

    def name_of(self, k, a, b, c, U, V):
        r = self.lookup(k, a, b, c, U, V)
        if r is None:
            raise MediationError(f"no {k}-cell ({a}|{b}|{c}) from {U} to {V} in the h-pullback",
                                 ((k, a), (k, c)))
        return r


def _name(parts):
    return "(" + "|".join(p for p in parts if p is not None) + ")"


def h_pullback(F: Morphism, G: Morphism) -> HPullback:
    if not _same(F.cod, G.cod):
        raise ValueError("codomain mismatch")
    A, C, B = F.dom, G.dom, F.cod
    n = A.n
    if C.n != n:
        raise ValueError("dimension mismatch")

    parts = [dict() for _ in range(n + 1)]      # id -> (a, b, c) or (a, None, c)
    src = [dict() for _ in range(n + 1)]
    tgt = [dict() for _ in range(n + 1)]
    index = [dict() for _ in range(n + 1)]      # (a, b, c, U, V) -> id

    def bd(z, i, side):
        k, c = z
        if isinstance(c, tuple):                # virtual cell ("?", a, c, U, V)
            y = (k - 1, c[3] if side == 0 else c[4])
        else:
            y = (k - 1, (src if side == 0 else tgt)[k][c])
        while y[0] > i:
            y = (y[0] - 1, (src if side == 0 else tgt)[y[0]][y[1]])
        return y

    def Fside(z):
        k, c = z
        return F((k, c[1] if isinstance(c, tuple) else parts[k][c][0]))

    def Gside(z):
        k, c = z
        return G((k, c[2] if isinstance(c, tuple) else parts[k][c][2]))

    def eps(z):
        k, c = z
        return (k + 1, parts[k][c][1])

    for k in range(n + 1):
        lax = Lax(B, bd, Fside, Gside, eps)
        found = []
        if k == 0 and n == 0:
            for a in A.cells[0]:
                for c in C.cells[0]:
                    if F.maps[0][a] == G.maps[0][c]:
                        found.append(((a, None, c), None, None))
        elif k == 0:
            for a in A.cells[0]:
                for c in C.cells[0]:
                    fa, gc = F.maps[0][a], G.maps[0][c]
                    for b in B.between(1, fa, gc):
                        found.append(((a, b, c), None, None))
        else:
            by_ac = defaultdict(list)
            for u, (pa, _, pc) in parts[k - 1].items():
                by_ac[(pa, pc)].append(u)
            for a in A.cells[k]:
                sa, ta = A.src[k][a], A.tgt[k][a]
                for c in C.cells[k]:
                    sc, tc = C.src[k][c], C.tgt[k][c]
                    for U in by_ac.get((sa, sc), ()):
                        for V in by_ac.get((ta, tc), ()):
                            if k >= 2 and (src[k - 1][U] != src[k - 1][V] or tgt[k - 1][U] != tgt[k - 1][V]):
                                continue
                            z = (k, ("?", a, c, U, V))
                            try:
                                ph, ps = lax.phi(z, k), lax.psi(z, k)
                            except NotComposable:
                                continue
                            if k < n:
                                for b in B.between(k + 1, ph[1], ps[1]):
                                    found.append(((a, b, c), U, V))
                            elif ph == ps:
                                found.append(((a, None, c), U, V))
        groups = defaultdict(list)
        for p, U, V in found:
            groups[_name(p)].append((p, U, V))
        for base, members in groups.items():
            members.sort(key=lambda m: (m[1] or "", m[2] or "", m[0][1] or ""))
            for i, (p, U, V) in enumerate(members):
                nm = base if len(members) == 1 else f"{base}#{i}"
                parts[k][nm] = p
                if k:
                    src[k][nm], tgt[k][nm] = U, V
                index[k][(p[0], p[1], p[2], U, V)] = nm

    cells = [sorted(parts[k]) for k in range(n + 1)]
    ident = [dict() for _ in range(n + 1)]
    comp = {(m, k): {} for k in range(1, n + 1) for m in range(k)}

    point = None
    if A.point is not None and C.point is not None and B.point is not None \
            and F.maps[0].get(A.point) == B.point and G.maps[0].get(C.point) == B.point:
        b0 = B.ident[0][B.point] if n else None
        point = index[0].get((A.point, b0, C.point, None, None))

    apex = NCat(n, cells, src, tgt, ident, comp, point)
    P = Morphism(apex, A, [{x: parts[k][x][0] for x in cells[k]} for k in range(n + 1)])
    Q = Morphism(apex, C, [{x: parts[k][x][2] for x in cells[k]} for k in range(n + 1)])
    eps_t = Transf2(compose0_functors(P, F), compose0_functors(Q, G),
                    [{x: parts[k][x][1] for x in cells[k]} for k in range(n)])
    pb = HPullback(apex, P, Q, eps_t, F, G, parts, index)

    # identities
    for k in range(n):
        for x in cells[k]:
            a, b, c = parts[k][x]
            ea, ec = A.ident[k][a], C.ident[k][c]
            eb = B.ident[k + 1][b] if k + 1 < n else None
            apex.ident[k][x] = pb.name_of(k + 1, ea, eb, ec, x, x)

    # compositions, by increasing dimension
    alax = Lax(B, apex.bd, lambda z: F(P(z)), lambda z: G(Q(z)), eps)
    pbd = pair_bd(apex.bd)
    comp = apex.comp
    for k in range(1, n + 1):
        for m in range(k):
            tab = comp[(m, k)]
            for X, Y in apex.composable_pairs(m, k):
                pX, pY = parts[k][X], parts[k][Y]
                a = A.comp[(m, k)][(pX[0], pY[0])]
                c = C.comp[(m, k)][(pX[2], pY[2])]
                if m == k - 1:
                    U, V = src[k][X], tgt[k][Y]
                else:
                    U = comp[(m, k - 1)][(src[k][X], src[k][Y])]
                    V = comp[(m, k - 1)][(tgt[k][X], tgt[k][Y])]
                b = None
                if k < n:
                    b = vc(B, m + 1,
                           lambda z: B.cmp(m, eps(z[0]), alax.psi(z[1], m)),
                           lambda z: B.cmp(m, alax.phi(z[0], m), eps(z[1])),
                           ((k, X), (k, Y)), pbd, pair_dim)[1]
                tab[(X, Y)] = pb.name_of(k, a, b, c, U, V)
    return pb


def strict_pullback(F: Morphism, G: Morphism):
    """Dimensionwise set pullback {(a, c) : F a = G c} with its projections."""
    if not _same(F.cod, G.cod):
        raise ValueError("codomain mismatch")
    A, C = F.dom, G.dom
    n = A.n

    def nm(a, c):
        return f"({a}|{c})"

    pairs = [[(a, c) for a in A.cells[k] for c in C.cells[k] if F.maps[k][a] == G.maps[k][c]]
             for k in range(n + 1)]
    cells = [[nm(a, c) for a, c in ps] for ps in pairs]
    src = [dict()] + [{nm(a, c): nm(A.src[k][a], C.src[k][c]) for a, c in pairs[k]} for k in range(1, n + 1)]
    tgt = [dict()] + [{nm(a, c): nm(A.tgt[k][a], C.tgt[k][c]) for a, c in pairs[k]} for k in range(1, n + 1)]
    ident = [{nm(a, c): nm(A.ident[k][a], C.ident[k][c]) for a, c in pairs[k]} for k in range(n)] + [dict()]
    comp = {}
    for k in range(1, n + 1):
        live = set(pairs[k])
        for m in range(k):
            tab = {}
            for (a, a2), r in A.comp[(m, k)].items():
                for (c, c2), rc in C.comp[(m, k)].items():
                    if (a, c) in live and (a2, c2) in live:
                        tab[(nm(a, c), nm(a2, c2))] = nm(r, rc)
            comp[(m, k)] = tab
    point = None
    if A.point is not None and C.point is not None and F.maps[0][A.point] == G.maps[0][C.point]:
        point = nm(A.point, C.point)
    S = NCat(n, cells, src, tgt, ident, comp, point)
    P = Morphism(S, A, [{nm(a, c): a for a, c in ps} for ps in pairs])
    Q = Morphism(S, C, [{nm(a, c): c for a, c in ps} for ps in pairs])
    return S, P, Q


def _check_cone(pb, M, N, w):
    if not (_same(M.cod, pb.F.dom) and _same(N.cod, pb.G.dom) and _same(M.dom, N.dom)):
        raise MediationError("not a cone: legs do not match the cospan")
    if w.dom.maps != compose0_functors(M, pb.F).maps or w.cod.maps != compose0_functors(N, pb.G).maps:
        raise MediationError("not a cone: 2-cell boundaries do not match M.F and N.G")


def mediate(pb: HPullback, M: Morphism, N: Morphism, w: Transf2, verify=True) -> Morphism:
    """The unique L: X -> apex with L.P = M, L.Q = N, L.eps = w."""
    _check_cone(pb, M, N, w)
    X = M.dom
    n = X.n
    maps = [dict() for _ in range(n + 1)]
    for k in range(n + 1):
        for x in X.cells[k]:
            a, c = M.maps[k][x], N.maps[k][x]
            b = w.comps[k][x] if k < n else None
            U = maps[k - 1][X.src[k][x]] if k else None
            V = maps[k - 1][X.tgt[k][x]] if k else None
            maps[k][x] = pb.name_of(k, a, b, c, U, V)
    L = Morphism(X, pb.apex, maps)
    if verify:
        _verify_mediator(pb, L, M, N, w)
    return L


def _verify_mediator(pb, L, M, N, w):
    from .morphisms import validate_morphism
    if compose0_functors(L, pb.P).maps != M.maps or compose0_functors(L, pb.Q).maps != N.maps:
        raise MediationError("mediator equations fail on projections")
    if whisker_left(L, pb.eps).comps != w.comps:
        raise MediationError("mediator equation L.eps = w fails")
    r = validate_morphism(L)
    if not r.ok:
        raise MediationError(f"mediator is not a functor: {r.first()}")


def mediate2(pb: HPullback, alpha: Transf2, beta: Transf2, Sigma, omega: Transf2, omega2: Transf2,
             L1=None, L2=None, verify=True) -> Transf2:
    """The unique lam: L1 => L2 with lam.P = alpha, lam.Q = beta and lam * eps = Sigma.

    ``omega``/``omega2`` are the cone 2-cells of the mediators L1, L2; ``Sigma`` runs
    from ``omega .1 (beta.G)`` to ``(alpha.F) .1 omega2`` and is given by its
    component maps (k-cell -> (k+2)-cell).
    """
    if L1 is None:
        L1 = mediate(pb, alpha.dom, beta.dom, omega)
    if L2 is None:
        L2 = mediate(pb, alpha.cod, beta.cod, omega2)
    X = L1.dom
    n = X.n
    apex = pb.apex
    comps = [dict() for _ in range(n)]

    def lam(x):
        return (x[0] + 1, comps[x[0]][x[1]])

    for k in range(n):
        lax = Lax(apex, X.bd, L1, L2, lam)
        for x in X.cells[k]:
            z = (k, x)
            try:
                U, V = lax.phi(z, k)[1], lax.psi(z, k)[1]
            except NotComposable as err:
                raise MediationError(f"boundary composite undefined at {z}: {err}", (z,)) from None
            a, c = alpha.comps[k][x], beta.comps[k][x]
            s = Sigma.comps[k][x] if k + 1 < n else None
            r = pb.lookup(k + 1, a, s, c, U, V)
            if r is None:
                raise MediationError(f"no {k+1}-cell for component at {z}", (z,))
            comps[k][x] = r
    lam_t = Transf2(L1, L2, comps)
    if verify:
        if whisker_right(lam_t, pb.P).comps != alpha.comps or whisker_right(lam_t, pb.Q).comps != beta.comps:
            raise MediationError("2-mediator equations fail on projections")
    return lam_t


@dataclass
class HFiber:
    kind: str
    base: str
    pb: HPullback
    K: NCat = None
    proj: Morphism = None
    kappa: Transf2 = None
    extra: dict = field(default_factory=dict)


def h_fiber(F: Morphism, d, kind="past") -> HFiber:
    """Past fiber: h_pullback([d], F); future fiber: h_pullback(F, [d])."""
    if isinstance(d, tuple):
        d = d[1]
    B = F.cod
    if d not in B._cellset(0):
        raise ValueError(f"{d!r} is not an object")
    T = terminal(F.dom.n)
    const = Morphism.constant(T, B, d)
    if kind == "past":
        pb = h_pullback(const, F)
        proj = pb.Q
    elif kind == "future":
        pb = h_pullback(F, const)
        proj = pb.P
    else:
        raise ValueError("kind must be past or future")
    fib = HFiber(kind, d, pb, pb.apex, proj, pb.eps)
    return fib


def h_kernel(F: Morphism) -> HFiber:
    """Pointed past fiber over the base point: (K, proj: K -> A, kappa: 0 => proj.F)."""
    if F.cod.point is None or F.dom.point is None:
        raise ValueError("h-kernel needs pointed data")
    return h_fiber(F, F.cod.point, "past")
