"""Functors, lax transformations and lax modifications between finite n-categories.

Transformations are stored flat: a Transf2 ``alpha: F => G`` sends each k-cell
(k < n) of the domain to a (k+1)-cell of the codomain, a Transf3 sends each
k-cell (k < n-1) to a (k+2)-cell.  Orientation: for ``x: u -> v``

    alpha(x): alpha(u) *0 G(x)  =>  F(x) *0 alpha(v)

and in general ``s alpha(x) = Phi_k(x)``, ``t alpha(x) = Psi_k(x)`` with

    Phi_0 = F, Psi_0 = G,
    Phi_{i+1}(x) = alpha(s_i x) *i Psi_i(x),   Psi_{i+1}(x) = Phi_i(x) *i alpha(t_i x).

Modifications are handled through the cylinder ``Cyl(D) = h_pullback(id_D, id_D)``:
a transformation ``alpha`` is the same thing as a functor into ``Cyl(D)`` and a
modification the same thing as a transformation between such functors.
"""

from __future__ import annotations

import itertools
from collections import OrderedDict

from .core import NCat, NotComposable, Report, product as _cat_product

# ---------------------------------------------------------------------------
# generic lax machinery


def cat_bd(C):
    return C.bd


def cat_dim(z):
    return z[0]


def pair_bd(bd):
    def f(z, i, side):
        return (bd(z[0], i, side), bd(z[1], i, side))
    return f


def pair_dim(z):
    return z[0][0]


class Lax:
    """Phi/Psi boundary composites for lax data (F, G, alpha) landing in D."""

    def __init__(self, D, bd, F, G, alpha):
        self.D, self.bd, self.F, self.G, self.alpha = D, bd, F, G, alpha
        self._memo = {}

    def phi(self, z, i):
        return self._get(z, i, 0)

    def psi(self, z, i):
        return self._get(z, i, 1)

    def _get(self, z, i, side):
        key = (z, i, side)
        r = self._memo.get(key)
        if r is None:
            if i == 0:
                r = self.F(z) if side == 0 else self.G(z)
            elif side == 0:
                r = self.D.cmp(i - 1, self.alpha(self.bd(z, i - 1, 0)), self._get(z, i - 1, 1))
            else:
                r = self.D.cmp(i - 1, self._get(z, i - 1, 0), self.alpha(self.bd(z, i - 1, 1)))
            self._memo[key] = r
        return r


def vc(D, j, A, W, z, bd, dim):
    """Pasting of two lax component families along dimension j (vertical composite)."""
    if dim(z) == j:
        return D.cmp(j, A(z), W(z))

    def A2(y):
        return D.cmp(j, A(bd(y, j, 0)), W(y))

    def W2(y):
        return D.cmp(j, A(y), W(bd(y, j, 1)))

    return vc(D, j + 1, A2, W2, z, bd, dim)


def check_lax(rep, C, D, F, G, alpha, n, cells_k=None, tag="transf2"):
    """Boundary, top, functoriality and unit laws for lax data on a genuine NCat C."""
    lax = Lax(D, C.bd, F, G, alpha)
    for k in range(n):
        for c in C.cells[k]:
            x = (k, c)
            try:
                a = alpha(x)
                if D.s(a) != lax.phi(x, k) or D.t(a) != lax.psi(x, k):
                    rep.add(f"{tag}:boundary", (x,), f"component {a} has wrong boundary")
            except (NotComposable, KeyError) as err:
                rep.add(f"{tag}:boundary", (x,), f"boundary composite undefined: {err}")
    if not rep.ok:
        return rep
    for c in C.cells[n]:
        x = (n, c)
        try:
            if lax.phi(x, n) != lax.psi(x, n):
                rep.add(f"{tag}:top", (x,), "naturality fails on a top cell")
        except NotComposable as err:
            rep.add(f"{tag}:top", (x,), str(err))
    for k in range(1, n):
        for j in range(k):
            for (a, b), ab in sorted(C.comp[(j, k)].items()):
                y, y2 = (k, a), (k, b)
                try:
                    want = vc(D, j + 1,
                              lambda z: D.cmp(j, alpha(z[0]), lax.psi(z[1], j)),
                              lambda z: D.cmp(j, lax.phi(z[0], j), alpha(z[1])),
                              (y, y2), pair_bd(C.bd), pair_dim)
                except NotComposable as err:
                    rep.add(f"{tag}:functoriality", (y, y2), str(err))
                    continue
                if alpha((k, ab)) != want:
                    rep.add(f"{tag}:functoriality", (y, y2), f"not compatible with *{j}")
    for k in range(n - 1):
        for c in C.cells[k]:
            x = (k, c)
            if alpha(C.e(x)) != D.e(alpha(x)):
                rep.add(f"{tag}:units", (x,), "identity not sent to identity")
    return rep


# ---------------------------------------------------------------------------
# 1-morphisms


class Morphism:
    """An n-functor given by per-dimension cell maps."""

    def __init__(self, dom: NCat, cod: NCat, maps):
        self.dom, self.cod = dom, cod
        self.maps = [dict(m) for m in maps]

    def __call__(self, x):
        k, c = x
        return (k, self.maps[k][c])

    @property
    def n(self):
        return self.dom.n

    @staticmethod
    def identity(C):
        return Morphism(C, C, [{c: c for c in cs} for cs in C.cells])

    @staticmethod
    def constant(C, D, d):
        """The constant functor at object d (written [d])."""
        maps = []
        x = (0, d)
        for k in range(C.n + 1):
            y = D.e(x, k)
            maps.append({c: y[1] for c in C.cells[k]})
        return Morphism(C, D, maps)

    @staticmethod
    def zero(C, D):
        if D.point is None:
            raise ValueError("zero morphism needs a pointed codomain")
        return Morphism.constant(C, D, D.point)

    def is_pointed(self):
        return self.dom.point is not None and self.cod.point is not None and \
            self.maps[0].get(self.dom.point) == self.cod.point

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.maps == other.maps and _same(self.dom, other.dom) and _same(self.cod, other.cod)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Morphism({self.dom!r} -> {self.cod!r})"


def _same(C, D):
    return C is D or C.same_shape(D)


def validate_morphism(f) -> Report:
    """Full invariant check for a Morphism, Transf2 or Transf3."""
    if isinstance(f, Transf3):
        return _validate_transf3(f)
    if isinstance(f, Transf2):
        return _validate_transf2(f)
    return _validate_functor(f)


def _validate_functor(F):
    rep = Report()
    C, D = F.dom, F.cod
    if C.n != D.n:
        rep.add("functor:dimension", (), f"{C.n} vs {D.n}")
        return rep
    n = C.n
    for k in range(n + 1):
        m = F.maps[k] if k < len(F.maps) else {}
        for c in C.cells[k]:
            if c not in m:
                rep.add("functor:missing", ((k, c),), "no image")
            elif not D.has((k, m[c])):
                rep.add("functor:missing", ((k, c),), f"image {m[c]!r} is not a {k}-cell")
    if not rep.ok:
        return rep
    for k in range(1, n + 1):
        for c in C.cells[k]:
            x = (k, c)
            if D.s(F(x)) != F(C.s(x)) or D.t(F(x)) != F(C.t(x)):
                rep.add("functor:boundary", (x,), "does not commute with source/target")
    for k in range(n):
        for c in C.cells[k]:
            x = (k, c)
            if F(C.e(x)) != D.e(F(x)):
                rep.add("functor:units", (x,), "identity not preserved")
    for (m, k), tab in sorted(C.comp.items()):
        for (a, b), c in sorted(tab.items()):
            fa, fb = F.maps[k][a], F.maps[k][b]
            if D.comp[(m, k)].get((fa, fb)) != F.maps[k][c]:
                rep.add("functor:composition", ((k, a), (k, b)), f"*{m} not preserved")
    if C.point is not None and D.point is not None and F.maps[0].get(C.point) != D.point:
        pass  # pointedness is optional; reported by is_pointed
    return rep


def compose0_functors(F: Morphism, G: Morphism) -> Morphism:
    """F then G."""
    if not _same(F.cod, G.dom):
        raise ValueError("boundary mismatch: cod(F) != dom(G)")
    return Morphism(F.dom, G.cod, [{c: G.maps[k][F.maps[k][c]] for c in F.dom.cells[k]}
                                   for k in range(F.dom.n + 1)])


def product_cat(C, D):
    key = ("prod", id(D))
    hit = C._cache.get(key)
    if hit is not None and hit[0] is D:
        return hit[1]
    res = _cat_product(C, D)
    C._cache[key] = (D, res)
    return res


def product_morphism(F: Morphism, G: Morphism) -> Morphism:
    P, _, _ = product_cat(F.dom, G.dom)
    Q, _, _ = product_cat(F.cod, G.cod)
    maps = []
    for k in range(P.n + 1):
        maps.append({f"({a}|{b})": f"({F.maps[k][a]}|{G.maps[k][b]})"
                     for a in F.dom.cells[k] for b in G.dom.cells[k]})
    return Morphism(P, Q, maps)


# ---------------------------------------------------------------------------
# 2-morphisms


class Transf2:
    """Lax n-transformation F => G stored as k-cell -> (k+1)-cell maps."""

    def __init__(self, dom: Morphism, cod: Morphism, comps):
        self.dom, self.cod = dom, cod
        self.comps = [dict(c) for c in comps]

    @property
    def C(self):
        return self.dom.dom

    @property
    def D(self):
        return self.dom.cod

    def __call__(self, x):
        k, c = x
        return (k + 1, self.comps[k][c])

    @staticmethod
    def identity(F: Morphism):
        C, D = F.dom, F.cod
        return Transf2(F, F, [{c: D.ident[k][F.maps[k][c]] for c in C.cells[k]} for k in range(C.n)])

    def is_strict(self):
        D = self.D
        return all(D.is_identity(self((k, c))) for k in range(1, self.C.n) for c in self.C.cells[k])

    def lax(self):
        return Lax(self.D, self.C.bd, self.dom, self.cod, self)

    def __eq__(self, other):
        if not isinstance(other, Transf2):
            return NotImplemented
        return self.comps == other.comps and self.dom == other.dom and self.cod == other.cod

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Transf2({self.C!r} -> {self.D!r})"


def _validate_transf2(a):
    rep = Report()
    F, G = a.dom, a.cod
    if not (_same(F.dom, G.dom) and _same(F.cod, G.cod)):
        rep.add("transf2:boundary", (), "dom and cod functors are not parallel")
        return rep
    C, D = F.dom, F.cod
    n = C.n
    for k in range(n):
        m = a.comps[k] if k < len(a.comps) else {}
        for c in C.cells[k]:
            if c not in m:
                rep.add("transf2:missing", ((k, c),), "no component")
            elif not D.has((k + 1, m[c])):
                rep.add("transf2:missing", ((k, c),), f"component {m[c]!r} is not a {k+1}-cell")
    if not rep.ok:
        return rep
    return check_lax(rep, C, D, F, G, a, n)


def vcompose(w: Transf2, a: Transf2) -> Transf2:
    """w then a (vertical composite)."""
    if w.cod != a.dom:
        raise ValueError("boundary mismatch: cod(w) != dom(a)")
    C, D = w.C, w.D
    comps = [{c: vc(D, 0, w, a, (k, c), C.bd, cat_dim)[1] for c in C.cells[k]} for k in range(C.n)]
    return Transf2(w.dom, a.cod, comps)


def whisker_left(N: Morphism, a: Transf2) -> Transf2:
    """N . a, components a(N b)."""
    if not _same(N.cod, a.C):
        raise ValueError("boundary mismatch")
    B = N.dom
    comps = [{b: a.comps[k][N.maps[k][b]] for b in B.cells[k]} for k in range(B.n)]
    return Transf2(compose0_functors(N, a.dom), compose0_functors(N, a.cod), comps)


def whisker_right(a: Transf2, L: Morphism) -> Transf2:
    """a . L, components L(a c)."""
    if not _same(a.D, L.dom):
        raise ValueError("boundary mismatch")
    C = a.C
    comps = [{c: L.maps[k + 1][a.comps[k][c]] for c in C.cells[k]} for k in range(C.n)]
    return Transf2(compose0_functors(a.dom, L), compose0_functors(a.cod, L), comps)


def whisker_functor_2cell(side, f, a):
    if side == "left":
        return whisker_left(f, a)
    if side == "right":
        return whisker_right(f, a) if isinstance(f, Transf2) else whisker_right(a, f)
    raise ValueError(f"side must be left or right, got {side!r}")


def product_transf(a: Transf2, b: Transf2) -> Transf2:
    F = product_morphism(a.dom, b.dom)
    G = product_morphism(a.cod, b.cod)
    C1, C2 = a.C, b.C
    comps = [{f"({x}|{y})": f"({a.comps[k][x]}|{b.comps[k][y]})" for x in C1.cells[k] for y in C2.cells[k]}
             for k in range(C1.n)]
    return Transf2(F, G, comps)


# ---------------------------------------------------------------------------
# cylinder


def cylinder(D):
    """Cyl(D) = h_pullback(id_D, id_D), cached on D."""
    from .limits import h_pullback
    hit = D._cache.get("cyl")
    if hit is None:
        idD = Morphism.identity(D)
        hit = D._cache["cyl"] = h_pullback(idD, idD)
    return hit


def hat(a: Transf2) -> Morphism:
    """The functor C -> Cyl(D) classifying a."""
    from .limits import mediate
    hit = a.__dict__.get("_hat")
    if hit is None:
        cyl = cylinder(a.D)
        hit = mediate(cyl, a.dom, a.cod, _as_cone(a, cyl))
        a.__dict__["_hat"] = hit
    return hit


def _as_cone(a, cyl):
    # a : F => G read as a 2-cell F.id => G.id
    return Transf2(compose0_functors(a.dom, cyl.F), compose0_functors(a.cod, cyl.G), a.comps)


# ---------------------------------------------------------------------------
# 3-morphisms


class Transf3:
    """Lax n-modification alpha => beta stored as k-cell -> (k+2)-cell maps."""

    def __init__(self, dom: Transf2, cod: Transf2, comps):
        self.dom, self.cod = dom, cod
        self.comps = [dict(c) for c in comps]

    @property
    def C(self):
        return self.dom.C

    @property
    def D(self):
        return self.dom.D

    @property
    def F(self):
        return self.dom.dom

    @property
    def G(self):
        return self.dom.cod

    def __call__(self, x):
        k, c = x
        return (k + 2, self.comps[k][c])

    @staticmethod
    def identity(a: Transf2):
        C, D = a.C, a.D
        return Transf3(a, a, [{c: D.ident[k + 1][a.comps[k][c]] for c in C.cells[k]}
                              for k in range(C.n - 1)])

    def is_identity(self):
        return self == Transf3.identity(self.dom)

    def __eq__(self, other):
        if not isinstance(other, Transf3):
            return NotImplemented
        return self.comps == other.comps and self.dom == other.dom and self.cod == other.cod

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Transf3({self.C!r} -> {self.D!r})"


def hat3(L: Transf3) -> Transf2:
    """The transformation hat(alpha) => hat(beta) into Cyl(D) classifying L."""
    from .limits import mediate2
    hit = L.__dict__.get("_hat")
    if hit is None:
        cyl = cylinder(L.D)
        hit = mediate2(cyl, Transf2.identity(L.F), Transf2.identity(L.G), L,
                       omega=_as_cone(L.dom, cyl), omega2=_as_cone(L.cod, cyl),
                       L1=hat(L.dom), L2=hat(L.cod))
        L.__dict__["_hat"] = hit
    return hit


def _validate_transf3(L):
    from .limits import MediationError
    rep = Report()
    a, b = L.dom, L.cod
    if not (a.dom == b.dom and a.cod == b.cod):
        rep.add("transf3:boundary", (), "dom and cod transformations are not parallel")
        return rep
    C, D = L.C, L.D
    for k in range(C.n - 1):
        m = L.comps[k] if k < len(L.comps) else {}
        for c in C.cells[k]:
            if c not in m:
                rep.add("transf3:missing", ((k, c),), "no component")
            elif not D.has((k + 2, m[c])):
                rep.add("transf3:missing", ((k, c),), f"component {m[c]!r} is not a {k+2}-cell")
    if not rep.ok:
        return rep
    for sub in (a, b):
        r = _validate_transf2(sub)
        if not r.ok:
            rep.extend(r, "transf3:")
            return rep
    try:
        h = hat3(L)
    except MediationError as err:
        rep.add("transf3:boundary", tuple(err.witness), str(err))
        return rep
    rep.extend(_validate_transf2(h), "transf3:")
    return rep


def modification_square_check(L: Transf3) -> Report:
    """Hand-written check of the low-dimensional modification conditions.

    Objects: L(c): alpha(c) => beta(c).  One-cells x: u -> v: the pasted squares

        alpha(x) *1 (F(x) *0 L(v))   and   (L(u) *0 G(x)) *1 beta(x)

    agree (n = 2) or are the source/target of L(x) (n >= 3).  Independent of the
    cylinder machinery, used as an oracle.
    """
    rep = Report()
    a, b = L.dom, L.cod
    C, D = L.C, L.D
    F, G = a.dom, a.cod
    n = C.n
    if n < 2:
        for c in C.cells[0]:
            if a((0, c)) != b((0, c)):
                rep.add("square:objects", ((0, c),), "parallel components differ")
        return rep
    for c in C.cells[0]:
        x = (0, c)
        y = L(x)
        if D.s(y) != a(x) or D.t(y) != b(x):
            rep.add("square:objects", (x,), "wrong boundary")
    if not rep.ok:
        return rep
    for c in C.cells[1]:
        x = (1, c)
        u, v = C.s(x), C.t(x)
        try:
            lhs = D.cmp(1, a(x), D.cmp(0, F(x), L(v)))
            rhs = D.cmp(1, D.cmp(0, L(u), G(x)), b(x))
        except NotComposable as err:
            rep.add("square:1-cells", (x,), str(err))
            continue
        if n == 2:
            if lhs != rhs:
                rep.add("square:1-cells", (x,), "pasted squares differ")
        else:
            y = L(x)
            if D.s(y) != lhs or D.t(y) != rhs:
                rep.add("square:1-cells", (x,), "wrong boundary")
    return rep


def _from_hat(h: Transf2, dom: Transf2, cod: Transf2) -> Transf3:
    cyl = cylinder(dom.D)
    C = dom.C
    comps = [{c: cyl.parts[k + 1][h.comps[k][c]][1] for c in C.cells[k]} for k in range(C.n - 1)]
    return Transf3(dom, cod, comps)


def compose2(L: Transf3, S: Transf3) -> Transf3:
    """L then S (2-composition)."""
    if L.cod != S.dom:
        raise ValueError("boundary mismatch: cod(L) != dom(S)")
    return _from_hat(vcompose(hat3(L), hat3(S)), L.dom, S.cod)


def _whisk1(w_cell, L_cell, C, D, cyl, x):
    def bpart(z):
        return (z[0] + 1, cyl.parts[z[0]][z[1]][1])
    return vc(D, 0, lambda z: bpart(z[0]), lambda z: bpart(z[1]), (w_cell, L_cell),
              pair_bd(cyl.apex.bd), pair_dim)


def whisker1_left(w: Transf2, L: Transf3) -> Transf3:
    """w .1 L for w: E => F and L: alpha => beta with alpha, beta: F => G."""
    if w.cod != L.F:
        raise ValueError("boundary mismatch")
    C, D = L.C, L.D
    cyl = cylinder(D)
    wh, Lh = hat(w), hat3(L)
    comps = []
    for k in range(C.n - 1):
        comps.append({c: _whisk1(cyl.apex.e(wh((k, c))), Lh((k, c)), C, D, cyl, (k, c))[1]
                      for c in C.cells[k]})
    return Transf3(vcompose(w, L.dom), vcompose(w, L.cod), comps)


def whisker1_right(L: Transf3, s: Transf2) -> Transf3:
    """L .1 s for s: G => H."""
    if L.G != s.dom:
        raise ValueError("boundary mismatch")
    C, D = L.C, L.D
    cyl = cylinder(D)
    sh, Lh = hat(s), hat3(L)
    comps = []
    for k in range(C.n - 1):
        comps.append({c: _whisk1(Lh((k, c)), cyl.apex.e(sh((k, c))), C, D, cyl, (k, c))[1]
                      for c in C.cells[k]})
    return Transf3(vcompose(L.dom, s), vcompose(L.cod, s), comps)


def whisker1_3cell(side, x, L):
    if side == "left":
        return whisker1_left(x, L)
    if side == "right":
        return whisker1_right(L, x)
    raise ValueError(f"side must be left or right, got {side!r}")


def whisker0_left(E: Morphism, L: Transf3) -> Transf3:
    """E . L, components L(E x)."""
    if not _same(E.cod, L.C):
        raise ValueError("boundary mismatch")
    B = E.dom
    comps = [{b: L.comps[k][E.maps[k][b]] for b in B.cells[k]} for k in range(B.n - 1)]
    return Transf3(whisker_left(E, L.dom), whisker_left(E, L.cod), comps)


def whisker0_right(L: Transf3, H: Morphism) -> Transf3:
    """L . H, components H(L x)."""
    if not _same(L.D, H.dom):
        raise ValueError("boundary mismatch")
    C = L.C
    comps = [{c: H.maps[k + 2][L.comps[k][c]] for c in C.cells[k]} for k in range(C.n - 1)]
    return Transf3(whisker_right(L.dom, H), whisker_right(L.cod, H), comps)


def whisker0_3cell(side, f, L):
    if side == "left":
        return whisker0_left(f, L)
    if side == "right":
        return whisker0_right(L, f)
    raise ValueError(f"side must be left or right, got {side!r}")


def star_dom(a: Transf2, b: Transf2) -> Transf2:
    return vcompose(whisker_left(a.dom, b), whisker_right(a, b.cod))


def star_cod(a: Transf2, b: Transf2) -> Transf2:
    return vcompose(whisker_right(a, b.dom), whisker_left(a.cod, b))


def star_compose(a: Transf2, b: Transf2) -> Transf3:
    """a * b : (F.b) .1 (a.K)  =>  (a.H) .1 (G.b), components b(a(x))."""
    if not _same(a.D, b.C):
        raise ValueError("boundary mismatch: a and b are not 0-composable")
    C = a.C
    comps = [{c: b.comps[k + 1][a.comps[k][c]] for c in C.cells[k]} for k in range(C.n - 1)]
    return Transf3(star_dom(a, b), star_cod(a, b), comps)


# ---------------------------------------------------------------------------
# enumeration


class BudgetExceeded(RuntimeError):
    pass


def _counter(budget):
    box = [0]

    def tick():
        box[0] += 1
        if budget is not None and box[0] > budget:
            raise BudgetExceeded(f"enumeration exceeded budget {budget}")
    return tick


def enumerate_morphisms(C: NCat, D: NCat, budget=200000, pointed=False):
    """All functors C -> D in a deterministic order."""
    if C.n != D.n:
        return []
    n = C.n
    order = [(k, c) for k in range(n + 1) for c in C.cells[k]]
    maps = [dict() for _ in range(n + 1)]
    out = []
    tick = _counter(budget)
    checks = {x: [] for x in order}
    pos = {x: i for i, x in enumerate(order)}
    for (m, k), tab in C.comp.items():
        for (a, b), c in tab.items():
            last = max(pos[(k, a)], pos[(k, b)], pos[(k, c)])
            checks[order[last]].append((m, k, a, b, c))

    def cands(x):
        k, c = x
        if k == 0:
            if pointed and c == C.point:
                return [D.point]
            return list(D.cells[0])
        s, t = maps[k - 1][C.src[k][c]], maps[k - 1][C.tgt[k][c]]
        lower = C.src[k][c]
        if C.ident[k - 1][lower] == c:
            return [D.ident[k - 1][maps[k - 1][lower]]]
        return D.between(k, s, t)

    def go(i):
        if i == len(order):
            out.append(Morphism(C, D, maps))
            return
        x = order[i]
        for y in cands(x):
            tick()
            maps[x[0]][x[1]] = y
            if all(D.comp[(m, k)].get((maps[k][a], maps[k][b])) == maps[k][c]
                   for (m, k, a, b, c) in checks[x]):
                go(i + 1)
            del maps[x[0]][x[1]]

    go(0)
    return out


def enumerate_transf2(F: Morphism, G: Morphism, budget=200000, cand_filter=None):
    """All lax transformations F => G, built dimension by dimension."""
    C, D = F.dom, F.cod
    n = C.n
    tick = _counter(budget)
    comps = [dict() for _ in range(n)]
    out = []

    def alpha(x):
        return (x[0] + 1, comps[x[0]][x[1]])

    def level(k):
        if k == n:
            t = Transf2(F, G, comps)
            if _validate_transf2(t).ok:
                out.append(t)
            return
        lax = Lax(D, C.bd, F, G, alpha)
        options = []
        for c in C.cells[k]:
            x = (k, c)
            if k >= 1 and C.is_identity(x) and k - 1 <= n - 2:
                opts = [D.e(alpha(C.s(x)))[1]]
            else:
                try:
                    opts = list(D.between(k + 1, lax.phi(x, k)[1], lax.psi(x, k)[1]))
                except NotComposable:
                    opts = []
            if cand_filter is not None:
                opts = [o for o in opts if cand_filter(x, o)]
            if not opts:
                return
            options.append((c, opts))
        for choice in itertools.product(*[o for _, o in options]):
            tick()
            for (c, _), y in zip(options, choice):
                comps[k][c] = y
            if _partial_ok(k):
                level(k + 1)
        comps[k].clear()

    def _partial_ok(k):
        # functoriality in dimension k only involves components up to k
        if k == 0:
            return True
        rep = Report()
        lax = Lax(D, C.bd, F, G, alpha)
        for j in range(k):
            for (a, b), ab in C.comp[(j, k)].items():
                y, y2 = (k, a), (k, b)
                try:
                    want = vc(D, j + 1,
                              lambda z: D.cmp(j, alpha(z[0]), lax.psi(z[1], j)),
                              lambda z: D.cmp(j, lax.phi(z[0], j), alpha(z[1])),
                              (y, y2), pair_bd(C.bd), pair_dim)
                except NotComposable:
                    return False
                if alpha((k, ab)) != want:
                    return False
        return rep.ok

    if _same(F.dom, G.dom) and _same(F.cod, G.cod):
        level(0)
    return out


def enumerate_transf3(a: Transf2, b: Transf2, budget=200000):
    """All modifications a => b, found as transformations hat(a) => hat(b) over identities."""
    if not (a.dom == b.dom and a.cod == b.cod):
        return []
    cyl = cylinder(a.D)
    F, G = a.dom, a.cod
    D = a.D

    def keep(x, cell):
        k = x[0]
        p = cyl.parts[k + 1][cell]
        return p[0] == D.e(F(x))[1] and p[-1] == D.e(G(x))[1]

    out = []
    for h in enumerate_transf2(hat(a), hat(b), budget=budget, cand_filter=keep):
        L = _from_hat(h, a, b)
        L.__dict__["_hat"] = h
        out.append(L)
    return out


# ---------------------------------------------------------------------------
# law suite


class LawReport:
    """Per-law outcome: status in {pass, fail, skipped}, instance count, witnesses."""

    def __init__(self):
        self.laws = OrderedDict()

    def record(self, name, ok, witness=None):
        st = self.laws.setdefault(name, {"status": "pass", "instances": 0, "witnesses": []})
        st["instances"] += 1
        if not ok:
            st["status"] = "fail"
            if len(st["witnesses"]) < 3:
                st["witnesses"].append(witness)

    def skip(self, name, why):
        st = self.laws.setdefault(name, {"status": "pass", "instances": 0, "witnesses": []})
        if st["status"] != "fail":
            st["status"] = "skipped"
        st["why"] = why

    def finish(self):
        for st in self.laws.values():
            if st["status"] == "pass" and st["instances"] == 0:
                st["status"] = "skipped"
                st.setdefault("why", "no composable instances")
        return self

    @property
    def ok(self):
        return all(st["status"] != "fail" for st in self.laws.values())

    def failures(self):
        return [k for k, st in self.laws.items() if st["status"] == "fail"]

    def total(self):
        return sum(st["instances"] for st in self.laws.values())

    def __repr__(self):
        return f"LawReport({len(self.laws)} laws, {self.total()} instances, failures={self.failures()})"


class _Universe:
    """Lazily enumerated functors, transformations and modifications among a list of categories."""

    def __init__(self, cats, budget):
        self.cats = cats
        self.budget = budget
        self._f, self._t, self._m = {}, {}, {}

    def idx(self):
        return range(len(self.cats))

    def functors(self, i, j):
        key = (i, j)
        if key not in self._f:
            self._f[key] = enumerate_morphisms(self.cats[i], self.cats[j], budget=self.budget)
        return self._f[key]

    def transfs(self, i, j):
        key = (i, j)
        if key not in self._t:
            out = []
            fs = self.functors(i, j)
            for F in fs:
                for G in fs:
                    out.extend(enumerate_transf2(F, G, budget=self.budget))
            self._t[key] = out
        return self._t[key]

    def mods(self, i, j):
        key = (i, j)
        if key not in self._m:
            out = []
            ts = self.transfs(i, j)
            for a in ts:
                for b in ts:
                    if a.dom == b.dom and a.cod == b.cod:
                        out.extend(enumerate_transf3(a, b, budget=self.budget))
            self._m[key] = out
        return self._m[key]

    def ident(self, i):
        return Morphism.identity(self.cats[i])


def law_suite(C: NCat, D: NCat, E: NCat, sample_budget: int = 5000, impl=None) -> LawReport:
    """Exhaustively (up to ``sample_budget`` instances per law) check the sesqui and sesqui^2 laws.

    ``impl`` may override operations by name (used for fault injection in tests).
    """
    ops = dict(vcompose=vcompose, whisker_left=whisker_left, whisker_right=whisker_right,
               compose2=compose2, whisker1_left=whisker1_left, whisker1_right=whisker1_right,
               whisker0_left=whisker0_left, whisker0_right=whisker0_right,
               star_compose=star_compose, compose0=compose0_functors)
    if impl:
        ops.update(impl)
    U = _Universe([C, D, E], budget=200000)
    rep = LawReport()
    for name, gen in _LAWS:
        cnt = 0
        try:
            for ok, wit in gen(U, ops):
                rep.record(name, ok, wit)
                cnt += 1
                if cnt >= sample_budget:
                    break
        except BudgetExceeded as err:
            rep.skip(name, str(err))
        except (ValueError, NotComposable, KeyError) as err:
            # an operation refused its own output: that is a failed instance
            rep.record(name, False, ("raised", type(err).__name__, str(err)))
        rep.laws.setdefault(name, {"status": "pass", "instances": 0, "witnesses": []})
    return rep.finish()


def _eq(x, y):
    return x == y


# --- generators: each yields (ok, witness) ---------------------------------

def _chains(U, shape):
    """Index tuples of length ``shape`` over the category list."""
    return itertools.product(U.idx(), repeat=shape)


def _L1(U, o):
    for i, j in _chains(U, 2):
        for a in U.transfs(i, j):
            yield _eq(o["whisker_left"](U.ident(i), a), a), ("L1", i, j)


def _R1(U, o):
    for i, j in _chains(U, 2):
        for a in U.transfs(i, j):
            yield _eq(o["whisker_right"](a, U.ident(j)), a), ("R1", i, j)


def _L2(U, o):
    for h, i, j, k in _chains(U, 4):
        for a in U.transfs(j, k):
            for a1 in U.functors(i, j):
                for a2 in U.functors(h, i):
                    lhs = o["whisker_left"](o["compose0"](a2, a1), a)
                    rhs = o["whisker_left"](a2, o["whisker_left"](a1, a))
                    yield _eq(lhs, rhs), ("L2", h, i, j, k)


def _R2(U, o):
    for i, j, k, l in _chains(U, 4):
        for a in U.transfs(i, j):
            for b in U.functors(j, k):
                for b2 in U.functors(k, l):
                    lhs = o["whisker_right"](a, o["compose0"](b, b2))
                    rhs = o["whisker_right"](o["whisker_right"](a, b), b2)
                    yield _eq(lhs, rhs), ("R2", i, j, k, l)


def _L3(U, o):
    for h, i, j in _chains(U, 3):
        for f in U.functors(i, j):
            for a in U.functors(h, i):
                lhs = o["whisker_left"](a, Transf2.identity(f))
                yield _eq(lhs, Transf2.identity(compose0_functors(a, f))), ("L3", h, i, j)


def _R3(U, o):
    for i, j, k in _chains(U, 3):
        for f in U.functors(i, j):
            for b in U.functors(j, k):
                lhs = o["whisker_right"](Transf2.identity(f), b)
                yield _eq(lhs, Transf2.identity(compose0_functors(f, b))), ("R3", i, j, k)


def _vpairs(U, i, j):
    ts = U.transfs(i, j)
    for a in ts:
        for b in ts:
            if a.cod == b.dom:
                yield a, b


def _vtriples(U, i, j):
    ts = U.transfs(i, j)
    for a, b in _vpairs(U, i, j):
        for c in ts:
            if b.cod == c.dom:
                yield a, b, c


def _L4(U, o):
    for h, i, j in _chains(U, 3):
        for a, b in _vpairs(U, i, j):
            for N in U.functors(h, i):
                lhs = o["whisker_left"](N, o["vcompose"](a, b))
                rhs = o["vcompose"](o["whisker_left"](N, a), o["whisker_left"](N, b))
                yield _eq(lhs, rhs), ("L4", h, i, j)


def _R4(U, o):
    for i, j, k in _chains(U, 3):
        for a, b in _vpairs(U, i, j):
            for L in U.functors(j, k):
                lhs = o["whisker_right"](o["vcompose"](a, b), L)
                rhs = o["vcompose"](o["whisker_right"](a, L), o["whisker_right"](b, L))
                yield _eq(lhs, rhs), ("R4", i, j, k)


def _LR5(U, o):
    for h, i, j, k in _chains(U, 4):
        for a in U.transfs(i, j):
            for N in U.functors(h, i):
                for L in U.functors(j, k):
                    lhs = o["whisker_right"](o["whisker_left"](N, a), L)
                    rhs = o["whisker_left"](N, o["whisker_right"](a, L))
                    yield _eq(lhs, rhs), ("LR5", h, i, j, k)


def _vcomp_assoc(U, o):
    for i, j in _chains(U, 2):
        for a, b, c in _vtriples(U, i, j):
            lhs = o["vcompose"](o["vcompose"](a, b), c)
            rhs = o["vcompose"](a, o["vcompose"](b, c))
            yield _eq(lhs, rhs), ("vassoc", i, j)


def _vcomp_units(U, o):
    for i, j in _chains(U, 2):
        for a in U.transfs(i, j):
            ok = o["vcompose"](Transf2.identity(a.dom), a) == a and \
                o["vcompose"](a, Transf2.identity(a.cod)) == a
            yield ok, ("vunit", i, j)


def _prod_interchange(U, o):
    ones = {}

    def one(i):
        if i not in ones:
            ones[i] = Transf2.identity(U.ident(i))
        return ones[i]

    for i, j, k, l in _chains(U, 4):
        if i > j or k > l:
            continue  # product categories get large; one orientation per pair suffices
        for al in U.transfs(i, j):
            for be in U.transfs(k, l):
                f, g, h, kk = al.dom, al.cod, be.dom, be.cod
                A, C = U.cats[i], U.cats[k]
                B, D = U.cats[j], U.cats[l]
                idA, idB, idC, idD = U.ident(i), U.ident(j), U.ident(k), U.ident(l)
                one_beta = product_transf(one(j), be)       # 1_B x beta
                alpha_one = product_transf(al, one(l))      # alpha x 1_D
                alpha_one_c = product_transf(al, one(k))    # alpha x 1_C
                one_beta_a = product_transf(one(i), be)     # 1_A x beta
                lhs = o["vcompose"](o["whisker_left"](product_morphism(f, idC), one_beta),
                                    o["whisker_left"](product_morphism(idA, kk), alpha_one))
                rhs = o["vcompose"](o["whisker_left"](product_morphism(idA, h), alpha_one),
                                    o["whisker_left"](product_morphism(g, idC), one_beta))
                target = product_transf(al, be)
                ok = lhs == target and rhs == target
                # the mirrored form through the other factor
                lhs2 = o["vcompose"](o["whisker_right"](one_beta_a, product_morphism(f, idD)),
                                     o["whisker_right"](alpha_one_c, product_morphism(idB, kk)))
                ok = ok and lhs2 == target
                yield ok, ("product-interchange", i, j, k, l)
                del A, B, C, D


# primed laws (whiskering of 3-morphisms by 2-morphisms)

def _L1p(U, o):
    for i, j in _chains(U, 2):
        for L in U.mods(i, j):
            yield _eq(o["whisker1_left"](Transf2.identity(L.F), L), L), ("L1'", i, j)


def _R1p(U, o):
    for i, j in _chains(U, 2):
        for L in U.mods(i, j):
            yield _eq(o["whisker1_right"](L, Transf2.identity(L.G)), L), ("R1'", i, j)


def _into(U, i, j, F):
    return [w for w in U.transfs(i, j) if w.cod == F]


def _outof(U, i, j, G):
    return [s for s in U.transfs(i, j) if s.dom == G]


def _L2p(U, o):
    for i, j in _chains(U, 2):
        for L in U.mods(i, j):
            for w in _into(U, i, j, L.F):
                for w2 in _into(U, i, j, w.dom):
                    lhs = o["whisker1_left"](o["vcompose"](w2, w), L)
                    rhs = o["whisker1_left"](w2, o["whisker1_left"](w, L))
                    yield _eq(lhs, rhs), ("L2'", i, j)


def _R2p(U, o):
    for i, j in _chains(U, 2):
        for L in U.mods(i, j):
            for s in _outof(U, i, j, L.G):
                for s2 in _outof(U, i, j, s.cod):
                    lhs = o["whisker1_right"](L, o["vcompose"](s, s2))
                    rhs = o["whisker1_right"](o["whisker1_right"](L, s), s2)
                    yield _eq(lhs, rhs), ("R2'", i, j)


def _L3p(U, o):
    for i, j in _chains(U, 2):
        for a in U.transfs(i, j):
            for w in _into(U, i, j, a.dom):
                lhs = o["whisker1_left"](w, Transf3.identity(a))
                yield _eq(lhs, Transf3.identity(vcompose(w, a))), ("L3'", i, j)


def _R3p(U, o):
    for i, j in _chains(U, 2):
        for a in U.transfs(i, j):
            for s in _outof(U, i, j, a.cod):
                lhs = o["whisker1_right"](Transf3.identity(a), s)
                yield _eq(lhs, Transf3.identity(vcompose(a, s))), ("R3'", i, j)


def _mpairs(U, i, j):
    ms = U.mods(i, j)
    for L in ms:
        for S in ms:
            if L.cod == S.dom:
                yield L, S


def _L4p(U, o):
    for i, j in _chains(U, 2):
        for L, S in _mpairs(U, i, j):
            for w in _into(U, i, j, L.F):
                lhs = o["whisker1_left"](w, o["compose2"](L, S))
                rhs = o["compose2"](o["whisker1_left"](w, L), o["whisker1_left"](w, S))
                yield _eq(lhs, rhs), ("L4'", i, j)


def _R4p(U, o):
    for i, j in _chains(U, 2):
        for L, S in _mpairs(U, i, j):
            for s in _outof(U, i, j, L.G):
                lhs = o["whisker1_right"](o["compose2"](L, S), s)
                rhs = o["compose2"](o["whisker1_right"](L, s), o["whisker1_right"](S, s))
                yield _eq(lhs, rhs), ("R4'", i, j)


def _LR5p(U, o):
    for i, j in _chains(U, 2):
        for L in U.mods(i, j):
            for w in _into(U, i, j, L.F):
                for s in _outof(U, i, j, L.G):
                    lhs = o["whisker1_right"](o["whisker1_left"](w, L), s)
                    rhs = o["whisker1_left"](w, o["whisker1_right"](L, s))
                    yield _eq(lhs, rhs), ("LR5'", i, j)


def _mod_assoc(U, o):
    for i, j in _chains(U, 2):
        ms = U.mods(i, j)
        for L, S in _mpairs(U, i, j):
            for T in ms:
                if S.cod == T.dom:
                    lhs = o["compose2"](o["compose2"](L, S), T)
                    rhs = o["compose2"](L, o["compose2"](S, T))
                    yield _eq(lhs, rhs), ("2-assoc", i, j)


def _mod_units(U, o):
    for i, j in _chains(U, 2):
        for L in U.mods(i, j):
            ok = o["compose2"](Transf3.identity(L.dom), L) == L and \
                o["compose2"](L, Transf3.identity(L.cod)) == L
            yield ok, ("2-units", i, j)


# double-primed laws (whiskering of 3-morphisms by functors)

def _L1pp(U, o):
    for i, j in _chains(U, 2):
        for L in U.mods(i, j):
            yield _eq(o["whisker0_left"](U.ident(i), L), L), ("L1''", i, j)


def _R1pp(U, o):
    for i, j in _chains(U, 2):
        for L in U.mods(i, j):
            yield _eq(o["whisker0_right"](L, U.ident(j)), L), ("R1''", i, j)


def _L2pp(U, o):
    for g, h, i, j in _chains(U, 4):
        for L in U.mods(i, j):
            for E in U.functors(h, i):
                for E2 in U.functors(g, h):
                    lhs = o["whisker0_left"](o["compose0"](E2, E), L)
                    rhs = o["whisker0_left"](E2, o["whisker0_left"](E, L))
                    yield _eq(lhs, rhs), ("L2''", g, h, i, j)


def _R2pp(U, o):
    for i, j, k, l in _chains(U, 4):
        for L in U.mods(i, j):
            for H in U.functors(j, k):
                for H2 in U.functors(k, l):
                    lhs = o["whisker0_right"](L, o["compose0"](H, H2))
                    rhs = o["whisker0_right"](o["whisker0_right"](L, H), H2)
                    yield _eq(lhs, rhs), ("R2''", i, j, k, l)


def _L3pp(U, o):
    for h, i, j in _chains(U, 3):
        for a in U.transfs(i, j):
            for E in U.functors(h, i):
                lhs = o["whisker0_left"](E, Transf3.identity(a))
                yield _eq(lhs, Transf3.identity(whisker_left(E, a))), ("L3''", h, i, j)


def _R3pp(U, o):
    for i, j, k in _chains(U, 3):
        for a in U.transfs(i, j):
            for H in U.functors(j, k):
                lhs = o["whisker0_right"](Transf3.identity(a), H)
                yield _eq(lhs, Transf3.identity(whisker_right(a, H))), ("R3''", i, j, k)


def _L4pp(U, o):
    for h, i, j in _chains(U, 3):
        for L, S in _mpairs(U, i, j):
            for E in U.functors(h, i):
                lhs = o["whisker0_left"](E, o["compose2"](L, S))
                rhs = o["compose2"](o["whisker0_left"](E, L), o["whisker0_left"](E, S))
                yield _eq(lhs, rhs), ("L4''", h, i, j)


def _R4pp(U, o):
    for i, j, k in _chains(U, 3):
        for L, S in _mpairs(U, i, j):
            for H in U.functors(j, k):
                lhs = o["whisker0_right"](o["compose2"](L, S), H)
                rhs = o["compose2"](o["whisker0_right"](L, H), o["whisker0_right"](S, H))
                yield _eq(lhs, rhs), ("R4''", i, j, k)


def _LR5pp(U, o):
    for h, i, j, k in _chains(U, 4):
        for L in U.mods(i, j):
            for E in U.functors(h, i):
                for H in U.functors(j, k):
                    lhs = o["whisker0_right"](o["whisker0_left"](E, L), H)
                    rhs = o["whisker0_left"](E, o["whisker0_right"](L, H))
                    yield _eq(lhs, rhs), ("LR5''", h, i, j, k)


def _LRW1(U, o):
    for h, i, j in _chains(U, 3):
        for L in U.mods(i, j):
            for w in _into(U, i, j, L.F):
                for E in U.functors(h, i):
                    lhs = o["whisker0_left"](E, o["whisker1_left"](w, L))
                    rhs = o["whisker1_left"](o["whisker_left"](E, w), o["whisker0_left"](E, L))
                    yield _eq(lhs, rhs), ("LRW1", h, i, j)


def _LRW2(U, o):
    for h, i, j in _chains(U, 3):
        for L in U.mods(i, j):
            for s in _outof(U, i, j, L.G):
                for E in U.functors(h, i):
                    lhs = o["whisker0_left"](E, o["whisker1_right"](L, s))
                    rhs = o["whisker1_right"](o["whisker0_left"](E, L), o["whisker_left"](E, s))
                    yield _eq(lhs, rhs), ("LRW2", h, i, j)


def _LRW(U, o):
    for g, i, j, k in _chains(U, 4):
        for L in U.mods(i, j):
            for w in _into(U, i, j, L.F):
                for s in _outof(U, i, j, L.G):
                    for E in U.functors(g, i):
                        for H in U.functors(j, k):
                            inner = o["whisker1_right"](o["whisker1_left"](w, L), s)
                            lhs = o["whisker0_right"](o["whisker0_left"](E, inner), H)

                            def wh2(x):
                                return o["whisker_right"](o["whisker_left"](E, x), H)
                            mid = o["whisker0_right"](o["whisker0_left"](E, L), H)
                            rhs = o["whisker1_right"](o["whisker1_left"](wh2(w), mid), wh2(s))
                            yield _eq(lhs, rhs), ("LRW", g, i, j, k)


# star composition laws

def _star_typed(U, o):
    for i, j, k in _chains(U, 3):
        for a in U.transfs(i, j):
            for b in U.transfs(j, k):
                S = o["star_compose"](a, b)
                ok = S.dom == star_dom(a, b) and S.cod == star_cod(a, b) and _validate_transf3(S).ok
                yield ok, ("star-typed", i, j, k)


def _LstarA(U, o):
    for h, i, j, k in _chains(U, 4):
        for a in U.transfs(i, j):
            for b in U.transfs(j, k):
                for E in U.functors(h, i):
                    lhs = o["star_compose"](o["whisker_left"](E, a), b)
                    rhs = o["whisker0_left"](E, o["star_compose"](a, b))
                    yield _eq(lhs, rhs), ("L*A", h, i, j, k)


def _RstarA(U, o):
    for i, j, k, l in _chains(U, 4):
        for a in U.transfs(i, j):
            for b in U.transfs(j, k):
                for L in U.functors(k, l):
                    lhs = o["star_compose"](a, o["whisker_right"](b, L))
                    rhs = o["whisker0_right"](o["star_compose"](a, b), L)
                    yield _eq(lhs, rhs), ("R*A", i, j, k, l)


def _star_idL(U, o):
    for h, i, j in _chains(U, 3):
        for a in U.transfs(i, j):
            for E in U.functors(h, i):
                lhs = o["star_compose"](Transf2.identity(E), a)
                yield _eq(lhs, Transf3.identity(whisker_left(E, a))), ("*-id L", h, i, j)


def _star_idR(U, o):
    for i, j, k in _chains(U, 3):
        for a in U.transfs(i, j):
            for H in U.functors(j, k):
                lhs = o["star_compose"](a, Transf2.identity(H))
                yield _eq(lhs, Transf3.identity(whisker_right(a, H))), ("*-id R", i, j, k)


def _star_assoc2(U, o):
    for i, j, k, l in _chains(U, 4):
        for a in U.transfs(i, j):
            for M in U.functors(j, k):
                for b in U.transfs(k, l):
                    lhs = o["star_compose"](a, o["whisker_left"](M, b))
                    rhs = o["star_compose"](o["whisker_right"](a, M), b)
                    yield _eq(lhs, rhs), ("*-assoc 2", i, j, k, l)


def _star_functA(U, o):
    for i, j, k in _chains(U, 3):
        for a, b in _vpairs(U, i, j):
            for g in U.transfs(j, k):
                K, L = g.dom, g.cod
                lhs = o["star_compose"](o["vcompose"](a, b), g)
                left = o["whisker1_right"](o["star_compose"](a, g), o["whisker_right"](b, L))
                right = o["whisker1_left"](o["whisker_right"](a, K), o["star_compose"](b, g))
                rhs = o["compose2"](left, right)
                yield _eq(lhs, rhs), ("*-functoriality a", i, j, k)


def _star_functB(U, o):
    for h, i, j in _chains(U, 3):
        for a, b in _vpairs(U, i, j):
            for w in U.transfs(h, i):
                Dm, Em = w.dom, w.cod
                lhs = o["star_compose"](w, o["vcompose"](a, b))
                left = o["whisker1_right"](o["star_compose"](w, a), o["whisker_left"](Em, b))
                right = o["whisker1_left"](o["whisker_left"](Dm, a), o["star_compose"](w, b))
                rhs = o["compose2"](left, right)
                yield _eq(lhs, rhs), ("*-functoriality b", h, i, j)


def _star_strict(U, o):
    for i, j, k in _chains(U, 3):
        for a in U.transfs(i, j):
            for b in U.transfs(j, k):
                if b.is_strict():
                    S = o["star_compose"](a, b)
                    yield (S.dom == S.cod and S.is_identity()), ("*-strict", i, j, k)


# sesqui^2 axioms

def _iv_b(U, o):
    for i, j, k in _chains(U, 3):
        for L in U.mods(i, j):
            for b in U.transfs(j, k):
                a, w = L.dom, L.cod
                F, G = a.dom, a.cod
                H, K = b.dom, b.cod
                lhs = o["compose2"](o["star_compose"](a, b),
                                    o["whisker1_right"](o["whisker0_right"](L, H), o["whisker_left"](G, b)))
                rhs = o["compose2"](o["whisker1_left"](o["whisker_left"](F, b), o["whisker0_right"](L, K)),
                                    o["star_compose"](w, b))
                yield _eq(lhs, rhs), ("(iv)(b)", i, j, k)


def _iv_c(U, o):
    for h, i, j in _chains(U, 3):
        for L in U.mods(i, j):
            for e in U.transfs(h, i):
                a, w = L.dom, L.cod
                F, G = a.dom, a.cod
                Lf, M = e.dom, e.cod
                lhs = o["compose2"](o["whisker1_right"](o["whisker0_left"](Lf, L), o["whisker_right"](e, G)),
                                    o["star_compose"](e, w))
                rhs = o["compose2"](o["star_compose"](e, a),
                                    o["whisker1_left"](o["whisker_right"](e, F), o["whisker0_left"](M, L)))
                yield _eq(lhs, rhs), ("(iv)(c)", h, i, j)


def _vi(U, o):
    """0-associativity for triples of total degree <= 2 involving 2- and 3-morphisms."""
    for h, i, j, k in _chains(U, 4):
        for E in U.functors(h, i):
            for a in U.transfs(i, j):
                for b in U.transfs(j, k):
                    lhs = o["star_compose"](o["whisker_left"](E, a), b)
                    rhs = o["whisker0_left"](E, o["star_compose"](a, b))
                    yield _eq(lhs, rhs), ("(vi) F,a,b", h, i, j, k)
        for a in U.transfs(h, i):
            for F in U.functors(i, j):
                for b in U.transfs(j, k):
                    lhs = o["star_compose"](o["whisker_right"](a, F), b)
                    rhs = o["star_compose"](a, o["whisker_left"](F, b))
                    yield _eq(lhs, rhs), ("(vi) a,F,b", h, i, j, k)
        for a in U.transfs(h, i):
            for b in U.transfs(i, j):
                for F in U.functors(j, k):
                    lhs = o["whisker0_right"](o["star_compose"](a, b), F)
                    rhs = o["star_compose"](a, o["whisker_right"](b, F))
                    yield _eq(lhs, rhs), ("(vi) a,b,F", h, i, j, k)
        for E in U.functors(h, i):
            for L in U.mods(i, j):
                for H in U.functors(j, k):
                    lhs = o["whisker0_right"](o["whisker0_left"](E, L), H)
                    rhs = o["whisker0_left"](E, o["whisker0_right"](L, H))
                    yield _eq(lhs, rhs), ("(vi) F,L,G", h, i, j, k)


def _vii(U, o):
    for h, i, j in _chains(U, 3):
        for a in U.transfs(i, j):
            for E in U.functors(h, i):
                yield _eq(o["star_compose"](Transf2.identity(E), a),
                          Transf3.identity(whisker_left(E, a))), ("(vii) L", h, i, j)
    for i, j, k in _chains(U, 3):
        for a in U.transfs(i, j):
            for H in U.functors(j, k):
                yield _eq(o["star_compose"](a, Transf2.identity(H)),
                          Transf3.identity(whisker_right(a, H))), ("(vii) R", i, j, k)


_LAWS = [
    ("(L1)", _L1), ("(R1)", _R1), ("(L2)", _L2), ("(R2)", _R2), ("(L3)", _L3), ("(R3)", _R3),
    ("(L4)", _L4), ("(R4)", _R4), ("(LR5)", _LR5),
    ("vertical associativity", _vcomp_assoc), ("vertical units", _vcomp_units),
    ("product interchange", _prod_interchange),
    ("(L1)'", _L1p), ("(R1)'", _R1p), ("(L2)'", _L2p), ("(R2)'", _R2p), ("(L3)'", _L3p),
    ("(R3)'", _R3p), ("(L4)'", _L4p), ("(R4)'", _R4p), ("(LR5)'", _LR5p),
    ("2-composition associativity", _mod_assoc), ("2-composition units", _mod_units),
    ("(L1)''", _L1pp), ("(R1)''", _R1pp), ("(L2)''", _L2pp), ("(R2)''", _R2pp), ("(L3)''", _L3pp),
    ("(R3)''", _R3pp), ("(L4)''", _L4pp), ("(R4)''", _R4pp), ("(LR5)''", _LR5pp),
    ("(LRW)^1", _LRW1), ("(LRW)^2", _LRW2), ("(LRW)", _LRW),
    ("(iv)(a) star typing", _star_typed), ("(L*A)", _LstarA), ("(R*A)", _RstarA),
    ("*-identity (L)", _star_idL), ("*-identity (R)", _star_idR), ("*-associativity 2", _star_assoc2),
    ("*-functoriality (a) = (v)(a)", _star_functA), ("*-functoriality (b) = (v)(b)", _star_functB),
    ("*-strict lemma", _star_strict),
    ("(iv)(b)", _iv_b), ("(iv)(c)", _iv_c), ("(vi)", _vi), ("(vii)", _vii),
]

LAW_NAMES = [n for n, _ in _LAWS]
