"""Finite strict n-categories stored as reflexive globular sets.

An :class:`NCat` keeps, for every dimension ``k``, a sorted tuple of cell ids,
source/target maps down one dimension, identity maps up one dimension and a
composition table ``comp[(m, k)]`` for every ``m < k``.  Composition is written
in diagrammatic order: ``a *m b`` means "a, then b" and is defined exactly when
``t_m(a) == s_m(b)``.

Cells are addressed as ``(dim, id)`` pairs throughout the package; ids only
need to be unique inside their own dimension.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product as _iproduct
from typing import NamedTuple


class CellRef(NamedTuple):
    dim: int
    id: str


class NotComposable(ValueError):
    pass


class Inconclusive(RuntimeError):
    """Raised by :func:`iso_search` when the search budget runs out."""


@dataclass
class Report:
    violations: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations

    def add(self, name, witness, detail=""):
        self.violations.append((name, tuple(witness), detail))

    def extend(self, other, prefix=""):
        for name, w, d in other.violations:
            self.violations.append((prefix + name, w, d))

    def first(self):
        return self.violations[0] if self.violations else None

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "Report(ok)"
        head = ", ".join(v[0] for v in self.violations[:3])
        return f"Report({len(self.violations)} violations: {head}...)"


class NCat:
    """A finite n-truncated reflexive globular set with total composition tables.

    ``src[k]``/``tgt[k]`` map k-cells to (k-1)-cells (``src[0]`` is empty),
    ``ident[k]`` maps k-cells to (k+1)-cells for ``k < n``.
    """

    def __init__(self, n, cells, src, tgt, ident, comp, point=None):
        self.n = n
        self.cells = [tuple(sorted(set(cs))) for cs in cells]
        self.src = [dict(d) for d in src]
        self.tgt = [dict(d) for d in tgt]
        self.ident = [dict(d) for d in ident]
        self.comp = {key: dict(tab) for key, tab in comp.items()}
        self.point = point
        self._cache = {}

    # -- basic structure -------------------------------------------------

    def size(self, k=None):
        if k is None:
            return sum(len(c) for c in self.cells)
        return len(self.cells[k])

    def sizes(self):
        return tuple(len(c) for c in self.cells)

    def has(self, x):
        k, c = x
        return 0 <= k <= self.n and c in self._cellset(k)

    def _cellset(self, k):
        key = ("set", k)
        s = self._cache.get(key)
        if s is None:
            s = self._cache[key] = frozenset(self.cells[k])
        return s

    def s(self, x, j=None):
        """Iterated source of x down to dimension j (default: one step)."""
        k, c = x
        if j is None:
            j = k - 1
        while k > j:
            c = self.src[k][c]
            k -= 1
        return (k, c)

    def t(self, x, j=None):
        k, c = x
        if j is None:
            j = k - 1
        while k > j:
            c = self.tgt[k][c]
            k -= 1
        return (k, c)

    def bd(self, x, j, side):
        return self.s(x, j) if side == 0 else self.t(x, j)

    def e(self, x, j=None):
        """Iterated identity of x up to dimension j (default: one step)."""
        k, c = x
        if j is None:
            j = k + 1
        while k < j:
            c = self.ident[k][c]
            k += 1
        return (k, c)

    def is_identity(self, x):
        k, c = x
        if k == 0:
            return False
        y = (k - 1, self.src[k][c])
        return self.ident[k - 1].get(y[1]) == c

    def cmp(self, m, x, y):
        """x *m y, raising the lower-dimensional argument by identities."""
        k = max(x[0], y[0])
        if x[0] < k:
            x = self.e(x, k)
        if y[0] < k:
            y = self.e(y, k)
        if m >= k:
            raise NotComposable(f"cannot {m}-compose {k}-cells")
        try:
            return (k, self.comp[(m, k)][(x[1], y[1])])
        except KeyError:
            raise NotComposable(f"{x} *{m} {y}") from None

    def by_boundary(self, k, m, side):
        """Index of k-cells by their m-source (side 0) or m-target (side 1)."""
        key = ("idx", k, m, side)
        idx = self._cache.get(key)
        if idx is None:
            idx = defaultdict(list)
            for c in self.cells[k]:
                idx[self.bd((k, c), m, side)[1]].append(c)
            idx = self._cache[key] = dict(idx)
        return idx

    def parallel_index(self, k):
        """k-cells grouped by (source, target)."""
        key = ("par", k)
        idx = self._cache.get(key)
        if idx is None:
            idx = defaultdict(list)
            for c in self.cells[k]:
                idx[(self.src[k][c], self.tgt[k][c])].append(c)
            idx = self._cache[key] = dict(idx)
        return idx

    def between(self, k, u, v):
        """k-cells from (k-1)-cell u to v."""
        return self.parallel_index(k).get((u, v), [])

    def composable_pairs(self, m, k):
        byt = self.by_boundary(k, m, 1)
        bys = self.by_boundary(k, m, 0)
        for b, lefts in sorted(byt.items()):
            rights = bys.get(b, [])
            for a in lefts:
                for c in rights:
                    yield a, c

    # -- equality ----------------------------------------------------------

    def key(self):
        return (self.n, tuple(self.cells), tuple(tuple(sorted(d.items())) for d in self.src),
                tuple(tuple(sorted(d.items())) for d in self.tgt),
                tuple(tuple(sorted(d.items())) for d in self.ident),
                tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.comp.items())),
                self.point)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NCat):
            return NotImplemented
        return (self.n == other.n and self.cells == other.cells and self.src == other.src
                and self.tgt == other.tgt and self.ident == other.ident
                and self.comp == other.comp and self.point == other.point)

    __hash__ = object.__hash__

    def same_shape(self, other):
        """Equality ignoring the base point."""
        return (self.n == other.n and self.cells == other.cells and self.src == other.src
                and self.tgt == other.tgt and self.ident == other.ident
                and self.comp == other.comp)

    def with_point(self, point):
        C = NCat(self.n, self.cells, self.src, self.tgt, self.ident, self.comp, point)
        return C

    def __repr__(self):
        p = f", point={self.point!r}" if self.point is not None else ""
        return f"NCat(n={self.n}, sizes={self.sizes()}{p})"


def ref(k, c):
    return CellRef(k, c)


# -- building ---------------------------------------------------------------

class Builder:
    """Incremental construction helper; ``close`` derives missing identity compositions."""

    def __init__(self, n):
        self.n = n
        self.cells = [[] for _ in range(n + 1)]
        self.src = [dict() for _ in range(n + 1)]
        self.tgt = [dict() for _ in range(n + 1)]
        self.ident = [dict() for _ in range(n + 1)]
        self.comp = {(m, k): {} for k in range(1, n + 1) for m in range(k)}

    def add(self, k, c, s=None, t=None):
        self.cells[k].append(c)
        if k > 0:
            self.src[k][c] = s
            self.tgt[k][c] = t
        return c

    def build(self, point=None):
        return NCat(self.n, self.cells, self.src, self.tgt, self.ident, self.comp, point)


# -- validation ----------------------------------------------------------------

def _structure(C, rep):
    n = C.n
    if len(C.cells) != n + 1:
        rep.add("structure", (), "cells must list dimensions 0..n")
        return
    for k in range(n + 1):
        cs = C._cellset(k)
        if k > 0:
            for name, mp in (("src", C.src[k]), ("tgt", C.tgt[k])):
                for c in C.cells[k]:
                    if c not in mp:
                        rep.add("structure", (CellRef(k, c),), f"missing {name}")
                    elif mp[c] not in C._cellset(k - 1):
                        rep.add("structure", (CellRef(k, c),), f"{name} {mp[c]!r} is not a {k-1}-cell")
                for c in mp:
                    if c not in cs:
                        rep.add("structure", (CellRef(k, c),), f"dangling {name} entry")
        if k < n:
            for c in C.cells[k]:
                if c not in C.ident[k]:
                    rep.add("structure", (CellRef(k, c),), "missing identity")
                elif C.ident[k][c] not in C._cellset(k + 1):
                    rep.add("structure", (CellRef(k, c),), "identity is not a cell")
            for c in C.ident[k]:
                if c not in cs:
                    rep.add("structure", (CellRef(k, c),), "dangling identity entry")
    for (m, k), tab in C.comp.items():
        if not (0 <= m < k <= n):
            if tab:
                rep.add("structure", (), f"composition table ({m},{k}) out of range")
            continue
        cs = C._cellset(k)
        for (a, b), c in tab.items():
            if a not in cs or b not in cs or c not in cs:
                rep.add("structure", (CellRef(k, a), CellRef(k, b)),
                        f"comp ({m},{k}) entry refers to unknown cells")
    if C.point is not None and C.point not in C._cellset(0):
        rep.add("structure", (CellRef(0, C.point),), "point is not an object")


def validate(C: NCat, stop_after=None) -> Report:
    """Check globular identities and axioms 1-5 exhaustively.

    Violations are reported (never raised); each carries a witness tuple of cells.
    """
    rep = Report()
    _structure(C, rep)
    if not rep.ok:
        return rep
    n = C.n

    def full():
        return stop_after is not None and len(rep.violations) >= stop_after

    # globular identities
    for k in range(2, n + 1):
        for c in C.cells[k]:
            x = (k, c)
            if C.s(C.s(x)) != C.s(C.t(x)) or C.t(C.s(x)) != C.t(C.t(x)):
                rep.add("globular", (CellRef(k, c),), "s/t of boundary disagree")
    for k in range(n):
        for c in C.cells[k]:
            i = C.e((k, c))
            if k + 1 >= 1 and (C.s(i) != (k, c) or C.t(i) != (k, c)):
                rep.add("globular", (CellRef(k, c),), "identity has wrong boundary")
    if not rep.ok:
        return rep

    # composition domains
    for k in range(1, n + 1):
        for m in range(k):
            tab = C.comp.get((m, k), {})
            pairs = set(C.composable_pairs(m, k))
            for a, b in sorted(pairs):
                if (a, b) not in tab:
                    rep.add("domain", (CellRef(k, a), CellRef(k, b)), f"missing *{m} composite")
            for (a, b) in sorted(tab):
                if (a, b) not in pairs:
                    rep.add("domain", (CellRef(k, a), CellRef(k, b)), f"*{m} defined on non-composable pair")
    if not rep.ok:
        return rep

    # axiom 1: boundaries of composites
    for k in range(1, n + 1):
        for m in range(k):
            for (a, b), c in sorted(C.comp[(m, k)].items()):
                x, y, z = (k, a), (k, b), (k, c)
                if m == k - 1:
                    ok = C.s(z) == C.s(x) and C.t(z) == C.t(y)
                else:
                    try:
                        ok = (C.s(z) == C.cmp(m, C.s(x), C.s(y))
                              and C.t(z) == C.cmp(m, C.t(x), C.t(y)))
                    except NotComposable:
                        ok = False
                if not ok:
                    rep.add("axiom1", (CellRef(k, a), CellRef(k, b)), f"boundary of *{m} composite")
                    if full():
                        return rep
    if not rep.ok:
        return rep          # later axioms presuppose well-typed composites

    # axiom 2: identities are neutral
    for k in range(1, n + 1):
        for m in range(k):
            for a in C.cells[k]:
                x = (k, a)
                l = C.e(C.s(x, m), k)
                r = C.e(C.t(x, m), k)
                if C.comp[(m, k)].get((l[1], a)) != a or C.comp[(m, k)].get((a, r[1])) != a:
                    rep.add("axiom2", (CellRef(k, a),), f"identity not neutral for *{m}")
                    if full():
                        return rep

    # axiom 3: identities are multiplicative
    for k in range(1, n):
        for m in range(k):
            for (a, b), c in sorted(C.comp[(m, k)].items()):
                ea, eb, ec = C.ident[k][a], C.ident[k][b], C.ident[k][c]
                if C.comp[(m, k + 1)].get((ea, eb)) != ec:
                    rep.add("axiom3", (CellRef(k, a), CellRef(k, b)), f"e(a *{m} b) != e(a) *{m} e(b)")
                    if full():
                        return rep

    # axiom 4: associativity
    for k in range(1, n + 1):
        for m in range(k):
            tab = C.comp[(m, k)]
            bys = C.by_boundary(k, m, 0)
            for (a, b), ab in sorted(tab.items()):
                for c in bys.get(C.t((k, b), m)[1], []):
                    if tab.get((ab, c)) != tab.get((a, tab.get((b, c)))):
                        rep.add("axiom4", (CellRef(k, a), CellRef(k, b), CellRef(k, c)),
                                f"*{m} not associative")
                        if full():
                            return rep

    # axiom 5: interchange
    for k in range(2, n + 1):
        for q in range(1, k):
            tq = C.comp[(q, k)]
            left = defaultdict(list)
            right = defaultdict(list)
            for (a, a2) in sorted(tq):
                for p in range(q):
                    left[(p, C.t((k, a), p)[1])].append((a, a2))
                    right[(p, C.s((k, a), p)[1])].append((a, a2))
            for p in range(q):
                tp = C.comp[(p, k)]
                for key in sorted(k_ for k_ in left if k_[0] == p):
                    for (a, a2) in left[key]:
                        for (b, b2) in right.get(key, []):
                            lhs = tp.get((tq[(a, a2)], tq[(b, b2)]))
                            rhs = tq.get((tp.get((a, b)), tp.get((a2, b2))))
                            if lhs != rhs:
                                rep.add("axiom5", tuple(CellRef(k, z) for z in (a, a2, b, b2)),
                                        f"interchange *{q} / *{p}")
                                if full():
                                    return rep
    return rep


# -- derived views and simple constructions ---------------------------------

def compose_cells(C: NCat, m: int, a, b):
    """comp[m][k](a, b) for same-dimension cells; raises on mismatch."""
    a, b = CellRef(*a), CellRef(*b)
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if m >= a.dim:
        raise ValueError(f"cannot {m}-compose {a.dim}-cells")
    return CellRef(*C.cmp(m, a, b))


def unit_cell(C: NCat, c, k: int):
    c = CellRef(*c)
    if not c.dim <= k <= C.n:
        raise ValueError(f"k={k} out of range for a {c.dim}-cell in a {C.n}-category")
    return CellRef(*C.e(c, k))


def hom(C: NCat, x, y) -> NCat:
    """The (n-1)-category of cells from object x to object y; ids are kept."""
    if isinstance(x, tuple):
        x = x[1]
    if isinstance(y, tuple):
        y = y[1]
    key = ("hom", x, y)
    if key in C._cache:
        return C._cache[key]
    if C.n == 0:
        raise ValueError("hom of a 0-category")
    n = C.n - 1
    cells = []
    for k in range(1, C.n + 1):
        sel = [c for c in C.cells[k] if C.s((k, c), 0)[1] == x and C.t((k, c), 0)[1] == y]
        cells.append(sel)
    sets = [set(cs) for cs in cells]
    src = [dict()] + [{c: C.src[k + 1][c] for c in cells[k]} for k in range(1, n + 1)]
    tgt = [dict()] + [{c: C.tgt[k + 1][c] for c in cells[k]} for k in range(1, n + 1)]
    ident = [{c: C.ident[k + 1][c] for c in cells[k]} for k in range(n)] + [dict()]
    comp = {}
    for k in range(1, n + 1):
        for m in range(k):
            tab = C.comp[(m + 1, k + 1)]
            comp[(m, k)] = {(a, b): c for (a, b), c in tab.items() if a in sets[k] and b in sets[k]}
    H = NCat(n, cells, src, tgt, ident, comp)
    C._cache[key] = H
    return H


def terminal(n: int) -> NCat:
    b = Builder(n)
    for k in range(n + 1):
        b.add(k, "*", "*" if k else None, "*" if k else None)
        if k < n:
            b.ident[k]["*"] = "*"
        for m in range(k):
            b.comp[(m, k)][("*", "*")] = "*"
    return b.build(point="*")


def empty(n: int) -> NCat:
    return Builder(n).build()


def product(C: NCat, D: NCat):
    """Cartesian product with its two projections."""
    from .morphisms import Morphism
    if C.n != D.n:
        raise ValueError(f"dimension mismatch: {C.n} vs {D.n}")
    n = C.n

    def nm(a, b):
        return f"({a}|{b})"

    cells, src, tgt, ident = [], [], [], []
    p1, p2 = [], []
    for k in range(n + 1):
        cs = [(a, b) for a in C.cells[k] for b in D.cells[k]]
        cells.append([nm(a, b) for a, b in cs])
        p1.append({nm(a, b): a for a, b in cs})
        p2.append({nm(a, b): b for a, b in cs})
        if k:
            src.append({nm(a, b): nm(C.src[k][a], D.src[k][b]) for a, b in cs})
            tgt.append({nm(a, b): nm(C.tgt[k][a], D.tgt[k][b]) for a, b in cs})
        else:
            src.append({})
            tgt.append({})
        ident.append({nm(a, b): nm(C.ident[k][a], D.ident[k][b]) for a, b in cs} if k < n else {})
    comp = {}
    for k in range(1, n + 1):
        for m in range(k):
            tc, td = C.comp[(m, k)], D.comp[(m, k)]
            comp[(m, k)] = {(nm(a, b), nm(a2, b2)): nm(ca, cb)
                            for (a, a2), ca in tc.items() for (b, b2), cb in td.items()}
    point = nm(C.point, D.point) if C.point is not None and D.point is not None else None
    P = NCat(n, cells, src, tgt, ident, comp, point)
    return P, Morphism(P, C, p1), Morphism(P, D, p2)


def suspension_tilde(C: NCat) -> NCat:
    """Two objects *0, *1 with hom(*0, *1) = C and terminal endo-homs."""
    n = C.n + 1
    used = set().union(*[set(cs) for cs in C.cells]) if C.cells else set()
    a, b = "*0", "*1"
    while a in used or b in used:
        a, b = a + "'", b + "'"
    bl = Builder(n)
    bl.add(0, a)
    bl.add(0, b)
    for k in range(1, n + 1):
        bl.add(k, a, a, a)
        bl.add(k, b, b, b)
        for c in C.cells[k - 1]:
            if k == 1:
                bl.add(k, c, a, b)
            else:
                bl.add(k, c, C.src[k - 1][c], C.tgt[k - 1][c])
    for k in range(n):
        bl.ident[k][a] = a
        bl.ident[k][b] = b
        if k >= 1:
            for c in C.cells[k - 1]:
                bl.ident[k][c] = C.ident[k - 1][c]
    for k in range(1, n + 1):
        for m in range(k):
            tab = bl.comp[(m, k)]
            tab[(a, a)] = a
            tab[(b, b)] = b
            if m == 0:
                for c in C.cells[k - 1]:
                    tab[(a, c)] = c
                    tab[(c, b)] = c
            else:
                tab.update(C.comp[(m - 1, k - 1)])
    return bl.build()


# -- isomorphism search ----------------------------------------------------

def _signature(C, k, c):
    x = (k, c)
    sig = [C.is_identity(x)]
    if k < C.n:
        sig.append(len(C.by_boundary(k + 1, k, 0).get(c, ())))
        sig.append(len(C.by_boundary(k + 1, k, 1).get(c, ())))
    for m in range(k):
        sq = C.comp[(m, k)].get((c, c))
        sig.append(None if sq is None else (sq == c, C.is_identity((k, sq))))
    return tuple(sig)


def iso_search(C: NCat, D: NCat, budget: int = 100000):
    """Search for a structure-preserving bijection C -> D.

    Returns a list of per-dimension dicts, or None when no isomorphism exists.
    Raises :class:`Inconclusive` when more than ``budget`` assignments are tried.
    """
    if C.n != D.n or C.sizes() != D.sizes():
        return None
    n = C.n
    csig = {(k, c): _signature(C, k, c) for k in range(n + 1) for c in C.cells[k]}
    dsig = {(k, d): _signature(D, k, d) for k in range(n + 1) for d in D.cells[k]}
    from collections import Counter
    for k in range(n + 1):
        if Counter(csig[(k, c)] for c in C.cells[k]) != Counter(dsig[(k, d)] for d in D.cells[k]):
            return None
    # composite constraints touching each cell
    touch = defaultdict(list)
    for (m, k), tab in C.comp.items():
        for (a, b), c in tab.items():
            tri = (m, k, a, b, c)
            for z in {a, b, c}:
                touch[(k, z)].append(tri)
    order = []
    for k in range(n + 1):
        order += [(k, c) for c in sorted(C.cells[k], key=lambda c: (C.is_identity((k, c)), c))]
    f = [dict() for _ in range(n + 1)]
    used = [set() for _ in range(n + 1)]
    count = [0]

    def consistent(x, y):
        k, c = x
        if k > 0:
            if f[k - 1].get(C.src[k][c]) != D.src[k][y] or f[k - 1].get(C.tgt[k][c]) != D.tgt[k][y]:
                return False
            # identities are forced
            lower = C.src[k][c]
            if C.ident[k - 1][lower] == c and D.ident[k - 1][f[k - 1][lower]] != y:
                return False
            if C.ident[k - 1][lower] != c and D.ident[k - 1][f[k - 1][lower]] == y:
                return False
        f[k][c] = y
        ok = True
        for (m, kk, a, b, r) in touch[x]:
            fa, fb, fr = f[kk].get(a), f[kk].get(b), f[kk].get(r)
            if fa is not None and fb is not None and fr is not None:
                if D.comp[(m, kk)].get((fa, fb)) != fr:
                    ok = False
                    break
        del f[k][c]
        return ok

    def go(i):
        if i == len(order):
            return True
        k, c = order[i]
        for y in D.cells[k]:
            if y in used[k] or dsig[(k, y)] != csig[(k, c)]:
                continue
            count[0] += 1
            if count[0] > budget:
                raise Inconclusive(f"iso_search exceeded budget {budget}")
            if consistent((k, c), y):
                f[k][c] = y
                used[k].add(y)
                if go(i + 1):
                    return True
                del f[k][c]
                used[k].discard(y)
        return False

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, len(order) + 1000))
    try:
        found = go(0)
    finally:
        sys.setrecursionlimit(old)
    return [dict(m) for m in f] if found else None
