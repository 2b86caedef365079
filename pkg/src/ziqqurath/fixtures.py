"""Small named n-categories and morphisms used by tests, demos and ``ziqqurath gen``."""

from __future__ import annotations

import itertools

from .core import Builder, NCat, terminal
from .morphisms import Morphism, product_morphism, product_cat


class Monoid:
    """A finite monoid given by element labels and a multiplication table; element 0 is the unit."""

    def __init__(self, name, size, mul):
        self.name = name
        self.size = size
        self.mul = mul
        self.labels = [f"g{i}" for i in range(size)]

    def is_group(self):
        return all(any(self.mul(a, b) == 0 for b in range(self.size)) for a in range(self.size))

    def is_abelian(self):
        return all(self.mul(a, b) == self.mul(b, a) for a in range(self.size) for b in range(self.size))


def cyclic(k):
    return Monoid(f"Z/{k}", k, lambda a, b: (a + b) % k)


def klein():
    return Monoid("Z/2xZ/2", 4, lambda a, b: a ^ b)


def symmetric3():
    perms = sorted(itertools.permutations(range(3)))
    perms.remove((0, 1, 2))
    perms = [(0, 1, 2)] + perms
    pos = {p: i for i, p in enumerate(perms)}

    def mul(a, b):
        p, q = perms[a], perms[b]
        return pos[tuple(q[p[i]] for i in range(3))]
    return Monoid("S3", 6, mul)


def idempotent_monoid():
    """{1, x} with x*x = x."""
    return Monoid("{1,x}", 2, lambda a, b: a | b)


GROUPS = {"Z2": lambda: cyclic(2), "Z3": lambda: cyclic(3), "Z4": lambda: cyclic(4),
          "V4": klein, "S3": symmetric3, "idem": idempotent_monoid}


def group_by_name(name):
    key = name.replace("/", "").replace("Z", "Z")
    if key.startswith("Z") and key[1:].isdigit():
        return cyclic(int(key[1:]))
    if key in GROUPS:
        return GROUPS[key]()
    raise ValueError(f"unknown group {name!r}")


def raise_dim(C: NCat, n: int) -> NCat:
    """Add identity-only top dimensions until C has dimension n (new cells named like their sources)."""
    while C.n < n:
        C = add_top_identities(C)
    return C


def add_top_identities(C: NCat) -> NCat:
    n = C.n
    cells = list(C.cells) + [C.cells[n]]
    src = list(C.src) + [{c: c for c in C.cells[n]}]
    tgt = list(C.tgt) + [{c: c for c in C.cells[n]}]
    ident = list(C.ident[:n]) + [{c: c for c in C.cells[n]}, {}]
    comp = dict(C.comp)
    for m in range(n):
        comp[(m, n + 1)] = dict(C.comp[(m, n)])
    comp[(n, n + 1)] = {(c, c): c for c in C.cells[n]}
    return NCat(n + 1, cells, src, tgt, ident, comp, C.point)


def delooping(G: Monoid, m: int = 1, n: int | None = None) -> NCat:
    """B^m G as an n-category: one cell "*" below dimension m, the elements at m, identities above."""
    if n is None:
        n = m
    if m > n:
        raise ValueError("m must be <= n")
    if m >= 2 and not G.is_abelian():
        raise ValueError(f"{G.name} is not abelian; B^{m} needs a commutative monoid")
    b = Builder(m)
    for k in range(m):
        b.add(k, "*", "*" if k else None, "*" if k else None)
        b.ident[k]["*"] = "*"
        for j in range(k):
            b.comp[(j, k)][("*", "*")] = "*"
    for g in G.labels:
        b.add(m, g, "*" if m else None, "*" if m else None)
    if m:
        b.ident[m - 1]["*"] = G.labels[0]
    for j in range(m):
        for x in range(G.size):
            for y in range(G.size):
                b.comp[(j, m)][(G.labels[x], G.labels[y])] = G.labels[G.mul(x, y)]
    C = b.build(point="*" if m else G.labels[0])
    return raise_dim(C, n)


def delooping_map(C: NCat, D: NCat, f, m: int = 1) -> Morphism:
    """Functor B^m G -> B^m H induced by the index map f."""
    maps = []
    for k in range(C.n + 1):
        if k < m:
            maps.append({"*": "*"})
        else:
            maps.append({c: f"g{f(int(c[1:]))}" for c in C.cells[k]})
    return Morphism(C, D, maps)


def quotient(k: int, d: int, m: int = 1, n: int | None = None) -> Morphism:
    """B^m(Z/k) -> B^m(Z/d), g_i -> g_{i mod d}."""
    if k % d:
        raise ValueError("d must divide k")
    return delooping_map(delooping(cyclic(k), m, n), delooping(cyclic(d), m, n), lambda i: i % d, m)


def inclusion_2z4(m: int = 1, n: int | None = None) -> Morphism:
    """B^m(Z/2) -> B^m(Z/4), g_i -> g_{2i}."""
    return delooping_map(delooping(cyclic(2), m, n), delooping(cyclic(4), m, n), lambda i: 2 * i, m)


def discrete(k: int, n: int = 0, names=None) -> NCat:
    names = list(names) if names is not None else [f"x{i}" for i in range(k)]
    C = NCat(0, [names], [dict()], [dict()], [dict()], {}, names[0] if names else None)
    return raise_dim(C, n)


def pair_groupoid(k: int, n: int = 1) -> NCat:
    """Objects 0..k-1 and exactly one 1-cell i>j between any two; identities named like objects."""
    b = Builder(1)
    objs = [str(i) for i in range(k)]

    def arr(i, j):
        return objs[i] if i == j else f"{i}>{j}"

    for o in objs:
        b.add(0, o)
    for i in range(k):
        b.ident[0][objs[i]] = objs[i]
        for j in range(k):
            b.add(1, arr(i, j), objs[i], objs[j])
    for i in range(k):
        for j in range(k):
            for l in range(k):
                b.comp[(0, 1)][(arr(i, j), arr(j, l))] = arr(i, l)
    C = b.build(point=objs[0] if objs else None)
    return raise_dim(C, n)


def interval(n: int = 1) -> NCat:
    return pair_groupoid(2, n)


def walking_arrow(n: int = 1) -> NCat:
    """0 -> 1 with no inverse."""
    b = Builder(1)
    b.add(0, "0")
    b.add(0, "1")
    b.add(1, "0", "0", "0")
    b.add(1, "1", "1", "1")
    b.add(1, "f", "0", "1")
    b.ident[0] = {"0": "0", "1": "1"}
    b.comp[(0, 1)] = {("0", "0"): "0", ("1", "1"): "1", ("0", "f"): "f", ("f", "1"): "f"}
    return raise_dim(b.build(point="0"), n)


def idempotent_delooping(m: int = 1, n: int | None = None) -> NCat:
    return delooping(idempotent_monoid(), m, n)


def identity(C: NCat) -> Morphism:
    return Morphism.identity(C)


def zero(C: NCat, D: NCat) -> Morphism:
    return Morphism.zero(C, D)


def ziqqurath_fixture_n2() -> Morphism:
    """A 2-groupoid morphism with non-trivial pi_1 and pi_2 behaviour.

    D(BZ/4 -> BZ/2) x (B^2 Z/4 -> B^2 Z/2): both factors are the mod-2 quotient.
    """
    F1 = quotient(4, 2, 1, 2)
    F2 = quotient(4, 2, 2, 2)
    return product_morphism(F1, F2)


def brown_fixture() -> Morphism:
    """BZ/4 -> BZ/2, the quotient used for the n = 1 six-term sequence."""
    return quotient(4, 2, 1, 1)


def standard_fixtures(max_n: int = 3):
    """Named fixture categories for n <= max_n (the acceptance fixture set)."""
    out = {}
    for n in range(max_n + 1):
        out[f"terminal({n})"] = terminal(n)
    for k in (1, 2, 3):
        for n in range(2):
            out[f"discrete{k}(n={n})"] = discrete(k, n)
    out["interval"] = interval(1)
    out["interval(n=2)"] = interval(2)
    out["pair-groupoid(3)"] = pair_groupoid(3)
    out["BZ/2"] = delooping(cyclic(2), 1)
    out["BZ/3"] = delooping(cyclic(3), 1)
    out["BZ/4"] = delooping(cyclic(4), 1)
    out["BZ/2(n=2)"] = delooping(cyclic(2), 1, 2)
    out["B2Z/2"] = delooping(cyclic(2), 2)
    out["B2Z/3"] = delooping(cyclic(3), 2)
    if max_n >= 3:
        out["B3Z/2"] = delooping(cyclic(2), 3)
    return out


def standard_morphisms():
    out = {}
    out["quotient Z/4->Z/2"] = quotient(4, 2)
    out["quotient Z/4->Z/2 (m=2)"] = quotient(4, 2, 2)
    out["inclusion Z/2->Z/4"] = inclusion_2z4()
    b2 = delooping(cyclic(2), 1)
    out["identity BZ/2"] = identity(b2)
    out["zero BZ/4->BZ/2"] = zero(delooping(cyclic(4)), b2)
    out["identity B2Z/2"] = identity(delooping(cyclic(2), 2))
    return out


def non_groupoids():
    return {"walking arrow": walking_arrow(1),
            "B{1,x}": idempotent_delooping(1),
            "B2{1,x}": idempotent_delooping(2)}


__all__ = [name for name in dir() if not name.startswith("_")]
