"""Fault-injected copies of fixture categories, each breaking one axiom."""

from ziqqurath.core import NCat
from ziqqurath import fixtures


def _copy(C):
    return NCat(C.n, C.cells, C.src, C.tgt, C.ident, C.comp, C.point)


def mutants():
    """(label, broken category, expected check name, a cell that must appear in the witness)."""
    out = []

    C = _copy(fixtures.interval(1))
    del C.src[1]["0>1"]
    out.append(("missing source", C, "structure", (1, "0>1")))

    C = _copy(fixtures.interval(1))
    C.tgt[1]["0>1"] = "7"
    out.append(("source not a cell", C, "structure", (1, "0>1")))

    C = _copy(fixtures.delooping(fixtures.cyclic(2)))
    del C.ident[0]["*"]
    out.append(("missing identity", C, "structure", (0, "*")))

    C = _copy(fixtures.interval(1))
    C.point = "nowhere"
    out.append(("dangling point", C, "structure", (0, "nowhere")))

    C = _copy(fixtures.interval(2))
    C.tgt[2]["0>1"] = "1>0"
    out.append(("non-globular 2-cell", C, "globular", (2, "0>1")))

    C = _copy(fixtures.interval(1))
    C.ident[0]["0"] = "0>1"
    out.append(("identity with wrong boundary", C, "globular", (0, "0")))

    C = _copy(fixtures.delooping(fixtures.cyclic(4)))
    del C.comp[(0, 1)][("g1", "g2")]
    out.append(("missing composite", C, "domain", (1, "g1")))

    C = _copy(fixtures.interval(1))
    C.comp[(0, 1)][("0>1", "1>0")] = "1>0"
    out.append(("composite with wrong boundary", C, "axiom1", (1, "0>1")))

    C = _copy(fixtures.delooping(fixtures.cyclic(4)))
    C.comp[(0, 1)][("g0", "g1")] = "g2"
    out.append(("identity not neutral", C, "axiom2", (1, "g1")))

    C = _copy(fixtures.delooping(fixtures.cyclic(3)))
    C.comp[(0, 1)][("g1", "g1")] = "g0"
    out.append(("non-associative", C, "axiom4", (1, "g1")))

    C = _copy(fixtures.delooping(fixtures.cyclic(2), 2))
    C.comp[(1, 2)][("g1", "g1")] = "g1"
    out.append(("interchange broken", C, "axiom5", (2, "g1")))
    return out
