"""JSON serialization, fixture generators, DOT export and the ``ziqqurath`` command.

Document schema (one schema for every kind, discriminated by ``kind``)::

    {"kind": "ncat", "dim": n, "cells": [[...], ...], "src": [{...}, ...],
     "tgt": [...], "id": [...], "comp": {"m,k": {"a|b": c}}, "point": p}

    {"kind": "morphism", "dom": <ncat or path>, "cod": <ncat or path>, "maps": [...]}
    {"kind": "transf2", "dom": <morphism or path>, "cod": <morphism or path>, "comps": [...]}

Pair keys join the two ids with ``|``; a literal ``|`` or ``\\`` inside an id is
escaped with a backslash.  Composites with an identity are left implicit unless
``--explicit-identities`` is given; loading restores them.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import fixtures
from .core import NCat, Report, hom, product, terminal, validate
from .morphisms import Morphism, Transf2, law_suite, validate_morphism

MAX_COMFORTABLE_DIM = 4


class LoadError(ValueError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


# ---------------------------------------------------------------------------
# pair keys


def _esc(s):
    return s.replace("\\", "\\\\").replace("|", "\\|")


def pair_key(a, b):
    return f"{_esc(a)}|{_esc(b)}"


def split_pair(key):
    parts, cur, i = [], [], 0
    while i < len(key):
        ch = key[i]
        if ch == "\\" and i + 1 < len(key):
            cur.append(key[i + 1])
            i += 2
            continue
        if ch == "|":
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
        i += 1
    parts.append("".join(cur))
    if len(parts) != 2:
        raise LoadError(f"malformed pair key {key!r}")
    return parts[0], parts[1]


# ---------------------------------------------------------------------------
# documents


def _is_unit_entry(C, m, k, a, b, r):
    return (a == C.e(C.t((k, b), m), k)[1] and r == b) or (b == C.e(C.s((k, a), m), k)[1] and r == a)


def ncat_to_doc(C: NCat, explicit_identities=False):
    n = C.n
    comp = {}
    for (m, k), tab in sorted(C.comp.items()):
        ent = {}
        for (a, b), r in sorted(tab.items()):
            if not explicit_identities and _is_unit_entry(C, m, k, a, b, r):
                continue
            ent[pair_key(a, b)] = r
        comp[f"{m},{k}"] = ent
    return {"kind": "ncat", "dim": n,
            "cells": [list(cs) for cs in C.cells],
            "src": [dict(sorted(C.src[k].items())) for k in range(n + 1)],
            "tgt": [dict(sorted(C.tgt[k].items())) for k in range(n + 1)],
            "id": [dict(sorted(C.ident[k].items())) for k in range(n + 1)],
            "comp": comp, "point": C.point}


def ncat_from_doc(doc, check=True) -> NCat:
    try:
        n = int(doc["dim"])
        cells = [list(cs) for cs in doc["cells"]]
        src = [dict(d) for d in doc["src"]]
        tgt = [dict(d) for d in doc["tgt"]]
        ident = [dict(d) for d in doc["id"]]
    except (KeyError, TypeError, ValueError) as err:
        raise LoadError(f"bad ncat document: {err}") from None
    if not (len(cells) == len(src) == len(tgt) == n + 1 and len(ident) in (n, n + 1)):
        raise LoadError(f"per-dimension lists must have dim+1 = {n + 1} entries")
    if len(ident) == n:
        ident.append({})
    comp = {(m, k): {} for k in range(1, n + 1) for m in range(k)}
    for key, ent in doc.get("comp", {}).items():
        try:
            m, k = (int(x) for x in key.split(","))
        except ValueError:
            raise LoadError(f"bad comp key {key!r} (expected 'm,k')") from None
        if (m, k) not in comp:
            raise LoadError(f"comp key {key!r} out of range")
        for pk, r in ent.items():
            comp[(m, k)][split_pair(pk)] = r
    C = NCat(n, cells, src, tgt, ident, comp, doc.get("point"))
    # restore implicit unit composites
    try:
        for k in range(1, n + 1):
            for m in range(k):
                tab = C.comp[(m, k)]
                for c in C.cells[k]:
                    tab.setdefault((C.e(C.s((k, c), m), k)[1], c), c)
                    tab.setdefault((c, C.e(C.t((k, c), m), k)[1]), c)
    except KeyError as err:
        raise LoadError(f"dangling reference {err} while restoring identity composites") from None
    if check:
        rep = validate(C)
        if not rep.ok:
            raise LoadError(f"invalid n-category: {rep.first()}", rep)
    return C


def morphism_to_doc(F: Morphism, explicit_identities=False):
    return {"kind": "morphism", "dom": ncat_to_doc(F.dom, explicit_identities),
            "cod": ncat_to_doc(F.cod, explicit_identities),
            "maps": [dict(sorted(m.items())) for m in F.maps]}


def transf_to_doc(a: Transf2, explicit_identities=False):
    return {"kind": "transf2", "dom": morphism_to_doc(a.dom, explicit_identities),
            "cod": morphism_to_doc(a.cod, explicit_identities),
            "comps": [dict(sorted(m.items())) for m in a.comps]}


def to_doc(x, explicit_identities=False):
    if isinstance(x, NCat):
        return ncat_to_doc(x, explicit_identities)
    if isinstance(x, Transf2):
        return transf_to_doc(x, explicit_identities)
    if isinstance(x, Morphism):
        return morphism_to_doc(x, explicit_identities)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _resolve(ref, base, check, kind):
    if isinstance(ref, str):
        path = ref if os.path.isabs(ref) else os.path.join(base, ref)
        obj = load(path, check=check)
    else:
        obj = from_doc(ref, base, check)
    want = {"ncat": NCat, "morphism": Morphism, "transf2": Transf2}[kind]
    if not isinstance(obj, want) or (kind == "morphism" and isinstance(obj, Transf2)):
        raise LoadError(f"reference does not resolve to a {kind}")
    return obj


def from_doc(doc, base=".", check=True):
    if not isinstance(doc, dict):
        raise LoadError("document must be a JSON object")
    kind = doc.get("kind", "ncat")
    if kind == "ncat":
        return ncat_from_doc(doc, check)
    if kind == "morphism":
        C = _resolve(doc["dom"], base, check, "ncat")
        D = _resolve(doc["cod"], base, check, "ncat")
        F = Morphism(C, D, doc["maps"])
        if check:
            rep = validate_morphism(F)
            if not rep.ok:
                raise LoadError(f"invalid morphism: {rep.first()}", rep)
        return F
    if kind == "transf2":
        F = _resolve(doc["dom"], base, check, "morphism")
        G = _resolve(doc["cod"], base, check, "morphism")
        a = Transf2(F, G, doc["comps"])
        if check:
            rep = validate_morphism(a)
            if not rep.ok:
                raise LoadError(f"invalid 2-morphism: {rep.first()}", rep)
        return a
    raise LoadError(f"unknown kind {kind!r}")


def dumps(x, explicit_identities=False) -> str:
    return json.dumps(to_doc(x, explicit_identities), sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def loads(text, base=".", check=True):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise LoadError(f"parse error at line {err.lineno}, column {err.colno}: {err.msg}") from None
    return from_doc(doc, base, check)


def load(path, check=True):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return loads(text, os.path.dirname(os.path.abspath(path)), check)


def save(path, x, explicit_identities=False):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(x, explicit_identities))


# ---------------------------------------------------------------------------
# generators and DOT


def gen(fixture, k=None, n=None, m=1, group=None, d=None):
    """Named fixture generator with deterministic ids."""
    name = fixture.lower()
    if name == "terminal":
        return terminal(n if n is not None else 1)
    if name == "discrete":
        return fixtures.discrete(k if k is not None else 2, n or 0)
    if name == "interval":
        return fixtures.interval(n or 1)
    if name in ("pair-groupoid", "pair"):
        return fixtures.pair_groupoid(k if k is not None else 3, n or 1)
    if name == "delooping":
        G = fixtures.group_by_name(group or "Z2")
        return fixtures.delooping(G, m, n if n is not None else m)
    if name in ("quotient", "quotient-hom"):
        return fixtures.quotient(k if k is not None else 4, d if d is not None else 2, m,
                                 n if n is not None else m)
    raise ValueError(f"unknown fixture {fixture!r}")


def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(C: NCat, dims=(0, 1), identities=True) -> str:
    dims = set(dims)
    if not dims <= {0, 1, 2}:
        raise ValueError("export_dot supports dims within {0, 1, 2}")
    lines = ["digraph G {"]
    if 0 in dims:
        for o in C.cells[0]:
            lines.append(f"  {_q(o)};")
    if 1 in dims and C.n >= 1:
        for f in C.cells[1]:
            if not identities and C.is_identity((1, f)):
                continue
            lines.append(f"  {_q(C.src[1][f])} -> {_q(C.tgt[1][f])} [label={_q(f)}];")
    if 2 in dims and C.n >= 2:
        for a in C.cells[2]:
            if not identities and C.is_identity((2, a)):
                continue
            u, v = C.src[2][a], C.tgt[2][a]
            lines.append(f"  {_q('2:' + a)} [shape=note, label={_q(f'{a}: {u} => {v}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# command line


class Failed(Exception):
    pass


def _common(f):
    f = click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")(f)
    f = click.option("--no-validate", is_flag=True, help="Skip validation when loading inputs.")(f)
    f = click.option("--explicit-identities", is_flag=True, help="Write identity composites explicitly.")(f)
    return f


def _load(path, no_validate):
    try:
        x = load(path, check=not no_validate)
    except FileNotFoundError:
        raise click.UsageError(f"no such file: {path}")
    except LoadError as err:
        if err.report is not None:
            _print_report(err.report)
            raise Failed(str(err))
        raise click.UsageError(f"{path}: {err}")
    dim = x.n if isinstance(x, NCat) else x.dom.n if isinstance(x, Morphism) else x.C.n
    if dim > MAX_COMFORTABLE_DIM:
        click.echo(f"warning: dimension {dim} > {MAX_COMFORTABLE_DIM}; exhaustive checks may be slow", err=True)
    return x


def _print_report(rep: Report):
    for name, wit, detail in rep.violations[:20]:
        click.echo(f"  FAIL {name}: witness {list(wit)} {detail}")
    if len(rep.violations) > 20:
        click.echo(f"  ... {len(rep.violations) - 20} more")


def _rep_json(rep: Report):
    return {"ok": rep.ok, "violations": [{"check": n, "witness": [list(w) if isinstance(w, tuple) else w
                                                                  for w in wit], "detail": d}
                                         for n, wit, d in rep.violations]}


def _emit(as_json, data, lines):
    if as_json:
        click.echo(json.dumps(data, sort_keys=True, indent=1, default=str))
    else:
        for ln in lines:
            click.echo(ln)


def _finish(ok):
    if not ok:
        raise Failed("check failed")


def _output(x, out, explicit_identities, as_json, extra_lines=()):
    text = dumps(x, explicit_identities)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if as_json or not out:
        click.echo(text, nl=False)
    else:
        for ln in extra_lines:
            click.echo(ln)


@click.group()
def main_group():
    """Finite strict n-categories, h-pullbacks and exact sequences of n-groupoids."""


def main(argv=None):
    try:
        main_group.main(args=argv, prog_name="ziqqurath", standalone_mode=False)
    except Failed as err:
        click.echo(f"FAILED: {err}", err=True)
        sys.exit(1)
    except click.exceptions.Abort:
        sys.exit(1)
    except click.ClickException as err:
        err.show()
        sys.exit(2)
    except (ValueError, TypeError) as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    sys.exit(0)


@main_group.command("validate")
@click.argument("path")
@_common
def cmd_validate(path, as_json, no_validate, explicit_identities):
    """Validate an n-category, morphism or 2-morphism document."""
    x = _load(path, True)        # broken files must reach the validator
    if isinstance(x, NCat):
        rep = validate(x)
    else:
        rep = validate_morphism(x)
    _emit(as_json, _rep_json(rep), [f"{path}: {'ok' if rep.ok else 'INVALID'}"])
    if not rep.ok and not as_json:
        _print_report(rep)
    _finish(rep.ok)


@main_group.command("hom")
@click.argument("path")
@click.argument("x")
@click.argument("y")
@click.option("--out", default=None)
@_common
def cmd_hom(path, x, y, out, as_json, no_validate, explicit_identities):
    """The hom (n-1)-category between objects X and Y."""
    C = _load(path, no_validate)
    H = hom(C, x, y)
    _output(H, out, explicit_identities, as_json, [f"hom({x},{y}): sizes {H.sizes()}"])


@main_group.command("product")
@click.argument("path1")
@click.argument("path2")
@click.option("--out", default=None)
@_common
def cmd_product(path1, path2, out, as_json, no_validate, explicit_identities):
    """Cartesian product of two n-categories."""
    P, _, _ = product(_load(path1, no_validate), _load(path2, no_validate))
    _output(P, out, explicit_identities, as_json, [f"product: sizes {P.sizes()}"])


@main_group.command("hpb")
@click.argument("fpath")
@click.argument("gpath")
@click.option("--out", default=None)
@_common
def cmd_hpb(fpath, gpath, out, as_json, no_validate, explicit_identities):
    """Standard h-pullback of a cospan F, G."""
    from .limits import h_pullback
    pb = h_pullback(_load(fpath, no_validate), _load(gpath, no_validate))
    rep = validate(pb.apex)
    _output(pb.apex, out, explicit_identities, as_json,
            [f"h-pullback apex: sizes {pb.apex.sizes()}, valid: {rep.ok}"])
    _finish(rep.ok)


@main_group.command("pb")
@click.argument("fpath")
@click.argument("gpath")
@click.option("--out", default=None)
@_common
def cmd_pb(fpath, gpath, out, as_json, no_validate, explicit_identities):
    """Strict pullback of a cospan F, G."""
    from .limits import strict_pullback
    S, _, _ = strict_pullback(_load(fpath, no_validate), _load(gpath, no_validate))
    _output(S, out, explicit_identities, as_json, [f"strict pullback: sizes {S.sizes()}"])


@main_group.command("hkernel")
@click.argument("fpath")
@click.option("--out", default=None)
@_common
def cmd_hkernel(fpath, out, as_json, no_validate, explicit_identities):
    """Pointed h-kernel of a morphism."""
    from .limits import h_kernel
    fib = h_kernel(_load(fpath, no_validate))
    _output(fib.K, out, explicit_identities, as_json,
            [f"h-kernel: sizes {fib.K.sizes()}, point {fib.K.point}"])


def _functor_cmd(name, fn, doc):
    @main_group.command(name, help=doc)
    @click.argument("path")
    @click.option("--out", default=None)
    @_common
    def _cmd(path, out, as_json, no_validate, explicit_identities):
        x = _load(path, no_validate)
        y = fn(x)
        desc = y.sizes() if isinstance(y, NCat) else type(y).__name__
        _output(y, out, explicit_identities, as_json, [f"{name}: {desc}"])
    return _cmd


def _lazy(attr):
    def f(x):
        from . import functors
        return getattr(functors, attr)(x)
    return f


_functor_cmd("pi0", _lazy("pi0"), "pi_0 of an n-groupoid, morphism or 2-morphism.")
_functor_cmd("pi1", _lazy("pi1"), "pi_1 at the base point (reversed on 2-morphisms).")
_functor_cmd("omega", _lazy("omega"), "Loop space at the base point.")


@main_group.command("eta")
@click.argument("path")
@_common
def cmd_eta(path, as_json, no_validate, explicit_identities):
    """Unit eta: C -> D(pi0 C) and the triangle identities."""
    from .functors import eta_and_triangles
    C = _load(path, no_validate)
    e, rep = eta_and_triangles(C)
    _emit(as_json, {"eta": to_doc(e, explicit_identities)["maps"], "report": _rep_json(rep)},
          [f"eta: {C.sizes()} -> {e.cod.sizes()}; triangles {'ok' if rep.ok else 'FAIL'}"])
    if not rep.ok and not as_json:
        _print_report(rep)
    _finish(rep.ok)


@main_group.command("laws")
@click.argument("paths", nargs=3)
@click.option("--budget", default=5000, show_default=True, help="Instances per law.")
@_common
def cmd_laws(paths, budget, as_json, no_validate, explicit_identities):
    """Run the sesqui and sesqui^2 law suite over three n-categories."""
    C, D, E = (_load(p, no_validate) for p in paths)
    rep = law_suite(C, D, E, sample_budget=budget)
    lines = [f"{name:32s} {st['status']:8s} {st['instances']}" for name, st in rep.laws.items()]
    lines.append(f"total instances: {rep.total()}, failures: {len(rep.failures())}")
    _emit(as_json, {"laws": rep.laws, "total": rep.total(), "ok": rep.ok}, lines)
    _finish(rep.ok)


def _report_cmd(name, fn, doc):
    @main_group.command(name, help=doc)
    @click.argument("path")
    @_common
    def _cmd(path, as_json, no_validate, explicit_identities):
        rep = fn(_load(path, no_validate))
        _emit(as_json, _rep_json(rep), [f"{name}: {'pass' if rep.ok else 'FAIL'}"])
        if not rep.ok and not as_json:
            _print_report(rep)
        _finish(rep.ok)
    return _cmd


def _groupoid(C):
    from .exactness import is_ngroupoid
    return is_ngroupoid(C)


def _kv(C):
    from .exactness import kv_condition
    return kv_condition(C)


_report_cmd("groupoid", _groupoid, "Check the n-groupoid condition (weak invertibility of 1-cells).")
_report_cmd("kv", _kv, "Check the Kapranov-Voevodsky solvability axioms.")


@main_group.command("exact")
@click.argument("fpath")
@click.argument("phipath")
@click.argument("gpath")
@_common
def cmd_exact(fpath, phipath, gpath, as_json, no_validate, explicit_identities):
    """Decide exactness of a triple (F, phi, G)."""
    from .exactness import is_exact
    t = is_exact(_load(fpath, no_validate), _load(phipath, no_validate), _load(gpath, no_validate))
    _emit(as_json, {"exact": t.exact, "orientation": t.orientation, "witness": t.witness,
                    "kernel_sizes": t.kernel.apex.sizes()},
          [f"{t.verdict} ({t.orientation} kernel, sizes {t.kernel.apex.sizes()})"]
          + ([f"  witness: {t.witness}"] if not t.exact else []))
    _finish(t.exact)


@main_group.command("connect")
@click.argument("fpath")
@click.option("--beta", default=None)
@click.option("--beta2", default=None)
@_common
def cmd_connect(fpath, beta, beta2, as_json, no_validate, explicit_identities):
    """Connecting morphism nabla and 2-morphism sigma."""
    from .exactness import connecting
    c = connecting(_load(fpath, no_validate), beta, beta2)
    data = {"nabla": c.nabla.maps, "sigma": c.sigma.comps, "report": _rep_json(c.report),
            "exact": [t.exact for t in c.triples]}
    _emit(as_json, data, [f"nabla: {c.nabla.dom.sizes()} -> {c.nabla.cod.sizes()}",
                          f"checks: {'ok' if c.report.ok else 'FAIL'}; exact triples: {data['exact']}"])
    if not c.report.ok and not as_json:
        _print_report(c.report)
    _finish(c.report.ok)


@main_group.command("fibseq")
@click.argument("fpath")
@_common
def cmd_fibseq(fpath, as_json, no_validate, explicit_identities):
    """Seven-arrow fibration sequence with exactness at every triple."""
    from .exactness import fibration_sequence
    fs = fibration_sequence(_load(fpath, no_validate))
    rows = [f"{nm:10s} sizes {o.sizes()}" for nm, o in zip(fs.names, fs.objects)]
    rows += [f"exact at {fs.names[i + 1]}: {t.exact}" for i, t in enumerate(fs.triples)]
    _emit(as_json, {"names": fs.names, "sizes": [o.sizes() for o in fs.objects],
                    "exact": [t.exact for t in fs.triples], "report": _rep_json(fs.report)}, rows)
    _finish(fs.report.ok)


@main_group.command("ziqqurath")
@click.argument("fpath")
@_common
def cmd_ziqqurath(fpath, as_json, no_validate, explicit_identities):
    """Build the tower of exact sequences and check every triple."""
    from .exactness import ziqqurath
    z = ziqqurath(_load(fpath, no_validate))
    rows = []
    data = {"rows": [], "report": _rep_json(z.report)}
    for lv in z.levels:
        rows.append(f"level {lv.dim}: " + "  ->  ".join(f"{nm}[{s}]" for nm, s in zip(lv.names, lv.sizes())))
        rows.append(f"   exact: {[t.exact for t in lv.triples]}")
        data["rows"].append({"dim": lv.dim, "names": lv.names, "sizes": lv.sizes(),
                             "exact": [t.exact for t in lv.triples], "annotations": lv.annotations})
    _emit(as_json, data, rows)
    _finish(z.report.ok and all(t.exact for lv in z.levels for t in lv.triples))


@main_group.command("gen")
@click.argument("fixture")
@click.option("--k", type=int, default=None)
@click.option("--n", type=int, default=None)
@click.option("--m", type=int, default=1)
@click.option("--group", default=None, help="Z2, Z3, Z4, V4, S3, idem or Zk.")
@click.option("--d", type=int, default=None)
@click.option("--out", default=None)
@_common
def cmd_gen(fixture, k, n, m, group, d, out, as_json, no_validate, explicit_identities):
    """Generate a fixture: terminal, discrete, interval, pair-groupoid, delooping, quotient."""
    x = gen(fixture, k=k, n=n, m=m, group=group, d=d)
    _output(x, out, explicit_identities, as_json, [f"wrote {out}"])


@main_group.command("dot")
@click.argument("path")
@click.option("--dims", default="0,1", show_default=True)
@click.option("--no-identities", is_flag=True)
@_common
def cmd_dot(path, dims, no_identities, as_json, no_validate, explicit_identities):
    """Export objects, 1-cells and optionally 2-cells as a DOT digraph."""
    try:
        ds = {int(x) for x in dims.split(",") if x.strip()}
    except ValueError:
        raise click.UsageError(f"bad --dims {dims!r}")
    if not ds <= {0, 1, 2}:
        raise click.UsageError("--dims must be a subset of 0,1,2")
    C = _load(path, no_validate)
    click.echo(export_dot(C, ds, identities=not no_identities), nl=False)


if __name__ == "__main__":
    main()
