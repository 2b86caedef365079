"""The full tower for a 2-dimensional quotient, level by level, with timings."""
import time

from ziqqurath import fixtures
from ziqqurath.exactness import fibration_sequence, ziqqurath


def main():
    F = fixtures.ziqqurath_fixture_n2()
    t = time.time()
    fs = fibration_sequence(F)
    print("fibration sequence")
    for name, X in zip(fs.names, fs.objects):
        print(f"  {name:9s} sizes {X.sizes()}")
    print(f"  triples exact: {[x.exact for x in fs.triples]}")
    Z = ziqqurath(F)
    for lv in Z.levels:
        print(f"level {lv.dim} ({len(lv.terms)} terms)")
        for name, X in zip(lv.names, lv.terms):
            print(f"  {name:12s} {X.sizes()}")
        print(f"  exact: {all(x.exact for x in lv.triples)}")
    left = [a for a in Z.bottom.annotations if a.get("monoidal")]
    print("monoidal entries on the bottom row:")
    for a in left:
        print(f"  {a['word']:12s} order {a['order']} group-like {a['group_like']} commutative {a['commutative']}")
    print(f"report ok: {Z.report.ok}, {time.time() - t:.2f}s")


if __name__ == "__main__":
    main()
