"""Two products on double loops of B^2 Z/m agree and commute."""
from ziqqurath import fixtures
from ziqqurath.functors import loop_monoid_check


def main():
    for m in (2, 3):
        C = fixtures.delooping(fixtures.cyclic(m), 2)
        rep = loop_monoid_check(C)
        loops = rep.info["omega2_elements"]
        tab = rep.info["omega2_table"]
        print(f"B^2 Z/{m}: {len(loops)} double loops, checks {'pass' if rep.ok else rep.first()}")
        w = max(len(x) for x in loops)
        print("  " + " " * w + " | " + " ".join(x.rjust(w) for x in loops))
        for a in loops:
            print("  " + a.rjust(w) + " | " + " ".join(tab[(a, b)].rjust(w) for b in loops))


if __name__ == "__main__":
    main()
