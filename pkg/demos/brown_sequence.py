"""Brown's six-term sequence for the quotient BZ/4 -> BZ/2, read off the tower."""
from ziqqurath import fixtures
from ziqqurath.exactness import ziqqurath


def main():
    F = fixtures.brown_fixture()
    Z = ziqqurath(F)
    print(f"F: {F.dom.sizes()} -> {F.cod.sizes()}, tower rows {Z.row_lengths()}")
    row = Z.bottom
    for name, X in zip(row.names, row.terms):
        print(f"  {name:8s} {X.size(0)} element(s)")
    for i, t in enumerate(row.triples):
        print(f"  at {row.names[i + 1]:8s} {t.verdict} ({t.orientation} kernel)")
    for a in row.annotations:
        if a.get("monoidal"):
            print(f"  {a['word']}: order {a['order']}, commutative {a['commutative']}")


if __name__ == "__main__":
    main()
