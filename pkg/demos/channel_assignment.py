"""How many channels does a cellular ring need?

Five cells form a ring; adjacent cells must use disjoint channel sets.
Every cell draws from the same license band, so the question is the
size of the smallest band meeting a per-cell demand: the weighted
chromatic number.  The demand doubles mid-script to show the band is
not simply proportional to the largest cell.
"""

from multicolor import Graph, weighted_chromatic

CELLS = ("c1", "c2", "c3", "c4", "c5")
RING = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}


def report(demand) -> None:
    graph = Graph.build(CELLS, RING)
    result = weighted_chromatic(graph, demand)
    print(f"Demand {demand}:")
    print(f"  lower bound from independence: {result.lower_bound}")
    print(f"  channels needed: {result.chi}")
    for name, channels in zip(CELLS, result.coloring):
        print(f"  {name} uses {sorted(channels)}")


def main() -> None:
    report((1, 1, 1, 1, 1))
    print()
    report((2, 2, 2, 2, 2))


if __name__ == "__main__":
    main()
