"""Which broadcast demands can a small radio network satisfy?

Four stations sit along a valley, each interfering only with its
neighbors.  Regulation limits every station to an approved frequency
list, and a demand asks for some number of frequencies per station.
This script computes the maximal satisfiable demand vectors once, then
answers arbitrary demand queries instantly by dominance.
"""

from multicolor import Graph, Instance, find_coloring, is_permissible, wmax

STATIONS = ("north", "hill", "river", "south")
INTERFERENCE = {(0, 1), (1, 2), (2, 3)}
APPROVED = (
    frozenset({1}),
    frozenset({1, 2}),
    frozenset({1, 2}),
    frozenset({2}),
)


def main() -> None:
    graph = Graph.build(STATIONS, INTERFERENCE)
    print("Approved frequencies per station:")
    for name, allowed in zip(STATIONS, APPROVED):
        print(f"  {name}: {sorted(allowed)}")

    maximal = wmax(graph, APPROVED)
    print("\nMaximal satisfiable demand vectors (stations in order):")
    for vector in maximal.vectors:
        print(f"  {vector}")

    for demand in ((1, 1, 1, 1), (0, 2, 0, 1), (1, 2, 1, 1)):
        witness = is_permissible(graph, APPROVED, demand, maximal)
        if witness is None:
            print(f"\nDemand {demand} is NOT satisfiable.")
            continue
        print(f"\nDemand {demand} is satisfiable (dominated by {witness}).")
        plan = find_coloring(Instance(graph, APPROVED, demand), maximal)
        for name, channels in zip(STATIONS, plan):
            print(f"  {name} broadcasts on {sorted(channels)}")


if __name__ == "__main__":
    main()
