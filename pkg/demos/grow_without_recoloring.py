"""Growing a live assignment without touching what is deployed.

A triangle of transmitters already runs a two-channel plan.  Demand
then rises to one channel everywhere it was zero, and the deployed
assignment must not change.  The constructive bound stacks fresh
channels above the existing band; the exact optimum from exhaustive
search tells us whether that construction wasted anything.
"""

from multicolor import Graph, extend_coloring

TOWERS = ("t1", "t2", "t3")
TRIANGLE = {(0, 1), (1, 2), (0, 2)}
DEPLOYED = (frozenset({1}), frozenset({2}), frozenset())
BAND = 2
NEW_DEMAND = (1, 1, 1)


def main() -> None:
    graph = Graph.build(TOWERS, TRIANGLE)
    print("Deployed plan on channels 1..2:")
    for name, channels in zip(TOWERS, DEPLOYED):
        print(f"  {name}: {sorted(channels)}")

    result = extend_coloring(graph, BAND, DEPLOYED, NEW_DEMAND, compute_exact=True)
    print(f"\nNew demand {NEW_DEMAND} met with channels 1..{result.bound}:")
    for name, channels in zip(TOWERS, result.coloring):
        print(f"  {name}: {sorted(channels)}")

    print(f"\nConstructive bound: {result.bound}")
    print(f"Exhaustive optimum: {result.exact}")
    verdict = "tight" if result.exact == result.bound else "loose here"
    print(f"The construction is {verdict}.")


if __name__ == "__main__":
    main()
