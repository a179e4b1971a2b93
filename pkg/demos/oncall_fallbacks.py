"""The demand is unsatisfiable; what is the closest we can get?

Three services share a pool of on-call engineers, with a conflict edge
wherever two services must never page the same person.  When the
requested staffing cannot be met, the planner wants every staffing
vector that serves as much of the demand as possible, each with a
concrete roster.
"""

from multicolor import Graph, Instance, is_permissible, oncall_solutions

SERVICES = ("ingest", "storage", "search")
CONFLICTS = {(0, 1), (1, 2)}
QUALIFIED = (
    frozenset({1}),
    frozenset({1, 2}),
    frozenset({2}),
)
REQUESTED = (1, 2, 1)


def main() -> None:
    graph = Graph.build(SERVICES, CONFLICTS)
    instance = Instance(graph, QUALIFIED, REQUESTED)

    if is_permissible(graph, QUALIFIED, REQUESTED) is None:
        print(f"Requested staffing {REQUESTED} cannot be met.")
    total = sum(REQUESTED)

    print("Best achievable alternatives:")
    for vector, roster in oncall_solutions(instance):
        shortfall = total - sum(vector)
        print(f"  staffing {vector} (short by {shortfall}):")
        for name, people in zip(SERVICES, roster):
            print(f"    {name}: engineers {sorted(people)}")


if __name__ == "__main__":
    main()
