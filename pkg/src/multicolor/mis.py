"""Enumeration of maximal independent sets as indicator vectors.

"Maximal" throughout this package means inclusion-maximal: an independent
set not properly contained in another independent set.  (The independence
number, by contrast, is defined by maximum cardinality; see
chromatic.independence_number.)  Indicator vectors always live on the full
instance index space so that families taken on different subgraphs can be
summed coordinatewise.
"""

from __future__ import annotations

from collections.abc import Iterable

from .instance import Graph
from .vectors import Vec, indicator, support


def is_maximal_independent(graph: Graph, subset: Iterable[int]) -> bool:
    """True iff the subset is independent and no member vertex can be added.

    Raises:
        ValueError: if the subset is not contained in the graph's vertices.
    """
    chosen = frozenset(subset)
    if not chosen <= graph.members:
        raise ValueError("subset contains vertices outside the graph")
    adj = graph.adjacency
    for v in chosen:
        if adj[v] & chosen:
            return False
    for v in graph.members - chosen:
        if not (adj[v] & chosen):
            return False
    return True


def enumerate_mis(graph: Graph) -> tuple[Vec, ...]:
    """All inclusion-maximal independent sets, as sorted indicator vectors.

    Bron-Kerbosch with pivoting, run on the non-adjacency relation.  The
    empty graph has the empty set as its unique maximal independent set, so
    it yields the zero vector.
    """
    n = graph.n
    members = graph.members
    if not members:
        return ((0,) * n,)
    adj = graph.adjacency
    compat = {v: members - adj[v] - {v} for v in members}

    out: list[Vec] = []

    def extend(chosen: set[int], candidates: set[int], excluded: set[int]) -> None:
        if not candidates and not excluded:
            out.append(indicator(chosen, n))
            return
        pivot = max(candidates | excluded, key=lambda u: len(candidates & compat[u]))
        for v in sorted(candidates - compat[pivot]):
            extend(chosen | {v}, candidates & compat[v], excluded & compat[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    extend(set(), set(members), set())
    return tuple(sorted(out))


def restrict_to_subgraph(vec: Vec, subgraph: Graph) -> Vec:
    """Zero out the coordinates of vertices absent from the subgraph."""
    return tuple(x if i in subgraph.members else 0 for i, x in enumerate(vec))


def maximal_restrictions(family: Iterable[Vec], subgraph: Graph) -> tuple[Vec, ...]:
    """Restrictions of the family's sets that are maximal in the subgraph.

    For a family of maximal independent sets of the parent graph this yields
    exactly the maximal independent sets of the induced subgraph: any
    restriction is independent, the maximality filter keeps the sound ones,
    and every maximal set of the subgraph extends to one of the parent whose
    restriction coincides with it.
    """
    seen: set[Vec] = set()
    for vec in family:
        restricted = restrict_to_subgraph(vec, subgraph)
        if restricted in seen:
            continue
        if is_maximal_independent(subgraph, support(restricted)):
            seen.add(restricted)
    return tuple(sorted(seen))
