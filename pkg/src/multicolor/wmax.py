"""Maximal demand vectors and the permissibility test.

The set of all satisfiable demand vectors of an instance is the downward
closure of one finite set: the coordinatewise sums, over the colors x of the
assignment, of indicator vectors of maximal independent sets of the x-color
subgraphs.  This module computes that generating set together with one
certificate per vector (the chosen maximal independent set for each color),
from which a coloring of that exact demand can be assembled directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import ResourceLimitExceeded
from .instance import Graph, Lists, all_colors, color_subgraph
from .mis import enumerate_mis, maximal_restrictions
from .vectors import Vec, in_hyperrectangle, leq, vec_add, zero

DEFAULT_MAX_VECTORS = 1_000_000

Certificate = Mapping[int, Vec]


@dataclass(frozen=True)
class WmaxSet:
    """The maximal demand vectors of an instance, with certificates.

    Attributes:
        vectors: the set itself, sorted lexicographically.
        certificates: for each vector, one mapping color -> indicator vector
            of a maximal independent set of that color's subgraph whose sum
            is the vector (the first decomposition found; others may exist).
        families: per color, the full family of maximal-independent-set
            indicator vectors of its subgraph.
    """

    vectors: tuple[Vec, ...]
    certificates: Mapping[Vec, Certificate]
    families: Mapping[int, tuple[Vec, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "certificates", MappingProxyType(dict(self.certificates)))
        object.__setattr__(self, "families", MappingProxyType(dict(self.families)))

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(sorted(self.families))


def color_mis_families(graph: Graph, lists: Lists) -> dict[int, tuple[Vec, ...]]:
    """Maximal independent sets of every color subgraph.

    Computed by enumerating the maximal independent sets of the whole graph
    once and keeping, per color, the restrictions that stay maximal in that
    color's subgraph; this reproduces each subgraph's own family exactly.
    """
    colors = all_colors(lists)
    if not colors:
        raise ValueError("the list assignment uses no colors anywhere")
    parent_family = enumerate_mis(graph)
    return {
        c: maximal_restrictions(parent_family, color_subgraph(graph, lists, c))
        for c in colors
    }


def vecsum_families(
    families: Mapping[int, tuple[Vec, ...]],
    n: int,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> dict[Vec, dict[int, Vec]]:
    """Distinct sums of one vector per family, each with a first certificate.

    Folds the families together one color at a time in ascending color
    order, deduplicating after every step, so the certificate kept for a
    sum is the first one encountered in that deterministic sweep.

    Raises:
        ResourceLimitExceeded: if an intermediate set outgrows max_vectors.
    """
    acc: dict[Vec, dict[int, Vec]] = {zero(n): {}}
    for c in sorted(families):
        nxt: dict[Vec, dict[int, Vec]] = {}
        for s in sorted(acc):
            cert = acc[s]
            for r in families[c]:
                total = vec_add(s, r)
                if total not in nxt:
                    nxt[total] = {**cert, c: r}
                    if len(nxt) > max_vectors:
                        raise ResourceLimitExceeded(
                            f"more than {max_vectors} intermediate demand vectors"
                        )
        acc = nxt
    return acc


def wmax(graph: Graph, lists: Lists, max_vectors: int = DEFAULT_MAX_VECTORS) -> WmaxSet:
    """All demand vectors that admit a coloring saturating every color.

    The worst case is exponential in the number of colors; intermediate
    set size is capped by max_vectors.

    Raises:
        ValueError: if no vertex lists any color.
        ResourceLimitExceeded: if an intermediate set outgrows max_vectors.
    """
    families = color_mis_families(graph, lists)
    acc = vecsum_families(families, graph.n, max_vectors)
    return WmaxSet(vectors=tuple(sorted(acc)), certificates=acc, families=families)


def wmax_uniform(graph: Graph, a: int, max_vectors: int = DEFAULT_MAX_VECTORS) -> WmaxSet:
    """Maximal demand vectors under the uniform assignment {1..a}.

    Every color subgraph equals the graph itself, so the sums are exactly
    the a-fold multiset sums of the graph's own maximal-independent-set
    vectors; enumerating multisets sidesteps the a-fold fold entirely.
    """
    if a < 0:
        raise ValueError("palette size must be non-negative")
    if a == 0:
        return WmaxSet(vectors=(zero(graph.n),), certificates={zero(graph.n): {}})
    family = enumerate_mis(graph)
    out: dict[Vec, dict[int, Vec]] = {}
    for picks in combinations_with_replacement(range(len(family)), a):
        total = zero(graph.n)
        for idx in picks:
            total = vec_add(total, family[idx])
        if total not in out:
            out[total] = {color: family[idx] for color, idx in enumerate(picks, start=1)}
            if len(out) > max_vectors:
                raise ResourceLimitExceeded(
                    f"more than {max_vectors} demand vectors for palette {a}"
                )
    families = {c: family for c in range(1, a + 1)}
    return WmaxSet(vectors=tuple(sorted(out)), certificates=out, families=families)


def is_permissible(
    graph: Graph,
    lists: Lists,
    w: Vec,
    wmax_set: WmaxSet | None = None,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> Vec | None:
    """Dominating witness from the maximal set if the demand is satisfiable.

    Returns the lexicographically smallest maximal vector above w, or None
    when w is not satisfiable.  A precomputed WmaxSet for the same instance
    may be passed to avoid recomputation.
    """
    if len(w) != graph.n:
        raise ValueError("weight vector has wrong dimension")
    if wmax_set is None:
        wmax_set = wmax(graph, lists, max_vectors)
    return in_hyperrectangle(w, wmax_set.vectors)


def prune_dominated(vecs: Iterable[Vec]) -> tuple[Vec, ...]:
    """Drop every vector lying below another member; closure is unchanged."""
    items = sorted(set(vecs))
    kept = [
        x
        for x in items
        if not any(x != y and leq(x, y) for y in items)
    ]
    return tuple(kept)
