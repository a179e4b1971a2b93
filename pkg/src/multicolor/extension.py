"""Extending a precoloring to a larger demand without recoloring.

Given a valid partial coloring C0 on the palette {1..a0} and a demand
w at least C0's weight, the question is the smallest total palette that
admits a coloring of weight w containing C0 at every vertex.  An upper
bound comes from a two-block construction: grow C0 inside {1..a0} as far
as the demand allows, then meet the leftover demand with fresh colors
stacked above a0.  The exact optimum is available by brute-force search
for comparison; the bound is not known to be tight in general.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chromatic import weighted_chromatic
from .coloring import Coloring, _assemble, shrink, weight_of
from .instance import Graph, Instance
from .mis import enumerate_mis
from .oracle import DEFAULT_MAX_BRANCHES, brute_colorable
from .vectors import Vec, indicator, leq, vec_min, vec_sub
from .wmax import DEFAULT_MAX_VECTORS, WmaxSet, vecsum_families

__all__ = [
    "ExtensionResult",
    "delta_set",
    "exact_nonrecolor_chi",
    "extend_coloring",
    "wmax_constrained",
]


@dataclass(frozen=True)
class ExtensionResult:
    """Palette bound, a witness coloring on {1..bound}, optional exact value."""

    bound: int
    coloring: Coloring
    exact: int | None = None


def _validate_precoloring(graph: Graph, a0: int, c0: Coloring) -> None:
    if a0 < 1:
        raise ValueError("base palette size must be positive")
    if len(c0) != graph.n:
        raise ValueError("precoloring has wrong dimension")
    for v, held in enumerate(c0):
        bad = [x for x in held if not (1 <= x <= a0)]
        if bad:
            raise ValueError(
                f"vertex {graph.names[v]}: precolors {sorted(bad)} outside 1..{a0}"
            )
    for i, j in graph.edges:
        shared = c0[i] & c0[j]
        if shared:
            raise ValueError(
                f"edge {graph.names[i]}-{graph.names[j]}: precoloring shares "
                f"colors {sorted(shared)}"
            )


def wmax_constrained(
    graph: Graph,
    a0: int,
    c0: Coloring,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> WmaxSet:
    """Maximal demand vectors over {1..a0} among colorings containing c0.

    Under a uniform assignment every color subgraph is the whole graph, so
    the per-color family is simply the maximal independent sets containing
    that color's precolored vertices; the result is their colorwise sum
    set.  With an all-empty precoloring this is the unconstrained maximal
    set of the uniform assignment.
    """
    _validate_precoloring(graph, a0, c0)
    parent = enumerate_mis(graph)
    families: dict[int, tuple[Vec, ...]] = {}
    for x in range(1, a0 + 1):
        required = indicator((v for v in range(graph.n) if x in c0[v]), graph.n)
        families[x] = tuple(s for s in parent if leq(required, s))
    acc = vecsum_families(families, graph.n, max_vectors)
    return WmaxSet(vectors=tuple(sorted(acc)), certificates=acc, families=families)


def delta_set(
    graph: Graph,
    a0: int,
    c0: Coloring,
    w: Vec,
    constrained: WmaxSet | None = None,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> tuple[Vec, ...]:
    """Residual demands left after best use of the base palette, sorted.

    For each constrained maximal vector w1, the base palette can serve
    min(w, w1) of the demand, leaving w - min(w, w1) for new colors.
    """
    if len(w) != graph.n:
        raise ValueError("weight vector has wrong dimension")
    if constrained is None:
        constrained = wmax_constrained(graph, a0, c0, max_vectors)
    return tuple(sorted({vec_sub(w, vec_min(w, w1)) for w1 in constrained.vectors}))


def extend_coloring(
    graph: Graph,
    a0: int,
    c0: Coloring,
    w: Vec,
    compute_exact: bool = False,
    max_vectors: int = DEFAULT_MAX_VECTORS,
    max_branches: int = DEFAULT_MAX_BRANCHES,
) -> ExtensionResult:
    """Extend c0 to weight w, bounding the palette by construction.

    Scans the constrained maximal vectors in ascending order, keeps the
    first whose residual demand has the smallest chromatic number, and
    assembles the witness: the constrained certificate's coloring shrunk
    to min(w, w1) without touching c0's colors, plus the residual witness
    shifted into the fresh block {a0+1..bound}.

    Args:
        graph: the conflict graph.
        a0: size of the already-used palette {1..a0}.
        c0: valid precoloring using only colors from {1..a0}.
        w: target demand, at least c0's weight at every vertex.
        compute_exact: also run the brute-force optimum and attach it.

    Returns:
        ExtensionResult; its coloring has weight w, contains c0 at every
        vertex, and uses colors from {1..bound} only.
    """
    _validate_precoloring(graph, a0, c0)
    w0 = weight_of(c0)
    if len(w) != graph.n:
        raise ValueError("weight vector has wrong dimension")
    if not leq(w0, w):
        raise ValueError("target demand falls below the precoloring's weight")
    constrained = wmax_constrained(graph, a0, c0, max_vectors)
    chi_cache: dict[Vec, int] = {}
    best: tuple[int, Vec] | None = None
    for w1 in constrained.vectors:
        residual = vec_sub(w, vec_min(w, w1))
        if residual not in chi_cache:
            chi_cache[residual] = weighted_chromatic(graph, residual).chi
        chi = chi_cache[residual]
        if best is None or chi < best[0]:
            best = (chi, w1)
    residual_chi, base = best
    bound = a0 + residual_chi
    served = vec_min(w, base)
    full = _assemble(graph.n, constrained.certificates[base])
    protected = {v: c0[v] for v in range(graph.n)}
    kept = shrink(full, vec_sub(base, served), protected)
    fresh = weighted_chromatic(graph, vec_sub(w, served)).coloring
    combined = tuple(
        kept[v] | frozenset(x + a0 for x in fresh[v]) for v in range(graph.n)
    )
    exact = None
    if compute_exact:
        exact = exact_nonrecolor_chi(graph, a0, c0, w, max_branches)
    return ExtensionResult(bound=bound, coloring=combined, exact=exact)


def _probe_extension(
    graph: Graph, a: int, c0: Coloring, w: Vec, max_branches: int
) -> Coloring | None:
    """A weight-w coloring over {1..a} containing c0, by exhaustive search.

    Reduces to an ordinary coloring problem for the extra colors: vertex v
    needs w(v) - |c0(v)| further colors drawn from {1..a} minus its own and
    its neighbors' precolors, and any such coloring unions with c0 into a
    valid extension.
    """
    palette = frozenset(range(1, a + 1))
    lists = []
    for v in range(graph.n):
        blocked = set(c0[v])
        for u in graph.adjacency[v]:
            blocked |= c0[u]
        lists.append(palette - blocked)
    residual = tuple(w[v] - len(c0[v]) for v in range(graph.n))
    extra = brute_colorable(Instance(graph, tuple(lists), residual), max_branches)
    if extra is None:
        return None
    return tuple(c0[v] | extra[v] for v in range(graph.n))


def exact_nonrecolor_chi(
    graph: Graph,
    a0: int,
    c0: Coloring,
    w: Vec,
    max_branches: int = DEFAULT_MAX_BRANCHES,
) -> int:
    """Exact smallest palette admitting a weight-w extension of c0.

    Ascends from a0 and returns the first palette size that works.  Purely
    a reference value: independent of the constructive bound, and used to
    measure how far that bound is from optimal.

    Raises:
        ResourceLimitExceeded: if some probe's search space exceeds
            max_branches before a witness is found.
    """
    _validate_precoloring(graph, a0, c0)
    w0 = weight_of(c0)
    if not leq(w0, w):
        raise ValueError("target demand falls below the precoloring's weight")
    a = a0
    while True:
        if _probe_extension(graph, a, c0, w, max_branches) is not None:
            return a
        a += 1
