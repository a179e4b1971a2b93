"""Brute-force reference semantics, deliberately naive.

Everything here answers questions by exhaustive search straight from the
definition of a valid coloring, sharing no code with the solver path beyond
the instance model and vector arithmetic.  Any disagreement between this
module and the solvers is a bug in exactly one of them.

Searches are guarded by an upfront estimate of the branch count
(product over vertices of C(|L(v)|, w(v)), default limit 1e7) so a stray
large instance fails fast instead of hanging.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb

from .errors import ResourceLimitExceeded
from .instance import Instance, uniform_lists
from .vectors import Vec, norm

DEFAULT_MAX_BRANCHES = 10_000_000

BruteColoring = tuple[frozenset[int], ...]


def _branch_estimate(inst: Instance) -> int:
    w = inst.require_weights()
    total = 1
    for i in range(inst.n):
        total *= comb(len(inst.lists[i]), w[i])
        if total == 0:
            return 0
    return total


def _guard(inst: Instance, max_branches: int) -> bool:
    """True if the instance is searchable; False if trivially infeasible."""
    estimate = _branch_estimate(inst)
    if estimate > max_branches:
        raise ResourceLimitExceeded(
            f"estimated {estimate} branches exceeds limit {max_branches}"
        )
    return estimate > 0


def _search(inst: Instance, collect_all: bool) -> list[BruteColoring]:
    """Backtrack vertex by vertex over w(v)-subsets of L(v).

    Subsets are tried in lexicographic order over ascending colors, so the
    first witness found is deterministic.
    """
    w = inst.require_weights()
    n = inst.n
    adjacency = inst.graph.adjacency
    choices: list[list[frozenset[int]]] = [
        [frozenset(c) for c in combinations(sorted(inst.lists[i]), w[i])]
        for i in range(n)
    ]
    found: list[BruteColoring] = []
    assigned: list[frozenset[int]] = [frozenset()] * n

    def place(i: int) -> bool:
        if i == n:
            found.append(tuple(assigned))
            return not collect_all
        earlier = [j for j in adjacency[i] if j < i]
        for pick in choices[i]:
            if any(pick & assigned[j] for j in earlier):
                continue
            assigned[i] = pick
            if place(i + 1):
                return True
        assigned[i] = frozenset()
        return False

    place(0)
    return found


def brute_colorable(inst: Instance, max_branches: int = DEFAULT_MAX_BRANCHES) -> BruteColoring | None:
    """First valid coloring in search order, or None if none exists."""
    if not _guard(inst, max_branches):
        return None
    found = _search(inst, collect_all=False)
    return found[0] if found else None


def brute_all_colorings(inst: Instance, max_branches: int = DEFAULT_MAX_BRANCHES) -> set[BruteColoring]:
    """The complete set of valid colorings."""
    if not _guard(inst, max_branches):
        return set()
    return set(_search(inst, collect_all=True))


def brute_chromatic(inst_or_weights, weights: Vec | None = None, max_branches: int = DEFAULT_MAX_BRANCHES) -> int:
    """Smallest palette size a such that colors {1..a} satisfy the demand.

    Accepts (graph, weights) or an Instance whose lists are ignored.
    """
    if weights is None:
        graph = inst_or_weights.graph
        w = inst_or_weights.require_weights()
    else:
        graph = inst_or_weights
        w = weights
    if norm(w) == 0:
        return 0
    a = 1
    while True:
        probe = Instance(graph, uniform_lists(graph.n, a), tuple(w))
        if brute_colorable(probe, max_branches) is not None:
            return a
        a += 1


def brute_oncall(inst: Instance, max_branches: int = DEFAULT_MAX_BRANCHES) -> set[Vec]:
    """All satisfiable demands below the requested one with maximal total.

    Scans candidates w* <= w in descending-norm layers and stops at the
    first layer containing a satisfiable vector; every solution shares that
    norm, so lower layers cannot contribute.
    """
    w = inst.require_weights()
    by_norm: dict[int, list[Vec]] = {}
    for cand in product(*(range(x + 1) for x in w)):
        by_norm.setdefault(norm(cand), []).append(cand)
    for total in sorted(by_norm, reverse=True):
        hits = {
            cand
            for cand in by_norm[total]
            if brute_colorable(inst.with_weights(cand), max_branches) is not None
        }
        if hits:
            return hits
    return {tuple(0 for _ in w)}


def brute_permissible_set(inst: Instance, cap: Vec, max_branches: int = DEFAULT_MAX_BRANCHES) -> set[Vec]:
    """All satisfiable demands w* <= cap; exhaustive, for small caps only."""
    out = set()
    for cand in product(*(range(x + 1) for x in cap)):
        if brute_colorable(inst.with_weights(cand), max_branches) is not None:
            out.add(cand)
    return out


def brute_is_permissible(inst: Instance, w: Vec, max_branches: int = DEFAULT_MAX_BRANCHES) -> bool:
    if len(w) != inst.n:
        raise ValueError("weight vector has wrong dimension")
    if not all(x >= 0 for x in w):
        raise ValueError("weights must be non-negative")
    return brute_colorable(inst.with_weights(w), max_branches) is not None
