"""Building, validating, and enumerating list multicolorings.

A coloring assigns each vertex a finite set of colors drawn from its list,
with adjacent vertices receiving disjoint sets.  Demands are met exactly:
vertex v gets precisely w(v) colors.  Colorings of maximal demand vectors
are assembled from per-color maximal independent sets; everything else is
obtained by deleting colors from those.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Mapping

from .errors import NotPermissibleError
from .instance import Instance, color_subgraph
from .mis import is_maximal_independent
from .vectors import Vec, in_hyperrectangle, leq, support, vec_sub, zero
from .wmax import DEFAULT_MAX_VECTORS, Certificate, WmaxSet, wmax

Coloring = tuple[frozenset[int], ...]


def weight_of(coloring: Coloring) -> Vec:
    return tuple(len(c) for c in coloring)


def decompose(coloring: Coloring) -> dict[int, Coloring]:
    """Split a coloring into its single-color sublists.

    The sublist for color x holds {x} exactly at the vertices colored x.
    Per-vertex union of the sublists restores the coloring, and their
    weight vectors sum to its weight vector.
    """
    n = len(coloring)
    out: dict[int, Coloring] = {}
    for x in sorted(set().union(*coloring) if coloring else ()):
        out[x] = tuple(
            frozenset((x,)) if x in coloring[v] else frozenset() for v in range(n)
        )
    return out


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violations: tuple[str, ...] = ()


def is_valid_coloring(inst: Instance, coloring: Coloring) -> ValidationResult:
    """Check a proposed coloring against an instance's demands.

    Verifies dimension, list containment, exact per-vertex set sizes, and
    disjointness across every edge; all violations are collected, not just
    the first.
    """
    g = inst.graph
    w = inst.require_weights()
    problems: list[str] = []
    if len(coloring) != g.n:
        return ValidationResult(False, (f"expected {g.n} vertex entries, got {len(coloring)}",))
    for v in range(g.n):
        extra = coloring[v] - inst.lists[v]
        if extra:
            problems.append(
                f"{g.names[v]}: colors {sorted(extra)} not in its list"
            )
        if len(coloring[v]) != w[v]:
            problems.append(
                f"{g.names[v]}: has {len(coloring[v])} colors, demand is {w[v]}"
            )
    for i, j in sorted(g.edges):
        shared = coloring[i] & coloring[j]
        if shared:
            problems.append(
                f"edge {g.names[i]}-{g.names[j]}: shares colors {sorted(shared)}"
            )
    return ValidationResult(not problems, tuple(problems))


def _assemble(n: int, certificate: Certificate) -> Coloring:
    """Certificate to coloring, trusting the entries."""
    sets: list[set[int]] = [set() for _ in range(n)]
    for x, vec in certificate.items():
        for v, bit in enumerate(vec):
            if bit:
                sets[v].add(x)
    return tuple(frozenset(s) for s in sets)


def build_max_coloring(inst: Instance, certificate: Certificate) -> Coloring:
    """Assemble the coloring whose color classes a certificate lists.

    Vertex v receives color x exactly when the certificate's independent
    set for x contains v; the result's weight is the certificate's sum.

    Raises:
        UnknownColorError: if a certificate color appears in no list.
        ValueError: if some entry is not maximal independent in its
            color's subgraph.
    """
    for x in sorted(certificate):
        sub = color_subgraph(inst.graph, inst.lists, x)
        if not is_maximal_independent(sub, support(certificate[x])):
            raise ValueError(
                f"certificate entry for color {x} is not maximal independent "
                "in that color's subgraph"
            )
    return _assemble(inst.graph.n, certificate)


def shrink(
    coloring: Coloring,
    amount: Vec,
    protected: Mapping[int, frozenset[int]] | None = None,
) -> Coloring:
    """Delete amount[v] colors from each vertex's set, largest colors first.

    Colors listed in protected (a per-vertex mapping) are never removed.
    Deleting colors preserves validity; only the weight drops.

    Raises:
        ValueError: if some vertex lacks enough removable colors.
    """
    if len(amount) != len(coloring):
        raise ValueError("shrink amount has wrong dimension")
    out: list[frozenset[int]] = []
    for v, have in enumerate(coloring):
        keep_always = protected.get(v, frozenset()) if protected else frozenset()
        removable = sorted(have - keep_always, reverse=True)
        if amount[v] > len(removable):
            raise ValueError(f"vertex {v}: cannot remove {amount[v]} colors")
        out.append(have - set(removable[: amount[v]]))
    return tuple(out)


def enumerate_subcolorings(coloring: Coloring, amount: Vec) -> Iterator[Coloring]:
    """All colorings obtained by deleting amount[v] colors at each vertex.

    Yields in the lexicographic order of the kept color combinations,
    vertices varying slowest to fastest.
    """
    if len(amount) != len(coloring):
        raise ValueError("deletion amount has wrong dimension")
    per_vertex: list[list[frozenset[int]]] = []
    for v, have in enumerate(coloring):
        k = len(have) - amount[v]
        if k < 0:
            raise ValueError(f"vertex {v}: cannot remove {amount[v]} colors")
        per_vertex.append([frozenset(kept) for kept in combinations(sorted(have), k)])
    for choice in product(*per_vertex):
        yield tuple(choice)


def find_coloring(
    inst: Instance,
    wmax_set: WmaxSet | None = None,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> Coloring:
    """One coloring meeting the instance's demands.

    Picks the lexicographically smallest maximal vector dominating the
    demand, builds its certificate coloring, and deletes the surplus
    colors (largest first at each vertex), so the output is deterministic.

    Raises:
        NotPermissibleError: if the demand is not satisfiable.
    """
    w = inst.require_weights()
    if wmax_set is None:
        wmax_set = wmax(inst.graph, inst.lists, max_vectors)
    witness = in_hyperrectangle(w, wmax_set.vectors)
    if witness is None:
        raise NotPermissibleError(w)
    full = _assemble(inst.graph.n, wmax_set.certificates[witness])
    return shrink(full, vec_sub(witness, w))


def _decompositions(
    target: Vec,
    colors: tuple[int, ...],
    families: Mapping[int, tuple[Vec, ...]],
    partial: Vec,
    chosen: dict[int, Vec],
) -> Iterator[Certificate]:
    """Every choice of one independent set per color summing to target."""
    if not colors:
        if partial == target:
            yield dict(chosen)
        return
    remaining = len(colors)
    if any(t - p > remaining or p > t for p, t in zip(partial, target)):
        return
    c, rest = colors[0], colors[1:]
    for r in families[c]:
        nxt = tuple(p + b for p, b in zip(partial, r))
        if leq(nxt, target):
            chosen[c] = r
            yield from _decompositions(target, rest, families, nxt, chosen)
            del chosen[c]


def iter_colorings(
    inst: Instance,
    wmax_set: WmaxSet | None = None,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> Iterator[Coloring]:
    """All colorings of the instance, lazily, without repetition.

    Every coloring of demand w arises by deleting colors from a coloring of
    some maximal vector above w, so the stream walks the dominating maximal
    vectors in ascending order, enumerates every per-color decomposition of
    each, and emits the unseen deletions.  Order is deterministic but not
    globally sorted.
    """
    w = inst.require_weights()
    if wmax_set is None:
        wmax_set = wmax(inst.graph, inst.lists, max_vectors)
    colors = wmax_set.colors
    n = inst.graph.n
    seen: set[Coloring] = set()
    for target in wmax_set.vectors:
        if not leq(w, target):
            continue
        surplus = vec_sub(target, w)
        for cert in _decompositions(target, colors, wmax_set.families, zero(n), {}):
            full = _assemble(n, cert)
            for sub in enumerate_subcolorings(full, surplus):
                if sub not in seen:
                    seen.add(sub)
                    yield sub


def enumerate_colorings(
    inst: Instance,
    limit: int | None = None,
    wmax_set: WmaxSet | None = None,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> tuple[Coloring, ...]:
    """The stream of iter_colorings, collected; limit truncates it."""
    out: list[Coloring] = []
    for coloring in iter_colorings(inst, wmax_set, max_vectors):
        out.append(coloring)
        if limit is not None and len(out) >= limit:
            break
    return tuple(out)
