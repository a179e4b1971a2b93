"""Graphs, list assignments, demand weights, and instance documents.

A problem instance is a simple undirected graph together with a per-vertex
finite set of allowed colors (the list assignment) and, optionally, a
per-vertex demand: how many distinct colors that vertex must receive.

Vertices are named in the instance file; their file order is canonical and
fixes coordinate i of every demand vector.  Induced subgraphs keep the
original indexing, so indicator vectors taken on a subgraph stay
n-dimensional and can be summed with vectors taken on any other subgraph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import InstanceFormatError, UnknownColorError
from .vectors import Vec

Lists = tuple[frozenset[int], ...]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph, possibly an induced subgraph.

    Attributes:
        names: names of all vertices of the *original* instance, in canonical
            order; fixes the dimension of every vector even for subgraphs.
        members: indices (into names) of the vertices present in this graph.
        edges: induced edges, each a pair (i, j) with i < j.
    """

    names: tuple[str, ...]
    members: frozenset[int]
    edges: frozenset[tuple[int, int]]

    @property
    def n(self) -> int:
        """Dimension of the vector space: vertex count of the full instance."""
        return len(self.names)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {i: set() for i in self.members}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {i: frozenset(nbrs) for i, nbrs in adj.items()}

    @staticmethod
    def build(names: tuple[str, ...], edges: set[tuple[int, int]]) -> "Graph":
        """Full graph on all named vertices; edges given as index pairs."""
        n = len(names)
        normalized = set()
        for i, j in edges:
            if i == j:
                raise InstanceFormatError(f"self-loop at vertex {names[i]!r}")
            if not (0 <= i < n and 0 <= j < n):
                raise InstanceFormatError(f"edge ({i},{j}) out of range")
            normalized.add((min(i, j), max(i, j)))
        return Graph(names=names, members=frozenset(range(n)), edges=frozenset(normalized))

    def induced(self, keep: frozenset[int]) -> "Graph":
        """Induced subgraph on a subset of this graph's members."""
        if not keep <= self.members:
            raise ValueError("induced vertex set is not a subset of the graph")
        kept_edges = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        return Graph(names=self.names, members=keep, edges=kept_edges)


@dataclass(frozen=True)
class Instance:
    """A graph with its list assignment and optional demand weights."""

    graph: Graph
    lists: Lists
    weights: Vec | None = None

    @property
    def n(self) -> int:
        return self.graph.n

    def require_weights(self) -> Vec:
        if self.weights is None:
            raise InstanceFormatError("instance has no weights")
        return self.weights

    def with_weights(self, weights: Vec) -> "Instance":
        if len(weights) != self.n:
            raise ValueError("weight vector has wrong dimension")
        return Instance(self.graph, self.lists, tuple(weights))


def all_colors(lists: Lists) -> tuple[int, ...]:
    """Union of all per-vertex color sets, ascending (fixes iteration order)."""
    colors: set[int] = set()
    for s in lists:
        colors |= s
    return tuple(sorted(colors))


def color_subgraph(graph: Graph, lists: Lists, color: int) -> Graph:
    """Subgraph induced by the vertices whose list contains `color`.

    Raises:
        UnknownColorError: if no vertex lists the color.
    """
    keep = frozenset(i for i in graph.members if color in lists[i])
    if not keep:
        raise UnknownColorError(f"color {color} appears in no vertex list")
    return graph.induced(keep)


def uniform_lists(n: int, a: int) -> Lists:
    """The a-uniform assignment: every vertex may use colors 1..a."""
    palette = frozenset(range(1, a + 1))
    return (palette,) * n


# ---------------------------------------------------------------------------
# instance documents

def _index_of(names: tuple[str, ...]) -> dict[str, int]:
    return {name: i for i, name in enumerate(names)}


def parse_instance(text: str) -> Instance:
    """Parse the canonical JSON instance document.

    Expected shape::

        { "vertices": ["v1", "v2", ...],
          "edges":    [["v1", "v2"], ...],
          "lists":    {"v1": [1, 2], ...},
          "weights":  {"v1": 1, ...} }        # weights optional

    Vertices missing from "lists" get an empty list.  Vertices missing from a
    present "weights" object get demand 0.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance document must be a JSON object")

    names_raw = doc.get("vertices")
    if not isinstance(names_raw, list) or not all(isinstance(v, str) for v in names_raw):
        raise InstanceFormatError('"vertices" must be a list of strings')
    if len(set(names_raw)) != len(names_raw):
        raise InstanceFormatError("duplicate vertex names")
    names = tuple(names_raw)
    index = _index_of(names)

    edges: set[tuple[int, int]] = set()
    for pair in doc.get("edges", []):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise InstanceFormatError(f"malformed edge {pair!r}")
        u, v = pair
        if u not in index or v not in index:
            raise InstanceFormatError(f"edge {pair!r} references an unknown vertex")
        if u == v:
            raise InstanceFormatError(f"self-loop at vertex {u!r}")
        i, j = index[u], index[v]
        edges.add((min(i, j), max(i, j)))
    graph = Graph.build(names, edges)

    lists_raw = doc.get("lists", {})
    if not isinstance(lists_raw, dict):
        raise InstanceFormatError('"lists" must be an object')
    per_vertex: list[frozenset[int]] = [frozenset()] * len(names)
    for name, colors in lists_raw.items():
        if name not in index:
            raise InstanceFormatError(f"list for unknown vertex {name!r}")
        if not isinstance(colors, list):
            raise InstanceFormatError(f"list of {name!r} must be an array")
        for c in colors:
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise InstanceFormatError(f"color {c!r} of {name!r} is not a positive integer")
        per_vertex[index[name]] = frozenset(colors)

    weights: Vec | None = None
    if "weights" in doc and doc["weights"] is not None:
        weights_raw = doc["weights"]
        if not isinstance(weights_raw, dict):
            raise InstanceFormatError('"weights" must be an object')
        demand = [0] * len(names)
        for name, value in weights_raw.items():
            if name not in index:
                raise InstanceFormatError(f"weight for unknown vertex {name!r}")
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise InstanceFormatError(f"weight {value!r} of {name!r} is not a non-negative integer")
            demand[index[name]] = value
        weights = tuple(demand)

    return Instance(graph=graph, lists=tuple(per_vertex), weights=weights)


def serialize_instance(inst: Instance) -> str:
    """Canonical JSON for an instance; parse(serialize(x)) == x."""
    names = inst.graph.names
    doc: dict = {
        "vertices": list(names),
        "edges": [[names[i], names[j]] for i, j in sorted(inst.graph.edges)],
        "lists": {names[i]: sorted(inst.lists[i]) for i in range(inst.n)},
    }
    if inst.weights is not None:
        doc["weights"] = {names[i]: inst.weights[i] for i in range(inst.n)}
    return json.dumps(doc, indent=2)


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS .col graph (`p edge n m` header, `e u v` lines).

    Vertices are 1-based in the format and named "1".."n" here so a JSON
    sidecar can refer to them.  Duplicate edges are collapsed; comment (`c`)
    lines are skipped.
    """
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4:
                raise InstanceFormatError(f"line {lineno}: malformed problem line")
            try:
                n = int(parts[2])
            except ValueError as exc:
                raise InstanceFormatError(f"line {lineno}: bad vertex count") from exc
        elif parts[0] == "e":
            if n is None:
                raise InstanceFormatError(f"line {lineno}: edge before problem line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except (IndexError, ValueError) as exc:
                raise InstanceFormatError(f"line {lineno}: malformed edge line") from exc
            if not (1 <= u <= n and 1 <= v <= n):
                raise InstanceFormatError(f"line {lineno}: edge endpoint out of range")
            if u == v:
                raise InstanceFormatError(f"line {lineno}: self-loop at vertex {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
    if n is None:
        raise InstanceFormatError("missing 'p edge n m' problem line")
    names = tuple(str(i) for i in range(1, n + 1))
    return Graph.build(names, edges)


def load_instance(path: str, sidecar: str | None = None) -> Instance:
    """Read an instance from a JSON document or a DIMACS .col file.

    A .col file carries only the graph; lists and weights may be supplied in
    a JSON sidecar of the shape {"lists": {...}, "weights": {...}} whose keys
    use the DIMACS vertex numbers as names ("1".."n").
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if not path.endswith(".col"):
        return parse_instance(text)

    graph = parse_dimacs(text)
    doc = {
        "vertices": list(graph.names),
        "edges": [[graph.names[i], graph.names[j]] for i, j in sorted(graph.edges)],
        "lists": {},
    }
    if sidecar is not None:
        with open(sidecar, encoding="utf-8") as fh:
            try:
                extra = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InstanceFormatError(f"sidecar is not valid JSON: {exc}") from exc
        if not isinstance(extra, dict):
            raise InstanceFormatError("sidecar must be a JSON object")
        doc["lists"] = extra.get("lists", {})
        if "weights" in extra:
            doc["weights"] = extra["weights"]
    return parse_instance(json.dumps(doc))
