"""Undirected multigraphs with dense integer ids, plus edge-list I/O."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphParseError(ValueError):
    """Raised for malformed edge-list or JSON graph documents."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Edge-indexed undirected multigraph.

    ``edges[i]`` is the endpoint pair of edge ``i``. ``adj[v]`` lists
    ``(neighbor, edge_id)`` pairs in edge order; a self-loop appears twice
    in the list of its vertex.
    """

    n: int
    edges: Sequence[tuple[int, int]]
    adj: list[list[tuple[int, int]]] = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        n = self.n
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
            adj[u].append((v, i))
            adj[v].append((u, i))
        object.__setattr__(self, "adj", adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and list(self.edges) == list(other.edges)

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.m})"

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "m": self.m, "edges": [list(e) for e in self.edges]})


@dataclass(frozen=True)
class Labeling:
    """Partition of the vertices; ``label[v]`` in ``0..class_count-1``."""

    label: tuple[int, ...]
    class_count: int

    @classmethod
    def from_labels(cls, raw: Iterable[int]) -> "Labeling":
        """Renumber arbitrary labels densely, in order of each class's smallest vertex."""
        remap: dict[int, int] = {}
        out = []
        for x in raw:
            y = remap.get(x)
            if y is None:
                y = remap[x] = len(remap)
            out.append(y)
        return cls(tuple(out), len(remap))

    def classes(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.class_count)]
        for v, c in enumerate(self.label):
            groups[c].append(v)
        return groups

    def refines(self, other: "Labeling") -> bool:
        """True if every class of ``self`` lies inside one class of ``other``."""
        seen: dict[int, int] = {}
        for a, b in zip(self.label, other.label):
            if seen.setdefault(a, b) != b:
                return False
        return True

    def __len__(self):
        return len(self.label)


def parse_graph(text: str) -> Multigraph:
    """Parse the ``n m`` header + ``u v`` lines edge-list format.

    Blank lines and ``#`` comments are skipped. Line numbers in errors are
    1-based positions in ``text``.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body))
    if not rows:
        raise GraphParseError("missing 'n m' header", 1)

    lineno, header = rows[0]
    n, m = _two_ints(header, lineno)
    if n < 0 or m < 0:
        raise GraphParseError(f"negative count in header {header!r}", lineno)
    if len(rows) - 1 != m:
        where = rows[m + 1][0] if len(rows) - 1 > m else rows[-1][0]
        raise GraphParseError(f"header announces {m} edges, found {len(rows) - 1}", where)

    edges = []
    for lineno, body in rows[1:]:
        u, v = _two_ints(body, lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphParseError(f"vertex id {x} out of range 0..{n - 1}", lineno)
        edges.append((u, v))
    return Multigraph(n, edges)


def _two_ints(body: str, lineno: int) -> tuple[int, int]:
    parts = body.split()
    if len(parts) != 2:
        raise GraphParseError(f"expected two integers, got {body!r}", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"expected two integers, got {body!r}", lineno) from None


def parse_graph_json(text: str) -> Multigraph:
    try:
        doc = json.loads(text)
        n = int(doc["n"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphParseError(f"bad JSON graph: {exc}") from None
    if "m" in doc and int(doc["m"]) != len(edges):
        raise GraphParseError(f"'m' is {doc['m']} but {len(edges)} edges are listed")
    if n < 0:
        raise GraphParseError("negative vertex count")
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge {i} = ({u}, {v}) out of range")
    return Multigraph(n, edges)


def load_graph(text: str) -> Multigraph:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph(text)


def strip_self_loops(g: Multigraph) -> tuple[Multigraph, list[int]]:
    """Drop self-loops. Returns the new graph and ``id_map[new_id] = old_id``."""
    id_map = [i for i, (u, v) in enumerate(g.edges) if u != v]
    if len(id_map) == g.m:
        return g, id_map
    return Multigraph(g.n, [g.edges[i] for i in id_map]), id_map


def connected_components(g: Multigraph) -> Labeling:
    label = [-1] * g.n
    adj = g.adj
    count = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = count
        stack = [s]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if label[y] < 0:
                    label[y] = count
                    stack.append(y)
        count += 1
    return Labeling(tuple(label), count)


def is_connected_without(g: Multigraph, removed: Iterable[int]) -> bool:
    """BFS connectivity of ``g`` after deleting the given edge ids."""
    if g.n <= 1:
        return True
    gone = set(removed)
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    reached = 1
    adj = g.adj
    while queue:
        x = queue.popleft()
        for y, e in adj[x]:
            if not seen[y] and e not in gone:
                seen[y] = True
                reached += 1
                queue.append(y)
    return reached == g.n


def side_of(g: Multigraph, removed: Iterable[int], start: int) -> set[int]:
    """Vertices reachable from ``start`` once ``removed`` edges are deleted."""
    gone = set(removed)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y, e in g.adj[x]:
            if y not in seen and e not in gone:
                seen.add(y)
                stack.append(y)
    return seen


@dataclass
class Subgraph:
    """A graph carved out of a parent, with id translations back to it."""

    graph: Multigraph
    vertices: list[int]  # local vertex -> parent vertex
    edge_ids: list[int]  # local edge -> parent edge


def induced_parts(g: Multigraph, labels: Labeling, keep_edge=None) -> list[Subgraph]:
    """Split ``g`` into one subgraph per label class.

    An edge is kept when both endpoints share a class and ``keep_edge(e)``
    (if given) is true. Local vertex ids follow ascending parent ids.
    """
    local = [0] * g.n
    parts_v: list[list[int]] = [[] for _ in range(labels.class_count)]
    for v, c in enumerate(labels.label):
        local[v] = len(parts_v[c])
        parts_v[c].append(v)
    parts_e: list[list[int]] = [[] for _ in range(labels.class_count)]
    lab = labels.label
    for i, (u, v) in enumerate(g.edges):
        c = lab[u]
        if c == lab[v] and (keep_edge is None or keep_edge(i)):
            parts_e[c].append(i)
    out = []
    for c in range(labels.class_count):
        ids = parts_e[c]
        edges = [(local[g.edges[i][0]], local[g.edges[i][1]]) for i in ids]
        out.append(Subgraph(Multigraph(len(parts_v[c]), edges), parts_v[c], ids))
    return out
