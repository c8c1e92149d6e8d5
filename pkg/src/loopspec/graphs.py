"""Undirected graphs with self-loops: data model, connectivity, edge-list I/O.

Vertices are numbered 1..n. An edge is an unordered pair stored canonically
as (i, j) with i <= j; the pair (i, i) is a self-loop. Multiple edges are not
representable. Graph values are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

__all__ = [
    "Edge",
    "Graph",
    "ComponentPartition",
    "EdgeListError",
    "new_graph",
    "add_edge",
    "graph_from_edges",
    "strip_self_loops",
    "connected_components",
    "is_pseudo_connected",
    "max_degree",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
    "write_edge_list",
]

Edge = tuple[int, int]


class EdgeListError(ValueError):
    """Malformed edge-list text; ``line`` is the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices 1..n, self-loops allowed, multi-edges not.

    ``edges`` holds canonical pairs only: (i, j) with 1 <= i <= j <= n.
    Construct through :func:`new_graph` / :func:`add_edge` /
    :func:`graph_from_edges` unless the pairs are already canonical.
    """

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            i, j = e
            if i > j:
                raise ValueError(f"edge {e} not canonical (expected i <= j)")
            if i < 1 or j > self.n:
                raise ValueError(f"edge {e} out of range 1..{self.n}")

    def sorted_edges(self) -> list[Edge]:
        """Edges in canonical order (lexicographic on the (i, j) pairs)."""
        return sorted(self.edges)

    def nonloop_edges(self) -> list[Edge]:
        return sorted(e for e in self.edges if e[0] != e[1])

    def self_loops(self) -> list[int]:
        """Vertices carrying a self-loop, ascending."""
        return sorted(i for i, j in self.edges if i == j)

    @property
    def loop_count(self) -> int:
        return sum(1 for i, j in self.edges if i == j)

    def has_edge(self, i: int, j: int) -> bool:
        """Order-insensitive membership test: (i, j) and (j, i) are the same edge."""
        return (min(i, j), max(i, j)) in self.edges

    def degree(self, v: int) -> int:
        """Incident non-loop edges plus 1 per self-loop at ``v``."""
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return sum(1 for i, j in self.edges if i == v or j == v)


@dataclass(frozen=True)
class ComponentPartition:
    """Per-vertex component labels (vertex v -> labels[v-1]) in 1..count.

    Two vertices share a label iff a path of non-loop edges connects them;
    isolated vertices, looped or not, are singleton components.
    """

    labels: tuple[int, ...]
    count: int


def new_graph(n: int) -> Graph:
    """Graph with ``n`` vertices and no edges; n must be >= 1."""
    return Graph(n)


def add_edge(g: Graph, i: int, j: int) -> Graph:
    """Return ``g`` extended by the undirected edge {i, j} (i == j adds a loop).

    Rejects endpoints outside 1..n and duplicates, in either orientation.
    """
    if not (1 <= i <= g.n and 1 <= j <= g.n):
        raise ValueError(f"vertex out of range 1..{g.n}: ({i}, {j})")
    e = (i, j) if i <= j else (j, i)
    if e in g.edges:
        raise ValueError(f"duplicate edge {e}")
    return Graph(g.n, g.edges | {e})


def graph_from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from endpoint pairs in any orientation, rejecting duplicates."""
    edges: set[Edge] = set()
    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"vertex out of range 1..{n}: ({i}, {j})")
        e = (i, j) if i <= j else (j, i)
        if e in edges:
            raise ValueError(f"duplicate edge {e}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def strip_self_loops(g: Graph) -> Graph:
    """Same vertices, all loops removed. Idempotent."""
    return Graph(g.n, frozenset(e for e in g.edges if e[0] != e[1]))


def connected_components(g: Graph) -> ComponentPartition:
    """Partition vertices by non-loop-edge reachability (BFS, labels by first visit)."""
    adj: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    for i, j in g.edges:
        if i != j:
            adj[i].append(j)
            adj[j].append(i)
    labels = [0] * g.n
    count = 0
    for start in range(1, g.n + 1):
        if labels[start - 1]:
            continue
        count += 1
        labels[start - 1] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not labels[w - 1]:
                    labels[w - 1] = count
                    queue.append(w)
    return ComponentPartition(tuple(labels), count)


def is_pseudo_connected(g: Graph) -> bool:
    """True iff every vertex has an incident edge (a loop counts) and every
    connected component contains at least one vertex with a self-loop.

    An isolated vertex is a loopless singleton component, so the
    per-component loop rule also enforces the minimum-degree clause.
    """
    parts = connected_components(g)
    component_has_loop = [False] * (parts.count + 1)
    for v in g.self_loops():
        component_has_loop[parts.labels[v - 1]] = True
    return all(component_has_loop[1:])


def max_degree(g: Graph) -> int:
    """Maximum vertex degree; a self-loop adds 1 to its vertex. 0 for edgeless graphs."""
    deg = [0] * (g.n + 1)
    for i, j in g.edges:
        deg[i] += 1
        if i != j:
            deg[j] += 1
    return max(deg[1:])


# Edge-list text format: header line "n m", then m lines "i j" (i == j for a
# self-loop). Lines starting with '#' and blank lines are ignored. Round-trips
# through parse/format up to comments and edge order.

def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text; raises :class:`EdgeListError` with a line number."""
    n: int | None = None
    declared = 0
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListError(f"expected two whitespace-separated integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"malformed integer in {line!r}", lineno) from None
        if n is None:
            if a < 1:
                raise EdgeListError(f"vertex count must be positive, got {a}", lineno)
            if b < 0:
                raise EdgeListError(f"edge count must be nonnegative, got {b}", lineno)
            n, declared = a, b
            continue
        if not (1 <= a <= n and 1 <= b <= n):
            raise EdgeListError(f"vertex out of range 1..{n}: ({a}, {b})", lineno)
        e = (a, b) if a <= b else (b, a)
        if e in edges:
            raise EdgeListError(f"duplicate edge {e}", lineno)
        edges.add(e)
    if n is None:
        raise EdgeListError("missing 'n m' header line")
    if len(edges) != declared:
        raise EdgeListError(f"header declares {declared} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))
