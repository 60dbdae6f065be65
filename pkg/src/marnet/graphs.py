"""Undirected labelled simple graphs: representation, generators, edits.

Graphs are immutable value objects; every edit returns a new graph. The
adjacency view is a symmetric 0/1 matrix with zero diagonal and is cached
read-only on first access.

Seeded generation uses numpy's PCG64 (``numpy.random.default_rng``); the
candidate edges (u, v) with u < v are visited in lexicographic order and
each consumes exactly one uniform draw, so a seed pins the sample exactly
across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

Edge = tuple[int, int]


class GraphParseError(ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ElementNotFoundError(LookupError):
    pass


def _normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop ({u},{v}) not allowed")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on nodes 0..n-1 with an explicit edge set."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, node_count: int, edges: Iterable[Edge] = ()):
        if node_count < 0:
            raise ValueError("node_count must be >= 0")
        norm = frozenset(_normalize_edge(u, v) for u, v in edges)
        for u, v in norm:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"edge ({u},{v}) out of range for {node_count} nodes")
        object.__setattr__(self, "n", node_count)
        object.__setattr__(self, "edges", norm)
        object.__setattr__(self, "_adj", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def max_edges(self) -> int:
        return self.n * (self.n - 1) // 2

    def density(self) -> float:
        return self.edge_count / self.max_edges if self.max_edges else 0.0

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def adjacency(self) -> np.ndarray:
        """Read-only (n, n) uint8 adjacency matrix, cached."""
        if self._adj is None:
            a = np.zeros((self.n, self.n), dtype=np.uint8)
            for u, v in self.edges:
                a[u, v] = a[v, u] = 1
            a.setflags(write=False)
            object.__setattr__(self, "_adj", a)
        return self._adj

    def degrees(self) -> np.ndarray:
        return self.adjacency().sum(axis=1).astype(np.int64)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    @classmethod
    def from_adjacency(cls, a: np.ndarray) -> "Graph":
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if np.any(a != a.T) or np.any(np.diag(a) != 0):
            raise ValueError("adjacency must be symmetric with zero diagonal")
        us, vs = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], zip(us.tolist(), vs.tolist()))


@dataclass(frozen=True, order=True)
class GraphElement:
    """An edge or node of a graph; ordering is (kind, u, v) lexicographic."""

    kind: str  # "edge" or "node"
    u: int
    v: int = -1  # -1 for nodes

    @classmethod
    def edge(cls, u: int, v: int) -> "GraphElement":
        u, v = _normalize_edge(u, v)
        return cls("edge", u, v)

    @classmethod
    def node(cls, i: int) -> "GraphElement":
        return cls("node", i)

    def __post_init__(self):
        if self.kind not in ("edge", "node"):
            raise ValueError(f"unknown element kind {self.kind!r}")


# ---------------------------------------------------------------------------
# generators

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Hub node 0 connected to all others."""
    return Graph(n, ((0, j) for j in range(1, n)))


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the n(n-1)/2 edges present independently with prob p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    m = n * (n - 1) // 2
    draws = rng.random(m)
    edges = []
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if draws[k] < p:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def erdos_renyi_gnm(n: int, m: int, seed: int) -> Graph:
    """G(n, m): m edges sampled uniformly without replacement."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not 0 <= m <= len(pairs):
        raise ValueError(f"m must be in [0, {len(pairs)}], got {m}")
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(pairs), size=m, replace=False)
    return Graph(n, (pairs[i] for i in idx))


def rado_graph(n: int) -> Graph:
    """BIT-predicate graph: x < y adjacent iff bit x of y is nonzero.

    Deterministic and hereditary: the induced subgraph on 0..k-1 equals
    rado_graph(k).
    """
    if n < 1:
        raise ValueError("rado graph requires n >= 1")
    return Graph(n, ((x, y) for y in range(n) for x in range(y) if (y >> x) & 1))


# ---------------------------------------------------------------------------
# edits

def add_edge(g: Graph, u: int, v: int) -> Graph:
    e = _normalize_edge(u, v)
    if not (0 <= e[0] < g.n and 0 <= e[1] < g.n):
        raise ValueError(f"edge {e} out of range")
    if e in g.edges:
        raise ValueError(f"edge {e} already present")
    return Graph(g.n, g.edges | {e})


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    e = _normalize_edge(u, v)
    if e not in g.edges:
        raise ElementNotFoundError(f"edge {e} not in graph")
    return Graph(g.n, g.edges - {e})


def delete_node(g: Graph, i: int) -> Graph:
    """Remove node i and its incident edges; higher labels shift down by one."""
    if not 0 <= i < g.n:
        raise ElementNotFoundError(f"node {i} not in graph")

    def shift(x: int) -> int:
        return x if x < i else x - 1

    kept = ((shift(u), shift(v)) for u, v in g.edges if u != i and v != i)
    return Graph(g.n - 1, kept)


def delete_element(g: Graph, element: GraphElement) -> Graph:
    if element.kind == "edge":
        return delete_edge(g, element.u, element.v)
    return delete_node(g, element.u)


# ---------------------------------------------------------------------------
# edge-list text format: first line node count, then "u v" lines with u < v
# in lexicographic order; UTF-8, LF endings.

def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def serialize(g: Graph) -> bytes:
    return to_edge_list_text(g).encode("utf-8")


def from_edge_list_text(text: str) -> Graph:
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise GraphParseError("missing node count", 1)
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphParseError(f"invalid node count {lines[0]!r}", 1) from None
    if n < 0:
        raise GraphParseError("node count must be >= 0", 1)
    edges = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {raw!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer endpoint in {raw!r}", lineno) from None
        if u == v:
            raise GraphParseError(f"self-loop ({u},{v})", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"node out of range in ({u},{v})", lineno)
        edges.append((u, v))
    return Graph(n, edges)


def deserialize(data: bytes | str) -> Graph:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return from_edge_list_text(data)


def save_graph(g: Graph, path) -> None:
    with open(path, "wb") as f:
        f.write(serialize(g))


def load_graph(path) -> Graph:
    with open(path, "rb") as f:
        return deserialize(f.read())
