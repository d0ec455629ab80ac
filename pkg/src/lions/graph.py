"""Immutable undirected graphs over dense vertex indices, plus set calculus.

Vertex sets are plain ``frozenset[int]`` at the API surface; solvers that need
speed use the per-vertex bitmasks exposed as :attr:`Graph.masks`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ContainmentError, InvalidParameterError, InvalidSetError

VertexSet = frozenset  # frozenset[int]


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise InvalidParameterError("adjacency length differs from n")
        for v, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise InvalidSetError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise InvalidParameterError(f"loop at vertex {v}")
                if v not in self.adjacency[w]:
                    raise InvalidParameterError(f"asymmetric adjacency {v}-{w}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidParameterError("labels length differs from n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        if n < 0:
            raise InvalidParameterError("negative vertex count")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidSetError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u}")
            if v in adj[u]:
                raise InvalidParameterError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj),
                   tuple(labels) if labels is not None else None)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbor bitmask of each vertex."""
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adjacency)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    @cached_property
    def connected(self) -> bool:
        if self.n == 0:
            return False
        return len(_bfs_order(self, 0, None)) == self.n

    @cached_property
    def is_tree(self) -> bool:
        return self.connected and self.m == self.n - 1


def _check(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise InvalidSetError(f"vertex {v!r} not in graph with n={g.n}")
    return s


def neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Open neighborhood N(S): vertices outside S adjacent to some member of S."""
    s = _check(g, s)
    out: set[int] = set()
    for v in s:
        out.update(g.adjacency[v])
    return frozenset(out - s)


def boundary(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Members of S with at least one neighbor outside S."""
    s = _check(g, s)
    return frozenset(v for v in s if not g.adjacency[v] <= s)


def _bfs_order(g: Graph, root: int, allowed: frozenset[int] | None) -> list[int]:
    seen = {root}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adjacency[v]):
            if w not in seen and (allowed is None or w in allowed):
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def components(g: Graph, restrict: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by ``restrict``.

    Components are listed by their smallest vertex.
    """
    allowed = frozenset(range(g.n)) if restrict is None else _check(g, restrict)
    seen: set[int] = set()
    out = []
    for v in sorted(allowed):
        if v in seen:
            continue
        comp = _bfs_order(g, v, allowed)
        seen.update(comp)
        out.append(frozenset(comp))
    return out


def is_connected_set(g: Graph, s: Iterable[int]) -> bool:
    s = _check(g, s)
    if not s:
        return False
    return len(_bfs_order(g, min(s), s)) == len(s)


def bfs_distances(g: Graph, source: int, allowed: frozenset[int] | None = None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w not in dist and (allowed is None or w in allowed):
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def shortest_path(g: Graph, source: int, target: int,
                  allowed: frozenset[int] | None = None) -> list[int] | None:
    """Vertex sequence from source to target, or None when unreachable.

    Ties are broken towards smaller vertex indices.
    """
    if source == target:
        return [source]
    parent = {source: source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adjacency[v]):
            if w in parent or (allowed is not None and w not in allowed and w != target):
                continue
            parent[w] = v
            if w == target:
                path = [w]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices`` with dense re-indexing.

    Returns the subgraph and ``old_index`` so that new vertex ``i`` is ``old_index[i]`` in g.
    """
    old = sorted(_check(g, vertices))
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = [g.label(v) for v in old] if g.labels is not None else None
    return Graph.from_edges(len(old), edges, labels), old


def is_isometric_subgraph(g: Graph, h_vertices: Iterable[int],
                          h_edges: Iterable[tuple[int, int]]) -> bool:
    hv = _check(g, h_vertices)
    he = [tuple(e) for e in h_edges]
    adj: dict[int, set[int]] = {v: set() for v in hv}
    for u, v in he:
        if u not in hv or v not in hv:
            raise ContainmentError(f"edge ({u}, {v}) has an endpoint outside H")
        if v not in g.adjacency[u]:
            raise ContainmentError(f"edge ({u}, {v}) is not an edge of G")
        adj[u].add(v)
        adj[v].add(u)
    for s in hv:
        dg = bfs_distances(g, s)
        dh = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in dh:
                    dh[w] = dh[v] + 1
                    queue.append(w)
        for t in hv:
            if dh.get(t) != dg.get(t):
                return False
    return True


# --- constructors -----------------------------------------------------------

def _positive(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise InvalidParameterError(f"{name} must be >= {minimum}, got {value}")


def path_graph(n: int) -> Graph:
    _positive("n", n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _positive("n", n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """K_{1,k}: vertex 0 is the center, 1..k the leaves."""
    _positive("k", k)
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(m: int) -> Graph:
    _positive("m", m)
    return Graph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def complete_binary_tree(h: int) -> Graph:
    """Complete binary tree of height h in heap order (root 0, children 2i+1, 2i+2)."""
    _positive("h", h, 0)
    n = 2 ** (h + 1) - 1
    return Graph.from_edges(n, [((i - 1) // 2, i) for i in range(1, n)])


def add_universal_vertex(g: Graph) -> Graph:
    """Copy of g with one extra vertex (index g.n) adjacent to every other vertex."""
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + [_fresh_label(g.labels, "u")]
    return Graph.from_edges(g.n + 1, list(g.edges) + [(v, g.n) for v in range(g.n)], labels)


def _fresh_label(existing: Sequence[str], base: str) -> str:
    taken = set(existing)
    label, i = base, 0
    while label in taken:
        i += 1
        label = f"{base}{i}"
    return label


def from_networkx(nxg) -> Graph:
    nodes = list(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()],
                            [str(v) for v in nodes])


def to_networkx(g: Graph):
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nxg


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
