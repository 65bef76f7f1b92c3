"""Immutable simple graphs on contiguous integer vertex ids.

Vertices are ``0..order-1``. Adjacency lists are kept sorted so two graphs
built from the same edge set compare (and hash) equal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    AdjacentInGroup,
    Disconnected,
    DuplicateEdge,
    EmptyCollection,
    IndexOutOfRange,
    OverlappingGroups,
    SelfLoop,
)


@dataclass(frozen=True)
class Graph:
    order: int
    adjacency: tuple[tuple[int, ...], ...]
    # sorted (vertex, label) pairs; kept as a tuple so the graph stays hashable
    label_items: tuple[tuple[int, str], ...] = field(default=())

    @property
    def labels(self) -> dict[int, str]:
        return dict(self.label_items)

    def label(self, v: int) -> str:
        """Label of ``v``, falling back to the decimal id."""
        for u, text in self.label_items:
            if u == v:
                return text
        return str(v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in self.adjacency[u] if u < v]

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree_sequence(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def with_labels(self, labels: Mapping[int, str]) -> "Graph":
        return Graph(self.order, self.adjacency, _label_items(self.order, labels))


def _label_items(order: int, labels: Mapping[int, str] | None) -> tuple[tuple[int, str], ...]:
    if not labels:
        return ()
    for v in labels:
        if not 0 <= v < order:
            raise IndexOutOfRange(f"label for vertex {v} outside 0..{order - 1}")
    return tuple(sorted((int(v), str(t)) for v, t in labels.items()))


def from_edge_list(
    order: int,
    edges: Iterable[Sequence[int]],
    labels: Mapping[int, str] | None = None,
) -> Graph:
    """Build a canonical graph from an edge list.

    Raises SelfLoop, DuplicateEdge or IndexOutOfRange on malformed input;
    duplicates are never silently merged.
    """
    if order < 0:
        raise IndexOutOfRange(f"negative order {order}")
    adj: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise IndexOutOfRange(f"edge ({u},{v}) outside 0..{order - 1}")
        if u == v:
            raise SelfLoop(u)
        if v in adj[u]:
            raise DuplicateEdge(u, v)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(order, tuple(tuple(sorted(a)) for a in adj), _label_items(order, labels))


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.order <= 1:
        return True
    return min(_bfs(g, 0)) >= 0


def bfs_distances(g: Graph, source: int) -> list[int]:
    if not 0 <= source < g.order:
        raise IndexOutOfRange(f"source {source} outside 0..{g.order - 1}")
    dist = _bfs(g, source)
    if min(dist) < 0:
        raise Disconnected(f"vertex {dist.index(-1)} unreachable from {source}")
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    order: int
    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.d[u]

    @property
    def diameter(self) -> int:
        return max((max(row) for row in self.d), default=0)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs hop counts by one BFS per vertex. Requires a connected graph."""
    return DistanceMatrix(g.order, tuple(tuple(bfs_distances(g, u)) for u in range(g.order)))


def disjoint_union(gs: Sequence[Graph]) -> tuple[Graph, list[int]]:
    """Place the graphs side by side; block i's vertex v becomes offsets[i] + v."""
    if not gs:
        raise EmptyCollection("disjoint_union needs at least one graph")
    offsets = []
    adjacency: list[tuple[int, ...]] = []
    labels: dict[int, str] = {}
    base = 0
    for g in gs:
        offsets.append(base)
        adjacency.extend(tuple(w + base for w in row) for row in g.adjacency)
        labels.update({v + base: t for v, t in g.label_items})
        base += g.order
    return Graph(base, tuple(adjacency), _label_items(base, labels)), offsets


def identify_vertices(
    g: Graph, groups: Sequence[Iterable[int]]
) -> tuple[Graph, list[int]]:
    """Collapse each group of pairwise non-adjacent vertices into one vertex.

    New ids are assigned in order of each class's smallest old id, so
    singleton groups (or no groups) give back ``g`` unchanged. Edges made
    parallel by the merge are deduplicated. Labels are kept for unmerged
    vertices; a merged vertex gets its members' labels joined by ``=``.
    """
    rep = list(range(g.order))
    seen: set[int] = set()
    for group in groups:
        members = sorted(set(group))
        for v in members:
            if not 0 <= v < g.order:
                raise IndexOutOfRange(f"vertex {v} outside 0..{g.order - 1}")
            if v in seen:
                raise OverlappingGroups(f"vertex {v} appears in more than one group")
            seen.add(v)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if g.has_edge(u, v):
                    raise AdjacentInGroup(u, v)
        for v in members:
            rep[v] = members[0]

    mapping = [0] * g.order
    new_id: dict[int, int] = {}
    for v in range(g.order):
        r = rep[v]
        if r not in new_id:
            new_id[r] = len(new_id)
        mapping[v] = new_id[r]

    order = len(new_id)
    adj: list[set[int]] = [set() for _ in range(order)]
    for u, v in g.edges:
        a, b = mapping[u], mapping[v]
        adj[a].add(b)
        adj[b].add(a)

    merged: dict[int, list[str]] = {}
    for v, text in g.label_items:
        merged.setdefault(mapping[v], []).append(text)
    labels = {v: "=".join(ts) for v, ts in merged.items()}
    return Graph(order, tuple(tuple(sorted(a)) for a in adj), _label_items(order, labels)), mapping
