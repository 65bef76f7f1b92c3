"""Vertex- and edge-amalgamation of a collection of blocks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    BadTerminal,
    EmptyCollection,
    NotAnEdge,
    NotSymmetricBipartite,
    PartTooSmall,
    TrivialBlock,
)
from .families import FamilyInstance
from .graph import Graph, disjoint_union, identify_vertices, is_connected


@dataclass(frozen=True)
class TerminalSpec:
    """A block's terminal: a vertex, or an oriented edge (a, b)."""

    kind: str
    vertex: int | None = None
    edge: tuple[int, int] | None = None

    @classmethod
    def at_vertex(cls, v: int) -> "TerminalSpec":
        return cls("vertex", vertex=v)

    @classmethod
    def at_edge(cls, a: int, b: int) -> "TerminalSpec":
        return cls("edge", edge=(a, b))

    def check(self, g: Graph) -> None:
        if self.kind == "vertex":
            if self.vertex is None or not 0 <= self.vertex < g.order:
                raise BadTerminal(f"terminal vertex {self.vertex} not in block of order {g.order}")
        elif self.kind == "edge":
            if self.edge is None:
                raise BadTerminal("edge terminal without an edge")
            a, b = self.edge
            if not (0 <= a < g.order and 0 <= b < g.order):
                raise BadTerminal(f"terminal edge {self.edge} not in block of order {g.order}")
            if not g.has_edge(a, b):
                raise NotAnEdge(f"terminal pair {self.edge} is not an edge of the block")
        else:
            raise BadTerminal(f"unknown terminal kind {self.kind!r}")


@dataclass(frozen=True)
class AmalgamResult:
    graph: Graph
    block_maps: tuple[tuple[int, ...], ...]
    # merged terminal vertex, or merged (a*, b*) for an edge-amalgamation
    hub: Union[int, tuple[int, int]]


def _tagged(blocks: Sequence[Graph]) -> list[Graph]:
    return [g.with_labels({v: f"b{i}:{g.label(v)}" for v in range(g.order)})
            for i, g in enumerate(blocks)]


def _check_block(g: Graph) -> None:
    if g.order < 2:
        raise TrivialBlock(f"block of order {g.order} is trivial")
    if not is_connected(g):
        raise TrivialBlock("blocks must be connected")


def _glue(graphs: Sequence[Graph], points: Sequence[Sequence[int]]) -> tuple[Graph, list[list[int]], list[int]]:
    union, offsets = disjoint_union(_tagged(graphs))
    groups = [[off + p[k] for off, p in zip(offsets, points)] for k in range(len(points[0]))]
    glued, mapping = identify_vertices(union, groups)
    maps = [mapping[off:off + g.order] for off, g in zip(offsets, graphs)]
    return glued, maps, [mapping[grp[0]] for grp in groups]


def vertex_amal(blocks: Sequence[tuple[Graph, int]]) -> AmalgamResult:
    """Identify the terminal vertices of all blocks into one hub."""
    if not blocks:
        raise EmptyCollection("vertex_amal needs at least one block")
    for g, v in blocks:
        _check_block(g)
        TerminalSpec.at_vertex(v).check(g)
    graphs = [g for g, _ in blocks]
    glued, maps, (hub,) = _glue(graphs, [(v,) for _, v in blocks])
    return AmalgamResult(glued, tuple(map(tuple, maps)), hub)


def edge_amal(blocks: Sequence[tuple[Graph, tuple[int, int]]]) -> AmalgamResult:
    """Identify every block's oriented terminal edge (a, b): all a's merge, all b's merge."""
    if not blocks:
        raise EmptyCollection("edge_amal needs at least one block")
    for g, e in blocks:
        _check_block(g)
        TerminalSpec.at_edge(*e).check(g)
    graphs = [g for g, _ in blocks]
    glued, maps, (a, b) = _glue(graphs, [tuple(e) for _, e in blocks])
    return AmalgamResult(glued, tuple(map(tuple, maps)), (a, b))


def amalgamate(kind: str, blocks: Sequence[tuple[Graph, TerminalSpec]]) -> AmalgamResult:
    if kind == "vertex":
        return vertex_amal([(g, t.vertex) for g, t in blocks])
    if kind == "edge":
        return edge_amal([(g, t.edge) for g, t in blocks])
    raise ValueError(f"unknown amalgamation kind {kind!r}")


def witness_r(
    blocks: Sequence[FamilyInstance],
    result: AmalgamResult | None = None,
    *,
    include_y: bool = False,
) -> list[int]:
    """Candidate resolving set for an edge-amalgamation of K_{m,m} blocks glued at x_m y_m.

    Takes x1..x_{m-2} from every block and returns their images in the
    amalgam (sorted). With ``include_y`` it also takes y1..y_{m-2}; only that
    larger set has the size sum(dim) - 2n and actually resolves for n >= 2.
    """
    for inst in blocks:
        if inst.family != "complete_bipartite" or inst.params[0] != inst.params[1]:
            raise NotSymmetricBipartite(f"{inst.name} is not K_(m,m)")
        if inst.params[0] < 3:
            raise PartTooSmall(f"{inst.name} needs part size >= 3")
    if result is None:
        result = edge_amal([(b.graph, b.default_terminal_edge) for b in blocks])
    picked = set()
    for inst, bmap in zip(blocks, result.block_maps):
        m = inst.params[0]
        picked.update(bmap[x] for x in range(m - 2))
        if include_y:
            picked.update(bmap[m + y] for y in range(m - 2))
    return sorted(picked)
