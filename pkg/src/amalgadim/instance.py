"""JSON instance files and graph6 interop."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import networkx as nx

from .errors import BadTerminal, GraphError
from .families import FamilyInstance
from .graph import Graph, from_edge_list

G6_HEADER = ">>graph6<<"


@dataclass
class InstanceFile:
    order: int
    edges: list[list[int]]
    labels: dict[int, str] = field(default_factory=dict)
    terminal_vertex: int | None = None
    terminal_edge: list[int] | None = None
    block_maps: list[list[int]] | None = None

    def graph(self) -> Graph:
        return from_edge_list(self.order, self.edges, self.labels)

    def validate(self) -> "InstanceFile":
        g = self.graph()
        if self.terminal_vertex is not None and not 0 <= self.terminal_vertex < g.order:
            raise BadTerminal(f"terminal_vertex {self.terminal_vertex} out of range")
        if self.terminal_edge is not None:
            a, b = self.terminal_edge
            if not (0 <= a < g.order and 0 <= b < g.order and g.has_edge(a, b)):
                raise BadTerminal(f"terminal_edge {self.terminal_edge} is not an edge")
        return self

    @classmethod
    def from_graph(cls, g: Graph, terminal_vertex=None, terminal_edge=None) -> "InstanceFile":
        return cls(
            order=g.order,
            edges=[[u, v] for u, v in g.edges],
            labels=g.labels,
            terminal_vertex=terminal_vertex,
            terminal_edge=list(terminal_edge) if terminal_edge is not None else None,
        )

    @classmethod
    def from_family(cls, inst: FamilyInstance) -> "InstanceFile":
        return cls.from_graph(inst.graph, inst.default_terminal_vertex, inst.default_terminal_edge)

    def to_dict(self) -> dict:
        d = {
            "order": self.order,
            "edges": [list(e) for e in self.edges],
            "labels": {str(k): v for k, v in sorted(self.labels.items())},
            "terminal_vertex": self.terminal_vertex,
            "terminal_edge": self.terminal_edge,
        }
        if self.block_maps is not None:
            d["block_maps"] = self.block_maps
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "InstanceFile":
        try:
            te = d.get("terminal_edge")
            return cls(
                order=int(d["order"]),
                edges=[[int(u), int(v)] for u, v in d["edges"]],
                labels={int(k): str(v) for k, v in (d.get("labels") or {}).items()},
                terminal_vertex=d.get("terminal_vertex"),
                terminal_edge=[int(te[0]), int(te[1])] if te is not None else None,
                block_maps=d.get("block_maps"),
            ).validate()
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"malformed instance: {exc}") from exc


def to_graph6(g: Graph) -> str:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.order))
    nxg.add_edges_from(g.edges)
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):].strip()
    nxg = nx.from_graph6_bytes(s.encode("ascii"))
    return from_edge_list(nxg.number_of_nodes(), sorted(tuple(sorted(e)) for e in nxg.edges()))


def loads(text: str) -> InstanceFile:
    """Parse a JSON instance, or a graph6 line (which carries no terminals or labels)."""
    if text.lstrip().startswith("{"):
        return InstanceFile.from_dict(json.loads(text))
    return InstanceFile.from_graph(from_graph6(text.splitlines()[0]))


def dumps(inst: InstanceFile, g6: bool = False) -> str:
    if g6:
        return to_graph6(inst.graph()) + "\n"
    return json.dumps(inst.to_dict(), indent=2) + "\n"


def read(path: str | Path) -> InstanceFile:
    return loads(Path(path).read_text())


def write(inst: InstanceFile, path: str | Path, g6: bool = False) -> None:
    Path(path).write_text(dumps(inst, g6))
