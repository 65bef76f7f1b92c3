"""Generators for the graph families used as amalgamation blocks.

Each generator fixes a vertex numbering and default terminals:

========================  =====================================  ==============  ==========
family                    ids                                    terminal vertex terminal edge
========================  =====================================  ==============  ==========
path(n)                   0..n-1 along the path                  n // 2          (0, 1)
cycle(n)                  0..n-1 around the cycle                0               (0, 1)
complete(n)               0..n-1                                 0               (0, 1)
complete_bipartite(m, n)  x1..xm = 0..m-1, y1..yn = m..m+n-1     0               (x_m, y_n)
prism(n)                  outer 0..n-1, inner n..2n-1            0               (0, 1)
double_hats_cycle(n)      x1..xn = 0..n-1, y2 = n, y5 = n+1      0               (x6, x7)
========================  =====================================  ==============  ==========
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParams, TooSmall
from .graph import Graph, from_edge_list

FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "prism", "dhc")


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    family: str
    params: tuple[int, ...]
    default_terminal_vertex: int
    default_terminal_edge: tuple[int, int]

    @property
    def name(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"


def path(n: int) -> FamilyInstance:
    # middle vertex, so the terminal is internal once n >= 3
    if n < 2:
        raise TooSmall(f"path needs n >= 2, got {n}")
    g = from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    return FamilyInstance(g, "path", (n,), n // 2, (0, 1))


def cycle(n: int) -> FamilyInstance:
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    g = from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    return FamilyInstance(g, "cycle", (n,), 0, (0, 1))


def complete(n: int) -> FamilyInstance:
    if n < 2:
        raise TooSmall(f"complete graph needs n >= 2, got {n}")
    g = from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    return FamilyInstance(g, "complete", (n,), 0, (0, 1))


def complete_bipartite(m: int, n: int) -> FamilyInstance:
    if m < 1 or n < 1 or m + n < 2:
        raise TooSmall(f"complete bipartite needs m, n >= 1, got ({m}, {n})")
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    labels = {i: f"x{i + 1}" for i in range(m)}
    labels.update({m + j: f"y{j + 1}" for j in range(n)})
    g = from_edge_list(m + n, edges, labels)
    return FamilyInstance(g, "complete_bipartite", (m, n), 0, (m - 1, m + n - 1))


def prism(n: int) -> FamilyInstance:
    """Two n-cycles joined by the rungs i -- n+i (order 2n)."""
    if n < 3:
        raise TooSmall(f"prism needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return FamilyInstance(from_edge_list(2 * n, edges), "prism", (n,), 0, (0, 1))


def double_hats_cycle(n: int) -> FamilyInstance:
    """Cycle x1..xn with hat y2 over x1,x2,x3 and hat y5 over x4,x5,x6.

    n >= 7 keeps the terminal edge x6x7 clear of the hat attachments.
    """
    if n < 7:
        raise TooSmall(f"double-hats cycle needs n >= 7, got {n}")
    y2, y5 = n, n + 1
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(y2, i) for i in (0, 1, 2)] + [(y5, i) for i in (3, 4, 5)]
    labels = {i: f"x{i + 1}" for i in range(n)}
    labels.update({y2: "y2", y5: "y5"})
    g = from_edge_list(n + 2, edges, labels)
    return FamilyInstance(g, "dhc", (n,), 0, (5, 6))


_BUILDERS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "prism": (prism, 1),
    "dhc": (double_hats_cycle, 1),
}


def build(family: str, params) -> FamilyInstance:
    """Dispatch by family name; used by the CLI."""
    if family not in _BUILDERS:
        raise KeyError(family)
    fn, arity = _BUILDERS[family]
    if len(params) != arity:
        raise BadParams(f"{family} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)


def vertex_by_label(g: Graph, text: str) -> int:
    for v, t in g.label_items:
        if t == text:
            return v
    raise KeyError(text)
