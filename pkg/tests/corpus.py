"""Every graph the harness touches, deduplicated, for resolver-wide properties."""

from amalgadim import families as fam
from amalgadim.amalgam import edge_amal, vertex_amal
from amalgadim.graph import Graph
from amalgadim.harness import Corpus, mixed_corpus


def _family_graphs():
    out = [fam.path(n).graph for n in range(2, 13)]
    out += [fam.cycle(n).graph for n in range(3, 13)]
    out += [fam.complete(n).graph for n in range(2, 10)]
    out += [fam.complete_bipartite(m, n).graph for m in range(1, 6) for n in range(m, 6) if m + n >= 2]
    out += [fam.prism(n).graph for n in range(3, 7)]
    out += [fam.double_hats_cycle(n).graph for n in range(7, 13)]
    return out


def _amalgam_graphs():
    out = []
    corpus = Corpus()
    for _, blocks in corpus.structured():
        out.append(vertex_amal([(b.graph, b.default_terminal_vertex) for b in blocks]).graph)
        out.append(edge_amal([(b.graph, b.default_terminal_edge) for b in blocks]).graph)
    for m in (3, 4):
        for n in (2, 3):
            b = fam.complete_bipartite(m, m)
            out.append(edge_amal([(b.graph, b.default_terminal_edge)] * n).graph)
    for n in (2, 3):
        for j in range(n + 1):
            blocks = [fam.path(5)] * j + [fam.complete(4)] * (n - j)
            out.append(vertex_amal([(b.graph, b.default_terminal_vertex) for b in blocks]).graph)
            blocks = [fam.double_hats_cycle(8)] * j + [fam.complete_bipartite(3, 3)] * (n - j)
            out.append(edge_amal([(b.graph, b.default_terminal_edge) for b in blocks]).graph)
    for mc in mixed_corpus(100, 0):
        out.append(vertex_amal(list(zip((b.graph for b in mc.blocks), mc.vertex_terminals))).graph)
        out.append(edge_amal(list(zip((b.graph for b in mc.blocks), mc.edge_terminals))).graph)
    return out


def all_corpus_graphs() -> list[Graph]:
    seen = {}
    for g in _family_graphs() + _amalgam_graphs():
        key = Graph(g.order, g.adjacency)
        seen.setdefault(key, key)
    return list(seen.values())
