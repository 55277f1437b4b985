"""Built-in corpus of named graphs with independently re-verified expected facts.

Every expected fact recorded here (order, valency, girth, diameter,
intersection array, automorphism group order) is re-derived by the analysis
code in the test suite; the corpus never short-circuits a computation.
Constructions are structural (incidence graphs, products, bit flips) rather
than hard-coded edge lists wherever a structure exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Graph
from .permgroups import parse_generators


def complete_graph(n) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a, b) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i + 1) for i in range(leaves)))


def hypercube(dim) -> Graph:
    n = 1 << dim
    edges = ((v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b))
    return Graph.from_edges(n, edges)


def petersen_graph() -> Graph:
    """Disjointness graph of the 2-subsets of a 5-set."""
    pairs = list(combinations(range(5), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = [
        (index[p], index[q])
        for p, q in combinations(pairs, 2)
        if not (set(p) & set(q))
    ]
    return Graph.from_edges(10, edges)


def heawood_graph() -> Graph:
    """Point-line incidence graph of the 7-point projective plane.

    Points are 0..6, lines are {i, i+1, i+3} mod 7 as vertices 7..13.
    """
    edges = []
    for i in range(7):
        for offset in (0, 1, 3):
            edges.append(((i + offset) % 7, 7 + i))
    return Graph.from_edges(14, edges)


def pappus_graph() -> Graph:
    """Incidence graph of the 9-point, 9-line configuration of affine lines
    y = m*x + c over GF(3) (the vertical parallel class omitted)."""
    edges = []
    for m in range(3):
        for c in range(3):
            line = 9 + 3 * m + c
            for x in range(3):
                point = 3 * x + (m * x + c) % 3
                edges.append((point, line))
    return Graph.from_edges(18, edges)


def desargues_graph() -> Graph:
    """Bipartite double cover of the Petersen graph."""
    pet = petersen_graph()
    edges = []
    for u, v in pet.edges():
        edges.append((u, 10 + v))
        edges.append((v, 10 + u))
    return Graph.from_edges(20, edges)


def dodecahedron_graph() -> Graph:
    """Generalized Petersen graph GP(10, 2): the dodecahedral skeleton."""
    edges = []
    for i in range(10):
        edges.append((i, (i + 1) % 10))        # outer cycle
        edges.append((i, 10 + i))              # spokes
        edges.append((10 + i, 10 + (i + 2) % 10))  # inner pentagram pair
    return Graph.from_edges(20, edges)


def tutte_coxeter_graph() -> Graph:
    """Incidence graph of the duads and synthemes of a 6-set.

    Duads: the 15 unordered pairs from {0..5} (vertices 0..14).  Synthemes:
    the 15 partitions of {0..5} into three pairs (vertices 15..29), adjacent
    to the duads they contain.
    """
    duads = list(combinations(range(6), 2))
    duad_index = {d: i for i, d in enumerate(duads)}
    # Enumerate partitions: fix the pair containing 0, then split the rest.
    synthemes = []
    for a in range(1, 6):
        rest = [x for x in range(6) if x not in (0, a)]
        for partner in rest[1:]:
            pair2 = tuple(sorted((rest[0], partner)))
            pair3 = tuple(x for x in rest if x not in pair2)
            synthemes.append(((0, a), pair2, pair3))
    synthemes = sorted(tuple(sorted(s)) for s in synthemes)
    edges = []
    for si, syn in enumerate(synthemes):
        for pair in syn:
            edges.append((duad_index[pair], 15 + si))
    return Graph.from_edges(30, edges)


@dataclass(frozen=True)
class NamedGraphEntry:
    """A corpus graph: constructor plus expected facts for re-verification."""

    name: str
    build: callable
    order: int
    valency: int
    girth: float
    diameter: int
    intersection_array: str | None  # "{b...;c...}" when distance-regular
    aut_order: int
    subgroups: dict = field(default_factory=dict)  # name -> (order, generator text)

    def graph(self) -> Graph:
        return self.build()

    def subgroup_generators(self, subgroup_name):
        order, text = self.subgroups[subgroup_name]
        return parse_generators(text, self.order)


_K33_SUBGROUP = """
(0 1 2)
(3 4 5)
(0 3)(1 4)(2 5)
"""

_ENTRIES = [
    NamedGraphEntry("K4", lambda: complete_graph(4), 4, 3, 3, 1, "{3;1}", 24),
    NamedGraphEntry("K5", lambda: complete_graph(5), 5, 4, 3, 1, "{4;1}", 120),
    NamedGraphEntry(
        "K33",
        lambda: complete_bipartite(3, 3),
        6,
        3,
        4,
        2,
        "{3,2;1,3}",
        72,
        subgroups={"C3wrC2": (18, _K33_SUBGROUP)},
    ),
    NamedGraphEntry("K44", lambda: complete_bipartite(4, 4), 8, 4, 4, 2, "{4,3;1,4}", 1152),
    NamedGraphEntry("C5", lambda: cycle_graph(5), 5, 2, 5, 2, "{2,1;1,1}", 10),
    NamedGraphEntry("C6", lambda: cycle_graph(6), 6, 2, 6, 3, "{2,1,1;1,1,2}", 12),
    NamedGraphEntry("C8", lambda: cycle_graph(8), 8, 2, 8, 4, "{2,1,1,1;1,1,1,2}", 16),
    NamedGraphEntry("Petersen", petersen_graph, 10, 3, 5, 2, "{3,2;1,1}", 120),
    NamedGraphEntry("Heawood", heawood_graph, 14, 3, 6, 3, "{3,2,2;1,1,3}", 336),
    NamedGraphEntry("Pappus", pappus_graph, 18, 3, 6, 4, "{3,2,2,1;1,1,2,3}", 216),
    NamedGraphEntry("Desargues", desargues_graph, 20, 3, 6, 5, "{3,2,2,1,1;1,1,2,2,3}", 240),
    NamedGraphEntry(
        "Dodecahedron", dodecahedron_graph, 20, 3, 5, 5, "{3,2,1,1,1;1,1,1,2,3}", 120
    ),
    NamedGraphEntry(
        "TutteCoxeter", tutte_coxeter_graph, 30, 3, 8, 4, "{3,2,2,2;1,1,1,3}", 1440
    ),
    NamedGraphEntry("Q3", lambda: hypercube(3), 8, 3, 4, 3, "{3,2,1;1,2,3}", 48),
    NamedGraphEntry("Q4", lambda: hypercube(4), 16, 4, 4, 4, "{4,3,2,1;1,2,3,4}", 384),
]

_ALIASES = {
    "K_4": "K4",
    "K_5": "K5",
    "K_{3,3}": "K33",
    "K_{4,4}": "K44",
    "K3,3": "K33",
    "K4,4": "K44",
    "3-CUBE": "Q3",
    "4-CUBE": "Q4",
    "CUBE": "Q3",
    "TUTTE-COXETER": "TUTTECOXETER",
    "TUTTE_COXETER": "TUTTECOXETER",
}


def corpus() -> list[NamedGraphEntry]:
    """All built-in named graphs, in canonical order."""
    return list(_ENTRIES)


def corpus_names() -> list[str]:
    return [e.name for e in _ENTRIES]


def corpus_entry(name) -> NamedGraphEntry:
    key = name.strip().upper()
    key = _ALIASES.get(name.strip(), _ALIASES.get(key, key))
    for entry in _ENTRIES:
        if entry.name.upper() == key.upper():
            return entry
    raise KeyError(f"unknown corpus graph {name!r}; known: {', '.join(corpus_names())}")


def corpus_graph(name) -> Graph:
    return corpus_entry(name).graph()
