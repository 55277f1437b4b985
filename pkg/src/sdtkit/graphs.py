"""Immutable simple graphs with distance, girth and intersection-number invariants.

Vertices are dense integers 0..n-1.  All analysis operations assume a
connected graph; loaders reject disconnected input rather than silently
restricting to a component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    ConnectivityError,
    GraphDataError,
    RegularityError,
    TheoremViolationError,
)

#: Sentinel girth of an acyclic graph.  Using infinity (never 0) keeps the
#: local-girth minimum well defined.
NO_CYCLE = math.inf


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted neighbour lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_neighbor_sets", tuple(frozenset(row) for row in self.adjacency)
        )

    @classmethod
    def from_edges(cls, n, edges, *, require_connected=True):
        """Build a graph from an iterable of (u, v) pairs.

        Duplicate edges collapse; loops and out-of-range ids raise
        GraphDataError.  Disconnected graphs are rejected unless
        ``require_connected`` is False (useful only for format round-trips
        and negative tests).
        """
        if n < 0:
            raise GraphDataError(f"vertex count must be nonnegative, got {n}")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphDataError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphDataError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        g = cls(n, tuple(tuple(sorted(s)) for s in nbrs))
        if require_connected and not g.is_connected():
            raise ConnectivityError("graph is disconnected")
        return g

    def neighbors(self, v):
        return self.adjacency[v]

    def neighbor_set(self, v) -> frozenset:
        return self._neighbor_sets[v]

    def has_edge(self, u, v):
        return v in self._neighbor_sets[u]

    def degree(self, v):
        return len(self.adjacency[v])

    @property
    def edge_count(self):
        return sum(len(row) for row in self.adjacency) // 2

    def edges(self):
        """Iterate edges as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    @property
    def valency(self):
        """Common degree when the graph is regular, else None."""
        if self.n == 0:
            return None
        degs = {len(row) for row in self.adjacency}
        return degs.pop() if len(degs) == 1 else None

    def is_regular(self):
        return self.valency is not None

    def is_connected(self):
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == self.n


# ---------------------------------------------------------------------------
# Distances


@dataclass(frozen=True)
class DistanceData:
    """Distance classes of one source vertex: levels[i] is the sphere of radius i."""

    source: int
    levels: tuple[tuple[int, ...], ...]
    eccentricity: int

    def level_sets(self):
        return tuple(frozenset(level) for level in self.levels)

    def sphere(self, i) -> tuple[int, ...]:
        """Vertices at distance exactly i (empty beyond the eccentricity)."""
        return self.levels[i] if i <= self.eccentricity else ()


def distances_from(g: Graph, alpha) -> list[int]:
    """BFS distances from alpha; unreachable vertices get -1."""
    if not 0 <= alpha < g.n:
        raise ValueError(f"vertex {alpha} out of range for n={g.n}")
    dist = [-1] * g.n
    dist[alpha] = 0
    frontier = [alpha]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def bfs_levels(g: Graph, alpha) -> DistanceData:
    """Exact distance classes from alpha.

    Raises ConnectivityError when some vertex is unreachable, since the
    levels would otherwise fail to partition the vertex set.
    """
    dist = distances_from(g, alpha)
    if min(dist) < 0:
        missing = dist.index(-1)
        raise ConnectivityError(
            f"vertex {missing} unreachable from {alpha}; graph is disconnected"
        )
    ecc = max(dist)
    levels = [[] for _ in range(ecc + 1)]
    for v, d in enumerate(dist):
        levels[d].append(v)
    return DistanceData(alpha, tuple(tuple(lv) for lv in levels), ecc)


def all_distances(g: Graph) -> list[list[int]]:
    return [distances_from(g, v) for v in range(g.n)]


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    return max(bfs_levels(g, v).eccentricity for v in range(g.n))


# ---------------------------------------------------------------------------
# Girth


@dataclass(frozen=True)
class GirthData:
    """Girth together with the per-vertex cycle lengths.

    alpha_girth[v] is the shortest cycle through v; local_girth[v] is
    min(alpha_girth[v], alpha_girth[u] + 1 for u adjacent to v).  Acyclic
    graphs report NO_CYCLE everywhere.
    """

    girth: float
    alpha_girth: tuple[float, ...]
    local_girth: tuple[float, ...]


def vertex_girth(g: Graph, alpha) -> float:
    """Length of the shortest cycle through alpha (NO_CYCLE if none).

    One BFS with branch tracking: an edge (u, v) whose endpoints were first
    reached through different neighbours of alpha closes a cycle through
    alpha of length dist(u) + dist(v) + 1, and the shortest cycle through
    alpha always contains such an edge realising its length.
    """
    if not 0 <= alpha < g.n:
        raise ValueError(f"vertex {alpha} out of range for n={g.n}")
    dist = [-1] * g.n
    branch = [-1] * g.n
    dist[alpha] = 0
    frontier = [alpha]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    branch[v] = v if u == alpha else branch[u]
                    nxt.append(v)
        frontier = nxt
    best = NO_CYCLE
    for u, v in g.edges():
        if u == alpha or v == alpha or dist[u] < 0 or dist[v] < 0:
            continue
        if branch[u] != branch[v]:
            best = min(best, dist[u] + dist[v] + 1)
    return best


def girth_data(g: Graph) -> GirthData:
    alpha_girth = tuple(vertex_girth(g, v) for v in range(g.n))
    local = []
    for v in range(g.n):
        lam = alpha_girth[v]
        for u in g.adjacency[v]:
            lam = min(lam, alpha_girth[u] + 1)
        local.append(lam)
    girth = min(alpha_girth, default=NO_CYCLE)
    return GirthData(girth, alpha_girth, tuple(local))


def local_girth(g: Graph, alpha) -> float:
    """min over alpha's closed neighbourhood, without the full per-vertex sweep."""
    lam = vertex_girth(g, alpha)
    for u in g.adjacency[alpha]:
        lam = min(lam, vertex_girth(g, u) + 1)
    return lam


# ---------------------------------------------------------------------------
# Intersection numbers


@dataclass(frozen=True)
class NonConstantWitness:
    """Two vertices of the same sphere with different neighbour-count triples."""

    alpha: int
    level: int
    vertex_a: int
    triple_a: tuple[int, int, int]
    vertex_b: int
    triple_b: tuple[int, int, int]


@dataclass(frozen=True)
class LevelTriple:
    """Constant (c_i, a_i, b_i) for one sphere, or the witness that it is not constant."""

    level: int
    triple: tuple[int, int, int] | None
    witness: NonConstantWitness | None

    @property
    def constant(self):
        return self.triple is not None


@dataclass(frozen=True)
class LocalIntersectionNumbers:
    source: int
    per_level: tuple[LevelTriple, ...]
    level_sizes: tuple[int, ...]

    def triples(self):
        """The constant triples, or None where a level is non-constant."""
        return tuple(entry.triple for entry in self.per_level)


def _level_triples(g: Graph, dd: DistanceData):
    """Per-level neighbour-count triples, one LevelTriple per sphere 1..ecc."""
    sets = dd.level_sets()
    entries = []
    for i in range(1, dd.eccentricity + 1):
        below = sets[i - 1]
        here = sets[i]
        above = sets[i + 1] if i + 1 <= dd.eccentricity else frozenset()
        first_vertex = None
        first_triple = None
        witness = None
        for beta in dd.levels[i]:
            nb = g.neighbor_set(beta)
            triple = (len(nb & below), len(nb & here), len(nb & above))
            if first_triple is None:
                first_vertex, first_triple = beta, triple
            elif triple != first_triple and witness is None:
                witness = NonConstantWitness(
                    dd.source, i, first_vertex, first_triple, beta, triple
                )
        if witness is None:
            entries.append(LevelTriple(i, first_triple, None))
        else:
            entries.append(LevelTriple(i, None, witness))
    return tuple(entries)


def local_intersection_numbers(g: Graph, alpha) -> LocalIntersectionNumbers:
    """Per-sphere (c_i, a_i, b_i) counts around alpha, with witnesses when non-constant.

    Requires a regular graph.  When the shortest cycle through alpha has
    length >= 2s+2, spheres 1..s are forced to carry (1, 0, k-1) and to have
    size k(k-1)^(i-1); that consequence is re-verified here and a failure is
    raised loudly, since it would contradict a proved fact.
    """
    k = g.valency
    if k is None:
        degs = sorted(set(g.degree(v) for v in range(g.n)))
        raise RegularityError(f"graph is not regular (degrees {degs})")
    dd = bfs_levels(g, alpha)
    entries = _level_triples(g, dd)
    sizes = tuple(len(lv) for lv in dd.levels)

    lam = vertex_girth(g, alpha)
    if not math.isinf(lam):
        s = min((int(lam) - 2) // 2, dd.eccentricity - 1)
        for i in range(1, s + 1):
            expected_size = k * (k - 1) ** (i - 1)
            entry = entries[i - 1]
            if entry.triple != (1, 0, k - 1) or sizes[i] != expected_size:
                raise TheoremViolationError(
                    "unique-geodesic regime violated: vertex girth "
                    f"{lam} >= {2 * i + 2} but sphere {i} of {alpha} reports "
                    f"{entry.triple or entry.witness} with size {sizes[i]}",
                    witness=entry,
                )
    return LocalIntersectionNumbers(alpha, entries, sizes)


# ---------------------------------------------------------------------------
# Distance-regularity


@dataclass(frozen=True)
class IntersectionArray:
    """The array {b_0, .., b_{d-1}; c_1, .., c_d} of a distance-regular graph."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c):
            raise ValueError("b and c sequences must have equal length")
        if self.b and self.c[0] != 1:
            raise ValueError("c_1 must be 1")
        if any(x < 0 for x in self.b + self.c):
            raise ValueError("intersection numbers must be nonnegative")

    @property
    def diameter(self):
        return len(self.b)

    @property
    def valency(self):
        return self.b[0]

    @property
    def a(self):
        """a_0..a_d derived from k = c_h + a_h + b_h (with b_d = 0)."""
        k = self.valency
        out = [0]
        for h in range(1, self.diameter + 1):
            bh = self.b[h] if h < self.diameter else 0
            out.append(k - self.c[h - 1] - bh)
        return tuple(out)

    def notation(self):
        left = ",".join(str(x) for x in self.b)
        right = ",".join(str(x) for x in self.c)
        return "{%s;%s}" % (left, right)

    def __str__(self):
        return self.notation()


@dataclass(frozen=True)
class DistanceRegularityWitness:
    """Concrete reason a graph fails to be distance-regular.

    kind is 'valency' (two vertices of different degree), 'local' (one base
    vertex whose sphere carries non-constant triples) or 'cross' (two base
    vertices whose constant triples disagree).
    """

    kind: str
    level: int
    alpha: int
    vertex_a: int
    value_a: object
    vertex_b: int
    value_b: object


def distance_regular(g: Graph, check_cross_pairs=True):
    """Intersection array of g, or a witness that none exists.

    Every sphere of every base vertex is checked for constant triples, and
    the constants are compared across base vertices; the first discrepancy
    is returned as a DistanceRegularityWitness.  Non-regular graphs yield a
    'valency' witness immediately (regularity is part of the property, so
    this is a negative answer rather than a usage error).
    """
    if g.n == 0:
        raise ValueError("distance-regularity of the empty graph is undefined")
    if g.valency is None:
        by_degree = {}
        for v in range(g.n):
            by_degree.setdefault(g.degree(v), v)
        (da, va), (db, vb) = sorted(by_degree.items())[:2]
        return DistanceRegularityWitness("valency", 0, 0, va, da, vb, db)

    reference = None
    ref_alpha = None
    for alpha in range(g.n):
        dd = bfs_levels(g, alpha)
        entries = _level_triples(g, dd)
        for entry in entries:
            if not entry.constant:
                w = entry.witness
                return DistanceRegularityWitness(
                    "local", w.level, alpha, w.vertex_a, w.triple_a, w.vertex_b, w.triple_b
                )
        profile = (dd.eccentricity, tuple(e.triple for e in entries))
        if reference is None:
            reference, ref_alpha = profile, alpha
        elif profile != reference:
            level = 0
            if profile[0] == reference[0]:
                level = next(
                    i + 1
                    for i, (x, y) in enumerate(zip(profile[1], reference[1]))
                    if x != y
                )
            return DistanceRegularityWitness(
                "cross",
                level,
                ref_alpha,
                ref_alpha,
                reference[1][level - 1] if level else reference[0],
                alpha,
                profile[1][level - 1] if level else profile[0],
            )
        if not check_cross_pairs:
            break

    d, triples = reference
    b = (g.valency,) + tuple(t[2] for t in triples[:-1])
    c = tuple(t[0] for t in triples)
    return IntersectionArray(b, c)


def is_distance_regular(g: Graph) -> bool:
    return isinstance(distance_regular(g), IntersectionArray)


# ---------------------------------------------------------------------------
# Induced degrees


def induced_degree_profile(g: Graph, subset) -> tuple[int, ...]:
    """Sorted multiset of degrees of the subgraph induced on ``subset``."""
    vertices = sorted(set(subset))
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    inside = frozenset(vertices)
    return tuple(sorted(len(g.neighbor_set(v) & inside) for v in vertices))


def degree_two_count(g: Graph, subset) -> int:
    """Number of vertices of induced degree exactly 2 within ``subset``."""
    return sum(1 for d in induced_degree_profile(g, subset) if d == 2)
