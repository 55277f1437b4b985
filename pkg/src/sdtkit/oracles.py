"""Independent brute-force cross-checks.

Each function here recomputes a quantity by a different algorithm than the
main path uses, for oracle-style testing and the `oracle` CLI command:
distances by Floyd-Warshall instead of BFS, girth by per-edge deletion
instead of branch-tracked BFS, distance-regularity by a recount over all
ordered vertex pairs, and group elements by plain multiplicative closure
instead of a stabilizer chain.
"""

from __future__ import annotations

import math

from .errors import ScaleError
from .graphs import Graph, IntersectionArray
from .permgroups import compose, identity

CLOSURE_CAP = 200_000


def floyd_warshall(g: Graph):
    """All-pairs distances, cubic time; infinity where unreachable."""
    inf = math.inf
    dist = [[inf] * g.n for _ in range(g.n)]
    for v in range(g.n):
        dist[v][v] = 0
        for u in g.adjacency[v]:
            dist[v][u] = 1
    for mid in range(g.n):
        row_mid = dist[mid]
        for i in range(g.n):
            d_im = dist[i][mid]
            if d_im is inf:
                continue
            row_i = dist[i]
            for j in range(g.n):
                alt = d_im + row_mid[j]
                if alt < row_i[j]:
                    row_i[j] = alt
    return dist


def girth_by_edge_deletion(g: Graph) -> float:
    """Shortest cycle through each edge: 1 + dist(u, v) in the graph minus (u, v)."""
    best = math.inf
    for u, v in g.edges():
        # BFS from u to v avoiding the edge (u, v)
        dist = {u: 0}
        frontier = [u]
        while frontier and v not in dist:
            nxt = []
            for x in frontier:
                for y in g.adjacency[x]:
                    if (x, y) in ((u, v), (v, u)):
                        continue
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def vertex_girth_by_edge_deletion(g: Graph, alpha) -> float:
    """Shortest cycle through alpha via deletion of each incident edge."""
    best = math.inf
    for v in g.adjacency[alpha]:
        dist = {alpha: 0}
        frontier = [alpha]
        while frontier and v not in dist:
            nxt = []
            for x in frontier:
                for y in g.adjacency[x]:
                    if (x, y) in ((alpha, v), (v, alpha)):
                        continue
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def distance_regular_recount(g: Graph):
    """Distance-regularity by a recount over all ordered vertex pairs.

    Collates |Gamma_{h-1}(u) & Gamma(v)| and |Gamma_{h+1}(u) & Gamma(v)|
    over every ordered pair (u, v) at distance h, using Floyd-Warshall
    distances; returns the IntersectionArray or None.
    """
    if g.n == 0 or g.valency is None:
        return None
    dist = floyd_warshall(g)
    d = max(int(x) for row in dist for x in row)
    c_values = [set() for _ in range(d + 1)]
    b_values = [set() for _ in range(d + 1)]
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            h = int(dist[u][v])
            c = sum(1 for w in g.adjacency[v] if dist[u][w] == h - 1)
            b = sum(1 for w in g.adjacency[v] if dist[u][w] == h + 1)
            c_values[h].add(c)
            b_values[h].add(b)
    for h in range(1, d + 1):
        if len(c_values[h]) != 1 or len(b_values[h]) != 1:
            return None
    b = (g.valency,) + tuple(b_values[h].pop() for h in range(1, d))
    c = tuple(c_values[h].pop() for h in range(1, d + 1))
    return IntersectionArray(b, c)


def group_closure(generators, degree, cap=CLOSURE_CAP):
    """Every product of the generators, by breadth-first closure."""
    elements = {identity(degree)}
    frontier = [identity(degree)]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in elements:
                    elements.add(q)
                    nxt.append(q)
                    if len(elements) > cap:
                        raise ScaleError(f"group closure exceeded cap {cap}")
        frontier = nxt
    return elements
