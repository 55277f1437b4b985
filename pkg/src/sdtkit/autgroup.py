"""Automorphism-group generators via equitable-partition refinement with backtracking.

The search individualises the smallest vertex of the first non-singleton
cell, refines with iterated neighbour-count splitting, and explores
left-first.  Discovered generators prune sibling branches through orbit
computation, so on highly symmetric graphs the tree stays close to one node
per orbit.  A degree-pruned exhaustive search over vertex bijections serves
as the oracle at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ScaleError
from .graphs import Graph

BRUTE_FORCE_CAP = 12


@dataclass
class SearchStats:
    nodes_visited: int = 0
    pruned_by_refinement: int = 0
    generators_found: int = 0


def equitable_refinement(g: Graph, cells=None):
    """Refine an ordered partition until neighbour counts are cell-constant.

    Cells split by the vector of neighbour counts into every current cell;
    fragments are ordered by their count vectors so the result depends only
    on the graph and the input partition.
    """
    if cells is None:
        cells = [tuple(range(g.n))]
    cells = [tuple(c) for c in cells]
    while True:
        cell_id = [0] * g.n
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_id[v] = idx
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            signatures = {}
            for v in cell:
                counts = [0] * len(cells)
                for u in g.adjacency[v]:
                    counts[cell_id[u]] += 1
                signatures.setdefault(tuple(counts), []).append(v)
            if len(signatures) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(signatures):
                    new_cells.append(tuple(sorted(signatures[sig])))
        cells = new_cells
        if not changed:
            return tuple(cells)


def _individualize(cells, cell_index, v):
    cell = cells[cell_index]
    rest = tuple(x for x in cell if x != v)
    return cells[:cell_index] + ((v,), rest) + cells[cell_index + 1 :]


def _shape(cells):
    return tuple(len(c) for c in cells)


def _first_non_singleton(cells):
    for i, c in enumerate(cells):
        if len(c) > 1:
            return i
    return None


def _is_automorphism(g: Graph, perm):
    for u in range(g.n):
        image_u = perm[u]
        for v in g.adjacency[u]:
            if not g.has_edge(image_u, perm[v]):
                return False
    return True


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def absorb(self, perm):
        for i, x in enumerate(perm):
            self.union(i, x)


def automorphism_generators(g: Graph):
    """Generators of the automorphism group, plus search statistics.

    Returns (list of image tuples, SearchStats).  The identity-only group
    yields an empty list.
    """
    stats = SearchStats()
    if g.n == 0:
        return [], stats

    root = equitable_refinement(g)
    stats.nodes_visited += 1

    # Leftmost descent: individualise the smallest vertex of the first
    # non-singleton cell at every step.  This spine fixes the reference
    # labelling that all candidate automorphisms are compared against.
    spine_cells = []
    spine_target = []
    spine_vertex = []
    part = root
    while True:
        tci = _first_non_singleton(part)
        if tci is None:
            break
        v = part[tci][0]
        spine_cells.append(part)
        spine_target.append(tci)
        spine_vertex.append(v)
        part = equitable_refinement(g, _individualize(part, tci, v))
        stats.nodes_visited += 1
    leaf_order = [c[0] for c in part]
    position = {v: i for i, v in enumerate(leaf_order)}
    spine_shapes = [_shape(c) for c in spine_cells] + [_shape(part)]

    def candidate_from(leaf_cells):
        images = [0] * g.n
        for pos, cell in enumerate(leaf_cells):
            images[leaf_order[pos]] = cell[0]
        return tuple(images)

    def search_subtree(cells, depth):
        """First automorphism in this subtree matching the spine shape, or None."""
        if _shape(cells) != spine_shapes[depth]:
            stats.pruned_by_refinement += 1
            return None
        if depth == len(spine_vertex):
            cand = candidate_from(cells)
            return cand if _is_automorphism(g, cand) else None
        tci = spine_target[depth]
        for v in cells[tci]:
            stats.nodes_visited += 1
            child = equitable_refinement(g, _individualize(cells, tci, v))
            found = search_subtree(child, depth + 1)
            if found is not None:
                return found
        return None

    generators = []
    uf = _UnionFind(g.n)
    # Deepest spine level first: when level l is processed, every
    # automorphism fixing the first l+1 spine vertices is already generated,
    # so orbit pruning of siblings is sound and maximally effective.
    for depth in range(len(spine_vertex) - 1, -1, -1):
        cells = spine_cells[depth]
        tci = spine_target[depth]
        v0 = spine_vertex[depth]
        tried = [v0]
        for v in cells[tci]:
            if v == v0:
                continue
            rv = uf.find(v)
            if any(uf.find(u) == rv for u in tried):
                continue
            stats.nodes_visited += 1
            child = equitable_refinement(g, _individualize(cells, tci, v))
            found = search_subtree(child, depth + 1)
            if found is not None:
                generators.append(found)
                uf.absorb(found)
            tried.append(v)

    stats.generators_found = len(generators)
    return generators, stats


def brute_force_automorphisms(g: Graph):
    """Every adjacency-preserving bijection, by degree-pruned backtracking.

    Hard-capped at n <= 12; intended as the oracle for the refinement search.
    """
    if g.n > BRUTE_FORCE_CAP:
        raise ScaleError(
            f"brute-force automorphism search capped at n={BRUTE_FORCE_CAP}, got {g.n}"
        )
    degrees = [g.degree(v) for v in range(g.n)]
    found = []
    images = [-1] * g.n
    used = [False] * g.n

    def extend(u):
        if u == g.n:
            found.append(tuple(images))
            return
        for w in range(g.n):
            if used[w] or degrees[w] != degrees[u]:
                continue
            ok = True
            for v in range(u):
                if g.has_edge(u, v) != g.has_edge(w, images[v]):
                    ok = False
                    break
            if ok:
                images[u] = w
                used[w] = True
                extend(u + 1)
                used[w] = False
        images[u] = -1

    extend(0)
    return found
