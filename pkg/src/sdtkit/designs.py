"""Stabilizer-orbit structure above a sphere: intersection numbers, block designs,
and the classification of the adjacency relations between a sphere and an orbit.

Everything here sits on a graph together with a vertex stabilizer G_alpha.
The central objects, for a base vertex alpha and radius s:

* kappa(Delta, Omega): the common neighbour count |Gamma(delta) & Omega| over
  a G-orbit Delta, well defined whenever G is transitive on Delta and fixes
  Omega setwise.
* SphereOrbitProfile: the G_alpha-orbits Delta_1..Delta_n inside the sphere
  of radius s+1, with the entering/leaving multiplicities b', c' and the
  cross matrix a_{i,j}.
* BlockDesign: label the neighbours of alpha 1..k; every x in an orbit Delta
  determines the set S(x) of labels j whose sphere of radius s contains x.
  Under the design hypothesis (local girth >= 2s+2, stabilizer transitive on
  the radius-s sphere, t-homogeneous local action) the family of such S is a
  t-design on the k labels, with block classes Delta(S) of constant size e.
* AdjacencyRelationClass: the multiset of block-intersection sizes seen from
  any gamma in the radius-s sphere; depending on its shape the edges between
  the sphere and the orbit form a matching, a union of stars K_{1,b'}, or a
  uniform overlap structure that again carries a small design.

Every identity that is a proved consequence of the hypothesis is re-verified
on the instance at hand; a failure raises TheoremViolationError, making the
module double as a falsification harness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import HypothesisError, TheoremViolationError, TransitivityError
from .graphs import DistanceData, Graph, bfs_levels, distances_from, local_girth
from .permgroups import (
    GeneratedGroup,
    OrbitPartition,
    induced_action,
    is_t_homogeneous,
    max_homogeneity,
    orbits,
    point_stabilizer,
)


# ---------------------------------------------------------------------------
# Intersection numbers between invariant sets


def kappa(g: Graph, group: GeneratedGroup, delta, omega) -> int:
    """|Gamma(x) & omega| for x in delta, verified independent of x.

    Preconditions (both verified): the group is transitive on delta, and
    every generator fixes omega setwise.  The count is at least 1 exactly
    when some edge joins delta and omega.
    """
    delta = sorted(set(delta))
    omega_set = frozenset(omega)
    if not delta:
        raise ValueError("delta must be nonempty")
    part = orbits(group, delta)
    if len(part) > 1:
        a, b = part.representatives[0], part.representatives[1]
        ca = len(g.neighbor_set(a) & omega_set)
        cb = len(g.neighbor_set(b) & omega_set)
        raise TransitivityError(
            f"group is not transitive on the given set: {a} and {b} lie in "
            f"different orbits (neighbour counts {ca} vs {cb})",
            witnesses=(a, ca, b, cb),
        )
    for idx, gen in enumerate(group.generators):
        for pt in sorted(omega_set):
            if gen[pt] not in omega_set:
                raise TransitivityError(
                    f"generator #{idx} moves {pt} out of the target set",
                    witnesses=(idx, pt),
                )
    counts = {x: len(g.neighbor_set(x) & omega_set) for x in delta}
    values = set(counts.values())
    if len(values) != 1:
        lo = min(counts, key=counts.get)
        hi = max(counts, key=counts.get)
        raise TheoremViolationError(
            "intersection number depends on the representative despite "
            f"transitivity: {lo} has {counts[lo]}, {hi} has {counts[hi]}",
            witness=(lo, counts[lo], hi, counts[hi]),
        )
    return values.pop()


# ---------------------------------------------------------------------------
# Sphere-orbit profiles


@dataclass(frozen=True)
class SphereOrbitProfile:
    """G_alpha-orbit decomposition of the sphere of radius s+1 around alpha."""

    graph: Graph
    stabilizer: GeneratedGroup
    alpha: int
    s: int
    valency: int
    levels: DistanceData
    orbit_list: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]
    b_prime: tuple[int, ...]
    c_prime: tuple[int, ...]
    cross_matrix: tuple[tuple[int, ...], ...]
    b_s: int

    @property
    def orbit_count(self):
        return len(self.orbit_list)

    def sphere(self, i):
        return self.levels.sphere(i)


def sphere_orbit_profile(g: Graph, group: GeneratedGroup, alpha, s) -> SphereOrbitProfile:
    """Decompose the radius-(s+1) sphere into stabilizer orbits with all counts.

    Requires the stabilizer of alpha to be transitive on every sphere of
    radius 1..s (verified level by level) and s+1 within the eccentricity.
    The edge-counting identities between the sphere and each orbit, and
    between pairs of orbits, are re-verified exactly.
    """
    if group.degree != g.n:
        raise ValueError(f"group degree {group.degree} != vertex count {g.n}")
    if s < 1:
        raise ValueError(f"radius s must be >= 1, got {s}")
    k = g.valency
    if k is None:
        raise ValueError("profiles require a regular graph")
    dd = bfs_levels(g, alpha)
    if s + 1 > dd.eccentricity:
        raise ValueError(
            f"s+1 = {s + 1} exceeds the eccentricity {dd.eccentricity} of {alpha}"
        )
    stab = point_stabilizer(group, alpha)
    for i in range(1, s + 1):
        part = orbits(stab, dd.levels[i])
        if len(part) > 1:
            raise TransitivityError(
                f"stabilizer of {alpha} is not transitive on the sphere of "
                f"radius {i}: representatives {part.representatives[:2]}",
                witnesses=(i,) + part.representatives[:2],
            )

    part = orbits(stab, dd.levels[s + 1])
    orbit_list = part.orbits
    sphere_s = dd.levels[s]
    b_s = kappa(g, stab, sphere_s, dd.levels[s + 1])
    b_prime = tuple(kappa(g, stab, sphere_s, orb) for orb in orbit_list)
    c_prime = tuple(kappa(g, stab, orb, sphere_s) for orb in orbit_list)
    cross = tuple(
        tuple(kappa(g, stab, oi, oj) for oj in orbit_list) for oi in orbit_list
    )
    sizes = tuple(len(orb) for orb in orbit_list)

    if sum(b_prime) != b_s:
        raise TheoremViolationError(
            f"entering multiplicities {b_prime} do not sum to b_s = {b_s}",
            witness=(alpha, s, b_prime, b_s),
        )
    k_s = len(sphere_s)
    for i, orb in enumerate(orbit_list):
        if sizes[i] * c_prime[i] != k_s * b_prime[i]:
            raise TheoremViolationError(
                "edge count between the sphere and an orbit is inconsistent: "
                f"{sizes[i]}*{c_prime[i]} != {k_s}*{b_prime[i]}",
                witness=(alpha, s, i),
            )
        for j in range(len(orbit_list)):
            if sizes[i] * cross[i][j] != sizes[j] * cross[j][i]:
                raise TheoremViolationError(
                    "edge count between two orbits is inconsistent: "
                    f"{sizes[i]}*{cross[i][j]} != {sizes[j]}*{cross[j][i]}",
                    witness=(alpha, s, i, j),
                )
    return SphereOrbitProfile(
        g, stab, alpha, s, k, dd, orbit_list, sizes, b_prime, c_prime, cross, b_s
    )


# ---------------------------------------------------------------------------
# The design hypothesis and the block structure it induces


@dataclass(frozen=True)
class _BlockContext:
    """Shared scaffolding: neighbour labels, sphere blocks B_j, and Delta(S)."""

    beta: tuple[int, ...]  # label j (1-based) <-> vertex beta[j-1]
    c_prime: int
    sphere_blocks: tuple[frozenset, ...]  # B_j = sphere_s & Gamma_{s-1}(beta_j)
    blocks: tuple[tuple[int, ...], ...]  # B(c'): label sets S with Delta(S) != {}
    delta_of: dict  # frozenset(S) -> frozenset Delta(S)
    class_size: int  # e = |Delta(S)|, constant over blocks


def verify_hypothesis(profile: SphereOrbitProfile, delta_index, t=None):
    """Check the design hypothesis for one orbit; returns the effective t.

    Clauses checked, in order: valency >= 3; local girth >= 2s+2; stabilizer
    transitivity on the radius-s sphere (established by the profile); local
    action t-homogeneous with t <= c'.  When t is None the largest
    homogeneous t in 1..c' is chosen; an explicit t is clamped to c'.
    """
    g, stab, alpha, s = profile.graph, profile.stabilizer, profile.alpha, profile.s
    if not 0 <= delta_index < profile.orbit_count:
        raise ValueError(f"orbit index {delta_index} out of range")
    if profile.valency < 3:
        raise HypothesisError(
            f"valency {profile.valency} < 3", clause="valency"
        )
    lam = local_girth(g, alpha)
    if lam < 2 * s + 2:
        raise HypothesisError(
            f"local girth {lam} at {alpha} is below 2s+2 = {2 * s + 2}",
            clause="local-girth",
        )
    c_prime = profile.c_prime[delta_index]
    neighbours = profile.levels.levels[1]
    if t is None:
        t = max_homogeneity(stab, neighbours, limit=c_prime)
        if t == 0:
            raise HypothesisError(
                "local action is not even 1-homogeneous", clause="homogeneity"
            )
    else:
        t = min(t, c_prime)
        if t < 1 or not is_t_homogeneous(stab, neighbours, t):
            raise HypothesisError(
                f"local action is not {t}-homogeneous", clause="homogeneity"
            )
    return t


def _block_context(profile: SphereOrbitProfile, delta_index) -> _BlockContext:
    g, alpha, s = profile.graph, profile.alpha, profile.s
    k = profile.valency
    delta = profile.orbit_list[delta_index]
    c_prime = profile.c_prime[delta_index]
    beta = tuple(sorted(profile.levels.levels[1]))
    dist = {b: distances_from(g, b) for b in beta}
    sphere_s = frozenset(profile.levels.sphere(s))

    expected_block = (k - 1) ** (s - 1)
    sphere_blocks = []
    for b in beta:
        block = frozenset(v for v in sphere_s if dist[b][v] == s - 1)
        sphere_blocks.append(block)
        if len(block) != expected_block:
            raise TheoremViolationError(
                f"|B_j| = {len(block)} != (k-1)^(s-1) = {expected_block}",
                witness=(alpha, s, b),
            )
    union = frozenset().union(*sphere_blocks) if sphere_blocks else frozenset()
    if union != sphere_s or sum(len(b) for b in sphere_blocks) != len(sphere_s):
        raise TheoremViolationError(
            "the blocks B_j do not partition the radius-s sphere",
            witness=(alpha, s),
        )

    labels = range(1, k + 1)
    delta_of = {}
    for S in combinations(labels, c_prime):
        members = frozenset(
            x for x in delta if all(dist[beta[j - 1]][x] == s for j in S)
        )
        if members:
            delta_of[frozenset(S)] = members
    blocks = tuple(sorted(tuple(sorted(S)) for S in delta_of))

    # Delta(S) over S in B(c') must partition Delta with constant class size.
    sizes = {len(v) for v in delta_of.values()}
    covered = set()
    total = 0
    for members in delta_of.values():
        total += len(members)
        covered |= members
    if covered != set(delta) or total != len(delta):
        raise TheoremViolationError(
            "the classes Delta(S) fail to partition the orbit",
            witness=(alpha, s, delta_index),
        )
    if len(sizes) != 1:
        raise TheoremViolationError(
            f"|Delta(S)| is not constant across blocks: sizes {sorted(sizes)}",
            witness=(alpha, s, delta_index),
        )

    # Cross-check the pointwise description: S(x) = {j : dist(beta_j, x) = s}.
    for x in delta:
        s_x = tuple(j for j in labels if dist[beta[j - 1]][x] == s)
        if len(s_x) != c_prime:
            raise TheoremViolationError(
                f"|S(x)| = {len(s_x)} != c' = {c_prime} for x = {x}",
                witness=(alpha, s, x),
            )
        if x not in delta_of[frozenset(s_x)]:
            raise TheoremViolationError(
                f"x = {x} missing from its own class Delta(S(x))",
                witness=(alpha, s, x),
            )
    return _BlockContext(
        beta, c_prime, tuple(sphere_blocks), blocks, delta_of, sizes.pop()
    )


# ---------------------------------------------------------------------------
# delta_t and the t-design


def delta_t_formula(b_prime, c_prime, k, s, t) -> int:
    """Class size of the t-level: b'(k-1)^(s-1) * C(c'-1, t-1) / C(k-1, t-1).

    Exact integer arithmetic; a non-integral value means the inputs do not
    come from an instance satisfying the hypothesis.
    """
    if not 1 <= t <= c_prime <= k:
        raise ValueError(f"need 1 <= t <= c' <= k, got t={t}, c'={c_prime}, k={k}")
    if s < 1 or b_prime < 1:
        raise ValueError(f"need s >= 1 and b' >= 1, got s={s}, b'={b_prime}")
    numerator = b_prime * (k - 1) ** (s - 1) * comb(c_prime - 1, t - 1)
    denominator = comb(k - 1, t - 1)
    if numerator % denominator:
        raise HypothesisError(
            f"{numerator}/{denominator} is not an integer; no instance can "
            "realise these parameters",
            clause="integrality",
        )
    return numerator // denominator


@dataclass(frozen=True)
class BlockDesign:
    """The verified t-design carried by one orbit.

    Points are the labels 1..k of the neighbours of alpha (ascending vertex
    id); blocks are the label sets S with Delta(S) nonempty, each of size
    c'; every class Delta(S) has the same size e, and every j-subset of
    labels lies in lambda_j blocks, with lambda_j * e the class size of the
    j-level.
    """

    alpha: int
    s: int
    orbit_index: int
    k: int
    block_size: int  # c'
    t: int
    neighbor_labels: tuple[int, ...]  # vertex ids beta_1..beta_k
    blocks: tuple[tuple[int, ...], ...]
    class_size: int  # e
    lambda_levels: tuple[int, ...]  # lambda_1..lambda_t
    delta_levels: tuple[int, ...]  # delta_1..delta_t

    @property
    def lambda_t(self):
        return self.lambda_levels[-1]

    @property
    def delta_t(self):
        return self.delta_levels[-1]

    @property
    def num_blocks(self):
        return len(self.blocks)

    def parameters(self):
        """(t, k, c', lambda_t) of the verified design."""
        return (self.t, self.k, self.block_size, self.lambda_t)

    def notation(self):
        t, k, c, lam = self.parameters()
        return f"{t}-({k},{c},{lam})"


def extract_design(profile: SphereOrbitProfile, delta_index, t=None) -> BlockDesign:
    """Build and exhaustively verify the design carried by one orbit.

    ``t`` defaults to the largest homogeneity level of the local action (and
    is clamped to c'); the design property is then verified at t and at
    every lower level, including the counting identity lambda_j * e =
    delta_j against the closed-form class sizes.  With t = c' the blocks
    must be all c'-subsets with lambda = 1.
    """
    t = verify_hypothesis(profile, delta_index, t)
    ctx = _block_context(profile, delta_index)
    k = profile.valency
    s = profile.s
    b_prime = profile.b_prime[delta_index]
    c_prime = ctx.c_prime
    delta = profile.orbit_list[delta_index]
    e = ctx.class_size

    if (
        len(ctx.blocks) * e != len(delta)
        or len(delta) * c_prime != b_prime * k * (k - 1) ** (s - 1)
    ):
        raise TheoremViolationError(
            f"|B|*e = {len(ctx.blocks)}*{e} != |Delta| = {len(delta)}, or "
            f"|Delta|*c' != b'*k*(k-1)^(s-1)",
            witness=(profile.alpha, s, delta_index),
        )

    lambda_levels = []
    delta_levels = []
    block_sets = [frozenset(S) for S in ctx.blocks]
    for j in range(1, t + 1):
        counts = {
            sub: sum(1 for S in block_sets if set(sub) <= S)
            for sub in combinations(range(1, k + 1), j)
        }
        values = set(counts.values())
        if len(values) != 1:
            lo = min(counts, key=counts.get)
            hi = max(counts, key=counts.get)
            raise TheoremViolationError(
                f"not a {j}-design: {lo} lies in {counts[lo]} blocks, "
                f"{hi} in {counts[hi]}",
                witness=(profile.alpha, s, delta_index, j),
            )
        lam_j = values.pop()
        d_j = delta_t_formula(b_prime, c_prime, k, s, j)
        if lam_j * e != d_j:
            raise TheoremViolationError(
                f"lambda_{j} * e = {lam_j}*{e} != delta_{j} = {d_j}",
                witness=(profile.alpha, s, delta_index, j),
            )
        lambda_levels.append(lam_j)
        delta_levels.append(d_j)

    if t == c_prime:
        if lambda_levels[-1] != 1 or len(ctx.blocks) != comb(k, c_prime):
            raise TheoremViolationError(
                "with t = c' the design must consist of all c'-subsets with "
                f"lambda = 1; got lambda = {lambda_levels[-1]} and "
                f"{len(ctx.blocks)} blocks",
                witness=(profile.alpha, s, delta_index),
            )

    return BlockDesign(
        profile.alpha,
        s,
        delta_index,
        k,
        c_prime,
        t,
        ctx.beta,
        ctx.blocks,
        e,
        tuple(lambda_levels),
        tuple(delta_levels),
    )


# ---------------------------------------------------------------------------
# Adjacency relations between the sphere and an orbit


@dataclass(frozen=True)
class UniformOverlapDesign:
    """The design formed by the m-sets of blocks meeting a common sphere vertex.

    Point set: the blocks through a fixed label j (mu of them); blocks of
    the design: the m-sets B^gamma over gamma in B_j.  Always a 1-(mu, m,
    lam) design; when the induced two-point-stabilizer action is only
    tau-homogeneous for some tau < m, also a tau-(mu, m, lambda_tau) design.
    """

    mu: int
    m: int
    lam: int
    tau: int
    lambda_tau: int | None
    point_blocks: tuple[tuple[int, ...], ...]
    m_family: tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class AdjacencyRelationClass:
    """Shape of the bipartite adjacency between the radius-s sphere and an orbit."""

    alpha: int
    s: int
    orbit_index: int
    b_prime: int
    c_prime: int
    partition_multiset: tuple[int, ...]  # sorted descending, sums to b'
    structure: str  # 'matching' | 'star-union' | 'uniform' | 'irregular'
    m: int | None
    b: int | None
    f_j: int | None  # |B_j(S)|
    f_j_m: int | None  # |B_j(S_1..S_m)|
    overlap_design: UniformOverlapDesign | None


def verify_uniform_block_structure(b_j, block_keys, delta_of, adjacency, m, b):
    """Bookkeeping checks for a uniform overlap pattern, on abstract data.

    Arguments describe one side of the bipartite structure: ``b_j`` is the
    set of sphere vertices, ``block_keys`` the blocks through the chosen
    label, ``delta_of[S]`` the class of each block, and ``adjacency(gamma)``
    the orbit neighbours of a sphere vertex.  Every partition identity of
    the uniform case is verified exhaustively; returns a dict with mu, lam,
    f_j, f_j_m and the m-set family.  Raises TheoremViolationError on any
    failure, so synthetic structures can be checked without a graph.
    """
    b_j = frozenset(b_j)
    block_keys = list(block_keys)
    delta_j = frozenset().union(*(delta_of[S] for S in block_keys))

    member_blocks = {}
    for gamma in b_j:
        nbrs = adjacency(gamma) & delta_j
        touched = [S for S in block_keys if nbrs & delta_of[S]]
        if len(touched) != m or any(len(nbrs & delta_of[S]) != b for S in touched):
            raise TheoremViolationError(
                f"vertex {gamma} does not realise the uniform pattern "
                f"[{b}]*{m}: {sorted(len(nbrs & delta_of[S]) for S in touched)}",
                witness=gamma,
            )
        if len(nbrs) != m * b:
            raise TheoremViolationError(
                f"vertex {gamma} has {len(nbrs)} orbit neighbours, expected {m * b}",
                witness=gamma,
            )
        member_blocks[gamma] = frozenset(touched)

    for delta in sorted(delta_j):
        owners = [gamma for gamma in b_j if delta in adjacency(gamma)]
        if len(owners) != 1:
            raise TheoremViolationError(
                f"orbit vertex {delta} has {len(owners)} neighbours on the "
                "sphere side, expected exactly 1",
                witness=delta,
            )

    b_of = {
        S: frozenset(gamma for gamma in b_j if S in member_blocks[gamma])
        for S in block_keys
    }
    f_values = {len(b_of[S]) for S in block_keys}
    if len(f_values) != 1:
        raise TheoremViolationError(
            f"|B_j(S)| is not constant: {sorted(f_values)}", witness=None
        )
    f_j = f_values.pop()

    family = sorted({member_blocks[g] for g in b_j}, key=sorted)
    by_definition = []
    for T in combinations(block_keys, m):
        inter = frozenset.intersection(*(b_of[S] for S in T))
        if inter:
            by_definition.append(frozenset(T))
    if set(family) != set(by_definition):
        raise TheoremViolationError(
            "the m-set family from sphere vertices differs from the "
            "nonempty-intersection definition",
            witness=(family, by_definition),
        )

    cell_of = {T: frozenset.intersection(*(b_of[S] for S in T)) for T in family}
    fm_values = {len(cell_of[T]) for T in family}
    if len(fm_values) != 1:
        raise TheoremViolationError(
            f"|B_j(S_1..S_m)| is not constant: {sorted(fm_values)}", witness=None
        )
    f_j_m = fm_values.pop()

    # The cells partition B_j, and within each B_j(S) the cells through S
    # partition it; lam = f_j / f_j_m blocks of the family through each S.
    total = sum(len(cell_of[T]) for T in family)
    if total != len(b_j) or frozenset().union(*cell_of.values()) != b_j:
        raise TheoremViolationError("cells fail to partition the sphere block", witness=None)
    lam_values = set()
    for S in block_keys:
        through = [T for T in family if S in T]
        lam_values.add(len(through))
        union = frozenset().union(*(cell_of[T] for T in through)) if through else frozenset()
        if union != b_of[S] or sum(len(cell_of[T]) for T in through) != f_j:
            raise TheoremViolationError(
                f"cells through block {S} fail to partition B_j(S)", witness=S
            )
    if len(lam_values) != 1:
        raise TheoremViolationError(
            f"m-set family is not a 1-design: replication numbers {sorted(lam_values)}",
            witness=None,
        )
    lam = lam_values.pop()
    if lam * f_j_m != f_j:
        raise TheoremViolationError(
            f"lam * f_j(m) = {lam}*{f_j_m} != f_j = {f_j}", witness=None
        )

    # Orbit-side partitions: Delta_S(T) over T through S partitions Delta(S),
    # Delta_j(T) over T partitions Delta_j, with star sizes b and m*b.
    for T in family:
        cell_delta = frozenset()
        for S in T:
            piece = frozenset()
            for gamma in cell_of[T]:
                piece |= adjacency(gamma) & delta_of[S]
            if len(piece) != b * len(cell_of[T]):
                raise TheoremViolationError(
                    "edges between a cell and one class are not disjoint "
                    f"stars K(1,{b})",
                    witness=(T, S),
                )
            cell_delta |= piece
        if len(cell_delta) != m * b * len(cell_of[T]):
            raise TheoremViolationError(
                f"edges between a cell and the orbit are not disjoint stars "
                f"K(1,{m * b})",
                witness=T,
            )
    for S in block_keys:
        pieces = []
        for T in family:
            if S not in T:
                continue
            piece = frozenset()
            for gamma in cell_of[T]:
                piece |= adjacency(gamma) & delta_of[S]
            pieces.append(piece)
        total = sum(len(p) for p in pieces)
        union = frozenset().union(*pieces) if pieces else frozenset()
        if union != delta_of[S] or total != len(delta_of[S]):
            raise TheoremViolationError(
                f"the pieces Delta_S(T) fail to partition Delta(S)", witness=S
            )

    return {
        "mu": len(block_keys),
        "m": m,
        "b": b,
        "lam": lam,
        "f_j": f_j,
        "f_j_m": f_j_m,
        "family": family,
        "b_of": b_of,
    }


def adjacency_relation_class(profile: SphereOrbitProfile, delta_index) -> AdjacencyRelationClass:
    """Classify the edges between the radius-s sphere and one orbit.

    Computes the multiset of block-intersection sizes seen from each sphere
    vertex, verifies it is independent of the witness, and tags the shape:
    a matching when b' = 1, a union of stars when the multiset is [b'], a
    uniform overlap [b]*m otherwise (with its small design re-verified,
    including the tau-design when the induced action is only
    tau-homogeneous for tau < m), or irregular.
    """
    verify_hypothesis(profile, delta_index, t=None)
    ctx = _block_context(profile, delta_index)
    g = profile.graph
    alpha, s = profile.alpha, profile.s
    k = profile.valency
    delta = frozenset(profile.orbit_list[delta_index])
    b_prime = profile.b_prime[delta_index]
    c_prime = ctx.c_prime
    block_sets = [frozenset(S) for S in ctx.blocks]

    # Delta_j both ways: through the sphere blocks and through distances.
    dist = {b: distances_from(g, b) for b in ctx.beta}
    delta_j = {}
    for j in range(1, k + 1):
        via_dist = frozenset(x for x in delta if dist[ctx.beta[j - 1]][x] == s)
        via_blocks = frozenset()
        for gamma in ctx.sphere_blocks[j - 1]:
            via_blocks |= g.neighbor_set(gamma) & delta
        if via_dist != via_blocks:
            raise TheoremViolationError(
                f"the two descriptions of Delta_j disagree for j = {j}",
                witness=(alpha, s, delta_index, j),
            )
        expected = b_prime * (k - 1) ** (s - 1)
        if len(via_dist) != expected:
            raise TheoremViolationError(
                f"|Delta_j| = {len(via_dist)} != b'(k-1)^(s-1) = {expected}",
                witness=(alpha, s, delta_index, j),
            )
        delta_j[j] = via_dist

    # The intersection multiset, from every witness gamma in every block.
    multiset = None
    witness_info = None
    for j in range(1, k + 1):
        through_j = [S for S in block_sets if j in S]
        for gamma in sorted(ctx.sphere_blocks[j - 1]):
            nbrs = g.neighbor_set(gamma) & delta
            parts = [len(nbrs & ctx.delta_of[S]) for S in through_j]
            parts = tuple(sorted((x for x in parts if x), reverse=True))
            if sum(parts) != b_prime or sum(
                len(nbrs & ctx.delta_of[S]) for S in through_j
            ) != len(nbrs):
                raise TheoremViolationError(
                    f"neighbours of {gamma} are not partitioned by the "
                    "classes through its label",
                    witness=(alpha, s, delta_index, gamma),
                )
            if multiset is None:
                multiset, witness_info = parts, (j, gamma)
            elif parts != multiset:
                raise TheoremViolationError(
                    "the intersection multiset depends on the witness: "
                    f"{witness_info} gives {multiset}, ({j}, {gamma}) gives {parts}",
                    witness=(witness_info, multiset, (j, gamma), parts),
                )

    m = len(multiset)
    uniform = len(set(multiset)) == 1
    b = multiset[0] if uniform else None
    if b_prime == 1:
        structure = "matching"
    elif m == 1:
        structure = "star-union"
    elif uniform:
        structure = "uniform"
    else:
        structure = "irregular"

    def b_of_block(j, S):
        out = frozenset()
        for x in ctx.delta_of[S]:
            out |= g.neighbor_set(x) & ctx.sphere_blocks[j - 1]
        return out

    f_j = f_j_m = None
    overlap = None

    if structure in ("matching", "star-union"):
        # Single-block pattern: stars K(1, b') between B_j and Delta_j, and
        # the sets B_j(S) over blocks through j are pairwise disjoint.
        f_sizes = set()
        for j in range(1, k + 1):
            through_j = [S for S in block_sets if j in S]
            for gamma in ctx.sphere_blocks[j - 1]:
                if len(g.neighbor_set(gamma) & delta_j[j]) != b_prime:
                    raise TheoremViolationError(
                        f"vertex {gamma} has the wrong star size in Delta_j",
                        witness=(alpha, s, delta_index, j, gamma),
                    )
            for x in sorted(delta_j[j]):
                if len(g.neighbor_set(x) & ctx.sphere_blocks[j - 1]) != 1:
                    raise TheoremViolationError(
                        f"orbit vertex {x} sees more than one vertex of B_j",
                        witness=(alpha, s, delta_index, j, x),
                    )
            b_of = {S: b_of_block(j, S) for S in through_j}
            f_sizes |= {len(v) for v in b_of.values()}
            for Sa, Sb in combinations(through_j, 2):
                if b_of[Sa] & b_of[Sb]:
                    raise TheoremViolationError(
                        f"B_j(S) and B_j(T) overlap for j={j}: "
                        f"{sorted(Sa)} vs {sorted(Sb)}",
                        witness=(alpha, s, delta_index, j, tuple(Sa), tuple(Sb)),
                    )
            if structure == "matching":
                # every class matches its preimage one-to-one
                for S in through_j:
                    for x in sorted(ctx.delta_of[S]):
                        if len(g.neighbor_set(x) & b_of[S]) != 1:
                            raise TheoremViolationError(
                                "edges between B_j(S) and Delta(S) are not a matching",
                                witness=(alpha, s, delta_index, j, tuple(S), x),
                            )
                    for gamma in sorted(b_of[S]):
                        if len(g.neighbor_set(gamma) & ctx.delta_of[S]) != 1:
                            raise TheoremViolationError(
                                "edges between B_j(S) and Delta(S) are not a matching",
                                witness=(alpha, s, delta_index, j, tuple(S), gamma),
                            )
                # classes through j partition Delta_j, preimages partition B_j
                if sum(len(ctx.delta_of[S]) for S in through_j) != len(delta_j[j]):
                    raise TheoremViolationError(
                        "classes through j fail to partition Delta_j",
                        witness=(alpha, s, delta_index, j),
                    )
                if sum(len(b_of[S]) for S in through_j) != len(
                    ctx.sphere_blocks[j - 1]
                ):
                    raise TheoremViolationError(
                        "preimages B_j(S) fail to partition B_j",
                        witness=(alpha, s, delta_index, j),
                    )
        if len(f_sizes) != 1:
            raise TheoremViolationError(
                f"|B_j(S)| not constant: {sorted(f_sizes)}",
                witness=(alpha, s, delta_index),
            )
        f_j = f_j_m = f_sizes.pop()

    elif structure == "uniform":
        results = []
        for j in range(1, k + 1):
            through_j = [S for S in block_sets if j in S]
            data = verify_uniform_block_structure(
                ctx.sphere_blocks[j - 1],
                through_j,
                ctx.delta_of,
                lambda gamma: g.neighbor_set(gamma) & delta,
                m,
                b,
            )
            results.append((j, data))
        j, data = results[0]
        f_j, f_j_m = data["f_j"], data["f_j_m"]

        # Induced action of the two-point stabilizer on the blocks through j,
        # and the tau-design level of the m-set family.
        beta_j = ctx.beta[j - 1]
        two_point = point_stabilizer(profile.stabilizer, beta_j)
        through_j = [S for S in block_sets if j in S]
        block_vertex_sets = [ctx.delta_of[S] for S in through_j]
        induced = induced_action(two_point.generators, block_vertex_sets)
        mu = len(through_j)
        induced_group = GeneratedGroup(induced, mu)
        # Largest homogeneity level up to m; t = mu is always trivially
        # homogeneous, so levels above m carry no information here.
        tau = max_homogeneity(induced_group, range(mu), limit=m)
        family_idx = [
            frozenset(through_j.index(S) for S in T) for T in data["family"]
        ]
        lambda_tau = None
        if tau >= m:
            if len(family_idx) != comb(mu, m):
                raise TheoremViolationError(
                    f"{tau}-homogeneous action but the m-set family misses "
                    f"some m-subsets: {len(family_idx)} of {comb(mu, m)}",
                    witness=(alpha, s, delta_index, j),
                )
        elif tau >= 1:
            counts = {
                sub: sum(1 for T in family_idx if set(sub) <= T)
                for sub in combinations(range(mu), tau)
            }
            values = set(counts.values())
            if len(values) != 1:
                raise TheoremViolationError(
                    f"the m-set family is not a {tau}-design: counts "
                    f"{sorted(values)}",
                    witness=(alpha, s, delta_index, j),
                )
            lambda_tau = values.pop()
            f_tau_sizes = set()
            for sub in combinations(through_j, tau):
                inter = frozenset.intersection(*(data["b_of"][S] for S in sub))
                f_tau_sizes.add(len(inter))
            if len(f_tau_sizes) != 1:
                raise TheoremViolationError(
                    f"|B_j(S_1..S_tau)| not constant: {sorted(f_tau_sizes)}",
                    witness=(alpha, s, delta_index, j),
                )
            if lambda_tau * f_j_m != f_tau_sizes.pop():
                raise TheoremViolationError(
                    "lambda_tau * f_j(m) != f_j(tau)",
                    witness=(alpha, s, delta_index, j),
                )
        overlap = UniformOverlapDesign(
            mu,
            m,
            data["lam"],
            tau,
            lambda_tau,
            tuple(tuple(sorted(S)) for S in through_j),
            tuple(
                tuple(sorted(tuple(sorted(S)) for S in T)) for T in data["family"]
            ),
        )

    return AdjacencyRelationClass(
        alpha,
        s,
        delta_index,
        b_prime,
        c_prime,
        multiset,
        structure,
        m if uniform or m == 1 else None,
        b,
        f_j,
        f_j_m,
        overlap,
    )


# ---------------------------------------------------------------------------
# Catalogue of small 1-designs


@dataclass(frozen=True)
class OneDesignClass:
    """An isomorphism class of 1-designs with distinct blocks on k points."""

    points: int
    block_size: int
    replication: int  # lambda_1
    num_blocks: int
    strength: int  # largest t <= block size with the t-design property
    families: tuple  # every labelling in the class, blocks 1-based and sorted

    def notation(self):
        return f"1-({self.points},{self.block_size},{self.replication})"

    def strength_notation(self):
        if self.strength == 1:
            return None
        lam = _level_count(self.families[0], self.strength)
        return f"{self.strength}-({self.points},{self.block_size},{lam})"


def _level_count(family, t):
    points = sorted({x for block in family for x in block})
    counts = {
        sub: sum(1 for block in family if set(sub) <= set(block))
        for sub in combinations(points, t)
    }
    values = set(counts.values())
    return values.pop() if len(values) == 1 else None


def _design_strength(family, block_size):
    strength = 0
    for t in range(1, block_size + 1):
        if _level_count(family, t) in (None, 0):
            break
        strength = t
    return strength


def enumerate_small_one_designs(k, c):
    """All 1-designs with distinct size-c blocks on k in {3,4} points.

    Families are grouped up to relabelling of the points; each class lists
    every labelling.  Classes come back sorted by replication number.
    """
    if k not in (3, 4):
        raise ValueError(f"the catalogue covers k in {{3, 4}} only, got k={k}")
    if not 1 <= c <= k:
        raise ValueError(f"block size {c} out of range for k={k}")
    from itertools import permutations

    points = tuple(range(1, k + 1))
    all_blocks = list(combinations(points, c))
    designs = []
    for r in range(1, len(all_blocks) + 1):
        for family in combinations(all_blocks, r):
            counts = [sum(1 for block in family if x in block) for x in points]
            if len(set(counts)) == 1 and counts[0] >= 1:
                designs.append(tuple(sorted(family)))

    classes = {}
    for family in designs:
        images = []
        for perm in permutations(points):
            relabel = dict(zip(points, perm))
            image = tuple(
                sorted(tuple(sorted(relabel[x] for x in block)) for block in family)
            )
            images.append(image)
        canon = min(images)
        classes.setdefault(canon, set()).add(family)

    out = []
    for canon in sorted(classes):
        families = tuple(sorted(classes[canon]))
        replication = sum(1 for block in canon if 1 in block)
        out.append(
            OneDesignClass(
                k,
                c,
                replication,
                len(canon),
                _design_strength(canon, c),
                families,
            )
        )
    out.sort(key=lambda cls: cls.replication)
    return out


def one_design_catalogue(k):
    """Catalogue rows for all block sizes 1..k, ordered by (c, lambda_1)."""
    rows = []
    for c in range(1, k + 1):
        rows.extend(enumerate_small_one_designs(k, c))
    return rows
