"""Permutation groups given by generators, with exact order/membership/stabilizer queries.

Permutations are image tuples: p[i] is the image of point i.  Composition is
left-to-right, compose(p, q) = "apply p, then q", matching the exponent
notation x^(pq) = (x^p)^q.

Groups carry a deterministic (non-randomised) base-and-strong-generating-set
structure: base points are chosen as the smallest point moved at the moment a
new level is needed, orbits are closed breadth-first in sorted order, and the
whole chain is reproducible for snapshot tests.  Degrees here stay small
(corpus graphs have at most a few hundred vertices), so no randomisation or
shallow-tree tricks are needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb

from .errors import (
    CycleNotationError,
    DomainInvarianceError,
    PermutationError,
    ScaleError,
)

#: Hard cap on the number of t-subsets enumerated by homogeneity tests.
SUBSET_CAP = 1 << 20


# ---------------------------------------------------------------------------
# Elementary permutation arithmetic


def identity(n):
    return tuple(range(n))


def compose(p, q):
    """Apply p, then q."""
    return tuple(q[x] for x in p)


def inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_identity(p):
    return all(i == x for i, x in enumerate(p))


def validate_permutation(p, degree=None):
    """Return p as a tuple after checking it is a bijection on 0..len(p)-1."""
    p = tuple(p)
    if degree is not None and len(p) != degree:
        raise PermutationError(f"expected degree {degree}, got {len(p)}")
    seen = [False] * len(p)
    for x in p:
        if not isinstance(x, int) or not 0 <= x < len(p) or seen[x]:
            raise PermutationError(f"image sequence {p} is not a permutation")
        seen[x] = True
    return p


def apply_to_set(p, points):
    return frozenset(p[x] for x in points)


def cycle_decomposition(p):
    """Cycles of length >= 2, each rotated to start at its minimum, sorted."""
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def format_cycles(p):
    cycles = cycle_decomposition(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, cyc)) + ")" for cyc in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text, degree):
    """Parse one permutation at the given degree.

    Accepts cycle notation like "(0 1 2)(3 4)" (comma or space separated,
    fixed points implicit) or a bare image sequence like "1 2 0".
    """
    text = text.strip()
    if not text or text == "()":
        return identity(degree)
    if text.startswith("("):
        leftover = _CYCLE_RE.sub("", text).strip()
        if leftover:
            raise CycleNotationError(f"unparsable text {leftover!r} in {text!r}")
        images = list(identity(degree))
        used = set()
        for match in _CYCLE_RE.finditer(text):
            body = match.group(1).strip()
            if not body:
                continue
            points = [int(tok) for tok in re.split(r"[,\s]+", body)]
            for pt in points:
                if pt >= degree or pt < 0:
                    raise CycleNotationError(
                        f"point {pt} out of range for degree {degree}"
                    )
                if pt in used:
                    raise CycleNotationError(f"point {pt} repeated in {text!r}")
                used.add(pt)
            for a, b in zip(points, points[1:]):
                images[a] = b
            images[points[-1]] = points[0]
        return validate_permutation(images, degree)
    images = [int(tok) for tok in re.split(r"[,\s]+", text)]
    return validate_permutation(images, degree)


def parse_generators(text, degree):
    """Parse a generator list, one permutation per nonempty line ('#' comments)."""
    gens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            gens.append(parse_permutation(line, degree))
    return gens


# ---------------------------------------------------------------------------
# Stabilizer chains


class _Level:
    __slots__ = ("point", "transversal")

    def __init__(self, point, degree):
        self.point = point
        self.transversal = {point: identity(degree)}


class GeneratedGroup:
    """Permutation group with a stabilizer chain for exact queries.

    The chain is built with the deterministic Schreier-Sims procedure: new
    strong generators are sifted residues, each level's orbit is re-closed
    breadth-first, and levels are verified deepest-first so every Schreier
    generator sifts to the identity on completion.  Order is the product of
    the fundamental orbit lengths and is exact (Python integers).
    """

    def __init__(self, generators, degree=None, _base_prefix=()):
        generators = [tuple(g) for g in generators]
        if degree is None:
            if not generators:
                raise PermutationError("degree required for an empty generator list")
            degree = len(generators[0])
        for g in generators:
            validate_permutation(g, degree)
        self.degree = degree
        self.generators = tuple(generators)
        self._levels: list[_Level] = []
        self._strong: list[tuple[tuple[int, ...], int]] = []  # (perm, level)
        for b in _base_prefix:
            if not 0 <= b < degree:
                raise ValueError(f"base point {b} out of range")
            self._levels.append(_Level(b, degree))
        self._build()

    # -- construction ------------------------------------------------------

    def _gens_at(self, level):
        return [g for g, lv in self._strong if lv >= level]

    def _add_strong(self, perm, start_level):
        """Sift from start_level; record a nontrivial residue.  Returns its level."""
        residue, level = self._sift(perm, start_level)
        if is_identity(residue):
            return None
        if level == len(self._levels):
            moved = min(i for i, x in enumerate(residue) if x != i)
            self._levels.append(_Level(moved, self.degree))
        self._strong.append((residue, level))
        for i in range(level + 1):
            self._recompute_orbit(i)
        return level

    def _recompute_orbit(self, level):
        lv = self._levels[level]
        gens = self._gens_at(level)
        trans = {lv.point: identity(self.degree)}
        frontier = [lv.point]
        while frontier:
            nxt = []
            for pt in sorted(frontier):
                for g in gens:
                    image = g[pt]
                    if image not in trans:
                        trans[image] = compose(trans[pt], g)
                        nxt.append(image)
            frontier = nxt
        lv.transversal = trans

    def _build(self):
        for g in self.generators:
            if not is_identity(g):
                self._add_strong(g, 0)
        # Verify levels deepest-first: all Schreier generators of a verified
        # level sift to the identity through the chain below it.
        i = len(self._levels) - 1
        while i >= 0:
            inserted_at = self._verify_level(i)
            if inserted_at is None:
                i -= 1
            else:
                i = inserted_at
        # With the chain complete, membership must accept every generator.
        for g in self.generators:
            residue, _ = self._sift(g)
            if not is_identity(residue):
                raise AssertionError("stabilizer chain failed to absorb a generator")

    def _verify_level(self, level):
        """Process all Schreier generators of one level.

        Returns None when all sift to the identity, else the level where a
        new strong generator was inserted (always > ``level``).
        """
        lv = self._levels[level]
        gens = self._gens_at(level)
        for pt in sorted(lv.transversal):
            u = lv.transversal[pt]
            for g in gens:
                rep = lv.transversal[g[pt]]
                schreier = compose(compose(u, g), inverse(rep))
                inserted = self._add_strong(schreier, level + 1)
                if inserted is not None:
                    return inserted
        return None

    def _sift(self, perm, start_level=0):
        """Strip perm through the chain; returns (residue, level reached)."""
        for i in range(start_level, len(self._levels)):
            lv = self._levels[i]
            image = perm[lv.point]
            if image == lv.point:
                continue
            rep = lv.transversal.get(image)
            if rep is None:
                return perm, i
            perm = compose(perm, inverse(rep))
        return perm, len(self._levels)

    # -- queries -----------------------------------------------------------

    @property
    def base(self):
        return tuple(lv.point for lv in self._levels)

    @property
    def strong_generators(self):
        return tuple(g for g, _ in self._strong)

    @property
    def order(self) -> int:
        order = 1
        for lv in self._levels:
            order *= len(lv.transversal)
        return order

    def contains(self, perm) -> bool:
        perm = validate_permutation(perm, self.degree)
        residue, _ = self._sift(perm)
        return is_identity(residue)

    def orbit(self, point) -> frozenset:
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range")
        seen = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for pt in frontier:
                for g in self.generators:
                    if g[pt] not in seen:
                        seen.add(g[pt])
                        nxt.append(g[pt])
            frontier = nxt
        return frozenset(seen)

    def coset_representative(self, point):
        """An element sending the first base point to ``point``, or None."""
        if not self._levels:
            return None
        return self._levels[0].transversal.get(point)

    def elements(self, cap=None):
        """All group elements, deterministically ordered.  Guarded by ``cap``."""
        if cap is not None and self.order > cap:
            raise ScaleError(f"group order {self.order} exceeds cap {cap}")

        def rec(level):
            if level == len(self._levels):
                yield identity(self.degree)
                return
            lv = self._levels[level]
            reps = [lv.transversal[p] for p in sorted(lv.transversal)]
            for tail in rec(level + 1):
                for rep in reps:
                    yield compose(tail, rep)

        return list(rec(0))

    def stabilizer(self, point) -> "GeneratedGroup":
        return point_stabilizer(self, point)


def schreier_sims(generators, degree=None) -> GeneratedGroup:
    """Build a GeneratedGroup (thin constructor wrapper, kept for discoverability)."""
    return GeneratedGroup(generators, degree)


def point_stabilizer(group: GeneratedGroup, point) -> GeneratedGroup:
    """The subgroup fixing ``point``, as a fresh GeneratedGroup.

    Rebuilds the chain with ``point`` forced first in the base; the strong
    generators below the first level then generate the stabilizer, and the
    orbit-stabilizer identity |G| = |orbit| * |G_point| is re-checked.
    """
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} out of range for degree {group.degree}")
    rebased = GeneratedGroup(group.generators, group.degree, _base_prefix=(point,))
    stab = GeneratedGroup(rebased._gens_at(1), group.degree)
    orbit_len = len(group.orbit(point))
    if orbit_len * stab.order != group.order:
        raise AssertionError(
            "orbit-stabilizer identity failed: "
            f"{orbit_len} * {stab.order} != {group.order}"
        )
    return stab


# ---------------------------------------------------------------------------
# Orbits on points and on subsets


@dataclass(frozen=True)
class OrbitPartition:
    domain: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    def orbit_of(self, point):
        for orb in self.orbits:
            if point in orb:
                return orb
        raise KeyError(point)

    def __len__(self):
        return len(self.orbits)


def _check_domain_invariant(generators, domain_set):
    for idx, g in enumerate(generators):
        for pt in sorted(domain_set):
            if g[pt] not in domain_set:
                raise DomainInvarianceError(
                    f"generator #{idx} maps {pt} to {g[pt]}, outside the domain",
                    generator_index=idx,
                    point=pt,
                )


def orbits(group: GeneratedGroup, domain) -> OrbitPartition:
    """Orbit partition of ``domain``, which must be closed under the generators."""
    domain = sorted(set(domain))
    domain_set = frozenset(domain)
    for pt in domain:
        if not 0 <= pt < group.degree:
            raise ValueError(f"point {pt} out of range for degree {group.degree}")
    _check_domain_invariant(group.generators, domain_set)
    unseen = set(domain)
    parts = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for pt in frontier:
                for g in group.generators:
                    if g[pt] not in orbit:
                        orbit.add(g[pt])
                        nxt.append(g[pt])
            frontier = nxt
        unseen -= orbit
        parts.append(tuple(sorted(orbit)))
    parts.sort()
    return OrbitPartition(tuple(domain), tuple(parts), tuple(p[0] for p in parts))


def is_transitive(group: GeneratedGroup, domain) -> bool:
    return len(orbits(group, domain)) <= 1


def is_t_homogeneous(group: GeneratedGroup, domain, t) -> bool:
    """Whether the group is transitive on unordered t-subsets of ``domain``."""
    domain = sorted(set(domain))
    if not 1 <= t <= len(domain):
        raise ValueError(f"t={t} out of range for a domain of size {len(domain)}")
    total = comb(len(domain), t)
    if total > SUBSET_CAP:
        raise ScaleError(f"{total} t-subsets exceed the cap {SUBSET_CAP}")
    _check_domain_invariant(group.generators, frozenset(domain))
    start = frozenset(domain[:t])
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for sub in frontier:
            for g in group.generators:
                image = apply_to_set(g, sub)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
        if len(seen) == total:
            break
    return len(seen) == total


def max_homogeneity(group: GeneratedGroup, domain, limit=None) -> int:
    """Largest t <= limit for which the action is t-homogeneous (0 if none)."""
    domain = sorted(set(domain))
    top = len(domain) if limit is None else min(limit, len(domain))
    best = 0
    for t in range(1, top + 1):
        if is_t_homogeneous(group, domain, t):
            best = t
    return best


def induced_action(generators, blocks):
    """Permutations induced on a list of vertex sets permuted by the generators.

    The returned tuples act on block indices.  Raises DomainInvarianceError
    when some block image is not itself a block.
    """
    index = {frozenset(b): i for i, b in enumerate(blocks)}
    out = []
    for gi, g in enumerate(generators):
        images = []
        for b in blocks:
            target = apply_to_set(g, b)
            if target not in index:
                raise DomainInvarianceError(
                    f"generator #{gi} does not permute the block system",
                    generator_index=gi,
                    point=min(b),
                )
            images.append(index[target])
        out.append(tuple(images))
    return out
