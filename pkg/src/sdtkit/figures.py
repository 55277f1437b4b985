"""Figure rendering for the report path: sphere layouts and block diagrams.

matplotlib is an optional dependency; it is imported lazily so the rest of
the toolkit works without it.  Figures are drawn through the object API (no
pyplot state) and written straight to files.
"""

from __future__ import annotations

import math
from pathlib import Path

from .designs import SphereOrbitProfile, _block_context
from .graphs import Graph, bfs_levels
from .permgroups import GeneratedGroup, orbits, point_stabilizer


def _figure():
    try:
        from matplotlib.figure import Figure
    except ImportError as exc:  # pragma: no cover - exercised only without extra
        raise RuntimeError(
            "figure rendering needs matplotlib; install the 'figures' extra"
        ) from exc
    return Figure


_PALETTE = [
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee",
    "#aa3377", "#bbbbbb", "#000000",
]


def render_level_diagram(g: Graph, group: GeneratedGroup, alpha, path) -> Path:
    """Spheres around alpha left to right, vertices coloured by stabilizer orbit."""
    Figure = _figure()
    dd = bfs_levels(g, alpha)
    stab = point_stabilizer(group, alpha)

    color_of = {}
    positions = {}
    for i, level in enumerate(dd.levels):
        parts = orbits(stab, level).orbits
        ordered = [v for part in parts for v in part]
        for slot, v in enumerate(ordered):
            positions[v] = (i, slot - (len(ordered) - 1) / 2)
        for ci, part in enumerate(parts):
            for v in part:
                color_of[v] = _PALETTE[ci % len(_PALETTE)]

    fig = Figure(figsize=(1.8 + 1.4 * len(dd.levels), 4.5))
    ax = fig.add_subplot(111)
    for u, v in g.edges():
        (x0, y0), (x1, y1) = positions[u], positions[v]
        ax.plot([x0, x1], [y0, y1], color="#cccccc", linewidth=0.7, zorder=1)
    xs = [positions[v][0] for v in range(g.n)]
    ys = [positions[v][1] for v in range(g.n)]
    ax.scatter(xs, ys, c=[color_of[v] for v in range(g.n)], s=120, zorder=2,
               edgecolors="black", linewidths=0.5)
    for v in range(g.n):
        x, y = positions[v]
        ax.annotate(str(v), (x, y), ha="center", va="center", fontsize=6, zorder=3)
    ax.set_xticks(range(len(dd.levels)))
    ax.set_xticklabels([f"dist {i}" for i in range(len(dd.levels))])
    ax.set_yticks([])
    ax.set_title(f"spheres around vertex {alpha}, colours = stabilizer orbits")
    for spine in ("left", "right", "top"):
        ax.spines[spine].set_visible(False)
    path = Path(path)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    return path


def render_block_diagram(profile: SphereOrbitProfile, delta_index, path) -> Path:
    """Bipartite diagram: radius-s sphere (grouped by B_j) below, orbit classes above."""
    Figure = _figure()
    g = profile.graph
    ctx = _block_context(profile, delta_index)
    delta = profile.orbit_list[delta_index]
    k = profile.valency

    bottom = []
    bottom_group = {}
    for j in range(1, k + 1):
        for v in sorted(ctx.sphere_blocks[j - 1]):
            bottom_group[v] = j
            bottom.append(v)
    top = []
    top_group = {}
    for bi, S in enumerate(ctx.blocks):
        for v in sorted(ctx.delta_of[frozenset(S)]):
            top_group[v] = bi
            top.append(v)

    xb = {v: i for i, v in enumerate(bottom)}
    xt = {v: i * (len(bottom) - 1) / max(len(top) - 1, 1) for i, v in enumerate(top)}

    fig = Figure(figsize=(2 + 0.55 * max(len(bottom), len(top)), 4))
    ax = fig.add_subplot(111)
    delta_set = frozenset(delta)
    for gamma in bottom:
        for x in g.neighbor_set(gamma) & delta_set:
            ax.plot([xb[gamma], xt[x]], [0, 1], color="#999999", linewidth=0.8, zorder=1)
    ax.scatter(
        [xb[v] for v in bottom], [0] * len(bottom),
        c=[_PALETTE[(bottom_group[v] - 1) % len(_PALETTE)] for v in bottom],
        s=150, zorder=2, edgecolors="black", linewidths=0.5, marker="s",
    )
    ax.scatter(
        [xt[v] for v in top], [1] * len(top),
        c=[_PALETTE[top_group[v] % len(_PALETTE)] for v in top],
        s=150, zorder=2, edgecolors="black", linewidths=0.5,
    )
    for v in bottom:
        ax.annotate(str(v), (xb[v], 0), ha="center", va="center", fontsize=6, zorder=3)
    for v in top:
        ax.annotate(str(v), (xt[v], 1), ha="center", va="center", fontsize=6, zorder=3)
    labels = ", ".join("{" + ",".join(map(str, S)) + "}" for S in ctx.blocks)
    ax.set_title(
        f"sphere radius {profile.s} (squares, grouped by closest neighbour) vs "
        f"orbit {delta_index} classes {labels}",
        fontsize=8,
    )
    ax.set_xticks([])
    ax.set_yticks([0, 1])
    ax.set_yticklabels([f"sphere {profile.s}", f"orbit in sphere {profile.s + 1}"])
    ax.set_ylim(-0.3, 1.3)
    for spine in ("left", "right", "top", "bottom"):
        ax.spines[spine].set_visible(False)
    path = Path(path)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    return path


def render_report_figures(g, group, outdir, name="graph") -> list:
    """All figures for one analysis: per-alpha level diagrams, per-orbit blocks.

    Returns the written paths; used by the CLI's --figures flag.
    """
    from .designs import sphere_orbit_profile
    from .errors import HypothesisError, TransitivityError
    from .graphs import bfs_levels as _bfs

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    alphas = orbits(group, range(g.n)).representatives
    for alpha in alphas:
        written.append(
            render_level_diagram(g, group, alpha, outdir / f"{name}_alpha{alpha}_levels.png")
        )
        ecc = _bfs(g, alpha).eccentricity
        for s in range(1, ecc):
            try:
                profile = sphere_orbit_profile(g, group, alpha, s)
            except TransitivityError:
                break
            for i in range(profile.orbit_count):
                try:
                    from .designs import verify_hypothesis

                    verify_hypothesis(profile, i)
                except HypothesisError:
                    continue
                written.append(
                    render_block_diagram(
                        profile, i, outdir / f"{name}_alpha{alpha}_s{s}_orbit{i}_blocks.png"
                    )
                )
    return written
