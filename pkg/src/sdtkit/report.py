"""Assembly of the per-graph analysis report and its canonical JSON form.

Reports are plain dicts of JSON-safe values with every collection in a
canonical order, so serialising the same input twice gives byte-identical
output.  The optional timing block is excluded by default for exactly that
reason.  Infinite girths (acyclic graphs) serialise as null.
"""

from __future__ import annotations

import json
import math
import time

from .autgroup import automorphism_generators
from .designs import (
    AdjacencyRelationClass,
    BlockDesign,
    adjacency_relation_class,
    extract_design,
    sphere_orbit_profile,
)
from .errors import HypothesisError, TransitivityError
from .graph6 import encode_graph6
from .graphs import (
    Graph,
    IntersectionArray,
    bfs_levels,
    diameter,
    distance_regular,
    girth_data,
    local_intersection_numbers,
)
from .permgroups import GeneratedGroup, format_cycles, orbits
from .theorems import TheoremVerdict, classify_transitivity, verify_theorem

SCHEMA = "sdtkit-report/1"


def _finite(value):
    if isinstance(value, float) and math.isinf(value):
        return None
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value


def aut_group(g: Graph) -> GeneratedGroup:
    gens, _ = automorphism_generators(g)
    return GeneratedGroup(gens, g.n)


def design_dict(d: BlockDesign) -> dict:
    return {
        "alpha": d.alpha,
        "s": d.s,
        "orbit_index": d.orbit_index,
        "t": d.t,
        "points": d.k,
        "block_size": d.block_size,
        "blocks": [list(b) for b in d.blocks],
        "neighbor_labels": list(d.neighbor_labels),
        "class_size": d.class_size,
        "lambda_levels": list(d.lambda_levels),
        "delta_levels": list(d.delta_levels),
        "notation": d.notation(),
        "catalogue_row": f"1-({d.k},{d.block_size},{d.lambda_levels[0]})",
    }


def adjacency_dict(ac: AdjacencyRelationClass) -> dict:
    overlap = None
    if ac.overlap_design is not None:
        od = ac.overlap_design
        overlap = {
            "mu": od.mu,
            "m": od.m,
            "lambda": od.lam,
            "tau": od.tau,
            "lambda_tau": od.lambda_tau,
            "point_blocks": [list(b) for b in od.point_blocks],
            "m_family": [[list(s) for s in t] for t in od.m_family],
        }
    return {
        "partition_multiset": list(ac.partition_multiset),
        "structure": ac.structure,
        "b_prime": ac.b_prime,
        "c_prime": ac.c_prime,
        "m": ac.m,
        "b": ac.b,
        "f_j": ac.f_j,
        "f_j_m": ac.f_j_m,
        "overlap_design": overlap,
    }


def verdict_dict(v: TheoremVerdict) -> dict:
    return {
        "graph": v.graph_id,
        "group": v.group_id,
        "valency": v.valency,
        "diameter": v.diameter,
        "girth": _finite(v.girth),
        "s": v.s,
        "s_distance_transitive": v.s_distance_transitive,
        "fully_distance_transitive": v.fully_distance_transitive,
        "clause": v.clause,
        "dr_predicted": v.dr_predicted,
        "dr_observed": v.dr_observed,
        "girth_bound_applicable": v.girth_bound_applicable,
        "girth_bound_holds": v.girth_bound_holds,
        "verdict": v.verdict,
        "witness": repr(v.witness) if v.witness is not None else None,
        "notes": list(v.notes),
    }


def scan_profiles(g: Graph, group: GeneratedGroup, alphas=None) -> list:
    """Sphere-orbit profiles with designs and adjacency classes.

    One entry per (alpha, s) with the stabilizer transitive on all spheres
    up to s and s+1 within the eccentricity; alphas defaults to one
    representative per vertex orbit of the group.  Orbits whose design
    hypothesis fails carry the failed clause instead of a design.
    """
    if alphas is None:
        alphas = orbits(group, range(g.n)).representatives
    out = []
    for alpha in alphas:
        ecc = bfs_levels(g, alpha).eccentricity
        for s in range(1, ecc):
            try:
                profile = sphere_orbit_profile(g, group, alpha, s)
            except TransitivityError:
                break
            orbit_entries = []
            for i, orbit in enumerate(profile.orbit_list):
                entry = {
                    "index": i,
                    "representative": orbit[0],
                    "size": profile.sizes[i],
                    "b_prime": profile.b_prime[i],
                    "c_prime": profile.c_prime[i],
                    "cross_row": list(profile.cross_matrix[i]),
                }
                try:
                    design = extract_design(profile, i)
                    entry["design"] = design_dict(design)
                    entry["adjacency"] = adjacency_dict(
                        adjacency_relation_class(profile, i)
                    )
                except HypothesisError as exc:
                    entry["hypothesis_failed"] = exc.clause
                orbit_entries.append(entry)
            out.append(
                {
                    "alpha": alpha,
                    "s": s,
                    "sphere_sizes": [len(lv) for lv in profile.levels.levels],
                    "b_s": profile.b_s,
                    "stabilizer_order": profile.stabilizer.order,
                    "orbits": orbit_entries,
                }
            )
    return out


def analyze(
    g: Graph,
    group: GeneratedGroup | None = None,
    *,
    name="",
    group_name="",
    with_profiles=True,
    with_timing=False,
) -> dict:
    """Full analysis report for one graph, against ``group`` or its automorphisms."""
    started = time.perf_counter()
    if group is None:
        group = aut_group(g)
        group_name = group_name or "Aut"

    gd = girth_data(g)
    dr = distance_regular(g)
    trans = classify_transitivity(g, group)
    verdict = verify_theorem(g, group, graph_id=name, group_id=group_name)

    intersection = {
        "distance_regular": isinstance(dr, IntersectionArray),
        "array": dr.notation() if isinstance(dr, IntersectionArray) else None,
        "witness": None if isinstance(dr, IntersectionArray) else repr(dr),
    }
    if g.is_regular():
        lin = local_intersection_numbers(g, 0)
        intersection["per_level_at_0"] = [
            list(e.triple) if e.triple else None for e in lin.per_level
        ]
        intersection["level_sizes_at_0"] = list(lin.level_sizes)

    report = {
        "schema": SCHEMA,
        "graph": {
            "name": name,
            "n": g.n,
            "edges": g.edge_count,
            "valency": g.valency,
            "girth": _finite(gd.girth),
            "diameter": diameter(g),
            "graph6": encode_graph6(g),
        },
        "group": {
            "name": group_name,
            "order": group.order,
            "generators": [format_cycles(p) for p in group.generators],
            "base": list(group.base),
        },
        "girth": {
            "girth": _finite(gd.girth),
            "alpha_girth": [_finite(x) for x in gd.alpha_girth],
            "local_girth": [_finite(x) for x in gd.local_girth],
        },
        "intersection": intersection,
        "transitivity": {
            "vertex_transitive": trans.vertex_transitive,
            "diameter": trans.diameter,
            "max_distance_transitivity": trans.max_distance_transitivity,
            "fully_distance_transitive": trans.fully_distance_transitive,
            "max_arc_transitivity": trans.max_arc_transitivity,
            "local_homogeneity": trans.local_homogeneity,
        },
        "profiles": scan_profiles(g, group) if with_profiles else [],
        "theorem": verdict_dict(verdict),
        "timing": None,
    }
    if with_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    return report


def report_json(report) -> str:
    """Canonical serialisation: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def summary_line(report) -> str:
    """One tab-separated line per graph for the text report path."""
    graph = report["graph"]
    trans = report["transitivity"]
    fields = [
        graph["name"] or graph["graph6"],
        str(graph["n"]),
        str(graph["valency"]),
        str(graph["girth"]),
        str(graph["diameter"]),
        report["intersection"]["array"] or "not-DR",
        str(trans["max_distance_transitivity"]),
        str(trans["max_arc_transitivity"]),
        str(trans["local_homogeneity"]),
        report["theorem"]["verdict"],
    ]
    return "\t".join(fields)


SUMMARY_HEADER = "\t".join(
    ["graph", "n", "k", "girth", "diam", "iota", "s-dt", "s-at", "local-t", "verdict"]
)
