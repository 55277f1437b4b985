"""Command-line interface.

Commands: analyze (full report), verify (prediction harness; nonzero exit on
violation), designs (design extraction with catalogue cross-reference),
orders (closed-form order tables), oracle (brute-force cross-checks).
Exit codes: 0 success / all consistent, 1 violation or failed cross-check,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .autgroup import automorphism_generators, brute_force_automorphisms
from .corpus import corpus, corpus_entry, corpus_names
from .designs import one_design_catalogue
from .errors import ScaleError, TheoremViolationError, ToolkitError
from .graph6 import parse_graph6
from .graphs import IntersectionArray, distance_regular, girth_data
from .oracles import distance_regular_recount, girth_by_edge_deletion
from .permgroups import GeneratedGroup, parse_generators
from .report import (
    SUMMARY_HEADER,
    analyze,
    aut_group,
    report_json,
    scan_profiles,
    summary_line,
)
from .theorems import (
    TABLE_DIAMETERS,
    factorize,
    split_sphere_order_table,
    tetravalent_dr_order_table,
    verify_theorem,
)


def _read_lines(path):
    if path == "-":
        return sys.stdin.read().splitlines()
    return Path(path).read_text().splitlines()


def _load_inputs(args):
    """Yield (name, Graph) from --name or a graph6 file/stream."""
    loaded = []
    if getattr(args, "name", None):
        entry = corpus_entry(args.name)
        loaded.append((entry.name, entry.graph()))
    if getattr(args, "g6", None):
        for lineno, line in enumerate(_read_lines(args.g6), start=1):
            if line.strip():
                loaded.append((f"g6:{lineno}", parse_graph6(line)))
    if not loaded:
        raise ToolkitError("no input graph: pass --name or --g6 (use '-' for stdin)")
    return loaded


def _load_group(args, g, name):
    """Group from --group file, a named corpus subgroup, or the automorphism group."""
    spec = getattr(args, "group", None)
    if spec:
        candidates = []
        try:
            entry = corpus_entry(name)
            candidates = list(entry.subgroups)
        except KeyError:
            pass
        if spec in candidates:
            entry = corpus_entry(name)
            return GeneratedGroup(entry.subgroup_generators(spec), g.n), spec
        text = Path(spec).read_text()
        return GeneratedGroup(parse_generators(text, g.n), g.n), Path(spec).stem
    return aut_group(g), "Aut"


def _write_json(payload, destination):
    if destination == "-":
        sys.stdout.write(payload)
    else:
        Path(destination).write_text(payload)


# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    reports = []
    for name, g in _load_inputs(args):
        group, group_name = _load_group(args, g, name)
        report = analyze(
            g,
            group,
            name=name,
            group_name=group_name,
            with_profiles=not args.no_profiles,
            with_timing=args.timing,
        )
        reports.append(report)
        if args.figures:
            from .figures import render_report_figures

            written = render_report_figures(g, group, args.figures, name=name)
            report["figures"] = [str(p) for p in written]

    if args.json:
        payload = report_json(reports[0] if len(reports) == 1 else reports)
        _write_json(payload, args.json)
    if args.json != "-":
        print(SUMMARY_HEADER)
        for report in reports:
            print(summary_line(report))
    return 0


def cmd_verify(args) -> int:
    pairs = []
    if args.g6 or args.name:
        for name, g in _load_inputs(args):
            group, group_name = _load_group(args, g, name)
            pairs.append((name, g, group_name, group))
    else:
        for entry in corpus():
            g = entry.graph()
            pairs.append((entry.name, g, "Aut", aut_group(g)))
            for sub_name in entry.subgroups:
                sub = GeneratedGroup(entry.subgroup_generators(sub_name), g.n)
                pairs.append((entry.name, g, sub_name, sub))

    failures = 0
    results = []
    for name, g, group_name, group in pairs:
        verdict = verify_theorem(g, group, graph_id=name, group_id=group_name)
        status = verdict.verdict
        detail = f"clause={verdict.clause}"
        if verdict.dr_predicted:
            detail += f" dr={'ok' if verdict.dr_observed else 'VIOLATED'}"
        if verdict.girth_bound_applicable:
            detail += f" girth<=2d-1={'ok' if verdict.girth_bound_holds else 'VIOLATED'}"
        try:
            profiles = scan_profiles(g, group)
            n_designs = sum(
                1 for p in profiles for o in p["orbits"] if "design" in o
            )
            detail += f" designs={n_designs}"
        except TheoremViolationError as exc:
            status = "violation"
            detail += f" design-suite-violation: {exc}"
        if status == "violation":
            failures += 1
        results.append((name, group_name, status, detail))
        print(f"{status.upper():14s} {name}/{group_name}  {detail}")
    if args.json:
        payload = report_json(
            [
                {"graph": n, "group": gn, "status": st, "detail": d}
                for n, gn, st, d in results
            ]
        )
        _write_json(payload, args.json)
    return 1 if failures else 0


def cmd_designs(args) -> int:
    if args.tables:
        for k in (3, 4):
            print(f"1-designs with distinct blocks on {k} points:")
            for row in one_design_catalogue(k):
                remark = row.strength_notation()
                families = " or ".join(
                    "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in fam) + "}"
                    for fam in row.families
                )
                line = f"  {row.notation():11s} blocks={row.num_blocks}  {families}"
                if remark:
                    line += f"  [{remark}]"
                print(line)
        return 0

    for name, g in _load_inputs(args):
        group, group_name = _load_group(args, g, name)
        profiles = scan_profiles(g, group)
        print(f"{name} with {group_name} (order {group.order}):")
        shown = 0
        for p in profiles:
            for orbit in p["orbits"]:
                if "design" not in orbit:
                    print(
                        f"  alpha={p['alpha']} s={p['s']} orbit={orbit['index']}: "
                        f"hypothesis fails ({orbit['hypothesis_failed']})"
                    )
                    continue
                d = orbit["design"]
                adj = orbit["adjacency"]
                blocks = ", ".join("{" + ",".join(map(str, b)) + "}" for b in d["blocks"])
                print(
                    f"  alpha={p['alpha']} s={p['s']} orbit={orbit['index']}: "
                    f"{d['notation']} design, blocks {blocks}, e={d['class_size']}; "
                    f"catalogue row {d['catalogue_row']}; "
                    f"P={adj['partition_multiset']} {adj['structure']}"
                )
                shown += 1
        if not shown:
            print("  no orbit satisfies the design hypothesis")
    return 0


def cmd_orders(args) -> int:
    split = split_sphere_order_table()
    table = tetravalent_dr_order_table()
    if args.json:
        payload = report_json(
            {
                "split_sphere": {str(d): v for d, v in split.items()},
                "tetravalent_dr": {
                    str(c): {str(d): v for d, v in row.items()}
                    for c, row in table.items()
                },
                "factorization_8018": list(factorize(8018)),
            }
        )
        _write_json(payload, args.json)
        return 0
    print("orders forced by a split outermost sphere (tetravalent, girth >= 2d):")
    print("  d    " + "  ".join(f"{d:>6d}" for d in TABLE_DIAMETERS))
    print("  |V|  " + "  ".join(f"{split[d]:>6d}" for d in TABLE_DIAMETERS))
    factors = " * ".join(str(p) for p in factorize(8018))
    print(f"  note: 8018 = {factors}")
    print()
    print("orders of tetravalent distance-regular graphs with girth >= 2d:")
    print("  c_d \\ d  " + "  ".join(f"{d:>6d}" for d in TABLE_DIAMETERS))
    for c_d in (1, 2, 3, 4):
        print(f"  {c_d}        " + "  ".join(f"{table[c_d][d]:>6d}" for d in TABLE_DIAMETERS))
    return 0


def cmd_oracle(args) -> int:
    failures = 0
    for name, g in _load_inputs(args):
        print(f"{name} (n={g.n}):")
        main_girth = girth_data(g).girth
        oracle_girth = girth_by_edge_deletion(g)
        ok = main_girth == oracle_girth
        failures += not ok
        print(f"  girth: branch-BFS {main_girth} vs edge-deletion {oracle_girth} "
              f"{'ok' if ok else 'MISMATCH'}")

        dr = distance_regular(g)
        main_array = dr.notation() if isinstance(dr, IntersectionArray) else None
        recount = distance_regular_recount(g)
        oracle_array = recount.notation() if recount else None
        ok = main_array == oracle_array
        failures += not ok
        print(f"  intersection array: {main_array} vs recount {oracle_array} "
              f"{'ok' if ok else 'MISMATCH'}")

        if g.n > 12:
            raise ScaleError(
                f"automorphism oracle is capped at n=12; {name} has {g.n} vertices"
            )
        gens, stats = automorphism_generators(g)
        group = GeneratedGroup(gens, g.n)
        brute = brute_force_automorphisms(g)
        ok = group.order == len(brute) and all(group.contains(p) for p in brute)
        failures += not ok
        print(f"  automorphisms: search order {group.order} vs brute force "
              f"{len(brute)} {'ok' if ok else 'MISMATCH'} "
              f"(nodes={stats.nodes_visited}, pruned={stats.pruned_by_refinement})")
    return 1 if failures else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdtkit",
        description=(
            "Symmetry analysis of finite graphs: distance-regularity, "
            "s-distance-transitivity, stabilizer-orbit block designs."
        ),
    )
    parser.add_argument("--version", action="version", version=f"sdtkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_inputs(p, group=True):
        p.add_argument("--name", help=f"corpus graph ({', '.join(corpus_names())})")
        p.add_argument("--g6", help="graph6 file, or '-' for stdin")
        if group:
            p.add_argument(
                "--group",
                help="generator file in cycle notation, or a named corpus subgroup",
            )

    p = sub.add_parser("analyze", help="full analysis report")
    add_inputs(p)
    p.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--figures", help="directory for rendered figures")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing")
    p.add_argument("--no-profiles", action="store_true", help="skip orbit profiles")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run the prediction harness (exit 1 on violation)")
    add_inputs(p)
    p.add_argument("--corpus", action="store_true", help="verify the whole corpus (default)")
    p.add_argument("--json", help="write verdict summaries here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("designs", help="extract designs with catalogue cross-reference")
    add_inputs(p)
    p.add_argument("--tables", action="store_true", help="print the 1-design catalogue")
    p.set_defaults(func=cmd_designs)

    p = sub.add_parser("orders", help="print the closed-form order tables")
    p.add_argument("--json", help="write the tables as JSON")
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("oracle", help="brute-force cross-checks (test use)")
    add_inputs(p, group=False)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 1
    except (ToolkitError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
