"""Command-line interface.

Subcommands: color, check-minor, alpha, bounds-table, gen,
search-mindegree.  Input graphs are edge-list or DIMACS .col files.
Reports go to stdout as text, or as JSON with --format structured; the
structured envelope always carries the tool version, the echoed run
configuration, and the input file hash, so identical runs are
byte-identical.

Exit codes:
  0  success (including "no minor" / "no counterexample")
  2  command-line usage error
  3  unreadable or invalid input
  4  exact search above its size cap
  5  minimum-degree premise violated (witness printed)
  6  independence guarantee violated (witness printed)
  7  search-mindegree found a counterexample
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator

from . import __version__
from .bounds import full_table, table_row
from .coloring import color_by_contraction
from .errors import (
    IndependenceShortfall,
    MinDegreeExceeded,
    MinorColorError,
    ParseError,
    ResourceLimitExceeded,
)
from .formats import load_graph, save_graph, sha256_of_file, write_edge_list
from .generators import (
    GenSpec,
    clique_paste,
    complete_multipartite,
    filtered_random,
    generate,
)
from .graph import Graph, min_degree_vertex
from .indep import applicable_variants, gamma_constant, independence_guarantee
from .minor import (
    DEFAULT_SEARCH_CAP,
    EXTREMAL_EDGE_BOUNDS,
    edge_count_forces_minor,
    has_clique_minor,
)

EXIT_OK = 0
EXIT_INPUT = 3
EXIT_RESOURCE = 4
EXIT_MIN_DEGREE = 5
EXIT_SHORTFALL = 6
EXIT_COUNTEREXAMPLE = 7

ORACLE_CAP_ENV = "MINORCOLOR_ORACLE_CAP"


def _resolve_cap(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(ORACLE_CAP_ENV)
    return int(env) if env else DEFAULT_SEARCH_CAP


def _emit(args, command: str, config: dict, result: dict, text: list[str]) -> None:
    if args.format == "structured":
        envelope = {
            "tool": "minorcolor",
            "version": __version__,
            "command": command,
            "config": config,
            "input_sha256": config.get("input_sha256"),
            "result": result,
        }
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        for line in text:
            print(line)


def _parse_parts(raw: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in raw.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"cannot parse part sizes from {raw!r}") from None
    if not parts:
        raise ValueError("empty part-size list")
    return parts


def _parse_blocks(raw: str) -> tuple[tuple[int, ...], ...]:
    return tuple(_parse_parts(chunk) for chunk in raw.split(";") if chunk.strip())


# ---------------------------------------------------------------- color


def cmd_color(args) -> int:
    if (args.delta is None) != (args.alpha is None):
        raise ValueError("--delta and --alpha must be given together")
    if args.delta is not None and args.mode == "conjectured":
        raise ValueError("--delta/--alpha overrides conflict with --mode conjectured")
    g = load_graph(args.path)
    if args.delta is not None:
        delta, alpha = args.delta, args.alpha
    else:
        row = table_row(args.t, args.mode)
        delta, alpha = row.delta, row.alpha
    config = {
        "input": args.path,
        "input_sha256": sha256_of_file(args.path),
        "t": args.t,
        "mode": args.mode,
        "delta": delta,
        "alpha": alpha,
        "audit": args.audit,
        "cap": _resolve_cap(args.cap),
    }
    try:
        report = color_by_contraction(
            g,
            args.t,
            delta,
            alpha,
            audit=args.audit,
            oracle_cap=_resolve_cap(args.cap),
        )
    except MinDegreeExceeded as exc:
        result = {
            "error": "min_degree_exceeded",
            "vertex": exc.vertex,
            "degree": exc.degree,
            "witness_edge_list": write_edge_list(exc.graph),
        }
        text = [
            f"premise violated: vertex {exc.vertex} has minimum degree "
            f"{exc.degree} > delta={delta}",
            "witness graph:",
            write_edge_list(exc.graph).rstrip("\n"),
        ]
        _emit(args, "color", config, result, text)
        return EXIT_MIN_DEGREE
    except IndependenceShortfall as exc:
        result = {
            "error": "independence_shortfall",
            "found": exc.found,
            "required": exc.required,
            "witness_edge_list": write_edge_list(exc.subgraph),
        }
        text = [
            f"premise violated: neighborhood graph has maximum independent set "
            f"{exc.found} < required {exc.required}",
            "witness neighborhood graph:",
            write_edge_list(exc.subgraph).rstrip("\n"),
        ]
        _emit(args, "color", config, result, text)
        return EXIT_SHORTFALL

    result = {
        "n": g.n,
        "m": g.m,
        "colors_used": report.colors_used,
        "palette_bound": report.palette_bound,
        "delta": report.delta_used,
        "alpha": report.alpha_used,
        "proper": report.proper,
        "coloring": {str(v): c for v, c in sorted(report.coloring.assignment.items())},
        "trace": {
            "base_size": report.trace.base_size,
            "steps": [
                {
                    "vertex": s.vertex,
                    "degree": s.degree,
                    "independent_set": sorted(s.independent_set),
                    "merged_vertex": s.merged_vertex,
                    "color": s.color,
                }
                for s in report.trace.steps
            ],
        },
    }
    text = [
        f"colored {g.n} vertices / {g.m} edges with {report.colors_used} colors "
        f"(palette bound {report.palette_bound}, delta={delta}, alpha={alpha})",
        f"proper: {report.proper}",
    ]
    text.extend(
        f"{v} {c}" for v, c in sorted(report.coloring.assignment.items())
    )
    _emit(args, "color", config, result, text)
    return EXIT_OK


# ---------------------------------------------------------- check-minor


def cmd_check_minor(args) -> int:
    g = load_graph(args.path)
    cap = _resolve_cap(args.cap)
    config = {
        "input": args.path,
        "input_sha256": sha256_of_file(args.path),
        "t": args.t,
        "cap": cap,
    }
    model = has_clique_minor(g, args.t, cap=cap)
    forced = (
        edge_count_forces_minor(g, args.t) if args.t in EXTREMAL_EDGE_BOUNDS else None
    )
    result = {
        "found": model is not None,
        "witness": [sorted(s) for s in model.branch_sets] if model else None,
        "edge_count_forces": forced,
    }
    if model is not None:
        text = [f"K{args.t} minor: FOUND"]
        text.extend(model.to_lines())
    else:
        text = [f"K{args.t} minor: none (exact search, n={g.n})"]
    if forced is not None:
        text.append(f"edge count alone forces the minor: {forced}")
    _emit(args, "check-minor", config, result, text)
    return EXIT_OK


# ------------------------------------------------------------------ alpha


def cmd_alpha(args) -> int:
    config = {"n": args.n, "t": args.t}
    variants = {}
    for variant in ("a", "b", "c"):
        if variant in applicable_variants(args.t):
            variants[variant] = independence_guarantee(args.n, args.t, variant).alpha
        else:
            variants[variant] = None
    best = max(v for v in variants.values() if v is not None)
    result = {"variants": variants, "best": best, "gamma": gamma_constant()}
    text = [f"independence guarantees for n={args.n}, t={args.t}:"]
    for variant, value in variants.items():
        shown = value if value is not None else "n/a (needs t >= 5)"
        text.append(f"  variant {variant}: {shown}")
    text.append(f"  best: {best}")
    _emit(args, "alpha", config, result, text)
    return EXIT_OK


# ----------------------------------------------------------- bounds-table


def _row_payload(row) -> dict:
    return {
        "t": row.t,
        "delta": row.delta,
        "alpha": row.alpha,
        "chi_bound": row.chi_bound,
        "delta_provenance": row.delta_provenance,
        "edge_bound": (
            {
                "coeff": row.edge_bound.coeff,
                "const": row.edge_bound.const,
                "min_vertices": row.edge_bound.min_vertices,
            }
            if row.edge_bound
            else None
        ),
        "best_known_chi": row.best_known_chi,
        "hadwiger_target": row.hadwiger_target,
    }


def cmd_bounds_table(args) -> int:
    mode = "conjectured" if args.conjectured else "proven"
    rows = full_table(mode)
    config = {"mode": mode}
    result = {"rows": [_row_payload(r) for r in rows]}
    text = [f"{'t':>3} {'delta':>6} {'alpha':>6} {'chi':>4}  {'edges':<18} {'best known':<10}"]
    for r in rows:
        eb = (
            f"m<={r.edge_bound.coeff}n-{r.edge_bound.const} (n>={r.edge_bound.min_vertices})"
            if r.edge_bound
            else "-"
        )
        bk = str(r.best_known_chi) if r.best_known_chi else "-"
        text.append(
            f"{r.t:>3} {r.delta:>6} {r.alpha:>6} {r.chi_bound:>4}  {eb:<18} {bk:<10}"
        )
    if mode == "conjectured":
        text.append("(minimum-degree values are conjectured, not proven)")
    _emit(args, "bounds-table", config, result, text)
    return EXIT_OK


# -------------------------------------------------------------------- gen


def cmd_gen(args) -> int:
    spec = GenSpec(
        family=args.family,
        n=args.n,
        seed=args.seed,
        parts=_parse_parts(args.parts) if args.parts else None,
        blocks=_parse_blocks(args.blocks) if args.blocks else None,
        clique_size=args.clique_size,
        forbid=args.forbid,
        max_rejects=args.max_rejects,
        oracle_cap=_resolve_cap(args.cap),
    )
    g = generate(spec)
    save_graph(g, args.out)
    meta = {
        "tool": "minorcolor",
        "version": __version__,
        "spec": {
            "family": spec.family,
            "n": spec.n,
            "seed": spec.seed,
            "parts": list(spec.parts) if spec.parts else None,
            "blocks": [list(b) for b in spec.blocks] if spec.blocks else None,
            "clique_size": spec.clique_size,
            "forbid": spec.forbid,
            "max_rejects": spec.max_rejects,
        },
        "result": {"n": g.n, "m": g.m, "sha256": sha256_of_file(args.out)},
    }
    meta_path = args.out + ".meta.json"
    with open(meta_path, "w") as fh:
        json.dump(meta, fh, sort_keys=True, indent=2)
        fh.write("\n")
    config = {"out": args.out, "meta": meta_path}
    result = meta
    text = [f"wrote {args.out} (family={spec.family}, n={g.n}, m={g.m})", f"meta: {meta_path}"]
    _emit(args, "gen", config, result, text)
    return EXIT_OK


# ------------------------------------------------------- search-mindegree


def _conjecture_corpus(t: int, seed: int) -> Iterator[tuple[str, Graph, int, str]]:
    """Named graphs relevant to the minimum-degree conjecture for order
    t+1, each with the clique-minor order it is known to exclude and how
    that exclusion gets certified (clique pastes of minor-free blocks are
    minor-free by construction; blocks are small enough for the oracle)."""
    if t == 6:
        yield "K_{1,2,2,2,2}", complete_multipartite((1, 2, 2, 2, 2)), 7, "oracle"
        yield "planar_triangulation_n12", generate(
            GenSpec("planar_triangulation", n=12, seed=seed)
        ), 7, "oracle"
    elif t == 7:
        yield "K_{2,2,2,2,2}", complete_multipartite((2, 2, 2, 2, 2)), 8, "oracle"
        yield "paste_2xK_{2,2,2,2,2}_on_5cliques", clique_paste(
            ((2, 2, 2, 2, 2), (2, 2, 2, 2, 2)), 5, seed
        ), 8, "construction"
    elif t == 8:
        yield "K_{2,2,2,3,3}", complete_multipartite((2, 2, 2, 3, 3)), 9, "oracle"
        yield "K_{1,2,2,2,2,2}", complete_multipartite((1, 2, 2, 2, 2, 2)), 9, "oracle"
        yield "paste_2xK_{1,2,2,2,2,2}_on_6cliques", clique_paste(
            ((1, 2, 2, 2, 2, 2), (1, 2, 2, 2, 2, 2)), 6, seed
        ), 9, "construction"
    else:
        raise ValueError("conjecture search supports t in {6, 7, 8}")


def _min_degree_candidates(n: int, min_deg: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices with minimum degree >= min_deg,
    generated row by row with degree pruning (no isomorphism rejection)."""
    if min_deg > n - 1:
        return
    rows: list[int] = [0] * n

    def degree_so_far(v: int, upto: int) -> int:
        d = rows[v].bit_count() if v < upto else 0
        for i in range(min(v, upto)):
            d += (rows[i] >> v) & 1
        return d

    def rec(i: int) -> Iterator[Graph]:
        if i == n:
            adj = {
                v: rows[v] | sum(((rows[i2] >> v) & 1) << i2 for i2 in range(v))
                for v in range(n)
            }
            yield Graph._from_adj(adj)
            return
        choices = range(1 << (n - i - 1))
        below = degree_so_far(i, i)
        for code in choices:
            row = code << (i + 1)
            if below + row.bit_count() < min_deg:
                continue
            rows[i] = row
            feasible = True
            for j in range(i + 1, n):
                potential = degree_so_far(j, i + 1) + (j - i - 1) + (n - 1 - j)
                if potential < min_deg:
                    feasible = False
                    break
            if feasible:
                yield from rec(i + 1)
        rows[i] = 0

    yield from rec(0)


def cmd_search_mindegree(args) -> int:
    t = args.t
    conjectured_delta = table_row(t, "conjectured").delta
    cap = _resolve_cap(args.cap)
    config = {
        "t": t,
        "mode": args.mode,
        "conjectured_delta": conjectured_delta,
        "seed": args.seed,
        "samples": args.samples,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "max_n": args.max_n,
        "cap": cap,
    }
    entries = []
    counterexamples = []

    if args.mode == "corpus":
        for name, g, known_order, how in _conjecture_corpus(t, args.seed):
            if how == "oracle":
                certified = has_clique_minor(g, t + 1, cap=cap) is None
            else:
                certified = known_order <= t + 1
            _, mindeg = min_degree_vertex(g)
            if certified and mindeg > conjectured_delta:
                status = "counterexample"
            elif certified and mindeg == conjectured_delta:
                status = "tight"
            else:
                status = "ok"
            entry = {
                "name": name,
                "n": g.n,
                "m": g.m,
                "min_degree": mindeg,
                "certified_minor_free": certified,
                "certified_by": how,
                "known_excluded_order": known_order,
                "status": status,
            }
            entries.append(entry)
            if status == "counterexample":
                counterexamples.append({"entry": entry, "edge_list": write_edge_list(g)})
    elif args.mode == "random":
        if args.n_min > args.n_max or args.n_min < 1:
            raise ValueError("need 1 <= n-min <= n-max")
        max_seen = -1
        for index in range(args.samples):
            child_seed = args.seed * 1_000_003 + index
            rng_n = args.n_min + (child_seed % (args.n_max - args.n_min + 1))
            g = filtered_random(rng_n, child_seed, t + 1, oracle_cap=cap)
            _, mindeg = min_degree_vertex(g)
            max_seen = max(max_seen, mindeg)
            if mindeg > conjectured_delta:
                entry = {
                    "index": index,
                    "n": g.n,
                    "m": g.m,
                    "min_degree": mindeg,
                    "status": "counterexample",
                }
                entries.append(entry)
                counterexamples.append({"entry": entry, "edge_list": write_edge_list(g)})
        entries.append(
            {
                "name": "summary",
                "samples": args.samples,
                "max_min_degree_seen": max_seen,
                "status": "summary",
            }
        )
    else:  # exhaustive
        if args.max_n > 9:
            raise ValueError("exhaustive mode is limited to n <= 9")
        examined = 0
        for g in _min_degree_candidates(args.max_n, conjectured_delta + 1):
            examined += 1
            if has_clique_minor(g, t + 1, cap=cap) is None:
                _, mindeg = min_degree_vertex(g)
                entry = {
                    "n": g.n,
                    "m": g.m,
                    "min_degree": mindeg,
                    "status": "counterexample",
                }
                entries.append(entry)
                counterexamples.append({"entry": entry, "edge_list": write_edge_list(g)})
        entries.append(
            {
                "name": "summary",
                "candidates_examined": examined,
                "status": "summary",
            }
        )

    result = {
        "entries": entries,
        "counterexamples": counterexamples,
        "conjecture_holds_on_inputs": not counterexamples,
    }
    text = [
        f"minimum-degree conjecture check for order {t + 1} "
        f"(conjectured delta={conjectured_delta}, mode={args.mode})"
    ]
    for e in entries:
        if e.get("status") == "summary":
            text.append(f"  summary: {json.dumps(e, sort_keys=True)}")
        else:
            label = e.get("name", f"sample {e.get('index')}")
            text.append(
                f"  {label}: n={e['n']} m={e['m']} min_degree={e['min_degree']} "
                f"{'certified' if e.get('certified_minor_free', True) else 'not-certified'} "
                f"[{e['status']}]"
            )
    for ce in counterexamples:
        text.append("counterexample graph:")
        text.append(ce["edge_list"].rstrip("\n"))
    if not counterexamples:
        text.append("no counterexample found")
    _emit(args, "search-mindegree", config, result, text)
    return EXIT_COUNTEREXAMPLE if counterexamples else EXIT_OK


# ------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minorcolor",
        description="coloring and exact minor testing for clique-minor-free graphs",
    )
    parser.add_argument("--version", action="version", version=f"minorcolor {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph by iterated contraction")
    p.add_argument("path")
    p.add_argument("--t", type=int, required=True, help="excluded minor order minus one")
    p.add_argument("--mode", choices=("proven", "conjectured"), default="proven")
    p.add_argument("--delta", type=int, help="override the minimum-degree bound")
    p.add_argument("--alpha", type=int, help="override the independence guarantee")
    p.add_argument("--audit", action="store_true", help="verify neighborhood minor-freeness")
    p.add_argument("--cap", type=int)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("check-minor", help="exact clique-minor test with witness")
    p.add_argument("path")
    p.add_argument("--t", type=int, required=True, help="clique minor order to look for")
    p.add_argument("--cap", type=int)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_check_minor)

    p = sub.add_parser("alpha", help="independence guarantees for (n, t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("bounds-table", help="per-order bound table")
    p.add_argument("--conjectured", action="store_true")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_bounds_table)

    p = sub.add_parser("gen", help="generate a certified minor-free graph")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parts", help="part sizes, e.g. '2,2,2,2,2'")
    p.add_argument("--blocks", help="semicolon-separated part lists, e.g. '2,2,2,2,2;2,2,2,2,2'")
    p.add_argument("--clique-size", type=int, dest="clique_size")
    p.add_argument("--forbid", type=int, help="forbidden minor order for filtered_random")
    p.add_argument("--max-rejects", type=int, default=30, dest="max_rejects")
    p.add_argument("--cap", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search-mindegree", help="probe the minimum-degree conjectures")
    p.add_argument("--t", type=int, required=True, choices=(6, 7, 8))
    p.add_argument("--mode", choices=("corpus", "random", "exhaustive"), default="corpus")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--n-min", type=int, default=8, dest="n_min")
    p.add_argument("--n-max", type=int, default=12, dest="n_max")
    p.add_argument("--max-n", type=int, default=9, dest="max_n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_search_mindegree)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MinorColorError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
