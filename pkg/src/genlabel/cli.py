"""Command-line front end: generate or load graphs, run any algorithm with a
seed, verify the output with the matching checkers, and emit stable reports.

Exit codes: 0 ok, 1 verdict failure, 2 configuration error, 3 incomplete or
failed run.  Reports are pure functions of (config, input files): rerunning
the same invocation reproduces them byte for byte.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import verify
from .decomposition import (
    ArboricityError,
    arboricity_generic_coloring,
    forest_decomposition,
    generic_network_decomposition,
)
from .edge_coloring import (
    dominating_edge_coloring,
    edge_coloring_via_line_graph,
    kuhn_defective_edge_coloring,
)
from .graphs import GENERATOR_KINDS, GeneratorSpec, Graph, generate, load_edge_list, orient_forest
from .vertex_coloring import (
    cole_vishkin_3coloring,
    expand_to_generic,
    generic_defective_coloring,
    generic_delta2_coloring,
    generic_random_coloring,
)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_CONFIG = 2
EXIT_INCOMPLETE = 3


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parameter schemas and parsing

_INT = "int"
_FLOAT = "float"

# tag -> {param: (type, required)}
SCHEMAS: dict[str, dict[str, tuple[str, bool]]] = {
    "random-coloring": {"c": (_FLOAT, False), "delta": (_INT, False)},
    "delta2-coloring": {"delta": (_INT, False)},
    "defective-coloring": {"p": (_INT, True), "delta": (_INT, False)},
    "cv3-expansion": {"delta": (_INT, False)},
    "network-decomposition": {"c": (_INT, False), "B": (_INT, False),
                              "label_budget": (_INT, False)},
    "forest-id": {},
    "forest-hpartition": {"a": (_INT, True), "eps": (_FLOAT, False)},
    "arboricity-coloring": {"a": (_INT, True), "eps": (_FLOAT, False),
                            "c": (_FLOAT, False)},
    "edge-random": {"c": (_FLOAT, False)},
    "edge-delta2": {},
    "kuhn-edge": {"i": (_INT, True)},
    "dominating-edge": {"c": (_INT, False), "t": (_INT, False),
                        "max_rounds": (_INT, False)},
}


def parse_params(tag: str, pairs: list[str]) -> dict:
    if tag not in SCHEMAS:
        raise ConfigError(f"unknown algorithm tag {tag!r}; known: {sorted(SCHEMAS)}")
    schema = SCHEMAS[tag]
    params: dict = {}
    for raw in pairs:
        if "=" not in raw:
            raise ConfigError(f"--param expects key=value, got {raw!r}")
        key, value = raw.split("=", 1)
        if key not in schema:
            raise ConfigError(f"unknown parameter {key!r} for {tag}; "
                              f"allowed: {sorted(schema)}")
        kind = schema[key][0]
        try:
            params[key] = int(value) if kind == _INT else float(value)
        except ValueError as exc:
            raise ConfigError(f"parameter {key}={value!r} is not a {kind}") from exc
    for key, (_, required) in schema.items():
        if required and key not in params:
            raise ConfigError(f"{tag} requires parameter {key}")
    return params


def parse_gen_spec(text: str) -> GeneratorSpec:
    """Parse 'kind:k=v,k=v' (e.g. gnp:n=1024,p=0.01 or forest-union:n=64,a=2)."""
    kind, _, rest = text.partition(":")
    if kind not in GENERATOR_KINDS:
        raise ConfigError(f"unknown generator {kind!r}; known: {GENERATOR_KINDS}")
    fields: dict = {}
    if rest:
        for item in rest.split(","):
            if "=" not in item:
                raise ConfigError(f"generator spec expects k=v items, got {item!r}")
            key, value = item.split("=", 1)
            if key == "n":
                fields["n"] = int(value)
            elif key == "p":
                fields["p"] = float(value)
            elif key == "a":
                fields["a"] = int(value)
            elif key == "max_deg":
                fields["max_deg"] = int(value)
            elif key == "seed":
                fields["seed"] = int(value)
            else:
                raise ConfigError(f"unknown generator field {key!r}")
    if "n" not in fields:
        raise ConfigError("generator spec requires n")
    spec = GeneratorSpec(kind=kind, **fields)
    try:
        spec.validate()
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return spec


# ---------------------------------------------------------------------------
# runners: execute one algorithm + its checkers, return a report document


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _label_budget_default(n: int, c: int) -> int:
    return c * max(1, math.ceil(4 * math.log2(max(n, 2))))


def _domains_payload(g: Graph, result, verdicts, extra_metrics=None) -> dict:
    rep = verify.metrics(result.domains, rounds=result.report.comm_rounds,
                         verdicts=tuple(verdicts))
    doc = result.to_document()
    doc["metrics"] = rep.to_document()
    if extra_metrics:
        doc["metrics"].update(extra_metrics)
    return doc


def run_algorithm(tag: str, g: Graph, seed: int, params: dict) -> dict:
    """Run one algorithm and its automatic checker set; returns the document.

    The document's "status" field is "ok", "verdict-failure", or "incomplete".
    """
    if tag == "random-coloring":
        res = generic_random_coloring(g, c=params.get("c", 4.0), seed=seed,
                                      delta_bound=params.get("delta"))
        verdicts = [verify.check_domains_disjoint(g, res.domains)]
        doc = _domains_payload(g, res, verdicts)
    elif tag == "delta2-coloring":
        res = generic_delta2_coloring(g, delta_bound=params.get("delta"),
                                      master_seed=seed)
        verdicts = [verify.check_domains_disjoint(g, res.domains)]
        floor = max(1, params.get("delta") or g.max_degree or 1)
        sizes_ok = res.domains.min_size >= floor
        verdicts.append(verify.Verdict(
            name="domain-floor", ok=sizes_ok,
            status="ok" if sizes_ok else "violated",
            detail=f"min domain {res.domains.min_size} vs floor {floor}"))
        doc = _domains_payload(g, res, verdicts)
    elif tag == "defective-coloring":
        res = generic_defective_coloring(g, p=params["p"],
                                         delta_bound=params.get("delta"),
                                         master_seed=seed)
        verdict, worst = verify.check_defective_domains(g, res.domains, params["p"])
        verdicts = [verdict]
        doc = _domains_payload(g, res, verdicts, {"measured_defect": worst})
    elif tag == "cv3-expansion":
        orientation = orient_forest(g)
        colored = cole_vishkin_3coloring(g, orientation, master_seed=seed)
        delta = params.get("delta") or max(g.max_degree, 1)
        dom = expand_to_generic(colored.colors, delta)
        verdicts = [verify.check_proper_vertex(g, colored.colors),
                    verify.check_domains_disjoint(g, dom)]
        rep = verify.metrics(dom, rounds=colored.report.comm_rounds,
                             verdicts=tuple(verdicts))
        doc = {
            "params": {**colored.params, "delta": delta},
            "run": colored.report.to_document(),
            "failed": [],
            "colors": list(colored.colors),
            "labels": dom.to_document(),
            "metrics": rep.to_document(),
        }
    elif tag == "network-decomposition":
        c = params.get("c", 2)
        res = generic_network_decomposition(g, c=c, seed=seed,
                                            radius_cap=params.get("B"))
        bound = 2 * res.params["radius_cap"]
        budget = params.get("label_budget") or _label_budget_default(g.n, c)
        verdict, measured = verify.check_network_decomposition(
            g, res.domains, bound, budget)
        verdicts = [verdict]
        doc = _domains_payload(g, res, verdicts, {
            "diameter_bound": bound,
            "label_budget": budget,
            **measured,
        })
    elif tag in ("forest-id", "forest-hpartition"):
        if tag == "forest-id":
            labeling, dom, report = forest_decomposition(g, mode="id", seed=seed)
        else:
            labeling, dom, report = forest_decomposition(
                g, mode="h-partition", a=params["a"],
                eps=params.get("eps", 1.0), seed=seed)
        verdicts = [verify.check_forest_labeling(
            g, labeling.edge_labels, labeling.assigner, labeling.forest_count)]
        rep = verify.metrics(dom, rounds=report.comm_rounds, verdicts=tuple(verdicts))
        doc = {
            "params": {"forest_count": labeling.forest_count},
            "run": report.to_document(),
            "failed": [],
            "edges": [
                {"u": u, "v": v, "label": labeling.edge_labels[e],
                 "assigner": labeling.assigner[e]}
                for e, (u, v) in enumerate(g.edges)
            ],
            "labels": dom.to_document(),
            "metrics": rep.to_document(),
        }
    elif tag == "arboricity-coloring":
        res = arboricity_generic_coloring(g, a=params["a"],
                                          eps=params.get("eps", 1.0),
                                          c=params.get("c", 4.0), seed=seed)
        verdicts = [verify.check_domains_disjoint(g, res.domains)]
        doc = _domains_payload(g, res, verdicts)
    elif tag in ("edge-random", "edge-delta2"):
        variant = "random" if tag == "edge-random" else "delta2"
        res = edge_coloring_via_line_graph(g, variant=variant,
                                           c=params.get("c", 4.0), seed=seed)
        verdicts = [verify.check_edge_domains_disjoint(g, res.domains)]
        doc = _domains_payload(g, res, verdicts)
    elif tag == "kuhn-edge":
        res = kuhn_defective_edge_coloring(g, i=params["i"], seed=seed)
        verdict, worst = verify.check_edge_defect(g, res.colors, res.defect_bound)
        rep_dom = None
        doc = {
            "params": res.params,
            "run": res.report.to_document(),
            "failed": [],
            "colors": list(res.colors),
            "pairs": [list(p) for p in res.pairs],
            "metrics": {
                "problem_domain_size": res.palette_size,
                "defect_bound": res.defect_bound,
                "measured_defect": worst,
                "rounds": res.report.comm_rounds,
                "verdicts": [verdict.to_document()],
            },
        }
        verdicts = [verdict]
    elif tag == "dominating-edge":
        res = dominating_edge_coloring(g, c=params.get("c", 3),
                                       t=params.get("t", 3), seed=seed,
                                       max_rounds=params.get("max_rounds"))
        verdicts = [verify.check_edge_dominating(g, res.dominating)]
        for cls in range(1, res.class_count + 1):
            members = [e for e in sorted(res.dominating) if res.class_of[e] == cls]
            sub = Graph.from_edges(g.n, [g.edges[e] for e in members])
            sub_ids = frozenset(range(sub.m))
            covered = [False] * sub.n
            ok = True
            for u, v in sub.edges:
                if covered[u] or covered[v]:
                    ok = False
                covered[u] = covered[v] = True
            verdicts.append(verify.Verdict(
                name=f"class-{cls}-matching", ok=ok,
                status="ok" if ok else "violated"))
        rep = verify.metrics(res.domains, rounds=res.report.comm_rounds,
                             verdicts=tuple(verdicts))
        doc = res.to_document()
        doc["edges"] = [
            {"u": u, "v": v, "in_dominating": e in res.dominating,
             "class": res.class_of[e],
             "domain": sorted(res.domains.domains[e]) if e in res.dominating else []}
            for e, (u, v) in enumerate(g.edges)
        ]
        doc["metrics"] = rep.to_document()
        doc["failed"] = []
    else:
        raise ConfigError(f"unknown algorithm tag {tag!r}")

    incomplete = doc["run"]["incomplete"] or bool(doc.get("failed"))
    all_ok = all(v.ok for v in verdicts)
    doc["status"] = ("incomplete" if incomplete
                     else "ok" if all_ok else "verdict-failure")
    return doc


def _graph_from_args(args, seed: int) -> tuple[Graph, dict]:
    if getattr(args, "graph", None):
        text = Path(args.graph).read_text()
        g = load_edge_list(text)
        source = {"kind": "file", "path": args.graph}
    elif getattr(args, "gen", None):
        spec = parse_gen_spec(args.gen)
        if "seed=" not in args.gen:
            spec = GeneratorSpec(kind=spec.kind, n=spec.n, p=spec.p, a=spec.a,
                                 max_deg=spec.max_deg, seed=seed)
        g = generate(spec)
        source = {"kind": "generator", "spec": args.gen, "seed": spec.seed}
    else:
        raise ConfigError("one of --graph or --gen is required")
    return g, source


def build_report(tag: str, g: Graph, source: dict, seed: int, params: dict) -> dict:
    body = run_algorithm(tag, g, seed, params)
    return {
        "schema": "genlabel-report-v1",
        "algorithm": tag,
        "seed": seed,
        "graph": {
            "source": source,
            "n": g.n,
            "m": g.m,
            "max_degree": g.max_degree,
        },
        **body,
    }


def report_to_csv(doc: dict) -> str:
    metrics = doc.get("metrics", {})
    verdicts = metrics.get("verdicts", [])
    header = ["algorithm", "graph", "seed", "n", "m", "max_degree", "rounds",
              "problem_domain_size", "solution_domain_min", "contingency_factor",
              "verdicts_ok", "status"]
    source = doc["graph"]["source"]
    graph_desc = source.get("path") or source.get("spec") or source["kind"]
    row = [
        doc["algorithm"], graph_desc, str(doc["seed"]), str(doc["graph"]["n"]),
        str(doc["graph"]["m"]), str(doc["graph"]["max_degree"]),
        str(metrics.get("rounds", "")),
        str(metrics.get("problem_domain_size", "")),
        str(metrics.get("solution_domain_min", "")),
        str(metrics.get("contingency_factor", "")),
        str(all(v["ok"] for v in verdicts)).lower(),
        doc["status"],
    ]
    return ",".join(header) + "\n" + ",".join(row) + "\n"


def _emit(doc: dict, out: str | None, fmt: str) -> None:
    payload = (json.dumps(doc, indent=2) + "\n") if fmt == "json" else report_to_csv(doc)
    if out:
        Path(out).write_text(payload)
    else:
        sys.stdout.write(payload)


def cmd_run(args) -> int:
    try:
        params = parse_params(args.algo, args.param or [])
        g, source = _graph_from_args(args, args.seed)
    except (ConfigError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        doc = build_report(args.algo, g, source, args.seed, params)
    except ArboricityError as exc:
        print(f"error: {exc} (witness: {list(exc.witness)[:16]}...)", file=sys.stderr)
        return EXIT_VERDICT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    _emit(doc, args.out, args.format)
    if doc["status"] == "incomplete":
        return EXIT_INCOMPLETE
    if doc["status"] == "verdict-failure":
        return EXIT_VERDICT
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench mode


DEFAULT_SUITE = [
    {"name": "3-coloring expansion (oriented trees)", "algo": "cv3-expansion",
     "gen": "random-tree:n=512,max_deg=8", "seeds": [0, 1], "params": {}},
    {"name": "one-round random coloring", "algo": "random-coloring",
     "gen": "gnp:n=256,p=0.02", "seeds": [0, 1], "params": {}},
    {"name": "quadratic-palette coloring", "algo": "delta2-coloring",
     "gen": "gnp:n=256,p=0.02", "seeds": [0, 1], "params": {}},
    {"name": "defective coloring", "algo": "defective-coloring",
     "gen": "gnp:n=256,p=0.04", "seeds": [0, 1], "params": {"p": 2}},
    {"name": "bounded-arboricity coloring", "algo": "arboricity-coloring",
     "gen": "forest-union:n=256,a=2", "seeds": [0, 1], "params": {"a": 2}},
    {"name": "network decomposition", "algo": "network-decomposition",
     "gen": "gnp:n=256,p=0.023", "seeds": [0, 1], "params": {"c": 2}},
    {"name": "forest decomposition (id)", "algo": "forest-id",
     "gen": "gnp:n=256,p=0.02", "seeds": [0, 1], "params": {}},
    {"name": "forest decomposition (peeling)", "algo": "forest-hpartition",
     "gen": "forest-union:n=256,a=2", "seeds": [0, 1], "params": {"a": 2}},
    {"name": "edge coloring (random, line graph)", "algo": "edge-random",
     "gen": "gnp:n=128,p=0.04", "seeds": [0, 1], "params": {}},
    {"name": "edge coloring (quadratic, line graph)", "algo": "edge-delta2",
     "gen": "gnp:n=128,p=0.04", "seeds": [0, 1], "params": {}},
    {"name": "defective edge coloring", "algo": "kuhn-edge",
     "gen": "gnp:n=256,p=0.04", "seeds": [0, 1], "params": {"i": 2}},
    {"name": "dominating-set edge coloring", "algo": "dominating-edge",
     "gen": "gnp:n=256,p=0.02", "seeds": [0, 1], "params": {}},
]


def cmd_bench(args) -> int:
    if args.suite:
        try:
            suite = json.loads(Path(args.suite).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read suite: {exc}", file=sys.stderr)
            return EXIT_CONFIG
    else:
        suite = DEFAULT_SUITE
    rows = []
    any_failure = False
    for entry in suite:
        name = entry.get("name", entry.get("algo", "?"))
        try:
            tag = entry["algo"]
            params = {k: v for k, v in entry.get("params", {}).items()}
            seeds = entry.get("seeds", [0])
            spec = parse_gen_spec(entry["gen"])
            worst_rounds = 0
            min_domain = None
            contingency = ""
            ok_runs = 0
            for seed in seeds:
                gspec = GeneratorSpec(kind=spec.kind, n=spec.n, p=spec.p,
                                      a=spec.a, max_deg=spec.max_deg, seed=seed)
                g = generate(gspec)
                doc = build_report(tag, g, {"kind": "generator",
                                            "spec": entry["gen"], "seed": seed},
                                   seed, params)
                metrics = doc.get("metrics", {})
                worst_rounds = max(worst_rounds, metrics.get("rounds") or 0)
                smin = metrics.get("solution_domain_min")
                if smin is not None:
                    min_domain = smin if min_domain is None else min(min_domain, smin)
                contingency = metrics.get("contingency_factor", contingency)
                if doc["status"] == "ok":
                    ok_runs += 1
            passed = f"{ok_runs}/{len(seeds)}"
            if ok_runs != len(seeds):
                any_failure = True
            rows.append((name, str(worst_rounds),
                         "-" if min_domain is None else str(min_domain),
                         str(contingency), passed, ""))
        except (ConfigError, KeyError, ValueError, ArboricityError) as exc:
            any_failure = True
            rows.append((name, "-", "-", "-", "error", str(exc)))
    header = ("problem", "rounds(max)", "solution-domain(min)",
              "contingency", "pass", "note")
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
              for i in range(len(header))]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header))]
    for r in rows:
        lines.append("  ".join(str(r[i]).ljust(widths[i]) for i in range(len(header))))
    table = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(table)
    else:
        sys.stdout.write(table)
    return EXIT_VERDICT if any_failure else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genlabel",
        description="Multi-choice distributed labeling algorithms with built-in "
                    "verification.")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run one algorithm and verify its output")
    run.add_argument("--algo", required=True, choices=sorted(SCHEMAS))
    src = run.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="edge-list file")
    src.add_argument("--gen", help="generator spec, e.g. gnp:n=1024,p=0.01")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--param", action="append", metavar="K=V",
                     help="algorithm parameter (repeatable)")
    run.add_argument("--out", help="write the report here instead of stdout")
    run.add_argument("--format", choices=("json", "csv"), default="json")
    run.set_defaults(func=cmd_run)
    bench = sub.add_parser("bench", help="run a suite and print a summary table")
    bench.add_argument("--suite", help="JSON suite file (defaults to built-in)")
    bench.add_argument("--out", help="write the summary table here")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
