"""Command-line front end.

One-shot subcommands print a single value or genotype; `verify` runs a
property suite; `ga` runs an experiment and writes a CSV. Every command
is deterministic given its full argument list including --seed.

Exit codes: 0 success, 1 verification found violations, 2 input error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import circular, graphs, grouping, sequences, suites, symmetric
from .crossovers import cycle_crossover, line_crossover, uniform_crossover
from .errors import InputError, QgxError
from .ga import config_from_dict, run_ga
from .genotypes import permutation, real_vector, symbol_vector
from .metrics import euclidean_distance, hamming_distance, swap_distance
from .problems import build_problem

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_IO = 3

GENOTYPE_FAMILIES = (
    "grouping",
    "graph",
    "symmetric-real",
    "symmetric-discrete",
    "circular",
    "sequence",
)

_DEFAULT_METRIC = {
    "grouping": "hamming",
    "graph": "hamming",
    "symmetric-real": "euclidean",
    "symmetric-discrete": "hamming",
    "circular": "hamming",
    "sequence": "edit",
}


def _fmt_real(v: float) -> str:
    return format(float(v), ".10g")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split()]
    except ValueError as exc:
        raise InputError(f"expected space-separated integers, got {text!r}") from exc


def _reals(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split()]
    except ValueError as exc:
        raise InputError(f"expected space-separated decimals, got {text!r}") from exc


def _require_k(args) -> int:
    if args.k is None:
        raise InputError("--k (alphabet size) is required for the grouping family")
    return args.k


def _parse_pair(args):
    family = args.family
    if family == "grouping":
        k = _require_k(args)
        return symbol_vector(_ints(args.first), k), symbol_vector(_ints(args.second), k)
    if family == "symmetric-real":
        return real_vector(_reals(args.first)), real_vector(_reals(args.second))
    if family == "symmetric-discrete":
        a, b = _ints(args.first), _ints(args.second)
        k = args.k if args.k is not None else max(a + b, default=0)
        return symbol_vector(a, k), symbol_vector(b, k)
    if family == "circular":
        return permutation(_ints(args.first)), permutation(_ints(args.second))
    if family == "graph":
        return (
            graphs.parse_edge_list(Path(args.first).read_text()),
            graphs.parse_edge_list(Path(args.second).read_text()),
        )
    return sequences.check_sequence(args.first), sequences.check_sequence(args.second)


def _metric_for(args) -> str:
    metric = args.metric or _DEFAULT_METRIC[args.family]
    allowed = {
        "grouping": {"hamming"},
        "graph": {"hamming"},
        "symmetric-real": {"euclidean"},
        "symmetric-discrete": {"hamming"},
        "circular": {"hamming", "swap"},
        "sequence": {"edit", "hamming"},
    }[args.family]
    if metric not in allowed:
        raise InputError(
            f"metric {metric!r} is not supported for family {args.family!r} "
            f"(allowed: {sorted(allowed)})"
        )
    return metric


def _graph_match(a, b, args) -> graphs.MatchResult:
    if len(a) <= graphs.EXACT_MATCH_CAP:
        return graphs.quotient_distance_exact(a, b)
    rng = np.random.default_rng(args.seed)
    return graphs.match_heuristic(a, b, args.restarts, rng)


def _print_genotype(family: str, value) -> None:
    if family == "symmetric-real":
        print(" ".join(_fmt_real(v) for v in value))
    elif family == "graph":
        print(graphs.format_edge_list(value))
    elif family == "sequence":
        print(value)
    else:
        print(" ".join(str(v) for v in value))


def cmd_distance(args) -> int:
    metric = _metric_for(args)
    a, b = _parse_pair(args)
    family, mode = args.family, args.mode

    if family == "grouping":
        value = hamming_distance(a, b) if mode == "raw" else grouping.li_distance(a, b, args.k)
    elif family == "symmetric-real":
        value = euclidean_distance(a, b) if mode == "raw" else symmetric.quotient_euclidean(a, b)
    elif family == "symmetric-discrete":
        value = hamming_distance(a, b) if mode == "raw" else symmetric.quotient_hamming(a, b)
    elif family == "circular":
        base = hamming_distance if metric == "hamming" else swap_distance
        value = base(a, b) if mode == "raw" else circular.quotient_distance(a, b, metric)
    elif family == "graph":
        value = graphs.matrix_hamming(a, b) if mode == "raw" else _graph_match(a, b, args).dist
    else:  # sequence
        if metric == "edit":
            if mode == "raw":
                raise InputError("raw mode on sequences uses --metric hamming on equal lengths")
            value = sequences.edit_distance(a, b)
        else:
            if mode != "raw":
                raise InputError("hamming on sequences is the raw (stretched-genotype) metric")
            value = hamming_distance(a, b)

    print(value if isinstance(value, int) else _fmt_real(value))
    return EXIT_OK


def cmd_normalize(args) -> int:
    metric = _metric_for(args)
    a, b = _parse_pair(args)
    family = args.family

    if family == "grouping":
        result = grouping.li_normalize(a, b, args.k)
    elif family == "symmetric-real":
        result, _ = symmetric.normalize_real(a, b)
    elif family == "symmetric-discrete":
        result, _ = symmetric.normalize_discrete(a, b)
    elif family == "circular":
        result = circular.normalize(a, b, metric)
    elif family == "graph":
        match = _graph_match(a, b, args)
        result = graphs.conjugate(b, match.permutation)
    else:  # sequence: normalization is optimal alignment; print the stretched second parent
        result = sequences.optimal_align(a, b).right

    _print_genotype(family, result)
    return EXIT_OK


def cmd_crossover(args) -> int:
    metric = _metric_for(args)
    a, b = _parse_pair(args)
    family, mode = args.family, args.mode
    rng = np.random.default_rng(args.seed)

    if family == "grouping":
        child = uniform_crossover(a, b, rng) if mode == "raw" else grouping.li_crossover(a, b, args.k, rng)
    elif family == "symmetric-real":
        child = (
            line_crossover(a, b, float(rng.random()))
            if mode == "raw"
            else symmetric.iq_crossover_real(a, b, rng)
        )
    elif family == "symmetric-discrete":
        child = uniform_crossover(a, b, rng) if mode == "raw" else symmetric.iq_crossover_discrete(a, b, rng)
    elif family == "circular":
        child = cycle_crossover(a, b, rng) if mode == "raw" else circular.pi_cycle_crossover(a, b, rng, metric)
    elif family == "graph":
        if mode == "raw":
            child = graphs.uniform_edge_crossover(a, b, rng)
        else:
            matcher = (
                graphs.exact_matcher()
                if len(a) <= graphs.EXACT_MATCH_CAP
                else graphs.heuristic_matcher(args.restarts)
            )
            child = graphs.iq_crossover(a, b, rng, matcher)
    else:  # sequence
        child = (
            sequences.tail_padded_crossover(a, b, rng)
            if mode == "raw"
            else sequences.homologous_crossover(a, b, rng)
        )

    _print_genotype(family, child)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = suites.run_suite(args.suite, args.family, args.trials, args.seed)
    for report in reports:
        print(report.line())
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATIONS


def cmd_ga(args) -> int:
    text = Path(args.config).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "problem" not in doc or "ga" not in doc:
        raise InputError("config must be a JSON object with 'problem' and 'ga' sections")

    problem = build_problem(doc["problem"])
    config = config_from_dict(doc["ga"])
    result = run_ga(problem, config)

    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["generation", "best", "mean", "evaluations", "mode", "seed"])
        for s in result.stats:
            writer.writerow(
                [s.generation, _fmt_real(s.best), _fmt_real(s.mean), s.evaluations, config.mode, config.seed]
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgx",
        description="Quotient geometric crossover toolkit: distances, normalizers, "
        "crossovers, property suites, and GA experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pair_command(name: str, func, with_mode: bool):
        sp = sub.add_parser(name)
        sp.add_argument("--family", required=True, choices=GENOTYPE_FAMILIES)
        sp.add_argument("--metric", default=None, choices=["hamming", "euclidean", "swap", "edit"])
        if with_mode:
            sp.add_argument("--mode", default="quotient", choices=["raw", "quotient"])
        sp.add_argument("--k", type=int, default=None, help="alphabet size (grouping)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--restarts", type=int, default=20, help="heuristic graph matching restarts")
        sp.add_argument("first", help="first parent (text format, or file path for graphs)")
        sp.add_argument("second", help="second parent")
        sp.set_defaults(func=func)

    add_pair_command("distance", cmd_distance, with_mode=True)
    add_pair_command("normalize", cmd_normalize, with_mode=False)
    add_pair_command("crossover", cmd_crossover, with_mode=True)

    sp = sub.add_parser("verify")
    sp.add_argument("--suite", required=True, choices=suites.SUITES)
    sp.add_argument("--family", required=True, choices=suites.FAMILIES)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("ga")
    sp.add_argument("--config", required=True, help="JSON config with 'problem' and 'ga' sections")
    sp.add_argument("--out", required=True, help="CSV output path")
    sp.set_defaults(func=cmd_ga)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QgxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
