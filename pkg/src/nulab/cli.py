"""Command-line interface.

Subcommands: gen, solve, profile, verify, hunt, decompose, oracle.
Graphs stream one per line (sparse6 or graph6, auto-detected by the
leading ':'), results stream as JSON-Lines.  Exit codes: 0 clean, 2 a
conjecture counterexample was found, 3 a theorem-kind rule was violated
(a solver-bug signal), 1 usage or I/O errors.

The env var NU_LAB_THREADS caps worker parallelism; evaluation is
sequential (a single worker), which satisfies any cap, and results are
deterministic and ordered by input line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Iterator, Optional, TextIO

from . import corpus, exact, families, gio, oracle, rules, structure
from .errors import (
    BadParameter,
    MalformedGraph6,
    MalformedSparse6,
    LoopRejected,
    NotInClass,
    NuLabError,
    TooLarge,
    UnknownFamily,
)
from .graph import MultiGraph
from .profiling import compute_profile, profile_as_dict, profile_from_dict

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONJECTURE = 2
EXIT_THEOREM = 3

_THEOREM_KINDS = {"theorem", "proposition", "lemma-bound", "external-cited"}


def _worker_cap() -> int:
    raw = os.environ.get("NU_LAB_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit(f"NU_LAB_THREADS must be an integer, got {raw!r}")
    if cap < 1:
        raise SystemExit("NU_LAB_THREADS must be >= 1")
    return cap


# ---------------------------------------------------------------------------
# graph input


def _read_graphs(stream: TextIO) -> Iterator[tuple[int, Optional[MultiGraph], str]]:
    """(line number, graph or None, error message) triples."""
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            if line.startswith(":") or line.startswith(">>sparse6<<"):
                yield lineno, gio.parse_sparse6(line), ""
            else:
                yield lineno, gio.parse_graph6(line), ""
        except (MalformedGraph6, MalformedSparse6, LoopRejected) as exc:
            yield lineno, None, str(exc)


def _open_input(path: Optional[str]) -> TextIO:
    if path in (None, "-"):
        return sys.stdin
    return open(path, "r", encoding="utf-8")


def _emit(sink: TextIO, obj: dict) -> None:
    sink.write(json.dumps(gio._jsonable(obj), sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# gen


def _gen_graphs(args: argparse.Namespace) -> list[MultiGraph]:
    name = args.family
    if name == "fig1":
        return [families.fig1_graph()]
    if name == "sylvester10":
        return [families.sylvester10()]
    if name == "fig3":
        return [families.fig3_graph12()]
    if name == "petersen":
        return [families.petersen()]
    if name == "petersen-minus-vertex":
        return [families.petersen_minus_vertex()]
    if name == "fig5":
        return [families.fig5_graph28()]
    if name == "k4":
        return [families.k4()]
    if name == "remark":
        if args.k is None or args.l is None:
            raise BadParameter("remark requires --k and --l")
        return [families.remark_family(args.k, args.l)]
    if name == "ring":
        if args.r is None:
            raise BadParameter("ring requires --r")
        return [families.ring_of_diamonds(args.r)]
    if name == "cycle":
        if args.l is None:
            raise BadParameter("cycle requires --l")
        return [families.cycle(args.l)]
    if name == "triangle-replace-petersen":
        return [families.triangle_replace(families.petersen())]
    if name == "random-trees":
        return list(corpus.random_trees(args.count, args.max_n, args.seed))
    if name == "random-unicyclic":
        return list(corpus.random_unicyclics(args.count, args.max_n, args.seed))
    if name == "cubic":
        return corpus.connected_cubic_graphs(args.max_n)
    raise UnknownFamily(name)


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        graphs = _gen_graphs(args)
    except (UnknownFamily, BadParameter) as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for g in graphs:
            sink.write(gio.emit_sparse6(g) + "\n")
    finally:
        if args.out:
            sink.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# solve / oracle


def _parse_all_k(spec: str) -> list[int]:
    lo, _, hi = spec.partition("..")
    return list(range(int(lo), int(hi) + 1))


def _cmd_solve(args: argparse.Namespace) -> int:
    sink = sys.stdout
    with _open_input(args.input) as stream:
        for lineno, g, err in _read_graphs(stream):
            if g is None:
                _emit(sink, {"line": lineno, "error": err})
                continue
            start = time.monotonic()
            rec: dict = {"line": lineno, "graph_id": f"line{lineno}"}
            if args.all_k:
                for k in _parse_all_k(args.all_k):
                    rec[f"nu{k}"] = exact.nu_k(g, k).value
            else:
                res = exact.nu_k(g, args.k)
                rec["k"] = args.k
                rec["nu"] = res.value
                if args.certificate:
                    rec["certificate"] = {
                        str(e): c for e, c in sorted(res.certificate.assignment.items())
                    }
            rec["runtime_ms"] = int((time.monotonic() - start) * 1000)
            _emit(sink, rec)
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    sink = sys.stdout
    with _open_input(args.input) as stream:
        for lineno, g, err in _read_graphs(stream):
            if g is None:
                _emit(sink, {"line": lineno, "error": err})
                continue
            start = time.monotonic()
            rec = {"line": lineno, "graph_id": f"line{lineno}", "k": args.k}
            try:
                rec["nu"] = oracle.nu_k_oracle(g, args.k, max_edges=args.max_edges)
            except TooLarge as exc:
                _emit(sink, {"line": lineno, "error": str(exc)})
                continue
            rec["runtime_ms"] = int((time.monotonic() - start) * 1000)
            _emit(sink, rec)
    return EXIT_OK


# ---------------------------------------------------------------------------
# profile / verify / hunt / decompose


def _profile_record(lineno: int, g: MultiGraph, ks) -> gio.ReportRecord:
    start = time.monotonic()
    profile = compute_profile(g, ks=ks)
    return gio.ReportRecord(
        graph_id=f"line{lineno}",
        format="sparse6",
        profile=profile_as_dict(profile),
        rule_reports=(),
        runtime_ms=int((time.monotonic() - start) * 1000),
    )


def _cmd_profile(args: argparse.Namespace) -> int:
    ks = _parse_all_k(args.all_k)
    with _open_input(args.input) as stream:
        for lineno, g, err in _read_graphs(stream):
            if g is None:
                _emit(sys.stdout, {"line": lineno, "error": err})
                continue
            gio.emit_report([_profile_record(lineno, g, ks)], sys.stdout)
    return EXIT_OK


def _report_dict(rep: rules.RuleReport) -> dict:
    out: dict = {
        "rule_id": rep.rule_id,
        "kind": rep.kind,
        "applicable": rep.applicable,
    }
    if rep.applicable:
        out["holds"] = rep.holds
        out["tight"] = rep.tight
        out["lhs"] = gio.serialize_rational(rep.lhs)
        out["rhs"] = gio.serialize_rational(rep.rhs)
    if rep.k is not None:
        out["k"] = rep.k
    if rep.note:
        out["note"] = rep.note
    return out


def _cmd_verify(args: argparse.Namespace) -> int:
    rule_ids = args.rules.split(",") if args.rules else None
    worst = EXIT_OK
    ks = _parse_all_k(args.all_k)
    with _open_input(args.input) as stream:
        if args.profiles:
            items = []
            for lineno, raw in enumerate(stream, start=1):
                if raw.strip():
                    obj = json.loads(raw)
                    prof = obj.get("profile", obj)
                    items.append((lineno, profile_from_dict(prof)))
        else:
            items = [
                (lineno, compute_profile(g, ks=ks))
                for lineno, g, err in _read_graphs(stream)
                if g is not None
            ]
    for lineno, profile in items:
        reports = rules.evaluate_all(profile, rule_ids)
        for rep in reports:
            if rep.applicable and rep.holds is False:
                if rep.kind in _THEOREM_KINDS:
                    worst = EXIT_THEOREM
                elif worst == EXIT_OK:
                    worst = EXIT_CONJECTURE
        _emit(
            sys.stdout,
            {
                "line": lineno,
                "graph_id": f"line{lineno}",
                "rule_reports": [_report_dict(r) for r in reports],
            },
        )
    return worst


def _cmd_hunt(args: argparse.Namespace) -> int:
    rule_ids = args.rule if args.rule else list(rules.CONJECTURE_IDS)
    bad = set(rule_ids) - set(rules.CONJECTURE_IDS)
    if bad:
        print(f"hunt: not conjecture rules: {sorted(bad)}", file=sys.stderr)
        return EXIT_USAGE
    _emit(
        sys.stdout,
        {
            "header": True,
            "rules": sorted(rule_ids),
            "note": (
                "desk-scale corpus; the full-scale verification "
                "(e.g. all bridgeless cubic graphs up to n = 26) is not reproduced"
            ),
        },
    )
    found = False
    ks = _parse_all_k(args.all_k)
    with _open_input(args.input) as stream:
        for lineno, g, err in _read_graphs(stream):
            if g is None:
                continue
            if args.budget is not None and lineno > args.budget:
                break
            try:
                profile = compute_profile(g, ks=ks)
            except NuLabError as exc:
                _emit(sys.stdout, {"line": lineno, "error": str(exc)})
                continue
            for rep in rules.evaluate_all(profile, rule_ids):
                if rep.applicable and rep.holds is False:
                    found = True
                    _emit(
                        sys.stdout,
                        {
                            "line": lineno,
                            "counterexample": gio.emit_sparse6(g),
                            "profile": profile_as_dict(profile),
                            "rule_report": _report_dict(rep),
                        },
                    )
                    if args.fail_on_violation:
                        return EXIT_CONJECTURE
    return EXIT_CONJECTURE if found else EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    with _open_input(args.input) as stream:
        for lineno, g, err in _read_graphs(stream):
            if g is None:
                _emit(sys.stdout, {"line": lineno, "error": err})
                continue
            rec: dict = {"line": lineno, "graph_id": f"line{lineno}"}
            try:
                dec = structure.oum_decompose(g)
            except NotInClass as exc:
                _emit(sys.stdout, rec | {"error": str(exc)})
                continue
            rec["variant"] = dec.variant.value
            rec["base_n"] = dec.base_graph.n
            rec["base_m"] = dec.base_graph.m
            rec["diamonds"] = dec.total_diamonds
            if args.r3:
                rec["r3"] = structure.r3_via_reduction(g)
            _emit(sys.stdout, rec)
    return EXIT_OK


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="nulab")
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", help="emit family/corpus graphs as sparse6")
    p.add_argument("family")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="exact nu_k per input graph")
    p.add_argument("input", nargs="?")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--all-k", default=None, help="range like 1..4")
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("profile", help="full exact profile per input graph")
    p.add_argument("input", nargs="?")
    p.add_argument("--all-k", default="1..4")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("verify", help="evaluate the rule registry")
    p.add_argument("input", nargs="?")
    p.add_argument("--rules", default=None, help="comma-separated rule ids")
    p.add_argument("--all-k", default="1..4")
    p.add_argument(
        "--profiles",
        action="store_true",
        help="input lines are JSON profiles instead of graphs",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("hunt", help="scan a corpus for conjecture counterexamples")
    p.add_argument("input", nargs="?")
    p.add_argument("--rule", action="append", default=None)
    p.add_argument("--all-k", default="1..4")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--fail-on-violation", action="store_true")
    p.set_defaults(func=_cmd_hunt)

    p = sub.add_parser("decompose", help="claw-free cubic decomposition")
    p.add_argument("input", nargs="?")
    p.add_argument("--r3", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("oracle", help="independent exhaustive nu_k")
    p.add_argument("input", nargs="?")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--max-edges", type=int, default=oracle.DEFAULT_MAX_EDGES)
    p.set_defaults(func=_cmd_oracle)
    return top


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    _worker_cap()
    try:
        return args.func(args)
    except OSError as exc:
        print(f"nulab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
