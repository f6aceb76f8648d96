"""Command-line front end.

Exit codes: 0 ok, 1 parse or I/O error, 2 no construction for the requested
case, 3 a computed value contradicts another one.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .assemble import CYCLIC_ODD_N_EVEN_R, NotCoveredError, construct_cms, construct_ms, plan_cms, plan_ms
from .core import complete_graph, eval_cms_r, eval_ms_r
from .corpus import CORPUS
from .decomp import matching_decomposition_even, two_regular_R, verify_decomposition, walecki_cycles
from .hyper import (
    baranyai,
    eval_hyper_ms_r,
    greedy_hyper_ordering,
    hyper_upper_bound,
    katona_bounds,
    verify_hyper_decomposition,
)
from .oracle import SearchConfig, exact_cms, exact_ms, upper_bound
from .serialize import (
    FormatError,
    decomposition_to_json,
    hyper_ordering_to_json,
    hyper_ordering_to_text,
    load_ordering,
    ordering_to_json,
    ordering_to_text,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNCOVERED = 2
EXIT_DISAGREE = 3


class _Parser(argparse.ArgumentParser):
    # argparse uses exit status 2 for usage errors, which is taken here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _window_text(window) -> str:
    if window is None:
        return "none"
    start, length, vertex = window
    return f"start={start} length={length} vertex={vertex}"


def cmd_construct(args) -> int:
    build = construct_cms if args.cyclic else construct_ms
    try:
        plan, ordering = build(args.n, args.r)
    except NotCoveredError as exc:
        print(f"uncovered: {exc}", file=sys.stderr)
        return EXIT_UNCOVERED
    evaluate = eval_cms_r if args.cyclic else eval_ms_r
    value = evaluate(ordering, args.r).value
    payload = {
        "n": args.n,
        "r": args.r,
        "cyclic": args.cyclic,
        "case_tag": plan.case_tag,
        "claimed_value": plan.claimed_value,
        "value": value,
        "edges": ordering_to_json(ordering)["edges"],
    }
    text = (f"# case {plan.case_tag} value {value} claimed {plan.claimed_value}\n"
            + ordering_to_text(ordering))
    _emit(args, payload, text)
    if value < plan.claimed_value:
        print(f"construction evaluates to {value}, below its claim {plan.claimed_value}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_eval(args) -> int:
    ordering = load_ordering(_read(args.input))
    report = (eval_cms_r if args.cyclic else eval_ms_r)(ordering, args.r)
    payload = {"n": ordering.n, "r": args.r, "cyclic": args.cyclic, "value": report.value,
               "violating_window": list(report.violating_window) if report.violating_window else None}
    _emit(args, payload, f"value {report.value}\nviolating_window {_window_text(report.violating_window)}\n")
    return EXIT_OK


def cmd_exact(args) -> int:
    if args.complete is not None:
        graph = complete_graph(args.complete)
    elif args.graph is not None:
        graph = load_ordering(_read(args.graph)).graph
    else:
        print("exact needs --graph FILE or --complete N", file=sys.stderr)
        return EXIT_INPUT
    cfg = SearchConfig(target_s=args.target, node_budget=args.budget)
    cert = (exact_cms if args.cyclic else exact_ms)(graph, args.r, cfg)
    payload = cert.to_json()
    text = (f"# optimum {cert.optimum} exhausted {str(cert.exhausted).lower()} "
            f"proven_upper {cert.proven_upper} nodes {cert.nodes}\n" + ordering_to_text(cert.ordering))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    n = args.n
    if args.kind == "matching":
        if n % 2:
            print("matching decomposition needs even n", file=sys.stderr)
            return EXIT_INPUT
        decomp = matching_decomposition_even(n // 2, args.c if args.c is not None else n - 1)
    elif args.kind == "walecki":
        if n % 2 == 0:
            print("Walecki decomposition needs odd n", file=sys.stderr)
            return EXIT_INPUT
        decomp = walecki_cycles((n - 1) // 2)
    else:
        if n % 4 != 3:
            print("the R decomposition needs n = 2m+1 with m odd", file=sys.stderr)
            return EXIT_INPUT
        decomp = two_regular_R((n - 1) // 2)
    check = verify_decomposition(decomp)
    payload = decomposition_to_json(decomp)
    payload["valid"] = check.ok
    lines = [f"# {decomp.kind} n={n} parts={len(decomp)} valid={str(check.ok).lower()}"]
    for k, part in enumerate(decomp.parts):
        lines.append(f"part {k}: " + " ".join(f"{u}-{v}" for u, v in part.edges))
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK if check.ok else EXIT_DISAGREE


def cmd_verify_corpus(args) -> int:
    results = []
    status = EXIT_OK
    for entry in CORPUS:
        ordering = entry.ordering
        complete = ordering.graph.is_complete() and ordering.graph == complete_graph(entry.n)
        report = eval_cms_r(ordering, entry.r)
        ok = complete and report.value == entry.claimed_cms_r
        if not ok:
            status = EXIT_DISAGREE
        results.append({"id": entry.id, "n": entry.n, "r": entry.r, "expected": entry.claimed_cms_r,
                        "value": report.value, "complete": complete, "pass": ok,
                        "violating_window": list(report.violating_window) if report.violating_window else None})
    text = "".join(
        f"{x['id']}\t{'pass' if x['pass'] else 'FAIL'}\tcms_{x['r']}={x['value']}\texpected={x['expected']}"
        + ("" if x["pass"] else f"\twindow={x['violating_window']}") + "\n"
        for x in results
    )
    _emit(args, {"entries": results}, text)
    return status


def table_rows(n_max: int, r_max: int, cyclic: bool, budget: int, n_min: int = 3):
    """Yield one dict per ``(n, r)`` cell; ``error`` is set when values contradict."""
    for n in range(n_min, n_max + 1):
        for r in range(1, min(r_max, n - 2) + 1):
            bound = upper_bound(n, r)
            plan = (plan_cms if cyclic else plan_ms)(n, r)
            constructed = None
            if plan.claimed_value is not None:
                _, ordering = (construct_cms if cyclic else construct_ms)(n, r)
                constructed = (eval_cms_r if cyclic else eval_ms_r)(ordering, r).value
            oracle = None
            exhausted = False
            upper = bound
            if budget > 0:
                cert = (exact_cms if cyclic else exact_ms)(complete_graph(n), r, SearchConfig(node_budget=budget))
                oracle, exhausted, upper = cert.optimum, cert.exhausted, cert.proven_upper
            error = None
            if constructed is not None:
                if constructed < plan.claimed_value:
                    error = f"constructed {constructed} below claim {plan.claimed_value}"
                elif constructed > upper:
                    error = f"constructed {constructed} above proven upper bound {upper}"
                elif exhausted and plan.case_tag != CYCLIC_ODD_N_EVEN_R and constructed != oracle:
                    error = f"constructed {constructed} differs from exact {oracle}"
            if exhausted:
                provenance = "oracle"
            elif constructed is not None:
                provenance = "constructed"
            else:
                provenance = "bound-only"
            yield {"n": n, "r": r, "bound": bound, "constructed": constructed, "case_tag": plan.case_tag,
                   "oracle": oracle, "exhausted": exhausted, "provenance": provenance, "error": error}


def cmd_table(args) -> int:
    rows = list(table_rows(args.n_max, args.r_max, args.cyclic, args.budget))
    cols = ["n", "r", "bound", "constructed", "oracle", "provenance", "case_tag"]

    def cell(v):
        return "-" if v is None else str(v)

    lines = ["\t".join(cols)]
    for row in rows:
        oracle = cell(row["oracle"])
        if row["oracle"] is not None and not row["exhausted"]:
            oracle = f">={oracle}"
        lines.append("\t".join([cell(row["n"]), cell(row["r"]), cell(row["bound"]), cell(row["constructed"]),
                                oracle, row["provenance"], row["case_tag"]]))
    _emit(args, {"cyclic": args.cyclic, "rows": rows}, "\n".join(lines) + "\n")
    errors = [row for row in rows if row["error"]]
    for row in errors:
        print(f"disagreement at n={row['n']} r={row['r']}: {row['error']}", file=sys.stderr)
    return EXIT_DISAGREE if errors else EXIT_OK


def cmd_hyper(args) -> int:
    try:
        decomp = baranyai(args.n, args.k)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    check = verify_hyper_decomposition(decomp)
    if not check:
        print(f"invalid decomposition: {check.message}", file=sys.stderr)
        return EXIT_DISAGREE
    ordering = greedy_hyper_ordering(decomp, args.r, args.cyclic)
    value = eval_hyper_ms_r(ordering, args.r, args.cyclic).value
    a, b, ms_bound, cms_bound = katona_bounds(args.n, args.k, args.r)
    target = cms_bound if args.cyclic else ms_bound
    upper = hyper_upper_bound(args.n, args.k, args.r)
    payload = {"n": args.n, "k": args.k, "r": args.r, "cyclic": args.cyclic, "parts": len(decomp.parts),
               "a": a, "b": b, "target": target, "upper": upper, "value": value,
               "edges": hyper_ordering_to_json(ordering)["edges"]}
    text = (f"# parts {len(decomp.parts)} value {value} target {target} upper {upper}\n"
            + hyper_ordering_to_text(ordering))
    _emit(args, payload, text)
    return EXIT_OK if target <= value <= upper else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, default=200_000, help="search node budget (0 disables search)")

    parser = _Parser(prog="matchseq", description="Edge orderings of complete graphs with sparse sliding windows.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", parents=[common], help="build an ordering of K_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cyclic", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("eval", parents=[common], help="evaluate an ordering file")
    p.add_argument("--input", required=True, help="edge-list text or JSON; '-' reads stdin")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cyclic", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("exact", parents=[common], help="exact value by search")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--graph", help="edge-list file; its order is ignored")
    g.add_argument("--complete", type=int, metavar="N", help="search K_N")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--target", type=int, default=None, help="decide a single window size")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("decompose", parents=[common], help="print a decomposition of K_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("matching", "walecki", "R"), required=True)
    p.add_argument("--c", type=int, default=None, help="ring count for the matching decomposition")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify-corpus", parents=[common], help="re-evaluate the embedded witness orderings")
    p.set_defaults(func=cmd_verify_corpus)

    p = sub.add_parser("table", parents=[common], help="grid of constructed, searched and bound values")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--cyclic", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("hyper", parents=[common], help="order the complete k-graph via a Baranyai decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cyclic", action="store_true")
    p.set_defaults(func=cmd_hyper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget < 0:
        print("--budget must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (FormatError, OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
