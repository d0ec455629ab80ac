"""Command line entry point: ``python -m lions <command> ...``.

Exit codes: 0 success, 1 domain error, 2 budget or size-guard refusal,
3 parse error, 4 usage error (unknown flag or command).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import io
from .cops import cop_number_exact, lions_from_cops
from .engine import simulate
from .errors import BudgetExceeded, LionsError, ParseError, SizeGuardError
from .search import DEFAULT_MAX_N, clearable, lion_number, monotone_lion_number
from .synthesis import (clear_monotone_via_connected_decomposition, clear_via_decomposition,
                        counterexample_family)
from .trees import tree_clearing_strategy, tree_lion_number, tree_pathwidth
from .width import connected_pathwidth_exact, pathwidth_exact

EXIT_OK, EXIT_DOMAIN, EXIT_REFUSED, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 3, 4
BUDGET_ENV = "LIONS_BUDGET"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(str(exc.strerror), path) from None


def _graph(args):
    if not args.graph:
        raise ParseError("--graph is required for this command")
    return io.parse_graph(_read(args.graph))


def _budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else None


def _emit(args, payload: dict, g=None, state=None) -> None:
    if args.format == "dot":
        if g is None:
            raise ParseError("this command has no DOT rendering")
        text = io.export_dot(g, state)
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        summary = {k: v for k, v in payload.items() if not isinstance(v, (dict, list))}
        print(json.dumps({"written": args.out, **summary}, sort_keys=True))
    else:
        sys.stdout.write(text)


def _schedule_payload(g, s) -> dict:
    tr = simulate(g, s, record=False)
    return {"lions": s.lion_count, "steps": len(s.steps), "cleared": tr.cleared,
            "monotone": tr.monotone, "schedule": io.schedule_to_data(g, s)}


def cmd_solve(args):
    g = _graph(args)
    budget = _budget(args)
    if args.k is not None:
        res = clearable(g, args.k, monotone=args.monotone, polite=args.polite,
                        budget=budget, max_n=args.max_n)
        payload = {"k": args.k, "clearable": res.clearable, "nodes": res.nodes,
                   "monotone": args.monotone, "polite": args.polite}
        if res.witness is not None:
            payload["witness"] = io.schedule_to_data(g, res.witness)
        return _emit(args, payload, g)
    if args.monotone:
        r = monotone_lion_number(g, polite=True, budget=budget, max_n=args.max_n)
        payload = io.solve_result_to_data(g, r, "monotone_lion_number")
    else:
        r = lion_number(g, budget=budget, max_n=args.max_n)
        payload = io.solve_result_to_data(g, r, "lion_number")
    _emit(args, payload, g)


def cmd_simulate(args):
    g = _graph(args)
    if not args.schedule:
        raise ParseError("--schedule is required for simulate")
    s = io.parse_schedule(g, _read(args.schedule))
    tr = simulate(g, s)
    _emit(args, io.trace_to_data(g, s, tr), g, tr.final)


def cmd_synth(args):
    g = _graph(args)
    if args.decomposition:
        d = io.decomposition_from_data(g, json.loads(_read(args.decomposition)))
    elif args.monotone:
        d = connected_pathwidth_exact(g, max_n=max(args.max_n or 0, 16))[1]
    else:
        d = pathwidth_exact(g, max_n=max(args.max_n or 0, 20))[1]
    s = clear_monotone_via_connected_decomposition(g, d) if args.monotone else clear_via_decomposition(g, d)
    payload = _schedule_payload(g, s)
    payload["decomposition"] = io.decomposition_to_data(g, d)
    _emit(args, payload, g)


def cmd_tree(args):
    g = _graph(args)
    lc, pc = tree_lion_number(g), tree_pathwidth(g)
    payload = {"lion_number": lc.value, "pathwidth": pc.value,
               "lion_witness": None if lc.witness_vertex is None else g.label(lc.witness_vertex),
               "pathwidth_witness": None if pc.witness_vertex is None else g.label(pc.witness_vertex)}
    if args.strategy:
        payload.update(_schedule_payload(g, tree_clearing_strategy(g)))
    _emit(args, payload, g)


def cmd_width(args):
    g = _graph(args)
    if args.connected:
        w, d = connected_pathwidth_exact(g, max_n=max(args.max_n or 0, 16))
        key = "connected_pathwidth"
    else:
        w, d = pathwidth_exact(g, max_n=max(args.max_n or 0, 20))
        key = "pathwidth"
    _emit(args, {key: w, "decomposition": io.decomposition_to_data(g, d)}, g)


def cmd_counterexample(args):
    if args.index is None:
        raise ParseError("--index is required for counterexample")
    kw = {"max_vertices": args.max_n} if args.max_n else {}
    inst = counterexample_family(args.index, **kw)
    g = inst.supergraph
    tr = simulate(g, inst.schedule, record=False)
    summary = {"index": inst.index, "tree_vertices": inst.tree.n, "graph_vertices": g.n,
               "duration": inst.duration, "lions": inst.schedule.lion_count,
               "cleared": tr.cleared, "monotone": tr.monotone, "clear_time": tr.clear_time,
               "timing": [list(x) for x in inst.timing]}
    if args.out:
        out = Path(args.out)
        if args.format == "dot":
            out.write_text(io.export_dot(g, name=f"G{inst.index}"))
        else:
            out.write_text(io.serialize_graph(g, {"family": "counterexample", "index": inst.index}))
            sched = out.with_name(out.stem + ".schedule.json")
            sched.write_text(io.serialize_schedule(g, inst.schedule))
            summary["schedule_file"] = str(sched)
        summary["graph_file"] = str(out)
        print(json.dumps(summary, sort_keys=True))
    elif args.format == "dot":
        sys.stdout.write(io.export_dot(g, name=f"G{inst.index}"))
    else:
        print(json.dumps(summary, indent=2, sort_keys=True))


def cmd_cops(args):
    g = _graph(args)
    r = cop_number_exact(g, budget=_budget(args), max_n=args.max_n)
    cs = r.witness
    lions = lions_from_cops(g, cs)
    payload = {"cop_number": r.value,
               "witness": {"initial": [g.label(v) for v in cs.initial],
                           "steps": [[[g.label(a), g.label(b)] for a, b in mv] for mv in cs.steps]},
               "lion_schedule": _schedule_payload(g, lions)}
    _emit(args, payload, g)


def cmd_verify(args):
    from .verify import SUITES, run_suite

    names = list(SUITES) if args.suite in (None, "all") else [args.suite]
    if any(n not in SUITES for n in names):
        raise ParseError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    results = []
    for name in names:
        res = run_suite(name, max_n=args.max_n, seed=args.seed)
        print(res.line(), file=sys.stderr)
        results.append({"suite": name, "passed": res.passed, "checked": res.checked,
                        "failures": res.failures[:20]})
    payload = {"passed": all(r["passed"] for r in results), "suites": results}
    _emit(args, payload)
    return EXIT_OK if payload["passed"] else EXIT_DOMAIN


COMMANDS = {
    "solve": cmd_solve, "simulate": cmd_simulate, "synth": cmd_synth, "tree": cmd_tree,
    "width": cmd_width, "counterexample": cmd_counterexample, "cops": cmd_cops, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lions", description="Lions-and-contamination toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        c = sub.add_parser(name)
        c.add_argument("--graph")
        c.add_argument("--out")
        c.add_argument("--format", choices=["json", "dot"], default="json")
        c.add_argument("--budget", type=int)
        c.add_argument("--seed", type=int)
        c.add_argument("--max-n", type=int)
        if name == "solve":
            c.add_argument("--k", type=int)
        if name in ("solve", "synth"):
            c.add_argument("--monotone", action="store_true")
        if name == "solve":
            c.add_argument("--polite", action="store_true")
        if name == "simulate":
            c.add_argument("--schedule")
        if name == "synth":
            c.add_argument("--decomposition")
        if name == "tree":
            c.add_argument("--strategy", action="store_true")
        if name == "width":
            c.add_argument("--connected", action="store_true")
        if name == "counterexample":
            c.add_argument("--index", type=int)
        if name == "verify":
            c.add_argument("--suite")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in ("solve", "cops") and args.max_n is None:
        args.max_n = DEFAULT_MAX_N
    try:
        code = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, SizeGuardError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except LionsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
