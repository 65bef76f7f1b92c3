"""``amalgadim`` command line.

Subcommands::

    amalgadim gen dhc 8 -o dhc8.json
    amalgadim amalgamate edge k33.json k33.json -o h.json
    amalgadim dim h.json --method exact --format json
    amalgadim verify all --format tsv

Exit codes: 0 ok; 1 a verification row failed; 2 disconnected input;
3 search budget exhausted; 4 any other input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import families, instance
from .amalgam import TerminalSpec, amalgamate
from .errors import Disconnected, GraphError, TooLarge
from .harness import SUITES, Corpus, Solver, run_suite
from .resolver import DEFAULT_BUDGET, exact_metric_dimension, greedy_resolving_set

EXIT_FAIL = 1
EXIT_DISCONNECTED = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4


class CliError(Exception):
    def __init__(self, kind: str, message: str, code: int = EXIT_INPUT):
        super().__init__(f"{kind}: {message}")
        self.code = code


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.family not in families.FAMILIES:
        raise CliError("UnknownFamily", f"{args.family!r}; choose from {', '.join(families.FAMILIES)}")
    try:
        inst = families.build(args.family, args.params)
    except GraphError as exc:
        raise CliError("BadParams", str(exc)) from exc
    _emit(instance.dumps(instance.InstanceFile.from_family(inst), g6=args.g6), args.out)
    return 0


def _pairs(items, parse):
    out = {}
    for item in items or ():
        idx, _, value = item.partition(":")
        try:
            out[int(idx)] = parse(value)
        except ValueError as exc:
            raise CliError("BadParams", f"cannot parse {item!r}") from exc
    return out


def cmd_amalgamate(args) -> int:
    vertex_over = _pairs(args.terminal_vertex, int)
    edge_over = _pairs(args.terminal_edge, lambda s: tuple(int(x) for x in s.split(",")))
    blocks = []
    for i, path in enumerate(args.inputs):
        try:
            inst = instance.read(path)
        except OSError as exc:
            raise CliError("IoError", str(exc)) from exc
        if args.kind == "vertex":
            v = vertex_over.get(i, inst.terminal_vertex)
            if v is None:
                raise CliError("MissingTerminal", f"{path} has no terminal_vertex")
            term = TerminalSpec.at_vertex(v)
        else:
            e = edge_over.get(i, inst.terminal_edge)
            if e is None:
                raise CliError("MissingTerminal", f"{path} has no terminal_edge")
            a, b = e
            term = TerminalSpec.at_edge(*((b, a) if i in (args.flip or ()) else (a, b)))
        blocks.append((inst.graph(), term))
    result = amalgamate(args.kind, blocks)
    out = instance.InstanceFile.from_graph(
        result.graph,
        terminal_vertex=result.hub if args.kind == "vertex" else None,
        terminal_edge=result.hub if args.kind == "edge" else None,
    )
    out.block_maps = [list(m) for m in result.block_maps]
    _emit(instance.dumps(out, g6=args.g6), args.out)
    return 0


def cmd_dim(args) -> int:
    try:
        inst = instance.read(args.input)
    except OSError as exc:
        raise CliError("IoError", str(exc)) from exc
    g = inst.graph()
    t0 = time.perf_counter()
    if args.method == "exact":
        res = exact_metric_dimension(g, budget=args.budget, jobs=args.jobs)
    else:
        res = greedy_resolving_set(g)
    elapsed = time.perf_counter() - t0
    names = [g.label(v) for v in res.basis]
    if args.format == "json":
        print(json.dumps({
            "dim": res.dim,
            "basis": list(res.basis),
            "basis_labels": names,
            "method": res.method,
            "elapsed": round(elapsed, 6),
            "certificate": {str(v): list(r) for v, r in res.certificate.items()},
        }))
    else:
        print(f"dim: {res.dim}")
        print(f"basis: {' '.join(names)}")
        print(f"method: {res.method}")
        print(f"elapsed: {elapsed:.3f}s")
    return 0


def _corpus(args) -> Corpus:
    counts = tuple(range(2, args.n_max + 1))
    return Corpus(
        cycle_lengths=tuple(range(3, args.lengths_max + 1)),
        complete_orders=tuple(range(2, args.orders_max + 1)),
        prism_params=tuple(range(3, args.prism_max + 1)),
        block_counts=counts,
        ladder_ns=tuple(args.n) if args.n else (2, 3),
        family_max=args.family_max,
        mixed_count=args.mixed_count,
        seed=args.seed,
    )


def cmd_verify(args) -> int:
    solver = Solver(budget=args.budget, jobs=args.jobs)
    rows = run_suite(args.suite, _corpus(args), solver)
    if args.format == "json":
        for r in rows:
            print(json.dumps(r.as_dict()))
    else:
        print("theorem\tinstance\tpredicted\tobserved\tstatus\truntime")
        for r in rows:
            print(f"{r.theorem}\t{r.instance}\t{r.predicted_text()}\t{r.observed}\t{r.status}\t{r.runtime:.4f}")
    fails = [r for r in rows if r.status == "fail"]
    for r in fails:
        print(f"FAIL {r.theorem} {r.instance}: predicted {r.predicted_text()}, observed {r.observed}"
              f"{' (' + r.note + ')' if r.note else ''}", file=sys.stderr)
    counts = {s: sum(1 for r in rows if r.status == s) for s in ("pass", "fail", "audit")}
    print(f"{len(rows)} rows: {counts['pass']} pass, {counts['fail']} fail, {counts['audit']} audit",
          file=sys.stderr)
    return EXIT_FAIL if fails else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the exact search")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max candidate subsets per search size")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized corpora")

    parser = argparse.ArgumentParser(prog="amalgadim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a family instance")
    p.add_argument("family")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("-o", "--out")
    p.add_argument("--g6", action="store_true", help="write graph6 instead of JSON")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("amalgamate", parents=[common], help="glue instance files at their terminals")
    p.add_argument("kind", choices=("vertex", "edge"))
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--out")
    p.add_argument("--terminal-vertex", action="append", metavar="I:V",
                   help="override the terminal vertex of input I")
    p.add_argument("--terminal-edge", action="append", metavar="I:A,B",
                   help="override the oriented terminal edge of input I")
    p.add_argument("--flip", type=int, action="append", metavar="I",
                   help="reverse the terminal edge orientation of input I")
    p.add_argument("--g6", action="store_true")
    p.set_defaults(func=cmd_amalgamate)

    p = sub.add_parser("dim", parents=[common], help="metric dimension of an instance")
    p.add_argument("input")
    p.add_argument("--method", choices=("exact", "greedy"), default="exact")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("verify", parents=[common], help="run theorem verification suites")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--n-max", type=int, default=3, help="largest block count in structured corpora")
    p.add_argument("--lengths-max", type=int, default=7, help="largest cycle length (t2)")
    p.add_argument("--orders-max", type=int, default=5, help="largest complete-graph order (t3)")
    p.add_argument("--prism-max", type=int, default=5, help="largest prism base length (t4)")
    p.add_argument("--mixed-count", type=int, default=100, help="random collections for bound checks")
    p.add_argument("--family-max", type=int, default=12)
    p.add_argument("--n", type=int, action="append", help="ladder block count (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except Disconnected as exc:
        print(f"error: Disconnected: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except TooLarge as exc:
        print(f"error: TooLarge: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
