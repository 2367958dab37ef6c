"""Command-line interface: ``parityfactors {gen,factor,check,theorem,experiment}``.

Exit codes: 0 answered (including "no factor"), 1 usage error, 2 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .criteria import (
    MAX_H_FUNCTIONS,
    has_all_parity_factors_exhaustive,
    niessen_check,
    tutte_check,
)
from .errors import SizeGuardError
from .factor import DegreeSpec, factor_json, find_f_factor, find_parity_factor
from .graph import (
    Graph,
    GraphParseError,
    clique_minus_construction,
    complete_graph,
    cycle_graph,
    format_graph,
    parse_graph,
    path_graph,
    petersen_graph,
    random_graph,
    star_graph,
)
from .theorem import (
    check_nishimura_hypotheses,
    check_theorem14_hypotheses,
    extremal_remark,
    frontier_search,
    sample_h_and_verify,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_fraction(text: str) -> Fraction:
    """Exact probability from ``"1/2"`` or ``"0.5"``; never goes through float."""
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1]: {text!r}")
    return p


def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


GENERATORS = ("complete", "remark", "clique-minus", "random", "cycle", "path", "star", "petersen")


def generate(kind: str, params: list) -> tuple[Graph, dict]:
    """Build a named construction; returns the graph and extra facts (remark only)."""
    try:
        if kind == "complete":
            (n,) = params
            return complete_graph(int(n)), {}
        if kind == "clique-minus":
            n, t = params
            return clique_minus_construction(int(n), int(t))[0], {}
        if kind == "remark":
            n, a, b = params
            inst = extremal_remark(int(n), int(a), int(b))
            return inst.graph, {"s": inst.s, "t": inst.t, "eta": inst.eta}
        if kind == "random":
            n, p, seed = params
            return random_graph(int(n), Fraction(p), int(seed)), {}
        if kind == "cycle":
            (n,) = params
            return cycle_graph(int(n)), {}
        if kind == "path":
            (n,) = params
            return path_graph(int(n)), {}
        if kind == "star":
            (leaves,) = params
            return star_graph(int(leaves)), {}
        if kind == "petersen":
            if params:
                raise ValueError("petersen takes no parameters")
            return petersen_graph(), {}
    except ValueError as exc:
        raise UsageError(f"bad parameters for {kind}: {exc}") from None
    raise UsageError(f"unknown construction {kind!r}; choose from {', '.join(GENERATORS)}")


def parse_descriptor(text: str) -> tuple[str, list[str]]:
    """``"clique-minus:48,12"`` -> ``("clique-minus", ["48", "12"])``."""
    kind, _, rest = text.partition(":")
    return kind, [x for x in rest.split(",") if x]


def _read_graph(args) -> Graph:
    source = args.input
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc}") from None
    try:
        return parse_graph(text, args.format)
    except GraphParseError as exc:
        raise UsageError(f"{source}: {exc}") from None


def _spec_from_flags(args, n: int) -> DegreeSpec:
    given = [args.f_const is not None, args.h is not None, args.a is not None or args.b is not None]
    if sum(given) != 1:
        raise UsageError("give exactly one of --f-const, --h, or --a/--b")
    if args.f_const is not None:
        if args.f_const < 0:
            raise UsageError("--f-const must be non-negative")
        return DegreeSpec.constant(n, args.f_const)
    if args.h is not None:
        if len(args.h) != n:
            raise UsageError(f"--h has {len(args.h)} values but the graph has {n} vertices")
        if min(args.h, default=0) < 0:
            raise UsageError("--h values must be non-negative")
        return DegreeSpec.exact(args.h)
    a, b = _ab(args)
    return DegreeSpec.constant(n, a, b)


def _ab(args) -> tuple[int, int]:
    if args.a is None or args.b is None:
        raise UsageError("--a and --b must be given together")
    a, b = args.a, args.b
    if a < 1 or a > b or (b - a) % 2:
        raise UsageError(f"need 1 <= a <= b with a = b (mod 2), got a={a}, b={b}")
    return a, b


def _emit(obj: dict, summary: str | None, args) -> None:
    if getattr(args, "summary", False) and summary is not None:
        print(summary)
    else:
        print(json.dumps(obj))


# --- subcommands ------------------------------------------------------------


def cmd_gen(args) -> None:
    g, extra = generate(args.kind, args.params)
    sys.stdout.write(format_graph(g, args.format))
    if extra:
        print(json.dumps(extra), file=sys.stderr)


def cmd_factor(args) -> None:
    g = _read_graph(args)
    spec = _spec_from_flags(args, g.n)
    factor = find_f_factor(g, spec) if spec.is_exact else find_parity_factor(g, spec)
    out = factor_json(factor)
    summary = (
        f"factor with {len(out['edges'])} edges" if out["exists"] else "no factor exists"
    )
    _emit(out, summary, args)


def cmd_check(args) -> None:
    g = _read_graph(args)
    max_n = args.max_n
    if args.mode == "tutte":
        spec = _spec_from_flags(args, g.n)
        if not spec.is_exact:
            raise UsageError("tutte mode needs an exact target (--f-const or --h)")
        rep = tutte_check(g, spec, max_n=max_n, force=args.force)
        out = rep.to_json()
    elif args.mode == "niessen":
        a, b = _ab(args)
        rep = niessen_check(g, DegreeSpec.constant(g.n, a, b), max_n=max_n, force=args.force)
        out = rep.to_json()
    else:
        a, b = _ab(args)
        if b * g.n % 2:
            raise UsageError(f"b*n must be even (b={b}, n={g.n})")
        limit = 1 << 62 if args.force else MAX_H_FUNCTIONS
        ok, h = has_all_parity_factors_exhaustive(g, a, b, max_count=limit)
        out = {"satisfied": ok, "failing_h": None if h is None else list(h), "a": a, "b": b}
    _emit(out, f"satisfied: {out['satisfied']}", args)


def cmd_theorem(args) -> None:
    g = _read_graph(args)
    if args.k is not None:
        if args.a is not None or args.b is not None:
            raise UsageError("give either --k or --a/--b, not both")
        rep = check_nishimura_hypotheses(g, args.k)
    else:
        a, b = _ab(args)
        rep = check_theorem14_hypotheses(g, a, b)
    summary = "all hypotheses hold" if rep.all_hold else "failed: " + ", ".join(rep.failed)
    _emit(rep.to_json(), summary, args)


def cmd_experiment(args) -> None:
    a, b = _ab(args)
    if args.what == "sample":
        if args.gen is not None:
            kind, params = parse_descriptor(args.gen)
            g, _ = generate(kind, params)
            instance = {"construction": kind, "params": params}
        else:
            g = _read_graph(args)
            instance = {"construction": "input", "source": args.input, "n": g.n, "m": g.m}
        if b * g.n % 2:
            raise UsageError(f"b*n must be even (b={b}, n={g.n})")
        rep = sample_h_and_verify(
            g, a, b, args.trials, args.seed,
            stratified=not args.no_stratified, instance=instance, workers=args.threads,
        )
    else:
        if args.n_min < 1 or args.n_max < args.n_min:
            raise UsageError("need 1 <= --n-min <= --n-max")
        rep = frontier_search(
            a, b, range(args.n_min, args.n_max + 1), family=args.family,
            trials=args.trials, seed=args.seed, shift=args.shift,
        )
    _emit(rep.to_json(), f"{len(rep.failures)} failures", args)


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-", help="graph file (default: standard input)")
    p.add_argument("--format", choices=("edges", "g6"), default="edges")


def _add_spec(p: argparse.ArgumentParser) -> None:
    p.add_argument("--f-const", type=int, help="exact constant target f(v) = k")
    p.add_argument("--h", type=int_list, help="explicit exact targets 'h0,h1,...'")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)


def _add_output(p: argparse.ArgumentParser) -> None:
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="JSON output (default)")
    out.add_argument("--summary", action="store_true", help="one-line human-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parityfactors", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("kind", choices=GENERATORS)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--p", type=parse_fraction)
    p.add_argument("--seed", type=int)
    p.add_argument("--leaves", type=int)
    p.add_argument("--format", choices=("edges", "g6"), default="edges")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("factor", help="find an f-factor or parity factor")
    _add_input(p)
    _add_spec(p)
    _add_output(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("check", help="exhaustive criterion check")
    _add_input(p)
    _add_spec(p)
    p.add_argument("--mode", choices=("tutte", "niessen", "all-parity-exhaustive"), required=True)
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--force", action="store_true", help="ignore size guards")
    _add_output(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("theorem", help="check degree-condition hypotheses")
    _add_input(p)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("experiment", help="seeded sampling and frontier experiments")
    p.add_argument("what", choices=("sample", "frontier"))
    _add_input(p)
    p.add_argument("--gen", help="construction descriptor, e.g. clique-minus:48,12")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--no-stratified", action="store_true")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--family", choices=("remark", "remark-shift", "random"), default="remark")
    p.add_argument("--shift", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_experiment)
    return parser


_GEN_PARAMS = {
    "complete": ("n",),
    "remark": ("n", "a", "b"),
    "clique-minus": ("n", "t"),
    "random": ("n", "p", "seed"),
    "cycle": ("n",),
    "path": ("n",),
    "star": ("leaves",),
    "petersen": (),
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            names = _GEN_PARAMS[args.kind]
            missing = [k for k in names if getattr(args, k) is None]
            if missing:
                raise UsageError(f"{args.kind} needs --{', --'.join(missing)}")
            args.params = [getattr(args, k) for k in names]
        if getattr(args, "trials", 0) is not None and getattr(args, "trials", 0) < 0:
            raise UsageError("--trials must be non-negative")
        args.func(args)
    except UsageError as exc:
        print(f"parityfactors: error: {exc}", file=sys.stderr)
        return 1
    except SizeGuardError as exc:
        print(f"parityfactors: guard: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"parityfactors: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
