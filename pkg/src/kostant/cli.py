"""Command-line front end.

Weights are given after ``--lambda``, ``--mu`` or ``--xi`` as one of::

    --highest-root | --zero | --fund a1,...,ar | --eps x1,...,xn | a1,...,ar

A bare list is read as fundamental-weight coefficients.  Exit codes: 0 success
(or verification pass), 1 verification failure, 2 usage or validation error,
3 resource ceiling exceeded or verification budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import __version__
from .altset import (
    DEFAULT_CEILING,
    altset_bruteforce,
    altset_closed_nonzero,
    altset_closed_zero,
    check_dominant,
)
from .errors import KostantError, ResourceLimitError
from .multiplicity import mult, mult_q
from .partition import kostant, kostant_q
from .qpoly import QPoly, render
from .rootsys import (
    RankContext,
    eps_vector,
    format_vector,
    from_fundamental_coeffs,
    is_integral_weight,
    make_context,
    weight,
)
from .serialize import dumps, to_jsonable
from .verify import SUITES, bench_pruning, run_suite

WEIGHT_FLAGS = ("--lambda", "--mu", "--xi")
BACKENDS = {"full": "full_sum", "pruned": "positivity_pruned", "closed": "closed_form",
            "full_sum": "full_sum", "positivity_pruned": "positivity_pruned", "closed_form": "closed_form"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def normalize_argv(argv: List[str]) -> List[str]:
    """Fold ``--lambda --fund 1,2`` style groups into ``--lambda=fund:1,2``."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in WEIGHT_FLAGS:
            if i + 1 >= len(argv):
                raise UsageError(f"{tok}: missing weight specification")
            spec = argv[i + 1]
            if spec in ("--highest-root", "--zero"):
                out.append(f"{tok}={spec[2:]}")
                i += 2
            elif spec in ("--fund", "--eps"):
                if i + 2 >= len(argv):
                    raise UsageError(f"{tok} {spec}: missing coordinate list")
                out.append(f"{tok}={spec[2:]}:{argv[i + 2]}")
                i += 3
            elif spec.startswith("--"):
                raise UsageError(f"{tok}: expected --highest-root, --zero, --fund or --eps, got {spec}")
            else:
                out.append(f"{tok}={spec}")
                i += 2
        elif tok in ("--highest-root", "--zero", "--fund", "--eps"):
            raise UsageError(f"{tok} must follow --lambda, --mu or --xi")
        else:
            out.append(tok)
            i += 1
    return out


def parse_weight(ctx: RankContext, spec: str, flag: str):
    try:
        if spec == "highest-root":
            return ctx.highest_root
        if spec == "zero":
            return ctx.zero()
        style, _, body = spec.rpartition(":")
        style = style or "fund"
        if style not in ("fund", "eps"):
            raise UsageError(f"{flag}: unknown weight style {style!r}")
        items = [x.strip() for x in body.split(",")] if body.strip() else []
        if style == "fund":
            if len(items) != ctx.r:
                raise UsageError(f"{flag}: rank {ctx.r} needs {ctx.r} fundamental coefficients, got {len(items)}")
            return from_fundamental_coeffs(ctx, [int(x) for x in items])
        if len(items) != ctx.n:
            raise UsageError(f"{flag}: rank {ctx.r} needs {ctx.n} eps coordinates, got {len(items)}")
        return weight(eps_vector(items), ctx.n)
    except UsageError:
        raise
    except (ValueError, KostantError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


class _Once(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        if getattr(namespace, self.dest, None) is not None:
            raise UsageError(f"{option_string} given more than once")
        setattr(namespace, self.dest, values)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kostant", description="Kostant partition function and Weyl alternation sets for sl_{r+1}.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, threads=True):
        sp.add_argument("--format", choices=("table", "json"), default="table")
        if threads:
            sp.add_argument("--threads", type=int, default=None,
                            help="worker processes (0 = one per CPU; default $KOSTANT_THREADS or 1)")

    def ranked(sp):
        sp.add_argument("--rank", type=int, required=True)
        sp.add_argument("--ceiling", type=int, default=DEFAULT_CEILING, help="largest n to enumerate S_n for")

    for name in ("mult", "qmult"):
        sp = sub.add_parser(name, help=f"weight multiplicity{' (q-analog)' if name == 'qmult' else ''}")
        ranked(sp)
        sp.add_argument("--lambda", dest="lam", action=_Once, default=None)
        sp.add_argument("--mu", action=_Once, default=None)
        sp.add_argument("--backend", choices=sorted(BACKENDS), default="full")
        common(sp)

    sp = sub.add_parser("altset", help="Weyl alternation set A(lambda, mu)")
    ranked(sp)
    sp.add_argument("--lambda", dest="lam", action=_Once, default=None)
    sp.add_argument("--mu", action=_Once, default=None)
    sp.add_argument("--method", choices=("brute", "closed"), default="brute")
    common(sp)

    sp = sub.add_parser("partition", help="Kostant partition function and its q-analog")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--xi", action=_Once, default=None)
    common(sp, threads=False)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--min-rank", type=int, default=1)
    sp.add_argument("--max-rank", type=int, required=True)
    sp.add_argument("--budget", type=float, default=None, help="wall-clock seconds before stopping early")
    sp.add_argument("--ceiling", type=int, default=None, help="override the suite's maximum rank")
    common(sp, threads=False)

    sp = sub.add_parser("bench", help="full Weyl sum versus positivity pruning")
    sp.add_argument("--min-rank", type=int, default=1)
    sp.add_argument("--max-rank", type=int, required=True)
    common(sp, threads=False)
    return p


def _envelope(command, rank, inputs, result, terms=None, backend=None):
    return {"command": command, "rank": rank, "inputs": inputs, "result": result,
            "terms_evaluated": terms, "backend": backend, "version": __version__}


def _context(args) -> RankContext:
    try:
        return make_context(args.rank)
    except KostantError as exc:
        raise UsageError(f"--rank: {exc}") from None


def _weights(ctx, args, *names):
    out = []
    for attr, flag in names:
        spec = getattr(args, attr)
        if spec is None:
            raise UsageError(f"{flag} is required")
        out.append(parse_weight(ctx, spec, flag))
    return out


def _require_dominant(ctx, vec, flag):
    try:
        return check_dominant(ctx, vec, flag.lstrip("-"))
    except KostantError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _cmd_mult(args, out):
    ctx = _context(args)
    lam, mu = _weights(ctx, args, ("lam", "--lambda"), ("mu", "--mu"))
    _require_dominant(ctx, lam, "--lambda")
    if not is_integral_weight(mu):
        raise UsageError(f"--mu: {format_vector(mu)} is not an integral weight")
    backend = BACKENDS[args.backend]
    if backend == "closed_form" and lam != ctx.highest_root:
        raise UsageError("--backend closed: only available for --lambda --highest-root")
    fn = mult_q if args.command == "qmult" else mult
    try:
        res = fn(ctx, lam, mu, backend, workers=args.threads, ceiling=args.ceiling)
    except ResourceLimitError:
        raise
    except KostantError as exc:
        raise UsageError(f"--backend {args.backend}: {exc}") from None
    if args.format == "json":
        out.write(dumps(_envelope(args.command, ctx.r, {"lambda": lam, "mu": mu}, res.value,
                                  res.terms_evaluated, res.backend)))
    else:
        value = render(res.value) if args.command == "qmult" else str(res.value)
        out.write(f"rank             {ctx.r}\n"
                  f"lambda           {format_vector(lam)}\n"
                  f"mu               {format_vector(mu)}\n"
                  f"backend          {res.backend.value}\n"
                  f"terms_evaluated  {res.terms_evaluated}\n"
                  f"result           {value}\n")
    return 0


def _cmd_altset(args, out):
    ctx = _context(args)
    lam, mu = _weights(ctx, args, ("lam", "--lambda"), ("mu", "--mu"))
    _require_dominant(ctx, lam, "--lambda")
    _require_dominant(ctx, mu, "--mu")
    if args.method == "brute":
        alt = altset_bruteforce(ctx, lam, mu, workers=args.threads, ceiling=args.ceiling)
    elif lam != ctx.highest_root:
        raise UsageError("--method closed: only available for --lambda --highest-root")
    elif not any(mu):
        alt = altset_closed_zero(ctx)
    else:
        try:
            alt = altset_closed_nonzero(ctx, mu)
        except KostantError as exc:
            raise UsageError(f"--mu: {exc}") from None
    elements = [{"sigma": e.sigma, "length": e.length, "sign": e.sign, "translate": e.translate} for e in alt]
    if args.format == "json":
        out.write(dumps(_envelope("altset", ctx.r, {"lambda": lam, "mu": mu, "method": args.method},
                                  {"size": len(alt), "elements": elements})))
    else:
        out.write(f"A({format_vector(lam)}, {format_vector(mu)}) has {len(alt)} element(s)\n")
        for e in alt:
            out.write(f"  {str(e.sigma):<24} length {e.length}  sign {e.sign:+d}  translate {format_vector(e.translate)}\n")
    return 0


def _cmd_partition(args, out):
    ctx = _context(args)
    if args.xi is None:
        raise UsageError("--xi is required")
    xi = parse_weight(ctx, args.xi, "--xi")
    if any(not isinstance(a, int) for a in xi):
        value, qvalue = 0, QPoly()  # outside the root lattice
    else:
        value, qvalue = kostant(ctx, xi), kostant_q(ctx, xi)
    if args.format == "json":
        out.write(dumps(_envelope("partition", ctx.r, {"xi": xi}, {"value": value, "q": qvalue})))
    else:
        out.write(f"xi      {format_vector(xi)}\nvalue   {value}\nq       {render(qvalue)}\n")
    return 0


def _cmd_verify(args, out):
    report = run_suite(args.suite, (args.min_rank, args.max_rank), budget=args.budget, ceiling=args.ceiling)
    if args.format == "json":
        out.write(dumps(_envelope("verify", args.max_rank, {"suite": args.suite, "min_rank": args.min_rank,
                                                            "max_rank": args.max_rank}, report.to_dict())))
    else:
        out.write(f"suite {report.suite}  ranks {args.min_rank}..{args.max_rank}  "
                  f"{report.status.upper()}{'' if report.complete else '  (INCOMPLETE: budget exhausted)'}\n")
        for d in report.details:
            rest = ", ".join(f"{k}={to_jsonable(v)}" for k, v in d.items() if k != "rank")
            out.write(f"  r={d['rank']:<4} {rest}\n")
        for c in report.counterexamples:
            out.write(f"  COUNTEREXAMPLE r={c.rank} witness={to_jsonable(c.witness)} "
                      f"expected={to_jsonable(c.expected)} actual={to_jsonable(c.actual)}\n")
    if report.counterexamples:
        return 1
    return 0 if report.complete else 3


def _cmd_bench(args, out):
    rows = bench_pruning((args.min_rank, args.max_rank))
    if args.format == "json":
        out.write(dumps(_envelope("bench", args.max_rank, {"min_rank": args.min_rank, "max_rank": args.max_rank},
                                  [r.to_dict() for r in rows])))
    else:
        out.write(f"{'r':>3} {'full_terms':>12} {'alt_terms':>10} {'full_us':>12} {'pruned_us':>12}  agree\n")
        for r in rows:
            out.write(f"{r.rank:>3} {r.full_terms:>12} {r.alt_terms:>10} {r.full_time_us:>12} "
                      f"{r.pruned_time_us:>12}  {r.agree}\n")
    return 0 if all(r.agree for r in rows) else 1


COMMANDS = {"mult": _cmd_mult, "qmult": _cmd_mult, "altset": _cmd_altset, "partition": _cmd_partition,
            "verify": _cmd_verify, "bench": _cmd_bench}


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(normalize_argv(argv))
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"kostant: error: {exc}\n")
        return 2
    except ResourceLimitError as exc:
        err.write(f"kostant: resource limit: {exc}\n")
        return 3
    except KostantError as exc:
        err.write(f"kostant: error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
