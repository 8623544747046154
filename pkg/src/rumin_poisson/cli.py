"""Command-line entry point: ``rumin-poisson verify|invariants|kernel|model``."""

from __future__ import annotations

import argparse
import json
import sys

from .calculus import invariantSubspace
from .exterior import Stratum
from .kernels import DomainError, KernelSpec, build_kernel
from .lie_model import MAX_RANK, ConfigurationError, buildModel
from .scalars import parse_scalar
from .verifier import SUITES, exportReport, runSuite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_N = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rank(args) -> int:
    n = args.n
    limit = MAX_RANK if getattr(args, "allow_large", False) else DEFAULT_MAX_N
    if not 1 <= n <= limit:
        hint = " (n = 4 needs --allow-large)" if n == MAX_RANK and limit < MAX_RANK else ""
        raise UsageError(f"--n must lie in 1..{limit}{hint}")
    if n == MAX_RANK:
        print(f"warning: n = {n} spans 2^{4 * n + 3} monomials; expect long runtimes", file=sys.stderr)
    return n


def _add_rank(p):
    p.add_argument("--n", type=int, required=True, help="rank n of SU(n+1,1)")
    p.add_argument("--allow-large", action="store_true", help="permit n = 4 (slow)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rumin-poisson", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run the identity checks")
    _add_rank(v)
    v.add_argument("--suite", default="all", help="all or one of: " + ", ".join(SUITES))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--strict", action="store_true", help="treat discrepancies as failures")
    v.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--timings", action="store_true", help="record elapsed_ms (breaks byte-determinism)")

    inv = sub.add_parser("invariants", help="dimensions and bases of invariant forms")
    _add_rank(inv)
    inv.add_argument("--bidegree", metavar="I,J", help="restrict to one bidegree and print a basis")

    k = sub.add_parser("kernel", help="print a Poisson kernel as serialized terms")
    k.add_argument("family", choices=("low", "high", "real"))
    _add_rank(k)
    k.add_argument("--p", type=int)
    k.add_argument("--q", type=int)
    k.add_argument("--alpha", default="1")
    k.add_argument("--beta", default="0")
    k.add_argument("--k", type=int)
    k.add_argument("--out", metavar="PATH")

    m = sub.add_parser("model", help="export the structure constants of g/m")
    _add_rank(m)
    m.add_argument("--export", metavar="PATH", required=True)
    return parser


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def cmd_verify(args) -> int:
    n = _rank(args)
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from: all, {', '.join(SUITES)}")
    report = runSuite(n, args.suite, args.seed)
    text = exportReport(report, args.format, args.report, timings=args.timings)
    if args.report is None:
        sys.stdout.write(text)
    else:
        s = report.summary
        print(" ".join(f"{key}={s[key]}" for key in s), file=sys.stderr)
    return EXIT_FAIL if report.failed(strict=args.strict) else EXIT_OK


def _parse_bidegree(text: str) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--bidegree expects I,J, got {text!r}") from None
    return i, j


def cmd_invariants(args) -> int:
    n = _rank(args)
    model = buildModel(n)
    kdim, pdim = 2 * n + 2, 2 * n + 1
    if args.bidegree:
        i, j = _parse_bidegree(args.bidegree)
        if not (0 <= i <= kdim and 0 <= j <= pdim):
            raise UsageError(f"bidegree ({i},{j}) outside 0..{kdim} x 0..{pdim}")
        basis = invariantSubspace(model, Stratum(bidegree=(i, j)))
        out = {"n": n, "bidegree": [i, j], "dim": len(basis), "basis": [b.serialize() for b in basis]}
    else:
        dims = {}
        for i in range(kdim + 1):
            for j in range(pdim + 1):
                dims[f"{i},{j}"] = len(invariantSubspace(model, Stratum(bidegree=(i, j))))
        out = {"n": n, "dims": dims}
    sys.stdout.write(json.dumps(out, indent=1, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_kernel(args) -> int:
    n = _rank(args)
    if args.family == "real":
        if args.k is None:
            raise UsageError("kernel real needs --k")
        spec = KernelSpec("real", n, k=args.k)
    else:
        if args.p is None or args.q is None:
            raise UsageError(f"kernel {args.family} needs --p and --q")
        try:
            alpha, beta = parse_scalar(args.alpha), parse_scalar(args.beta)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad parameter: {exc}") from None
        spec = KernelSpec(args.family, n, p=args.p, q=args.q, alpha=alpha, beta=beta)
    form = build_kernel(spec)
    out = {
        "family": spec.family,
        "n": n,
        "p": spec.p,
        "q": spec.q,
        "k": spec.k,
        "alpha": str(spec.alpha) if spec.family == "high" else None,
        "beta": str(spec.beta) if spec.family == "high" else None,
        "terms": form.serialize(),
    }
    _write(json.dumps(out, indent=1, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_model(args) -> int:
    n = _rank(args)
    buildModel(n).export(args.export)
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "invariants": cmd_invariants, "kernel": cmd_kernel, "model": cmd_model}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, ConfigurationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
