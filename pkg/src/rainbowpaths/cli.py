"""Command-line entry point.

Exit codes: 0 success, 1 a verify sweep found a counterexample, 2 malformed
arguments or input file, 3 parameters outside the supported range.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import closed_forms as cf
from . import ecg, oracle
from .colorings import construct_clique_coloring, construct_star_coloring
from .errors import FormatError, InvalidParameter, PreconditionViolation
from .rainbow import find_rainbow_path_colorcoding, find_rainbow_path_exact

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_RANGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _emit(args, out, value=None, branch=None, witness=None, stats=None,
          counterexamples=None, text: Optional[str] = None) -> None:
    if args.json:
        doc = {"value": value, "branch": branch, "witness": witness,
               "stats": stats, "counterexamples": counterexamples}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _cmd_ar(args, out):
    fv = cf.anti_ramsey(args.n, args.k)
    text = f"{fv.value} {fv.branch.value}" if args.branch else str(fv.value)
    _emit(args, out, value=fv.value, branch=fv.branch.value, text=text)


def _cmd_int(fn):
    def run(args, out):
        value = fn(args)
        _emit(args, out, value=value, text=str(value))
    return run


def _cmd_construct(args, out):
    build = construct_clique_coloring if args.kind == "clique" else construct_star_coloring
    col = build(args.n, args.k)
    ecg.dump(col, args.out)
    _emit(args, out, value=col.c, witness=args.out,
          text=f"wrote {args.out}: n={col.n} m={len(col.color_of)} c={col.c}")


def _cmd_detect(args, out):
    col = ecg.load(args.file)
    if args.color_coding:
        iters, seed = args.color_coding
        cert = find_rainbow_path_colorcoding(col, args.k, iters, seed)
    else:
        cert = find_rainbow_path_exact(col, args.k)
    if cert is None:
        _emit(args, out, text="NONE")
        return
    witness = {"vertices": list(cert.vertices), "colors": list(cert.colors)}
    text = " ".join(map(str, cert.vertices)) + "\ncolors " + " ".join(map(str, cert.colors))
    _emit(args, out, value=len(cert.vertices), witness=witness, text=text)


def _stats_text(stats: oracle.SearchStats) -> str:
    return " ".join(f"{k}={v}" for k, v in stats.as_dict().items())


def _cmd_oracle(args, out):
    if args.what == "ar":
        res = oracle.exact_ar(args.n, args.k, experimental=args.experimental)
        value, stats = res.value, res.stats
        witness = [list(t) for t in res.witness.triples()]
    elif args.what == "ex":
        value, stats = oracle.brute_ex_with_stats(args.n, args.k)
        witness = None
    else:
        value, stats = oracle.brute_ex_con_with_stats(args.n, args.k)
        witness = None
    _emit(args, out, value=value, witness=witness, stats=stats.as_dict(),
          text=f"{value}\n{_stats_text(stats)}")


def _merge(reports: list[oracle.SweepReport]) -> oracle.SweepReport:
    merged = oracle.SweepReport("; ".join(r.range_descriptor for r in reports))
    for r in reports:
        merged.instances_checked += r.instances_checked
        merged.counterexamples += r.counterexamples
        merged.tight_cases += r.tight_cases
        for key, val in r.details.items():
            if key == "min_slack":
                merged.details[key] = min(merged.details.get(key, val), val)
            else:
                merged.details[key] = merged.details.get(key, 0) + val
    return merged


def _cmd_verify(args, out) -> int:
    if args.which == "parts":
        report = oracle.verify_lemma_parts(args.max_k or 9, args.max_n or 30, args.max_t)
    elif args.which == "subadd":
        ks = [args.k] if args.k else range(2, 9)
        report = _merge([oracle.verify_subadditivity(k, args.max_m) for k in ks])
    elif args.which == "bipartite":
        ells = [args.ell] if args.ell else range(2, 6)
        report = _merge([oracle.verify_bipartite_lemma(ell) for ell in ells])
    else:
        report = oracle.formula_consistency_sweep(args.max_k or 60, args.max_n or 300)
    lines = [report.range_descriptor, report.summary()]
    lines += [f"counterexample {json.dumps(c)}" for c in report.counterexamples[:10]]
    stats = {"instances": report.instances_checked, "tight": len(report.tight_cases),
             **report.details}
    _emit(args, out, value=report.instances_checked, stats=stats,
          counterexamples=report.counterexamples, text="\n".join(lines))
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured output")
    p = _Parser(prog="rainbowpaths", description="Anti-Ramsey numbers of paths.",
                parents=[common])
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("ar", parents=[common], help="AR(n, P_k)")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--branch", action="store_true", help="also print the attaining branch")
    s.set_defaults(func=_cmd_ar)

    for name, fn, helptext in (
        ("ex", lambda a: cf.turan_path(a.n, a.k), "ex(n, P_k)"),
        ("excon", lambda a: cf.turan_path_connected(a.n, a.k), "ex_con(n, P_k)"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("n", type=int)
        s.add_argument("k", type=int)
        s.set_defaults(func=_cmd_int(fn))

    s = sub.add_parser("h", parents=[common], help="h(n, k, a)")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("a", type=int)
    s.set_defaults(func=_cmd_int(lambda a: cf.h_value(a.n, a.k, a.a)))

    s = sub.add_parser("construct", parents=[common], help="write an extremal coloring")
    s.add_argument("kind", choices=["clique", "star"])
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_construct)

    s = sub.add_parser("detect", parents=[common], help="find a rainbow P_k")
    s.add_argument("file")
    s.add_argument("k", type=int)
    s.add_argument("--color-coding", nargs=2, type=int, metavar=("ITER", "SEED"))
    s.set_defaults(func=_cmd_detect)

    s = sub.add_parser("oracle", parents=[common], help="brute-force values")
    s.add_argument("what", choices=["ar", "ex", "excon"])
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--experimental", action="store_true",
                   help="allow exact AR at (7,6) and (7,7)")
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("verify", parents=[common], help="lemma and formula sweeps")
    s.add_argument("which", choices=["parts", "subadd", "bipartite", "consistency"])
    s.add_argument("--max-k", type=int)
    s.add_argument("--max-n", type=int)
    s.add_argument("--max-t", type=int, default=4)
    s.add_argument("--max-m", type=int, default=18)
    s.add_argument("--k", type=int)
    s.add_argument("--ell", type=int)
    s.set_defaults(func=_cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(parser.format_usage() + str(exc) + "\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if not hasattr(args, "json"):
        args.json = False
    try:
        code = args.func(args, out)
    except FormatError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (InvalidParameter, PreconditionViolation) as exc:
        err.write(f"out of range: {exc}\n")
        return EXIT_RANGE
    return code or EXIT_OK


def main() -> None:
    sys.exit(run())
