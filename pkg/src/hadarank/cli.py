"""Command-line front end.

Exit codes: 0 when a verdict was computed, 2 when the answer is Unknown or a
budget ran out, 1 for usage and I/O errors.  JSON output is key-sorted so
identical inputs and flags give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, zoo
from .errors import BudgetExceeded, HadarankError
from .exactalg.parse import format_ideal, read_ideal
from .exactalg.points import ProjPoint
from .groebner import DEFAULT_STEP_BUDGET, Budget, set_cache_dir
from .numdim import DEFAULT_HEIGHT, DEFAULT_TRIALS, read_param

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


class _Unknown(Exception):
    """Carries a report whose verdict is inconclusive."""

    def __init__(self, report):
        self.report = report


def _ideal_json(I) -> dict:
    return {"ring": I.N, "generators": [str(g) for g in I.generators]}


def _point(text: str) -> ProjPoint:
    return ProjPoint.parse(text)


def _write_ideal_if(args, ideal, comment):
    if getattr(args, "out", None):
        Path(args.out).write_text(format_ideal(ideal, [comment]))


# -- verbs ----------------------------------------------------------------------

def cmd_product(args, budget):
    from .hadamard import variety_product

    I, J = read_ideal(args.ideal), read_ideal(args.other)
    out = variety_product(I, J, budget)
    _write_ideal_if(args, out, f"product of {I.key()} and {J.key()}")
    return {"ideal": _ideal_json(out), "budget_spent": budget.total}


def cmd_power(args, budget):
    from .hadamard import variety_power

    I = read_ideal(args.ideal)
    out = variety_power(I, args.m, budget=budget)
    _write_ideal_if(args, out, f"power {args.m} of {I.key()}")
    return {"m": args.m, "ideal": _ideal_json(out), "budget_spent": budget.total}


def cmd_rank_locus(args, budget):
    from .hadamard import rank_locus

    I = read_ideal(args.ideal)
    out = rank_locus(I, args.m, budget=budget)
    _write_ideal_if(args, out, f"rank locus {args.m} of {I.key()}")
    return {"m": args.m, "ideal": _ideal_json(out), "budget_spent": budget.total}


def cmd_member(args, budget):
    from .hadamard import power_membership

    I = read_ideal(args.ideal)
    p = _point(args.point)
    return {"point": p.to_strings(), "m": args.m, "member": power_membership(p, I, args.m, budget=budget),
            "budget_spent": budget.total}


def cmd_concise(args, budget):
    from .conciseness import is_concise

    flags = is_concise(read_ideal(args.ideal), budget)
    return {"concise": flags, "overall": all(flags), "failing_indices": [i for i, f in enumerate(flags) if not f]}


def cmd_strongly_concise(args, budget):
    from .conciseness import is_strongly_concise, strong_conciseness_witness

    I = read_ideal(args.ideal)
    report = is_strongly_concise(I, budget)
    out = report.to_json()
    if args.witnesses:
        out["witnesses"] = {
            str(i): strong_conciseness_witness(I, i, args.seed, budget=budget).to_strings()
            for i, ok in enumerate(report.strongly_concise) if ok
        }
    return out


def cmd_binomial_search(args, budget):
    from .conciseness import binomial_search

    hit = binomial_search(read_ideal(args.ideal), args.max_degree, budget)
    return {"max_degree": args.max_degree, "found": hit is not None, "binomial": hit.to_json() if hit else None}


def cmd_finiteness(args, budget):
    from .conciseness import generic_rank_finiteness

    verdict = generic_rank_finiteness(read_ideal(args.ideal), args.max_degree, args.accept_bound, budget)
    out = verdict.to_json()
    if verdict.verdict == "Unknown":
        raise _Unknown(out)
    return out


def _certificate_verdict(cert_json):
    if cert_json["verdict"] == "Unknown":
        raise _Unknown(cert_json)
    return cert_json


def _verify(args):
    from .rankengine.rank import verify_certificate

    data = json.loads(Path(args.verify).read_text())
    valid = verify_certificate(data)
    out = {"certificate": str(args.verify), "valid": valid}
    if not valid:
        raise _Unknown(out)
    return out


def cmd_rank(args, budget):
    from .rankengine.rank import hadamard_rank

    if args.verify:
        return _verify(args)
    _require(args, "ideal", "point")
    cert = hadamard_rank(_point(args.point), read_ideal(args.ideal), args.max_m, args.seed, budget,
                         check_obstruction=not args.no_obstruction)
    return _certificate_verdict(cert.to_json())


def cmd_border_rank(args, budget):
    from .rankengine.rank import border_rank

    if args.verify:
        return _verify(args)
    _require(args, "ideal", "point")
    cert = border_rank(_point(args.point), read_ideal(args.ideal), args.max_m, budget)
    return _certificate_verdict(cert.to_json())


def cmd_decompose(args, budget):
    from .rankengine.rank import decomposition_exists, decomposition_witness, point_json

    I, p = read_ideal(args.ideal), _point(args.point)
    res = decomposition_exists(p, I, args.m, budget, stop_early=False)
    out = {
        "point": point_json(p),
        "m": args.m,
        "exists": res.exists,
        "patterns": [r.to_json() for r in res.patterns],
        "seed": args.seed,
    }
    if res.exists is None:
        raise _Unknown(out)
    if res.exists:
        out["witnesses"] = [point_json(q) for q in decomposition_witness(p, I, args.m, args.seed, budget)]
    out["budget_spent"] = budget.total
    return out


def cmd_reduce_zeros(args, budget):
    from .rankengine.rank import zero_pattern_reduce

    red = zero_pattern_reduce(_point(args.point), read_ideal(args.ideal), args.seed, budget)
    return dict(red.to_json(), seed=args.seed)


def cmd_dim(args, budget):
    from .numdim import dim_report

    return dim_report(read_param(args.param), args.power, args.seed, args.trials, args.height).to_json()


def cmd_generic_rank(args, budget):
    from .numdim import generic_rank_estimate

    g = generic_rank_estimate(read_param(args.param), args.max_m, args.seed, args.trials, args.height)
    out = {"generic_rank": g, "reached": g is not None, "max_m": args.max_m, "seed": args.seed,
           "trials": args.trials, "height": args.height}
    if g is None:
        raise _Unknown(out)
    return out


def cmd_check_delta(args, budget):
    from .numdim import check_avoids_delta

    return check_avoids_delta(read_param(args.param), args.k).to_json()


def cmd_zoo(args, budget):
    if args.action == "list":
        entries = []
        for name in zoo.names():
            e = zoo.get(name)
            entries.append({"name": name, "N": e.N, "ideal": e.ideal is not None, "param": e.param is not None})
        return {"entries": entries}
    if not args.name:
        raise HadarankError("zoo emit needs an entry name")
    entry = zoo.get(args.name)
    written = entry.emit(args.dir)
    out = {"name": args.name, "written": [str(p) for p in written]}
    if args.verify:
        out["facts"] = [{"fact": d, "holds": ok} for d, ok in entry.verify()]
    return out


def cmd_reproduce(args, budget):
    from .reproduce import CHECKS, run_all

    numbers = [c[0] for c in CHECKS] if args.all or not args.only else [int(x) for x in args.only.split(",")]
    results = run_all(numbers)
    for r in results:
        print(r.line(), file=sys.stderr if args.output == "json" else sys.stdout)
        if args.verbose:
            for line in r.details:
                print("      " + line, file=sys.stderr if args.output == "json" else sys.stdout)
    out = {"passed": sum(r.passed for r in results), "total": len(results), "results": [r.to_json() for r in results]}
    if out["passed"] != out["total"]:
        raise _Unknown(out)
    return out


def _require(args, *names):
    missing = [n for n in names if not getattr(args, n)]
    if missing:
        raise HadarankError(f"missing required option(s): {', '.join('--' + m for m in missing)}")


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--budget", type=int, default=DEFAULT_STEP_BUDGET,
                        help=f"reduction steps per Groebner basis (default {DEFAULT_STEP_BUDGET})")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="Jacobian trials")
    common.add_argument("--height", type=int, default=DEFAULT_HEIGHT, help="height bound of random parameters")
    common.add_argument("--cache-dir", help="directory for cached Groebner bases")
    common.add_argument("--output", choices=("json", "text"), default="json")

    parser = _Parser(prog="hadarank", description="Hadamard products, ranks and border ranks of projective varieties.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.set_defaults(func=fn)
        return p

    p = verb("product", cmd_product, "ideal of the Hadamard product of two varieties")
    p.add_argument("--ideal", required=True)
    p.add_argument("--other", required=True)
    p.add_argument("--out")
    p = verb("power", cmd_power, "ideal of a Hadamard power")
    p.add_argument("--ideal", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out")
    p = verb("rank-locus", cmd_rank_locus, "ideal of the union of the first m powers")
    p.add_argument("--ideal", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out")
    p = verb("member", cmd_member, "membership of a point in a Hadamard power")
    p.add_argument("--ideal", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--m", type=int, required=True)
    p = verb("concise", cmd_concise, "per-coordinate conciseness")
    p.add_argument("--ideal", required=True)
    p = verb("strongly-concise", cmd_strongly_concise, "per-coordinate strong conciseness")
    p.add_argument("--ideal", required=True)
    p.add_argument("--witnesses", action="store_true", help="also return one witness point per passing coordinate")
    p = verb("binomial-search", cmd_binomial_search, "search for a monomial or binomial in the ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p = verb("finiteness", cmd_finiteness, "finiteness of the generic Hadamard rank")
    p.add_argument("--ideal", required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--accept-bound", action="store_true", help="treat a negative binomial search as conclusive")
    for name, fn in (("rank", cmd_rank), ("border-rank", cmd_border_rank)):
        p = verb(name, fn, f"{name.replace('-', ' ')} certificate of a point")
        p.add_argument("--ideal")
        p.add_argument("--point")
        p.add_argument("--max-m", type=int, default=4)
        p.add_argument("--verify", metavar="CERT", help="replay a certificate file instead")
        if name == "rank":
            p.add_argument("--no-obstruction", action="store_true", help="skip the infinite-rank obstruction test")
    p = verb("decompose", cmd_decompose, "decide and extract an m-factor decomposition")
    p.add_argument("--ideal", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--m", type=int, required=True)
    p = verb("reduce-zeros", cmd_reduce_zeros, "trade zero coordinates for strong-conciseness witnesses")
    p.add_argument("--ideal", required=True)
    p.add_argument("--point", required=True)
    p = verb("dim", cmd_dim, "dimension of a Hadamard power from a parametrization")
    p.add_argument("--param", required=True)
    p.add_argument("--power", type=int, default=1)
    p = verb("generic-rank", cmd_generic_rank, "least power filling the ambient space")
    p.add_argument("--param", required=True)
    p.add_argument("--max-m", type=int, default=6)
    p = verb("check-delta", cmd_check_delta, "whether a curve avoids the points with few nonzero coordinates")
    p.add_argument("--param", required=True)
    p.add_argument("--k", type=int)
    p = verb("zoo", cmd_zoo, "list or emit named varieties")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.add_argument("--dir", default=".")
    p.add_argument("--verify", action="store_true", help="re-check the entry's expected facts")
    p = verb("reproduce", cmd_reproduce, "run the reproduction checks")
    p.add_argument("--all", action="store_true")
    p.add_argument("--only", help="comma-separated check numbers")
    p.add_argument("--verbose", "-v", action="store_true")
    return parser


def _emit(report, output: str) -> None:
    if output == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for key in sorted(report):
            print(f"{key}: {report[key]}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        set_cache_dir(args.cache_dir)
    budget = Budget(args.budget)
    try:
        report = args.func(args, budget)
    except _Unknown as exc:
        _emit(exc.report, args.output)
        return EXIT_UNKNOWN
    except BudgetExceeded as exc:
        _emit({"verdict": "Unknown", "reason": "Budget", "message": str(exc), "budget_spent": exc.spent}, args.output)
        return EXIT_UNKNOWN
    except (HadarankError, OSError, ValueError, KeyError) as exc:
        print(f"hadarank: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _emit(report, args.output)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
