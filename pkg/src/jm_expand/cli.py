"""Command-line front end.

Every subcommand prints an aligned table by default and a JSON record with
``--json``. JSON records have the keys ``command``, ``parameters`` and
``result``; every number in them is a decimal string.

Exit status: 0 success, 2 usage, 3 resource guard, 4 invariant violation
(including an oracle/recurrence mismatch), 5 degenerate alpha sample.
"""

import argparse
import json
import os
import sys

from . import recurrences
from .alpha import DEFAULT_ALPHAS, conjecture_check, interpolate_in_alpha, parse_alpha
from .dyck import leading_b, subleading_b
from .errors import DegenerateGram, InvalidInput, InvariantViolation, JMExpandError, ResourceGuard
from .hecke import b_expansion_oracle
from .partial import c_from_partial, evaluate_in_partial_jm
from .partitions import enumerate_partitions, format_partition, parse_partition
from .series import cycle_series, hook_series, solved_F_series
from .symfunc import e, h, p
from .symgroup import class_expansion, evaluate_in_jm

FAMILIES = {
    "a": "a-complete",
    "a-power": "a-power",
    "b": "b-complete",
    "b-power": "b-power",
    "c": "c",
    "d": "d",
}
FUNCTIONS = {"h": h, "e": e, "p": p}


class UsageError(JMExpandError):
    pass


def _table(headers, rows):
    rows = [[str(x) for x in row] for row in rows]
    widths = [max(len(str(hd)), *(len(r[i]) for r in rows)) if rows else len(str(hd))
              for i, hd in enumerate(headers)]
    lines = ["  ".join(str(hd).rjust(w) for hd, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in rows)
    return "\n".join(lines)


def _emit(args, result, text):
    if args.json:
        params = {key: value for key, value in vars(args).items()
                  if key not in ("json", "handler", "command", "cache")}
        record = {"command": args.command, "parameters": _stringify(params), "result": result}
        print(json.dumps(record, indent=2))
    else:
        print(text)


def _stringify(obj):
    if isinstance(obj, dict):
        return {str(key): _stringify(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(x) for x in obj]
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    return str(obj)


# -- expand --------------------------------------------------------------------

def cmd_expand(args):
    kind = FAMILIES[args.family]
    if args.all_of_size is not None:
        if args.all_of_size < 0:
            raise UsageError("--all-of-size must be >= 0")
        parts = enumerate_partitions(args.all_of_size)
    else:
        parts = [parse_partition(args.partition)]
    values = [(lam, recurrences.coefficient(kind, args.k, lam)) for lam in parts]
    result = {format_partition(lam): str(v) for lam, v in values}
    if len(values) == 1 and args.all_of_size is None:
        text = str(values[0][1])
    else:
        text = _table(["partition", f"{args.family}^{args.k}"],
                      [(format_partition(lam), v) for lam, v in values])
    _emit(args, result, text)


# -- oracle --------------------------------------------------------------------

def _engine_value(group, function, k, lam):
    """What the recurrences (or Jucys-type formulas) predict, or None."""
    if function == "e":
        if group == "partial":
            return None
        return int(sum(lam) - len(lam) == k)
    if group == "sym":
        return recurrences.a_coeff(k, lam) if function == "h" else recurrences.a_power_coeff(k, lam)
    if group == "hecke":
        return recurrences.b_coeff(k, lam) if function == "h" else recurrences.b_power_coeff(k, lam)
    return recurrences.c_coeff(k, lam) if function == "h" else None


def cmd_oracle(args):
    if args.k < 0 or args.n < 0:
        raise UsageError("--k and --n must be >= 0")
    if args.function == "p" and args.k == 0:
        raise UsageError("power sums need --k >= 1")
    F = FUNCTIONS[args.function](args.k)
    if args.group == "sym":
        coeffs = class_expansion(evaluate_in_jm(F, args.n)).coeffs
    elif args.group == "hecke":
        coeffs = b_expansion_oracle(F, args.n).coeffs
    else:
        x = evaluate_in_partial_jm(F, args.n)
        coeffs = {tuple(lam): c_from_partial(x, lam)
                  for size in range(args.n + 1) for lam in enumerate_partitions(size)}

    rows = []
    mismatches = []
    for lam, value in coeffs.items():
        row = [format_partition(lam), value]
        if args.verify_recurrence:
            expected = _engine_value(args.group, args.function, args.k, lam)
            if expected is None:
                raise UsageError(f"no recurrence for --group {args.group} --function {args.function}")
            row.append(expected)
            if expected != value:
                mismatches.append(format_partition(lam))
        rows.append(row)

    result = {"coefficients": {format_partition(lam): str(v) for lam, v in coeffs.items()}}
    headers = ["partition", "oracle"]
    if args.verify_recurrence:
        result["mismatches"] = mismatches
        result["verified"] = not mismatches
        headers.append("recurrence")
    text = _table(headers, rows)
    if args.verify_recurrence:
        text += "\n" + ("pass" if not mismatches else "FAIL: " + " ".join(mismatches))
    _emit(args, result, text)
    return 0 if not mismatches else 4


# -- series / asymptotics --------------------------------------------------------

def cmd_series(args):
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    if args.which == "cycle":
        s = cycle_series(args.n, args.order)
    elif args.which == "hook":
        s = hook_series(args.n, args.order, args.kind)
    else:
        s = solved_F_series(args.which, args.n, args.order)
    coeffs = s.as_strings()
    _emit(args, coeffs, _table(["k", "[z^k]"], list(enumerate(coeffs))))


def cmd_asymptotics(args):
    mu = parse_partition(args.partition)
    if args.which == "leading":
        k, value = mu.size - mu.length, leading_b(mu)
    else:
        k, value = mu.size - mu.length + 1, subleading_b(mu)
    _emit(args, {"k": str(k), "value": str(value)}, str(value))


# -- conjecture ------------------------------------------------------------------

def _parse_alphas(text):
    if text is None:
        return list(DEFAULT_ALPHAS)
    try:
        return [parse_alpha(x.strip()) for x in text.split(",") if x.strip()]
    except InvalidInput as exc:
        raise UsageError(str(exc)) from None


def cmd_conjecture(args):
    alphas = _parse_alphas(args.alphas)
    if (args.fit_k is None) != (args.fit_partition is None):
        raise UsageError("--fit-k and --fit-partition go together")
    report = conjecture_check(args.kmax, args.nmax, alphas)
    failures = [r for r in report if not r["pass"]]
    result = {
        "instances": str(len(report)),
        "failures": str(len(failures)),
        "report": [dict(r, n=str(r["n"]), k=str(r["k"]), m=str(r["m"]),
                        rho=format_partition(r["rho"])) for r in report],
    }
    lines = [f"{len(report)} instances, {len(failures)} failures"]
    for r in failures:
        lines.append(f"FAIL alpha={r['alpha']} n={r['n']} k={r['k']} "
                     f"rho={format_partition(r['rho'])} m={r['m']} lhs={r['lhs']} rhs={r['rhs']}")
    if args.fit_k is not None:
        poly = interpolate_in_alpha(args.fit_k, parse_partition(args.fit_partition), alphas)
        result["empirical_fit"] = [str(c) for c in poly.coeffs]
        lines.append(f"empirical fit through {len(alphas)} samples: {poly}")
    _emit(args, result, "\n".join(lines))


# -- wiring ----------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="jm-expand", description=__doc__.splitlines()[0])
    parser.add_argument("--cache", metavar="PATH",
                        help=f"coefficient cache file (default: ${recurrences.CACHE_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(handler=handler)
        return sp

    sp = add("expand", cmd_expand, "coefficients from the recurrences")
    sp.add_argument("--family", choices=sorted(FAMILIES), required=True)
    sp.add_argument("--k", type=int, required=True)
    target = sp.add_mutually_exclusive_group(required=True)
    target.add_argument("--partition", help='e.g. "3,1,1"; "-" for the empty partition')
    target.add_argument("--all-of-size", type=int, metavar="N")

    sp = add("oracle", cmd_oracle, "exhaustive expansion in the group algebra")
    sp.add_argument("--group", choices=["sym", "hecke", "partial"], required=True)
    sp.add_argument("--function", choices=sorted(FUNCTIONS), required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--verify-recurrence", action="store_true")

    sp = add("series", cmd_series, "generating series coefficients")
    sp.add_argument("--which", choices=["cycle", "hook", "F211", "F22"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--kind", choices=["a", "c"], default="a", help="family for --which hook")

    sp = add("asymptotics", cmd_asymptotics, "leading and subleading b-coefficients")
    sp.add_argument("--which", choices=["leading", "subleading"], required=True)
    sp.add_argument("--partition", required=True)

    sp = add("conjecture", cmd_conjecture, "check the alpha-deformed relation at sample alphas")
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--alphas", help='comma separated rationals, e.g. "1/2,1,2"')
    sp.add_argument("--fit-k", type=int, help="also fit a polynomial in alpha (empirical)")
    sp.add_argument("--fit-partition")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    cache = args.cache or os.environ.get(recurrences.CACHE_ENV)
    if cache:
        recurrences.load_cache(cache)
    try:
        status = args.handler(args) or 0
    except ResourceGuard as exc:
        print(f"jm-expand: resource guard: {exc}", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"jm-expand: invariant violation: {exc}", file=sys.stderr)
        return 4
    except DegenerateGram as exc:
        print(f"jm-expand: degenerate sample alpha={exc.alpha}: {exc}", file=sys.stderr)
        return 5
    except (UsageError, JMExpandError, ValueError) as exc:
        print(f"jm-expand: {exc}", file=sys.stderr)
        return 2
    if cache:
        recurrences.save_cache(cache)
    return status


if __name__ == "__main__":
    sys.exit(main())
