"""Command-line front end: ``walg <command> [flags]``.

Exit codes: 0 success, 1 a mathematical check failed, 2 invalid input.
Every number in a report is an exact string; JSON reports follow
``report.schema.json`` shipped with the package.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from walg import __version__
from walg.coeffs import RatFunc, exact_str
from walg.errors import WalgError
from walg.rootsys import build_algebra, langlands_dual

SCHEMA_ID = "walg-report/1"
SERIES_COMMANDS = {"char", "char-dual-check", "kernel-dims", "virasoro-singvec"}


class InputError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}") from None


def _gamma(text: str):
    if text == "symbolic":
        return RatFunc.gen("γ")
    return _rational(text)


def _single(values: tuple[int, ...], flag: str) -> int:
    if len(values) != 1:
        raise InputError(f"{flag} takes a single integer in rank 1")
    return values[0]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="walg", description="Characters, screening kernels and Virasoro probes.")
    p.add_argument("--version", action="version", version=f"walg {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, algebra=True, lam=True, mu=True, order=10):
        if algebra:
            sp.add_argument("--algebra", required=True, help="type and rank, e.g. A2, B3, G2")
        if lam:
            sp.add_argument("--lambda", dest="lam", type=_int_list, default=None, help="comma-separated weight coordinates")
        if mu:
            sp.add_argument("--mu", type=_int_list, default=None, help="comma-separated coweight coordinates")
        if order is not None:
            sp.add_argument("--order", type=int, default=order, help="truncation order / maximal degree")
        sp.add_argument("--format", choices=("json", "csv", "text"), default="json")

    common(sub.add_parser("char", help="character of T_{lambda,mu} as a q-series"))
    common(sub.add_parser("char-dual-check", help="compare with the Langlands-dual character"))
    common(sub.add_parser("kernel-dims", help="joint screening kernel dimensions per degree"))
    common(sub.add_parser("serre-check", help="Serre relations of the screening derivations"), lam=False)
    sp = sub.add_parser("commrel-check", help="closed-form iterated commutator, up to a scalar")
    common(sp, lam=False)
    sp.add_argument("--i", type=int, required=True, help="1-based node index")
    sp.add_argument("--j", type=int, required=True, help="1-based node index")
    sp.add_argument("--m", type=int, required=True, help="power of ad Q_i")
    sp = sub.add_parser("virasoro-delta", help="lowest L0 weight Delta^gamma_{lambda,mu}")
    common(sp, algebra=False, order=None)
    sp.add_argument("--gamma", type=_gamma, default=RatFunc.gen("γ"), help='rational or "symbolic"')
    sp = sub.add_parser("virasoro-singvec", help="kernels of [L1; L2] on a rank-1 Fock module")
    common(sp, algebra=False, order=6)
    sp.add_argument("--gamma", type=_gamma, default=RatFunc.gen("γ"), help='rational or "symbolic"')
    sp.add_argument("--nu", type=_rational, default=None, help="b_0 eigenvalue (nu|alpha); else lambda - gamma*mu")
    sp = sub.add_parser("shapovalov", help="Verma Gram matrix and corank at one level")
    common(sp, algebra=False, order=None)
    sp.add_argument("--gamma", type=_gamma, default=RatFunc.gen("γ"), help='rational or "symbolic"')
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--delta", type=_rational, default=None, help="lowest weight; else Delta^gamma_{lambda,mu}")
    sp = sub.add_parser("verify-all", help="run the acceptance suite")
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
    return p


def _echo(args: argparse.Namespace) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in ("command", "format") or v is None:
            continue
        key = "lambda" if k == "lam" else k
        if isinstance(v, tuple):
            out[key] = ",".join(str(x) for x in v)
        elif isinstance(v, RatFunc):
            out[key] = "symbolic"
        else:
            out[key] = exact_str(v) if isinstance(v, (int, Fraction)) else str(v)
    return out


def _need(args, name: str, flag: str):
    v = getattr(args, name, None)
    if v is None:
        raise InputError(f"{flag} is required for {args.command}")
    return v


def _algebra(args):
    return build_algebra(args.algebra)


def _series(s) -> list[str]:
    return [exact_str(c) for c in s]


# command handlers return (passed, result, csv_rows)


def cmd_char(args):
    from walg.characters import char_T, delta_tilde, prefactor_shift

    g = _algebra(args)
    lam, mu = _need(args, "lam", "--lambda"), _need(args, "mu", "--mu")
    table = char_T(g, lam, mu, args.order)
    result = {
        "coefficients": _series(table.series),
        "lowest_weight": exact_str(delta_tilde(g, lam, mu).as_ratfunc()),
        "shift": exact_str(prefactor_shift(g, lam, mu).const),
    }
    return True, result, list(enumerate(table.series))


def cmd_char_dual_check(args):
    from walg.characters import char_T

    g = _algebra(args)
    lam, mu = _need(args, "lam", "--lambda"), _need(args, "mu", "--mu")
    lhs = char_T(g, lam, mu, args.order)
    dual = langlands_dual(g)
    rhs = char_T(dual, mu, lam, args.order)
    match = lhs.series == rhs.series
    result = {
        "coefficients": _series(lhs.series),
        "dual_algebra": dual.type_label,
        "dual_coefficients": _series(rhs.series),
        "match": match,
    }
    return match, result, list(enumerate(lhs.series))


def cmd_kernel_dims(args):
    from walg.characters import char_T
    from walg.screening import kernel_dims

    g = _algebra(args)
    lam, mu = _need(args, "lam", "--lambda"), _need(args, "mu", "--mu")
    dims = kernel_dims(g, lam, mu, args.order)
    chars = list(char_T(g, lam, mu, args.order).series)
    match = dims == chars
    result = {"kernel_dims": _series(dims), "character": _series(chars), "match": match}
    return match, result, list(enumerate(dims))


def cmd_serre_check(args):
    from walg.screening import _dominant, serre_pairs, serre_relation_vanishes

    g = _algebra(args)
    mu = _dominant(g, _need(args, "mu", "--mu"), "mu_check")
    relations = []
    for i, j in serre_pairs(g):
        ok = serre_relation_vanishes(g, i, j, mu, args.order)
        relations.append({"i": i + 1, "j": j + 1, "exponent": 1 - g.cartan[i][j], "vanishes": ok})
    passed = all(r["vanishes"] for r in relations)
    message = "all relations vanish" if passed else "some relation does not vanish"
    return passed, {"relations": relations, "message": message}, None


def cmd_commrel_check(args):
    from walg.screening import commrel_proportionality_check

    g = _algebra(args)
    mu = _need(args, "mu", "--mu")
    i, j = args.i - 1, args.j - 1
    if not (0 <= i < g.rank and 0 <= j < g.rank) or i == j:
        raise InputError("--i and --j must be distinct node indices in 1..rank")
    ok = commrel_proportionality_check(g, i, j, mu, args.m, args.order)
    return ok, {"proportional": ok, "a_ij": g.cartan[i][j]}, None


def _lam_mu(args) -> tuple[int, int]:
    lam = _single(args.lam, "--lambda") if args.lam is not None else 0
    mu = _single(args.mu, "--mu") if args.mu is not None else 0
    return lam, mu


def cmd_virasoro_delta(args):
    from walg.virasoro import VirasoroParams, delta

    params = VirasoroParams(args.gamma)
    lam, mu = _lam_mu(args)
    value = delta(params, lam, mu).value
    dual = delta(params.dual(), mu, lam).value
    c_match = params.central_charge == params.dual().central_charge
    result = {
        "delta": exact_str(value),
        "central_charge": exact_str(params.central_charge),
        "dual_delta": exact_str(dual),
        "dual_match": dual == value and c_match,
    }
    return dual == value and c_match, result, None


def cmd_virasoro_singvec(args):
    from walg.virasoro import VirasoroParams, singular_vectors_report

    params = VirasoroParams(args.gamma)
    if args.nu is not None:
        nu = args.nu
    else:
        lam, mu = _lam_mu(args)
        nu = lam - params.gamma * mu
    report = singular_vectors_report(params, nu, args.order)
    rows = [(d["degree"], len(d["kernel"])) for d in report["degrees"]]
    return True, report, rows


def cmd_shapovalov(args):
    from walg.virasoro import VirasoroParams, delta_value, partitions, shapovalov

    params = VirasoroParams(args.gamma)
    if args.delta is not None:
        h = args.delta
    else:
        lam, mu = _lam_mu(args)
        h = delta_value(params.gamma, lam, mu)
    gram, corank = shapovalov(params, h, args.level)
    result = {
        "delta": exact_str(h),
        "central_charge": exact_str(params.central_charge),
        "basis": ["".join(f"L_{{-{k}}}" for k in p) for p in partitions(args.level)],
        "gram": [[exact_str(x) for x in row] for row in gram.to_dense()],
        "corank": corank,
    }
    return True, result, None


def cmd_verify_all(args):
    from walg.acceptance import run_all

    results = run_all()
    passed = all(r.passed for r in results)
    return passed, {"criteria": [r.as_dict() for r in results], "all_passed": passed}, None


HANDLERS = {
    "char": cmd_char,
    "char-dual-check": cmd_char_dual_check,
    "kernel-dims": cmd_kernel_dims,
    "serre-check": cmd_serre_check,
    "commrel-check": cmd_commrel_check,
    "virasoro-delta": cmd_virasoro_delta,
    "virasoro-singvec": cmd_virasoro_singvec,
    "shapovalov": cmd_shapovalov,
    "verify-all": cmd_verify_all,
}


def exactify(obj):
    """Replace every number by its exact string; booleans and strings pass through."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction, RatFunc)):
        return exact_str(obj)
    if isinstance(obj, dict):
        return {str(k): exactify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [exactify(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    items = obj.items() if isinstance(obj, dict) else (("-", v) for v in obj)
    for k, v in items:
        head = f"{pad}{k}" if isinstance(obj, dict) else f"{pad}-"
        sep = ":" if isinstance(obj, dict) else ""
        if isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v)):
            lines.append(head + sep)
            lines.extend(_text(v, indent + 1))
        elif isinstance(v, list):
            lines.append(f"{head}{sep} {', '.join(v)}" if v else f"{head}{sep} (none)")
        else:
            lines.append(f"{head}{sep} {'true' if v is True else 'false' if v is False else v}")
    return lines


def render(args: argparse.Namespace) -> tuple[int, str]:
    passed, result, rows = HANDLERS[args.command](args)
    report = exactify(
        {
            "schema": SCHEMA_ID,
            "version": __version__,
            "command": args.command,
            "input": _echo(args),
            "status": "pass" if passed else "fail",
            "result": result,
        }
    )
    code = 0 if passed else 1
    if args.format == "json":
        return code, json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        for d, c in rows:
            w.writerow([str(d), exact_str(c)])
        return code, buf.getvalue()
    return code, "\n".join(_text(report)) + "\n"


def _parse(argv) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    if args.format == "csv" and args.command not in SERIES_COMMANDS:
        raise InputError(f"csv output is only available for {', '.join(sorted(SERIES_COMMANDS))}")
    return args


def render_job(argv) -> str:
    """Run a job in-process and return its serialized report."""
    return render(_parse(argv))[1]


def main(argv=None) -> int:
    try:
        args = _parse(argv)
        code, text = render(args)
    except SystemExit as e:  # argparse usage errors
        return int(e.code) if isinstance(e.code, int) else 2
    except (InputError, WalgError, ValueError) as e:
        print(f"walg: error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
