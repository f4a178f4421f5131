"""Command-line interface: ``heunlocal {coeffs,eval,compare,bound,green}``.

Output is a JSON object ``{"params", "method", "data", "meta"}`` or, with
``--format csv``, the ``data`` rows with a header. Numbers are written as
strings: ``p/q`` in exact mode, 17 significant digits in float mode.

Exit codes: 0 ok, 1 a check reported failure (compare, bound), 2 invalid
input, 3 method or estimate not applicable, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

import numpy as np

from . import jacobi
from .bounds import ESTIMATES, check_envelope, default_estimate
from .errors import (ConvergenceError, DomainError, HeunError, InvalidParameterError, ModeError,
                     NotApplicableError, UnsupportedParameterError, ZeroDenominatorError)
from .kernels import BACKEND
from .params import HeunValentParams, WConvention, to_canonical
from .recurrence import Method, recurrence_residuals
from .scalar import Mode
from .series import DEFAULT_TOL, applicable_methods, coefficients, evaluate

EXIT_OK, EXIT_CHECK_FAILED, EXIT_VALIDATION, EXIT_NOT_APPLICABLE, EXIT_NUMERICAL = 0, 1, 2, 3, 4

_EXIT_FOR = [
    (NotApplicableError, EXIT_NOT_APPLICABLE),
    (ZeroDenominatorError, EXIT_NOT_APPLICABLE),
    (ConvergenceError, EXIT_NUMERICAL),
    (InvalidParameterError, EXIT_VALIDATION),
    (UnsupportedParameterError, EXIT_VALIDATION),
    (ModeError, EXIT_VALIDATION),
    (DomainError, EXIT_VALIDATION),
]

_METHOD_ALIASES = {
    "recurrence": Method.RECURRENCE,
    "closed-form": Method.CLOSED_FORM,
    "closed-form-delta0": Method.CLOSED_FORM_DELTA0,
    "delta0": Method.CLOSED_FORM_DELTA0,
    "closed-form-beta-plus-one": Method.CLOSED_FORM_BETA_PLUS_ONE,
    "beta-plus-one": Method.CLOSED_FORM_BETA_PLUS_ONE,
    "green-path": Method.GREEN_PATH,
    "green": Method.GREEN_PATH,
}


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return format(float(x), ".17g")


def _fmt_pair(x):
    if isinstance(x, Fraction):
        return str(x), "0"
    z = complex(x)
    return format(z.real, ".17g"), format(z.imag, ".17g")


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as a single ``error: usage: ...`` line."""

    def error(self, message):
        self.exit(EXIT_VALIDATION, f"error: usage: {self.prog}: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    g = common.add_argument_group("parameters")
    g.add_argument("--params", metavar="FILE", help="JSON parameter set; flags override its keys")
    for name in ("k", "alpha", "beta", "gamma", "delta", "w"):
        g.add_argument(f"--{name}")
    g.add_argument("--w-convention", "--delta-convention", dest="w_convention",
                   choices=[c.value for c in WConvention])
    g.add_argument("--mode", choices=[m.value for m in Mode], default="exact")
    o = common.add_argument_group("output")
    o.add_argument("--format", choices=("json", "csv"), default="json")
    o.add_argument("--out", help="output path (default: stdout)")
    o.add_argument("--timestamp", action="store_true", help="add a timestamp to meta")

    parser = _Parser(prog="heunlocal", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("coeffs", parents=[common], help="dump c_0..c_N")
    p.add_argument("-N", type=int, default=10)
    p.add_argument("--method", default="recurrence", choices=sorted(_METHOD_ALIASES))

    p = sub.add_parser("eval", parents=[common], help="evaluate F(z) on a grid")
    p.add_argument("--z", action="append", required=True, help="point in the unit disk (repeatable)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--method", default="recurrence", choices=sorted(_METHOD_ALIASES))
    p.add_argument("--cap", type=int, default=4096)

    p = sub.add_parser("compare", parents=[common], help="compare coefficient methods")
    p.add_argument("-N", type=int, default=12)
    p.add_argument("--method", action="append", choices=sorted(_METHOD_ALIASES),
                   help="method to include (repeatable; default: every applicable one)")
    p.add_argument("--threshold", type=float,
                   help="allowed max relative discrepancy (default 0 exact, 1e-8 float)")

    p = sub.add_parser("bound", parents=[common], help="check |c_n| against an explicit envelope")
    p.add_argument("-N", type=int, default=40)
    p.add_argument("--estimate", choices=ESTIMATES)
    p.add_argument("--method", default="recurrence", choices=sorted(_METHOD_ALIASES))

    p = sub.add_parser("green", parents=[common], help="Green function of the Jacobi matrix")
    p.add_argument("-N", type=int, default=10)
    p.add_argument("--margin", type=int, default=jacobi.DEFAULT_MARGIN)
    p.add_argument("--perturbed", action="store_true", help="also emit the delta-shifted Green function")
    return parser


def params_from_args(args) -> HeunValentParams:
    raw = {}
    if args.params:
        with open(args.params) as fh:
            raw = json.load(fh)
    for name in ("k", "alpha", "beta", "gamma", "delta", "w", "w_convention"):
        val = getattr(args, name)
        if val is not None:
            raw[name] = val
    missing = [n for n in ("k", "alpha", "beta", "gamma", "w") if n not in raw]
    if missing:
        raise InvalidParameterError(f"missing parameters: {', '.join(missing)}")
    return HeunValentParams.from_json(raw, Mode(args.mode))


def _method(name: str) -> Method:
    return _METHOD_ALIASES[name]


def cmd_coeffs(args, v):
    method = _method(args.method)
    table = coefficients(v, args.N, method)
    rows = []
    for n, c in enumerate(table.values):
        if table.mode is Mode.EXACT:
            rows.append({"n": n, "c": _fmt(c)})
        else:
            re, im = _fmt_pair(c)
            rows.append({"n": n, "c": re, "c_imag": im})
    res = recurrence_residuals(to_canonical(table.params), table.values)
    if not res:
        worst = "0"
    elif table.mode is Mode.EXACT:
        worst = _fmt(max(abs(r) for r in res))
    else:
        worst = _fmt(max(abs(r) for r in res) / max(abs(c) for c in table.values))
    return method.value, rows, {"residuals": {"recurrence_max": worst}, "mode": table.mode.value}


def cmd_eval(args, v):
    method = _method(args.method)
    rows = []
    for text in args.z:
        try:
            z = complex(text.replace(" ", ""))
        except ValueError as exc:
            raise InvalidParameterError(f"cannot parse z={text!r}") from exc
        res = evaluate(v, z, tol=args.tol, method=method, cap=args.cap)
        zr, zi = _fmt_pair(z)
        vr, vi = _fmt_pair(res.value)
        rows.append({"z": zr, "z_imag": zi, "value": vr, "value_imag": vi,
                     "terms_used": res.terms_used, "tail_estimate": _fmt(res.tail_estimate),
                     "certified": res.certified})
    return method.value, rows, {"residuals": None, "mode": Mode.FLOAT.value, "tol": _fmt(args.tol)}


def cmd_compare(args, v):
    if args.method:
        methods = list(dict.fromkeys(_method(m) for m in args.method))
    else:
        methods = applicable_methods(v)
        if v.mode is Mode.EXACT:
            # the green path is float-only; keep the default comparison exact
            methods = [m for m in methods if m is not Method.GREEN_PATH]
    if len(methods) < 2:
        raise NotApplicableError("compare needs at least two distinct applicable methods")
    tables = [coefficients(v, args.N, m) for m in methods]
    exact = all(t.mode is Mode.EXACT for t in tables)
    threshold = args.threshold if args.threshold is not None else (0.0 if exact else 1e-8)
    ref = tables[0].values
    max_abs = Fraction(0) if exact else 0.0
    max_rel = Fraction(0) if exact else 0.0
    rows = []
    for n in range(args.N + 1):
        row = {"n": n}
        for m, t in zip(methods, tables):
            row[m.value] = _fmt(t.values[n]) if exact else _fmt_pair(complex(t.values[n]))[0]
        for t in tables[1:]:
            a, b = (t.values[n], ref[n]) if exact else (complex(t.values[n]), complex(ref[n]))
            diff = abs(a - b)
            max_abs = max(max_abs, diff)
            if b != 0:
                max_rel = max(max_rel, diff / abs(b))
            elif diff != 0:
                max_rel = float("inf")
        rows.append(row)
    passed = max_rel <= threshold
    meta = {"mode": "exact" if exact else "float", "methods": [m.value for m in methods],
            "max_abs_discrepancy": _fmt(max_abs), "max_rel_discrepancy": _fmt(max_rel),
            "threshold": _fmt(threshold), "pass": bool(passed), "residuals": None}
    return "compare", rows, meta, (not passed)


def cmd_bound(args, v):
    method = _method(args.method)
    estimate = args.estimate or default_estimate(v)
    table = coefficients(v, args.N, method)
    report = check_envelope(table, estimate)
    rows = [{"n": r.n, "abs_c": _fmt(r.abs_c), "bound": _fmt(r.bound), "ratio": _fmt(r.ratio), "ok": r.ok}
            for r in report.rows]
    meta = {"mode": table.mode.value, "estimate": estimate, "worst_ratio": _fmt(report.worst_ratio),
            "all_ok": report.all_ok, "residuals": None}
    return method.value, rows, meta, (not report.all_ok)


def cmd_green(args, v):
    if args.margin < 1:
        raise InvalidParameterError("margin must be at least 1")
    r = jacobi.rates_from_params(v)
    size = args.N + 1 + args.margin
    r0 = r.unperturbed()
    J0 = jacobi.jacobi_from_rates(r0, size)
    p0 = jacobi.kernel_vector_p0(r0, size)
    G = jacobi.green_function(J0, p0, args.N + 1, args.margin)
    direct = jacobi.green_direct_solve(J0, args.N + 1, args.margin)
    scale = np.maximum(np.abs(direct.block), np.finfo(float).tiny)
    residuals = {
        "right_inverse": _fmt(jacobi.right_inverse_residual(J0, G)),
        "formula_vs_direct_solve": _fmt(float(np.max(np.abs(G.block - direct.block) / scale))),
    }
    rows = [{"kernel": "G", "m": m, "n": n, "value": _fmt(x)} for m, n, x in G.entries()]
    if args.perturbed:
        D = jacobi.heun_diagonal_shift(r, G.size)
        Gp = jacobi.perturbed_green(G, D)
        residuals["perturbed_right_inverse"] = _fmt(jacobi.right_inverse_residual(J0.perturbed(D), Gp))
        rows += [{"kernel": "G_perturbed", "m": m, "n": n, "value": _fmt(x)} for m, n, x in Gp.entries()]
    return "green-function", rows, {"mode": "float", "order": args.N, "margin": args.margin,
                                    "residuals": residuals}


_COMMANDS = {"coeffs": cmd_coeffs, "eval": cmd_eval, "compare": cmd_compare,
             "bound": cmd_bound, "green": cmd_green}


def render(payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"
    rows = payload["data"]
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        v = params_from_args(args)
        out = _COMMANDS[args.command](args, v)
        failed = False
        if len(out) == 4:
            method, rows, meta, failed = out
        else:
            method, rows, meta = out
        meta["backend"] = BACKEND
        if args.timestamp:
            meta["timestamp"] = datetime.now(timezone.utc).isoformat()
        payload = {"params": v.to_json(), "method": method, "data": rows, "meta": meta}
        text = render(payload, args.format)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_CHECK_FAILED if failed else EXIT_OK
    except (HeunError, ZeroDivisionError) as exc:
        code = next((c for t, c in _EXIT_FOR if isinstance(exc, t)), EXIT_NUMERICAL)
        reason = getattr(exc, "reason", "zero-denominator")
        sys.stderr.write(f"error: {reason}: {exc}\n")
        return code
    except OSError as exc:
        sys.stderr.write(f"error: io: {exc}\n")
        return EXIT_VALIDATION


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
