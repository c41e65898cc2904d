"""Command-line front end.

    prasym eval   --family chen-ismail --n 3 --x 1
    prasym asym   --family bv --n 50 --t 1024 --regime airy
    prasym zeros  --family cf1 --c 1 --n 25
    prasym moment --family ci --n-max 2000
    prasym verify --format json

Exit status: 0 success, 1 usage error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import acceptance, asympt, families as fam, moment, zeros
from .scaled import ScaledReal
from .specfun import DomainError

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


# ----------------------------------------------------------------------------
# flag parsing helpers
# ----------------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            a, b = (int(v) for v in part.split(":"))
            out.extend(range(a, b + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _frac_list(text: str) -> list[Fraction]:
    try:
        vals = [Fraction(p.strip()) for p in text.split(",") if p.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _float_list(text: str) -> list[float]:
    try:
        vals = [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if not vals or not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError("need finite values")
    return vals


def _grid(text: str) -> list[float]:
    """``start:stop:count`` inclusive linear grid."""
    try:
        a, b, k = text.split(":")
        a, b, k = float(a), float(b), int(k)
    except ValueError:
        raise argparse.ArgumentTypeError("grid must be start:stop:count")
    if k < 1:
        raise argparse.ArgumentTypeError("grid count must be >= 1")
    return [float(v) for v in np.linspace(a, b, k)]


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def _family_arg(text: str) -> fam.FamilyKind:
    try:
        return fam.parse_kind(text)
    except fam.FamilyError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _spec(args) -> fam.FamilySpec:
    try:
        return fam.family(args.family, args.c)
    except (fam.FamilyError, ValueError) as exc:
        raise UsageError(str(exc))


# ----------------------------------------------------------------------------
# output
# ----------------------------------------------------------------------------

def _cell(v):
    if isinstance(v, ScaledReal):
        return v.log10() if v.sign else "-inf"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if v is None:
        return ""
    return v


def _json_value(v):
    if isinstance(v, ScaledReal):
        return v.to_json()
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (np.floating, float)):
        v = float(v)
        return v if math.isfinite(v) else str(v)
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, (np.bool_, bool)):
        return bool(v)
    if isinstance(v, dict):
        return {str(k): _json_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    return v


def _render(columns: list[str], rows: list[dict], fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        doc = {"columns": columns, "rows": [{c: _json_value(r.get(c)) for c in columns} for r in rows]}
        if meta:
            doc["meta"] = _json_value(meta)
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in columns])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _plain(v: ScaledReal):
    """Float value when representable, otherwise blank (see the log10 column)."""
    if v.sign == 0:
        return 0.0
    lg = v.log10()
    if abs(lg) > 300:
        return None
    x = v.to_float()
    return float(round(x)) if abs(x - round(x)) <= 1e-9 * max(1.0, abs(x)) and abs(x) < 2 ** 53 else x


def _pretty_float(x):
    if isinstance(x, float) and x.is_integer() and abs(x) < 2 ** 53:
        return int(x)
    return x


# ----------------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------------

EVAL_COLUMNS = ["family", "n", "x", "value", "value_sign", "value_log10", "pi_n_log10",
                "p_n_log10", "orthonormal_log10", "exact"]


def cmd_eval(args) -> int:
    f = _spec(args)
    ns = list(range(0, args.n_max + 1)) if args.n_max is not None else args.n
    if ns is None:
        raise UsageError("eval needs --n or --n-max")
    xs = args.x
    if xs is None:
        raise UsageError("eval needs --x")
    rows = []
    for n in ns:
        if n < 0:
            raise UsageError("n must be >= 0")
        for xq in xs:
            x = float(xq)
            nat = fam.evaluate(f, n, x)
            mon = fam.evaluate_monic(f, n, x).value()
            std = fam.evaluate_standard(f, n, x).value()
            orth = fam.evaluate_orthonormal(f, n, x)
            exact = fam.evaluate_exact(f, n, xq).natural if n <= 30 else None
            rows.append({
                "family": f.name, "n": n, "x": xq,
                "value": _pretty_float(_plain(nat)), "value_sign": nat.sign, "value_log10": nat,
                "pi_n_log10": mon, "p_n_log10": std, "orthonormal_log10": orth, "exact": exact,
            })
    _emit(_render(EVAL_COLUMNS, rows, args.format), args.out)
    return EXIT_OK


ASYM_COLUMNS = ["family", "n", "t", "s", "x", "regime", "formula_id", "approximant_sign",
                "approximant_log10", "recurrence_sign", "recurrence_log10", "rel_dev", "conjecture"]


def _formula_id(f: fam.FamilySpec, regime: str) -> str:
    if regime == "outer":
        return "outer-ci" if f.kind is fam.FamilyKind.CHEN_ISMAIL else "outer-birth-death"
    return f"{regime}-{'ci' if f.kind is fam.FamilyKind.CHEN_ISMAIL else 'birth-death'}"


def cmd_asym(args) -> int:
    f = _spec(args)
    ns = args.n or []
    if not ns:
        raise UsageError("asym needs --n")
    rows = []
    if args.regime in ("edge", "edge-orthonormal"):
        ss = args.s
        if ss is None:
            raise UsageError("edge regime needs --s")
        orth = args.regime == "edge-orthonormal"
        for n in ns:
            for s in ss:
                ap = asympt.approx_edge(f, n, s, orthonormal=orth)
                ex = asympt.edge_true(f, n, s, orthonormal=orth)
                env = abs(ap) if ap.sign else abs(ex)
                dev = abs(ap - ex).ratio(env) if env.sign else float("nan")
                rows.append({
                    "family": f.name, "n": n, "s": s, "x": asympt.edge_x(f, n, s),
                    "regime": args.regime, "formula_id": args.regime,
                    "approximant_sign": ap.sign, "approximant_log10": ap,
                    "recurrence_sign": ex.sign, "recurrence_log10": ex, "rel_dev": dev,
                    "conjecture": orth and f.kind is not fam.FamilyKind.CHEN_ISMAIL,
                })
        _emit(_render(ASYM_COLUMNS, rows, args.format), args.out)
        return EXIT_OK
    ts = args.t if args.t is not None else args.grid
    if ts is None:
        raise UsageError("asym needs --t or --grid")
    for n in ns:
        for t in ts:
            regime, delta = args.regime, asympt.OSC_DELTA
            if regime == "auto":
                regime, delta = asympt.auto_regime(f, n, t)
            try:
                cmp = asympt.compare(f, n, t, regime, delta)
            except DomainError as exc:
                raise UsageError(f"n={n} t={t}: {exc}")
            rows.append({
                "family": f.name, "n": n, "t": t, "x": fam.nu(f, n) ** fam.constants(f).theta * t,
                "regime": regime, "formula_id": _formula_id(f, regime),
                "approximant_sign": cmp.approx.sign, "approximant_log10": cmp.approx,
                "recurrence_sign": cmp.exact.sign, "recurrence_log10": cmp.exact,
                "rel_dev": cmp.rel_dev, "conjecture": False,
            })
    _emit(_render(ASYM_COLUMNS, rows, args.format), args.out)
    return EXIT_OK


ZERO_COLUMNS = ["family", "n", "k", "zero", "enclosure", "chain_A", "chain_B", "inside",
                "airy_prediction", "residual_scaled", "ks_distance"]


def cmd_zeros(args) -> int:
    f = _spec(args)
    ns = args.n
    if ns is None:
        raise UsageError("zeros needs --n")
    rows = []
    for n in ns:
        if n < 1:
            raise UsageError("n must be >= 1")
        zs = zeros.compute_zeros(f, n, tol=args.tol)
        cb = zeros.chain_bound(f, n)
        ks = moment.ks_distance(f, n) if n >= 2 else None
        scale = fam.nu(f, n) ** (fam.constants(f).theta - 4 / 3)
        for k, z in enumerate(zs.zeros, start=1):
            pred = asympt.extreme_zero_prediction(f, n, k) if k <= min(10, n) else None
            rows.append({
                "family": f.name, "n": n, "k": k, "zero": float(z),
                "enclosure": float(zs.hi[k - 1] - zs.lo[k - 1]),
                "chain_A": cb.A, "chain_B": cb.B, "inside": bool(cb.A < z < cb.B),
                "airy_prediction": pred,
                "residual_scaled": abs(z - pred) / scale if pred is not None else None,
                "ks_distance": ks,
            })
    _emit(_render(ZERO_COLUMNS, rows, args.format), args.out)
    return EXIT_OK


MOMENT_COLUMNS = ["family", "record", "key", "value", "conjecture"]


def cmd_moment(args) -> int:
    f = _spec(args)
    rows = []

    def add(record, key, value, conj=False):
        rows.append({"family": f.name, "record": record, "key": key, "value": value, "conjecture": conj})

    for x in args.x or []:
        xv = float(x)
        if f.kind is fam.FamilyKind.CHEN_ISMAIL:
            add("weight", f"log_w({x})", moment.ci_log_weight(xv))
        if xv > 0:
            env = moment.weight_tail(f, xv)
            add("weight_tail", f"log_envelope({x})", env.log_value, env.conjecture)
    N = args.n_max if args.n_max is not None else 2000
    try:
        rep = moment.indeterminacy_check(f, N)
    except DomainError as exc:
        raise UsageError(str(exc))
    add("indeterminacy", "N", rep.N)
    add("indeterminacy", "slope_log_abs_sq", rep.slope)
    add("indeterminacy", "partial_sum_N_half", rep.partial_sum)
    add("indeterminacy", "partial_sum_N", rep.partial_sum_double)
    add("indeterminacy", "sum_ratio", rep.sum_ratio)
    cr = moment.conjecture_check(f)
    add("conjecture", "m", cr.m, True)
    add("conjecture", "k_predicted", cr.k_predicted, True)
    add("conjecture", "k_observed", cr.k_observed, True)
    add("conjecture", "theta_observed", cr.theta_observed, True)
    _emit(_render(MOMENT_COLUMNS, rows, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = []
    for crit in acceptance.CRITERIA:
        if crit is acceptance.c1_oracle:
            results.append(crit(seed=args.seed))
        else:
            results.append(crit())
    ok = all(r.passed for r in results)
    if args.format == "json":
        doc = {
            "passed": ok,
            "criteria": [{"number": r.number, "name": r.name, "passed": r.passed,
                          "measured": _json_value(r.details)} for r in results],
        }
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    else:
        rows = [{"number": r.number, "name": r.name, "passed": r.passed,
                 "measured": json.dumps(_json_value(r.details))} for r in results]
        text = _render(["number", "name", "passed", "measured"], rows, "csv")
    _emit(text, args.out)
    for r in results:
        sys.stderr.write(r.line() + "\n")
    return EXIT_OK if ok else EXIT_FAIL


# ----------------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="prasym", allow_abbrev=False,
                description="Orthogonal polynomials of indeterminate moment problems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt_default="csv"):
        sp.add_argument("--format", choices=("csv", "json"), default=fmt_default)
        sp.add_argument("--out", default=None, help="write to this file instead of stdout")

    def fam_flags(sp):
        sp.add_argument("--family", type=_family_arg, required=True)
        sp.add_argument("--c", type=Fraction, default=Fraction(0), help="CF parameter c (rational)")

    e = sub.add_parser("eval", allow_abbrev=False, help="evaluate polynomials")
    fam_flags(e)
    e.add_argument("--n", type=_int_list)
    e.add_argument("--n-max", type=int, dest="n_max")
    e.add_argument("--x", type=_frac_list)
    common(e)
    e.set_defaults(func=cmd_eval)

    a = sub.add_parser("asym", allow_abbrev=False, help="compare approximants with the recurrence")
    fam_flags(a)
    a.add_argument("--n", type=_int_list)
    a.add_argument("--t", type=_float_list)
    a.add_argument("--s", type=_float_list)
    a.add_argument("--grid", type=_grid)
    a.add_argument("--regime", choices=("auto",) + asympt.REGIMES + ("edge", "edge-orthonormal"),
                   default="auto")
    common(a)
    a.set_defaults(func=cmd_asym)

    z = sub.add_parser("zeros", allow_abbrev=False, help="zeros, bounds and edge predictions")
    fam_flags(z)
    z.add_argument("--n", type=_int_list)
    z.add_argument("--tol", type=_positive, default=1e-13)
    common(z)
    z.set_defaults(func=cmd_zeros)

    m = sub.add_parser("moment", allow_abbrev=False, help="weight tails, indeterminacy, conjecture")
    fam_flags(m)
    m.add_argument("--n-max", type=int, dest="n_max")
    m.add_argument("--x", type=_frac_list)
    common(m)
    m.set_defaults(func=cmd_moment)

    v = sub.add_parser("verify", allow_abbrev=False, help="run the acceptance suite")
    v.add_argument("--seed", type=int, default=2024)
    common(v, fmt_default="json")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, fam.FamilyError) as exc:
        sys.stderr.write(f"prasym: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
