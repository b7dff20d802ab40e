"""Command-line interface.

Subcommands: eval (one point), sweep (CSV over an x-range), zeros (zero
table, CSV or JSON), limit (binomial-to-Poisson convergence study), and
table1 (zeros at its reference parameters).

Exit codes: 0 success, 2 argument error, 3 numeric failure.  All numeric
cells are printed with 17 significant digits so output is byte-stable
across runs.
"""
import argparse
import json
import sys
from dataclasses import dataclass

from ._util import fmt
from .errors import CharlierError
from .oracle import Params, charlier_sum, krawtchouk, limit_error
from .asym import classify, evaluate_formula, formula_for_region
from .zeros import ZeroKind, exact_zeros, zero_table

_FORMULA_NAMES = tuple("F%d" % i for i in range(1, 12))
_SWEEP_TOKENS = ("oracle", "auto") + _FORMULA_NAMES

TABLE1_N = 25
TABLE1_A = 2.16564899


@dataclass(frozen=True)
class SweepSpec:
    """One sweep request: grid geometry plus the set of columns to fill."""

    n: int
    a: float
    x_min: float
    x_max: float
    steps: int
    formulas: tuple = ("oracle", "auto")
    output_format: str = "csv"
    digits: int = 60

    def __post_init__(self):
        if self.steps < 2:
            raise CharlierError("steps must be at least 2")
        if not self.x_min < self.x_max:
            raise CharlierError("x_min must be below x_max")
        for tok in self.formulas:
            if tok not in _SWEEP_TOKENS:
                raise CharlierError("unknown formula %r" % tok)


def _grid(spec):
    h = (spec.x_max - spec.x_min) / (spec.steps - 1)
    return [spec.x_min + i * h for i in range(spec.steps)]


def run_sweep(spec, out):
    """Write the sweep as CSV (or JSON rows) to the stream `out`."""
    params = Params(n=spec.n, a=spec.a)
    want_oracle = "oracle" in spec.formulas
    want_auto = "auto" in spec.formulas
    fcols = [t for t in spec.formulas if t not in ("oracle", "auto")]
    header = (["x", "oracle"] + fcols + (["auto"] if want_auto else [])
              + ["recommended_region", "rel_err_auto", "flags"])
    rows = []
    for x in _grid(spec):
        flags = []
        decision = classify(params, x)
        cells = {"x": x, "recommended_region": decision.recommended.value}
        oracle_val = None
        if want_oracle:
            oracle_val = charlier_sum(params, x, spec.digits).value
            cells["oracle"] = oracle_val
        for name in fcols:
            try:
                cells[name] = evaluate_formula(params, x, name)
            except (CharlierError, OverflowError) as exc:
                flags.append("%s:%s" % (name, type(exc).__name__))
        auto_val = None
        if want_auto:
            name = formula_for_region(decision.recommended)
            try:
                auto_val = evaluate_formula(params, x, name)
                cells["auto"] = auto_val
            except (CharlierError, OverflowError) as exc:
                flags.append("auto[%s]:%s" % (name, type(exc).__name__))
        if oracle_val is not None and auto_val is not None and oracle_val != 0:
            cells["rel_err_auto"] = float(abs(auto_val - oracle_val) / abs(oracle_val))
        cells["flags"] = ";".join(flags)
        rows.append(cells)

    if spec.output_format == "json":
        payload = [{k: (fmt(v) if k != "x" else float(v)) for k, v in r.items()} for r in rows]
        out.write(json.dumps({"spec": {"n": spec.n, "a": spec.a}, "rows": payload},
                             indent=None, separators=(",", ":")))
        out.write("\n")
        return
    out.write(",".join(header) + "\n")
    for r in rows:
        out.write(",".join(fmt(r.get(c)) for c in header) + "\n")


def run_eval(params, x, method, digits, check, out):
    decision = classify(params, x)
    pieces = ["x=%s" % fmt(float(x))]
    if method == "oracle":
        value = charlier_sum(params, x, digits).value
        pieces.append("value=%s" % fmt(value))
        pieces.append("method=oracle")
        pieces.append("region=%s" % decision.recommended.value)
    elif method == "auto":
        name = formula_for_region(decision.recommended)
        value = evaluate_formula(params, x, name)
        pieces.append("value=%s" % fmt(value))
        pieces.append("method=auto")
        pieces.append("region=%s" % decision.recommended.value)
        pieces.append("formula=%s" % name)
    else:
        value = evaluate_formula(params, x, method)
        pieces.append("value=%s" % fmt(value))
        pieces.append("method=%s" % method)
        pieces.append("region=%s" % decision.recommended.value)
    if check:
        oracle_val = charlier_sum(params, x, digits).value
        pieces.append("oracle=%s" % fmt(oracle_val))
        if oracle_val != 0:
            pieces.append("rel_err=%s" % fmt(float(abs(value - oracle_val) / abs(oracle_val))))
    out.write(" ".join(pieces) + "\n")


def _zero_rows(params, digits):
    """ZeroRecord-like dicts; exact-only listing when n <= a."""
    if params.n > params.a:
        recs = zero_table(params, digits)
        return [{"kind": r.kind.value,
                 "l_or_j": r.index,
                 "exact": float(r.exact) if r.exact is not None else None,
                 "approx": r.approx,
                 "rel_err": r.rel_err} for r in recs]
    return [{"kind": ZeroKind.EXACT_ONLY.value, "l_or_j": None,
             "exact": float(z), "approx": None, "rel_err": None}
            for z in exact_zeros(params, digits)]


def run_zeros(params, digits, output_format, out):
    rows = _zero_rows(params, digits)
    if output_format == "json":
        out.write(json.dumps({"params": {"n": params.n, "a": params.a}, "rows": rows},
                             separators=(",", ":")))
        out.write("\n")
        return
    out.write("kind,index,exact,approx,rel_err\n")
    for r in rows:
        cells = [r["kind"],
                 "" if r["l_or_j"] is None else str(r["l_or_j"]),
                 fmt(r["exact"]), fmt(r["approx"]), fmt(r["rel_err"])]
        out.write(",".join(cells) + "\n")


def run_limit(params, x, n_list, digits, out):
    base = charlier_sum(params, x, digits).value
    out.write("N,krawtchouk,abs_err,ratio\n")
    prev = None
    for N in n_list:
        err = limit_error(params.n, x, params.a, N, digits)
        kval = krawtchouk(params.n, x, params.a / N, N, digits).value
        ratio = "" if prev in (None, 0.0) else fmt(err / prev)
        out.write("%s,%s,%s,%s\n" % (N, fmt(kval), fmt(err), ratio))
        prev = err


def _build_parser():
    p = argparse.ArgumentParser(prog="charlier",
                                description="Charlier polynomial evaluation, "
                                            "asymptotic approximations, and zeros.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_x=False):
        sp.add_argument("--n", type=int, required=True, help="polynomial degree")
        sp.add_argument("--a", type=float, required=True, help="Charlier parameter")
        sp.add_argument("--digits", type=int, default=60, help="oracle working precision")
        if with_x:
            sp.add_argument("--x", type=float, required=True, help="evaluation point")

    pe = sub.add_parser("eval", help="evaluate at one point")
    common(pe, with_x=True)
    pe.add_argument("--method", default="auto", choices=("oracle", "auto") + _FORMULA_NAMES)
    pe.add_argument("--check", action="store_true",
                    help="also print the oracle value and relative error")

    ps = sub.add_parser("sweep", help="CSV sweep over an x-range")
    common(ps)
    ps.add_argument("--x-min", type=float, required=True)
    ps.add_argument("--x-max", type=float, required=True)
    ps.add_argument("--steps", type=int, required=True)
    ps.add_argument("--formulas", default="oracle,auto",
                    help="comma list from: %s" % ",".join(_SWEEP_TOKENS))
    ps.add_argument("--format", dest="output_format", default="csv", choices=("csv", "json"))

    pz = sub.add_parser("zeros", help="exact and approximate zero table")
    common(pz)
    pz.add_argument("--format", dest="output_format", default="csv", choices=("csv", "json"))

    pl = sub.add_parser("limit", help="Krawtchouk-to-Charlier limit study")
    common(pl, with_x=True)
    pl.add_argument("--N", type=int, nargs="+", required=True,
                    help="one or more Krawtchouk sizes")

    pt = sub.add_parser("table1", help="zero table at the reference parameters "
                                       "(n=%d, a=%s)" % (TABLE1_N, TABLE1_A))
    pt.add_argument("--digits", type=int, default=60)
    pt.add_argument("--format", dest="output_format", default="csv", choices=("csv", "json"))
    return p


def main(argv=None):
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "eval":
            run_eval(Params(n=args.n, a=args.a), args.x, args.method,
                     args.digits, args.check, out)
        elif args.command == "sweep":
            spec = SweepSpec(n=args.n, a=args.a, x_min=args.x_min, x_max=args.x_max,
                             steps=args.steps,
                             formulas=tuple(t for t in args.formulas.split(",") if t),
                             output_format=args.output_format, digits=args.digits)
            run_sweep(spec, out)
        elif args.command == "zeros":
            run_zeros(Params(n=args.n, a=args.a), args.digits, args.output_format, out)
        elif args.command == "limit":
            run_limit(Params(n=args.n, a=args.a), args.x, args.N, args.digits, out)
        elif args.command == "table1":
            run_zeros(Params(n=TABLE1_N, a=TABLE1_A), args.digits, args.output_format, out)
    except (CharlierError, OverflowError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
