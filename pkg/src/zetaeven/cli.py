"""Command-line front end.

    zetaeven zeta --max-k 5 --format json
    zetaeven bernoulli --max-m 12 --convention plus
    zetaeven verify all --max-index 50 --jobs 4
    zetaeven fourier -k 2 --n-max 5 --partial-N 1000

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(the witness goes to stderr as well as the output), 2 on usage errors.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import fourier, identities, zeta_even
from .bernoulli import BernoulliConvention, bernoulli_number
from .exact_core import ApproxReal, PiPolynomial, pi_poly_eval

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("plain", "csv", "json", "latex")
SUITE_NAMES = ("lemma14", "eq11", "eq12", "lemma15")


# -- documents ----------------------------------------------------------------


def _doc(command: str, params: dict, columns: list[str], rows: list[dict], ok: bool) -> dict:
    return {
        "command": command,
        "params": params,
        "columns": columns,
        "rows": rows,
        "status": "pass" if ok else "fail",
    }


def _approx_cells(x: ApproxReal) -> dict:
    value, radius = x.to_decimal()
    return {"approx": value, "radius": radius}


def cmd_zeta(max_k: int, precision_bits: int = 128) -> dict:
    rows, ok = [], True
    for k in range(1, max_k + 1):
        closed = zeta_even.zeta_even_closed(k)
        rec = zeta_even.zeta_even_recurrence(k)
        agree = closed.coefficient == rec.coefficient
        ok &= agree
        c = closed.coefficient
        rows.append(
            {
                "k": k,
                "coefficient": c,
                "zeta": closed,
                **_approx_cells(closed.evaluate(precision_bits)),
                "routes_agree": "yes" if agree else "no",
            }
        )
    columns = ["k", "coefficient", "zeta", "approx", "radius", "routes_agree"]
    return _doc("zeta", {"max_k": max_k, "precision": precision_bits}, columns, rows, ok)


def cmd_bernoulli(max_m: int, convention: BernoulliConvention) -> dict:
    rows = [{"m": m, "B_m": bernoulli_number(m, convention)} for m in range(max_m + 1)]
    params = {"max_m": max_m, "convention": convention.value}
    return _doc("bernoulli", params, ["m", "B_m"], rows, True)


def cmd_verify(suite: str, max_index: int, jobs: int = 1) -> dict:
    names = SUITE_NAMES if suite == "all" else (suite,)
    rows, ok = [], True
    for name in names:
        report = identities.run_suite(name, max_index, jobs=jobs)
        ok &= report.passed
        f = report.failure
        rows.append(
            {
                "suite": name,
                "from": report.range_checked[0],
                "to": report.range_checked[1],
                "checked": report.checked,
                "status": report.status,
                "failing_index": f.index if f else None,
                "lhs": f.lhs if f else None,
                "rhs": f.rhs if f else None,
            }
        )
    columns = ["suite", "from", "to", "checked", "status", "failing_index", "lhs", "rhs"]
    params = {"suite": suite, "max_index": max_index, "jobs": jobs}
    return _doc("verify", params, columns, rows, ok)


def cmd_fourier(k: int, n_max: int, partial_n: int, precision_bits: int = 128) -> dict:
    rows, ok = [], True
    for n in range(1, n_max + 1):
        agrees, quad, _ = fourier.quadrature_agrees(n, k, precision_bits)
        ok &= agrees
        closed = fourier.fourier_I_closed(n, k)
        rows.append(
            {
                "item": "I(n,k)",
                "n": n,
                "exact": closed,
                **_approx_cells(pi_poly_eval(closed, precision_bits)),
                "quadrature_radius": quad.to_decimal()[1],
                "check": "pass" if agrees else "fail",
            }
        )
    err = fourier.lemma11_error(k, partial_n, precision_bits)
    rows.append(
        {
            "item": "lemma11_partial_sum_error",
            "n": partial_n,
            "exact": None,
            **_approx_cells(err),
            "quadrature_radius": None,
            "check": None,
        }
    )
    recon = fourier.reconstruct_at(k, fourier.PiMultiple(1), partial_n, precision_bits)
    target = pi_poly_eval(PiPolynomial.monomial(1, 2 * k), precision_bits)
    rows.append(
        {
            "item": "reconstruction_error_at_pi",
            "n": partial_n,
            "exact": None,
            **_approx_cells(recon - target),
            "quadrature_radius": None,
            "check": None,
        }
    )
    columns = ["item", "n", "exact", "approx", "radius", "quadrature_radius", "check"]
    params = {"k": k, "n_max": n_max, "partial_N": partial_n, "precision": precision_bits}
    return _doc("fourier", params, columns, rows, ok)


# -- rendering ----------------------------------------------------------------


def _text(cell) -> str:
    if cell is None:
        return ""
    if isinstance(cell, Fraction):
        return f"{cell.numerator}/{cell.denominator}"
    if isinstance(cell, zeta_even.ZetaEvenValue):
        c, e = cell.coefficient, 2 * cell.k
        return f"ζ({e}) = {c.numerator}/{c.denominator}·π^{e}"
    return str(cell)


def _json_cell(cell):
    if isinstance(cell, zeta_even.ZetaEvenValue):
        return _text(cell)
    if isinstance(cell, Fraction):
        return {"num": str(cell.numerator), "den": str(cell.denominator)}
    if isinstance(cell, PiPolynomial):
        return [{"exponent": e, "coefficient": _json_cell(c)} for e, c in reversed(cell.items())]
    return cell


def _latex_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _latex_cell(cell) -> str:
    if cell is None:
        return ""
    if isinstance(cell, Fraction):
        return f"${_latex_fraction(cell)}$"
    if isinstance(cell, PiPolynomial):
        if cell.is_zero():
            return "$0$"
        out = ""
        for e, c in reversed(cell.items()):
            pi = "" if e == 0 else "\\pi" if e == 1 else f"\\pi^{{{e}}}"
            mag = abs(c)
            body = _latex_fraction(mag) if (mag != 1 or not pi) else ""
            sign = "-" if c < 0 else ("+" if out else "")
            out += f" {sign} {body}{pi}" if out else f"{sign}{body}{pi}"
        return f"${out}$"
    if isinstance(cell, zeta_even.ZetaEvenValue):
        e = 2 * cell.k
        return f"$\\zeta({e}) = {_latex_fraction(cell.coefficient)}\\pi^{{{e}}}$"
    return str(cell).replace("_", "\\_")


def render(doc: dict, fmt: str) -> str:
    columns, rows = doc["columns"], doc["rows"]
    if fmt == "json":
        out = {k: v for k, v in doc.items() if k != "columns"}
        out["rows"] = [{c: _json_cell(r[c]) for c in columns} for r in rows]
        return json.dumps(out, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_text(r[c]) for c in columns])
        return buf.getvalue()
    if fmt == "latex":
        lines = [f"\\begin{{tabular}}{{{'l' * len(columns)}}}", "\\hline"]
        lines.append(" & ".join(c.replace("_", "\\_") for c in columns) + " \\\\")
        lines.append("\\hline")
        for r in rows:
            lines.append(" & ".join(_latex_cell(r[c]) for c in columns) + " \\\\")
        lines += ["\\hline", "\\end{tabular}"]
        return "\n".join(lines) + "\n"
    table = [columns] + [[_text(r[c]) for c in columns] for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(columns))]
    out = [
        "  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in table
    ]
    out.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(out) + f"\nstatus: {doc['status']}\n"


# -- argument parsing -----------------------------------------------------------


def _int_at_least(low: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < low:
            raise argparse.ArgumentTypeError(f"must be >= {low}, got {value}")
        return value

    parse.__name__ = f"int>={low}"
    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--precision", type=_int_at_least(16), default=128, help="bits (default 128)")
    common.add_argument("--jobs", type=_int_at_least(1), default=1, help="worker processes")

    parser = argparse.ArgumentParser(
        prog="zetaeven", description="Exact zeta(2k) and the Bernoulli identities behind it."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta", parents=[common], help="table of zeta(2k) = C_k pi^(2k)")
    p.add_argument("--max-k", type=_int_at_least(1), default=10)

    p = sub.add_parser("bernoulli", parents=[common], help="table of Bernoulli numbers")
    p.add_argument("--max-m", type=_int_at_least(0), default=20)
    p.add_argument("--convention", choices=[c.value for c in BernoulliConvention], default="minus")

    p = sub.add_parser("verify", parents=[common], help="exact identity suites")
    p.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p.add_argument("--max-index", type=_int_at_least(1), default=50)

    p = sub.add_parser("fourier", parents=[common], help="Fourier moments and convergence")
    p.add_argument("-k", "--k", type=_int_at_least(1), default=1)
    p.add_argument("--n-max", type=_int_at_least(1), default=5)
    p.add_argument("--partial-N", dest="partial_n", type=_int_at_least(1), default=1000)
    return parser


def run(args: argparse.Namespace) -> dict:
    if args.command == "zeta":
        return cmd_zeta(args.max_k, args.precision)
    if args.command == "bernoulli":
        return cmd_bernoulli(args.max_m, BernoulliConvention(args.convention))
    if args.command == "verify":
        return cmd_verify(args.suite, args.max_index, args.jobs)
    return cmd_fourier(args.k, args.n_max, args.partial_n, args.precision)


def _report_failures(doc: dict) -> None:
    for row in doc["rows"]:
        if row.get("status") == "fail" or row.get("check") == "fail" or row.get("routes_agree") == "no":
            witness = {c: _text(v) for c, v in row.items() if v is not None}
            print(f"zetaeven: check failed: {witness}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    doc = run(args)
    sys.stdout.write(render(doc, args.format))
    if doc["status"] != "pass":
        _report_failures(doc)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
