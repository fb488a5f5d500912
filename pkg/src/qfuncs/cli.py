"""Command-line front end: point evaluation, bound reports, grid
sweeps, property verification, density dumps, and truncated moments.

Tabular output is deterministic: fixed column order, 17 significant
digits, newline line endings, and a leading '#' metadata line carrying
the complete parameter set, so identical invocations produce
byte-identical tables.  Exit codes: 0 success, 1 verification or
computation failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from typing import Callable, Mapping, Sequence

from . import __version__
from .asymptotic import marcum_asym, nuttall_norm_asym, nuttall_std_asym
from .bounds import BoundReport, select_bounds
from .closed_form import is_half_odd
from .evaluate import marcum_eval, nuttall_eval
from .params import (ConvergenceError, DomainError, Eval, MarcumArgs,
                     NuttallArgs)
from .properties import (CONJECTURE_SCANS, THEOREM_CLAUSES, PropertyVerdict,
                         run_clause, run_theorem_suite, scan_conjectures)
from .quadrature import pdf_noncentral_chisq

_TARGETS = ("marcum", "nuttall", "nuttall_std", "nuttall_norm")
_MARCUM_BOUND_NAMES = ("lb1", "lb2", "ub1", "ub2", "ub3", "ub4")
_NUTTALL_BOUND_NAMES = ("lb1", "ub1", "ub2")


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _canonical_target(target: str) -> str:
    return "nuttall_std" if target == "nuttall" else target


def _bound_names(target: str) -> tuple[str, ...]:
    return _MARCUM_BOUND_NAMES if target == "marcum" else _NUTTALL_BOUND_NAMES


def _metadata(pairs: Sequence[tuple[str, str]]) -> str:
    joined = " ".join(f"{key}={value}" for key, value in pairs)
    return f"# qfuncs {__version__} {joined}"


def _tol_text(tol: float | None) -> str:
    return "default" if tol is None else _fmt(tol)


def _writer() -> "csv.writer":
    return csv.writer(sys.stdout, lineterminator="\n")


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfuncs",
        description="Evaluate, bound, and verify properties of the "
                    "generalized Marcum and Nuttall Q-functions.")
    _add_global_options(parser, top_level=True)

    shared = argparse.ArgumentParser(add_help=False)
    _add_global_options(shared, top_level=False)

    sub = parser.add_subparsers(dest="command", required=True)

    eval_p = sub.add_parser(
        "eval", parents=[shared],
        help="evaluate one function value",
        description="Evaluate Q_nu(a, b) or a Nuttall Q-function at one "
                    "parameter point.  Half-odd orders use exact closed "
                    "forms unless --force-oracle is given.")
    _add_point_options(eval_p)

    bounds_p = sub.add_parser(
        "bounds", parents=[shared],
        help="report every applicable bound at a point",
        description="Print the exact value, every applicable bound with "
                    "its signed relative error, and the recommended "
                    "lower/upper pair.  Bounds always evaluate at full "
                    "precision; --tol and --force-oracle are ignored here.")
    _add_point_options(bounds_p)

    sweep_p = sub.add_parser(
        "sweep", parents=[shared],
        help="sweep one parameter and emit a table",
        description="Sweep one parameter over a uniform grid and emit "
                    "one row per point.  Unavailable values leave an "
                    "empty cell and a note on stderr.")
    sweep_p.add_argument("target", choices=_TARGETS)
    sweep_p.add_argument("--axis", required=True,
                         choices=("nu", "mu", "a", "b"),
                         help="parameter swept along the grid")
    sweep_p.add_argument("--start", type=float, required=True)
    sweep_p.add_argument("--stop", type=float, required=True)
    sweep_p.add_argument("--step", type=float, required=True)
    sweep_p.add_argument("--mu", type=float, help="fixed second order")
    sweep_p.add_argument("--nu", type=float, help="fixed order")
    sweep_p.add_argument("--a", type=float, help="fixed noncentrality")
    sweep_p.add_argument("--b", type=float, help="fixed threshold")
    sweep_p.add_argument("--columns",
                         help="comma-separated column list (default: exact, "
                              "every bound, asym); available: exact, method, "
                              "closed_form, bound names, rel_<bound>, asym, "
                              "rel_asym")
    sweep_p.add_argument("--plot", metavar="PATH",
                         help="also render the numeric columns to a figure "
                              "file at PATH")

    verify_p = sub.add_parser(
        "verify", parents=[shared],
        help="run the property verification suite",
        description="Run every registered theorem clause on its default "
                    "grid.  Exit code 0 only when all theorem clauses "
                    "pass; conjecture scans are informational and never "
                    "affect the exit code.")
    verify_p.add_argument("--conjectures", action="store_true",
                          help="also run the conjecture and counterexample "
                               "scans")
    verify_p.add_argument("--only", metavar="CLAUSE",
                          help="run a single clause by id, e.g. theorem3b")

    pdf_p = sub.add_parser(
        "pdfdump", parents=[shared],
        help="dump log-density diagonals of the noncentral chi-square",
        description="Emit rows (x, log f(x)) where the density's order "
                    "or noncentrality tracks x while the other parameter "
                    "stays fixed; a fixed noncentrality of zero uses the "
                    "central density.")
    pdf_p.add_argument("--axis", required=True,
                       choices=("order", "noncentrality"),
                       help="which density parameter tracks x")
    pdf_p.add_argument("--fixed", type=float, default=2.0,
                       help="value of the non-tracking parameter "
                            "(default 2.0)")
    pdf_p.add_argument("--start", type=float, default=0.25)
    pdf_p.add_argument("--stop", type=float, default=20.0)
    pdf_p.add_argument("--step", type=float, default=0.25)
    pdf_p.add_argument("--plot", metavar="PATH",
                       help="also render the dump to a figure file at PATH")

    moment_p = sub.add_parser(
        "moment", parents=[shared],
        help="truncated moment of a scaled noncentral chi-square",
        description="Compute E[g^(2j); lo < g^2 <= hi] where g^2 is "
                    "distributed as sigma^2 times a noncentral chi-square "
                    "with n degrees of freedom and noncentrality "
                    "(s/sigma)^2.  Internally this is the difference of "
                    "two normalized Nuttall evaluations with orders "
                    "mu = 2j + n/2 and nu = n/2 - 1 at amplitude s/sigma "
                    "and thresholds sqrt(lo)/sigma, sqrt(hi)/sigma, "
                    "scaled by sigma^(2j).")
    moment_p.add_argument("--n", type=float, required=True,
                          help="degrees of freedom, n >= 2")
    moment_p.add_argument("--s", type=float, required=True,
                          help="noncentrality amplitude, s > 0")
    moment_p.add_argument("--sigma", type=float, required=True,
                          help="scale, sigma > 0")
    moment_p.add_argument("--j", type=float, required=True,
                          help="moment exponent, j >= 0")
    moment_p.add_argument("--lo", type=float, required=True,
                          help="interval lower endpoint, lo >= 0")
    moment_p.add_argument("--hi", type=float, default=None,
                          help="interval upper endpoint (omit for infinity)")
    return parser


def _add_global_options(parser: argparse.ArgumentParser, *,
                        top_level: bool) -> None:
    # the same flags exist on the top-level parser and on every
    # subcommand; SUPPRESS keeps a subcommand occurrence from clobbering
    # a top-level one with its default
    default = (lambda v: v) if top_level else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--tol", type=float, default=default(None),
                        help="target relative accuracy for evaluation "
                             "(eval, sweep, moment)")
    parser.add_argument("--force-oracle", action="store_true",
                        default=default(False),
                        help="evaluate by adaptive quadrature even where a "
                             "closed form applies")
    parser.add_argument("--format", choices=("csv", "pretty"),
                        default=default("pretty"),
                        help="output style for point and verify commands "
                             "(tables are always delimited)")


def _add_point_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("target", choices=_TARGETS)
    parser.add_argument("--mu", type=float,
                        help="second order (Nuttall targets only)")
    parser.add_argument("--nu", type=float, required=True)
    parser.add_argument("--a", type=float, required=True)
    parser.add_argument("--b", type=float, required=True)


# ---------------------------------------------------------------------------
# point commands


def _point_args(ns: argparse.Namespace,
                target: str) -> MarcumArgs | NuttallArgs:
    if target == "marcum":
        if ns.mu is not None:
            raise DomainError("the marcum target takes no --mu")
        return MarcumArgs(ns.nu, ns.a, ns.b)
    if ns.mu is None:
        raise DomainError(f"the {target} target requires --mu")
    return NuttallArgs(ns.mu, ns.nu, ns.a, ns.b)


def _point_metadata(ns: argparse.Namespace, target: str,
                    command: str) -> str:
    pairs = [("command", command), ("target", target)]
    if target != "marcum":
        pairs.append(("mu", _fmt(ns.mu)))
    pairs.extend([("nu", _fmt(ns.nu)), ("a", _fmt(ns.a)),
                  ("b", _fmt(ns.b)), ("tol", _tol_text(ns.tol)),
                  ("force_oracle", str(ns.force_oracle).lower())])
    return _metadata(pairs)


def cmd_eval(ns: argparse.Namespace) -> int:
    target = _canonical_target(ns.target)
    args = _point_args(ns, target)
    if target == "marcum":
        result = marcum_eval(args, force_oracle=ns.force_oracle,
                             rel_tol=ns.tol)
    else:
        result = nuttall_eval(args, normalized=(target == "nuttall_norm"),
                              force_oracle=ns.force_oracle, rel_tol=ns.tol)
    if ns.format == "csv":
        sys.stdout.write(_point_metadata(ns, target, "eval") + "\n")
        out = _writer()
        out.writerow(["value", "method", "abs_error_estimate"])
        out.writerow([_fmt(result.value), result.method,
                      _fmt(result.abs_error_estimate)])
    else:
        print(f"value = {_fmt(result.value)}")
        print(f"method = {result.method}")
        print(f"abs_error_estimate = {_fmt(result.abs_error_estimate)}")
    return 0


def cmd_bounds(ns: argparse.Namespace) -> int:
    target = _canonical_target(ns.target)
    args = _point_args(ns, target)
    report = select_bounds(args, normalized=(target == "nuttall_norm"))
    names = _bound_names(target)
    if ns.format == "csv":
        sys.stdout.write(_point_metadata(ns, target, "bounds") + "\n")
        out = _writer()
        out.writerow(["quantity", "value", "rel_error", "note"])
        out.writerow(["exact", _fmt(report.exact.value), "",
                      f"method={report.exact.method}"])
        for name in names:
            if name in report.bounds:
                out.writerow([name, _fmt(report.bounds[name]),
                              _fmt(report.rel_errors[name]), ""])
            else:
                out.writerow([name, "", "",
                              f"n/a ({report.unavailable[name]})"])
        out.writerow(["recommended", "", "",
                      f"lower={report.recommended_lower or 'none'} "
                      f"upper={report.recommended_upper or 'none'} "
                      f"validated={str(report.recommendation_validated).lower()}"])
    else:
        print(f"exact = {_fmt(report.exact.value)} "
              f"(method={report.exact.method})")
        if report.degenerate_exact:
            print("half-odd order: every applicable bound coincides with "
                  "the exact closed form")
        for name in names:
            if name in report.bounds:
                print(f"{name} = {_fmt(report.bounds[name])}   "
                      f"rel_err = {_fmt(report.rel_errors[name])}")
            else:
                print(f"{name} = n/a ({report.unavailable[name]})")
        validated = (" [validated tightest]"
                     if report.recommendation_validated else "")
        print(f"recommended: lower={report.recommended_lower or 'none'} "
              f"upper={report.recommended_upper or 'none'}{validated}")
    return 0


# ---------------------------------------------------------------------------
# sweep


def _grid(start: float, stop: float, step: float) -> list[float]:
    if step <= 0.0:
        raise DomainError(f"step must be > 0, got {step}")
    if stop < start:
        raise DomainError(f"stop {stop} is below start {start}")
    count = int(math.floor((stop - start) / step + 1e-9))
    return [start + k * step for k in range(count + 1)]


def _default_columns(target: str) -> list[str]:
    return ["exact", *_bound_names(target), "asym"]


def _column_vocabulary(target: str) -> tuple[str, ...]:
    names = _bound_names(target)
    return ("exact", "method", "closed_form", *names,
            *(f"rel_{n}" for n in names), "asym", "rel_asym")


class _NoteLog:
    """Per-sweep stderr notes, deduplicated by (column, reason) so a
    structurally absent column does not flood long sweeps."""

    def __init__(self) -> None:
        self._seen: set[tuple[str, str]] = set()
        self._suppressed = 0

    def add(self, coordinate: str, column: str, reason: str) -> None:
        key = (column, reason)
        if key in self._seen:
            self._suppressed += 1
            return
        self._seen.add(key)
        sys.stderr.write(f"note: {coordinate}: {column}: {reason} "
                         "(first occurrence; repeats suppressed)\n")

    def finish(self) -> None:
        if self._suppressed:
            sys.stderr.write(f"note: {self._suppressed} repeated "
                             "unavailability note(s) suppressed\n")


def _sweep_row(target: str, axis: str, fixed: Mapping[str, float],
               x: float, columns: Sequence[str], ns: argparse.Namespace,
               notes: _NoteLog) -> dict[str, float | str | None]:
    """Numeric cells for one sweep row; None marks an unavailable cell."""
    coordinate = f"{axis}={_fmt(x)}"
    params = dict(fixed)
    params[axis] = x
    cells: dict[str, float | str | None] = {c: None for c in columns}
    try:
        if target == "marcum":
            args: MarcumArgs | NuttallArgs = MarcumArgs(
                params["nu"], params["a"], params["b"])
        else:
            args = NuttallArgs(params["mu"], params["nu"],
                               params["a"], params["b"])
    except DomainError as exc:
        notes.add(coordinate, "row", str(exc))
        return cells
    normalized = target == "nuttall_norm"
    marcum = target == "marcum"

    exact: Eval | None = None
    need_exact = any(c in ("exact", "method") or c.startswith("rel_")
                     for c in columns)
    if need_exact:
        if marcum:
            exact = marcum_eval(args, force_oracle=ns.force_oracle,
                                rel_tol=ns.tol)
        else:
            exact = nuttall_eval(args, normalized=normalized,
                                 force_oracle=ns.force_oracle,
                                 rel_tol=ns.tol)

    report: BoundReport | None = None
    if any(c in _bound_names(target) or c.startswith("rel_lb")
           or c.startswith("rel_ub") for c in columns):
        try:
            report = select_bounds(args, normalized=normalized)
        except DomainError as exc:
            notes.add(coordinate, "bounds", str(exc))

    def relative(value: float) -> float | None:
        if exact is None or exact.value == 0.0:
            notes.add(coordinate, "rel", "exact value is zero; relative "
                                         "error undefined")
            return None
        return (value - exact.value) / exact.value

    for column in columns:
        if column == "exact" and exact is not None:
            cells[column] = exact.value
        elif column == "method" and exact is not None:
            cells[column] = exact.method
        elif column == "closed_form":
            if marcum and is_half_odd(args.nu):
                cells[column] = marcum_eval(args).value
            elif (not marcum and is_half_odd(args.mu)
                  and is_half_odd(args.nu) and args.mu >= args.nu):
                cells[column] = nuttall_eval(args,
                                             normalized=normalized).value
            else:
                notes.add(coordinate, column,
                          "no closed form at this order")
        elif column in _bound_names(target):
            if report is None:
                notes.add(coordinate, column, "bounds unavailable")
            elif column in report.bounds:
                cells[column] = report.bounds[column]
            else:
                notes.add(coordinate, column,
                          f"n/a ({report.unavailable[column]})")
        elif column.startswith("rel_") and column != "rel_asym":
            name = column[4:]
            if report is not None and name in report.bounds:
                cells[column] = relative(report.bounds[name])
            else:
                notes.add(coordinate, column, "bound unavailable")
        elif column in ("asym", "rel_asym"):
            try:
                if marcum:
                    approx = marcum_asym(args)
                elif normalized:
                    approx = nuttall_norm_asym(args)
                else:
                    approx = nuttall_std_asym(args)
            except DomainError as exc:
                notes.add(coordinate, column, str(exc))
                continue
            cells[column] = (approx if column == "asym"
                             else relative(approx))
    return cells


def cmd_sweep(ns: argparse.Namespace) -> int:
    target = _canonical_target(ns.target)
    marcum = target == "marcum"
    axis = ns.axis
    if marcum and axis == "mu":
        raise DomainError("the marcum target has no mu axis")
    required = {"nu", "a", "b"} | (set() if marcum else {"mu"})
    if axis not in required:
        raise DomainError(f"axis {axis!r} does not apply to {target}")
    fixed: dict[str, float] = {}
    for name in sorted(required):
        value = getattr(ns, name)
        if name == axis:
            if value is not None:
                raise DomainError(f"--{name} conflicts with --axis {axis}")
            continue
        if value is None:
            raise DomainError(f"target {target} needs --{name} fixed")
        fixed[name] = value
    columns = (ns.columns.split(",") if ns.columns
               else _default_columns(target))
    vocabulary = _column_vocabulary(target)
    for column in columns:
        if column not in vocabulary:
            raise DomainError(f"unknown column {column!r}; available: "
                              + ", ".join(vocabulary))
    points = _grid(ns.start, ns.stop, ns.step)

    pairs = [("command", "sweep"), ("target", target), ("axis", axis)]
    pairs += [(name, _fmt(fixed[name])) for name in sorted(fixed)]
    pairs += [("start", _fmt(ns.start)), ("stop", _fmt(ns.stop)),
              ("step", _fmt(ns.step)), ("columns", ",".join(columns)),
              ("tol", _tol_text(ns.tol)),
              ("force_oracle", str(ns.force_oracle).lower())]
    sys.stdout.write(_metadata(pairs) + "\n")
    out = _writer()
    out.writerow([axis, *columns])

    notes = _NoteLog()
    numeric: dict[str, list[float | None]] = {c: [] for c in columns}
    for x in points:
        cells = _sweep_row(target, axis, fixed, x, columns, ns, notes)
        row = [_fmt(x)]
        for column in columns:
            value = cells[column]
            if value is None:
                row.append("")
            elif isinstance(value, str):
                row.append(value)
            else:
                row.append(_fmt(value))
            numeric[column].append(
                value if isinstance(value, float) else None)
        out.writerow(row)
    notes.finish()

    if ns.plot:
        from .figures import render_series
        series = {c: numeric[c] for c in columns
                  if any(v is not None for v in numeric[c])}
        render_series(points, series, xlabel=axis, ylabel="value",
                      title=f"{target} sweep", path=ns.plot)
    return 0


# ---------------------------------------------------------------------------
# verify


def _verdict_rows(verdicts: Sequence[PropertyVerdict],
                  gating: Mapping[str, bool]) -> list[list[str]]:
    rows = []
    for verdict in verdicts:
        rows.append([
            verdict.property_id,
            str(gating[verdict.property_id]).lower(),
            str(verdict.passed).lower(),
            str(verdict.checked_points),
            str(len(verdict.violations)),
            format(verdict.max_residual, ".3e"),
            verdict.note,
        ])
    return rows


def cmd_verify(ns: argparse.Namespace) -> int:
    if ns.only:
        verdicts = [run_clause(ns.only)]
        gating = {ns.only: ns.only in THEOREM_CLAUSES}
    else:
        verdicts = run_theorem_suite()
        gating = {v.property_id: True for v in verdicts}
        if ns.conjectures:
            scans = scan_conjectures()
            verdicts.extend(scans)
            gating.update({v.property_id: False for v in scans})
    if ns.format == "csv":
        sys.stdout.write(_metadata([
            ("command", "verify"),
            ("only", ns.only or "all"),
            ("conjectures", str(ns.conjectures).lower())]) + "\n")
        out = _writer()
        out.writerow(["property_id", "gating", "passed", "checked_points",
                      "violations", "max_residual", "note"])
        for row in _verdict_rows(verdicts, gating):
            out.writerow(row)
    else:
        for verdict in verdicts:
            if gating[verdict.property_id]:
                status = "PASS" if verdict.passed else "FAIL"
            else:
                status = "info"
            line = (f"{status} {verdict.property_id:<24} "
                    f"checked={verdict.checked_points:<5d} "
                    f"violations={len(verdict.violations):<5d} "
                    f"max_residual={verdict.max_residual:+.3e}")
            if verdict.note:
                line += f"  [{verdict.note}]"
            print(line)
        gated = [v for v in verdicts if gating[v.property_id]]
        passed = sum(1 for v in gated if v.passed)
        print(f"theorem clauses passed: {passed}/{len(gated)}")
    failed = [v for v in verdicts
              if gating[v.property_id] and not v.passed]
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# pdfdump


def cmd_pdfdump(ns: argparse.Namespace) -> int:
    points = _grid(ns.start, ns.stop, ns.step)
    pairs = [("command", "pdfdump"), ("axis", ns.axis),
             ("fixed", _fmt(ns.fixed)), ("start", _fmt(ns.start)),
             ("stop", _fmt(ns.stop)), ("step", _fmt(ns.step))]
    sys.stdout.write(_metadata(pairs) + "\n")
    out = _writer()
    out.writerow(["x", "log_pdf"])
    notes = _NoteLog()
    values: list[float | None] = []
    for x in points:
        try:
            if ns.axis == "order":
                density = pdf_noncentral_chisq(x, ns.fixed, x)
            else:
                density = pdf_noncentral_chisq(ns.fixed, x, x)
        except DomainError as exc:
            notes.add(f"x={_fmt(x)}", "log_pdf", str(exc))
            out.writerow([_fmt(x), ""])
            values.append(None)
            continue
        if density <= 0.0:
            notes.add(f"x={_fmt(x)}", "log_pdf", "density underflows")
            out.writerow([_fmt(x), ""])
            values.append(None)
            continue
        log_density = math.log(density)
        out.writerow([_fmt(x), _fmt(log_density)])
        values.append(log_density)
    notes.finish()
    if ns.plot:
        from .figures import render_series
        label = ("order tracks x" if ns.axis == "order"
                 else "noncentrality tracks x")
        render_series(points, {"log_pdf": values}, xlabel="x",
                      ylabel="log density",
                      title=f"noncentral chi-square, {label}",
                      path=ns.plot)
    return 0


# ---------------------------------------------------------------------------
# moment


def cmd_moment(ns: argparse.Namespace) -> int:
    if ns.n < 2.0:
        raise DomainError(f"degrees of freedom must be >= 2, got {ns.n}")
    if ns.s <= 0.0:
        raise DomainError(f"noncentrality amplitude must be > 0, got {ns.s}")
    if ns.sigma <= 0.0:
        raise DomainError(f"scale must be > 0, got {ns.sigma}")
    if ns.j < 0.0:
        raise DomainError(f"moment exponent must be >= 0, got {ns.j}")
    if ns.lo < 0.0:
        raise DomainError(f"interval start must be >= 0, got {ns.lo}")
    if ns.hi is not None and ns.hi < ns.lo:
        raise DomainError(f"interval end {ns.hi} is below start {ns.lo}")

    mu = 2.0 * ns.j + 0.5 * ns.n
    nu = 0.5 * ns.n - 1.0
    amplitude = ns.s / ns.sigma

    def upper_moment(threshold: float) -> float:
        b = math.sqrt(threshold) / ns.sigma
        return nuttall_eval(NuttallArgs(mu, nu, amplitude, b),
                            normalized=True, force_oracle=ns.force_oracle,
                            rel_tol=ns.tol).value

    if ns.hi is not None and ns.hi == ns.lo:
        value = 0.0
    else:
        head = upper_moment(ns.lo)
        tail = 0.0 if ns.hi is None else upper_moment(ns.hi)
        value = ns.sigma ** (2.0 * ns.j) * (head - tail)

    if ns.format == "csv":
        pairs = [("command", "moment"), ("n", _fmt(ns.n)), ("s", _fmt(ns.s)),
                 ("sigma", _fmt(ns.sigma)), ("j", _fmt(ns.j)),
                 ("lo", _fmt(ns.lo)),
                 ("hi", "inf" if ns.hi is None else _fmt(ns.hi)),
                 ("mu", _fmt(mu)), ("nu", _fmt(nu)),
                 ("tol", _tol_text(ns.tol)),
                 ("force_oracle", str(ns.force_oracle).lower())]
        sys.stdout.write(_metadata(pairs) + "\n")
        out = _writer()
        out.writerow(["value"])
        out.writerow([_fmt(value)])
    else:
        print(f"value = {_fmt(value)}")
        print(f"orders: mu = {_fmt(mu)}, nu = {_fmt(nu)}, "
              f"amplitude = {_fmt(amplitude)}")
    return 0


# ---------------------------------------------------------------------------
# entry points


_COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "eval": cmd_eval,
    "bounds": cmd_bounds,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "pdfdump": cmd_pdfdump,
    "moment": cmd_moment,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return _COMMANDS[ns.command](ns)
    except DomainError as exc:
        sys.stderr.write(f"qfuncs: domain error: {exc}\n")
        return 2
    except ConvergenceError as exc:
        sys.stderr.write(f"qfuncs: computation failed: {exc}\n")
        return 1


def entry() -> None:
    sys.exit(main())
