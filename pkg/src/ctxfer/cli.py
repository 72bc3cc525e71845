"""Command-line entry point.

Exit codes: 0 ok, 2 usage or input error, 3 contextuality violation
(``check`` only), 4 undefined weak-value rows under ``--strict`` or a
requested weak value whose outcome never occurs.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import serialize as ser
from .contextuality import noncontextual_margin, scan_violation, symmetric_reflectivity
from .errors import CtxferError, ImpossiblePostselection
from .interferometer import OUTPUTS, PATHS, build_network, closure_residual, derive_reflectivities
from .measurement import (
    DEFAULT_EPSILONS,
    probe_extrapolate,
    sample_all_contexts,
    sample_context,
    weak_probe,
)
from .states import parse_state, probability_table
from .weak import coherence_coefficient, weak_report, weak_value

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3
EXIT_UNDEFINED = 4


class UsageError(Exception):
    pass


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"not a comma-separated list of numbers: {text!r}") from exc


def _table(args):
    if getattr(args, "symmetric", False):
        r = symmetric_reflectivity()
        return build_network(derive_reflectivities(r, r))
    return build_network(derive_reflectivities(args.r1, args.r2))


def _emit(args, text):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json(doc):
    return json.dumps(doc, indent=2)


def cmd_build(args):
    table = _table(args)
    if args.format == "csv":
        return ser.network_csv(table), EXIT_OK
    return _json(ser.dump_network(table, closure=closure_residual(table))), EXIT_OK


def cmd_probs(args):
    table = _table(args)
    probs = probability_table(parse_state(args.state, table), table)
    if args.format == "csv":
        return ser.probabilities_csv(probs), EXIT_OK
    return _json(ser.dump_probabilities(probs, table.config)), EXIT_OK


def _weak_common(args):
    table = _table(args)
    report = weak_report(parse_state(args.state, table), table)
    code = EXIT_UNDEFINED if (args.strict and report.undefined_outcomes) else EXIT_OK
    return table, report, code


def cmd_weak(args):
    table, report, code = _weak_common(args)
    if args.format == "csv":
        return ser.weak_report_csv(report), code
    return _json(ser.dump_weak_report(report, table.config)), code


def cmd_kd(args):
    table, report, _ = _weak_common(args)
    if args.format == "csv":
        return ser.kd_csv(report), EXIT_OK
    doc = ser._doc(
        "kd_table",
        config=ser.dump_config(table.config),
        rows=[{"path": i, "outcome": o, "value": ser.cplx(v)} for (i, o), v in report.kd.items()],
    )
    return _json(doc), EXIT_OK


def cmd_coherence(args):
    table = _table(args)
    if args.ket or args.bra:
        pairs = [(args.ket or "3", args.bra or "1")]
    else:
        pairs = [(n, o) for o in OUTPUTS for n in OUTPUTS]
    rows = [(i, n, o, coherence_coefficient(table, i, n, o).value) for n, o in pairs for i in PATHS]
    if args.format == "csv":
        return ser.csv_table(
            ["path", "ket", "bra", "value_re", "value_im"],
            [[i, n, o, v.real, v.imag] for i, n, o, v in rows],
        ), EXIT_OK
    doc = ser._doc(
        "coherence",
        config=ser.dump_config(table.config),
        rows=[{"path": i, "ket": n, "bra": o, "value": ser.cplx(v)} for i, n, o, v in rows],
    )
    return _json(doc), EXIT_OK


def cmd_check(args):
    table = _table(args)
    report = noncontextual_margin(parse_state(args.state, table), table)
    code = EXIT_VIOLATION if report.violated else EXIT_OK
    if args.strict and report.undefined_outcomes:
        code = EXIT_UNDEFINED
    if args.format == "csv":
        return ser.contextuality_csv(report), code
    return _json(ser.dump_contextuality(report)), code


def cmd_scan(args):
    if args.grid < 2:
        raise UsageError("--grid needs at least 2 points")
    if not (0.0 < args.min < args.max < 1.0):
        raise UsageError("need 0 < --min < --max < 1")
    grid = np.linspace(args.min, args.max, args.grid)
    scan = scan_violation(grid, grid)
    if args.format == "json":
        return _json(ser.dump_scan(scan)), EXIT_OK
    return scan.to_csv(), EXIT_OK


def cmd_sample(args):
    if args.shots < 1:
        raise UsageError("--shots must be >= 1")
    table = _table(args)
    rho = parse_state(args.state, table)
    if args.context:
        records = [sample_context(rho, table, args.context, args.shots, args.seed)]
    else:
        records = sample_all_contexts(rho, table, args.shots, args.seed)
    if args.format == "csv":
        return ser.counts_csv(records), EXIT_OK
    doc = ser.dump_counts(records[0]) if len(records) == 1 else ser._doc(
        "counts_list", records=[ser.dump_counts(r) for r in records])
    return _json(doc), EXIT_OK


def cmd_probe(args):
    table = _table(args)
    rho = parse_state(args.state, table)
    eps = _floats(args.eps_list)
    sampled = args.shots is not None
    mode = "sampled" if sampled else "exact"
    seed = args.seed if sampled else None
    results = [
        weak_probe(rho, table, args.path, args.outcome, e, mode, args.shots,
                   None if seed is None else seed + 2 * k)
        for k, e in enumerate(sorted(set(eps)))
    ]
    limit = probe_extrapolate(rho, table, args.path, args.outcome, eps, mode, args.shots, seed)
    exact = weak_value(rho, table, args.path, args.outcome).value
    if args.format == "csv":
        return ser.probe_csv(results, limit), EXIT_OK
    doc = ser._doc(
        "probe_extrapolation",
        path=args.path,
        outcome=args.outcome,
        estimates=[ser.dump_probe(r) for r in results],
        extrapolated=ser.cplx(limit),
        weak_value=ser.cplx(exact),
    )
    return _json(doc), EXIT_OK


def _add_common(p, state=True):
    p.add_argument("--r1", type=float, default=0.5, help="first reflectivity (default 0.5)")
    p.add_argument("--r2", type=float, default=0.5, help="last reflectivity (default 0.5)")
    p.add_argument("--symmetric", action="store_true",
                   help="use (3 - sqrt 5)/2 for both, making all five splitters equal")
    if state:
        p.add_argument("--state", default="nf",
                       help="'nf', comma-separated amplitudes, or @density.json (default nf)")
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--out", default=None, help="write to this file instead of stdout")
    p.add_argument("--strict", action="store_true",
                   help="exit 4 if any postselection outcome has zero probability")


def build_parser():
    ap = argparse.ArgumentParser(prog="ctxfer", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="path vectors and splitter records")
    _add_common(p, state=False)
    p.set_defaults(func=cmd_build, default_format="json")

    for name, func, text in (
        ("probs", cmd_probs, "path probabilities for all ten paths"),
        ("weak", cmd_weak, "10 x 3 weak-value table with continuity residuals"),
        ("kd", cmd_kd, "Kirkwood-Dirac elements"),
        ("check", cmd_check, "noncontextual inequality; exit 3 on violation"),
    ):
        p = sub.add_parser(name, help=text)
        _add_common(p)
        p.set_defaults(func=func, default_format="json")

    p = sub.add_parser("coherence", help="coherence coefficients C(i|n,o)")
    _add_common(p, state=False)
    p.add_argument("--ket", choices=OUTPUTS, default=None, help="n in C(i|n,o); omit both for all nine pairs")
    p.add_argument("--bra", choices=OUTPUTS, default=None, help="o in C(i|n,o)")
    p.set_defaults(func=cmd_coherence, default_format="json")

    p = sub.add_parser("scan", help="P(f|N_f) over a square reflectivity grid")
    p.add_argument("--grid", type=int, default=21)
    p.add_argument("--min", type=float, default=0.05)
    p.add_argument("--max", type=float, default=0.95)
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scan, default_format="csv")

    p = sub.add_parser("sample", help="Monte Carlo photon counts in a context")
    _add_common(p)
    p.add_argument("--context", default=None, help="e.g. f,S1,P1 (default: all five)")
    p.add_argument("--shots", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample, default_format="json")

    p = sub.add_parser("probe", help="weak polarization probe and zero-coupling limit")
    _add_common(p)
    p.add_argument("--path", required=True, choices=PATHS)
    p.add_argument("--outcome", required=True, choices=OUTPUTS)
    p.add_argument("--eps-list", default=",".join(str(e) for e in DEFAULT_EPSILONS))
    p.add_argument("--shots", type=int, default=None, help="sample this many photons per basis")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_probe, default_format="json")
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        text, code = args.func(args)
    except ImpossiblePostselection as exc:
        print(f"ctxfer {args.command}: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except (CtxferError, UsageError, ValueError, OSError) as exc:
        print(f"ctxfer {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
