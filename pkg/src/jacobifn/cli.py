"""Command-line front end: point evaluation, tables, verification campaigns.

Exit codes: 0 success, 1 domain/verification failure, 2 usage or parse
failure.  Reports are written deterministically (sorted keys, fixed float
repr), so identical (seed, config) runs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import FixtureFormatError, JacobiFnError
from .identity_engine import IdentityReport, list_identities, run_selftest, verify_identity
from .jacobi_first import JacobiParams, Representation, jacobi_p
from .jacobi_second import jacobi_q

USAGE_HINT = "run 'jacobifn --help' for usage"


class CliError(Exception):
    """Bad flags or unparseable values; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    """Verification campaign settings (config file overridden by flags)."""

    tolerance: float | None
    seed: int
    samples: int
    n_values: tuple[int, ...] | None
    output_path: str | None
    format: str

    def __post_init__(self):
        if self.tolerance is not None and self.tolerance <= 0:
            raise CliError("tolerance must be positive")
        if self.samples < 1:
            raise CliError("samples must be >= 1")


def parse_complex(text: str) -> complex:
    """Complex literal 're,im' or plain 're'."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise CliError(f"cannot parse complex literal {text!r} (want 're' or 're,im')")


def _parse_grid(spec: str) -> tuple[complex, complex, int]:
    """Grid spec 'start:stop:count' (complex 're,im' fields) or real 'a,b,n'."""
    if spec.count(":") == 2:
        s_start, s_stop, s_count = spec.split(":")
        start, stop = parse_complex(s_start), parse_complex(s_stop)
    elif spec.count(",") == 2:
        s_start, s_stop, s_count = spec.split(",")
        try:
            start, stop = complex(float(s_start)), complex(float(s_stop))
        except ValueError:
            raise CliError(f"cannot parse grid endpoints in {spec!r}") from None
    else:
        raise CliError(f"grid spec {spec!r} needs start:stop:count (or real a,b,n)")
    try:
        count = int(s_count)
    except ValueError:
        raise CliError(f"grid count in {spec!r} is not an integer") from None
    if count < 1:
        raise CliError("grid count must be >= 1")
    return start, stop, count


def _read_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise CliError(f"config line without '=': {line!r}")
                key, _, val = line.partition("=")
                values[key.strip()] = val.strip()
    except OSError as exc:
        raise CliError(f"cannot read config file: {exc}") from exc
    return values


def _c2pair(x: complex) -> list[float]:
    return [float(x.real), float(x.imag)]


def report_payload(r: IdentityReport) -> dict:
    worst = None
    if r.worst_sample is not None:
        params, z, n = r.worst_sample
        worst = {
            "residual": r.worst_residual,
            "params": {
                "alpha": _c2pair(complex(params.alpha)),
                "beta": _c2pair(complex(params.beta)),
                "gamma": _c2pair(complex(params.gamma)),
            },
            "z": _c2pair(z),
            "n": n,
        }
    return {
        "identity": r.identity_id,
        "seed": r.seed,
        "tolerance": r.tolerance,
        "samples": {
            "requested": r.samples_requested,
            "run": r.run,
            "passed": r.passed,
            "skipped": r.skipped_constraint,
        },
        "worst": worst,
    }


def _reports_json(reports: list[IdentityReport]) -> str:
    payload = [report_payload(r) for r in reports]
    body = payload[0] if len(payload) == 1 else payload
    return json.dumps(body, sort_keys=True, indent=1) + "\n"


_CSV_FIELDS = (
    "identity",
    "seed",
    "tolerance",
    "requested",
    "run",
    "passed",
    "skipped",
    "worst_residual",
    "alpha_re",
    "alpha_im",
    "beta_re",
    "beta_im",
    "gamma_re",
    "gamma_im",
    "z_re",
    "z_im",
    "n",
)


def _reports_csv(reports: list[IdentityReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_FIELDS)
    for r in reports:
        params, z, n = r.worst_sample
        writer.writerow(
            [
                r.identity_id,
                r.seed,
                repr(r.tolerance),
                r.samples_requested,
                r.run,
                r.passed,
                r.skipped_constraint,
                repr(r.worst_residual),
                repr(complex(params.alpha).real),
                repr(complex(params.alpha).imag),
                repr(complex(params.beta).real),
                repr(complex(params.beta).imag),
                repr(complex(params.gamma).real),
                repr(complex(params.gamma).imag),
                repr(z.real),
                repr(z.imag),
                n,
            ]
        )
    return buf.getvalue()


def _reports_text(reports: list[IdentityReport]) -> str:
    lines = []
    for r in reports:
        status = "pass" if r.failed == 0 else "FAIL"
        lines.append(
            f"{r.identity_id}: {status} run={r.run} passed={r.passed} "
            f"skipped={r.skipped_constraint} worst_residual={r.worst_residual:.3e} "
            f"tol={r.tolerance:.1e} seed={r.seed}"
        )
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_eval(args) -> int:
    try:
        params = JacobiParams(
            parse_complex(args.alpha), parse_complex(args.beta), parse_complex(args.gamma)
        )
        z = parse_complex(args.z)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(USAGE_HINT, file=sys.stderr)
        return 2
    rep = Representation.AUTO if args.rep == "auto" else Representation(int(args.rep))
    fn = jacobi_p if args.kind == "P" else jacobi_q
    try:
        result = fn(params, z, rep)
    except JacobiFnError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(f"value = {result.value.real!r}{result.value.imag:+}j")
    print(f"abs_error_estimate = {result.abs_error_estimate!r}")
    print(f"representation = {result.provenance}")
    return 0


def cmd_table(args) -> int:
    try:
        params = JacobiParams(
            parse_complex(args.alpha), parse_complex(args.beta), parse_complex(args.gamma)
        )
        start, stop, count = _parse_grid(args.z_grid)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(USAGE_HINT, file=sys.stderr)
        return 2
    fn = jacobi_p if args.kind == "P" else jacobi_q
    if count == 1:
        grid = [start]
    else:
        step = (stop - start) / (count - 1)
        grid = [start + k * step for k in range(count)]

    rows = []
    for z in grid:
        try:
            res = fn(params, z)
        except JacobiFnError as exc:
            print(f"{type(exc).__name__} at z={z}: {exc}", file=sys.stderr)
            return 1
        rows.append((z, res))

    if args.format == "json":
        payload = [
            {
                "z": _c2pair(z),
                "value": _c2pair(res.value),
                "err_estimate": res.abs_error_estimate,
                "representation": res.provenance,
            }
            for z, res in rows
        ]
        text = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["z_re", "z_im", "value_re", "value_im", "err_estimate", "representation"]
        )
        for z, res in rows:
            writer.writerow(
                [
                    repr(z.real),
                    repr(z.imag),
                    repr(res.value.real),
                    repr(res.value.imag),
                    repr(res.abs_error_estimate),
                    res.provenance,
                ]
            )
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


def _build_run_config(args) -> RunConfig:
    file_vals = _read_config_file(args.config) if args.config else {}

    def pick(flag_val, key, cast, default):
        if flag_val is not None:
            return flag_val
        if key in file_vals:
            try:
                return cast(file_vals[key])
            except ValueError:
                raise CliError(f"config value for {key} unparseable: {file_vals[key]!r}")
        return default

    n_values = None
    if args.n_values is not None:
        try:
            n_values = tuple(int(p) for p in args.n_values.split(","))
        except ValueError:
            raise CliError(f"--n-values must be a comma list of integers")
    elif "n_values" in file_vals:
        n_values = tuple(int(p) for p in file_vals["n_values"].split(","))

    fmt = "text"
    path = None
    if args.json is not None:
        fmt, path = "json", args.json
    elif args.csv is not None:
        fmt, path = "csv", args.csv
    elif args.out is not None:
        fmt, path = pick(None, "format", str, "text"), args.out
    elif "format" in file_vals or "output_path" in file_vals:
        fmt = file_vals.get("format", "text").lower()
        path = file_vals.get("output_path")

    return RunConfig(
        tolerance=pick(args.tol, "tolerance", float, None),
        seed=pick(args.seed, "seed", int, 0),
        samples=pick(args.samples, "samples", int, 50),
        n_values=n_values,
        output_path=path,
        format=fmt,
    )


def cmd_verify(args) -> int:
    try:
        config = _build_run_config(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(USAGE_HINT, file=sys.stderr)
        return 2
    if args.all:
        idents = list(list_identities())
    else:
        if args.id is None:
            print("error: give --id or --all", file=sys.stderr)
            return 2
        if args.id not in list_identities():
            print(f"error: unknown identity {args.id!r}", file=sys.stderr)
            return 2
        idents = [args.id]

    threads = 1
    env = os.environ.get("JACOBI_FN_THREADS")
    if env:
        try:
            threads = max(1, int(env))
        except ValueError:
            print("error: JACOBI_FN_THREADS must be an integer", file=sys.stderr)
            return 2

    def run_one(ident: str) -> IdentityReport:
        return verify_identity(
            ident,
            samples=config.samples,
            seed=config.seed,
            tol=config.tolerance,
            n_values=config.n_values,
        )

    if threads > 1 and len(idents) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            by_id = dict(zip(idents, pool.map(run_one, idents)))
        reports = [by_id[i] for i in idents]
    else:
        reports = [run_one(i) for i in idents]

    if config.format == "json":
        text = _reports_json(reports)
    elif config.format == "csv":
        text = _reports_csv(reports)
    else:
        text = _reports_text(reports)
    _emit(text, config.output_path)
    return 0 if all(r.failed == 0 for r in reports) else 1


def cmd_selftest(args) -> int:
    try:
        failures = run_selftest(args.fixtures)
    except FixtureFormatError as exc:
        print(f"FixtureFormatError: {exc}", file=sys.stderr)
        return 2
    if failures:
        print(f"selftest: FAIL ({failures[0]})", file=sys.stderr)
        for line in failures[1:]:
            print(f"  also: {line}", file=sys.stderr)
        return 1
    print("selftest: all pinned samples reproduced")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobifn",
        description="Jacobi functions of the first and second kind, plus the identity verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate P or Q at one point")
    p_eval.add_argument("--kind", choices=("P", "Q"), required=True)
    p_eval.add_argument("--alpha", default="0")
    p_eval.add_argument("--beta", default="0")
    p_eval.add_argument("--gamma", default="0")
    p_eval.add_argument("--z", required=True)
    p_eval.add_argument("--rep", choices=("auto", "1", "2", "3", "4"), default="auto")
    p_eval.set_defaults(func=cmd_eval)

    p_tab = sub.add_parser("table", help="emit values on a z grid")
    p_tab.add_argument("--kind", choices=("P", "Q"), required=True)
    p_tab.add_argument("--alpha", default="0")
    p_tab.add_argument("--beta", default="0")
    p_tab.add_argument("--gamma", default="0")
    p_tab.add_argument("--z-grid", required=True, help="start:stop:count or real a,b,n")
    p_tab.add_argument("--format", choices=("csv", "json"), default="csv")
    p_tab.add_argument("--out", default=None)
    p_tab.set_defaults(func=cmd_table)

    p_ver = sub.add_parser("verify", help="run seeded identity verification")
    p_ver.add_argument("--id", default=None)
    p_ver.add_argument("--all", action="store_true")
    p_ver.add_argument("--samples", type=int, default=None)
    p_ver.add_argument("--seed", type=int, default=None)
    p_ver.add_argument("--tol", type=float, default=None)
    p_ver.add_argument("--n-values", default=None)
    p_ver.add_argument("--config", default=None)
    p_ver.add_argument("--json", default=None, metavar="PATH")
    p_ver.add_argument("--csv", default=None, metavar="PATH")
    p_ver.add_argument("--out", default=None, metavar="PATH")
    p_ver.set_defaults(func=cmd_verify)

    p_self = sub.add_parser("selftest", help="re-run the pinned fixtures")
    p_self.add_argument("--fixtures", default=None)
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through.
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except JacobiFnError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
