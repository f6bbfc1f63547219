"""Command-line front end: every library capability as a CSV or JSON table.

Exit status: 0 success, 1 ``--check`` mismatch, 2 usage error, 3 domain
error, 4 convergence failure.
"""
import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import asymptotics, cdh, quadrature
from .errors import DomainError, NoConvergence

COMMANDS = ("eval", "table", "asym", "converge", "ortho", "spectrum", "genfun-check")
COLUMNS = {
    "eval": ("n", "y", "value"),
    "table": ("y", "n", "value"),
    "asym": ("n", "y", "energy", "amplitude", "phase", "asymptotic"),
    "converge": ("n", "exact", "asymptotic", "amplitude", "phase", "env_error"),
    "ortho": ("m", "n", "integral", "bound"),
    "spectrum": ("channel", "level", "energy"),
    "genfun-check": ("y", "t", "mismatch"),
}
NEEDS = {
    "eval": ("n", "y"),
    "table": ("n", "y"),
    "asym": ("n", "y"),
    "converge": ("n", "y"),
    "ortho": ("n",),
    "spectrum": (),
    "genfun-check": ("y", "t"),
}

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN, EXIT_CONVERGENCE = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    mu: float
    a: float
    b: float
    n: list = field(default_factory=list)
    y: list = field(default_factory=list)
    t: list = field(default_factory=list)
    format: str = "csv"
    out: str = None
    tol: float = 1e-8
    check: str = None

    def echo(self):
        return {"command": self.command, "mu": self.mu, "a": self.a, "b": self.b,
                "n": self.n, "y": self.y, "t": self.t, "format": self.format, "tol": self.tol}


def _fmt(v):
    if isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    return f"{float(v):.15g}"


def _rows(cfg):
    cmd = cfg.command
    if cmd == "spectrum":
        params = cdh.CdhParams.relaxed(cfg.mu, cfg.a, cfg.b)
        return [(e.channel, e.level, e.energy) for e in asymptotics.bound_state_spectrum(params)]
    if cmd in ("eval", "table", "genfun-check"):
        params = cdh.CdhParams.relaxed(cfg.mu, cfg.a, cfg.b)
    else:
        params = cdh.CdhParams(cfg.mu, cfg.a, cfg.b)

    if cmd == "eval":
        return [(n, y, cdh.evaluate_direct(params, n, y)) for n in cfg.n for y in cfg.y]
    if cmd == "table":
        top = max(cfg.n)
        rows = []
        for y in cfg.y:
            values = cdh.evaluate_recurrence(params, top, y)
            rows.extend((y, n, float(values[n])) for n in range(top + 1))
        return rows
    if cmd == "asym":
        rows = []
        for n in cfg.n:
            for y in cfg.y:
                sd = asymptotics.scattering_data(params, y, n)
                rows.append((n, y, sd.energy, sd.amplitude, sd.phase,
                             asymptotics.asymptotic_value(params, n, y)))
        return rows
    if cmd == "converge":
        report = asymptotics.convergence_report(params, cfg.y[0], cfg.n)
        return [(r.n, r.exact, r.asymptotic, r.amplitude, r.phase, r.env_error)
                for r in report.rows]
    if cmd == "ortho":
        top = max(cfg.n)
        rows = []
        for n in range(top + 1):
            for m in range(n + 1):
                value = quadrature.orthogonality_check(params, m, n, tol=cfg.tol)
                rows.append((m, n, value, quadrature.orthogonality_bound(params, m, n)))
        return rows
    if cmd == "genfun-check":
        return [(y, t, cdh.generating_function_check(params, y, [t]))
                for y in cfg.y for t in cfg.t]
    raise DomainError(f"unknown command {cmd!r}")


def render(cfg, rows):
    header = COLUMNS[cfg.command]
    if cfg.format == "json":
        records = [{k: (v if isinstance(v, (str, int)) else float(_fmt(v)))
                    for k, v in zip(header, row)} for row in rows]
        return json.dumps({"config": cfg.echo(), "rows": records}, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def read_rows(text, fmt):
    """Parse an emitted report back to ``(header, rows)`` of strings."""
    if fmt == "json":
        doc = json.loads(text)
        records = doc["rows"]
        header = tuple(records[0].keys()) if records else ()
        return header, [tuple(_fmt(r[k]) for k in header) for r in records]
    reader = csv.reader(io.StringIO(text, newline=""))
    lines = list(reader)
    if not lines:
        return (), []
    return tuple(lines[0]), [tuple(r) for r in lines[1:]]


def check(cfg, rows, text):
    """Diff a previously written report against freshly computed rows."""
    header, got = read_rows(text, cfg.format)
    _, want = read_rows(render(cfg, rows), cfg.format)
    diffs = []
    if cfg.format == "csv" and header != COLUMNS[cfg.command]:
        diffs.append(f"header {header} != {COLUMNS[cfg.command]}")
    if len(got) != len(want):
        diffs.append(f"row count {len(got)} != {len(want)}")
    for i, (g, w) in enumerate(zip(got, want)):
        if g != w:
            diffs.append(f"row {i + 1}: {g} != {w}")
    return diffs


def run(cfg):
    """Execute a configuration; returns ``(exit_status, output_text, message)``."""
    try:
        rows = _rows(cfg)
    except NoConvergence as exc:
        return EXIT_CONVERGENCE, "", f"convergence failure: {exc}"
    except (DomainError, OverflowError) as exc:
        return EXIT_DOMAIN, "", f"domain error: {exc}"
    if cfg.check:
        with open(cfg.check, newline="") as fh:
            diffs = check(cfg, rows, fh.read())
        if diffs:
            return EXIT_MISMATCH, "", "\n".join(diffs)
        return EXIT_OK, f"check: OK ({len(rows)} rows)\n", ""
    return EXIT_OK, render(cfg, rows), ""


def _float_list(flag):
    def parse(text):
        try:
            return [float(v) for v in text.split(",") if v.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects a real or comma list, got {text!r}")
    return parse


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--n expects an integer or comma list, got {text!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mu", type=float, required=True)
    common.add_argument("--a", type=float, required=True)
    common.add_argument("--b", type=float, required=True)
    common.add_argument("--y", type=_float_list("--y"), default=[])
    common.add_argument("--n", type=_int_list, default=[])
    common.add_argument("--t", type=_float_list("--t"), default=[])
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--tol", type=float, default=1e-8, help="quadrature tolerance")
    common.add_argument("--check", metavar="PATH", default=None,
                        help="re-read a report written earlier and diff it against a fresh run")

    parser = argparse.ArgumentParser(
        prog="dualhahn",
        description="Continuous dual Hahn polynomials, weight and large-degree asymptotics.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "eval": "polynomial values from the terminating 3F2 sum",
        "table": "degree table 0..max(--n) from the three-term recurrence",
        "asym": "amplitude, phase shift and asymptotic value",
        "converge": "exact vs asymptotic values at a single --y",
        "ortho": "orthogonality integrals for all 0 <= m <= n <= max(--n)",
        "spectrum": "bound-state energies from negative parameters",
        "genfun-check": "generating-function partial-sum mismatch",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def parse_config(argv):
    parser = build_parser()
    ns = parser.parse_args(argv)
    for flag in NEEDS[ns.command]:
        if not getattr(ns, flag):
            parser.error(f"--{flag} is required for {ns.command}")
    for flag in ("n", "y", "t"):
        values = getattr(ns, flag)
        if any(b <= a for a, b in zip(values, values[1:])):
            parser.error(f"--{flag} must be strictly ascending")
    if ns.command == "converge" and len(ns.y) != 1:
        parser.error("--y must be a single value for converge")
    if not 1e-12 <= ns.tol <= 1e-4:
        parser.error("--tol must lie in [1e-12, 1e-4]")
    return RunConfig(command=ns.command, mu=ns.mu, a=ns.a, b=ns.b, n=ns.n, y=ns.y, t=ns.t,
                     format=ns.format, out=ns.out, tol=ns.tol, check=ns.check)


def main(argv=None):
    cfg = parse_config(argv)
    status, text, message = run(cfg)
    if message:
        print(message, file=sys.stderr)
    if text:
        if cfg.out and not cfg.check:
            with open(cfg.out, "w", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
