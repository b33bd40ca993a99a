"""Command-line front end: ``cftv {list, verify, sample, table}``.

Exit codes: 0 success, 1 a check failed, 2 configuration error.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import __version__
from . import closed_forms as cf
from .ensembles import (
    ENSEMBLES,
    SeededRng,
    sample_boundary_truncation,
    sample_fermionic_radial,
    sample_haar_unitary,
    sample_jacobi_radial,
    sample_special_unitary,
    sample_truncation_radial,
    truncate_block,
)
from .identities import DEFAULT_SEED, REGISTRY, CheckConfig, CheckResult, ConfigError, run_suite
from .montecarlo import default_samples
from .partitions import Partition
from .symfuncs import exp_coeff, hua_coeff_bosonic, hua_coeff_fermionic, weyl_dimension

REPORT_VERSION = 1
TABLE_MAX_WEIGHT = 8
TABLE_MAX_M = 4
TABLES = ("weyl", "selberg-b", "selberg-f", "hua-b", "hua-f", "exp-coeff")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

@dataclass
class Report:
    config: dict
    results: list[CheckResult]
    timestamp: str = field(default_factory=lambda: _dt.datetime.now(_dt.timezone.utc).isoformat())
    version: int = REPORT_VERSION
    tool_version: str = __version__

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
            "config": self.config,
            "results": [r.to_dict() for r in self.results],
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("version") != REPORT_VERSION:
            raise ValueError(f"unsupported report version {d.get('version')!r}")
        return cls(d["config"], [CheckResult.from_dict(r) for r in d["results"]],
                   d["timestamp"], d["version"], d.get("tool_version", __version__))

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return repr(v)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_list(args) -> int:
    width = max(len(n) for n in REGISTRY)
    for name in sorted(REGISTRY):
        info = REGISTRY[name]
        print(f"{name:<{width}}  [{info.topic}]  {info.regime}")
    return 0


def cmd_verify(args) -> int:
    unknown = [n for n in args.names if n not in REGISTRY]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; see `cftv list`")
    overrides = {"seed": args.seed, "z_threshold": args.z,
                 "n_samples": args.samples if args.samples is not None else default_samples()}
    for key in ("N", "n", "m"):
        if getattr(args, key) is not None:
            overrides[key] = getattr(args, key)
    if args.lam is not None:
        overrides["lam"] = args.lam
    if args.variant is not None:
        overrides["variant"] = args.variant
    names = args.names or sorted(REGISTRY)
    try:
        results = run_suite(names, overrides)
    except ConfigError as exc:
        raise UsageError(str(exc)) from exc
    config = CheckConfig(**overrides).to_dict()
    config["checks"] = names
    report = Report(config, results)
    _write(report.to_json() + "\n", args.out)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} seeds={r.config.get('seeds')}", file=sys.stderr)
    return 0 if report.passed else 1


def _sample_array(args) -> tuple[np.ndarray, bool]:
    """Returns (samples with a leading count axis, is_radial)."""
    rng = SeededRng(args.seed)
    N, n, m, k = args.N, args.n, args.m, args.count
    name = args.ensemble
    if N is None and name not in ("jacobi-radial",):
        raise ConfigError("--N is required")
    try:
        if name == "haar":
            return sample_haar_unitary(N, rng, k), False
        if name == "su":
            return sample_special_unitary(N, rng, k), False
        if name == "truncation":
            n, m = n or N, m or 1
            if args.matrix:
                return truncate_block(sample_haar_unitary(N, rng, k), n, m), False
            return sample_truncation_radial(N, n, m, rng, k), True
        if name == "jacobi-radial":
            if args.a is None or args.b is None or m is None:
                raise ConfigError("jacobi-radial needs --a, --b and --m")
            return sample_jacobi_radial(args.a, args.b, m, rng, k), True
        if name == "fermionic":
            return sample_fermionic_radial(N, n or 1, m or 1, rng, k), True
        if name == "boundary":
            if m is None:
                raise ConfigError("boundary needs --m")
            return sample_boundary_truncation(N, m, rng, k), False
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    raise ConfigError(f"unknown ensemble {name!r}")


def cmd_sample(args) -> int:
    try:
        data, radial = _sample_array(args)
    except ConfigError as exc:
        raise UsageError(str(exc)) from exc
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    flat = data.reshape(data.shape[0], -1)
    if radial:
        writer.writerow([f"x{i + 1}" for i in range(flat.shape[1])])
        for row in flat:
            writer.writerow([repr(float(v)) for v in row])
    else:
        rows, cols = data.shape[-2:]
        header = []
        for i in range(rows):
            for j in range(cols):
                header += [f"re_{i + 1}_{j + 1}", f"im_{i + 1}_{j + 1}"]
        writer.writerow(header)
        for row in flat:
            cells = []
            for z in row:
                cells += [repr(float(z.real)), repr(float(z.imag))]
            writer.writerow(cells)
    _write(buf.getvalue(), args.out)
    return 0


def _table_value(args, lam: Partition):
    kind = args.table
    if kind == "weyl":
        return weyl_dimension(lam, args.n)
    if kind == "exp-coeff":
        return exp_coeff(lam)
    if kind == "hua-b":
        return hua_coeff_bosonic(lam, args.a, args.m)
    if kind == "hua-f":
        return hua_coeff_fermionic(lam, args.a, args.m)
    if kind == "selberg-b":
        return cf.schur_selberg_bosonic(lam, args.p, args.q, args.m).value
    if kind == "selberg-f":
        return cf.schur_selberg_fermionic(lam, args.p, args.q, args.m).value
    raise ConfigError(f"unknown table {kind!r}")


def cmd_table(args) -> int:
    lam = args.lam if args.lam is not None else Partition(())
    if lam.weight > TABLE_MAX_WEIGHT:
        raise UsageError(f"|lambda| = {lam.weight} exceeds the limit {TABLE_MAX_WEIGHT}")
    if args.m is not None and args.m > TABLE_MAX_M:
        raise UsageError(f"m = {args.m} exceeds the limit {TABLE_MAX_M}")
    needs = {"weyl": ("n",), "hua-b": ("a", "m"), "hua-f": ("a", "m"),
             "selberg-b": ("p", "q", "m"), "selberg-f": ("p", "q", "m"), "exp-coeff": ()}
    missing = [k for k in needs[args.table] if getattr(args, k) is None]
    if missing:
        raise UsageError(f"table {args.table} needs --{', --'.join(missing)}")
    if args.m is not None and lam.length > args.m and args.table != "exp-coeff":
        value = Fraction(0)
    else:
        try:
            value = _table_value(args, lam)
        except (ValueError, ConfigError) as exc:
            raise UsageError(str(exc)) from exc
    if args.format == "json":
        text = json.dumps({"table": args.table, "lambda": lam.text(), "value": _fmt(value)}) + "\n"
    else:
        text = _fmt(value) + "\n"
    _write(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _number(text: str):
    try:
        return Fraction(text)
    except ValueError:
        return float(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cftv", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cftv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list registered checks")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", help="run checks and write a JSON report")
    p.add_argument("names", nargs="*", help="check names (default: all)")
    p.add_argument("--N", type=_positive)
    p.add_argument("--n", type=_positive)
    p.add_argument("--m", type=_positive)
    p.add_argument("--lambda", dest="lam", type=_partition, help='partition such as "2,1"')
    p.add_argument("--variant")
    p.add_argument("--samples", type=_positive)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--z", type=float, default=4.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="write ensemble samples as CSV")
    p.add_argument("ensemble", choices=ENSEMBLES)
    p.add_argument("--N", type=_positive)
    p.add_argument("--n", type=_positive)
    p.add_argument("--m", type=_positive)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--matrix", action="store_true",
                   help="truncation: emit the n x m block instead of the eigenvalues of Q*Q")
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("table", help="print an exact coefficient")
    p.add_argument("table", choices=TABLES)
    p.add_argument("--lambda", dest="lam", type=_partition)
    p.add_argument("--n", type=_positive)
    p.add_argument("--m", type=_positive)
    p.add_argument("--p", type=_number)
    p.add_argument("--q", type=_number)
    p.add_argument("--a", type=_number)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cftv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
