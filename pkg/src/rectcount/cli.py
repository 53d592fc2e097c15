"""Command-line front end: exact tables, fits, diagnostics and verification.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import __version__, asympt, checks, mary2, oracle, qpfit, restrict2, tile2
from .partcore import euler_p_table, nuclear_q, two_colored_q2_table

SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


# --------------------------------------------------------------------------
# records
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class OutputRecord:
    """A named table of decimal strings; exact counts never pass through floats."""

    name: str
    args: dict
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "args", {str(k): str(v) for k, v in self.args.items()})
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "rows", tuple(tuple(str(c) for c in r) for r in self.rows))
        object.__setattr__(self, "notes", tuple(self.notes))
        if any(len(r) != len(self.columns) for r in self.rows):
            raise ValueError("row width does not match the header")


def to_json(rec: OutputRecord) -> str:
    payload = {"name": rec.name, "args": rec.args, "columns": list(rec.columns),
               "rows": [list(r) for r in rec.rows], "notes": list(rec.notes)}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def from_json(text: str) -> OutputRecord:
    d = json.loads(text)
    return OutputRecord(d["name"], d["args"], tuple(d["columns"]),
                        tuple(tuple(r) for r in d["rows"]), tuple(d.get("notes", ())))


def to_csv(rec: OutputRecord) -> str:
    buf = io.StringIO()
    buf.write(f"# name: {rec.name}\n")
    buf.write(f"# args: {json.dumps(rec.args, sort_keys=True)}\n")
    for note in rec.notes:
        buf.write(f"# note: {note}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rec.columns)
    writer.writerows(rec.rows)
    return buf.getvalue()


def from_csv(text: str) -> OutputRecord:
    name, args, notes = "", {}, []
    pos = 0
    while text.startswith("# ", pos):
        end = text.index("\n", pos)
        line = text[pos:end]
        if line.startswith("# name: "):
            name = line[len("# name: "):]
        elif line.startswith("# args: "):
            args = json.loads(line[len("# args: "):])
        elif line.startswith("# note: "):
            notes.append(line[len("# note: "):])
        pos = end + 1
    rows = list(csv.reader(io.StringIO(text[pos:], newline="")))
    return OutputRecord(name, args, tuple(rows[0]), tuple(tuple(r) for r in rows[1:]), tuple(notes))


def to_table(rec: OutputRecord) -> str:
    widths = [max([len(c)] + [len(r[i]) for r in rec.rows]) for i, c in enumerate(rec.columns)]
    lines = [f"{rec.name} " + " ".join(f"{k}={v}" for k, v in sorted(rec.args.items()))]
    lines += list(rec.notes)
    lines.append("  ".join(c.rjust(w) for c, w in zip(rec.columns, widths)))
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rec.rows]
    return "\n".join(lines) + "\n"


FORMATTERS = {"table": to_table, "csv": to_csv, "json": to_json}


# --------------------------------------------------------------------------
# cache
# --------------------------------------------------------------------------

@dataclass
class CacheEntry:
    schema_version: int
    name: str
    args: dict
    values: list[str]
    fingerprint: str = field(default="")


def _package_digest() -> str:
    h = hashlib.sha256(__version__.encode())
    for path in sorted(Path(__file__).parent.glob("*.py")):
        h.update(path.name.encode())
        h.update(path.read_bytes())
    return h.hexdigest()


_DIGEST: list[str] = []


def fingerprint(fn: Callable) -> str:
    """Changes with the generator's name or any source file of the package."""
    if not _DIGEST:
        _DIGEST.append(_package_digest())
    return hashlib.sha256(f"{_DIGEST[0]}\0{fn.__qualname__}".encode()).hexdigest()[:32]


class SequenceCache:
    """One versioned JSON file per (sequence, args)."""

    def __init__(self, directory: str | os.PathLike | None):
        self.directory = Path(directory) if directory is not None else None

    @staticmethod
    def resolve(flag: str | None) -> "SequenceCache":
        return SequenceCache(flag or os.environ.get("RECTCOUNT_CACHE") or ".cache")

    def path(self, name: str, args: dict) -> Path:
        digest = hashlib.sha256(json.dumps(args, sort_keys=True).encode()).hexdigest()[:16]
        return self.directory / f"{name}-{digest}.json"

    def load(self, name: str, args: dict, fn: Callable) -> list[int] | None:
        if self.directory is None:
            return None
        path = self.path(name, args)
        try:
            entry = CacheEntry(**json.loads(path.read_text()))
        except (OSError, ValueError, TypeError):
            return None
        if (entry.schema_version != SCHEMA_VERSION or entry.name != name
                or entry.args != args or entry.fingerprint != fingerprint(fn)):
            return None
        return [int(v) for v in entry.values]

    def store(self, name: str, args: dict, fn: Callable, values: Sequence[int]) -> None:
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        entry = CacheEntry(SCHEMA_VERSION, name, args, [str(v) for v in values], fingerprint(fn))
        tmp = self.path(name, args).with_suffix(".tmp")
        tmp.write_text(json.dumps(asdict(entry)))
        tmp.replace(self.path(name, args))

    def table(self, name: str, args: dict, fn: Callable[..., list[int]], n_max: int, **kw) -> list[int]:
        """Cached prefix [0..n_max]; a longer cached run is reused."""
        key = {k: str(v) for k, v in args.items()}
        hit = self.load(name, key, fn)
        if hit is not None and len(hit) > n_max:
            return hit[: n_max + 1]
        values = list(fn(n_max, **kw))
        self.store(name, key, fn, values)
        return values


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------

def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _need_long(args, cond: bool, what: str):
    if cond and not args.long_running:
        raise UsageError(f"{what} requires --long-running")


def _rows(values: Sequence[int], start: int = 0):
    return [(str(n), str(values[n])) for n in range(start, len(values))]


# --------------------------------------------------------------------------
# subcommands; each returns (record, exit code)
# --------------------------------------------------------------------------

def cmd_p2(args, cache):
    _need_long(args, args.max_n > 30, "p2 beyond n = 30")
    values = cache.table("p2", {}, tile2.p2_table, args.max_n, jobs=args.jobs)
    return OutputRecord("p2", {"max_n": args.max_n}, ("n", "value"), _rows(values)), 0


def cmd_square(args, cache):
    _need_long(args, args.max_n > 4, "square beyond n = 4")
    rows = []
    for n in range(1, args.max_n + 1):
        value = oracle.count_multisets(n, n, override=n * n > oracle.MAX_CELLS, jobs=args.jobs)
        rows.append((str(n), str(value)))
    return OutputRecord("square", {"max_n": args.max_n}, ("n", "value"), rows), 0


def cmd_restricted(args, cache):
    key = {"k": args.k, "l": args.l}
    values = cache.table("p_kl", key, lambda n_max, k, l: restrict2.p_kl_table(k, l, n_max),
                         args.max_n, k=args.k, l=args.l)
    if args.k <= 3 and args.l <= 3:
        rows, failed = [], False
        for n, v in enumerate(values):
            pred = restrict2.closed_form_table1(args.k, args.l, n) if n >= 1 else v
            failed |= pred != v
            rows.append((str(n), str(v), str(pred), str(pred == v).lower()))
        rec = OutputRecord("p_kl", {**key, "max_n": args.max_n},
                           ("n", "value", "predicted", "pass"), rows)
        return rec, int(failed)
    return OutputRecord("p_kl", {**key, "max_n": args.max_n}, ("n", "value"), _rows(values)), 0


def cmd_mary(args, cache):
    key = {"m": args.m, "i": args.i, "j": args.j}
    values = cache.table("b_ij", key, lambda n_max, m, i, j: mary2.b_ij_table(m, i, j, n_max),
                         args.max_n, m=args.m, i=args.i, j=args.j)
    if args.kind == "count":
        return OutputRecord("b_ij", {**key, "max_n": args.max_n}, ("n", "value"), _rows(values)), 0
    if args.kind == "alkauskas":
        values = mary2.b_m_table(args.m, args.max_n)
    elif args.kind == "b_i0":
        values = mary2.b_i0_table(args.m, args.i, args.max_n)
    rows, failed = [], False
    for n, v in enumerate(values):
        pred = mary2.congruence_predict(args.kind, args.m, n, args.i, args.j)
        ok = v % args.m == pred
        failed |= not ok
        rows.append((str(n), str(v), str(pred), str(v % args.m), str(ok).lower()))
    rec = OutputRecord(f"congruence_{args.kind}", {**key, "max_n": args.max_n},
                       ("n", "value", "predicted", "residue", "pass"), rows)
    return rec, int(failed)


def cmd_fit(args, cache):
    _need_long(args, args.k >= 7, "fitting k >= 7")
    basis = qpfit.build_ansatz(args.k)
    span = len(basis) + (2 * basis.period if args.slack is None else args.slack)
    terms = args.terms
    if terms is None:
        start = qpfit.REFERENCE_P_K1.get(args.k, (0, None))[0]
        terms = max(start + span + 20, 80)
    values = cache.table("p_k1", {"k": args.k},
                         lambda n_max, k: restrict2.p_k1_table(k, n_max, args.jobs),
                         terms - 1, k=args.k)
    fit, start = qpfit.fit_min_start(values, args.k, args.slack)
    qp = fit.canonical
    notes = [f"N_k = {start}",
             f"window = [{fit.start}, {fit.end}], holdout through n = {terms - 1}",
             "formula: " + qpfit.format_brackets(qp, args.k)]
    code = 0
    if args.k in qpfit.REFERENCE_P_K1:
        ref_start = qpfit.REFERENCE_P_K1[args.k][0]
        same = qp.same_function(qpfit.reference_qp(args.k))
        notes.append(f"reference formula match: {str(same).lower()}; reference N_k = {ref_start}")
        code = int(not same or start != ref_start)
    width = qp.degree + 1
    rows = [(str(rho),) + tuple(_frac(c) for c in poly + (Fraction(0),) * (width - len(poly)))
            for rho, poly in enumerate(qp.polys)]
    cols = ("residue",) + tuple(f"c{i}" for i in range(width))
    rec = OutputRecord("fit_p_k1", {"k": args.k, "terms": terms, "period": qp.period}, cols, rows, tuple(notes))
    return rec, code


_BENFORD_SOURCES = {
    "p": lambda n: euler_p_table(n),
    "p2": lambda n: tile2.p2_table(n),
    "T": lambda n: tile2.t_count_table(n),
    "q2": lambda n: two_colored_q2_table(n),
}


def cmd_benford(args, cache):
    if args.sequence == "p2":
        _need_long(args, args.max_n > 30, "p2 beyond n = 30")
    values = _BENFORD_SOURCES[args.sequence](args.max_n)[1:]
    report = asympt.benford_report(values, args.base, args.prefix)
    row = (report.prefix, repr(report.observed_frequency), repr(report.expected),
           repr(report.distance), str(report.sample_size))
    rec = OutputRecord("benford", {"sequence": args.sequence, "max_n": args.max_n, "base": args.base},
                       ("prefix", "observed", "expected", "distance", "sample_size"), [row])
    return rec, 0


_EXACT = {
    "HR_P": lambda n: euler_p_table(n)[n],
    "NUCLEAR": nuclear_q,
    "P_TILDE": tile2.p_tilde,
    "P2": tile2.p2,
    "Q2": lambda n: two_colored_q2_table(n)[n],
    "T": tile2.t_count,
}


def cmd_asym(args, cache):
    spec = asympt.PRESETS[args.preset]
    rows = []
    for n in args.n:
        if args.preset in ("P2", "P_TILDE"):
            _need_long(args, n > 30, f"{args.preset} exact values beyond n = 30")
        exact = _EXACT[args.preset](n)
        log_ratio = asympt.log_asym(spec, n) - asympt.log_int(exact)
        rows.append((str(n), str(exact), repr(asympt.eval_asym(spec, n)), repr(math.exp(log_ratio))))
    rec = OutputRecord("asym", {"preset": args.preset}, ("n", "exact", "asymptotic", "ratio"), rows)
    return rec, 0


def cmd_oracle(args, cache):
    override = args.long_running
    if args.kind in ("S", "T"):
        value = oracle.count_symmetric_multisets(args.n, args.kind == "T", override)
        m = 2
    else:
        allow = oracle.allow_all if args.kind == "all" else oracle.allow_kl(args.k, args.l)
        value = oracle.count_multisets(args.m, args.n, allow, override, args.jobs)
        m = args.m
    if args.dump:
        allow = oracle.allow_all if args.kind != "kl" else oracle.allow_kl(args.k, args.l)
        with open(args.dump, "w") as fh:
            for g in oracle.enumerate_tilings(m, args.n, allow, override):
                fh.write(g.dump() + "\n")
    rec = OutputRecord("oracle", {"m": m, "n": args.n, "kind": args.kind}, ("m", "n", "value"),
                       [(str(m), str(args.n), str(value))])
    return rec, 0


def cmd_verify(args, cache):
    try:
        results = checks.run_suite(args.suite, args.long_running)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    rows = [(r.name, "pass" if r.ok else "FAIL", r.detail) for r in results]
    rec = OutputRecord("verify", {"suite": args.suite}, ("check", "status", "detail"), rows)
    return rec, int(not all(r.ok for r in results))


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=sorted(FORMATTERS), default="table")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--long-running", action="store_true")

    parser = argparse.ArgumentParser(prog="rectcount", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("p2", parents=[common], help="p(2,n) table")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=cmd_p2)

    p = sub.add_parser("square", parents=[common], help="p(n,n) by enumeration")
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("restricted", parents=[common], help="p_{k,l}(2,n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(func=cmd_restricted)

    p = sub.add_parser("mary", parents=[common], help="m-ary counts and congruences")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--max-n", type=int, default=50)
    p.add_argument("--kind", choices=("count",) + mary2.KINDS, default="count")
    p.set_defaults(func=cmd_mary)

    p = sub.add_parser("fit", parents=[common], help="quasi-polynomial fit of p_{k,1}(2,n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--slack", type=int, default=None)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("benford", parents=[common], help="leading-digit statistics")
    p.add_argument("--sequence", choices=sorted(_BENFORD_SOURCES), default="p")
    p.add_argument("--max-n", type=int, default=1000)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--prefix", default="1")
    p.set_defaults(func=cmd_benford)

    p = sub.add_parser("asym", parents=[common], help="asymptotic formula vs exact value")
    p.add_argument("--preset", choices=sorted(asympt.PRESETS), default="T")
    p.add_argument("--n", type=int, nargs="+", default=[10, 100, 1000])
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("oracle", parents=[common], help="brute-force tiling enumeration")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("all", "kl", "S", "T"), default="all")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--dump", default=None, help="write every tiling, one per line")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="run invariant sweeps")
    p.add_argument("--suite", default="core")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    cache = SequenceCache.resolve(args.cache_dir)
    try:
        record, code = args.func(args, cache)
    except (UsageError, oracle.SizeGuardError, qpfit.NoFitFound, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1 if isinstance(exc, qpfit.NoFitFound) else 2
    out.write(FORMATTERS[args.format](record))
    return code


def main() -> None:
    sys.exit(run())
