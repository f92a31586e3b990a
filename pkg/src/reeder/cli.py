"""
Command line driver: solve chains, compare with closed forms and oracles, run
the identity suites, dump rows.

Exit status is 0 when every check passes, 1 when any check fails and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .laurent import LaurentPoly2, RationalFn
from .oracles import MAX_RANK
from .rootsys import build_root_system, is_dominant, small_weights
from .stembridge import suites
from .stembridge.rows import CTable, b_rows, c_rows, minuscule_row, qm_row

log = logging.getLogger("reeder")

MODES = ("recurrence", "closedform", "oracle", "all")


class UsageError(Exception):
    pass


@dataclass
class VerificationReport:
    family: str
    rank: int
    weight: object
    check: str
    status: str
    lhs: object = None
    rhs: object = None
    ms: float = 0.0

    def to_json(self) -> dict:
        return asdict(self)

    def plain(self) -> str:
        line = f"{self.status.upper():7} {self.family}{self.rank} {self.check} {self.weight} ({self.ms:.0f} ms)"
        if self.status == "fail":
            line += f"\n        lhs = {self.lhs}\n        rhs = {self.rhs}"
        return line


def _ser(v):
    if isinstance(v, (LaurentPoly2, RationalFn)):
        return v.to_json()
    if v is None or isinstance(v, (int, str, float)):
        return v
    if isinstance(v, (tuple, list)):
        return [_ser(x) for x in v]
    return str(v)


def _reports(checks, started: float):
    """Turn Check records into reports; ms is the time since the previous record."""
    last = started
    for c in checks:
        now = time.perf_counter()
        failed = c.ok is False
        status = "skipped" if c.ok is None else "fail" if failed else "pass"
        yield VerificationReport(
            c.family, c.rank, _ser(c.weight), c.name, status,
            _ser(c.lhs) if failed else None, _ser(c.rhs) if failed else None,
            round((now - last) * 1000, 3),
        )
        last = now


# --- cache ----------------------------------------------------------------------------


def _cache_path(cache_dir, family: str, n: int):
    if not cache_dir:
        return None
    return Path(cache_dir) / f"{family}{n}.json"


def _rows(family: str, n: int):
    return list(b_rows(n) if family == "B" else c_rows(n, True))


def _table_valid(table: CTable, rows) -> bool:
    try:
        return all(r.specialize().evaluate(table.entries).is_zero() for r in rows)
    except KeyError:
        return False


def solved_table(family: str, n: int, cache_dir=None) -> CTable:
    """Specialized table for the chain; a cached copy is used only if it satisfies every row."""
    rows = _rows(family, n)
    path = _cache_path(cache_dir, family, n)
    if path is not None and path.exists():
        try:
            obj = json.loads(path.read_text())
            table = CTable.from_json(obj["table"])
            if _table_valid(table, rows):
                log.info("using cached table %s", path)
                return table
            log.warning("cached table %s does not satisfy its rows; recomputing", path)
        except (ValueError, KeyError) as exc:
            log.warning("unreadable cache %s: %s", path, exc)
    table = suites.b_solved(n) if family == "B" else suites.c_solved(n)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({
            "family": family,
            "rank": n,
            "rows": [r.to_json() for r in rows],
            "table": table.to_json(),
        }))
    return table


# --- commands --------------------------------------------------------------------------


def _ranks(args):
    lo = args.rank
    hi = args.rank_max if args.rank_max is not None else lo
    if lo < 2 or hi < lo:
        raise UsageError(f"bad rank range {lo}..{hi}")
    return range(lo, hi + 1)


def _verify_checks(family: str, n: int, mode: str, args):
    if mode in ("recurrence", "all"):
        table = solved_table(family, n, args.cache_dir)
        if family == "B":
            yield from suites.b_chain_checks(n, table)
        else:
            yield from suites.c_chain_checks(n, table)
    if mode in ("closedform", "all"):
        yield from (suites.b_closedform_checks(n) if family == "B" else suites.c_closedform_checks(n))
    if mode in ("oracle", "all"):
        if n > MAX_RANK and not args.force:
            if mode == "oracle":
                raise UsageError(f"oracle mode is limited to rank {MAX_RANK}; use --force")
            yield suites.Check("oracle", family, n, None, ok=None)
            return
        yield from suites.oracle_checks(family, n, force=args.force)


def cmd_verify(args):
    checks = []
    for n in _ranks(args):
        checks.append(_verify_checks(args.family, n, args.mode, args))
    return _chain(checks)


def cmd_identities(args):
    n_max = args.rank_max if args.rank_max is not None else args.rank
    if n_max < 2:
        raise UsageError("identities need rank-max >= 2")
    if args.family == "B":
        return _chain([suites.b_identity_checks(n_max), suites.counting_checks(min(n_max, 6))])
    return _chain([suites.c_identity_checks(n_max)])


def _parse_weight(text: str, n: int) -> tuple:
    try:
        mu = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"weight {text!r} is not a comma separated list of integers") from None
    if len(mu) != n:
        raise UsageError(f"weight {mu} has {len(mu)} coordinates, rank is {n}")
    return mu


def cmd_dump(args):
    n = args.rank
    rs = build_root_system(args.family, n)
    if args.weight is None:
        raise UsageError("dump needs --weight")
    lam = _parse_weight(args.weight, n)
    if not is_dominant(lam) or (any(lam) and lam not in small_weights(rs)):
        raise UsageError(f"{lam} is not a small dominant weight of {args.family}{n}")
    if args.table:
        table = solved_table(args.family, n, args.cache_dir)
        obj = {"family": args.family, "rank": n, "weight": list(lam), "value": table[lam].to_json()}
    else:
        if not any(lam):
            raise UsageError("the zero weight has no recurrence row; use --table")
        row = minuscule_row(lam, rs) if args.family == "B" else qm_row(lam, rs)
        if args.specialized:
            row = row.specialize()
        obj = {"family": args.family, "rank": n, **row.to_json()}
    print(json.dumps(obj))
    return None


def _chain(gens):
    for g in gens:
        yield from g


# --- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reeder", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--family", required=True, type=str.upper, choices=("B", "C"))
        sp.add_argument("--rank", type=int, default=2)
        sp.add_argument("--rank-max", type=int)
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--cache-dir", default=os.environ.get("REEDER_CACHE_DIR"))
        sp.add_argument("--force", action="store_true", help="lift the oracle rank limit")
        sp.add_argument("-v", "--verbose", action="store_true")
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
        fmt.add_argument("--plain", dest="fmt", action="store_const", const="plain")
        sp.set_defaults(fmt="json")

    v = sub.add_parser("verify", help="solve chains and compare with closed forms and oracles")
    common(v)
    v.add_argument("--mode", choices=MODES, default="all")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("identities", help="coefficient identities up to --rank-max")
    common(i)
    i.set_defaults(func=cmd_identities)

    d = sub.add_parser("dump", help="print a recurrence row or a solved table entry")
    common(d)
    d.add_argument("--weight", help="comma separated coordinates, e.g. 1,1,0")
    d.add_argument("--specialized", action="store_true")
    d.add_argument("--table", action="store_true", help="print the solved specialized value instead")
    d.set_defaults(func=cmd_dump)
    return p


def _emit(reports, fmt: str, out) -> bool:
    ok = True
    for r in reports:
        if r.status == "fail":
            ok = False
        out.write(json.dumps(r.to_json()) + "\n" if fmt == "json" else r.plain() + "\n")
        out.flush()
    return ok


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        checks = args.func(args)
        if checks is None:
            return 0
        reports = list(_reports(checks, time.perf_counter()))
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"reeder: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            ok = _emit(reports, args.fmt, fh)
    else:
        try:
            ok = _emit(reports, args.fmt, sys.stdout)
        except BrokenPipeError:
            # reader went away (e.g. piped into head); silence the flush at exit
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
            ok = all(r.status != "fail" for r in reports)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
