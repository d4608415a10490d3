"""Command-line front end.

Exit codes: 0 every check passed, 1 a counterexample was found, 2 usage,
configuration or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from pascaldet.core_arrays import Table
from pascaldet.det_array import Verdict, column_identity_first, column_identity_second, det_entry
from pascaldet.errors import DomainError
from pascaldet.identities import (
    narayana_map_check,
    parallelepiped_sweep,
    ratio_identity_sweep,
    star_invariance_check,
)
from pascaldet.lgv import DEFAULT_LIMITS, count_nonintersecting_paths
from pascaldet.logconcavity import table_antidiag_lc, table_row_lc
from pascaldet.tableio import TableCache, get_table, to_csv, to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

IDENTITIES = ("parallelepiped", "star", "ratio", "narayana", "columns")


@dataclass
class RunConfig:
    command: str
    order: int = 1
    rows: int = 1
    cols: int = 1
    kind: str = "pascal"
    identity: str | None = None
    target: str = "both"
    max_index: int = 10
    max_i: int = 4
    max_j: int = 4
    max_d: int = 10
    r: int = 2
    m: int | None = None
    l: int | None = None
    max_offset: int = 4
    format: str | None = None
    out: str | None = None
    cache_dir: str | None = None

    def validate(self) -> None:
        for name in ("order", "rows", "cols", "max_index", "r", "max_offset"):
            if getattr(self, name) < 1:
                raise DomainError(f"--{name.replace('_', '-')} must be >= 1")
        for name in ("max_i", "max_j", "max_d"):
            if getattr(self, name) < 0:
                raise DomainError(f"--{name.replace('_', '-')} must be >= 0")
        for name in ("m", "l"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise DomainError(f"--{name} must be >= 0")
        if self.format not in (None, "csv", "json"):
            raise DomainError("--format must be csv or json")


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: error: {message}")


def _parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--cache-dir", metavar="PATH", help="table cache (default: $PASCALDET_CACHE_DIR)")

    p = _Parser(prog="pascaldet", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="write a Pascal or PD_k table window")
    g.add_argument("--kind", choices=("pascal", "det"), default="pascal")
    g.add_argument("--order", type=int, default=1)
    g.add_argument("--rows", type=int, required=True)
    g.add_argument("--cols", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="sweep one identity family")
    v.add_argument("--identity", choices=IDENTITIES, required=True)
    v.add_argument("--order", type=int, default=1)
    v.add_argument("--r", type=int, default=2, help="minor size for the ratio identity")
    v.add_argument("--max-index", type=int, default=10)
    v.add_argument("--max-d", type=int, default=10, help="largest anti-diagonal")
    v.add_argument("--max-i", type=int, default=10)
    v.add_argument("--max-j", type=int, default=10)
    v.add_argument("--m", type=int, help="row offset of the star rectangle (default: sweep)")
    v.add_argument("--l", type=int, help="column offset of the star rectangle (default: sweep)")
    v.add_argument("--max-offset", type=int, default=4)

    c = sub.add_parser("check", parents=[common], help="log-concavity of rows / anti-diagonals of PD_k")
    c.add_argument("--target", choices=("rows", "antidiagonals", "both"), default="both")
    c.add_argument("--order", type=int, default=1)
    c.add_argument("--max-index", type=int, default=10)

    o = sub.add_parser("oracle", parents=[common], help="compare PD_k entries with lattice path counts")
    o.add_argument("--order", type=int, default=1)
    o.add_argument("--max-i", type=int, default=4)
    o.add_argument("--max-j", type=int, default=4)
    return p


def parse_config(argv) -> RunConfig:
    ns = vars(_parser().parse_args(argv))
    known = RunConfig.__dataclass_fields__
    cfg = RunConfig(**{k: v for k, v in ns.items() if k in known})
    cfg.validate()
    return cfg


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=1) + "\n"


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cache(cfg: RunConfig) -> TableCache | None:
    return TableCache.from_env(cfg.cache_dir)


def cmd_gen(cfg: RunConfig) -> int:
    k = cfg.order if cfg.kind == "det" else 1
    t = get_table(cfg.kind, k, cfg.rows, cfg.cols, _cache(cfg))
    _emit(cfg, to_json(t) if cfg.format == "json" else to_csv(t))
    return EXIT_OK


def _run_identity(cfg: RunConfig) -> tuple[Verdict, dict]:
    ident = cfg.identity
    if ident == "parallelepiped":
        return parallelepiped_sweep(cfg.max_index), {"max_index": cfg.max_index}
    if ident == "narayana":
        return narayana_map_check(cfg.max_i, cfg.max_j), {"max_i": cfg.max_i, "max_j": cfg.max_j}
    if ident == "ratio":
        return ratio_identity_sweep(cfg.order, cfg.r, cfg.max_d), {"order": cfg.order, "r": cfg.r, "max_d": cfg.max_d}
    if ident == "columns":
        params = {"order": cfg.order, "max_i": cfg.max_i}
        first = column_identity_first(cfg.order, cfg.max_i)
        if not first:
            return first, params
        second = column_identity_second(cfg.order, cfg.max_i)
        return Verdict(second.passed, first.checked + second.checked, second.witness), params
    if ident == "star":
        ms = [cfg.m] if cfg.m is not None else range(1, cfg.max_offset + 1)
        ls = [cfg.l] if cfg.l is not None else range(1, cfg.max_offset + 1)
        checked = 0
        for s in range(cfg.max_d + 1):
            for m in ms:
                for l in ls:
                    v = star_invariance_check(cfg.order, s, m, l)
                    checked += v.checked
                    if not v:
                        return Verdict(False, checked, v.witness), {"order": cfg.order, "max_d": cfg.max_d}
        return Verdict(True, checked), {"order": cfg.order, "max_d": cfg.max_d}
    raise DomainError(f"unknown identity {ident!r}")


def _report_failure(witness) -> None:
    print(f"counterexample: {json.dumps(_jsonable(witness), sort_keys=True)}", file=sys.stderr)


def cmd_verify(cfg: RunConfig) -> int:
    verdict, params = _run_identity(cfg)
    doc = {
        "command": "verify",
        "identity": cfg.identity,
        "parameters": params,
        "passed": verdict.passed,
        "checked": verdict.checked,
        "witness": verdict.witness,
    }
    if cfg.format == "csv":
        text = _dump_csv(
            ["identity", "passed", "checked", "witness"],
            [[cfg.identity, verdict.passed, verdict.checked,
              "" if verdict.witness is None else json.dumps(_jsonable(verdict.witness), sort_keys=True)]],
        )
    else:
        text = _dump_json(_jsonable(doc))
    _emit(cfg, text)
    if not verdict:
        _report_failure(verdict.witness)
        return EXIT_FAIL
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    n = cfg.max_index
    t: Table = get_table("det", cfg.order, n + 1, n + 1, _cache(cfg))
    reports = []
    if cfg.target in ("rows", "both"):
        reports += table_row_lc(t, n, n + 1)
    if cfg.target in ("antidiagonals", "both"):
        reports += table_antidiag_lc(t, n)
    passed = all(reports)
    if cfg.format == "csv":
        text = _dump_csv(
            ["origin", "passed", "first_violation", "witness"],
            [[r.origin, r.passed, "" if r.first_violation is None else r.first_violation,
              "" if r.witness is None else " ".join(map(str, r.witness))] for r in reports],
        )
    else:
        text = _dump_json({
            "command": "check",
            "order": str(cfg.order),
            "max_index": str(n),
            "target": cfg.target,
            "table": t.table_id,
            "passed": passed,
            "sequences": [r.to_dict() for r in reports],
        })
    _emit(cfg, text)
    if not passed:
        bad = next(r for r in reports if not r)
        _report_failure(bad.to_dict())
        return EXIT_FAIL
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    lim = DEFAULT_LIMITS
    if cfg.order > lim.max_order or cfg.max_i > lim.max_i or cfg.max_j > lim.max_j:
        raise DomainError(
            f"oracle range exceeds guard (order <= {lim.max_order}, max-i <= {lim.max_i}, max-j <= {lim.max_j})"
        )
    cells, timings = [], []
    first_bad = None
    for i in range(cfg.max_i + 1):
        for j in range(cfg.max_j + 1):
            t0 = time.perf_counter()
            paths = count_nonintersecting_paths(cfg.order, i, j)
            elapsed = time.perf_counter() - t0
            d = det_entry(cfg.order, i, j)
            cells.append({"i": i, "j": j, "det": d, "paths": paths, "match": d == paths})
            timings.append({"i": i, "j": j, "seconds": round(elapsed, 6)})
            if d != paths and first_bad is None:
                first_bad = {"k": cfg.order, "i": i, "j": j, "left": d, "right": paths}
    passed = first_bad is None
    if cfg.format == "csv":
        text = _dump_csv(["i", "j", "det", "paths", "match"],
                         [[c["i"], c["j"], c["det"], c["paths"], c["match"]] for c in cells])
    else:
        text = _dump_json({
            "command": "oracle",
            "order": str(cfg.order),
            "passed": passed,
            "cells": _jsonable(cells),
            "informational": {"timings": timings},
        })
    _emit(cfg, text)
    if not passed:
        _report_failure(first_bad)
        return EXIT_FAIL
    return EXIT_OK


COMMANDS = {"gen": cmd_gen, "verify": cmd_verify, "check": cmd_check, "oracle": cmd_oracle}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        cfg = parse_config(argv)
        return COMMANDS[cfg.command](cfg)
    except _Usage as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"pascaldet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"pascaldet: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
