"""CSV/JSON serialization of tables and the on-disk table cache.

Integers are always written as decimal strings; entries outgrow 64 bits fast.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import random
from pathlib import Path

from pascaldet.core_arrays import PascalTable, Table, build_pascal_table, pascal_entry
from pascaldet.det_array import DetArrayTable, build_det_array, det_entry
from pascaldet.errors import DomainError

FORMAT_VERSION = 1
CACHE_ENV = "PASCALDET_CACHE_DIR"

log = logging.getLogger(__name__)


def table_kind(t: Table) -> tuple[str, int]:
    if isinstance(t, DetArrayTable):
        return "det", t.order
    return "pascal", 1


def to_csv(t: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i/j", *range(t.cols)])
    for i, row in enumerate(t.entries):
        w.writerow([i, *map(str, row)])
    return buf.getvalue()


def to_document(t: Table) -> dict:
    kind, order = table_kind(t)
    return {
        "kind": kind,
        "order": order,
        "rows": t.rows,
        "cols": t.cols,
        "entries": [[str(x) for x in row] for row in t.entries],
        "format_version": FORMAT_VERSION,
    }


def to_json(t: Table) -> str:
    return json.dumps(to_document(t), indent=1) + "\n"


def from_document(doc: dict) -> Table:
    if doc.get("format_version") != FORMAT_VERSION:
        raise DomainError(f"unsupported table format_version {doc.get('format_version')!r}")
    grid = tuple(tuple(int(x) for x in row) for row in doc["entries"])
    if len(grid) != doc["rows"] or any(len(r) != doc["cols"] for r in grid):
        raise DomainError("table dimensions do not match its header")
    if doc["kind"] == "pascal":
        return PascalTable(grid)
    if doc["kind"] == "det":
        k = int(doc["order"])
        return DetArrayTable(grid, order=k, source_rows=len(grid) + k - 1, source_cols=len(grid[0]) + k - 1)
    raise DomainError(f"unknown table kind {doc['kind']!r}")


def build(kind: str, k: int, rows: int, cols: int) -> Table:
    if kind == "pascal":
        return build_pascal_table(rows, cols)
    if kind == "det":
        return build_det_array(k, rows, cols)
    raise DomainError(f"unknown table kind {kind!r}")


def reference_entry(kind: str, k: int, i: int, j: int) -> int:
    return pascal_entry(i, j) if kind == "pascal" else det_entry(k, i, j)


class TableCache:
    """Directory of JSON table documents keyed by ``(kind, k, rows, cols)``.

    A read is trusted only if its header matches and two spot-checked
    entries, recomputed from scratch, agree; otherwise the table is rebuilt
    and rewritten. Spot cells are drawn from an RNG seeded by the key.
    """

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    @classmethod
    def from_env(cls, override: str | None = None) -> "TableCache | None":
        path = override or os.environ.get(CACHE_ENV)
        return cls(path) if path else None

    def path_for(self, kind: str, k: int, rows: int, cols: int) -> Path:
        return self.root / f"{kind}_k{k}_{rows}x{cols}.json"

    @staticmethod
    def spot_cells(kind: str, k: int, rows: int, cols: int) -> list[tuple[int, int]]:
        rng = random.Random(f"{kind}:{k}:{rows}:{cols}")
        return [(rng.randrange(rows), rng.randrange(cols)) for _ in range(2)]

    def load(self, kind: str, k: int, rows: int, cols: int) -> Table | None:
        path = self.path_for(kind, k, rows, cols)
        if not path.exists():
            return None
        try:
            doc = json.loads(path.read_text())
            t = from_document(doc)
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("discarding unreadable cache entry %s: %s", path, exc)
            return None
        if table_kind(t) != (kind, k if kind == "det" else 1) or (t.rows, t.cols) != (rows, cols):
            log.warning("discarding cache entry %s: header does not match key", path)
            return None
        for i, j in self.spot_cells(kind, k, rows, cols):
            if t.entry(i, j) != reference_entry(kind, k, i, j):
                log.warning("discarding stale cache entry %s: spot check failed at (%d, %d)", path, i, j)
                return None
        return t

    def store(self, t: Table) -> Path:
        kind, k = table_kind(t)
        path = self.path_for(kind, k, t.rows, t.cols)
        self.root.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(to_json(t))
        tmp.replace(path)
        return path

    def get(self, kind: str, k: int, rows: int, cols: int) -> Table:
        t = self.load(kind, k, rows, cols)
        if t is None:
            t = build(kind, k, rows, cols)
            self.store(t)
        return t


def get_table(kind: str, k: int, rows: int, cols: int, cache: TableCache | None = None) -> Table:
    if cache is None:
        return build(kind, k, rows, cols)
    return cache.get(kind, k, rows, cols)
