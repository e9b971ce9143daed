"""CSV point sets, index files and line-delimited JSON records."""
from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .geometry import LabeledPointSet


class ParseError(ValueError):
    pass


def _floats(fields: Sequence[str]) -> list[float] | None:
    try:
        vals = [float(f) for f in fields]
    except ValueError:
        return None
    return vals if all(math.isfinite(v) for v in vals) else None


def read_csv(path) -> LabeledPointSet:
    """Read rows ``x_1,...,x_d,label``; a non-numeric first row is a header."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and any(f.strip() for f in r)]
    if not rows:
        raise ParseError(f"{path}: no data rows")
    if _floats(rows[0][:-1]) is None:
        rows = rows[1:]
        if not rows:
            raise ParseError(f"{path}: header only, no data rows")
    width = len(rows[0])
    if width < 2:
        raise ParseError(f"{path}: need at least one coordinate column and a label column")
    coords, labels = [], []
    for lineno, r in enumerate(rows, 1):
        if len(r) != width:
            raise ParseError(f"{path}: row {lineno} has {len(r)} fields, expected {width}")
        xs = _floats(r[:-1])
        if xs is None:
            raise ParseError(f"{path}: row {lineno} has a non-numeric or non-finite coordinate")
        coords.append(xs)
        labels.append(r[-1].strip())
    return LabeledPointSet.from_arrays(np.array(coords), labels)


def write_csv(P: LabeledPointSet, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([f"x{i + 1}" for i in range(P.dim)] + ["label"])
        for x, lab in zip(P.points.tolist(), P.labels):
            w.writerow([repr(v) for v in x] + [lab])


def write_indices(indices: Iterable[int], path) -> None:
    text = "".join(f"{i}\n" for i in sorted(indices))
    Path(path).write_text(text, encoding="utf-8")


def read_indices(path) -> list[int]:
    out = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append(int(line))
        except ValueError:
            raise ParseError(f"{path}: line {lineno} is not an integer index") from None
    return out


def dumps_record(record: dict) -> str:
    return json.dumps(record, sort_keys=False, separators=(",", ":"))


def write_records(records: Iterable[dict], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for r in records:
            fh.write(dumps_record(r) + "\n")
