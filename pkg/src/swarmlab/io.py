"""File formats used by the CLI: traces, snapshots, run metadata,
tuning reports and chain matrices.

Trace CSV columns, in order: ``iteration,best_fitness,diversity,
evaluations``. Floats are written with 17 significant digits so
repeated runs can be compared byte for byte. Position snapshots go to
sibling files named ``<stem>.positions.<iteration>.csv``; run metadata
(enough to rebuild the discretization grid) goes to ``<path>.meta.json``.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .core import SearchSpace, Trace
from .errors import ConfigError

__all__ = ["write_trace", "read_trace", "write_meta", "read_meta",
           "write_chain_matrix", "write_tuning_report", "snapshot_path"]

_FLOAT_FMT = "%.17g"


def _fmt(value: float) -> str:
    return _FLOAT_FMT % float(value)


def snapshot_path(trace_path, iteration: int) -> Path:
    trace_path = Path(trace_path)
    return trace_path.with_name(f"{trace_path.stem}.positions.{iteration}.csv")


def write_trace(trace: Trace, path) -> None:
    """Write the per-iteration records plus any position snapshots."""
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "best_fitness", "diversity", "evaluations"])
        for i in range(len(trace)):
            writer.writerow([trace.iterations[i], _fmt(trace.best_fitness[i]),
                             _fmt(trace.diversity[i]), trace.evaluations[i]])
    for iteration, positions in sorted(trace.snapshots.items()):
        with open(snapshot_path(path, iteration), "w", newline="") as fh:
            writer = csv.writer(fh)
            for row in positions:
                writer.writerow([_fmt(v) for v in row])


def read_trace(path) -> Trace:
    """Read a trace CSV and any sibling snapshot files."""
    path = Path(path)
    trace = Trace()
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["iteration", "best_fitness", "diversity", "evaluations"]:
            raise ConfigError(f"{path} is not a swarmlab trace file")
        for row in reader:
            trace.record(int(row[0]), float(row[1]), float(row[2]), int(row[3]))
    for snap in sorted(path.parent.glob(f"{path.stem}.positions.*.csv"),
                       key=lambda p: int(p.suffixes[-2].lstrip("."))):
        iteration = int(snap.suffixes[-2].lstrip("."))
        trace.snapshot(iteration, np.loadtxt(snap, delimiter=",", ndmin=2))
    return trace


def write_meta(path, spec: dict) -> None:
    meta_path = Path(str(path) + ".meta.json")
    with open(meta_path, "w") as fh:
        json.dump(spec, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_meta(path) -> dict:
    meta_path = Path(str(path) + ".meta.json")
    if not meta_path.exists():
        raise ConfigError(f"missing run metadata file {meta_path}")
    with open(meta_path) as fh:
        return json.load(fh)


def space_from_meta(meta: dict) -> SearchSpace:
    return SearchSpace(int(meta["dim"]), np.asarray(meta["lower"], dtype=float),
                       np.asarray(meta["upper"], dtype=float))


def write_chain_matrix(transition: np.ndarray, path) -> None:
    """Row-major CSV dump of a transition matrix."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in np.asarray(transition, dtype=float):
            writer.writerow([_fmt(v) for v in row])


def write_tuning_report(report, path) -> None:
    """One CSV row per grid point; the winner row is flagged."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(list(report.param_names)
                        + ["median_best", "iqr_best", "winner"])
        for values, med, iqr in report.grid_points:
            flag = 1 if (values, med, iqr) == report.winner else 0
            writer.writerow([_fmt(v) for v in values]
                            + [_fmt(med), _fmt(iqr), flag])
