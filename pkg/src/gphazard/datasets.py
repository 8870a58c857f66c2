"""Failure/censoring datasets and their CSV form (header ``time,status``)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Dataset", "read_dataset_csv", "write_dataset_csv"]


@dataclass(eq=False)
class Dataset:
    """Failure times with status flags and an optional common censoring horizon.

    Every record carries its own time; a censored record's time is the
    horizon it survived past.  When a common ``tau`` is given, censored
    times must equal it.
    """

    times: np.ndarray
    observed: np.ndarray
    tau: float | None = None

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.observed = np.asarray(self.observed, dtype=bool)
        if self.times.shape != self.observed.shape or self.times.ndim != 1:
            raise ValueError("times and observed must be 1-d arrays of equal length")
        if np.any(self.times <= 0.0):
            raise ValueError("all record times must be positive")
        if self.tau is not None:
            self.tau = float(self.tau)
            if self.tau <= 0.0:
                raise ValueError(f"tau must be positive, got {self.tau}")
            if not np.all(self.times[~self.observed] == self.tau):
                raise ValueError("censored records must sit at the common horizon tau")

    @classmethod
    def from_records(cls, records, tau: float | None = None) -> "Dataset":
        """Build from an iterable of (time, observed) pairs."""
        records = list(records)
        times = np.array([t for t, _ in records], dtype=float)
        observed = np.array([bool(o) for _, o in records])
        return cls(times=times, observed=observed, tau=tau)

    @property
    def n(self) -> int:
        return self.times.size

    @property
    def n_observed(self) -> int:
        return int(self.observed.sum())

    def observed_times(self) -> np.ndarray:
        return self.times[self.observed]

    def censored_times(self) -> np.ndarray:
        return self.times[~self.observed]


def write_dataset_csv(dataset: Dataset, path) -> None:
    lines = ["time,status"]
    for t, obs in zip(dataset.times, dataset.observed):
        lines.append(f"{float(t)!r},{1 if obs else 0}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_dataset_csv(path, tau: float | None = None) -> Dataset:
    """Parse a ``time,status`` CSV; rejects non-positive times naming the row."""
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as e:
        raise ValueError(f"cannot read dataset {path}: {e}") from None
    if not lines:
        raise ValueError(f"{path}: empty dataset file")
    header = [c.strip().lower() for c in lines[0].split(",")]
    if header[:2] != ["time", "status"]:
        raise ValueError(f"{path}: expected header 'time,status', got {lines[0]!r}")
    times = []
    observed = []
    for i, line in enumerate(lines[1:], start=2):
        cols = line.split(",")
        if len(cols) < 2:
            raise ValueError(f"{path}: row {i}: expected two columns, got {line!r}")
        try:
            t = float(cols[0])
        except ValueError:
            raise ValueError(f"{path}: row {i}: cannot parse time {cols[0]!r}") from None
        if t <= 0.0:
            raise ValueError(f"{path}: row {i}: time must be positive, got {t}")
        status = cols[1].strip()
        if status not in ("0", "1"):
            raise ValueError(f"{path}: row {i}: status must be 0 or 1, got {status!r}")
        times.append(t)
        observed.append(status == "1")
    return Dataset(times=np.array(times), observed=np.array(observed), tau=tau)
