"""Discrete sample paths on a uniform time grid and the path surgeries
(stopping, vertical bump, flat extension) that numerical functional
calculus needs.

All types are immutable after construction; the backing arrays are marked
read-only so views can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

__all__ = [
    "TimeGrid",
    "SamplePath",
    "PathBundle",
    "stopped",
    "vertical_bump",
    "quadratic_variation",
]


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid 0 = t_0 < t_1 < ... < t_n = horizon."""

    horizon: float
    n_steps: int

    def __post_init__(self):
        if not (self.horizon > 0.0 and np.isfinite(self.horizon)):
            raise ValueError(f"horizon must be positive and finite, got {self.horizon}")
        if self.n_steps < 1:
            raise ValueError(f"n_steps must be >= 1, got {self.n_steps}")

    @property
    def dt(self) -> float:
        return self.horizon / self.n_steps

    @cached_property
    def times(self) -> np.ndarray:
        t = np.linspace(0.0, self.horizon, self.n_steps + 1)
        t.flags.writeable = False
        return t

    @property
    def n_nodes(self) -> int:
        return self.n_steps + 1


def _freeze(values: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(values, dtype=float)
    if out is values and values.flags.writeable:
        out = values.copy()
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class SamplePath:
    """One sampled trajectory: a grid plus one value per node.

    Bump bookkeeping (`_bump_*`) records how the constant tail of a bumped
    path was produced, so that opposite bumps at the same node cancel
    bit-for-bit instead of accumulating float round-off.
    """

    grid: TimeGrid
    values: np.ndarray
    _bump_node: int | None = field(default=None, repr=False, compare=False)
    _bump_anchor: float = field(default=0.0, repr=False, compare=False)
    _bump_offset: float = field(default=0.0, repr=False, compare=False)

    def __post_init__(self):
        vals = _freeze(np.asarray(self.values))
        if vals.ndim != 1 or vals.shape[0] != self.grid.n_nodes:
            raise ValueError(
                f"values must have {self.grid.n_nodes} entries, got shape {vals.shape}"
            )
        object.__setattr__(self, "values", vals)

    def _check_index(self, k: int) -> None:
        if not (0 <= k <= self.grid.n_steps):
            raise IndexError(f"node index {k} out of range [0, {self.grid.n_steps}]")

    def stopped(self, k: int) -> "SamplePath":
        """Path frozen at node k: values equal on [0, k], constant after."""
        self._check_index(k)
        if k == self.grid.n_steps:
            return self
        out = self.values.copy()
        out[k + 1 :] = out[k]
        keep_bump = self._bump_node if (self._bump_node is not None and self._bump_node == k) else None
        if keep_bump is not None:
            return SamplePath(self.grid, out, keep_bump, self._bump_anchor, self._bump_offset)
        return SamplePath(self.grid, out)

    def vertical_bump(self, k: int, h: float) -> "SamplePath":
        """Stop at node k, then shift the value at k (and the constant tail) by h."""
        self._check_index(k)
        if self._bump_node == k:
            anchor = self._bump_anchor
            offset = self._bump_offset + h
        else:
            anchor = float(self.values[k])
            offset = float(h)
        out = self.values.copy()
        out[k:] = anchor + offset
        return SamplePath(self.grid, out, k, anchor, offset)

    def quadratic_variation(self, k: int | None = None) -> float:
        """Realized quadratic variation: sum of squared increments up to node k."""
        k = self.grid.n_steps if k is None else k
        self._check_index(k)
        if k < 1:
            raise ValueError("quadratic variation needs k >= 1")
        inc = np.diff(self.values[: k + 1])
        return float(np.dot(inc, inc))


def stopped(path: SamplePath, k: int) -> SamplePath:
    return path.stopped(k)


def vertical_bump(path: SamplePath, k: int, h: float) -> SamplePath:
    return path.vertical_bump(k, h)


def quadratic_variation(path: SamplePath, k: int | None = None) -> float:
    return path.quadratic_variation(k)


@dataclass(frozen=True)
class PathBundle:
    """A Monte Carlo ensemble of paths sharing one grid.

    `stream_ids` records the RNG stream index each row was drawn from, so
    any member path can be regenerated independently.
    """

    grid: TimeGrid
    values: np.ndarray  # shape (n_paths, n_nodes)
    stream_ids: np.ndarray | None = None

    def __post_init__(self):
        vals = _freeze(np.asarray(self.values))
        if vals.ndim != 2 or vals.shape[1] != self.grid.n_nodes:
            raise ValueError(
                f"values must have shape (n_paths, {self.grid.n_nodes}), got {vals.shape}"
            )
        object.__setattr__(self, "values", vals)
        if self.stream_ids is not None:
            ids = np.asarray(self.stream_ids)
            if ids.shape != (vals.shape[0],):
                raise ValueError("stream_ids must have one entry per path")
            ids = ids.copy()
            ids.flags.writeable = False
            object.__setattr__(self, "stream_ids", ids)

    @property
    def n_paths(self) -> int:
        return self.values.shape[0]

    def path(self, i: int) -> SamplePath:
        return SamplePath(self.grid, self.values[i])

    def __iter__(self):
        for i in range(self.n_paths):
            yield self.path(i)

    @staticmethod
    def from_increments(grid: TimeGrid, increments: np.ndarray, x0: float = 0.0,
                        stream_ids: np.ndarray | None = None) -> "PathBundle":
        inc = np.asarray(increments, dtype=float)
        if inc.ndim != 2 or inc.shape[1] != grid.n_steps:
            raise ValueError(f"increments must have shape (n_paths, {grid.n_steps})")
        vals = np.empty((inc.shape[0], grid.n_nodes))
        vals[:, 0] = x0
        np.cumsum(inc, axis=1, out=vals[:, 1:])
        vals[:, 1:] += x0
        return PathBundle(grid, vals, stream_ids)
