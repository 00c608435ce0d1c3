"""Flat 2-torus geometry: canonical wrapping, metric, grids.

Points are plain float arrays of shape (2,) or batches of shape (n, 2)
with coordinates kept in the fundamental domain [0, 1) x [0, 1).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TAU = 2.0 * np.pi


def as_points(p) -> np.ndarray:
    """Coerce to a float array of shape (2,) or (n, 2)."""
    a = np.asarray(p, dtype=float)
    if a.shape == (2,) or (a.ndim == 2 and a.shape[1] == 2):
        return a
    raise ValueError(f"expected shape (2,) or (n, 2), got {a.shape}")


def wrap(p) -> np.ndarray:
    """Canonical mod-1 reduction into [0, 1) (floor semantics)."""
    return np.mod(np.asarray(p, dtype=float), 1.0)


def wrap_diff(d) -> np.ndarray:
    """Wrap displacement components to the nearest representative in [-1/2, 1/2]."""
    d = np.asarray(d, dtype=float)
    return d - np.round(d)


def torus_diff(p, q) -> np.ndarray:
    """Shortest displacement vector from q to p on the torus."""
    return wrap_diff(np.asarray(p, dtype=float) - np.asarray(q, dtype=float))


def torus_distance(p, q):
    """Geodesic (flat) distance; equals the minimum over the 9 lattice translates."""
    d = torus_diff(p, q)
    return np.hypot(d[..., 0], d[..., 1])


def planar_shift(base, displacement) -> np.ndarray:
    """Move `base` by a small planar displacement and re-wrap."""
    return wrap(np.asarray(base, dtype=float) + np.asarray(displacement, dtype=float))


@dataclass(frozen=True)
class GridSpec:
    """Uniform sample lattice on a torus sub-rectangle."""

    nx: int = 64
    ny: int = 64
    x0: float = 0.0
    y0: float = 0.0
    x1: float = 1.0
    y1: float = 1.0

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ValueError("grid resolution must be positive")

    def points(self) -> np.ndarray:
        xs = self.x0 + (self.x1 - self.x0) * np.arange(self.nx) / self.nx
        ys = self.y0 + (self.y1 - self.y0) * np.arange(self.ny) / self.ny
        gx, gy = np.meshgrid(xs, ys, indexing="ij")
        return wrap(np.column_stack([gx.ravel(), gy.ravel()]))

    @property
    def size(self) -> int:
        return self.nx * self.ny

    def to_dict(self) -> dict:
        return {
            "nx": self.nx,
            "ny": self.ny,
            "x0": self.x0,
            "y0": self.y0,
            "x1": self.x1,
            "y1": self.y1,
        }
