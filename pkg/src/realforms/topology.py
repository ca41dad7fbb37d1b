"""Clutching invariants of oriented real vector bundles on S^2.

Floats live only here. Rotation convention: ``R(t) = [[cos t, -sin t],
[sin t, cos t]]``, so the polar angle of a matrix is read off the first
column of its orthogonal polar factor. Sampled loops carry no orientation
metadata; the sign of a rank-2 class is relative to this convention.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, NotOrientationPreserving, Singular, Undersampled

DET_TOL = 1e-12
MAX_STEP = math.pi / 2
MAX_RESIDUAL = 0.1


def rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def polar_retract(g) -> float:
    """Angle in [0, 2pi) of the rotation part of ``g`` in GL2+(R).

    For 2x2 with positive determinant, ``g + cof(g)`` is a positive multiple
    of the orthogonal polar factor ``g (g^T g)^(-1/2)``, which gives the
    closed form below.
    """
    g = np.asarray(g, dtype=float)
    if g.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {g.shape}")
    (a, b), (c, d) = g
    det = a * d - b * c
    if abs(det) < DET_TOL:
        raise Singular(f"determinant {det:.3e} is below tolerance")
    if det < 0:
        raise NotOrientationPreserving(f"determinant {det:.3e} is negative")
    theta = math.atan2(c - b, a + d)
    return theta % (2 * math.pi)


@dataclass(frozen=True)
class LoopSample:
    """Loop ``g(theta_k)``, k = 0..N-1, in GL2+(R); sample 0 closes the loop."""

    samples: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=float)
        if arr.ndim != 3 or arr.shape[1:] != (2, 2) or len(arr) < 2:
            raise ValueError(f"expected an (N, 2, 2) array with N >= 2, got {arr.shape}")
        dets = arr[:, 0, 0] * arr[:, 1, 1] - arr[:, 0, 1] * arr[:, 1, 0]
        bad = np.flatnonzero(dets <= DET_TOL)
        if bad.size:
            k = int(bad[0])
            raise NotOrientationPreserving(f"sample {k} has determinant {dets[k]:.3e}")
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    @property
    def N(self) -> int:
        return len(self.samples)

    @classmethod
    def from_function(cls, fn, N: int = 1024) -> LoopSample:
        thetas = 2 * math.pi * np.arange(N) / N
        return cls(np.array([fn(t) for t in thetas]))

    @classmethod
    def from_csv(cls, path) -> LoopSample:
        """One sample per line: ``g11,g12,g21,g22``. A trailing repeat of the
        first sample (explicit closure) is dropped."""
        rows = []
        with open(Path(path), newline="") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row or all(not cell.strip() for cell in row):
                    continue
                if len(row) != 4:
                    raise ValueError(f"line {lineno}: expected 4 values, got {len(row)}")
                try:
                    vals = [float(cell) for cell in row]
                except ValueError as exc:
                    raise ValueError(f"line {lineno}: {exc}") from None
                if not all(math.isfinite(v) for v in vals):
                    raise ValueError(f"line {lineno}: non-finite value")
                rows.append(vals)
        if len(rows) > 2 and np.allclose(rows[0], rows[-1], rtol=0, atol=1e-12):
            rows.pop()
        return cls(np.array(rows, dtype=float).reshape(-1, 2, 2))

    def to_csv(self, path) -> None:
        with open(Path(path), "w", newline="") as fh:
            w = csv.writer(fh)
            for g in self.samples:
                w.writerow([repr(float(v)) for v in g.ravel()])

    def angles(self) -> np.ndarray:
        return np.array([polar_retract(g) for g in self.samples])


def winding_number(loop: LoopSample) -> int:
    """Degree of the retracted SO(2) loop, by cumulative angle unwrapping."""
    ang = loop.angles()
    steps = np.diff(np.append(ang, ang[0]))
    steps = (steps + math.pi) % (2 * math.pi) - math.pi
    worst = int(np.argmax(np.abs(steps)))
    if abs(steps[worst]) >= MAX_STEP:
        raise Undersampled(f"angle jump {steps[worst]:.3f} rad after sample {worst} exceeds pi/2")
    turns = steps.sum() / (2 * math.pi)
    w = round(turns)
    if abs(turns - w) >= MAX_RESIDUAL:
        raise Undersampled(f"total turning {turns:.4f} is not close to an integer")
    return int(w)


@dataclass(frozen=True)
class BundleClass:
    rank: int
    class_value: int

    def __post_init__(self):
        if self.rank < 1:
            raise DomainError("rank must be >= 1")
        if self.rank == 1 and self.class_value != 0:
            raise ValueError("line bundles on S^2 are trivial")
        if self.rank >= 3 and self.class_value not in (0, 1):
            raise ValueError("rank >= 3 classes live in Z/2")


def classify(rank: int, w: int) -> BundleClass:
    """Rank 1: trivial. Rank 2: the winding itself. Rank >= 3: its parity."""
    if rank < 1:
        raise DomainError(f"rank must be >= 1, got {rank}")
    if rank == 1:
        return BundleClass(1, 0)
    if rank == 2:
        return BundleClass(2, int(w))
    return BundleClass(rank, int(w) % 2)


def h1_infinity(n: int) -> int:
    """Order of the first homology group at infinity of the model V_n.

    Z/nZ for n >= 1; for n = 0 the group is Z, encoded as 0.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return n


def iso_total_spaces(n: int, m: int) -> bool:
    if n < 0 or m < 0:
        raise DomainError("indices must be >= 0")
    return n == m


def stable_iso(n: int, m: int) -> bool:
    if n < 0 or m < 0:
        raise DomainError("indices must be >= 0")
    return (n - m) % 2 == 0


def model_label(w: int) -> str:
    """Algebraic model for a rank-2 class: V_|w|, flagged when orientation is reversed."""
    return f"V_{w}" if w >= 0 else f"V_{-w} (opposite orientation)"
