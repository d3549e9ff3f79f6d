"""Mutual-information surface over the (shift, length-ratio) plane.

For every grid point the level distribution is built, renormalized, split
into two artificial subsystems, and summarized by its entropies.  Rows
come out in deterministic row-major order (shift outer, ratio inner) so
repeated sweeps with one configuration are byte-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import IO, NamedTuple, Optional

import numpy as np

from .entropy import JointDistribution, entropy_report
from .fcf import OscillatorPair, fcf_distribution
from .indexmap import UNBOUNDED, Factorization

__all__ = [
    "CSV_HEADER",
    "SweepConfig",
    "SurfaceRow",
    "MiSurface",
    "sweep",
    "write_csv",
]

CSV_HEADER = "a,l,H_A,H_B,H_AB,MI,tail_mass,n_used"

# Reporting clamp: mutual information this far below zero is rounding
# noise from the entropy differences, not signal.
_MI_NOISE_FLOOR = -1e-12


@dataclass(frozen=True)
class SweepConfig:
    """Grid and analysis settings for one surface sweep.

    Ranges are ``(min, max, steps)`` with at least two steps per axis.
    ``sizes`` is the subsystem split applied at every grid point; the
    surface output format is bipartite, so exactly two factors.
    """

    a_range: tuple[float, float, int] = (0.0, 4.0, 100)
    l_range: tuple[float, float, int] = (1.05, 3.0, 100)
    sizes: tuple[Optional[int], ...] = (2, UNBOUNDED)
    tail_tolerance: float = 1e-12
    log_base: float = math.e
    out_path: Optional[str] = None

    def __post_init__(self) -> None:
        for name, rng in (("a_range", self.a_range), ("l_range", self.l_range)):
            lo, hi, steps = rng
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise ValueError(f"{name} bounds must be finite, got {rng}")
            if not lo < hi:
                raise ValueError(f"{name} needs min < max, got {rng}")
            if steps < 2:
                raise ValueError(f"{name} needs at least 2 steps, got {steps}")
        if self.l_range[0] <= 0:
            raise ValueError(f"l_range bounds must be positive, got {self.l_range}")
        if not 0.0 < self.tail_tolerance < 1.0:
            raise ValueError(
                f"tail_tolerance must lie in (0, 1), got {self.tail_tolerance}"
            )
        f = Factorization(self.sizes)
        if f.arity != 2:
            raise ValueError(
                f"surface sweep is bipartite; expected 2 factors, got {f.arity}"
            )


class SurfaceRow(NamedTuple):
    a: float
    l: float
    h_a: float
    h_b: float
    h_ab: float
    mi: float
    tail_mass: float
    n_used: int


@dataclass(frozen=True)
class MiSurface:
    config: SweepConfig
    rows: tuple[SurfaceRow, ...] = field(repr=False)


def _grid(rng: tuple[float, float, int]) -> np.ndarray:
    lo, hi, steps = rng
    return np.linspace(lo, hi, steps)


def sweep(config: SweepConfig) -> MiSurface:
    """Evaluate the entropy split on every grid point, row-major."""
    factorization = Factorization(config.sizes)
    rows = []
    for a in _grid(config.a_range):
        for l in _grid(config.l_range):
            pair = OscillatorPair(shift=float(a), length_ratio=float(l))
            dist = fcf_distribution(
                pair, tail_tolerance=config.tail_tolerance, renormalize=True
            )
            joint = JointDistribution.from_sequence(dist.probs, factorization)
            report = entropy_report(joint, base=config.log_base)
            mi = report.mutual_information
            if _MI_NOISE_FLOOR <= mi < 0.0:
                mi = 0.0
            rows.append(
                SurfaceRow(
                    a=float(a),
                    l=float(l),
                    h_a=report.h_parts[0],
                    h_b=report.h_parts[1],
                    h_ab=report.h_joint,
                    mi=mi,
                    tail_mass=dist.tail_mass,
                    n_used=dist.n_levels,
                )
            )
    return MiSurface(config=config, rows=tuple(rows))


def _format_row(row: SurfaceRow) -> str:
    floats = (row.a, row.l, row.h_a, row.h_b, row.h_ab, row.mi, row.tail_mass)
    return ",".join([f"{v:.12g}" for v in floats] + [str(row.n_used)])


def write_csv(surface: MiSurface, stream: IO[str]) -> None:
    """Emit the surface as CSV with a mandatory header and \\n endings."""
    stream.write(CSV_HEADER + "\n")
    for row in surface.rows:
        stream.write(_format_row(row) + "\n")
