"""Overflow-free evaluation of geometrically damped Hermite sequences.

The vibrational overlap probabilities computed in :mod:`fcentropy.fcf`
contain the product ``r^n * H_n(w)^2 / (2^n n!)`` with a damping ratio
``r < 1``.  Evaluating ``H_n`` raw and dividing afterwards overflows double
precision near ``n ~ 300``, so this module runs the three-term recurrence
on the already-damped quantity

    g_n = (ratio/2)^(n/2) * |H~_n(w)| / sqrt(n!)

which keeps every intermediate between zero and the sequence peak.  ``H~``
is either the standard Hermite polynomial or, for oscillator pairs whose
damping ratio would make the polynomial argument imaginary, the modified
variant obeying ``H~_{n+1} = 2w H~_n + 2n H~_{n-1}``.  Writing the
imaginary-argument polynomial as ``H_n(iw) = i^n H~_n(w)`` keeps all
arithmetic real; the ``i^(2n)`` is cancelled downstream by the sign of the
damping ratio raised to ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import islice
from typing import Iterator

import numpy as np

__all__ = ["HermiteSignedArg", "normalized_hermite_sequence"]


@dataclass(frozen=True)
class HermiteSignedArg:
    """Argument magnitude plus recurrence regime for a damped Hermite sequence.

    Parameters
    ----------
    magnitude : float
        Non-negative polynomial argument.  The sign of the physical
        argument is irrelevant because only squared magnitudes survive
        downstream (Hermite parity), so callers pass ``abs(...)``.
    sign : int
        ``+1`` selects the standard recurrence
        ``H_{n+1} = 2w H_n - 2n H_{n-1}``; ``-1`` selects the modified
        (imaginary-argument) recurrence with ``+ 2n H_{n-1}``.
    """

    magnitude: float
    sign: int

    def __post_init__(self) -> None:
        if not math.isfinite(self.magnitude):
            raise ValueError(f"argument magnitude must be finite, got {self.magnitude}")
        if self.magnitude < 0:
            raise ValueError(f"argument magnitude must be non-negative, got {self.magnitude}")
        if self.sign not in (+1, -1):
            raise ValueError(f"sign flag must be +1 or -1, got {self.sign}")


def _signed_terms(w: float, sign: int, ratio: float) -> Iterator[float]:
    """Yield signed normalized terms h_n = (ratio/2)^(n/2) H~_n(w) / sqrt(n!).

    Infinite generator; the sign of each h_n tracks the sign of the
    underlying polynomial value so the recurrence cancellation pattern is
    preserved exactly.
    """
    h_prev = 1.0
    yield h_prev
    h = w * math.sqrt(2.0 * ratio)
    yield h
    n = 1
    while True:
        h, h_prev = (
            w * math.sqrt(2.0 * ratio / (n + 1)) * h
            - sign * ratio * math.sqrt(n / (n + 1)) * h_prev,
            h,
        )
        n += 1
        yield h


def normalized_hermite_sequence(
    arg: HermiteSignedArg, ratio: float, n_max: int
) -> np.ndarray:
    """Magnitudes g_n = (ratio/2)^(n/2) |H~_n(w)| / sqrt(n!) for n = 0..n_max.

    Parameters
    ----------
    arg : HermiteSignedArg
        Argument magnitude and recurrence regime.
    ratio : float
        Geometric damping ratio, must lie in [0, 1).
    n_max : int
        Largest order evaluated (inclusive).

    Returns
    -------
    numpy.ndarray
        Array of length ``n_max + 1``; every element is finite and
        non-negative.
    """
    if not math.isfinite(ratio) or not 0.0 <= ratio < 1.0:
        raise ValueError(f"ratio must lie in [0, 1), got {ratio}")
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    terms = islice(_signed_terms(arg.magnitude, arg.sign, ratio), n_max + 1)
    out = np.fromiter(terms, dtype=np.float64, count=n_max + 1)
    return np.abs(out)
