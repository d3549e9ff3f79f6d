"""Franck-Condon factors of a displaced, frequency-changed harmonic pair.

The initial electronic state carries a unit-length oscillator; the final
state is shifted by ``a`` and has oscilator length ratio ``l``.  The
transition probability from the initial vibrational ground state to final
level ``n`` is

    P_0n(a, l) = ((l^2-1)/(l^2+1))^n * (2l/(l^2+1)) * exp(-a^2/(l^2+1))
                 / (2^n n!) * H_n(-a l / sqrt((l^2+1)(l^2-1)))^2

evaluated here through the damped Hermite recurrence of
:mod:`fcentropy.hermite` so both the ``l > 1`` and ``l < 1`` regimes stay
real and overflow-free.  At ``l = 1`` the expression is an indeterminate
``0^n * H_n(inf)`` form whose limit is the displaced-oscillator Poisson
distribution; a dedicated branch handles a window around that point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .hermite import HermiteSignedArg, _signed_terms

__all__ = [
    "LIMIT_SWITCH_DELTA",
    "OscillatorPair",
    "FcfDistribution",
    "TruncationFailure",
    "hermite_argument",
    "fcf_0n",
    "fcf_0n_equal_freq",
    "fcf_distribution",
]

# Half-width of the window around l = 1 served by the Poisson limit branch.
LIMIT_SWITCH_DELTA = 1e-6

# Run of consecutive sub-threshold terms required before truncation; guards
# against stopping inside a gap of a multimodal distribution.
_QUIET_RUN = 8


class TruncationFailure(RuntimeError):
    """Raised when the term cap is hit before the truncation rule fires."""


@dataclass(frozen=True)
class OscillatorPair:
    """Physical parameters of one electronic transition.

    Parameters
    ----------
    shift : float
        Displacement of the final potential minimum, in units of the
        initial oscillator length.
    length_ratio : float
        Final-state oscillator length over initial-state oscillator
        length; strictly positive.
    """

    shift: float
    length_ratio: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.shift):
            raise ValueError(f"shift must be finite, got {self.shift}")
        if not math.isfinite(self.length_ratio) or self.length_ratio <= 0:
            raise ValueError(
                f"length_ratio must be positive and finite, got {self.length_ratio}"
            )


@dataclass(frozen=True)
class FcfDistribution:
    """Truncated transition-probability vector with tail accounting.

    ``probs[n]`` is the probability of ending in final vibrational level
    ``n``.  ``tail_mass`` is the probability weight beyond the truncation
    level, recorded before any renormalization.
    """

    params: OscillatorPair
    probs: np.ndarray
    tail_mass: float
    renormalized: bool

    @property
    def n_levels(self) -> int:
        return len(self.probs)


def hermite_argument(pair: OscillatorPair) -> tuple[HermiteSignedArg, float]:
    """Damped-recurrence parameters (argument, ratio) for an oscillator pair.

    Valid only away from ``length_ratio = 1`` (the ratio degenerates to 0
    and the argument diverges there; use the limit branch instead).
    """
    a = pair.shift
    l = pair.length_ratio
    lsq = l * l
    ratio = abs(lsq - 1.0) / (lsq + 1.0)
    w = abs(a) * l / math.sqrt((lsq + 1.0) * abs(lsq - 1.0))
    sign = +1 if lsq > 1.0 else -1
    return HermiteSignedArg(magnitude=w, sign=sign), ratio


def _prefactor(pair: OscillatorPair) -> float:
    l = pair.length_ratio
    lsq = l * l
    return 2.0 * l / (lsq + 1.0) * math.exp(-pair.shift**2 / (lsq + 1.0))


def fcf_0n(pair: OscillatorPair, n: int) -> float:
    """Probability of the transition from the initial ground state to level n.

    Within ``LIMIT_SWITCH_DELTA`` of ``length_ratio = 1`` the Poisson limit
    branch is used; everywhere else the closed form is evaluated through
    the damped Hermite recurrence.
    """
    if n < 0:
        raise ValueError(f"level index must be non-negative, got {n}")
    if abs(pair.length_ratio - 1.0) < LIMIT_SWITCH_DELTA:
        return fcf_0n_equal_freq(pair.shift, n)
    arg, ratio = hermite_argument(pair)
    it = _signed_terms(arg.magnitude, arg.sign, ratio)
    for _ in range(n):
        next(it)
    h = next(it)
    return _prefactor(pair) * h * h


def fcf_0n_equal_freq(shift: float, n: int) -> float:
    """Equal-frequency (length_ratio -> 1) limit: Poisson with mean shift^2/2."""
    if n < 0:
        raise ValueError(f"level index must be non-negative, got {n}")
    if not math.isfinite(shift):
        raise ValueError(f"shift must be finite, got {shift}")
    lam = 0.5 * shift * shift
    if lam == 0.0:
        return 1.0 if n == 0 else 0.0
    # log-domain guards n! for large n
    return math.exp(-lam + n * math.log(lam) - math.lgamma(n + 1))


def _term_iter(pair: OscillatorPair) -> Iterator[float]:
    """Yield P_0n for n = 0, 1, 2, ... without recomputing the recurrence."""
    if abs(pair.length_ratio - 1.0) < LIMIT_SWITCH_DELTA:
        lam = 0.5 * pair.shift**2
        p = math.exp(-lam)
        n = 0
        while True:
            yield p
            n += 1
            p *= lam / n
    else:
        arg, ratio = hermite_argument(pair)
        pref = _prefactor(pair)
        for h in _signed_terms(arg.magnitude, arg.sign, ratio):
            yield pref * h * h


def fcf_distribution(
    pair: OscillatorPair,
    tail_tolerance: float = 1e-12,
    n_cap: int = 10_000,
    renormalize: bool = False,
) -> FcfDistribution:
    """Build the truncated probability distribution over final levels.

    Terms accumulate until the captured mass reaches ``1 - tail_tolerance``
    and the last ``8`` consecutive terms are each below
    ``tail_tolerance / 100`` (so a lull between modes cannot end the scan
    early).  Trailing sub-threshold terms are then dropped again as long as
    the captured mass stays above ``1 - tail_tolerance``, which keeps
    degenerate single-level distributions from carrying padding zeros.

    Parameters
    ----------
    pair : OscillatorPair
        Transition parameters.
    tail_tolerance : float
        Maximum probability mass allowed beyond the truncation level;
        must lie in (0, 1).
    n_cap : int
        Hard cap on the number of terms scanned; reaching it before the
        stopping rule fires raises :class:`TruncationFailure`.
    renormalize : bool
        Scale the retained probabilities to unit sum.  Leave off for
        physics output (the tail is reported instead); required for
        entropy work where a sub-normalized vector is meaningless.

    Returns
    -------
    FcfDistribution
        ``tail_mass`` always records the pre-renormalization tail.
    """
    if not 0.0 < tail_tolerance < 1.0:
        raise ValueError(f"tail_tolerance must lie in (0, 1), got {tail_tolerance}")
    if n_cap < 1:
        raise ValueError(f"n_cap must be at least 1, got {n_cap}")

    quiet_cutoff = tail_tolerance / 100.0
    target = 1.0 - tail_tolerance
    terms: list[float] = []
    total = 0.0
    quiet = 0
    stopped = False
    for p in _term_iter(pair):
        terms.append(p)
        total += p
        quiet = quiet + 1 if p < quiet_cutoff else 0
        if total >= target and quiet >= _QUIET_RUN:
            stopped = True
            break
        if len(terms) >= n_cap:
            break
    if not stopped:
        raise TruncationFailure(
            f"no truncation point below n_cap={n_cap} for shift={pair.shift}, "
            f"length_ratio={pair.length_ratio}, tail_tolerance={tail_tolerance}"
        )

    while terms and terms[-1] < quiet_cutoff and total - terms[-1] >= target:
        total -= terms.pop()

    probs = np.array(terms, dtype=np.float64)
    captured = float(probs.sum())
    tail_mass = max(0.0, 1.0 - captured)
    if renormalize:
        probs = probs / captured
    return FcfDistribution(
        params=pair, probs=probs, tail_mass=tail_mass, renormalized=renormalize
    )
