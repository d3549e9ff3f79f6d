"""Gauss-Hermite quadrature route to vibrational overlap probabilities.

Serves as an independent cross-check on the closed form in
:mod:`fcentropy.fcf`: no code is shared beyond the parameter container.
The integrand is a polynomial of degree ``m + n`` under a Gaussian weight
once the two wavefunction envelopes are merged analytically, so the rule
is algebraically exact whenever the node count exceeds half the degree.

Two numerical precautions matter here.  Hermite polynomials are evaluated
in the orthonormalized form ``H_k(u) / sqrt(2^k k!)`` via a dedicated
recurrence, keeping values representable up to ``k = 200`` at the node
positions used.  And the merged envelope is pulled out of the sum as one
closed-form constant, so no per-node exponential is ever taken: the sum
itself is pure polynomial arithmetic.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.special import roots_hermite

from .fcf import OscillatorPair

__all__ = ["MAX_LEVEL", "overlap_quadrature"]

# Highest vibrational index accepted on either side.
MAX_LEVEL = 200

# Node-count ceiling; keeps the outermost node t below sqrt(681) so the
# associated weight ~exp(-t^2) stays inside double range.
_MAX_NODES = 340


@lru_cache(maxsize=None)
def _hermite_rule(n_nodes: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = roots_hermite(n_nodes)
    return nodes, weights


def _scaled_hermite(level: int, points: np.ndarray) -> np.ndarray:
    """Evaluate H_level(points) / sqrt(2^level level!) elementwise."""
    prev = np.ones_like(points)
    if level == 0:
        return prev
    cur = points * math.sqrt(2.0)
    for k in range(1, level):
        prev, cur = cur, points * math.sqrt(2.0 / (k + 1)) * cur - math.sqrt(
            k / (k + 1)
        ) * prev
    return cur


def overlap_quadrature(m: int, n: int, pair: OscillatorPair) -> float:
    """Squared overlap of initial level m with final level n, by quadrature.

    Parameters
    ----------
    m, n : int
        Vibrational indices of the initial and final oscillator,
        each in ``[0, 200]``.
    pair : OscillatorPair
        Transition parameters; any positive length ratio is accepted,
        including exactly 1.

    Returns
    -------
    float
        The transition probability ``|<m|n'>|^2``.
    """
    for name, level in (("m", m), ("n", n)):
        if not 0 <= level <= MAX_LEVEL:
            raise ValueError(
                f"{name} must lie in [0, {MAX_LEVEL}], got {level}"
            )
    a = pair.shift
    l = pair.length_ratio
    lsq = l * l

    # count for algebraic exactness, padded against rounding; wide shifts
    # push the integrand's mass outward and earn extra nodes
    n_nodes = min(
        _MAX_NODES,
        (m + n) // 2 + 1 + 16 + int(math.ceil(a * a * max(1.0, 1.0 / lsq))),
    )
    t, w = _hermite_rule(n_nodes)

    # substitution x = -mu + s*t merges both envelopes into exp(-t^2) times
    # a single constant; mu = a*l^2/(l^2+1), s = l*sqrt(2/(l^2+1))
    u = a / (lsq + 1.0) + l * math.sqrt(2.0 / (lsq + 1.0)) * t
    v = -a * l / (lsq + 1.0) + math.sqrt(2.0 / (lsq + 1.0)) * t

    hm = _scaled_hermite(m, u)
    hn = _scaled_hermite(n, v)
    # grouping w with hn first keeps intermediates small at outer nodes
    core = float(np.dot(hm, w * hn))

    amplitude = (
        core
        * math.sqrt(2.0 * l / (math.pi * (lsq + 1.0)))
        * math.exp(-a * a / (2.0 * (lsq + 1.0)))
    )
    return amplitude * amplitude
