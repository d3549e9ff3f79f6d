"""Shannon entropies of factored spectral distributions.

A flat probability vector over levels, combined with a
:class:`~fcentropy.indexmap.Factorization`, becomes a joint distribution
over artificial subsystems.  This module computes its marginals, the
subsystem entropies, mutual information, and the slack of the classical
entropy inequalities (subadditivity for two parts, strong subadditivity
for three).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .indexmap import UNBOUNDED, Factorization

__all__ = [
    "UnsupportedArity",
    "JointDistribution",
    "EntropyReport",
    "shannon_entropy",
    "marginals",
    "entropy_report",
]

_SUM_TOLERANCE = 1e-10


class UnsupportedArity(ValueError):
    """Raised for factorizations this analysis does not cover."""


def shannon_entropy(p: Sequence[float] | np.ndarray, base: float = math.e) -> float:
    """Shannon entropy of a probability vector, zero-terms skipped.

    Accumulates in nats and rescales once, so base-2 results for uniform
    power-of-two vectors land on exact integers.  A one-cell vector has no
    uncertainty by definition and returns exactly 0.0 even if its single
    entry is off unity by rounding.
    """
    arr = np.asarray(p, dtype=np.float64).ravel()
    if arr.size == 0:
        raise ValueError("probability vector must be non-empty")
    if not np.all(np.isfinite(arr)):
        raise ValueError("probability vector must be finite")
    if np.any(arr < 0.0):
        raise ValueError("probability vector must be non-negative")
    total = float(arr.sum())
    if abs(total - 1.0) > _SUM_TOLERANCE:
        raise ValueError(f"probabilities must sum to 1, got {total}")
    if not math.isfinite(base) or base <= 0.0 or base == 1.0:
        raise ValueError(f"log base must be positive and != 1, got {base}")
    if arr.size == 1:
        return 0.0
    support = arr[arr > 0.0]
    # a cell one ulp above 1 would otherwise yield a tiny negative value
    nats = max(0.0, float(-np.dot(support, np.log(support))))
    if base == math.e:
        return nats
    return nats / math.log(base)


@dataclass(frozen=True)
class JointDistribution:
    """Flat level probabilities read as a joint over factored subsystems.

    ``probs[i]`` is the weight of flat index ``y = i + 1``; ``sizes`` is
    the factorization with any unbounded tail resolved to the smallest
    bounded size covering the data.
    """

    factorization: Factorization
    sizes: tuple[int, ...]
    probs: np.ndarray

    @classmethod
    def from_sequence(
        cls, probs: Sequence[float] | np.ndarray, factorization: Factorization
    ) -> "JointDistribution":
        """Wrap a level distribution, zero-padding up to a full index block.

        An unbounded last factor becomes ``ceil(len / prod(bounded))``; a
        fully bounded factorization must be large enough to hold the data.
        """
        arr = np.asarray(probs, dtype=np.float64).ravel()
        if arr.size == 0:
            raise ValueError("probability vector must be non-empty")
        if not np.all(np.isfinite(arr)):
            raise ValueError("probability vector must be finite")
        if np.any(arr < 0.0):
            raise ValueError("probability vector must be non-negative")
        total = float(arr.sum())
        if abs(total - 1.0) > _SUM_TOLERANCE:
            raise ValueError(f"probabilities must sum to 1, got {total}")

        if factorization.is_bounded:
            capacity = factorization.capacity
            if arr.size > capacity:
                raise ValueError(
                    f"{arr.size} probabilities exceed factorization capacity {capacity}"
                )
            sizes = tuple(factorization.sizes)
        else:
            block = math.prod(factorization.sizes[:-1])
            last = -(-arr.size // block)
            sizes = tuple(factorization.sizes[:-1]) + (last,)
            capacity = block * last
        if arr.size < capacity:
            arr = np.pad(arr, (0, capacity - arr.size))
        return cls(factorization=factorization, sizes=sizes, probs=arr)

    @property
    def arity(self) -> int:
        return len(self.sizes)

    def _array(self) -> np.ndarray:
        # C-order with the first coordinate fastest: subsystem i on axis
        # arity - i
        return self.probs.reshape(tuple(reversed(self.sizes)))

    def _axis(self, subsystem: int) -> int:
        return self.arity - subsystem


def marginals(j: JointDistribution) -> list[np.ndarray]:
    """Per-subsystem marginal vectors, in subsystem order."""
    arr = j._array()
    out = []
    for subsystem in range(1, j.arity + 1):
        keep = j._axis(subsystem)
        drop = tuple(ax for ax in range(j.arity) if ax != keep)
        out.append(arr.sum(axis=drop) if drop else arr.copy())
    return out


@dataclass(frozen=True)
class EntropyReport:
    """Entropies of one factored distribution.

    ``mutual_information`` is the total correlation
    ``sum(h_parts) - h_joint`` (for two parts, the ordinary mutual
    information).  ``inequality_slack`` is the left-over of the governing
    entropy inequality: subadditivity for two parts (equal to the mutual
    information), strong subadditivity across the middle subsystem for
    three.  Both are non-negative up to rounding.
    """

    h_parts: tuple[float, ...]
    h_joint: float
    mutual_information: float
    inequality_slack: float
    base: float


def entropy_report(j: JointDistribution, base: float = math.e) -> EntropyReport:
    """Entropy summary of a bipartite or tripartite factored distribution."""
    if j.arity not in (2, 3):
        raise UnsupportedArity(
            f"entropy report covers 2 or 3 subsystems, got {j.arity}"
        )
    h_parts = tuple(shannon_entropy(m, base=base) for m in marginals(j))
    h_joint = shannon_entropy(j.probs, base=base)
    mutual_information = sum(h_parts) - h_joint
    if j.arity == 2:
        inequality_slack = mutual_information
    else:
        arr = j._array()
        h_12 = shannon_entropy(arr.sum(axis=j._axis(3)).ravel(), base=base)
        h_23 = shannon_entropy(arr.sum(axis=j._axis(1)).ravel(), base=base)
        h_2 = h_parts[1]
        inequality_slack = h_12 + h_23 - h_joint - h_2
    return EntropyReport(
        h_parts=h_parts,
        h_joint=h_joint,
        mutual_information=mutual_information,
        inequality_slack=inequality_slack,
        base=base,
    )
