"""Bijection between composite 1-based indices and a flat 1-based index.

A spectrum labeled by a single level index can be re-read as a joint
outcome of several artificial subsystems by factoring the index.  The
factor sizes are fixed up front; the last factor may be left unbounded
(``UNBOUNDED``) so an infinite level ladder splits into finitely many
bounded digits plus one open-ended one.  Encoding is little-endian: the
first coordinate varies fastest.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Optional

__all__ = [
    "UNBOUNDED",
    "Factorization",
    "IndexOutOfRange",
    "encode",
    "decode",
    "quantum_number_to_index",
]

# Sentinel for an open-ended final factor.
UNBOUNDED = None


class IndexOutOfRange(ValueError):
    """A coordinate or flat index fell outside its declared range."""


@dataclass(frozen=True)
class Factorization:
    """Ordered factor sizes, e.g. ``(2, 3)`` or ``(2, 2, UNBOUNDED)``.

    Every size is an integer >= 1; only the last may be ``UNBOUNDED``.
    """

    sizes: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        if len(self.sizes) == 0:
            raise ValueError("factorization needs at least one factor")
        for k, size in enumerate(self.sizes, start=1):
            if size is UNBOUNDED:
                if k != len(self.sizes):
                    raise ValueError(
                        f"only the last factor may be unbounded, factor {k} is not last"
                    )
            elif not isinstance(size, int) or isinstance(size, bool) or size < 1:
                raise ValueError(f"factor {k} must be an integer >= 1, got {size!r}")

    @property
    def arity(self) -> int:
        return len(self.sizes)

    @property
    def is_bounded(self) -> bool:
        return self.sizes[-1] is not UNBOUNDED

    @property
    def capacity(self) -> Optional[int]:
        """Total number of flat indices, or None when unbounded."""
        if not self.is_bounded:
            return None
        return prod(self.sizes)


def quantum_number_to_index(n: int) -> int:
    """Map a 0-based vibrational level to the 1-based flat index."""
    if n < 0:
        raise IndexOutOfRange(f"level index must be non-negative, got {n}")
    return n + 1


def encode(x: tuple[int, ...], f: Factorization) -> int:
    """Combine 1-based coordinates into the 1-based flat index.

    ``y = x1 + (x2-1)*X1 + (x3-1)*X1*X2 + ...``
    """
    if len(x) != f.arity:
        raise ValueError(
            f"expected {f.arity} coordinates, got {len(x)}"
        )
    for k, (coord, size) in enumerate(zip(x, f.sizes), start=1):
        if not isinstance(coord, int) or isinstance(coord, bool):
            raise IndexOutOfRange(f"coordinate {k} must be an integer, got {coord!r}")
        if coord < 1:
            raise IndexOutOfRange(f"coordinate {k} must be >= 1, got {coord}")
        if size is not UNBOUNDED and coord > size:
            raise IndexOutOfRange(
                f"coordinate {k} must be <= {size}, got {coord}"
            )
    y = 0
    block = 1
    for coord, size in zip(x, f.sizes):
        y += (coord - 1) * block
        if size is not UNBOUNDED:
            block *= size
    return y + 1


def decode(y: int, f: Factorization) -> tuple[int, ...]:
    """Split the 1-based flat index back into 1-based coordinates."""
    if not isinstance(y, int) or isinstance(y, bool) or y < 1:
        raise IndexOutOfRange(f"flat index must be an integer >= 1, got {y!r}")
    cap = f.capacity
    if cap is not None and y > cap:
        raise IndexOutOfRange(f"flat index must be <= {cap}, got {y}")
    z = y - 1
    coords = []
    for size in f.sizes[:-1]:
        coords.append(z % size + 1)
        z //= size
    coords.append(z + 1)
    return tuple(coords)
