"""Franck-Condon factors and entropic analysis of their level distributions."""

from .entropy import (
    EntropyReport,
    JointDistribution,
    UnsupportedArity,
    entropy_report,
    marginals,
    shannon_entropy,
)
from .fcf import (
    LIMIT_SWITCH_DELTA,
    FcfDistribution,
    OscillatorPair,
    TruncationFailure,
    fcf_0n,
    fcf_0n_equal_freq,
    fcf_distribution,
    hermite_argument,
)
from .hermite import HermiteSignedArg, normalized_hermite_sequence
from .indexmap import (
    UNBOUNDED,
    Factorization,
    IndexOutOfRange,
    decode,
    encode,
    quantum_number_to_index,
)
from .overlap import overlap_quadrature
from .surface import CSV_HEADER, MiSurface, SurfaceRow, SweepConfig, sweep, write_csv

__version__ = "0.1.0"

__all__ = [
    "LIMIT_SWITCH_DELTA",
    "UNBOUNDED",
    "CSV_HEADER",
    "EntropyReport",
    "Factorization",
    "FcfDistribution",
    "HermiteSignedArg",
    "IndexOutOfRange",
    "JointDistribution",
    "MiSurface",
    "OscillatorPair",
    "SurfaceRow",
    "SweepConfig",
    "TruncationFailure",
    "UnsupportedArity",
    "decode",
    "encode",
    "entropy_report",
    "fcf_0n",
    "fcf_0n_equal_freq",
    "fcf_distribution",
    "hermite_argument",
    "marginals",
    "normalized_hermite_sequence",
    "overlap_quadrature",
    "quantum_number_to_index",
    "shannon_entropy",
    "sweep",
    "write_csv",
    "__version__",
]
