"""Acceptance gate: every release criterion, one test per criterion.

Each test prints a single PASS/FAIL line (visible under ``pytest -s``)
and asserts the same condition, so the suite result is the gate.
Tolerances are pinned here and must not be loosened to make a run green.
"""

import itertools
import math

import numpy as np
import pytest

from fcentropy.cli import main
from fcentropy.entropy import JointDistribution, entropy_report, shannon_entropy
from fcentropy.fcf import OscillatorPair, fcf_0n, fcf_0n_equal_freq, fcf_distribution
from fcentropy.indexmap import UNBOUNDED, Factorization, decode, encode
from fcentropy.overlap import overlap_quadrature

SEED = 20260819
PARITY = Factorization((2, UNBOUNDED))


def _verdict(num, label, ok):
    print(f"criterion {num:2d} [{label}]: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({label}) failed"


def _mi_of(pair):
    dist = fcf_distribution(pair, renormalize=True)
    joint = JointDistribution.from_sequence(dist.probs, PARITY)
    return entropy_report(joint).mutual_information


def test_criterion_01_normalization():
    a_grid = np.linspace(0.0, 4.0, 20)
    l_grid = np.append(np.linspace(0.3, 3.0, 19), 1.0)
    worst = 0.0
    for a in a_grid:
        for l in l_grid:
            dist = fcf_distribution(
                OscillatorPair(float(a), float(l)), tail_tolerance=1e-12
            )
            total = float(dist.probs.sum())
            worst = max(
                worst,
                abs(total + dist.tail_mass - 1.0),
                max(0.0, 1.0 - total),
            )
    _verdict(1, "normalization", worst <= 1e-10)


def test_criterion_02_oracle_equivalence():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for i in range(50):
        a = float(rng.uniform(0.0, 3.0))
        l = float(rng.uniform(0.35, 0.95) if i % 2 == 0 else rng.uniform(1.05, 3.0))
        pair = OscillatorPair(a, l)
        for n in range(31):
            p = fcf_0n(pair, n)
            if p < 1e-12:
                continue
            q = overlap_quadrature(0, n, pair)
            worst = max(worst, abs(p - q) / p)
    _verdict(2, "oracle equivalence", worst <= 1e-8)


def test_criterion_03_limit_continuity():
    worst = 0.0
    for a in np.linspace(0.0, 3.0, 13):
        for l in (1.0 - 1e-4, 1.0 + 1e-4):
            pair = OscillatorPair(float(a), l)
            for n in range(21):
                worst = max(
                    worst, abs(fcf_0n(pair, n) - fcf_0n_equal_freq(float(a), n))
                )
    _verdict(3, "limit continuity", worst <= 1e-3)


def test_criterion_04_bijection_round_trip():
    failures = 0
    for sizes in itertools.product(range(1, 11), repeat=3):
        f = Factorization(sizes)
        for y in range(1, f.capacity + 1):
            if encode(decode(y, f), f) != y:
                failures += 1
    _verdict(4, "bijection round trip", failures == 0)


def test_criterion_05_subadditivity():
    rng = np.random.default_rng(SEED)
    min_slack = math.inf
    for _ in range(10_000):
        n_a = int(rng.integers(2, 13))
        n_b = int(rng.integers(2, 13))
        probs = rng.dirichlet(np.ones(n_a * n_b))
        joint = JointDistribution.from_sequence(probs, Factorization((n_a, n_b)))
        min_slack = min(min_slack, entropy_report(joint).inequality_slack)
    for a in np.linspace(0.0, 4.0, 30):
        for l in np.linspace(0.3, 3.0, 30):
            dist = fcf_distribution(
                OscillatorPair(float(a), float(l)), renormalize=True
            )
            joint = JointDistribution.from_sequence(dist.probs, PARITY)
            min_slack = min(min_slack, entropy_report(joint).inequality_slack)
    _verdict(5, "subadditivity", min_slack >= -1e-12)


def test_criterion_06_strong_subadditivity():
    rng = np.random.default_rng(SEED + 1)
    min_slack = math.inf
    for _ in range(1_000):
        sizes = tuple(int(s) for s in rng.integers(2, 7, size=3))
        probs = rng.dirichlet(np.ones(math.prod(sizes)))
        joint = JointDistribution.from_sequence(probs, Factorization(sizes))
        min_slack = min(min_slack, entropy_report(joint).inequality_slack)
    split3 = Factorization((2, 2, UNBOUNDED))
    for a in np.linspace(0.0, 4.0, 15):
        for l in np.linspace(0.3, 3.0, 15):
            dist = fcf_distribution(
                OscillatorPair(float(a), float(l)), renormalize=True
            )
            joint = JointDistribution.from_sequence(dist.probs, split3)
            min_slack = min(min_slack, entropy_report(joint).inequality_slack)
    _verdict(6, "strong subadditivity", min_slack >= -1e-12)


def test_criterion_07_independence_at_zero_shift():
    worst = max(
        abs(_mi_of(OscillatorPair(0.0, float(l))))
        for l in np.linspace(1.05, 3.0, 100)
    )
    _verdict(7, "independence at a=0", worst <= 1e-10)


def test_criterion_08_periodicity_of_correlations():
    mi = np.array(
        [_mi_of(OscillatorPair(float(a), 2.0)) for a in np.linspace(0.0, 4.0, 400)]
    )
    n_maxima = sum(
        1
        for i in range(1, len(mi) - 1)
        if mi[i] > mi[i - 1] and mi[i] > mi[i + 1]
    )
    _verdict(8, "periodicity (>= 2 interior maxima)", n_maxima >= 2)


def test_criterion_09_determinism(tmp_path, capsys):
    flags = [
        "surface",
        "--a-min", "0", "--a-max", "2", "--a-steps", "3",
        "--l-min", "1.5", "--l-max", "2.5", "--l-steps", "3",
    ]
    paths = [tmp_path / "run1.csv", tmp_path / "run2.csv"]
    codes = [main(flags + ["--out", str(p)]) for p in paths]
    capsys.readouterr()
    ok = codes == [0, 0] and paths[0].read_bytes() == paths[1].read_bytes()
    _verdict(9, "byte-identical CSV", ok)


def test_criterion_10_entropy_sanity():
    worst = 0.0
    for K in (2, 4, 8):
        p = np.full(K, 1.0 / K)
        h_nats = shannon_entropy(p, base=math.e)
        h_bits = shannon_entropy(p, base=2)
        worst = max(
            worst,
            abs(h_nats - math.log(K)),
            abs(h_bits - math.log2(K)),
            abs(h_bits * math.log(2) - h_nats),
        )
    _verdict(10, "entropy sanity", worst <= 1e-14)
