# -*- coding: utf-8 -*-
#
#
# pycutoff software framework for exact and asymptotic character ratios
# of the symmetric group and the mixing behaviour of conjugacy class
# random walks on S_n.
#
# Copyright (C) the pycutoff contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>
"""Monte Carlo simulation of the random k-cycle walk on S_n.

Permutations are stored as integer arrays of images and simulated in batches: row b of a batch is one independent
walk. After t steps every walk is tallied by its cycle type.
"""

# external _imports
import time
from collections import Counter
from functools import partial
from multiprocessing import Pool
from typing import Dict

import numpy as np
import pandas as pd

# pycutoff internal _imports
from pycutoff import config
from pycutoff.exceptions import PyCutoffException
from pycutoff.mixing import ClassDistribution, tv_distance
from pycutoff.partitions import CycleType

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"


#########
# types #
#########


class ClassHistogram:
    """Counts of sampled permutations per conjugacy class."""

    __slots__ = ["n", "counts"]

    def __init__(self, n: int, counts: Dict[CycleType, int] = None):
        self.n = n
        self.counts = Counter()
        for rho, c in (counts or {}).items():
            if rho.n != n:
                raise ValueError(f"Class {rho} does not belong to S_{n}.")
            self.counts[rho] += int(c)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other):
        """Histogram holding the counts of both histograms."""
        if other.n != self.n:
            raise ValueError(f"Histograms over S_{self.n} and S_{other.n} cannot be merged.")
        return ClassHistogram(self.n, self.counts + other.counts)

    def __add__(self, other):
        return self.merge(other)

    def __eq__(self, other):
        return isinstance(other, ClassHistogram) and self.n == other.n and self.counts == other.counts

    def to_distribution(self) -> ClassDistribution:
        total = self.total
        return ClassDistribution(self.n, {rho: c / total for rho, c in self.counts.items()}, kind="empirical")

    def to_frame(self) -> pd.DataFrame:
        total = self.total
        rows = [{"cycle_type": str(rho), "count": c, "frequency": c / total}
                for rho, c in sorted(self.counts.items(), key=lambda item: item[0].cycles.parts, reverse=True)]
        return pd.DataFrame(rows, columns=["cycle_type", "count", "frequency"])

    def __repr__(self):
        return f"<{self.__class__.__name__} n={self.n} total={self.total}>"


############
# sampling #
############


def sample_k_cycle(n: int, k: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform k-cycle of S_n as array of images. An ordered k-subset (i_1, ..., i_k) is drawn uniformly and closed
    into the cycle i_1 -> i_2 -> ... -> i_k -> i_1; every k-cycle arises from exactly k ordered subsets."""
    if not 2 <= k <= n:
        raise ValueError(f"Cycle length k = {k} must lie in [2, n] for n = {n}.")
    idx = rng.choice(n, size=k, replace=False)
    perm = np.arange(n)
    perm[idx] = np.roll(idx, -1)
    return perm


def sample_k_cycles(n: int, k: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """Batch of `size` independent uniform k-cycles, shape (size, n)."""
    idx = rng.random((size, n)).argsort(axis=1)[:, :k]
    perms = np.tile(np.arange(n), (size, 1))
    rows = np.arange(size)[:, None]
    perms[rows, idx] = np.roll(idx, -1, axis=1)
    return perms


def compose(sigma: np.ndarray, tau: np.ndarray) -> np.ndarray:
    """Row-wise composition (sigma o tau)(i) = sigma(tau(i))."""
    return np.take_along_axis(sigma, tau, axis=-1)


def cycle_type_counts(perms: np.ndarray) -> np.ndarray:
    """Number of cycles of each length for a batch of permutations; entry [b, L] counts the L-cycles of row b."""
    perms = np.atleast_2d(perms)
    size, n = perms.shape
    identity = np.arange(n)
    lengths = np.zeros((size, n), dtype=np.int64)
    power = perms.copy()
    for L in range(1, n + 1):
        lengths[(power == identity) & (lengths == 0)] = L
        power = compose(perms, power)
    counts = np.zeros((size, n + 1), dtype=np.int64)
    for L in range(1, n + 1):
        counts[:, L] = (lengths == L).sum(axis=1) // L
    return counts


def _to_cycle_type(count_vector) -> CycleType:
    cycles = []
    for L in range(len(count_vector) - 1, 0, -1):
        cycles.extend([L] * int(count_vector[L]))
    return CycleType(cycles)


def cycle_type_of(perm: np.ndarray) -> CycleType:
    return _to_cycle_type(cycle_type_counts(perm)[0])


########
# walk #
########


def _simulate_chunk(seed: np.random.SeedSequence, n: int, k: int, t: int, samples: int, batch_size: int,
                    check_parity: bool) -> Dict[tuple, int]:
    """Simulate `samples` independent t-step walks and tally their cycle count vectors."""
    rng = np.random.default_rng(seed)
    expected_sign = (-1) ** ((k - 1) * t)
    tally = Counter()
    done = 0
    while done < samples:
        size = min(batch_size, samples - done)
        state = np.tile(np.arange(n), (size, 1))
        for _ in range(t):
            state = compose(sample_k_cycles(n, k, size, rng), state)
        counts = cycle_type_counts(state)
        if check_parity:
            signs = np.where((n - counts.sum(axis=1)) % 2 == 0, 1, -1)
            if np.any(signs != expected_sign):
                raise PyCutoffException(f"Sampled a permutation of sign {-expected_sign} after {t} steps of the "
                                        f"{k}-cycle walk, expected sign {expected_sign}.")
        vectors, freqs = np.unique(counts, axis=0, return_counts=True)
        for vec, c in zip(vectors, freqs):
            tally[tuple(int(x) for x in vec)] += int(c)
        done += size
    return dict(tally)


def run_walk(cfg=None, verbose: bool = False) -> ClassHistogram:
    """Simulate independent t-step k-cycle walks from the identity and tally them by cycle type.

    Samples are split evenly over `cfg.workers` worker processes. Worker i draws from the i-th child of
    `SeedSequence(cfg.seed)`, so results are reproducible for a fixed (seed, workers) pair.

    Parameters
    ----------
    cfg
        `WalkConfig` or path to one.
    verbose
        If true, progress is printed.

    Returns
    -------
    ClassHistogram
    """
    cfg = config.walk(cfg)
    t0 = time.perf_counter()
    if verbose:
        print("Simulation Progress")
        print("-------------------")
        print(f"\t (1) Simulating {cfg.samples} walks of {cfg.t} random {cfg.k}-cycles on S_{cfg.n} with "
              f"{cfg.workers} worker(s)...")

    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.workers)
    per_worker, rest = divmod(cfg.samples, cfg.workers)
    chunks = [(seed, per_worker + (1 if i < rest else 0)) for i, seed in enumerate(seeds)]
    chunks = [(seed, s) for seed, s in chunks if s > 0]

    worker = partial(_run_chunk, n=cfg.n, k=cfg.k, t=cfg.t, batch_size=cfg.batch_size,
                     check_parity=cfg.check_parity)
    if cfg.workers > 1:
        with Pool(cfg.workers) as pool:
            tallies = pool.map(worker, chunks)
    else:
        tallies = [worker(chunk) for chunk in chunks]

    hist = ClassHistogram(cfg.n)
    for tally in tallies:
        hist = hist + ClassHistogram(cfg.n, {_to_cycle_type(vec): c for vec, c in tally.items()})

    if verbose:
        print(f"\t\t...finished after {time.perf_counter() - t0}s.")

    return hist


def _run_chunk(chunk, n, k, t, batch_size, check_parity):
    seed, samples = chunk
    return _simulate_chunk(seed, n, k, t, samples, batch_size, check_parity)


def empirical_tv(h: ClassHistogram, ref: ClassDistribution) -> float:
    """Total variation distance between the empirical class distribution of `h` and `ref`."""
    if h.n != ref.n:
        raise ValueError(f"Histogram over S_{h.n} and distribution over S_{ref.n} cannot be compared.")
    return float(tv_distance(h.to_distribution(), ref))
