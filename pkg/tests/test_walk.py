"""Test suite for the Monte Carlo simulation of the random k-cycle walk."""

__author__ = "pycutoff contributors"
__status__ = "Development"

from collections import Counter

import numpy as np
import pytest
from scipy.stats import chisquare

from pycutoff import config
from pycutoff.exceptions import PyCutoffException
from pycutoff.mixing import ExactWalk, CosetUniform
from pycutoff.partitions import CycleType
from pycutoff import walk as walk_module
from pycutoff.walk import ClassHistogram, sample_k_cycle, sample_k_cycles, compose, cycle_type_counts, \
    cycle_type_of, run_walk, empirical_tv

# meta infos
tolerance = 0.03


def setup_module():
    print("\n")
    print("===================")
    print("| Test Suite Walk |")
    print("===================")


############
# sampling #
############


def test_sample_k_cycle():
    rng = np.random.default_rng(1)
    for n, k in ((5, 2), (8, 3), (8, 8)):
        for _ in range(20):
            perm = sample_k_cycle(n, k, rng)
            assert sorted(perm) == list(range(n))
            assert cycle_type_of(perm) == CycleType.k_cycle(n, k)
    with pytest.raises(ValueError):
        sample_k_cycle(5, 1, rng)


def test_sample_k_cycles_batch():
    rng = np.random.default_rng(2)
    perms = sample_k_cycles(9, 4, 500, rng)
    assert perms.shape == (500, 9)
    counts = cycle_type_counts(perms)
    assert (counts[:, 4] == 1).all()
    assert (counts[:, 1] == 5).all()


def test_sample_k_cycles_uniform():
    """Every 3-cycle of S_4 is drawn with probability 1/8."""

    rng = np.random.default_rng(3)
    perms = sample_k_cycles(4, 3, 40000, rng)
    freqs = Counter(tuple(int(x) for x in row) for row in perms)
    assert len(freqs) == 8
    assert chisquare(list(freqs.values())).pvalue > 1e-4


def test_compose():
    sigma = np.array([1, 2, 0, 3])
    tau = np.array([3, 2, 1, 0])
    assert list(compose(sigma, tau)) == [3, 0, 2, 1]
    assert list(compose(sigma, np.arange(4))) == list(sigma)


def test_cycle_types():
    perm = np.array([1, 0, 2, 4, 5, 3])
    assert cycle_type_of(perm) == CycleType([3, 2, 1])
    assert cycle_type_of(np.arange(5)) == CycleType.identity(5)
    counts = cycle_type_counts(np.array([[1, 2, 3, 0], [0, 1, 3, 2]]))
    assert list(counts[0]) == [0, 0, 0, 0, 1]
    assert list(counts[1]) == [0, 2, 1, 0, 0]


##############
# histograms #
##############


def test_class_histogram():
    a = ClassHistogram(4, {CycleType.identity(4): 3, CycleType([2, 2]): 1})
    b = ClassHistogram(4, {CycleType([2, 2]): 4})
    merged = a + b
    assert merged.total == 8
    assert merged.counts[CycleType([2, 2])] == 5
    assert merged == a.merge(b)

    dist = merged.to_distribution()
    assert dist.kind == "empirical"
    assert dist[CycleType([2, 2])] == pytest.approx(5 / 8)

    frame = merged.to_frame()
    assert list(frame.columns) == ["cycle_type", "count", "frequency"]
    assert frame["count"].sum() == 8

    with pytest.raises(ValueError):
        a + ClassHistogram(5)
    with pytest.raises(ValueError):
        ClassHistogram(4, {CycleType.identity(5): 1})


########
# walk #
########


def _cfg(**kwargs):
    return config.walk().update_template(**kwargs)


def test_run_walk_reproducible():
    cfg = _cfg(n=6, k=3, t=4, samples=3000, seed=7, batch_size=1000)
    first = run_walk(cfg)
    assert first.total == 3000
    assert first == run_walk(cfg)
    assert first != run_walk(cfg.update_template(seed=8))

    parallel = run_walk(cfg.update_template(workers=2))
    assert parallel.total == 3000
    assert parallel == run_walk(cfg.update_template(workers=2))


def test_run_walk_parity():
    hist = run_walk(_cfg(n=6, k=2, t=3, samples=2000))
    assert all(rho.sign == -1 for rho in hist.counts)
    hist = run_walk(_cfg(n=6, k=2, t=0, samples=100))
    assert hist.counts == Counter({CycleType.identity(6): 100})


def test_run_walk_parity_check(monkeypatch):
    def _identities(n, k, size, rng):
        return np.tile(np.arange(n), (size, 1))

    monkeypatch.setattr(walk_module, "sample_k_cycles", _identities)
    with pytest.raises(PyCutoffException):
        run_walk(_cfg(n=6, k=2, t=1, samples=10))
    assert run_walk(_cfg(n=6, k=2, t=1, samples=10, check_parity=False)).total == 10


def test_empirical_tv():
    n, k, t = 8, 3, 8
    hist = run_walk(_cfg(n=n, k=k, t=t, samples=20000, seed=0))
    exact = ExactWalk(n, CycleType.k_cycle(n, k)).distribution(t)
    assert empirical_tv(hist, exact) <= tolerance

    early = run_walk(_cfg(n=n, k=k, t=1, samples=2000))
    assert empirical_tv(early, CosetUniform(n, 1).to_distribution()) == pytest.approx(0.994, abs=0.01)

    with pytest.raises(ValueError):
        empirical_tv(hist, CosetUniform(n + 1, 1).to_distribution())


def _empirical_tvs(n: int, k: int, t: int, sample_sizes) -> list:
    exact = ExactWalk(n, CycleType.k_cycle(n, k)).distribution(t)
    return [empirical_tv(run_walk(_cfg(n=n, k=k, t=t, samples=samples, seed=0)), exact) for samples in sample_sizes]


def test_empirical_tv_convergence():
    sample_sizes = (10 ** 3, 10 ** 4, 10 ** 5)
    tvs = _empirical_tvs(8, 3, 8, sample_sizes)
    assert all(tv1 < tv0 for tv0, tv1 in zip(tvs[:-1], tvs[1:]))
    for samples, tv in zip(sample_sizes, tvs):
        assert tv <= 4 / np.sqrt(samples)


@pytest.mark.slow
def test_empirical_tv_convergence_million_samples():
    tvs = _empirical_tvs(8, 3, 8, (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6))
    assert all(tv1 < tv0 for tv0, tv1 in zip(tvs[:-1], tvs[1:]))


def test_empirical_tv_mixed():
    """Well past (n/k) log n the walk is close to uniform on its coset."""
    n, k = 8, 3
    t = int(2 * n / k * np.log(n))
    assert t == 11
    hist = run_walk(_cfg(n=n, k=k, t=t, samples=20000, seed=3))
    coset = CosetUniform.after(CycleType.k_cycle(n, k), t)
    assert coset.coset_sign == 1
    assert empirical_tv(hist, coset.to_distribution()) <= 0.1


@pytest.mark.slow
def test_empirical_tv_million_samples():
    cfg = config.walk("config_templates.defaults.AcceptanceWalk").update_template(workers=2)
    assert cfg.samples == 10 ** 6
    hist = run_walk(cfg)
    exact = ExactWalk(cfg.n, CycleType.k_cycle(cfg.n, cfg.k)).distribution(cfg.t)
    assert empirical_tv(hist, exact) <= 0.01
