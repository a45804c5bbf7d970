"""Shared fixtures: exhaustive enumeration oracle and small helpers."""

import itertools

import numpy as np
import pytest
from scipy.stats import binom

from spirochain import LINK_ORDER, LinkType, enumerate_all, evaluate, replay


class EnumOracle:
    """Exhaustive sweep over all link sequences of small chains.

    Chains are replayed once per sequence and shared across indices and
    probability vectors; values always come from full graph evaluation, so
    the oracle is independent of the closed-form layer.
    """

    def __init__(self, max_n=9):
        self.max_n = max_n
        self._chains = {}
        self._weights = {}
        self._values = {}

    def chains(self, n):
        if n not in self._chains:
            self._chains[n] = [
                (combo, replay(combo))
                for combo in itertools.product(LINK_ORDER, repeat=n - 2)
            ]
        return self._chains[n]

    def weights(self, n, probs):
        key = (n, probs.as_tuple())
        if key not in self._weights:
            combos = [combo for combo, _ in self.chains(n)]
            pairs = list(enumerate_all(n, probs))
            assert [combo for combo, _ in pairs] == combos
            self._weights[key] = np.array([w for _, w in pairs], dtype=float)
        return self._weights[key]

    def values(self, n, spec):
        key = (n, spec.name, spec.exponent)
        if key not in self._values:
            self._values[key] = np.array(
                [evaluate(spec, chain.graph) for _, chain in self.chains(n)]
            )
        return self._values[key]

    def ortho_counts(self, n):
        return np.array(
            [sum(1 for link in combo if link is LinkType.ORTHO)
             for combo, _ in self.chains(n)],
            dtype=np.int64,
        )


@pytest.fixture(scope="session")
def enum_oracle():
    return EnumOracle()


def rel_close(a, b, rtol, atol=1e-15):
    """|a - b| within rtol of the larger magnitude, with a tiny floor."""
    return abs(a - b) <= max(rtol * max(abs(a), abs(b)), atol)


def binomial_chi_square(ortho_counts, m, p, min_expected=5.0):
    """Chi-square fit of observed ortho counts to Binomial(m, p).

    Pools sparse adjacent outcome classes until each pooled class has the
    minimum expected count.  Returns (statistic, degrees_of_freedom).
    """
    counts = np.bincount(np.asarray(ortho_counts), minlength=m + 1)
    total = counts.sum()
    expected = binom.pmf(np.arange(m + 1), m, p) * total

    pooled_obs, pooled_exp = [], []
    acc_obs = acc_exp = 0.0
    for obs, exp in zip(counts, expected):
        acc_obs += obs
        acc_exp += exp
        if acc_exp >= min_expected:
            pooled_obs.append(acc_obs)
            pooled_exp.append(acc_exp)
            acc_obs = acc_exp = 0.0
    if acc_exp > 0:
        if pooled_exp:
            pooled_obs[-1] += acc_obs
            pooled_exp[-1] += acc_exp
        else:
            pooled_obs.append(acc_obs)
            pooled_exp.append(acc_exp)

    pooled_obs = np.array(pooled_obs)
    pooled_exp = np.array(pooled_exp)
    statistic = float(np.sum((pooled_obs - pooled_exp) ** 2 / pooled_exp))
    return statistic, max(len(pooled_exp) - 1, 1)
