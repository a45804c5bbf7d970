"""Closed-form laws of index values on random spiro chains.

Every growth step adds the same local structure, so the value of an index
on a chain is an affine function of two observables: the hexagon count n
and the number of ortho links (equivalently, of adjacent degree-4 pairs).
With per-link increments alpha_i = TI(3-hexagon chain, link i) - TI(seed),
the meta and para increments always coincide, which collapses the law of
the value onto a single binomial count.  That reduction drives everything
here: moments, the exact distribution, the moment generating function, the
centered (martingale) transform, and the cross-index comparison.

The increments are computed from the fixed growth profiles of actual small
chains, not from transcribed per-index formulas; hand-derived constants
live in the test suite as assertions.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.stats import binom

from .chain import LinkProbabilities, LinkType, grow, initial_chain
from .errors import DegenerateVariance, InvalidN
from .graph import EdgeProfile, VertexProfile, edge_profile, vertex_profile
from .indices import IndexKind, IndexSpec, evaluate_from_profile, registry_lookup

# Relative gap between the ortho and meta increments below which an index
# is treated as deterministic on chains.
_DETERMINISTIC_RTOL = 1e-12

COMPARISON_ORDER = ("randic", "nirmala", "sombor", "first-zagreb", "second-zagreb")


@dataclass(frozen=True)
class _GrowthProfiles:
    edge_seed: EdgeProfile
    vertex_seed: VertexProfile
    edge_ortho: EdgeProfile
    edge_meta: EdgeProfile  # para attachment yields the identical profile
    vertex_step: VertexProfile


@functools.cache
def _growth_profiles() -> _GrowthProfiles:
    """Profiles of the 2-hexagon seed and of each 3-hexagon chain."""
    seed = initial_chain(2)
    ortho = grow(seed, LinkType.ORTHO)
    meta = grow(seed, LinkType.META)
    return _GrowthProfiles(
        edge_seed=edge_profile(seed.graph),
        vertex_seed=vertex_profile(seed.graph),
        edge_ortho=edge_profile(ortho.graph),
        edge_meta=edge_profile(meta.graph),
        vertex_step=vertex_profile(meta.graph),
    )


@dataclass(frozen=True)
class ChainCoefficients:
    """Analytic constants of one index on random spiro chains.

    On any chain, value = A + B * m44 + C * n, where m44 counts adjacent
    degree-4 pairs (equal to the number of ortho links).  For vertex-kind
    indices B is 0: their value depends on n alone.
    """

    ti2: float
    alpha_ortho: float
    alpha_meta: float
    alpha_para: float
    alpha_bar: float
    beta: float
    A: float
    B: float
    C: float
    deterministic: bool

    @property
    def alphas(self) -> tuple[float, float, float]:
        return (self.alpha_ortho, self.alpha_meta, self.alpha_para)


def coefficients(spec: IndexSpec, probs: LinkProbabilities) -> ChainCoefficients:
    """Per-link increments and derived constants of `spec` on chains.

    alpha_bar and beta use the reduction p_meta + p_para = 1 - p_ortho, so
    they depend on the probabilities only through p_ortho; with B = 0 the
    reduction keeps deterministic indices exactly deterministic in floating
    point.
    """
    prof = _growth_profiles()
    if spec.kind is IndexKind.VERTEX:
        ti2 = evaluate_from_profile(spec, prof.vertex_seed)
        alpha = evaluate_from_profile(spec, prof.vertex_step) - ti2
        alpha_ortho = alpha_meta = alpha_para = alpha
    else:
        ti2 = evaluate_from_profile(spec, prof.edge_seed)
        alpha_ortho = evaluate_from_profile(spec, prof.edge_ortho) - ti2
        alpha_meta = alpha_para = evaluate_from_profile(spec, prof.edge_meta) - ti2
    b = alpha_ortho - alpha_meta
    p = float(probs.p_ortho)
    alpha_bar = alpha_meta + b * p
    beta = alpha_meta * alpha_meta + (
        alpha_ortho * alpha_ortho - alpha_meta * alpha_meta
    ) * p
    scale = max(1.0, abs(alpha_ortho), abs(alpha_meta))
    return ChainCoefficients(
        ti2=ti2,
        alpha_ortho=alpha_ortho,
        alpha_meta=alpha_meta,
        alpha_para=alpha_para,
        alpha_bar=alpha_bar,
        beta=beta,
        A=ti2 - 2.0 * alpha_meta,
        B=b,
        C=alpha_meta,
        deterministic=abs(b) <= _DETERMINISTIC_RTOL * scale,
    )


def _require_n(n, minimum: int = 2) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < minimum:
        raise InvalidN(f"n must be an integer >= {minimum}, got {n!r}")
    return int(n)


def _variance_rate(coeffs: ChainCoefficients, probs: LinkProbabilities) -> float:
    # Spread form of beta - alpha_bar**2; non-negative by construction.
    p = float(probs.p_ortho)
    return coeffs.B * coeffs.B * p * (1.0 - p)


def expected_value(spec: IndexSpec, n: int, probs: LinkProbabilities) -> float:
    """Mean index value over random chains with n hexagons."""
    n = _require_n(n)
    c = coefficients(spec, probs)
    return c.ti2 + c.alpha_bar * (n - 2)


def variance(spec: IndexSpec, n: int, probs: LinkProbabilities) -> float:
    """Variance of the index value over random chains with n hexagons."""
    n = _require_n(n)
    c = coefficients(spec, probs)
    return _variance_rate(c, probs) * (n - 2)


def second_moment(spec: IndexSpec, n: int, probs: LinkProbabilities) -> float:
    """Mean of the squared index value over random chains with n hexagons."""
    n = _require_n(n)
    c = coefficients(spec, probs)
    return (
        c.ti2 * c.ti2
        + (2.0 * c.alpha_bar * c.ti2 + c.beta) * (n - 2)
        + (n - 3) * (n - 2) * c.alpha_bar * c.alpha_bar
    )


@dataclass(frozen=True, eq=False)
class DiscreteDistribution:
    """Finite law of an index value: support, matching pmf, and (when the
    value is a non-degenerate function of it) the ortho count behind each
    support point."""

    support: np.ndarray
    pmf: np.ndarray
    ortho_counts: np.ndarray | None = None

    def __post_init__(self) -> None:
        support = np.asarray(self.support, dtype=float)
        pmf = np.asarray(self.pmf, dtype=float)
        if support.shape != pmf.shape or support.ndim != 1 or support.size == 0:
            raise ValueError("support and pmf must be matching 1-d arrays")
        if np.any(pmf < 0):
            raise ValueError("probabilities must be non-negative")
        if abs(float(pmf.sum()) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {pmf.sum()!r}, expected 1")
        if np.any(np.diff(support) <= 0):
            raise ValueError("support values must be strictly increasing")
        support.setflags(write=False)
        pmf.setflags(write=False)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "pmf", pmf)
        if self.ortho_counts is not None:
            counts = np.asarray(self.ortho_counts, dtype=np.int64)
            counts.setflags(write=False)
            object.__setattr__(self, "ortho_counts", counts)

    def mean(self) -> float:
        return float(np.dot(self.pmf, self.support))

    def variance(self) -> float:
        centered = self.support - self.mean()
        return float(np.dot(self.pmf, centered * centered))


def exact_distribution(
    spec: IndexSpec, n: int, probs: LinkProbabilities
) -> DiscreteDistribution:
    """Exact law of the index value on random chains with n hexagons.

    The value is base + B * k with k the binomially distributed ortho count,
    so the support has n-1 points (one atom when the index is deterministic
    or n = 2).
    """
    n = _require_n(n)
    c = coefficients(spec, probs)
    steps = n - 2
    if c.deterministic or steps == 0:
        atom = c.ti2 + c.alpha_bar * steps
        return DiscreteDistribution(np.array([atom]), np.array([1.0]), None)
    k = np.arange(steps + 1)
    values = (c.ti2 + c.alpha_meta * steps) + c.B * k
    pmf = binom.pmf(k, steps, float(probs.p_ortho))
    if c.B < 0:
        values, pmf, k = values[::-1], pmf[::-1], k[::-1]
    return DiscreteDistribution(values, pmf, k)


def mgf(spec: IndexSpec, n: int, probs: LinkProbabilities, t: float) -> float:
    """Moment generating function of the index value at argument t.

    Factorizes as exp(t * ti2) times the per-step factor raised to n-2.
    Raises the built-in OverflowError when t and the increments push the
    result past the double range.
    """
    n = _require_n(n)
    c = coefficients(spec, probs)
    step = (
        math.exp(t * c.alpha_ortho) * float(probs.p_ortho)
        + math.exp(t * c.alpha_meta) * float(probs.p_meta)
        + math.exp(t * c.alpha_para) * float(probs.p_para)
    )
    return math.exp(t * c.ti2) * step ** (n - 2)


def standardize(value, spec: IndexSpec, n: int, probs: LinkProbabilities):
    """Center by the closed-form mean and scale by the closed-form sd.

    Accepts a scalar or an array of values.  Raises DegenerateVariance for
    deterministic indices, n = 2, or boundary probabilities.
    """
    n = _require_n(n)
    c = coefficients(spec, probs)
    var = _variance_rate(c, probs) * (n - 2)
    if c.deterministic or n == 2 or var <= 0:
        raise DegenerateVariance(
            f"{spec.name} has zero variance at n={n}, p_ortho={probs.p_ortho}"
        )
    return (value - (c.ti2 + c.alpha_bar * (n - 2))) / math.sqrt(var)


def martingale_transform(
    trajectory: Sequence[float], spec: IndexSpec, probs: LinkProbabilities
) -> np.ndarray:
    """Centered trajectory M = value - alpha_bar * (growth steps so far).

    `trajectory` holds index values of one growing chain, starting at the
    two-hexagon seed; entry j corresponds to j growth steps.  The result has
    conditionally mean-zero increments, which is what the residual check in
    the Monte Carlo layer verifies empirically.
    """
    values = np.asarray(trajectory, dtype=float)
    c = coefficients(spec, probs)
    return values - c.alpha_bar * np.arange(values.size)


@dataclass(frozen=True)
class ExpectationOrdering:
    """Expected values of the five comparison indices, with each adjacent
    inequality recomputed rather than assumed."""

    names: tuple[str, ...]
    expectations: tuple[float, ...]
    holds: tuple[bool, ...]

    @property
    def all_ordered(self) -> bool:
        return all(self.holds)

    def pairs(self) -> tuple[tuple[str, str, bool], ...]:
        return tuple(
            (self.names[i], self.names[i + 1], self.holds[i])
            for i in range(len(self.holds))
        )


def compare_expectations(n: int, probs: LinkProbabilities) -> ExpectationOrdering:
    """Expected Randic, Nirmala, Sombor and Zagreb values, in that order."""
    n = _require_n(n)
    values = tuple(
        expected_value(registry_lookup(name), n, probs) for name in COMPARISON_ORDER
    )
    holds = tuple(values[i] <= values[i + 1] for i in range(len(values) - 1))
    return ExpectationOrdering(COMPARISON_ORDER, values, holds)
