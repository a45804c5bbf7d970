"""Random spiro chains and their degree-based topological indices.

Chains grow by attaching hexagons at randomly selected ortho/meta/para
positions; the package evaluates vertex- and edge-functional indices on
them, derives the exact law of an index value (moments, distribution,
moment generating function, centered transform), and validates everything
by exhaustive enumeration and seeded Monte Carlo.
"""

from .analytics import (
    COMPARISON_ORDER,
    ChainCoefficients,
    DiscreteDistribution,
    ExpectationOrdering,
    coefficients,
    compare_expectations,
    exact_distribution,
    expected_value,
    martingale_transform,
    mgf,
    second_moment,
    standardize,
    variance,
)
from .chain import (
    DEFAULT_MAX_ENUM_N,
    GENERATOR_ALGORITHM,
    LINK_ORDER,
    SEED_MIX_ALGORITHM,
    LinkProbabilities,
    LinkType,
    SpiroChain,
    draw_link_indexes,
    enumerate_all,
    generate,
    grow,
    initial_chain,
    links_to_string,
    parse_links,
    replay,
    replication_seed,
    rng_from_seed,
    splitmix64,
)
from .errors import (
    ChainTooShort,
    DegenerateVariance,
    EmptySample,
    InvalidN,
    InvalidProbabilities,
    KindMismatch,
    MissingExponent,
    NTooLarge,
    SampleTooSmall,
    SpiroChainError,
    UndefinedBase,
    UnknownIndex,
    UnsupportedDegree,
)
from .graph import (
    EdgeProfile,
    MolecularGraph,
    VertexProfile,
    edge_profile,
    hexagon,
    vertex_profile,
)
from .indices import (
    EDGE_KIND_NAMES,
    REGISTRY_NAMES,
    VARIABLE_EXPONENT_NAMES,
    IndexKind,
    IndexSpec,
    evaluate,
    evaluate_from_profile,
    registry_lookup,
)
from .montecarlo import (
    DEFAULT_THRESHOLDS,
    HistogramData,
    NormalityReport,
    NormalityThresholds,
    SampleSummary,
    SimulationResult,
    histogram,
    martingale_residual_check,
    normality_check,
    simulate,
    standardized_sample,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "COMPARISON_ORDER",
    "ChainCoefficients",
    "DiscreteDistribution",
    "ExpectationOrdering",
    "coefficients",
    "compare_expectations",
    "exact_distribution",
    "expected_value",
    "martingale_transform",
    "mgf",
    "second_moment",
    "standardize",
    "variance",
    "DEFAULT_MAX_ENUM_N",
    "GENERATOR_ALGORITHM",
    "LINK_ORDER",
    "SEED_MIX_ALGORITHM",
    "LinkProbabilities",
    "LinkType",
    "SpiroChain",
    "draw_link_indexes",
    "enumerate_all",
    "generate",
    "grow",
    "initial_chain",
    "links_to_string",
    "parse_links",
    "replay",
    "replication_seed",
    "rng_from_seed",
    "splitmix64",
    "ChainTooShort",
    "DegenerateVariance",
    "EmptySample",
    "InvalidN",
    "InvalidProbabilities",
    "KindMismatch",
    "MissingExponent",
    "NTooLarge",
    "SampleTooSmall",
    "SpiroChainError",
    "UndefinedBase",
    "UnknownIndex",
    "UnsupportedDegree",
    "EdgeProfile",
    "MolecularGraph",
    "VertexProfile",
    "edge_profile",
    "hexagon",
    "vertex_profile",
    "EDGE_KIND_NAMES",
    "REGISTRY_NAMES",
    "VARIABLE_EXPONENT_NAMES",
    "IndexKind",
    "IndexSpec",
    "evaluate",
    "evaluate_from_profile",
    "registry_lookup",
    "DEFAULT_THRESHOLDS",
    "HistogramData",
    "NormalityReport",
    "NormalityThresholds",
    "SampleSummary",
    "SimulationResult",
    "histogram",
    "martingale_residual_check",
    "normality_check",
    "simulate",
    "standardized_sample",
    "summarize",
    "__version__",
]
