"""Degree-based topological indices.

Two families cover the whole catalog: vertex sums of h(degree)^a and edge
sums of f(degree, degree)^a, with h and f strictly positive and f symmetric.
The registry holds the named instances so callers (and the CLI) can pick
them by name; custom indices are ordinary IndexSpec values.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import KindMismatch, MissingExponent, UndefinedBase, UnknownIndex
from .graph import EdgeProfile, MolecularGraph, VertexProfile


class IndexKind(enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class IndexSpec:
    """One index: a base function raised to a fixed exponent and summed.

    `scale` multiplies the final sum; it exists for catalog entries defined
    as a multiple of the raw sum (the harmonic index is twice the raw sum
    for f(x, y) = x + y at exponent -1).
    """

    name: str
    kind: IndexKind
    base: Callable[..., float]
    exponent: float
    scale: float = 1.0


def _power_term(spec: IndexSpec, *degrees: int) -> float:
    try:
        raw = spec.base(*degrees)
    except (ArithmeticError, ValueError) as exc:
        raise UndefinedBase(
            f"{spec.name}: base function failed at degrees {degrees}"
        ) from exc
    raw = float(raw)
    if not math.isfinite(raw) or raw <= 0.0:
        raise UndefinedBase(
            f"{spec.name}: base function must be strictly positive, "
            f"got {raw!r} at degrees {degrees}"
        )
    return raw ** spec.exponent


def evaluate(spec: IndexSpec, g: MolecularGraph) -> float:
    """Sum the index over the graph's vertices or edges, per the spec kind.

    Edge base functions are always called with the endpoint degrees in
    non-decreasing order, so any symmetric f gives order-independent
    results.  Works on any graph whose degrees the base function accepts.
    """
    if g.vertex_count == 0:
        raise ValueError("cannot evaluate an index on an empty graph")
    if spec.kind is IndexKind.VERTEX:
        total = sum(
            count * _power_term(spec, d)
            for d, count in sorted(g.degree_counts.items())
        )
    else:
        total = sum(
            count * _power_term(spec, lo, hi)
            for (lo, hi), count in sorted(g.degree_pair_counts.items())
        )
    return spec.scale * total


def evaluate_from_profile(
    spec: IndexSpec, profile: EdgeProfile | VertexProfile
) -> float:
    """Evaluate from a degree profile instead of a full graph.

    Agrees with evaluate() on every spiro chain; the profile is a
    sufficient statistic because chains only contain degrees 2 and 4.
    """
    if isinstance(profile, EdgeProfile):
        if spec.kind is not IndexKind.EDGE:
            raise KindMismatch(f"{spec.name} is vertex-kind; got an edge profile")
        total = (
            profile.m22 * _power_term(spec, 2, 2)
            + profile.m24 * _power_term(spec, 2, 4)
            + profile.m44 * _power_term(spec, 4, 4)
        )
    elif isinstance(profile, VertexProfile):
        if spec.kind is not IndexKind.VERTEX:
            raise KindMismatch(f"{spec.name} is edge-kind; got a vertex profile")
        total = profile.c2 * _power_term(spec, 2) + profile.c4 * _power_term(spec, 4)
    else:
        raise TypeError(f"expected EdgeProfile or VertexProfile, got {profile!r}")
    return spec.scale * total


def _identity(t):
    return t


def _product(x, y):
    return x * y


def _degree_sum(x, y):
    return x + y


def _square_sum(x, y):
    return x * x + y * y


@dataclass(frozen=True)
class _RegistryEntry:
    kind: IndexKind
    base: Callable[..., float]
    exponent: float | None  # None marks a variable-exponent family
    scale: float = 1.0


_REGISTRY: dict[str, _RegistryEntry] = {
    "first-zagreb": _RegistryEntry(IndexKind.VERTEX, _identity, 2.0),
    "second-zagreb": _RegistryEntry(IndexKind.EDGE, _product, 1.0),
    "forgotten": _RegistryEntry(IndexKind.VERTEX, _identity, 3.0),
    "inverse-degree": _RegistryEntry(IndexKind.VERTEX, _identity, -1.0),
    "randic": _RegistryEntry(IndexKind.EDGE, _product, -0.5),
    "sum-connectivity": _RegistryEntry(IndexKind.EDGE, _degree_sum, -0.5),
    "harmonic": _RegistryEntry(IndexKind.EDGE, _degree_sum, -1.0, scale=2.0),
    "nirmala": _RegistryEntry(IndexKind.EDGE, _degree_sum, 0.5),
    "sombor": _RegistryEntry(IndexKind.EDGE, _square_sum, 0.5),
    "variable-first-zagreb": _RegistryEntry(IndexKind.VERTEX, _identity, None),
    "variable-sum-connectivity": _RegistryEntry(IndexKind.EDGE, _degree_sum, None),
}

REGISTRY_NAMES: tuple[str, ...] = tuple(_REGISTRY)
VARIABLE_EXPONENT_NAMES: tuple[str, ...] = tuple(
    name for name, entry in _REGISTRY.items() if entry.exponent is None
)
EDGE_KIND_NAMES: tuple[str, ...] = tuple(
    name
    for name, entry in _REGISTRY.items()
    if entry.kind is IndexKind.EDGE and entry.exponent is not None
)


def registry_lookup(name: str, a: float | None = None) -> IndexSpec:
    """Fetch a named index; `a` is required exactly for the variable families."""
    entry = _REGISTRY.get(name)
    if entry is None:
        raise UnknownIndex(
            f"unknown index {name!r}; known: {', '.join(REGISTRY_NAMES)}"
        )
    if entry.exponent is None:
        if a is None:
            raise MissingExponent(f"{name} requires an exponent")
        exponent = float(a)
    else:
        if a is not None:
            raise ValueError(f"{name} has a fixed exponent; do not pass one")
        exponent = entry.exponent
    return IndexSpec(
        name=name,
        kind=entry.kind,
        base=entry.base,
        exponent=exponent,
        scale=entry.scale,
    )
