"""Isometry-group quotients of genotype spaces.

A finite group of isometries partitions a space into orbits; the
quotient distance between two points is the smallest base distance
between their orbits. Because the group acts by isometries, minimizing
over one orbit already gives the two-sided minimum, so normalization
(move the second parent to its in-orbit point closest to the first)
realizes the quotient distance. A base geometric crossover applied
after normalization stays inside the quotient segment - that is the
induced quotient crossover.

Equivalence classes are never materialized except by `orbit`: a class
is carried as any representative plus the action.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .errors import OrbitTooLargeError
from .metrics import Metric

DEFAULT_ORBIT_CAP = 10**6

Point = Any


@dataclass(frozen=True)
class GroupAction:
    """A finite transformation group acting on a genotype space.

    `elements` contains `identity` and is closed under `compose` and
    `inverse`; `apply(g, x)` evaluates a transformation. The action law
    is apply(compose(g, h), x) == apply(g, apply(h, x)). Instances are
    immutable and safe to share.
    """

    name: str
    elements: tuple
    identity: Any
    apply: Callable[[Any, Point], Point]
    compose: Callable[[Any, Any], Any]
    inverse: Callable[[Any], Any]

    @property
    def order(self) -> int:
        return len(self.elements)


def trivial_action() -> GroupAction:
    """The one-element group; quotient concepts collapse to the base ones."""
    return GroupAction(
        name="trivial",
        elements=("e",),
        identity="e",
        apply=lambda g, x: x,
        compose=lambda g, h: "e",
        inverse=lambda g: "e",
    )


@dataclass(frozen=True, eq=False)
class QuotientPoint:
    """An equivalence class, stored as one representative plus the action.

    Equality tests orbit membership without materializing the orbit;
    hashing needs a canonical member, so it does enumerate (capped).
    """

    representative: Point
    action: GroupAction

    def members(self, cap: int = DEFAULT_ORBIT_CAP) -> frozenset:
        return orbit(self.representative, self.action, cap)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientPoint) or self.action is not other.action:
            return NotImplemented
        return any(
            self.action.apply(g, other.representative) == self.representative
            for g in self.action.elements
        )

    def __hash__(self) -> int:
        return hash((self.action.name, min(self.members())))


def _check_cap(action: GroupAction, cap: int) -> None:
    if action.order > cap:
        raise OrbitTooLargeError(
            f"group {action.name} has {action.order} elements, cap is {cap}; "
            "use a representation-specific normalizer"
        )


def orbit(x: Point, action: GroupAction, cap: int = DEFAULT_ORBIT_CAP) -> frozenset:
    """All distinct images of x under the action (contains x)."""
    _check_cap(action, cap)
    return frozenset(action.apply(g, x) for g in action.elements)


def normalize_by_enumeration(
    x: Point,
    y: Point,
    action: GroupAction,
    metric: Metric,
    cap: int = DEFAULT_ORBIT_CAP,
) -> tuple[Point, float]:
    """Closest point to x in the orbit of y, with its distance.

    Ties break to the lexicographically smallest candidate (tuples
    compare elementwise, nested tuples included), so the result does not
    depend on element enumeration order.
    """
    _check_cap(action, cap)
    best = None
    best_d = None
    for g in action.elements:
        cand = action.apply(g, y)
        d = metric(x, cand)
        if best_d is None or d < best_d or (d == best_d and cand < best):
            best, best_d = cand, d
    return best, best_d


def quotient_distance(
    x: Point,
    y: Point,
    action: GroupAction,
    metric: Metric,
    cap: int = DEFAULT_ORBIT_CAP,
) -> float:
    """min over the orbit of y of metric(x, .) - the quotient metric."""
    _check_cap(action, cap)
    return min(metric(x, action.apply(g, y)) for g in action.elements)


@dataclass(frozen=True)
class Normalizer:
    """Moves the second parent within its class toward the first.

    `normalize(x, y)` returns (y_star, dist) with y_star in the orbit of
    y. When `exact` is true, dist equals the quotient distance, and the
    induced crossover below is guaranteed to stay in the quotient
    segment; heuristic normalizers only upper-bound it.
    """

    normalize: Callable[[Point, Point], tuple[Point, float]]
    exact: bool = True

    def __call__(self, x: Point, y: Point) -> tuple[Point, float]:
        return self.normalize(x, y)


def enumeration_normalizer(
    action: GroupAction, metric: Metric, cap: int = DEFAULT_ORBIT_CAP
) -> Normalizer:
    return Normalizer(
        normalize=lambda x, y: normalize_by_enumeration(x, y, action, metric, cap),
        exact=True,
    )


def induced_quotient_crossover(
    x: Point,
    y: Point,
    normalizer: Normalizer,
    crossover: Callable[[Point, Point, np.random.Generator], Point],
    rng: np.random.Generator,
) -> Point:
    """Normalize the second parent, then run the base geometric crossover."""
    y_star, _ = normalizer(x, y)
    return crossover(x, y_star, rng)


def in_quotient_segment(
    x: Point,
    z: Point,
    y: Point,
    quotient_metric: Callable[[Point, Point], float],
    tol: float = 0.0,
) -> bool:
    """True iff the quotient triangle inequality is tight at z (within tol)."""
    dxz = quotient_metric(x, z)
    dzy = quotient_metric(z, y)
    dxy = quotient_metric(x, y)
    return abs(dxz + dzy - dxy) <= tol
