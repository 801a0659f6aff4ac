"""Vectors under coordinate permutation, for symmetric fitness functions.

When fitness is unchanged by any permutation of the variables, the n!
coordinate shuffles form an isometry group of both Euclidean and Hamming
distance, and genotypes that are rearrangements of each other encode the
same solution. Normalization rearranges the second parent to sit closest
to the first: for reals this is sort-matching (i-th smallest to i-th
smallest), for discrete vectors a positionwise assignment problem.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .assignment import hungarian
from .crossovers import line_crossover, mask_crossover, random_mask
from .errors import DimensionError, InputError
from .genotypes import (
    Permutation,
    RealVector,
    SymbolVector,
    identity_permutation,
    invert_permutation,
)
from .metrics import euclidean_distance
from .quotient import DEFAULT_ORBIT_CAP, GroupAction, Normalizer


def permute_coords(x, sigma: Permutation):
    """Rearranged copy of x whose i-th entry is x at position sigma(i)."""
    if len(x) != len(sigma):
        raise DimensionError(f"size mismatch: vector {len(x)}, permutation {len(sigma)}")
    return tuple(x[sigma[i] - 1] for i in range(len(x)))


def coordinate_action(n: int, cap: int = DEFAULT_ORBIT_CAP) -> GroupAction:
    """All n! coordinate shuffles acting by `permute_coords`.

    apply(sigma, apply(tau, x)) picks x at tau(sigma(i)), so the action
    law needs compose(sigma, tau) = tau . sigma (reversed functional
    order).
    """
    if math.factorial(n) > cap:
        raise InputError(f"n={n} gives {math.factorial(n)} shuffles, over cap {cap}")
    from .genotypes import compose_permutations

    return GroupAction(
        name=f"coordinate(n={n})",
        elements=tuple(itertools.permutations(range(1, n + 1))),
        identity=identity_permutation(n),
        apply=lambda sigma, x: permute_coords(x, sigma),
        compose=lambda g, h: compose_permutations(h, g),
        inverse=invert_permutation,
    )


def normalize_real(x: RealVector, y: RealVector) -> tuple[RealVector, float]:
    """Sort-matching: i-th smallest of y moves to the slot of i-th smallest of x.

    By the rearrangement inequality this minimizes the sum of squared
    differences, hence the Euclidean distance, over all rearrangements
    of y. Equal values keep their original index order.
    """
    if len(x) != len(y):
        raise DimensionError(f"length mismatch: {len(x)} vs {len(y)}")
    slots = sorted(range(len(x)), key=lambda i: (x[i], i))
    y_sorted = sorted(y)
    y_star = [0.0] * len(x)
    for rank, slot in enumerate(slots):
        y_star[slot] = y_sorted[rank]
    y_star = tuple(y_star)
    return y_star, euclidean_distance(x, y_star)


def normalize_real_assignment(x: RealVector, y: RealVector) -> tuple[RealVector, float]:
    """Same minimization through the assignment route (cross-check path).

    Cost of putting y_j at slot i is (x_i - y_j)^2; minimizing the sum of
    squares minimizes the Euclidean distance.
    """
    if len(x) != len(y):
        raise DimensionError(f"length mismatch: {len(x)} vs {len(y)}")
    cost = [[(xi - yj) ** 2 for yj in y] for xi in x]
    assign, _ = hungarian(cost)
    y_star = tuple(y[assign[i] - 1] for i in range(len(x)))
    return y_star, euclidean_distance(x, y_star)


def normalize_discrete(x: SymbolVector, y: SymbolVector) -> tuple[SymbolVector, int]:
    """Rearrangement of y minimizing Hamming distance to x (assignment)."""
    if len(x) != len(y):
        raise DimensionError(f"length mismatch: {len(x)} vs {len(y)}")
    cost = [[0 if xi == yj else 1 for yj in y] for xi in x]
    assign, total = hungarian(cost)
    y_star = tuple(y[assign[i] - 1] for i in range(len(x)))
    return y_star, int(total)


def quotient_euclidean(x: RealVector, y: RealVector) -> float:
    return normalize_real(x, y)[1]


def quotient_hamming(x: SymbolVector, y: SymbolVector) -> int:
    return normalize_discrete(x, y)[1]


def real_normalizer() -> Normalizer:
    return Normalizer(normalize=normalize_real, exact=True)


def discrete_normalizer() -> Normalizer:
    def norm(x, y):
        y_star, dist = normalize_discrete(x, y)
        return y_star, float(dist)

    return Normalizer(normalize=norm, exact=True)


def iq_crossover_real(
    x: RealVector, y: RealVector, rng: np.random.Generator
) -> RealVector:
    """Rearrange y toward x, then blend at a random weight."""
    y_star, _ = normalize_real(x, y)
    return line_crossover(x, y_star, float(rng.random()))


def iq_crossover_discrete(
    x: SymbolVector, y: SymbolVector, rng: np.random.Generator
) -> SymbolVector:
    """Rearrange y toward x, then uniform crossover."""
    y_star, _ = normalize_discrete(x, y)
    return mask_crossover(x, y_star, random_mask(len(x), rng))


# Reductions run over sorted values so invariance under coordinate
# shuffles is exact, not merely up to float reassociation.

def _sum_of_squares(x) -> float:
    return float(sum(v * v for v in sorted(x)))


def _product(x) -> float:
    out = 1.0
    for v in sorted(x):
        out *= v
    return float(out)


def _value_range(x) -> float:
    return float(max(x) - min(x))


def _sorted_poly(x) -> float:
    return float(sum((i + 1) * v for i, v in enumerate(sorted(x))))


# Canonical symmetric test functions: invariant under any coordinate shuffle.
SYMMETRIC_FUNCTIONS = {
    "sum_of_squares": _sum_of_squares,
    "product": _product,
    "range": _value_range,
    "sorted_poly": _sorted_poly,
}
