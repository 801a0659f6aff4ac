"""Group-label encodings under alphabet relabeling.

A k-ary vector assigns one of k interchangeable labels per item, so k!
encodings describe the same grouping. Relabeling by any permutation of
the alphabet is a Hamming isometry, and the induced quotient distance is
the labeling-independent distance: the smallest Hamming distance over
all relabelings of the second vector. Finding the optimal relabeling is
an assignment problem on the k x k label co-occurrence matrix, solved in
O(k^3) instead of enumerating k! candidates.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .assignment import hungarian
from .crossovers import mask_crossover, random_mask
from .errors import DimensionError, InputError
from .genotypes import (
    Permutation,
    SymbolVector,
    compose_permutations,
    identity_permutation,
    invert_permutation,
)
from .quotient import DEFAULT_ORBIT_CAP, GroupAction, Normalizer


def relabel(a: SymbolVector, sigma: Permutation) -> SymbolVector:
    """Send every symbol through the alphabet permutation sigma."""
    k = len(sigma)
    for x in a:
        if not 1 <= x <= k:
            raise InputError(f"symbol {x} outside alphabet 1..{k}")
    return tuple(sigma[x - 1] for x in a)


def relabeling_action(k: int, cap: int = DEFAULT_ORBIT_CAP) -> GroupAction:
    """All k! alphabet permutations acting by `relabel`."""
    if math.factorial(k) > cap:
        raise InputError(f"k={k} gives {math.factorial(k)} relabelings, over cap {cap}")
    return GroupAction(
        name=f"relabel(k={k})",
        elements=tuple(itertools.permutations(range(1, k + 1))),
        identity=identity_permutation(k),
        apply=lambda sigma, a: relabel(a, sigma),
        compose=compose_permutations,
        inverse=invert_permutation,
    )


def _check_pair(a: SymbolVector, b: SymbolVector, k: int) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
    for v in (a, b):
        for x in v:
            if not 1 <= x <= k:
                raise InputError(f"symbol {x} outside alphabet 1..{k}")


def _best_relabeling(a: SymbolVector, b: SymbolVector, k: int) -> tuple[Permutation, int]:
    """Relabeling of b maximizing positionwise agreement with a.

    cooc[j][i] counts positions where b holds label j and a holds label
    i; assigning b-label j to a-label i earns cooc[j][i] agreements, so
    the max-agreement relabeling is a min-cost assignment on -cooc.
    """
    cooc = [[0] * k for _ in range(k)]
    for ai, bi in zip(a, b):
        cooc[bi - 1][ai - 1] += 1
    sigma, neg_agree = hungarian([[-c for c in row] for row in cooc])
    return sigma, len(a) + int(neg_agree)


def li_distance(a: SymbolVector, b: SymbolVector, k: int) -> int:
    """Labeling-independent distance: min Hamming over relabelings of b."""
    _check_pair(a, b, k)
    _, dist = _best_relabeling(a, b, k)
    return dist


def li_normalize(a: SymbolVector, b: SymbolVector, k: int) -> SymbolVector:
    """Relabel b to agree with a as much as possible."""
    _check_pair(a, b, k)
    sigma, _ = _best_relabeling(a, b, k)
    return relabel(b, sigma)


def li_normalizer(k: int) -> Normalizer:
    def norm(a, b):
        _check_pair(a, b, k)
        sigma, dist = _best_relabeling(a, b, k)
        return relabel(b, sigma), float(dist)

    return Normalizer(normalize=norm, exact=True)


def li_crossover(
    a: SymbolVector, b: SymbolVector, k: int, rng: np.random.Generator
) -> SymbolVector:
    """Uniform crossover of a with the relabeled-to-match b."""
    b_star = li_normalize(a, b, k)
    return mask_crossover(a, b_star, random_mask(len(a), rng))
