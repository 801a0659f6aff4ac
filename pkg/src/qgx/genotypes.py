"""Genotype representations and constructors.

Every genotype is a plain immutable tuple: hashable (orbits are sets),
orderable (deterministic tie-breaks), and trivially copied. Symbol and
permutation entries are 1-based throughout.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .errors import InputError

SymbolVector = tuple[int, ...]
RealVector = tuple[float, ...]
Permutation = tuple[int, ...]
Mask = tuple[int, ...]

FIRST = 0   # mask bit: copy position from first parent
SECOND = 1  # mask bit: copy position from second parent


def symbol_vector(values: Iterable[int], k: int) -> SymbolVector:
    """Validate and freeze a vector over the alphabet {1..k}."""
    v = tuple(int(x) for x in values)
    if k < 1:
        raise InputError(f"alphabet size must be >= 1, got {k}")
    if not v:
        raise InputError("symbol vector must be non-empty")
    for x in v:
        if not 1 <= x <= k:
            raise InputError(f"symbol {x} outside alphabet 1..{k}")
    return v


def real_vector(values: Iterable[float]) -> RealVector:
    """Validate and freeze a vector of finite reals."""
    v = tuple(float(x) for x in values)
    if not v:
        raise InputError("real vector must be non-empty")
    for x in v:
        if not math.isfinite(x):
            raise InputError(f"non-finite coordinate {x!r}")
    return v


def permutation(values: Iterable[int]) -> Permutation:
    """Validate and freeze a permutation of {1..n}."""
    p = tuple(int(x) for x in values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InputError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def mask(bits: Iterable[int]) -> Mask:
    m = tuple(int(b) for b in bits)
    if any(b not in (FIRST, SECOND) for b in m):
        raise InputError("mask bits must be 0 (first) or 1 (second)")
    return m


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def invert_permutation(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def compose_permutations(p: Permutation, q: Permutation) -> Permutation:
    """Functional composition p after q: i -> p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return tuple(int(v) + 1 for v in rng.permutation(n))


def random_symbol_vector(n: int, k: int, rng: np.random.Generator) -> SymbolVector:
    return tuple(int(v) for v in rng.integers(1, k + 1, size=n))


def random_real_vector(
    n: int, rng: np.random.Generator, low: float = -5.0, high: float = 5.0
) -> RealVector:
    return tuple(float(v) for v in rng.uniform(low, high, size=n))
