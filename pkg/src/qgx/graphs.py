"""Labeled graphs as adjacency matrices under node relabeling.

The same unlabeled graph has up to n! adjacency matrices, one per node
labeling; relabeling is conjugation by a permutation matrix and is an
isometry of the cellwise Hamming distance (all n^2 cells counted, so a
symmetric edge difference contributes twice). The quotient distance is
graph matching: the relabeling of the second graph closest to the first.
Exact matching enumerates all labelings up to a size cap; beyond it a
restarted hill climber gives an upper bound that must not be trusted for
segment guarantees.
"""

from __future__ import annotations

import itertools
from typing import Callable, NamedTuple

import numpy as np

from .errors import DimensionError, InputError, SizeCapError
from .genotypes import (
    FIRST,
    Permutation,
    compose_permutations,
    identity_permutation,
    invert_permutation,
    random_permutation,
)
from .quotient import GroupAction, Normalizer

AdjacencyMatrix = tuple[tuple[int, ...], ...]

EXACT_MATCH_CAP = 8


def adjacency(rows) -> AdjacencyMatrix:
    """Validate and freeze a simple undirected adjacency matrix."""
    a = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise InputError("adjacency matrix must be square and non-empty")
    for i in range(n):
        if a[i][i] != 0:
            raise InputError(f"diagonal entry ({i + 1},{i + 1}) must be 0")
        for j in range(n):
            if a[i][j] not in (0, 1):
                raise InputError(f"entry ({i + 1},{j + 1}) must be 0 or 1")
            if a[i][j] != a[j][i]:
                raise InputError(f"matrix not symmetric at ({i + 1},{j + 1})")
    return a


def adjacency_from_edges(n: int, edges) -> AdjacencyMatrix:
    grid = [[0] * n for _ in range(n)]
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise InputError(f"bad edge ({u},{v}) for n={n}")
        grid[u - 1][v - 1] = grid[v - 1][u - 1] = 1
    return tuple(tuple(row) for row in grid)


def edges_of(a: AdjacencyMatrix) -> tuple[tuple[int, int], ...]:
    n = len(a)
    return tuple((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if a[i][j])


def parse_edge_list(text: str) -> AdjacencyMatrix:
    """Parse the edge-list format: "n m" header, then m lines "u v" (1-based)."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise InputError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
        edges = [tuple(int(x) for x in ln.split()) for ln in lines[1 : m + 1]]
    except ValueError as exc:
        raise InputError(f"bad edge list: {exc}") from exc
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise InputError(f"edge list announces {m} edges, found {len(edges)}")
    return adjacency_from_edges(n, edges)


def format_edge_list(a: AdjacencyMatrix) -> str:
    edges = edges_of(a)
    lines = [f"{len(a)} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines)


def matrix_hamming(a: AdjacencyMatrix, b: AdjacencyMatrix) -> int:
    """Cellwise Hamming distance over all n^2 cells."""
    if len(a) != len(b):
        raise DimensionError(f"size mismatch: {len(a)} vs {len(b)}")
    return sum(
        ra[j] != rb[j] for ra, rb in zip(a, b) for j in range(len(a))
    )


def permutation_matrix(p: Permutation) -> tuple[tuple[int, ...], ...]:
    """Materialize p as a 0/1 matrix with row i carrying a 1 at column p(i)."""
    n = len(p)
    return tuple(
        tuple(1 if p[i] == j + 1 else 0 for j in range(n)) for i in range(n)
    )


def conjugate(a: AdjacencyMatrix, p: Permutation) -> AdjacencyMatrix:
    """Relabel nodes: cell (i,j) of the result reads a at (p(i), p(j))."""
    if len(a) != len(p):
        raise DimensionError(f"size mismatch: matrix {len(a)}, permutation {len(p)}")
    return tuple(
        tuple(a[p[i] - 1][p[j] - 1] for j in range(len(a))) for i in range(len(a))
    )


def conjugation_action(n: int) -> GroupAction:
    """All n! relabelings acting by `conjugate` (reversed compose, as for
    coordinate shuffles: apply(g, apply(h, A)) reads A through h . g)."""
    return GroupAction(
        name=f"conjugation(n={n})",
        elements=tuple(itertools.permutations(range(1, n + 1))),
        identity=identity_permutation(n),
        apply=lambda p, a: conjugate(a, p),
        compose=lambda g, h: compose_permutations(h, g),
        inverse=invert_permutation,
    )


class MatchResult(NamedTuple):
    dist: int
    permutation: Permutation
    exact: bool


Matcher = Callable[[AdjacencyMatrix, AdjacencyMatrix, np.random.Generator], MatchResult]


def quotient_distance_exact(
    a: AdjacencyMatrix, b: AdjacencyMatrix, cap: int = EXACT_MATCH_CAP
) -> MatchResult:
    """Exhaustive minimum of H(a, relabeled b); first optimum in
    lexicographic permutation order wins ties."""
    if len(a) != len(b):
        raise DimensionError(f"size mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    if n > cap:
        raise SizeCapError(f"exact matching capped at n={cap}, got n={n}")
    best_d = None
    best_p = None
    for p in itertools.permutations(range(1, n + 1)):
        d = matrix_hamming(a, conjugate(b, p))
        if best_d is None or d < best_d:
            best_d, best_p = d, p
            if d == 0:
                break
    return MatchResult(best_d, best_p, True)


def _descend(a: AdjacencyMatrix, b: AdjacencyMatrix, p: Permutation) -> tuple[int, Permutation]:
    """Steepest descent over image transpositions of p."""
    n = len(a)
    cur = list(p)
    cur_d = matrix_hamming(a, conjugate(b, tuple(cur)))
    while True:
        best_d, best_swap = cur_d, None
        for i in range(n):
            for j in range(i + 1, n):
                cur[i], cur[j] = cur[j], cur[i]
                d = matrix_hamming(a, conjugate(b, tuple(cur)))
                cur[i], cur[j] = cur[j], cur[i]
                if d < best_d:
                    best_d, best_swap = d, (i, j)
        if best_swap is None:
            return cur_d, tuple(cur)
        i, j = best_swap
        cur[i], cur[j] = cur[j], cur[i]
        cur_d = best_d


def match_heuristic(
    a: AdjacencyMatrix,
    b: AdjacencyMatrix,
    restarts: int,
    rng: np.random.Generator,
) -> MatchResult:
    """Hill climbing from random labelings; upper-bounds the true distance.

    For a fixed rng seed, extra restarts only extend the start sequence,
    so the best found never worsens as the budget grows.
    """
    if len(a) != len(b):
        raise DimensionError(f"size mismatch: {len(a)} vs {len(b)}")
    best_d, best_p = matrix_hamming(a, b), identity_permutation(len(a))
    for _ in range(max(restarts, 0)):
        start = random_permutation(len(a), rng)
        d, p = _descend(a, b, start)
        if d < best_d or (d == best_d and p < best_p):
            best_d, best_p = d, p
        if best_d == 0:
            break
    return MatchResult(best_d, best_p, False)


def exact_matcher(cap: int = EXACT_MATCH_CAP) -> Matcher:
    return lambda a, b, rng: quotient_distance_exact(a, b, cap)


def heuristic_matcher(restarts: int = 20) -> Matcher:
    return lambda a, b, rng: match_heuristic(a, b, restarts, rng)


def matcher_normalizer(matcher: Matcher, rng: np.random.Generator, exact: bool) -> Normalizer:
    def norm(a, b):
        result = matcher(a, b, rng)
        return conjugate(b, result.permutation), float(result.dist)

    return Normalizer(normalize=norm, exact=exact)


def _mask_recombine(
    a: AdjacencyMatrix, b: AdjacencyMatrix, rng: np.random.Generator
) -> AdjacencyMatrix:
    """Uniform crossover per upper-triangle cell, mirrored for symmetry."""
    n = len(a)
    child = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            bit = a[i][j] if rng.integers(0, 2) == FIRST else b[i][j]
            child[i][j] = child[j][i] = bit
    return tuple(tuple(row) for row in child)


def uniform_edge_crossover(
    a: AdjacencyMatrix, b: AdjacencyMatrix, rng: np.random.Generator
) -> AdjacencyMatrix:
    """Raw mask crossover without matching (label-sensitive baseline)."""
    if len(a) != len(b):
        raise DimensionError(f"size mismatch: {len(a)} vs {len(b)}")
    return _mask_recombine(a, b, rng)


def iq_crossover(
    a: AdjacencyMatrix,
    b: AdjacencyMatrix,
    rng: np.random.Generator,
    matcher: Matcher | None = None,
) -> AdjacencyMatrix:
    """Graph-match the second parent to the first, then mask-recombine."""
    if len(a) != len(b):
        raise DimensionError(f"size mismatch: {len(a)} vs {len(b)}")
    if matcher is None:
        matcher = exact_matcher()
    result = matcher(a, b, rng)
    return _mask_recombine(a, conjugate(b, result.permutation), rng)


def random_adjacency(n: int, edge_prob: float, rng: np.random.Generator) -> AdjacencyMatrix:
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                grid[i][j] = grid[j][i] = 1
    return tuple(tuple(row) for row in grid)


def _pack(a: AdjacencyMatrix) -> int:
    n = len(a)
    bits = 0
    for i in range(n):
        for j in range(n):
            if a[i][j]:
                bits |= 1 << (i * n + j)
    return bits


def make_quotient_hamming(cap: int = EXACT_MATCH_CAP) -> Callable[[AdjacencyMatrix, AdjacencyMatrix], int]:
    """Exact quotient distance with per-matrix orbit caching.

    Matrices are bit-packed so each orbit candidate costs one xor and a
    popcount; intended for verification suites that hit the same sample
    pool many times.
    """
    orbit_cache: dict[AdjacencyMatrix, tuple[int, ...]] = {}
    pack_cache: dict[AdjacencyMatrix, int] = {}

    def packed(a: AdjacencyMatrix) -> int:
        got = pack_cache.get(a)
        if got is None:
            got = _pack(a)
            pack_cache[a] = got
        return got

    def orbit_ints(b: AdjacencyMatrix) -> tuple[int, ...]:
        got = orbit_cache.get(b)
        if got is None:
            n = len(b)
            if n > cap:
                raise SizeCapError(f"orbit packing capped at n={cap}, got n={n}")
            got = tuple(
                _pack(conjugate(b, p)) for p in itertools.permutations(range(1, n + 1))
            )
            orbit_cache[b] = got
        return got

    def qdist(a: AdjacencyMatrix, b: AdjacencyMatrix) -> int:
        if len(a) != len(b):
            raise DimensionError(f"size mismatch: {len(a)} vs {len(b)}")
        pa = packed(a)
        return min((pa ^ ob).bit_count() for ob in orbit_ints(b))

    return qdist
