"""Independent reference implementations used as test oracles.

Everything here takes the dumb route (breadth-first search, exhaustive
enumeration, plain quadratic DP, matrix products) and shares no code
with the library paths it checks.
"""

from __future__ import annotations

import itertools
from collections import deque

import numpy as np


def bfs_swap_distance(p: tuple, q: tuple) -> int:
    """Shortest path from p to q in the transposition graph."""
    if p == q:
        return 0
    n = len(p)
    moves = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = {p}
    frontier = deque([(p, 0)])
    while frontier:
        cur, dist = frontier.popleft()
        for i, j in moves:
            nxt = list(cur)
            nxt[i], nxt[j] = nxt[j], nxt[i]
            nxt = tuple(nxt)
            if nxt == q:
                return dist + 1
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, dist + 1))
    raise AssertionError("transpositions connect all permutations")


def all_swap_distances_from(p: tuple) -> dict[tuple, int]:
    """BFS layering of the whole transposition graph from one start."""
    n = len(p)
    moves = [(i, j) for i in range(n) for j in range(i + 1, n)]
    dist = {p: 0}
    frontier = deque([p])
    while frontier:
        cur = frontier.popleft()
        for i, j in moves:
            nxt = list(cur)
            nxt[i], nxt[j] = nxt[j], nxt[i]
            nxt = tuple(nxt)
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                frontier.append(nxt)
    return dist


def _hamming(a, b) -> int:
    return sum(x != y for x, y in zip(a, b))


def _euclidean(a, b) -> float:
    return sum((x - y) ** 2 for x, y in zip(a, b)) ** 0.5


def exhaustive_li_distance(a: tuple, b: tuple, k: int) -> int:
    """min over all k! relabelings sigma of Hamming(a, sigma applied to b)."""
    best = None
    for sigma in itertools.permutations(range(1, k + 1)):
        d = _hamming(a, tuple(sigma[v - 1] for v in b))
        best = d if best is None or d < best else best
    return best


def exhaustive_symmetric_real(x: tuple, y: tuple) -> float:
    """min Euclidean distance over all orderings of y."""
    return min(_euclidean(x, perm) for perm in itertools.permutations(y))


def exhaustive_symmetric_discrete(x: tuple, y: tuple) -> int:
    """min Hamming distance over all orderings of y."""
    return min(_hamming(x, perm) for perm in itertools.permutations(y))


def brute_graph_distance(a: tuple, b: tuple) -> int:
    """min over all relabelings via explicit permutation-matrix products."""
    mat_a = np.array(a)
    mat_b = np.array(b)
    n = len(a)
    best = None
    for sigma in itertools.permutations(range(n)):
        p = np.zeros((n, n), dtype=int)
        for i, s in enumerate(sigma):
            p[i, s] = 1
        d = int((p @ mat_b @ p.T != mat_a).sum())
        best = d if best is None or d < best else best
    return best


def brute_assignment(cost) -> float:
    """Exhaustive minimum assignment cost."""
    n = len(cost)
    return min(
        sum(cost[i][perm[i]] for i in range(n))
        for perm in itertools.permutations(range(n))
    )


def dp_edit_distance(s: str, t: str) -> int:
    """Plain quadratic DP, no vectorization."""
    m, n = len(s), len(t)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        dp[i][0] = i
    for j in range(n + 1):
        dp[0][j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            dp[i][j] = min(
                dp[i - 1][j - 1] + (s[i - 1] != t[j - 1]),
                dp[i - 1][j] + 1,
                dp[i][j - 1] + 1,
            )
    return dp[m][n]


def enumerate_cycle_offspring(p1: tuple, p2: tuple) -> set[tuple]:
    """All cycle-crossover offspring over every per-cycle coin outcome."""
    n = len(p1)
    where_p1 = {v: i for i, v in enumerate(p1)}
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = where_p1[p2[i]]
        cycles.append(cycle)
    offspring = set()
    for coins in itertools.product((0, 1), repeat=len(cycles)):
        child = list(p1)
        for coin, cycle in zip(coins, cycles):
            if coin:
                for i in cycle:
                    child[i] = p2[i]
        offspring.add(tuple(child))
    return offspring


def random_symbols(rng: np.random.Generator, n: int, k: int) -> tuple:
    return tuple(int(v) for v in rng.integers(1, k + 1, size=n))


def random_perm(rng: np.random.Generator, n: int) -> tuple:
    return tuple(int(v) + 1 for v in rng.permutation(n))


def random_string(rng: np.random.Generator, max_len: int, alphabet: str = "acgt") -> str:
    n = int(rng.integers(0, max_len + 1))
    return "".join(alphabet[int(i)] for i in rng.integers(0, len(alphabet), size=n))
