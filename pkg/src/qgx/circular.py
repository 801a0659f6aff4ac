"""Circular permutations: tours quotiented by rotation.

Gluing head to tail makes the n rotations of a permutation encode the
same cycle, and the rotation group is an isometry of both Hamming and
swap distance. Normalization tries all n rotations of the second parent
and keeps the closest; cycle crossover applied afterwards is the
position-independent cycle crossover. A small BFS oracle for reversal
distance is included for study; recombination along reversal geodesics
is out of reach (sorting by reversals is NP-hard) and not provided.
"""

from __future__ import annotations

from collections import deque
from typing import Literal

import numpy as np

from .crossovers import cycle_crossover
from .errors import DimensionError, ParameterError, SizeCapError
from .genotypes import Permutation
from .metrics import hamming_distance, swap_distance
from .quotient import GroupAction, Normalizer

BaseMetric = Literal["hamming", "swap"]

_BASE = {"hamming": hamming_distance, "swap": swap_distance}

REVERSAL_BFS_CAP = 7


def shift(p: Permutation, k: int) -> Permutation:
    """Rotate right by k steps: the last k entries move to the front."""
    n = len(p)
    k %= n
    if k == 0:
        return tuple(p)
    return tuple(p[-k:]) + tuple(p[:-k])


def shift_action(n: int) -> GroupAction:
    """The cyclic group of the n rotations, elements stored as step counts."""
    return GroupAction(
        name=f"shift(n={n})",
        elements=tuple(range(n)),
        identity=0,
        apply=lambda k, p: shift(p, k),
        compose=lambda a, b: (a + b) % n,
        inverse=lambda a: (n - a) % n,
    )


def _base_metric(base: str):
    try:
        return _BASE[base]
    except KeyError:
        raise ParameterError(f"base metric must be one of {sorted(_BASE)}, got {base!r}")


def quotient_distance(x: Permutation, y: Permutation, base: BaseMetric = "hamming") -> int:
    """Smallest base distance from x to any rotation of y."""
    if len(x) != len(y):
        raise DimensionError(f"size mismatch: {len(x)} vs {len(y)}")
    d = _base_metric(base)
    return min(d(x, shift(y, k)) for k in range(len(x)))


def normalize(x: Permutation, y: Permutation, base: BaseMetric = "hamming") -> Permutation:
    """Rotation of y closest to x; smallest step count wins ties."""
    if len(x) != len(y):
        raise DimensionError(f"size mismatch: {len(x)} vs {len(y)}")
    d = _base_metric(base)
    best_k, best_d = 0, d(x, y)
    for k in range(1, len(x)):
        dist = d(x, shift(y, k))
        if dist < best_d:
            best_k, best_d = k, dist
    return shift(y, best_k)


def normalizer(base: BaseMetric = "hamming") -> Normalizer:
    d = _base_metric(base)

    def norm(x, y):
        y_star = normalize(x, y, base)
        return y_star, float(d(x, y_star))

    return Normalizer(normalize=norm, exact=True)


def pi_cycle_crossover(
    x: Permutation,
    y: Permutation,
    rng: np.random.Generator,
    base: BaseMetric = "hamming",
) -> Permutation:
    """Position-independent cycle crossover: rotate y toward x, then recombine."""
    return cycle_crossover(x, normalize(x, y, base), rng)


def reversal_distance_bfs(x: Permutation, y: Permutation, cap: int = REVERSAL_BFS_CAP) -> int:
    """Exact reversal distance by breadth-first search over reversal moves.

    A move reverses the subsequence between any two positions. Only tiny
    instances are explored (n! states), hence the hard cap.
    """
    if len(x) != len(y):
        raise DimensionError(f"size mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    if n > cap:
        raise SizeCapError(f"reversal BFS capped at n={cap}, got n={n}")
    if x == y:
        return 0
    moves = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = {x}
    frontier = deque([(x, 0)])
    while frontier:
        p, dist = frontier.popleft()
        for i, j in moves:
            q = p[:i] + p[i : j + 1][::-1] + p[j + 1 :]
            if q == y:
                return dist + 1
            if q not in seen:
                seen.add(q)
                frontier.append((q, dist + 1))
    raise AssertionError("reversal moves connect all permutations")  # pragma: no cover


def read_tsp(text: str) -> tuple[tuple[float, float], ...]:
    """Parse a TSP instance: a count line then one "x y" line per city."""
    from .errors import InputError

    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise InputError("empty TSP instance")
    try:
        n = int(lines[0])
        cities = tuple(
            (float(a), float(b)) for a, b in (ln.split() for ln in lines[1 : n + 1])
        )
    except ValueError as exc:
        raise InputError(f"bad TSP instance: {exc}") from exc
    if len(cities) != n:
        raise InputError(f"TSP instance announces {n} cities, found {len(cities)}")
    return cities


def tour_length(tour: Permutation, cities: tuple[tuple[float, float], ...]) -> float:
    """Cyclic Euclidean length of the tour over the city coordinates."""
    if len(tour) != len(cities):
        raise DimensionError(f"tour over {len(tour)} cities, instance has {len(cities)}")
    total = 0.0
    for i in range(len(tour)):
        ax, ay = cities[tour[i] - 1]
        bx, by = cities[tour[(i + 1) % len(tour)] - 1]
        total += ((ax - bx) ** 2 + (ay - by) ** 2) ** 0.5
    return total
