"""Desk-scale benchmark problems, one per representation family.

Each problem bundles a fitness function (always minimized), a seeded
random initializer, and the metadata the GA needs to pick matching
variation operators. Instances are generated from their own seed so a
run is reproducible from the config alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .circular import tour_length
from .errors import InputError
from .genotypes import (
    random_permutation,
    random_real_vector,
    random_symbol_vector,
)
from .graphs import edges_of, random_adjacency
from .sequences import check_sequence, edit_distance
from .symmetric import SYMMETRIC_FUNCTIONS

FAMILIES = (
    "grouping",
    "symmetric-real",
    "symmetric-discrete",
    "circular",
    "graph",
    "sequence",
)


@dataclass(frozen=True)
class Problem:
    name: str
    family: str
    fitness: Callable[[Any], float]
    initializer: Callable[[np.random.Generator], Any]
    k: int | None = None
    size: int | None = None
    alphabet: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")


def partitioning_problem(
    nodes: int = 60,
    groups: int = 4,
    edge_prob: float = 0.08,
    instance_seed: int = 0,
    balance_weight: float = 1.0,
) -> Problem:
    """Balanced k-way partitioning: cut size plus quadratic imbalance."""
    graph = random_adjacency(nodes, edge_prob, np.random.default_rng(instance_seed))
    edges = edges_of(graph)
    target = nodes / groups

    def fitness(g) -> float:
        cut = sum(g[u - 1] != g[v - 1] for u, v in edges)
        counts = [0] * groups
        for label in g:
            counts[label - 1] += 1
        imbalance = sum((c - target) ** 2 for c in counts)
        return cut + balance_weight * imbalance

    return Problem(
        name=f"partitioning(n={nodes},k={groups})",
        family="grouping",
        fitness=fitness,
        initializer=lambda rng: random_symbol_vector(nodes, groups, rng),
        k=groups,
        size=nodes,
    )


def coloring_problem(
    nodes: int = 40,
    colors: int = 3,
    edge_prob: float = 0.1,
    instance_seed: int = 0,
) -> Problem:
    """Graph coloring: count of monochromatic edges."""
    graph = random_adjacency(nodes, edge_prob, np.random.default_rng(instance_seed))
    edges = edges_of(graph)

    def fitness(g) -> float:
        return float(sum(g[u - 1] == g[v - 1] for u, v in edges))

    return Problem(
        name=f"coloring(n={nodes},k={colors})",
        family="grouping",
        fitness=fitness,
        initializer=lambda rng: random_symbol_vector(nodes, colors, rng),
        k=colors,
        size=nodes,
    )


def tsp_problem(cities: tuple[tuple[float, float], ...], name: str = "tsp") -> Problem:
    if len(cities) < 3:
        raise InputError("TSP needs at least 3 cities")

    return Problem(
        name=f"{name}(n={len(cities)})",
        family="circular",
        fitness=lambda tour: tour_length(tour, cities),
        initializer=lambda rng: random_permutation(len(cities), rng),
        size=len(cities),
    )


def random_tsp_problem(cities: int = 20, instance_seed: int = 0) -> Problem:
    rng = np.random.default_rng(instance_seed)
    coords = tuple((float(x), float(y)) for x, y in rng.random((cities, 2)))
    return tsp_problem(coords)


def symmetric_problem(
    function: str = "sum_of_squares",
    length: int = 8,
    low: float = -5.0,
    high: float = 5.0,
) -> Problem:
    if function not in SYMMETRIC_FUNCTIONS:
        raise InputError(
            f"unknown symmetric function {function!r}; choose from {sorted(SYMMETRIC_FUNCTIONS)}"
        )
    fn = SYMMETRIC_FUNCTIONS[function]
    return Problem(
        name=f"symmetric:{function}(n={length})",
        family="symmetric-real",
        fitness=lambda x: float(fn(x)),
        initializer=lambda rng: random_real_vector(length, rng, low, high),
        size=length,
    )


def sequence_problem(target: str, alphabet: str = "acgt") -> Problem:
    """Toy string matching: edit distance to a fixed target."""
    check_sequence(target)
    if not target or not alphabet:
        raise InputError("target and alphabet must be non-empty")

    def init(rng: np.random.Generator) -> str:
        n = int(rng.integers(1, 2 * len(target) + 1))
        return "".join(alphabet[int(i)] for i in rng.integers(0, len(alphabet), size=n))

    return Problem(
        name=f"sequence-match(len={len(target)})",
        family="sequence",
        fitness=lambda s: float(edit_distance(s, target)),
        initializer=init,
        size=len(target),
        alphabet=alphabet,
    )


_BUILDERS = {
    "partitioning": partitioning_problem,
    "coloring": coloring_problem,
    "tsp": random_tsp_problem,
    "symmetric": symmetric_problem,
    "sequence": sequence_problem,
}


def build_problem(doc: dict) -> Problem:
    """Instantiate a bundled problem from a config mapping."""
    if not isinstance(doc, dict) or "name" not in doc:
        raise InputError("problem section must be a mapping with a 'name'")
    params = dict(doc)
    name = params.pop("name")
    builder = _BUILDERS.get(name)
    if builder is None:
        raise InputError(f"unknown problem {name!r}; choose from {sorted(_BUILDERS)}")
    try:
        return builder(**params)
    except TypeError as exc:
        raise InputError(f"bad parameters for problem {name!r}: {exc}") from exc
