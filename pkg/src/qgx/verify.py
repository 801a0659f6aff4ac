"""Randomized property checks for group, isometry, and quotient-metric laws.

Each check runs over sampled points and group elements and reports the
number of violations plus the first counterexample witness, so a failing
suite is immediately actionable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .metrics import Metric
from .quotient import DEFAULT_ORBIT_CAP, GroupAction, orbit

Sampler = Callable[[np.random.Generator], Any]


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checks: int
    violations: int
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        msg = f"{self.suite}: {status} ({self.checks} checks, {self.violations} violations)"
        if self.witness is not None:
            msg += f"\n  first counterexample: {self.witness}"
        return msg


class _Tally:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks = 0
        self.violations = 0
        self.witness: str | None = None

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checks += 1
        if not ok:
            self.violations += 1
            if self.witness is None:
                self.witness = describe()

    def report(self) -> VerificationReport:
        return VerificationReport(self.suite, self.checks, self.violations, self.witness)


def _pick(elements: tuple, rng: np.random.Generator):
    return elements[int(rng.integers(0, len(elements)))]


def verify_equivalence(
    action: GroupAction,
    sampler: Sampler,
    rng: np.random.Generator,
    trials: int = 1000,
) -> VerificationReport:
    """Reflexivity, symmetry, transitivity of the orbit relation.

    Reflexivity needs the identity, symmetry needs inverses, transitivity
    needs closure; all three are checked both as set membership and by
    acting on sampled points.
    """
    tally = _Tally(f"equivalence[{action.name}]")
    members = frozenset(action.elements)
    for _ in range(trials):
        x = sampler(rng)
        g = _pick(action.elements, rng)
        h = _pick(action.elements, rng)

        tally.check(
            action.identity in members and action.apply(action.identity, x) == x,
            lambda: f"identity missing or not neutral on x={x!r}",
        )
        g_inv = action.inverse(g)
        tally.check(
            g_inv in members and action.apply(g_inv, action.apply(g, x)) == x,
            lambda: f"inverse of g={g!r} missing or ineffective on x={x!r}",
        )
        gh = action.compose(g, h)
        tally.check(
            gh in members and action.apply(gh, x) == action.apply(g, action.apply(h, x)),
            lambda: f"composition of g={g!r}, h={h!r} not in group or action law broken on x={x!r}",
        )
    return tally.report()


def verify_isometry(
    action: GroupAction,
    metric: Metric,
    sampler: Sampler,
    rng: np.random.Generator,
    trials: int = 1000,
    tol: float = 0.0,
) -> VerificationReport:
    """d(g(x), g(y)) == d(x, y) on sampled elements and point pairs."""
    tally = _Tally(f"isometry[{action.name}]")
    for _ in range(trials):
        x, y = sampler(rng), sampler(rng)
        g = _pick(action.elements, rng)
        lhs = metric(action.apply(g, x), action.apply(g, y))
        rhs = metric(x, y)
        tally.check(
            abs(lhs - rhs) <= tol,
            lambda: f"g={g!r} moved d({x!r},{y!r}) from {rhs} to {lhs}",
        )
    return tally.report()


def verify_metric_axioms(
    metric: Metric,
    sampler: Sampler,
    rng: np.random.Generator,
    trials: int = 1000,
    tol: float = 0.0,
) -> VerificationReport:
    """Identity, symmetry, triangle inequality on sampled triples."""
    tally = _Tally("metric")
    for _ in range(trials):
        x, y, z = sampler(rng), sampler(rng), sampler(rng)
        tally.check(abs(metric(x, x)) <= tol, lambda: f"d(x,x) != 0 for x={x!r}")
        dxy, dyx = metric(x, y), metric(y, x)
        tally.check(
            abs(dxy - dyx) <= tol,
            lambda: f"asymmetric: d({x!r},{y!r})={dxy} vs {dyx}",
        )
        tally.check(
            dxy >= 0 and (x != y or dxy <= tol),
            lambda: f"identity axiom broken on ({x!r},{y!r}): {dxy}",
        )
        dxz, dyz = metric(x, z), metric(y, z)
        tally.check(
            dxz <= dxy + dyz + tol,
            lambda: f"triangle broken: d(x,z)={dxz} > {dxy}+{dyz} for x={x!r} y={y!r} z={z!r}",
        )
    return tally.report()


def verify_quotient_metric(
    action: GroupAction,
    metric: Metric,
    sampler: Sampler,
    rng: np.random.Generator,
    trials: int = 1000,
    tol: float = 0.0,
    quotient_dist: Callable[[Any, Any], float] | None = None,
    pair_checks: int = 50,
    cap: int = DEFAULT_ORBIT_CAP,
) -> VerificationReport:
    """Metric axioms of the quotient distance, plus minimization sanity.

    `quotient_dist` may supply a fast representation-specific distance;
    the fallback enumerates orbits (cached per point). Two extra checks
    run regardless: class invariance d(x, g(y)) == d(x, y), and equality
    of one-sided and two-sided orbit minimization on `pair_checks`
    sampled pairs.
    """
    tally = _Tally(f"quotient-metric[{action.name}]")
    orbits: dict[Any, tuple] = {}

    def orbit_of(p):
        got = orbits.get(p)
        if got is None:
            got = tuple(orbit(p, action, cap))
            orbits[p] = got
        return got

    qd = quotient_dist
    if qd is None:
        qd = lambda a, b: min(metric(a, bb) for bb in orbit_of(b))

    for _ in range(trials):
        x, y, z = sampler(rng), sampler(rng), sampler(rng)
        tally.check(abs(qd(x, x)) <= tol, lambda: f"qd(x,x) != 0 for x={x!r}")
        dxy, dyx = qd(x, y), qd(y, x)
        tally.check(
            abs(dxy - dyx) <= tol,
            lambda: f"asymmetric quotient distance on ({x!r},{y!r}): {dxy} vs {dyx}",
        )
        dxz, dyz = qd(x, z), qd(y, z)
        tally.check(
            dxz <= dxy + dyz + tol,
            lambda: f"quotient triangle broken on x={x!r} y={y!r} z={z!r}: {dxz} > {dxy}+{dyz}",
        )
        g = _pick(action.elements, rng)
        moved = qd(x, action.apply(g, y))
        tally.check(
            abs(moved - dxy) <= tol,
            lambda: f"class invariance broken: qd(x, g(y))={moved} vs qd(x,y)={dxy} for g={g!r}",
        )

    for _ in range(pair_checks):
        x, y = sampler(rng), sampler(rng)
        one_sided = min(metric(x, yy) for yy in orbit_of(y))
        two_sided = min(metric(xx, yy) for xx in orbit_of(x) for yy in orbit_of(y))
        tally.check(
            abs(one_sided - two_sided) <= tol,
            lambda: f"one-sided {one_sided} != two-sided {two_sided} on ({x!r},{y!r})",
        )
        if quotient_dist is not None:
            fast = quotient_dist(x, y)
            tally.check(
                abs(fast - one_sided) <= tol,
                lambda: f"fast quotient distance {fast} != enumeration {one_sided} on ({x!r},{y!r})",
            )
    return tally.report()
