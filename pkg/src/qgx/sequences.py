"""Variable-length sequences, optimal alignment, homologous crossover.

Interleaving gap symbols stretches a sequence without changing what it
spells; all stretchings of the same sequence form one equivalence class.
This relation mirrors the quotient construction - normalize (align),
recombine, project (strip gaps) - but it does not come from an isometry
group, so no group machinery is used here. Aligning two sequences with
minimal mismatching columns realizes their edit distance, and mask
crossover on an optimal alignment keeps offspring on tight edit-distance
triangles between the parents.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .genotypes import FIRST

GAP = "-"


def check_sequence(s: str) -> str:
    if GAP in s:
        raise InputError(f"sequence may not contain the gap symbol {GAP!r}: {s!r}")
    return s


def unstretch(s: str) -> str:
    """Remove every gap symbol, preserving order."""
    return s.replace(GAP, "")


def edit_distance(s: str, t: str) -> int:
    """Unit-cost Levenshtein distance (insert, delete, replace).

    Row-vectorized: deletion/substitution candidates come from the
    previous row elementwise, and the insertion chain along the current
    row is a prefix-min of candidate minus column index.
    """
    if s == t:
        return 0
    m, n = len(s), len(t)
    if m == 0 or n == 0:
        return m + n
    t_codes = np.fromiter(map(ord, t), count=n, dtype=np.int64)
    cols = np.arange(n + 1, dtype=np.int64)
    prev = cols.copy()
    cand = np.empty(n + 1, dtype=np.int64)
    for i, ch in enumerate(s, 1):
        cand[0] = i
        np.minimum(prev[1:] + 1, prev[:-1] + (t_codes != ord(ch)), out=cand[1:])
        shifted = cand - cols
        np.minimum.accumulate(shifted, out=shifted)
        prev = shifted + cols
    return int(prev[n])


@dataclass(frozen=True)
class Alignment:
    """Two equal-length stretchings with no double-gap column."""

    left: str
    right: str

    def __post_init__(self):
        if len(self.left) != len(self.right):
            raise InputError("aligned strings must have equal length")
        if any(a == GAP and b == GAP for a, b in zip(self.left, self.right)):
            raise InputError("alignment contains a double-gap column")

    @property
    def mismatches(self) -> int:
        """Hamming distance between the stretched strings."""
        return sum(a != b for a, b in zip(self.left, self.right))


def _edit_table(s: str, t: str) -> list[list[int]]:
    m, n = len(s), len(t)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        dp[i][0] = i
    for j in range(n + 1):
        dp[0][j] = j
    for i in range(1, m + 1):
        row, above = dp[i], dp[i - 1]
        si = s[i - 1]
        for j in range(1, n + 1):
            row[j] = min(
                above[j - 1] + (si != t[j - 1]),
                above[j] + 1,
                row[j - 1] + 1,
            )
    return dp


def optimal_align(s: str, t: str) -> Alignment:
    """Minimal-mismatch stretching of s and t to a common length.

    The mismatch count of the result equals the edit distance. Backtrace
    ties resolve match > substitute > delete > insert, scanning from the
    end, which pins one canonical alignment per input pair.
    """
    check_sequence(s)
    check_sequence(t)
    dp = _edit_table(s, t)
    left: list[str] = []
    right: list[str] = []
    i, j = len(s), len(t)
    while i > 0 or j > 0:
        here = dp[i][j]
        if i > 0 and j > 0 and s[i - 1] == t[j - 1] and dp[i - 1][j - 1] == here:
            i, j = i - 1, j - 1
            left.append(s[i])
            right.append(t[j])
        elif i > 0 and j > 0 and dp[i - 1][j - 1] + 1 == here:
            i, j = i - 1, j - 1
            left.append(s[i])
            right.append(t[j])
        elif i > 0 and dp[i - 1][j] + 1 == here:
            i -= 1
            left.append(s[i])
            right.append(GAP)
        else:
            j -= 1
            left.append(GAP)
            right.append(t[j])
    return Alignment("".join(reversed(left)), "".join(reversed(right)))


def homologous_crossover(s: str, t: str, rng: np.random.Generator) -> str:
    """Align optimally, mask-recombine columns, strip gaps."""
    alignment = optimal_align(s, t)
    picked = (
        a if bit == FIRST else b
        for a, b, bit in zip(
            alignment.left,
            alignment.right,
            rng.integers(0, 2, size=len(alignment.left)),
        )
    )
    return unstretch("".join(picked))


def tail_padded_crossover(s: str, t: str, rng: np.random.Generator) -> str:
    """Raw baseline: pad the shorter parent with trailing gaps, then
    mask-recombine positionwise without aligning."""
    check_sequence(s)
    check_sequence(t)
    width = max(len(s), len(t))
    a = s.ljust(width, GAP)
    b = t.ljust(width, GAP)
    picked = (
        x if bit == FIRST else y
        for x, y, bit in zip(a, b, rng.integers(0, 2, size=width))
    )
    return unstretch("".join(picked))


def read_corpus(text: str) -> tuple[str, ...]:
    """One sequence per line; blank lines ignored."""
    return tuple(
        check_sequence(ln) for ln in (s.strip() for s in text.splitlines()) if ln
    )
