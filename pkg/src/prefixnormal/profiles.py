"""Per-length factor statistics of a binary word.

For a word w and every length k, the three profiles computed here are the
maximum number of a's over all length-k factors (max-a), the analogous
maximum for b (max-b), and the minimum number of a's (min-a).  A profile is
stored as the plain integer array values[0..n] so downstream consumers can
answer length-indexed questions with one array read.

The computation is the straightforward per-length sliding window: O(n) per
window length via prefix counts, O(n^2) overall.  Long words take the
vectorized route over the same windows; the per-word cost at n = 500 is
about a millisecond.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Below this length the plain-Python slide beats numpy's per-call overhead.
_VECTOR_CUTOFF = 64

_KINDS = ("max-a", "min-a", "max-b")


@dataclass(frozen=True)
class OnesProfile:
    """A length-indexed factor-count profile.

    values[k] is the max (or min) symbol count over length-k factors, for
    k = 0..n.  Every profile starts at 0 and moves in steps of 0 or 1, and
    no count can exceed the window length.
    """

    kind: str
    values: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}")
        v = self.values
        if not v or v[0] != 0:
            raise ValueError("profile must start with values[0] = 0")
        for k in range(1, len(v)):
            if v[k] - v[k - 1] not in (0, 1):
                raise ValueError(
                    f"profile step at k={k} is {v[k] - v[k - 1]}, "
                    "expected 0 or 1")
            if v[k] > k:
                raise ValueError(f"values[{k}] = {v[k]} exceeds window length")

    @property
    def n(self) -> int:
        """Length of the profiled word."""
        return len(self.values) - 1

    def __getitem__(self, k: int) -> int:
        return self.values[k]


def _window_max_counts(w: str, symbol: str) -> list[int]:
    """values[k] = max count of ``symbol`` over all length-k windows of w."""
    n = len(w)
    pref = [0] * (n + 1)
    for i, ch in enumerate(w):
        pref[i + 1] = pref[i] + (ch == symbol)
    values = [0] * (n + 1)
    if n == 0:
        return values
    if n < _VECTOR_CUTOFF:
        for k in range(1, n + 1):
            values[k] = max(pref[j + k] - pref[j] for j in range(n - k + 1))
    else:
        p = np.asarray(pref, dtype=np.int64)
        for k in range(1, n + 1):
            values[k] = int((p[k:] - p[:n - k + 1]).max())
    return values


def max_a_profile(w: str) -> OnesProfile:
    """Maximum number of a's in a factor, for every factor length."""
    return OnesProfile("max-a", tuple(_window_max_counts(w, "a")))


def max_b_profile(w: str) -> OnesProfile:
    """Maximum number of b's in a factor, for every factor length.

    Equals the max-a profile of the complement word.
    """
    return OnesProfile("max-b", tuple(_window_max_counts(w, "b")))


def min_a_profile(w: str) -> OnesProfile:
    """Minimum number of a's in a factor, for every factor length.

    A window of length k holding the most b's holds the fewest a's, so
    values[k] = k - max_b[k].
    """
    max_b = _window_max_counts(w, "b")
    return OnesProfile("min-a", tuple(k - v for k, v in enumerate(max_b)))
