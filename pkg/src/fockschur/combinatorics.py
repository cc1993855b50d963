"""Enumeration of exponent-pair classes under degree and weight constraints.

A pair (p, q) of multi-indices is classified by its total degree
m = deg(p) + deg(q) and its net weight w = weight(p) - weight(q).  Without
a mode cutoff the class of each (m, w) with m >= 2 is infinite (put one
unit on p and one on q at any common mode), so every entry point requires
the cutoff K.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fock import MultiIndex


@dataclass(frozen=True)
class Cutoffs:
    """Finite truncation parameters shared across the package.

    K bounds the mode support, M the expansion order m, and D the degree
    of each operator side independently.
    """

    K: int
    M: int
    D: int

    def __post_init__(self):
        if self.K < 1:
            raise ValueError(f"mode cutoff K must be >= 1, got {self.K}")
        if self.M < 0:
            raise ValueError(f"order cutoff M must be >= 0, got {self.M}")
        if self.D < 0:
            raise ValueError(f"degree cutoff D must be >= 0, got {self.D}")


@dataclass(frozen=True)
class TuplePair:
    """One creation/annihilation exponent pair."""

    p: MultiIndex
    q: MultiIndex

    @property
    def m(self) -> int:
        return self.p.degree() + self.q.degree()

    @property
    def w(self) -> int:
        return self.p.weight() - self.q.weight()

    def sort_key(self):
        return (self.p.entries, self.q.entries)


def _validate(m: int, K: int):
    if m < 0:
        raise ValueError(f"total degree must be >= 0, got {m}")
    if K < 1:
        raise ValueError(f"mode cutoff must be >= 1, got {K}")


def enumerate_pq(m: int, w: int, K: int) -> list[TuplePair]:
    """All pairs with support in modes 1..K, total degree m, net weight w.

    Output is sorted by the entry lists of p, then q; the empty list means
    the class is empty at this cutoff (for instance whenever |w| > K*m).
    """
    _validate(m, K)
    pairs: list[TuplePair] = []

    def descend(mode, degree_left, weight_left, p_entries, q_entries):
        if degree_left == 0:
            if weight_left == 0:
                pairs.append(
                    TuplePair(MultiIndex(tuple(p_entries)), MultiIndex(tuple(q_entries)))
                )
            return
        if mode > K or abs(weight_left) > K * degree_left:
            return
        for a in range(degree_left + 1):
            for b in range(degree_left - a + 1):
                if a:
                    p_entries.append((mode, a))
                if b:
                    q_entries.append((mode, b))
                descend(
                    mode + 1,
                    degree_left - a - b,
                    weight_left - mode * (a - b),
                    p_entries,
                    q_entries,
                )
                if a:
                    p_entries.pop()
                if b:
                    q_entries.pop()

    descend(1, m, w, [], [])
    pairs.sort(key=TuplePair.sort_key)
    return pairs


def count_pq(m: int, w: int, K: int) -> int:
    """Size of the (m, w) class at cutoff K.

    Computed by mode-by-mode convolution of the per-mode generating
    function, independently of :func:`enumerate_pq`.
    """
    _validate(m, K)
    table = {(0, 0): 1}  # (degree used, weight so far) -> count
    for mode in range(1, K + 1):
        bumped = {}
        for (d, wt), count in table.items():
            budget = m - d
            for a in range(budget + 1):
                for b in range(budget - a + 1):
                    key = (d + a + b, wt + mode * (a - b))
                    bumped[key] = bumped.get(key, 0) + count
        table = bumped
    return table.get((m, w), 0)
