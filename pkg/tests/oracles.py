"""Independent reference implementations used only to cross-check the library.

Each oracle deliberately takes a different route from the code under test:
the pairing recursion never touches factorials, the pair sweep never
recurses over modes, and the product series never enumerates partitions.
"""

import itertools
from fractions import Fraction

from fockschur import (
    FockVector,
    MultiIndex,
    OneParticleVector,
    Scalar,
    annihilate,
)
from fockschur.scalar import ZERO


def inner_by_adjointness(a: FockVector, b: FockVector) -> Scalar:
    """Inner product by peeling one creation factor at a time through
    <x a, b> = <a, x* b>, down to the vacuum."""

    def mono(index, vec):
        if not index:
            return vec.coeff(MultiIndex())
        mode = index.entries[0][0]
        return mono(index.minus_one(mode), annihilate(OneParticleVector.basis(mode), vec))

    total = ZERO
    for index, coeff in a.items():
        total = total + coeff.conjugate() * mono(index, b)
    return total


def sweep_pairs(max_m: int, K: int) -> dict:
    """(m, w) -> sorted entry-pair list, by exhaustive sweep over all
    exponent assignments with degree sum <= max_m."""
    sides = []
    for exps in itertools.product(range(max_m + 1), repeat=K):
        degree = sum(exps)
        if degree > max_m:
            continue
        weight = sum((i + 1) * e for i, e in enumerate(exps))
        entries = tuple((i + 1, e) for i, e in enumerate(exps) if e)
        sides.append((degree, weight, entries))
    buckets = {}
    for dp, wp, p_entries in sides:
        for dq, wq, q_entries in sides:
            if dp + dq > max_m:
                continue
            key = (dp + dq, wp - wq)
            buckets.setdefault(key, []).append((p_entries, q_entries))
    for key in buckets:
        buckets[key].sort()
    return buckets


def schur_series_by_product(max_m: int, K: int) -> list:
    """Degree-graded coefficients of prod_k (truncated exp of x_k z^k),
    i.e. the generating series route to the classical Schur polynomials."""
    series = {0: FockVector.vacuum()}
    for mode in range(1, K + 1):
        x = FockVector.monomial(MultiIndex.single(mode))
        factor = {0: FockVector.vacuum()}
        power = FockVector.vacuum()
        for i in range(1, max_m // mode + 1):
            power = power * x * Scalar(Fraction(1, i))
            factor[mode * i] = power
        merged = {}
        for w1, f1 in series.items():
            for w2, f2 in factor.items():
                if w1 + w2 > max_m:
                    continue
                prod = f1 * f2
                prev = merged.get(w1 + w2)
                merged[w1 + w2] = prod if prev is None else prev + prod
        series = merged
    return [series.get(m, FockVector.zero()) for m in range(max_m + 1)]
