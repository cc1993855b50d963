"""Seeded exactness checks for the algebra and expansion identities.

Every check asserts an identity that holds exactly at finite cutoff, so a
failure always means an implementation bug, never numerical noise.  Inputs
are drawn from ``random.Random(seed)`` with numerators and denominators in
a small fixed range, keeping exact arithmetic fast and every run
reproducible byte for byte.

Conjugation caveat baked into two checks: applying operators and pairing
against coherent vectors produces <u,f_k> and <g_k,v>, the conjugates of
the <f_k,u> and <v,g_k> factors used by the generating-function routes.
The named operator-vs-expansion comparisons therefore draw real-rational
inputs (with <u,v> = 0 where the identity needs the prefactor gone), and
the fully general complex case is covered separately by the
truncation-matched pairing check, which uses the conjugated factors and
per-term exponential partial sums.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from .combinatorics import Cutoffs, enumerate_pq
from .expansion import (
    apply_schur,
    exp_partial_sum,
    matrix_element_expansion,
    power_matrix_element,
    schur_terms,
    verify_lemma_term,
)
from .fock import (
    BasisConfig,
    FockVector,
    MultiIndex,
    OneParticleVector,
    check_multiplicability,
    coherent,
    exp_annihilate,
    inner,
    power_annihilate_coherent,
)
from .scalar import ONE, ZERO, Scalar
from .serialize import scalar_to_json, vector_to_json


@dataclass
class CheckResult:
    name: str
    passed: bool
    trials: int
    counterexample: Optional[dict] = field(default=None)


# -- random input generation ---------------------------------------------------


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_scalar(rng: random.Random, real: bool = False) -> Scalar:
    re = random_rational(rng)
    im = 0 if real else random_rational(rng)
    return Scalar(re, im)


def random_vector(rng: random.Random, K: int, real: bool = False) -> OneParticleVector:
    return OneParticleVector((mode, random_scalar(rng, real)) for mode in range(1, K + 1))


def random_nonzero_vector(rng, K, real=False) -> OneParticleVector:
    while True:
        v = random_vector(rng, K, real)
        if not v.is_zero():
            return v


def orthogonal_real_pair(rng, K):
    """A real-rational pair with <u, v> exactly zero, v nonzero when K > 1."""
    u = random_nonzero_vector(rng, K, real=True)
    norm = u.inner(u)
    for _ in range(32):
        draft = random_vector(rng, K, real=True)
        v = draft - u * (u.inner(draft) / norm)
        if not v.is_zero():
            return u, v
    return u, OneParticleVector.zero()  # K = 1: only the zero vector works


def random_multiindex(rng, K, degree) -> MultiIndex:
    return MultiIndex((rng.randint(1, K), 1) for _ in range(degree))


def random_fock(rng, K, max_degree, max_terms=3) -> FockVector:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        index = random_multiindex(rng, K, rng.randint(0, max_degree))
        terms.append((index, random_scalar(rng)))
    return FockVector(terms)


# -- oracle helpers shared with the test suite ---------------------------------


def truncated_expansion_sum(u, v, w, config, order, degree) -> Scalar:
    """Expansion sum over terms surviving the per-side degree cutoff.

    Uses the generating-function pairing factors <f_k,u> and <v,g_k> with no
    exponential prefactor; matches the operator route exactly when all
    pairings are real and <u,v> = 0.
    """
    a = {n: config.f(n).inner(u) for n in range(1, config.K + 1)}
    b = {n: v.inner(config.g(n)) for n in range(1, config.K + 1)}
    total = ZERO
    for m in range(order + 1):
        for pair in enumerate_pq(m, w, config.K):
            if pair.p.degree() > degree or pair.q.degree() > degree:
                continue
            value = Scalar(Fraction(1, pair.p.factorial() * pair.q.factorial()))
            for mode, exp in pair.p.items():
                value = value * a[mode] ** exp
                if not value:
                    break
            if not value:
                continue
            for mode, exp in pair.q.items():
                value = value * b[mode] ** exp
                if not value:
                    break
            total = total + value
    return total


def truncation_matched_pairing(u, v, w, config, order, degree) -> Scalar:
    """Exact value of <coherent(u,D), S_w coherent(v,D)> for any inputs.

    Each surviving term carries the conjugated pairing factors <u,f_k> and
    <g_k,v> together with the partial exponential sum of <u,v> at the order
    the truncation leaves room for.
    """
    a = {n: config.f(n).inner(u).conjugate() for n in range(1, config.K + 1)}
    b = {n: v.inner(config.g(n)).conjugate() for n in range(1, config.K + 1)}
    uv = u.inner(v)
    total = ZERO
    for m in range(order + 1):
        for pair in enumerate_pq(m, w, config.K):
            dp, dq = pair.p.degree(), pair.q.degree()
            if dp > degree or dq > degree:
                continue
            value = Scalar(Fraction(1, pair.p.factorial() * pair.q.factorial()))
            for mode, exp in pair.p.items():
                value = value * a[mode] ** exp
                if not value:
                    break
            if not value:
                continue
            for mode, exp in pair.q.items():
                value = value * b[mode] ** exp
                if not value:
                    break
            if not value:
                continue
            total = total + value * exp_partial_sum(uv, degree - max(dp, dq))
    return total


# -- individual checks ----------------------------------------------------------


def _vector_payload(K, **vectors):
    return {name: vector_to_json(v, K) for name, v in vectors.items()}


def check_power_inner(rng, cutoffs, config, trials) -> CheckResult:
    """<x,y>^j = (1/j!) <x^j, y^j> for j = 0..5."""
    K = cutoffs.K
    for trial in range(trials):
        x = random_vector(rng, K)
        y = random_vector(rng, K)
        xy = x.inner(y)
        xp = FockVector.vacuum()
        yp = FockVector.vacuum()
        for j in range(6):
            if j:
                xp = xp * x.to_fock()
                yp = yp * y.to_fock()
            lhs = xy**j * Scalar(factorial(j))
            rhs = inner(xp, yp)
            if lhs != rhs:
                return CheckResult(
                    "power-inner-product",
                    False,
                    trials,
                    {
                        "trial": trial,
                        "j": j,
                        **_vector_payload(K, x=x, y=y),
                        "lhs": scalar_to_json(lhs),
                        "rhs": scalar_to_json(rhs),
                    },
                )
    return CheckResult("power-inner-product", True, trials)


def check_power_annihilate(rng, cutoffs, config, trials) -> CheckResult:
    """(x^n)* coherent(w, D) = <x,w>^n coherent(w, D - n)."""
    K, D = cutoffs.K, cutoffs.D
    for trial in range(trials):
        x = random_vector(rng, K)
        w = random_vector(rng, K)
        n = rng.randint(0, D)
        got = power_annihilate_coherent(x, n, w, D)
        expected = coherent(w, D - n) * (x.inner(w) ** n)
        if got != expected:
            return CheckResult(
                "power-annihilate-coherent",
                False,
                trials,
                {"trial": trial, "n": n, **_vector_payload(K, x=x, w=w)},
            )
    return CheckResult("power-annihilate-coherent", True, trials)


def check_product_pairing(rng, cutoffs, config, trials) -> CheckResult:
    """<e^u, fg> = <e^u, f><e^u, g> whenever the cutoff admits the product."""
    K, D = cutoffs.K, cutoffs.D
    for trial in range(trials):
        u = random_vector(rng, K)
        df = rng.randint(0, D)
        f = random_fock(rng, K, df)
        g = random_fock(rng, K, D - f.degree())
        if not check_multiplicability(u, f, g, D):
            return CheckResult(
                "product-pairing",
                False,
                trials,
                {"trial": trial, **_vector_payload(K, u=u), "f": repr(f), "g": repr(g)},
            )
    return CheckResult("product-pairing", True, trials)


def check_exp_annihilate(rng, cutoffs, config, trials) -> CheckResult:
    """Degree-j slice of exp(a(w)) coherent(v, D) carries the partial sum
    of exp(<w,v>) at order D - j."""
    K, D = cutoffs.K, cutoffs.D
    for trial in range(trials):
        w = random_vector(rng, K)
        v = random_vector(rng, K)
        got = exp_annihilate(w, coherent(v, D))
        wv = w.inner(v)
        expected = FockVector.vacuum(exp_partial_sum(wv, D))
        term = FockVector.vacuum()
        for j in range(1, D + 1):
            term = term * v.to_fock() * Scalar(Fraction(1, j))
            expected = expected + term * exp_partial_sum(wv, D - j)
        if got != expected:
            return CheckResult(
                "exp-annihilate",
                False,
                trials,
                {"trial": trial, **_vector_payload(K, w=w, v=v)},
            )
    return CheckResult("exp-annihilate", True, trials)


def check_lemma_terms(rng, cutoffs, config, trials) -> CheckResult:
    """Order-by-order agreement of the pairing-power route with the term
    enumeration, for m = 0..M."""
    K = cutoffs.K
    for trial in range(trials):
        u = random_vector(rng, K)
        v = random_vector(rng, K)
        for m in range(cutoffs.M + 1):
            if not verify_lemma_term(u, v, m, config):
                return CheckResult(
                    "lemma-terms",
                    False,
                    trials,
                    {"trial": trial, "m": m, **_vector_payload(K, u=u, v=v)},
                )
    return CheckResult("lemma-terms", True, trials)


def check_oracle_equivalence(rng, cutoffs, config, trials) -> CheckResult:
    """Operator route against the truncated expansion sum, real inputs with
    <u,v> = 0, reference basis."""
    K, D, M = cutoffs.K, cutoffs.D, cutoffs.M
    identity = BasisConfig.identity(K)
    span = K * M
    operators = {w: schur_terms(w, cutoffs) for w in range(-span, span + 1)}
    for trial in range(trials):
        u, v = orthogonal_real_pair(rng, K)
        eu = coherent(u, D)
        ev = coherent(v, D)
        for w in range(-span, span + 1):
            lhs = inner(eu, apply_schur(operators[w], ev, identity, D))
            rhs = truncated_expansion_sum(u, v, w, identity, M, D)
            if lhs != rhs:
                return CheckResult(
                    "oracle-equivalence",
                    False,
                    trials,
                    {
                        "trial": trial,
                        "w": w,
                        **_vector_payload(K, u=u, v=v),
                        "lhs": scalar_to_json(lhs),
                        "rhs": scalar_to_json(rhs),
                    },
                )
    return CheckResult("oracle-equivalence", True, trials)


def check_theorem_reduction(rng, cutoffs, config, trials) -> CheckResult:
    """Formal coefficient extraction against <u^k, S_w v^j>, real inputs,
    matched per-(k, j) cutoffs."""
    K = cutoffs.K
    identity = BasisConfig.identity(K)
    operator_cache = {}
    for trial in range(trials):
        u = random_vector(rng, K, real=True)
        v = random_vector(rng, K, real=True)
        for k in range(4):
            for j in range(4):
                matched = Cutoffs(K=K, M=k + j, D=max(k, j))
                uk = u.to_fock() ** k
                vj = v.to_fock() ** j
                for w in range(-4, 5):
                    key = (w, k + j, max(k, j))
                    op = operator_cache.get(key)
                    if op is None:
                        op = schur_terms(w, matched)
                        operator_cache[key] = op
                    lhs = power_matrix_element(u, k, v, j, w, identity, matched)
                    rhs = inner(uk, apply_schur(op, vj, identity, matched.D))
                    if lhs != rhs:
                        return CheckResult(
                            "theorem-reduction",
                            False,
                            trials,
                            {
                                "trial": trial,
                                "k": k,
                                "j": j,
                                "w": w,
                                **_vector_payload(K, u=u, v=v),
                                "lhs": scalar_to_json(lhs),
                                "rhs": scalar_to_json(rhs),
                            },
                        )
    return CheckResult("theorem-reduction", True, trials)


def check_truncation_matched(rng, cutoffs, config, trials) -> CheckResult:
    """Operator route against the per-term partial-sum formula, arbitrary
    complex inputs and the configured basis."""
    K, D, M = cutoffs.K, cutoffs.D, cutoffs.M
    span = K * M
    operators = {w: schur_terms(w, cutoffs) for w in range(-span, span + 1)}
    for trial in range(trials):
        u = random_vector(rng, K)
        v = random_vector(rng, K)
        eu = coherent(u, D)
        ev = coherent(v, D)
        for w in range(-span, span + 1):
            lhs = inner(eu, apply_schur(operators[w], ev, config, D))
            rhs = truncation_matched_pairing(u, v, w, config, M, D)
            if lhs != rhs:
                return CheckResult(
                    "truncation-matched-pairing",
                    False,
                    trials,
                    {
                        "trial": trial,
                        "w": w,
                        **_vector_payload(K, u=u, v=v),
                        "lhs": scalar_to_json(lhs),
                        "rhs": scalar_to_json(rhs),
                    },
                )
    return CheckResult("truncation-matched-pairing", True, trials)


_CHECKS = (
    check_power_inner,
    check_power_annihilate,
    check_product_pairing,
    check_exp_annihilate,
    check_lemma_terms,
    check_oracle_equivalence,
    check_theorem_reduction,
    check_truncation_matched,
)


def run_suite(
    cutoffs: Cutoffs,
    seed: int,
    trials: int,
    config: Optional[BasisConfig] = None,
) -> list[CheckResult]:
    """Run every identity check; deterministic for fixed arguments."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if config is None:
        config = BasisConfig.identity(cutoffs.K)
    if config.K != cutoffs.K:
        raise ValueError(
            f"basis has {config.K} modes but the cutoff asks for {cutoffs.K}"
        )
    rng = random.Random(seed)
    return [check(rng, cutoffs, config, trials) for check in _CHECKS]
