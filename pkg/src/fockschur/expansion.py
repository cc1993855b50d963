"""Laurent coefficients of the vertex-operator product, exactly.

The operator of interest is the product of an exponentiated creation
series and an exponentiated annihilation series over two orthonormal mode
systems {f_n} and {g_n}.  Its coefficient at Laurent weight w is an
operator-valued Schur polynomial: a sum over exponent pairs (p, q) of

    1/(p! q!) * (prod_k f_k^{p_k}) (prod_k g_k^{q_k})*

aggregated over total degrees m = 0..M.  This module assembles those
coefficients at finite cutoffs and computes vertex matrix elements by two
independent routes (generating function and term enumeration) so each can
serve as an oracle for the other.

Exactness policy: the exponential prefactor exp(<u,v>) is irrational in
general, so APIs either exclude it (term routes) or replace it by the
order-matched partial sum (closed route), never by a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinatorics import Cutoffs, enumerate_pq
from .fock import BasisConfig, FockVector, MultiIndex, OneParticleVector, annihilate
from .scalar import ONE, ZERO, Scalar


@dataclass(frozen=True)
class SchurTerm:
    """One expansion term: creation exponents p, annihilation exponents q,
    coefficient 1/(p! q!)."""

    p: MultiIndex
    q: MultiIndex
    coeff: Scalar


@dataclass(frozen=True)
class SchurOperator:
    """All terms of one Laurent coefficient at the given cutoffs, listed in
    enumeration order with m ascending."""

    w: int
    cutoffs: Cutoffs
    terms: tuple


class LaurentSlice:
    """Finitely supported map weight -> Scalar: one vertex matrix element
    as an exact Laurent polynomial at fixed cutoffs."""

    __slots__ = ("_coeffs", "cutoffs")

    def __init__(self, coeffs, cutoffs: Cutoffs):
        if isinstance(coeffs, dict):
            coeffs = coeffs.items()
        acc = {}
        for w, value in coeffs:
            w = int(w)
            if not isinstance(value, Scalar):
                value = Scalar(value)
            prev = acc.get(w)
            acc[w] = value if prev is None else prev + value
        self._coeffs = {w: v for w, v in acc.items() if v}
        self.cutoffs = cutoffs

    def coeff(self, w: int) -> Scalar:
        return self._coeffs.get(w, ZERO)

    def items(self):
        return sorted(self._coeffs.items())

    def support(self):
        return sorted(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        return (
            isinstance(other, LaurentSlice)
            and self._coeffs == other._coeffs
            and self.cutoffs == other.cutoffs
        )

    def __repr__(self):
        body = ", ".join(f"{w}: {v}" for w, v in self.items())
        return f"LaurentSlice({{{body}}}, cutoffs={self.cutoffs})"


# -- exact Laurent-polynomial helpers (plain dicts weight -> Scalar) --------


def _laurent_mul(a: dict, b: dict) -> dict:
    out = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            key = wa + wb
            value = ca * cb
            prev = out.get(key)
            out[key] = value if prev is None else prev + value
    return {w: c for w, c in out.items() if c}


def _laurent_add_scaled(acc: dict, other: dict, scale: Scalar):
    for w, c in other.items():
        value = c * scale
        prev = acc.get(w)
        total = value if prev is None else prev + value
        if total:
            acc[w] = total
        elif prev is not None:
            del acc[w]


def exp_partial_sum(value: Scalar, order: int) -> Scalar:
    """sum_{i=0}^{order} value^i / i!, the exact truncated exponential."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    total = ONE
    term = ONE
    for i in range(1, order + 1):
        term = term * value * Scalar(Fraction(1, i))
        if not term:
            break
        total = total + term
    return total


def _creation_pairings(u: OneParticleVector, config: BasisConfig) -> dict:
    """a_n = <f_n, u> for n = 1..K, zeros omitted."""
    out = {}
    for n in range(1, config.K + 1):
        value = config.f(n).inner(u)
        if value:
            out[n] = value
    return out


def _annihilation_pairings(v: OneParticleVector, config: BasisConfig) -> dict:
    """b_n = <v, g_n> for n = 1..K, zeros omitted."""
    out = {}
    for n in range(1, config.K + 1):
        value = v.inner(config.g(n))
        if value:
            out[n] = value
    return out


def _pairing_laurent(u, v, config) -> dict:
    """P(z) = sum_n (<f_n,u> z^n + <v,g_n> z^-n) as a Laurent dict."""
    out = {}
    for n, value in _creation_pairings(u, config).items():
        out[n] = value
    for n, value in _annihilation_pairings(v, config).items():
        prev = out.get(-n)
        out[-n] = value if prev is None else prev + value
    return {w: c for w, c in out.items() if c}


# -- operations --------------------------------------------------------------


def schur_terms(w: int, cutoffs: Cutoffs) -> SchurOperator:
    """Assemble the weight-w Laurent coefficient up to order M, support K."""
    terms = []
    for m in range(cutoffs.M + 1):
        for pair in enumerate_pq(m, w, cutoffs.K):
            coeff = Scalar(Fraction(1, pair.p.factorial() * pair.q.factorial()))
            terms.append(SchurTerm(pair.p, pair.q, coeff))
    return SchurOperator(w=w, cutoffs=cutoffs, terms=tuple(terms))


def apply_schur(
    op: SchurOperator, v: FockVector, config: BasisConfig, max_degree: int
) -> FockVector:
    """Apply the truncated coefficient operator to ``v``.

    Per term: the annihilation part acts first, then multiplication by the
    creation monomial, and anything that climbs above ``max_degree`` is
    discarded (mirroring pairings against test vectors of degree <= D).
    """
    if v.degree() > max_degree:
        raise ValueError(
            f"input degree {v.degree()} exceeds the degree cutoff {max_degree}"
        )
    creation_cache: dict[int, FockVector] = {}
    out = FockVector.zero()
    for term in op.terms:
        current = v
        for mode, exp in term.q.items():
            g = config.g(mode)
            for _ in range(exp):
                current = annihilate(g, current)
                if current.is_zero():
                    break
            if current.is_zero():
                break
        if current.is_zero():
            continue
        for mode, exp in term.p.items():
            f_fock = creation_cache.get(mode)
            if f_fock is None:
                f_fock = config.f(mode).to_fock()
                creation_cache[mode] = f_fock
            for _ in range(exp):
                current = current * f_fock
        current = current.truncate(max_degree)
        if not current.is_zero():
            out = out + current * term.coeff
    return out


def matrix_element_closed(
    u: OneParticleVector,
    v: OneParticleVector,
    config: BasisConfig,
    cutoffs: Cutoffs,
) -> LaurentSlice:
    """Coherent matrix element of the vertex operator by generating function.

    Computes sum_{m<=M} P(z)^m / m! for the pairing polynomial P and scales
    every coefficient by the partial sum E_M(<u,v>), the order-matched exact
    stand-in for the exponential prefactor.
    """
    config.check_vector(u, "u")
    config.check_vector(v, "v")
    pairing = _pairing_laurent(u, v, config)
    total = {0: ONE}
    power = {0: ONE}
    for m in range(1, cutoffs.M + 1):
        power = _laurent_mul(power, pairing)
        if not power:
            break
        _laurent_add_scaled(total, power, Scalar(Fraction(1, factorial(m))))
    prefactor = exp_partial_sum(u.inner(v), cutoffs.M)
    return LaurentSlice({w: c * prefactor for w, c in total.items()}, cutoffs)


def matrix_element_expansion(
    u: OneParticleVector,
    v: OneParticleVector,
    w: int,
    m: int,
    config: BasisConfig,
) -> Scalar:
    """Order-m, weight-w expansion value, without the exponential prefactor.

    Sums 1/(p! q!) * prod_k <f_k,u>^{p_k} <v,g_k>^{q_k} over the (m, w)
    pair class with support <= K.
    """
    a = _creation_pairings(u, config)
    b = _annihilation_pairings(v, config)
    total = ZERO
    for pair in enumerate_pq(m, w, config.K):
        value = Scalar(Fraction(1, pair.p.factorial() * pair.q.factorial()))
        for mode, exp in pair.p.items():
            factor = a.get(mode)
            if factor is None:
                value = ZERO
                break
            value = value * factor**exp
        if not value:
            continue
        for mode, exp in pair.q.items():
            factor = b.get(mode)
            if factor is None:
                value = ZERO
                break
            value = value * factor**exp
        total = total + value
    return total


def verify_lemma_term(
    u: OneParticleVector, v: OneParticleVector, m: int, config: BasisConfig
) -> bool:
    """Check P(z)^m / m! against the order-m term enumeration, weight by
    weight over the full reachable range [-K*m, K*m].  True for every valid
    input; a False return means an implementation bug."""
    if m < 0:
        raise ValueError(f"order must be >= 0, got {m}")
    pairing = _pairing_laurent(u, v, config)
    power = {0: ONE}
    for _ in range(m):
        power = _laurent_mul(power, pairing)
    scale = Scalar(Fraction(1, factorial(m)))
    span = config.K * m
    for w in range(-span, span + 1):
        lhs = power.get(w, ZERO) * scale
        if lhs != matrix_element_expansion(u, v, w, m, config):
            return False
    return True


def elementary_schur(m: int, K: int) -> FockVector:
    """Classical Schur polynomial S_m in commuting variables x_1..x_K.

    Defined by exp(sum_k x_k z^k) = sum_m S_m(x) z^m; concretely the sum of
    (1/p!) x^p over multi-indices p of weight m with support <= K.  The
    result reuses the sparse monomial container, exponents playing the role
    of variable powers.
    """
    if m < 0:
        raise ValueError(f"weight must be >= 0, got {m}")
    if K < 1:
        raise ValueError(f"mode cutoff must be >= 1, got {K}")
    terms = []

    def descend(mode, weight_left, entries):
        if weight_left == 0:
            index = MultiIndex(tuple(entries))
            terms.append((index, Scalar(Fraction(1, index.factorial()))))
            return
        if mode > K or mode > weight_left:
            return
        descend(mode + 1, weight_left, entries)
        for exp in range(1, weight_left // mode + 1):
            entries.append((mode, exp))
            descend(mode + 1, weight_left - mode * exp, entries)
            entries.pop()

    descend(1, m, [])
    return FockVector(terms)


def power_matrix_element(
    u: OneParticleVector,
    k: int,
    v: OneParticleVector,
    j: int,
    w: int,
    config: BasisConfig,
    cutoffs: Cutoffs,
) -> Scalar:
    """Weight-w matrix element between the k-th power of u and the j-th
    power of v, by formal coefficient extraction.

    Scales u and v by formal variables t and s inside the closed-form
    coherent matrix element, expands exactly, and returns k! * j! times the
    coefficient of t^k s^j z^w.  No numeric differentiation is involved;
    cutoffs.M should be at least k + j or surviving orders get dropped.
    """
    if k < 0 or j < 0:
        raise ValueError("powers must be >= 0")
    config.check_vector(u, "u")
    config.check_vector(v, "v")

    def ts_mul(a: dict, b: dict) -> dict:
        out = {}
        for (ta, sa, wa), ca in a.items():
            for (tb, sb, wb), cb in b.items():
                ti, si = ta + tb, sa + sb
                if ti > k or si > j:  # cannot reach t^k s^j anymore
                    continue
                key = (ti, si, wa + wb)
                value = ca * cb
                prev = out.get(key)
                out[key] = value if prev is None else prev + value
        return {key: c for key, c in out.items() if c}

    pairing = {}
    for n, value in _creation_pairings(u, config).items():
        pairing[(1, 0, n)] = value
    for n, value in _annihilation_pairings(v, config).items():
        pairing[(0, 1, -n)] = value

    total = {(0, 0, 0): ONE}
    power = {(0, 0, 0): ONE}
    for m in range(1, cutoffs.M + 1):
        power = ts_mul(power, pairing)
        if not power:
            break
        scale = Scalar(Fraction(1, factorial(m)))
        for key, value in power.items():
            scaled = value * scale
            prev = total.get(key)
            total[key] = scaled if prev is None else prev + scaled

    uv = u.inner(v)
    prefactor = {(0, 0, 0): ONE}
    if uv:
        term = ONE
        for i in range(1, min(cutoffs.M, k, j) + 1):
            term = term * uv * Scalar(Fraction(1, i))
            prefactor[(i, i, 0)] = term

    full = ts_mul(total, prefactor)
    value = full.get((k, j, w), ZERO)
    return value * Scalar(factorial(k) * factorial(j))
