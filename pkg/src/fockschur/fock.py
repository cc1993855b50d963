"""Exact sparse model of a finitely generated bosonic mode algebra.

Vectors live in the commutative algebra generated by reference modes
e_1, e_2, ... over Gaussian-rational scalars.  A monomial is a multi-index
of mode exponents, the vacuum phi is the empty monomial, multiplication
adds exponents, and the inner product is fixed on reference monomials by

    <e^p, e^q> = delta_{p,q} * p!

extended antilinearly in the FIRST argument and linearly in the second.
Annihilation ``x*`` is the adjoint of multiplication by the one-particle
vector ``x``; it is antilinear in ``x`` and acts as a derivation.

Everything is exact: no floats, no tolerances.  All values are immutable
after construction and all operations are pure, so concurrent evaluation
needs no coordination.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .scalar import ONE, ZERO, Scalar


def _as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    raise TypeError(f"cannot use {value!r} as a scalar coefficient")


class MultiIndex:
    """Immutable finitely supported map mode -> exponent.

    Modes are integers >= 1.  Zero exponents are never stored, so the
    vacuum monomial is the empty index.  Instances are hashable and are
    ordered by their entry list, which fixes every enumeration order in
    the package.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        if isinstance(entries, dict):
            entries = entries.items()
        acc = {}
        for mode, exp in entries:
            mode = int(mode)
            exp = int(exp)
            if mode < 1:
                raise ValueError(f"mode must be >= 1, got {mode}")
            if exp < 0:
                raise ValueError(f"exponent must be >= 0, got {exp}")
            acc[mode] = acc.get(mode, 0) + exp
        self._entries = tuple(sorted((m, e) for m, e in acc.items() if e > 0))

    @classmethod
    def single(cls, mode: int, exp: int = 1) -> "MultiIndex":
        return cls(((mode, exp),))

    @property
    def entries(self):
        return self._entries

    def items(self):
        return self._entries

    def get(self, mode: int, default: int = 0) -> int:
        for m, e in self._entries:
            if m == mode:
                return e
        return default

    def degree(self) -> int:
        return sum(e for _, e in self._entries)

    def weight(self) -> int:
        return sum(m * e for m, e in self._entries)

    def max_mode(self) -> int:
        return self._entries[-1][0] if self._entries else 0

    def factorial(self) -> int:
        out = 1
        for _, e in self._entries:
            out *= factorial(e)
        return out

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        if not isinstance(other, MultiIndex):
            return NotImplemented
        return MultiIndex(self._entries + other._entries)

    def minus_one(self, mode: int) -> "MultiIndex":
        """Decrement the exponent at ``mode`` by one."""
        out = []
        seen = False
        for m, e in self._entries:
            if m == mode:
                seen = True
                if e > 1:
                    out.append((m, e - 1))
            else:
                out.append((m, e))
        if not seen:
            raise ValueError(f"mode {mode} not present in {self!r}")
        return MultiIndex(tuple(out))

    def __iter__(self):
        return iter(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        return isinstance(other, MultiIndex) and self._entries == other._entries

    def __lt__(self, other):
        return self._entries < other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return f"MultiIndex({dict(self._entries)!r})"


VACUUM_INDEX = MultiIndex()


def multiindex_factorial(p: MultiIndex) -> Scalar:
    """Product of the entry factorials, 1 for the empty index."""
    return Scalar(p.factorial())


class OneParticleVector:
    """Exact coordinate vector over the reference modes e_1..e_K."""

    __slots__ = ("_coords",)

    def __init__(self, coords=()):
        if isinstance(coords, dict):
            coords = coords.items()
        acc = {}
        for mode, value in coords:
            mode = int(mode)
            if mode < 1:
                raise ValueError(f"mode must be >= 1, got {mode}")
            value = _as_scalar(value)
            prev = acc.get(mode)
            acc[mode] = value if prev is None else prev + value
        self._coords = {m: v for m, v in acc.items() if v}

    @classmethod
    def zero(cls) -> "OneParticleVector":
        return cls()

    @classmethod
    def basis(cls, mode: int) -> "OneParticleVector":
        return cls(((mode, ONE),))

    @classmethod
    def from_list(cls, values) -> "OneParticleVector":
        """Dense 1-based coordinates, e.g. ``from_list([1, 0, 2])``."""
        return cls((i + 1, v) for i, v in enumerate(values))

    def items(self):
        return sorted(self._coords.items())

    def coeff(self, mode: int) -> Scalar:
        return self._coords.get(mode, ZERO)

    def max_mode(self) -> int:
        return max(self._coords) if self._coords else 0

    def is_zero(self) -> bool:
        return not self._coords

    def inner(self, other: "OneParticleVector") -> Scalar:
        """<self, other>, antilinear in ``self``."""
        total = ZERO
        small, big, conj_small = (
            (self._coords, other._coords, True)
            if len(self._coords) <= len(other._coords)
            else (other._coords, self._coords, False)
        )
        for mode, value in small.items():
            mate = big.get(mode)
            if mate is None:
                continue
            if conj_small:
                total = total + value.conjugate() * mate
            else:
                total = total + mate.conjugate() * value
        return total

    def to_fock(self) -> "FockVector":
        return FockVector(
            (MultiIndex.single(mode), value) for mode, value in self._coords.items()
        )

    def __add__(self, other):
        if not isinstance(other, OneParticleVector):
            return NotImplemented
        return OneParticleVector(
            list(self._coords.items()) + list(other._coords.items())
        )

    def __sub__(self, other):
        if not isinstance(other, OneParticleVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return OneParticleVector((m, -v) for m, v in self._coords.items())

    def __mul__(self, other):
        scale = other if isinstance(other, Scalar) else None
        if scale is None:
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            scale = Scalar(other)
        return OneParticleVector((m, v * scale) for m, v in self._coords.items())

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, OneParticleVector) and self._coords == other._coords

    def __repr__(self):
        return f"OneParticleVector({dict(sorted(self._coords.items()))!r})"


class FockVector:
    """Sparse Scalar-linear combination of reference monomials.

    The zero vector stores nothing; coefficients equal to zero are pruned
    eagerly so equality is plain dictionary equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        acc = {}
        for index, coeff in terms:
            if not isinstance(index, MultiIndex):
                index = MultiIndex(index)
            coeff = _as_scalar(coeff)
            prev = acc.get(index)
            acc[index] = coeff if prev is None else prev + coeff
        self._terms = {i: c for i, c in acc.items() if c}

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    @classmethod
    def vacuum(cls, coeff=ONE) -> "FockVector":
        return cls(((VACUUM_INDEX, coeff),))

    @classmethod
    def monomial(cls, index: MultiIndex, coeff=ONE) -> "FockVector":
        return cls(((index, coeff),))

    def items(self):
        """Terms sorted by (degree, entries); deterministic output order."""
        return sorted(self._terms.items(), key=lambda t: (t[0].degree(), t[0].entries))

    def coeff(self, index: MultiIndex) -> Scalar:
        return self._terms.get(index, ZERO)

    def degree(self) -> int:
        """Largest monomial degree; 0 for the zero and vacuum vectors."""
        return max((i.degree() for i in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def truncate(self, max_degree: int) -> "FockVector":
        return FockVector(
            (i, c) for i, c in self._terms.items() if i.degree() <= max_degree
        )

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return FockVector(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return FockVector((i, -c) for i, c in self._terms.items())

    def __mul__(self, other):
        if isinstance(other, FockVector):
            out = {}
            for ia, ca in self._terms.items():
                for ib, cb in other._terms.items():
                    key = ia + ib
                    prod = ca * cb
                    prev = out.get(key)
                    out[key] = prod if prev is None else prev + prod
            return FockVector(out)
        scale = other if isinstance(other, Scalar) else None
        if scale is None:
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            scale = Scalar(other)
        return FockVector((i, c * scale) for i, c in self._terms.items())

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("FockVector powers need an integer exponent >= 0")
        out = FockVector.vacuum()
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, FockVector) and self._terms == other._terms

    def __repr__(self):
        body = ", ".join(f"{i!r}: {c}" for i, c in self.items())
        return f"FockVector({{{body}}})"


class BasisConfig:
    """Mode count K plus two exactly-unitary K x K matrices.

    Row n of ``F`` gives the creation-side system vector f_n in reference
    coordinates, row n of ``G`` the annihilation-side vector g_n.  Both row
    systems must be exactly orthonormal; the default is the reference basis
    itself (F = G = identity).
    """

    __slots__ = ("K", "_f_rows", "_g_rows")

    def __init__(self, K: int, F=None, G=None):
        if K < 1:
            raise ValueError(f"mode count must be >= 1, got {K}")
        self.K = K
        self._f_rows = self._build_rows(F, "F")
        self._g_rows = self._build_rows(G, "G")

    def _build_rows(self, matrix, name):
        if matrix is None:
            return tuple(OneParticleVector.basis(n) for n in range(1, self.K + 1))
        rows = []
        for row in matrix:
            if isinstance(row, OneParticleVector):
                rows.append(row)
            else:
                row = list(row)
                if len(row) != self.K:
                    raise ValueError(
                        f"matrix {name} rows must have {self.K} entries, got {len(row)}"
                    )
                rows.append(OneParticleVector((j + 1, v) for j, v in enumerate(row)))
        if len(rows) != self.K:
            raise ValueError(f"matrix {name} must have {self.K} rows, got {len(rows)}")
        for a in range(self.K):
            for b in range(a, self.K):
                expected = ONE if a == b else ZERO
                if rows[a].inner(rows[b]) != expected:
                    raise ValueError(
                        f"matrix {name} is not exactly orthonormal: "
                        f"rows {a + 1} and {b + 1} fail <row_a, row_b> = "
                        f"{'1' if a == b else '0'}"
                    )
        return tuple(rows)

    @classmethod
    def identity(cls, K: int) -> "BasisConfig":
        return cls(K)

    def f(self, n: int) -> OneParticleVector:
        self._check_mode(n)
        return self._f_rows[n - 1]

    def g(self, n: int) -> OneParticleVector:
        self._check_mode(n)
        return self._g_rows[n - 1]

    def _check_mode(self, n: int):
        if not 1 <= n <= self.K:
            raise ValueError(f"mode {n} out of range 1..{self.K}")

    def check_vector(self, v: OneParticleVector, label: str = "vector"):
        """Reject coordinates beyond the K-mode cutoff, naming the mode."""
        if v.max_mode() > self.K:
            raise ValueError(
                f"{label} uses mode {v.max_mode()} outside the {self.K}-mode basis"
            )

    def is_identity(self) -> bool:
        ref = tuple(OneParticleVector.basis(n) for n in range(1, self.K + 1))
        return self._f_rows == ref and self._g_rows == ref

    def __eq__(self, other):
        return (
            isinstance(other, BasisConfig)
            and self.K == other.K
            and self._f_rows == other._f_rows
            and self._g_rows == other._g_rows
        )

    def __repr__(self):
        return f"BasisConfig(K={self.K}, identity={self.is_identity()})"


# -- operations ------------------------------------------------------------


def fock_mul(a: FockVector, b: FockVector) -> FockVector:
    """Commutative algebra product; exponent maps add on monomials."""
    return a * b


def inner(a: FockVector, b: FockVector) -> Scalar:
    """Sesquilinear pairing, antilinear in the first argument.

    On reference monomials <e^p, e^q> = delta_{p,q} * p!, so only shared
    monomials contribute.
    """
    ta, tb = a._terms, b._terms
    if len(tb) < len(ta):
        total = ZERO
        for index, cb in tb.items():
            ca = ta.get(index)
            if ca is not None:
                total = total + ca.conjugate() * cb * Scalar(index.factorial())
        return total
    total = ZERO
    for index, ca in ta.items():
        cb = tb.get(index)
        if cb is not None:
            total = total + ca.conjugate() * cb * Scalar(index.factorial())
    return total


def annihilate(x: OneParticleVector, a: FockVector) -> FockVector:
    """Apply ``x*``, the adjoint of multiplication by ``x``.

    Antilinear in ``x``; on a monomial it acts as the derivation
    e^p -> sum_k conj(x_k) * p_k * e^(p - delta_k), and it kills the vacuum.
    """
    out = {}
    for index, coeff in a._terms.items():
        for mode, exp in index.items():
            xk = x.coeff(mode)
            if not xk:
                continue
            target = index.minus_one(mode)
            value = xk.conjugate() * Scalar(exp) * coeff
            prev = out.get(target)
            out[target] = value if prev is None else prev + value
    return FockVector(out)


def coherent(u: OneParticleVector, max_degree: int) -> FockVector:
    """Exponential series of ``u`` truncated at total degree ``max_degree``."""
    if max_degree < 0:
        raise ValueError(f"degree cutoff must be >= 0, got {max_degree}")
    out = FockVector.vacuum()
    term = FockVector.vacuum()
    u_fock = u.to_fock()
    for n in range(1, max_degree + 1):
        term = term * u_fock * Scalar(Fraction(1, n))
        if term.is_zero():
            break
        out = out + term
    return out


def power_annihilate_coherent(
    x: OneParticleVector, n: int, w: OneParticleVector, max_degree: int
) -> FockVector:
    """Apply ``(x^n)*`` to the truncated coherent vector of ``w``.

    Equals <x,w>^n * coherent(w, max_degree - n) exactly: each annihilation
    drops the top remaining degree.  Returns zero when max_degree < n.
    """
    if n < 0:
        raise ValueError(f"power must be >= 0, got {n}")
    out = coherent(w, max_degree)
    for _ in range(n):
        if out.is_zero():
            break
        out = annihilate(x, out)
    return out


def exp_annihilate(w: OneParticleVector, a: FockVector) -> FockVector:
    """Apply the exponential of the annihilator of ``w`` to ``a``.

    The sum sum_i (w*)^i a / i! is finite because each application lowers
    the degree; no truncation is involved.
    """
    out = a
    current = a
    for i in range(1, a.degree() + 1):
        current = annihilate(w, current)
        if current.is_zero():
            break
        out = out + current * Scalar(Fraction(1, factorial(i)))
    return out


def check_multiplicability(
    u: OneParticleVector, f: FockVector, g: FockVector, max_degree: int
) -> bool:
    """Whether <e^u, fg> = <e^u, f><e^u, g> at the given truncation.

    Exact only when deg(f) + deg(g) <= max_degree, so smaller cutoffs are
    rejected instead of producing a meaningless comparison.
    """
    if f.degree() + g.degree() > max_degree:
        raise ValueError(
            "degree cutoff too small for the product pairing: "
            f"deg(f) + deg(g) = {f.degree() + g.degree()} > {max_degree}"
        )
    e_u = coherent(u, max_degree)
    return inner(e_u, f * g) == inner(e_u, f) * inner(e_u, g)
