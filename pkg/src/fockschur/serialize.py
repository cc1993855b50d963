"""JSON wire formats plus text and LaTeX rendering.

Rationals travel as strings like ``"3/5"`` (``"3"`` when the denominator
is 1); complex scalars as ``{"re": "...", "im": "..."}``, collapsing to the
bare rational string when the imaginary part vanishes.  All emitters build
dictionaries in a deterministic order so repeated runs are byte-identical.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import Cutoffs, TuplePair
from .expansion import LaurentSlice, SchurOperator, SchurTerm
from .fock import BasisConfig, FockVector, MultiIndex, OneParticleVector
from .scalar import Scalar

# -- scalars -----------------------------------------------------------------


def scalar_to_json(s: Scalar):
    if s.is_real():
        return str(s.re)
    return {"re": str(s.re), "im": str(s.im)}


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, Scalar):
        return obj
    if isinstance(obj, (int, str)):
        return Scalar(Fraction(obj))
    if isinstance(obj, dict):
        return Scalar(Fraction(obj.get("re", 0)), Fraction(obj.get("im", 0)))
    raise ValueError(f"cannot parse scalar from {obj!r}")


# -- multi-indices and vectors ------------------------------------------------


def multiindex_to_json(p: MultiIndex) -> dict:
    return {str(mode): exp for mode, exp in p.items()}


def multiindex_from_json(obj) -> MultiIndex:
    if not isinstance(obj, dict):
        raise ValueError(f"multi-index must be an object, got {obj!r}")
    return MultiIndex((int(mode), int(exp)) for mode, exp in obj.items())


def vector_to_json(v: OneParticleVector, modes: int) -> dict:
    return {
        "modes": modes,
        "entries": [[mode, scalar_to_json(value)] for mode, value in v.items()],
    }


def vector_from_json(obj):
    """Returns (vector, declared mode count or None)."""
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ValueError("vector JSON needs an 'entries' list")
    entries = []
    for item in obj["entries"]:
        mode, value = item
        entries.append((int(mode), scalar_from_json(value)))
    modes = obj.get("modes")
    return OneParticleVector(entries), None if modes is None else int(modes)


def basis_to_json(config: BasisConfig) -> dict:
    K = config.K
    return {
        "modes": K,
        "F": [[scalar_to_json(config.f(n).coeff(j)) for j in range(1, K + 1)]
              for n in range(1, K + 1)],
        "G": [[scalar_to_json(config.g(n).coeff(j)) for j in range(1, K + 1)]
              for n in range(1, K + 1)],
    }


def basis_from_json(obj) -> BasisConfig:
    if not isinstance(obj, dict) or "modes" not in obj:
        raise ValueError("basis JSON needs a 'modes' field")
    K = int(obj["modes"])

    def rows(name):
        matrix = obj.get(name)
        if matrix is None:
            return None
        return [[scalar_from_json(value) for value in row] for row in matrix]

    return BasisConfig(K, F=rows("F"), G=rows("G"))


# -- cutoffs, pairs, operators -------------------------------------------------


def cutoffs_to_json(c: Cutoffs) -> dict:
    return {"modes": c.K, "order": c.M, "degree": c.D}


def cutoffs_from_json(obj) -> Cutoffs:
    return Cutoffs(K=int(obj["modes"]), M=int(obj["order"]), D=int(obj["degree"]))


def pair_to_json(pair: TuplePair) -> dict:
    return {"p": multiindex_to_json(pair.p), "q": multiindex_to_json(pair.q)}


def pair_from_json(obj) -> TuplePair:
    return TuplePair(multiindex_from_json(obj["p"]), multiindex_from_json(obj["q"]))


def schur_operator_to_json(op: SchurOperator) -> dict:
    return {
        "w": op.w,
        "cutoffs": cutoffs_to_json(op.cutoffs),
        "terms": [
            {
                "p": multiindex_to_json(term.p),
                "q": multiindex_to_json(term.q),
                "coeff": scalar_to_json(term.coeff),
            }
            for term in op.terms
        ],
    }


def schur_operator_from_json(obj) -> SchurOperator:
    terms = tuple(
        SchurTerm(
            multiindex_from_json(t["p"]),
            multiindex_from_json(t["q"]),
            scalar_from_json(t["coeff"]),
        )
        for t in obj["terms"]
    )
    return SchurOperator(
        w=int(obj["w"]), cutoffs=cutoffs_from_json(obj["cutoffs"]), terms=terms
    )


def laurent_to_json(slice_: LaurentSlice) -> dict:
    return {
        "coeffs": {str(w): scalar_to_json(c) for w, c in slice_.items()},
        "cutoffs": cutoffs_to_json(slice_.cutoffs),
    }


def laurent_from_json(obj) -> LaurentSlice:
    coeffs = {int(w): scalar_from_json(c) for w, c in obj["coeffs"].items()}
    return LaurentSlice(coeffs, cutoffs_from_json(obj["cutoffs"]))


def polynomial_to_json(poly: FockVector, variable: str = "x") -> dict:
    return {
        "variable": variable,
        "terms": [
            {"exponents": multiindex_to_json(index), "coeff": scalar_to_json(coeff)}
            for index, coeff in poly.items()
        ],
    }


def polynomial_from_json(obj) -> FockVector:
    return FockVector(
        (multiindex_from_json(t["exponents"]), scalar_from_json(t["coeff"]))
        for t in obj["terms"]
    )


# -- text rendering -------------------------------------------------------------


def scalar_text(s: Scalar) -> str:
    return str(s)


def _coeff_prefix(coeff: Scalar) -> str:
    if coeff == Scalar(1):
        return ""
    return f"({coeff}) "


def monomial_text(index: MultiIndex, symbol: str, star: bool = False) -> str:
    parts = []
    for mode, exp in index.items():
        base = f"{symbol}_{mode}"
        if star:
            base += "*"
            if exp != 1:
                base = f"({base})^{exp}"
        elif exp != 1:
            base = f"{base}^{exp}"
        parts.append(base)
    return " ".join(parts)


def schur_term_text(term: SchurTerm) -> str:
    factors = []
    creation = monomial_text(term.p, "f")
    if creation:
        factors.append(creation)
    annihilation = monomial_text(term.q, "g", star=True)
    if annihilation:
        factors.append(annihilation)
    body = " ".join(factors) if factors else "1"
    return f"{_coeff_prefix(term.coeff)}{body}"


def schur_operator_text(op: SchurOperator) -> str:
    if not op.terms:
        return "0"
    return " + ".join(schur_term_text(term) for term in op.terms)


def polynomial_text(poly: FockVector, symbol: str = "x") -> str:
    if poly.is_zero():
        return "0"
    parts = []
    for index, coeff in poly.items():
        body = monomial_text(index, symbol) or "1"
        if body == "1":
            parts.append(str(coeff) if coeff.is_real() else f"({coeff})")
        else:
            parts.append(f"{_coeff_prefix(coeff)}{body}")
    return " + ".join(parts)


def laurent_text(slice_: LaurentSlice) -> str:
    if slice_.is_zero():
        return "0"
    parts = []
    for w, coeff in slice_.items():
        coeff_str = str(coeff) if coeff.is_real() else f"({coeff})"
        if w == 0:
            parts.append(coeff_str)
        else:
            z = "z" if w == 1 else f"z^{w}"
            parts.append(z if coeff == Scalar(1) else f"{coeff_str} {z}")
    return " + ".join(parts)


def pair_text(pair: TuplePair) -> str:
    def side(index):
        return "{" + ", ".join(f"{m}:{e}" for m, e in index.items()) + "}"

    return f"p={side(pair.p)} q={side(pair.q)}"


# -- LaTeX rendering --------------------------------------------------------------


def rational_latex(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def scalar_latex(s: Scalar) -> str:
    if s.is_real():
        return rational_latex(s.re)
    re = rational_latex(s.re)
    im = rational_latex(abs(s.im))
    sign = "+" if s.im > 0 else "-"
    if s.re == 0:
        return f"{'-' if s.im < 0 else ''}{im} i"
    return f"{re} {sign} {im} i"


def _coeff_latex_prefix(coeff: Scalar) -> str:
    if coeff == Scalar(1):
        return ""
    if coeff.is_real():
        return f"{rational_latex(coeff.re)} "
    return f"\\left({scalar_latex(coeff)}\\right) "


def monomial_latex(index: MultiIndex, symbol: str, star: bool = False) -> str:
    parts = []
    for mode, exp in index.items():
        base = f"{symbol}_{{{mode}}}"
        if star:
            base += "^{\\ast}"
            if exp != 1:
                base = f"\\left({base}\\right)^{{{exp}}}"
        elif exp != 1:
            base += f"^{{{exp}}}"
        parts.append(base)
    return " ".join(parts)


def schur_operator_latex(op: SchurOperator) -> str:
    if not op.terms:
        return "0"
    rendered = []
    for term in op.terms:
        factors = []
        creation = monomial_latex(term.p, "f")
        if creation:
            factors.append(creation)
        annihilation = monomial_latex(term.q, "g", star=True)
        if annihilation:
            factors.append(annihilation)
        body = " ".join(factors) if factors else "1"
        rendered.append(f"{_coeff_latex_prefix(term.coeff)}{body}")
    return " + ".join(rendered)


def polynomial_latex(poly: FockVector, symbol: str = "x") -> str:
    if poly.is_zero():
        return "0"
    parts = []
    for index, coeff in poly.items():
        body = monomial_latex(index, symbol)
        if not body:
            parts.append(scalar_latex(coeff))
        else:
            parts.append(f"{_coeff_latex_prefix(coeff)}{body}")
    return " + ".join(parts)


def laurent_latex(slice_: LaurentSlice) -> str:
    if slice_.is_zero():
        return "0"
    parts = []
    for w, coeff in slice_.items():
        if w == 0:
            parts.append(scalar_latex(coeff))
            continue
        z = "z" if w == 1 else f"z^{{{w}}}"
        prefix = _coeff_latex_prefix(coeff)
        parts.append(f"{prefix}{z}" if prefix else z)
    return " + ".join(parts)


def pair_latex(pair: TuplePair) -> str:
    left = monomial_latex(pair.p, "x") or "1"
    right = monomial_latex(pair.q, "x") or "1"
    return f"\\left({left},\\, {right}\\right)"
