"""Explicit spherical vectors of Fourier-Jacobi type for the trivial central
character: admissibility of the rank-one component, exact coefficient
tables, and evaluation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .solutions import HCParameter, ParameterError, _require_large, blattner
from .specialfns import pochhammer


@dataclass(frozen=True)
class SL2Label:
    """Discrete series label of SL(2,R): sign '+' is lowest weight n, '-' highest weight -n."""
    sign: str
    weight: int

    def __post_init__(self):
        if self.sign not in ("+", "-"):
            raise ParameterError("sign must be '+' or '-'")
        if self.weight <= 1:
            raise ParameterError("weight must exceed 1")


@dataclass(frozen=True)
class FJSpherical:
    hc: HCParameter
    label: SL2Label
    power: int
    terms: tuple  # (coeff: Fraction, sl2_weight: int, ktype_index: int)


def fj_nonvanishing(p: HCParameter, pi1: SL2Label) -> bool:
    """True exactly for the two admissible rank-one labels of the parameter type."""
    _require_large(p)
    want_sign = "+" if p.xi_type == "II" else "-"
    return pi1.sign == want_sign and pi1.weight in (p.l1 + 1, -p.l2 + 1)


def fj_function(p: HCParameter, pi1: SL2Label) -> FJSpherical:
    """The explicit spherical vector, exact coefficients.

    One branch is a single term; the other is an alternating sum with
    rising-factorial coefficients over 0 <= i <= floor(|l1+l2|/2) (the
    absolute value makes the bound meaningful in both chambers; ledgered).
    """
    if not fj_nonvanishing(p, pi1):
        raise ParameterError(f"no nonzero spherical vector for {pi1} at {p.pair}")
    l1, l2 = p.l1, p.l2
    d = blattner(p).d
    top = abs(l1 + l2) // 2
    if p.xi_type == "II":
        if pi1.weight == l1 + 1:
            return FJSpherical(p, pi1, -l2 + 2, ((Fraction(1), l1 + 1, d),))
        terms = []
        for i in range(top + 1):
            c = Fraction(-1) ** i * pochhammer(-l2 + 1, i) / math.factorial(i)
            terms.append((c, -l2 + 2 * i + 1, -2 * l2 + 2 * i + 1))
        return FJSpherical(p, pi1, l1 + 2, tuple(terms))
    if pi1.weight == -l2 + 1:
        return FJSpherical(p, pi1, l1 + 2, ((Fraction(1), l2 - 1, 0),))
    terms = []
    for i in range(top + 1):
        c = Fraction(-1) ** i * pochhammer(l1 + 1, i) / math.factorial(i)
        terms.append((c, -l1 - 2 * i - 1, -l1 - l2 - 2 * i))
    return FJSpherical(p, pi1, -l2 + 2, tuple(terms))


def fj_evaluate(f: FJSpherical, a: float) -> list[tuple[int, int, float]]:
    """Numeric rendering: (sl2_weight, ktype_index, coeff * a^power) per term."""
    if a <= 0:
        raise ParameterError("a must be positive")
    scale = a ** f.power
    return [(w, k, float(c) * scale) for c, w, k in f.terms]


def fj_index_bounds_ok(f: FJSpherical) -> bool:
    """All carried dual K-type indices lie in [0, d]."""
    d = blattner(f.hc).d
    return all(0 <= k <= d for _, _, k in f.terms)


def fj_weight_parities(f: FJSpherical) -> set[int]:
    return {w % 2 for _, w, _ in f.terms}
