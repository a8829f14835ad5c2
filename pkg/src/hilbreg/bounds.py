"""Closed-form regularity bounds and the numerical inequalities behind them.

Every check here is a predicate over supplied data; nothing computes
cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .hilbert import HilbertFunction, iterated_hf
from .ring import binomial
from .unipoly import UniPoly, binom_poly


@dataclass(frozen=True)
class BoundPolynomial:
    family: str
    index: int
    poly: UniPoly

    def __call__(self, x) -> Fraction:
        return self.poly(x)

    def value(self, x: int) -> int:
        v = self.poly(x)
        if v.denominator != 1:
            raise ValueError(f"{self.family}_{self.index}({x}) is not an integer")
        return int(v)

    @property
    def coefficients(self):
        return list(self.poly.coeffs)


@lru_cache(maxsize=None)
def _F(p: int) -> UniPoly:
    X = UniPoly.X()
    if p == 1:
        return X
    prev = _F(p - 1)
    return prev + X * binom_poly(prev + (p - 1), p - 1)


@lru_cache(maxsize=None)
def _Q(d: int) -> UniPoly:
    X = UniPoly.X()
    if d == 1:
        return X - 1
    prev = _Q(d - 1)
    return prev + X * binom_poly(prev + (d - 2), d - 1) + binom_poly(prev + (d - 2), d - 2)


def bound_polynomial(family: str, index: int) -> BoundPolynomial:
    """``F_p`` (graded, positive depth) or ``Q_d`` (Cohen-Macaulay tangent cones)."""
    if index < 1:
        raise ValueError("index must be at least 1")
    if family == "F":
        return BoundPolynomial("F", index, _F(index))
    if family == "Q":
        return BoundPolynomial("Q", index, _Q(index))
    raise ValueError(f"unknown bound family {family!r}; expected 'F' or 'Q'")


def kleiman_bounds(d: int, e: int):
    """``(F_d(e-1), e*d)``: regularity and embedding dimension caps for
    reduced equidimensional algebras of dimension ``d`` and multiplicity ``e``."""
    if d < 1 or e < 1:
        raise ValueError("need d >= 1 and e >= 1")
    return bound_polynomial("F", d).value(e - 1), e * d


def h1_bound_check(h1_dims: Sequence[int], t: int, d: int) -> bool:
    """``dim H^1(R)_j <= t * C(j+d-1, d-1)`` for every supplied ``j``."""
    return all(v <= t * binomial(j + d - 1, d - 1) for j, v in enumerate(h1_dims))


def parameter_hf_bound(h, d: int, colength: int) -> bool:
    """``h(n) <= l * C(n+d-2, d-1) + C(n+d-2, d-2)`` for tabulated ``n >= 1``."""
    if d < 1 or colength < 1:
        raise ValueError("need d >= 1 and colength >= 1")
    values = h.values if isinstance(h, HilbertFunction) else list(h)
    return all(values[n] <= colength * binomial(n + d - 2, d - 1) + binomial(n + d - 2, d - 2)
               for n in range(1, len(values)))


def local_mumford_bound(h_bar, m: int) -> int:
    """``m + h^1(m)`` where ``h^1`` is the iterated Hilbert function of the section."""
    h1 = iterated_hf(h_bar)
    if m < 0 or m >= len(h1):
        raise IndexError(f"m = {m} is outside the tabulated range")
    return m + h1[m]


def cm_tangent_cone_bound(d: int, e: int) -> int:
    if d < 1 or e < 1:
        raise ValueError("need d >= 1 and e >= 1")
    return bound_polynomial("Q", d).value(e)


def abhyankar_bound(d: int, e: int) -> int:
    """Embedding dimension cap ``e + d - 1`` for Cohen-Macaulay local rings."""
    if d < 1 or e < 1:
        raise ValueError("need d >= 1 and e >= 1")
    return e + d - 1


def all_bounds(d: int, e: int) -> dict:
    """Every closed-form bound at dimension ``d`` and multiplicity ``e``."""
    reg_cap, embdim_cap = kleiman_bounds(d, e)
    return {
        "F_d(e-1)": reg_cap,
        "embdim<=ed": embdim_cap,
        "F_d(e)": bound_polynomial("F", d).value(e),
        "Q_d(e)": cm_tangent_cone_bound(d, e),
        "abhyankar": abhyankar_bound(d, e),
        "gotzmann_1dim": e - 1,
    }
