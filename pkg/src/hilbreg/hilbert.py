"""Hilbert series, functions and polynomials of monomial quotients.

Also hosts the Macaulay and Gotzmann binomial calculus.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import NotHilbertPolynomialError
from .monideal import MonomialIdeal, _minimal
from .ring import Monomial, binomial, monomials_of_degree
from .unipoly import UniPoly, binom_poly

GOTZMANN_STEP_CAP = 10_000


# ---------------------------------------------------------------------------
# integer polynomials in t as coefficient lists (index = power of t)

def _tadd(a: List[int], b: List[int]) -> List[int]:
    n = max(len(a), len(b))
    return [(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)]


def _tmul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(a: List[int]) -> List[int]:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a or [0]


def _kpoly(gens: List[Monomial]) -> List[int]:
    """Numerator of the Hilbert series of ``S/J`` over ``(1-t)^r``."""
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    used = [False] * len(gens[0])
    coprime = True
    for g in gens:
        for i, a in enumerate(g):
            if a:
                if used[i]:
                    coprime = False
                    break
                used[i] = True
        if not coprime:
            break
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _tmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    counts = Counter(i for g in gens for i, a in enumerate(g) if a)
    var = max(sorted(counts), key=lambda i: counts[i])
    # smallest positive exponent of var among generators that are not pure powers of it
    a = min(g[var] for g in gens if g[var] and sum(g) != g[var])
    pivot = tuple(a if i == var else 0 for i in range(len(gens[0])))
    left = _minimal(list(gens) + [pivot])
    right = _minimal([tuple(max(e - p, 0) for e, p in zip(g, pivot)) for g in gens])
    return _tadd(_kpoly(left), [0] * a + _kpoly(right))


@dataclass
class HilbertSeries:
    """``numerator / (1-t)^nvars``, plus the reduced form ``reduced / (1-t)^dim``."""

    numerator: List[int]
    nvars: int
    reduced: List[int]
    dim: int

    @property
    def is_zero_ring(self) -> bool:
        return self.reduced == [0]

    @property
    def dimension_zero(self) -> bool:
        return self.dim == 0

    @property
    def multiplicity(self) -> Optional[int]:
        """``N(1)`` for positive dimension; ``None`` in dimension 0 (see ``length``)."""
        if self.dim <= 0:
            return None
        return sum(self.reduced)

    @property
    def length(self) -> Optional[int]:
        """Total length ``sum h`` of an Artinian quotient."""
        return sum(self.reduced) if self.dim == 0 else None

    def expand(self, n_max: int) -> List[int]:
        """Power-series coefficients ``h(0..n_max)``."""
        coeffs = (self.reduced + [0] * (n_max + 1))[:n_max + 1]
        for _ in range(max(self.dim, 0)):
            acc = 0
            for k in range(n_max + 1):
                acc += coeffs[k]
                coeffs[k] = acc
        return coeffs


def hilbert_series(J: MonomialIdeal) -> HilbertSeries:
    num = _trim(_kpoly(list(J.gens)))
    r = J.nvars
    if num == [0]:
        return HilbertSeries(num, r, [0], -1)
    reduced, d = list(num), r
    while d > 0 and sum(reduced) == 0:
        # synthetic division by (1 - t)
        q, acc = [], 0
        for c in reduced[:-1]:
            acc += c
            q.append(acc)
        reduced, d = _trim(q), d - 1
    return HilbertSeries(num, r, reduced, d)


@dataclass
class HilbertPolynomial:
    poly: UniPoly
    dim: int

    def __call__(self, n):
        return self.poly(n)

    @property
    def coefficients(self) -> List[Fraction]:
        return list(self.poly.coeffs)

    def is_integer_valued(self) -> bool:
        return self.poly.is_integer_valued(range(max(self.dim, 0) + 1))


def hilbert_polynomial(series: HilbertSeries) -> HilbertPolynomial:
    d = series.dim
    if d <= 0:
        return HilbertPolynomial(UniPoly(), d)
    X = UniPoly.X()
    p = UniPoly()
    for j, c in enumerate(series.reduced):
        if c:
            p = p + binom_poly(X - j + d - 1, d - 1) * c
    return HilbertPolynomial(p, d)


@dataclass
class HilbertFunction:
    values: List[int]
    polynomial: Optional[HilbertPolynomial] = None

    def __getitem__(self, n: int) -> int:
        return self.values[n] if n >= 0 else 0

    def __len__(self):
        return len(self.values)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    @property
    def embdim(self) -> int:
        return self.values[1] if len(self.values) > 1 else 0

    @property
    def agreement_index(self) -> Optional[int]:
        """Least ``n0`` with ``h(n) = p(n)`` for every tabulated ``n >= n0``."""
        if self.polynomial is None:
            return None
        n0 = len(self.values)
        for n in range(len(self.values) - 1, -1, -1):
            if self.polynomial(n) != self.values[n]:
                break
            n0 = n
        return n0


def default_n_max(series: HilbertSeries) -> int:
    est = len(series.reduced) - 1
    return max(2 * est + 4, 12)


def hilbert_function(J_or_series, n_max: Optional[int] = None) -> HilbertFunction:
    series = J_or_series if isinstance(J_or_series, HilbertSeries) else hilbert_series(J_or_series)
    if n_max is None:
        n_max = default_n_max(series)
    return HilbertFunction(series.expand(n_max), hilbert_polynomial(series))


def count_standard_monomials(J: MonomialIdeal, n_max: int) -> List[int]:
    """Brute-force ``h_{S/J}(0..n_max)`` by enumerating monomials."""
    return [sum(1 for u in monomials_of_degree(J.nvars, t) if not J.contains(u))
            for t in range(n_max + 1)]


def iterated_hf(h) -> HilbertFunction:
    values = h.values if isinstance(h, HilbertFunction) else list(h)
    out, acc = [], 0
    for v in values:
        acc += v
        out.append(acc)
    return HilbertFunction(out)


def deficiency(h: HilbertFunction, p: HilbertPolynomial, n: int) -> int:
    """``p(n) - h(n)``.

    Equals ``dim H^1(R)_n`` only for a positive-depth algebra in the degree
    range where the hyperplane-section argument applies; the caller decides.
    """
    if n > h.n_max:
        raise IndexError(f"degree {n} is outside the tabulated range 0..{h.n_max}")
    val = p(n) - h[n]
    if val.denominator != 1:
        raise ValueError("Hilbert polynomial is not integer valued")
    return int(val)


# ---------------------------------------------------------------------------
# Gotzmann and Macaulay

@dataclass
class GotzmannRep:
    exponents: Tuple[int, ...]
    dim: int = 0

    @property
    def s(self) -> int:
        return len(self.exponents)

    @property
    def bound(self) -> int:
        return self.s - 1

    def evaluate(self, n: int) -> Fraction:
        return self.as_polynomial()(n)

    def as_polynomial(self) -> UniPoly:
        X = UniPoly.X()
        out = UniPoly()
        for i, a in enumerate(self.exponents):
            out = out + binom_poly(X + a - i, a)
        return out


def gotzmann_representation(p) -> GotzmannRep:
    """Greedy Gotzmann expansion ``p(n) = sum_i C(n + a_i - (i-1), a_i)``."""
    poly = p.poly if isinstance(p, HilbertPolynomial) else UniPoly._lift(p)
    dim = poly.degree() + 1
    X = UniPoly.X()
    rest = poly
    exps: List[int] = []
    while not rest.is_zero():
        if len(exps) >= GOTZMANN_STEP_CAP:
            raise NotHilbertPolynomialError("Gotzmann step cap reached")
        a = rest.degree()
        if rest.leading_coefficient() < 0:
            raise NotHilbertPolynomialError(
                f"remainder {rest.to_str('n')} has negative leading coefficient")
        if exps and a > exps[-1]:
            raise NotHilbertPolynomialError("Gotzmann exponents are not non-increasing")
        rest = rest - binom_poly(X + a - len(exps), a)
        exps.append(a)
    rep = GotzmannRep(tuple(exps), dim)
    rebuilt = rep.as_polynomial()
    if any(rebuilt(n) != poly(n) for n in range(rep.s + dim + 1)):
        raise NotHilbertPolynomialError("Gotzmann expansion does not reproduce the polynomial")
    return rep


def macaulay_representation(h: int, t: int) -> List[Tuple[int, int]]:
    """Greedy ``h = C(k_t, t) + C(k_{t-1}, t-1) + ...`` as ``[(k, j), ...]``."""
    if t < 1:
        raise ValueError("degree must be at least 1")
    out = []
    j = t
    while h > 0 and j > 0:
        k = j
        while binomial(k + 1, j) <= h:
            k += 1
        out.append((k, j))
        h -= binomial(k, j)
        j -= 1
    return out


def macaulay_growth_bound(h: int, t: int) -> int:
    """Macaulay's upper bound on ``h(t+1)`` given ``h(t)``."""
    return sum(binomial(k + 1, j + 1) for k, j in macaulay_representation(h, t))


def satisfies_macaulay(values: Sequence[int]) -> bool:
    return all(values[t + 1] <= macaulay_growth_bound(values[t], t)
               for t in range(1, len(values) - 1))
