"""Finite census of Hilbert functions with bounded regularity and embedding dimension.

Every algebra with ``embdim <= r`` and ``reg <= m`` shares its Hilbert
function with ``S/gin(I)``, a Borel-fixed ideal generated in degrees
``<= m + 1``.  Enumerating those ideals degree by degree gives the census.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Set, Tuple

from .errors import CapExceededError
from .hilbert import hilbert_function, hilbert_series, satisfies_macaulay
from .monideal import (
    MonomialIdeal,
    betti_lcm,
    default_ring,
    quotient_regularity,
    regularity_from_betti,
)
from .ring import Field, Monomial, monomials_of_degree

DEFAULT_IDEAL_CAP = 200_000
ORACLE_LIMIT = (2, 2)


def _eval(coeffs, n) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


@dataclass(frozen=True)
class HFSignature:
    """Hilbert function determined by ``h(0..m+1)`` plus the Hilbert polynomial."""

    prefix: Tuple[int, ...]
    poly: Tuple[Fraction, ...]

    @property
    def key(self):
        return (self.prefix, self.poly)

    def value(self, n: int) -> int:
        if n < len(self.prefix):
            return self.prefix[n]
        return int(_eval(self.poly, n))

    def values(self, n_max: int) -> List[int]:
        return [self.value(n) for n in range(n_max + 1)]

    def as_row(self) -> dict:
        return {
            "prefix": list(self.prefix),
            "polynomial": [str(c) for c in self.poly],
        }


def signature(J: MonomialIdeal, m: int) -> HFSignature:
    series = hilbert_series(J)
    hf = hilbert_function(series, m + 1)
    return HFSignature(tuple(hf.values), tuple(hf.polynomial.coefficients))


def _up_moves(u: Monomial):
    # adjacent Borel moves x_{i-1} * u / x_i; they generate all moves toward larger variables
    out = []
    for i in range(1, len(u)):
        if u[i]:
            v = list(u)
            v[i] -= 1
            v[i - 1] += 1
            out.append(tuple(v))
    return out


def _borel_closed_supersets(mons: List[Monomial], forced: Set[Monomial]) -> Iterator[frozenset]:
    """All Borel-closed subsets of ``mons`` (one degree) that contain ``forced``."""
    # lex-descending order: every up-move of a monomial comes earlier
    order = sorted(mons, reverse=True)

    def rec(k: int, chosen: Set[Monomial]):
        if k == len(order):
            yield frozenset(chosen)
            return
        u = order[k]
        allowed = all(v in chosen for v in _up_moves(u))
        if u in forced:
            if not allowed:
                return
            chosen.add(u)
            yield from rec(k + 1, chosen)
            chosen.discard(u)
            return
        yield from rec(k + 1, chosen)
        if allowed:
            chosen.add(u)
            yield from rec(k + 1, chosen)
            chosen.discard(u)

    yield from rec(0, set())


def _shift(segment, r: int) -> Set[Monomial]:
    return {tuple(a + (k == i) for k, a in enumerate(u)) for u in segment for i in range(r)}


def enumerate_borel_ideals(r: int, d_max: int, cap: int = DEFAULT_IDEAL_CAP,
                           field: Optional[Field] = None) -> List[MonomialIdeal]:
    """All Borel-fixed ideals of ``k[x_1..x_r]`` generated in degrees ``1..d_max``."""
    if r < 1 or d_max < 1:
        raise ValueError("need r >= 1 and d_max >= 1")
    ring = default_ring(r, field)
    out: List[MonomialIdeal] = []

    def rec(t: int, prev: frozenset, gens: List[Monomial]):
        if t > d_max:
            if len(out) >= cap:
                raise CapExceededError(
                    f"more than {cap} Borel-fixed ideals", partial_count=len(out))
            out.append(MonomialIdeal(ring, gens))
            return
        forced = _shift(prev, r)
        for W in _borel_closed_supersets(monomials_of_degree(r, t), forced):
            rec(t + 1, W, gens + sorted(W - forced))

    rec(1, frozenset(), [])
    return out


def enumerate_hilbert_functions(r: int, m: int, cap: int = DEFAULT_IDEAL_CAP) -> Set[HFSignature]:
    """Hilbert functions of algebras with ``embdim <= r`` and ``reg <= m``."""
    census = set()
    for J in enumerate_borel_ideals(r, m + 1, cap):
        if quotient_regularity(J) <= m:
            census.add(signature(J, m))
    return census


def all_monomial_ideals(r: int, d_max: int, cap: int = DEFAULT_IDEAL_CAP) -> List[MonomialIdeal]:
    """Every monomial ideal (as a set) generated in degrees ``1..d_max``."""
    ring = default_ring(r)
    pool = [u for t in range(1, d_max + 1) for u in monomials_of_degree(r, t)]
    found = {MonomialIdeal(ring, [])}

    # grow antichains so each ideal is produced from its own minimal generators
    def rec(start: int, gens: List[Monomial]):
        for k in range(start, len(pool)):
            u = pool[k]
            if any(all(a <= b for a, b in zip(g, u)) or all(b <= a for a, b in zip(g, u))
                   for g in gens):
                continue
            new = gens + [u]
            found.add(MonomialIdeal(ring, new))
            if len(found) > cap:
                raise CapExceededError(f"more than {cap} monomial ideals",
                                       partial_count=len(found))
            rec(k + 1, new)

    rec(0, [])
    return sorted(found, key=lambda J: (len(J.gens), J.gens))


def brute_force_hf_oracle(r: int, m: int, cap: int = DEFAULT_IDEAL_CAP) -> Set[HFSignature]:
    """Census by exhaustive search over all monomial ideals, lcm-lattice regularity."""
    if r > ORACLE_LIMIT[0] or m > ORACLE_LIMIT[1]:
        raise CapExceededError(
            f"oracle is limited to r <= {ORACLE_LIMIT[0]}, m <= {ORACLE_LIMIT[1]}",
            partial_count=0)
    census = set()
    for J in all_monomial_ideals(r, m + 1, cap):
        reg = regularity_from_betti(betti_lcm(J)) if not J.is_zero() else 0
        if reg <= m:
            census.add(signature(J, m))
    return census


def census_rows(census) -> List[dict]:
    return [s.as_row() for s in sorted(census, key=lambda s: s.key)]


def check_census_member(sig: HFSignature, r: int, m: int, horizon: int = 8) -> bool:
    """Embedding dimension, Macaulay growth and polynomial agreement past ``m``."""
    vals = sig.values(m + 1 + horizon)
    if len(vals) > 1 and vals[1] > r:
        return False
    if not satisfies_macaulay(vals):
        return False
    return all(_eval(sig.poly, n) == vals[n] for n in range(m + 1, len(vals)))


__all__ = [
    "HFSignature",
    "signature",
    "enumerate_borel_ideals",
    "enumerate_hilbert_functions",
    "all_monomial_ideals",
    "brute_force_hf_oracle",
    "census_rows",
    "check_census_member",
]
