"""Buchberger's algorithm, initial ideals and generic initial ideals."""

from __future__ import annotations

import heapq
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .errors import GinDisagreementError, ResourceError, RingMismatchError
from .monideal import MonomialIdeal, is_borel_fixed
from .ring import (
    Ideal,
    Monomial,
    Polynomial,
    determinant,
    divides,
    mdiv,
    mlcm,
    order_key,
    substitute,
    linear_images,
)

DEFAULT_PAIR_CAP = 200_000
RANDOM_RANGE = 1000


@dataclass
class GroebnerBasis:
    elements: List[Polynomial]
    order: str
    reduced: bool = True

    @property
    def ring(self):
        return self.elements[0].ring if self.elements else None

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]


def _lm(p: Dict[Monomial, object], key) -> Monomial:
    return max(p, key=key)


def _sub_multiple(p: dict, c, m: Monomial, g: dict, F):
    """In place: ``p -= c * x^m * g``."""
    for v, b in g.items():
        w = tuple(x + y for x, y in zip(m, v))
        s = F.reduce(p.get(w, F.zero) - c * b)
        if s:
            p[w] = s
        else:
            del p[w]


def _reduce(p: dict, basis, key, F, full: bool = True) -> dict:
    """Remainder of ``p`` modulo monic ``basis = [(lm, dict), ...]``."""
    p = dict(p)
    rem: dict = {}
    while p:
        u = _lm(p, key)
        c = p[u]
        for lm, g in basis:
            if divides(lm, u):
                _sub_multiple(p, c, mdiv(u, lm), g, F)
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[u] = c
            del p[u]
    return rem


def _monic(p: dict, key, F):
    lc = p[_lm(p, key)]
    inv = F.inv(lc)
    return {u: F.reduce(c * inv) for u, c in p.items()}


def _spoly(f, g, key, F):
    lf, lg = f[0], g[0]
    L = mlcm(lf, lg)
    s = {}
    mf, mg = mdiv(L, lf), mdiv(L, lg)
    for v, b in f[1].items():
        s[tuple(x + y for x, y in zip(mf, v))] = b
    _sub_multiple(s, F.one, mg, g[1], F)
    return s


def _interreduce(basis, key, F):
    basis = sorted(basis, key=lambda t: key(t[0]))
    minimal = []
    for lm, g in basis:
        if not any(divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, g))
    out = []
    for k, (lm, g) in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = {u: c for u, c in g.items() if u != lm}
        tail = _reduce(tail, others, key, F)
        tail[lm] = g[lm]
        out.append((lm, _monic(tail, key, F)))
    return out


def buchberger(I: Ideal, order: str = "degrevlex", max_pairs: int = DEFAULT_PAIR_CAP) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal.

    Uses the normal selection strategy (smallest lcm degree first) with the
    Gebauer-Moeller form of the product and chain criteria.
    """
    ring = I.ring
    F = ring.field
    key = order_key(order)
    G: List[tuple] = []
    pairs: set = set()
    heap: list = []
    seq = 0

    for g in I.generators:
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
        heapq.heappush(heap, (g.degree(), seq, "gen", dict(g.terms)))
        seq += 1

    def update(h_lm):
        nonlocal seq
        k = len(G) - 1
        lcms = {i: mlcm(G[i][0], h_lm) for i in range(k)}
        # old pairs made redundant by the new leading monomial
        for pr in list(pairs):
            i, j = pr
            L = mlcm(G[i][0], G[j][0])
            if divides(h_lm, L) and lcms[i] != L and lcms[j] != L:
                pairs.discard(pr)
        # chain criterion among the new pairs
        cand = sorted(range(k), key=lambda i: key(lcms[i]))
        kept: Dict[Monomial, list] = {}
        for i in cand:
            L = lcms[i]
            if any(divides(L2, L) and L2 != L for L2 in kept):
                continue
            kept.setdefault(L, []).append(i)
        for L, idx in kept.items():
            if any(mlcm(G[i][0], h_lm) == tuple(a + b for a, b in zip(G[i][0], h_lm))
                   for i in idx):
                continue  # coprime leading terms: S-pair reduces to zero
            i = idx[0]
            pairs.add((i, k))
            heapq.heappush(heap, (sum(L), seq, "pair", (i, k)))
            seq += 1

    processed = 0
    while heap:
        _, _, kind, data = heapq.heappop(heap)
        if kind == "pair":
            if data not in pairs:
                continue
            pairs.discard(data)
            processed += 1
            if processed > max_pairs:
                raise ResourceError(f"Buchberger pair cap {max_pairs} exceeded")
            i, j = data
            p = _spoly(G[i], G[j], key, F)
        else:
            p = data
        if not p:
            continue
        h = _reduce(p, G, key, F)
        if not h:
            continue
        h = _monic(h, key, F)
        G.append((_lm(h, key), h))
        update(G[-1][0])

    reduced = _interreduce(G, key, F)
    reduced.sort(key=lambda t: key(t[0]), reverse=True)
    return GroebnerBasis([Polynomial(ring, g) for _, g in reduced], order, True)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``G``; zero iff ``f`` lies in the ideal."""
    if G.elements and G.ring != f.ring:
        raise RingMismatchError("polynomial and basis live in different rings")
    key = order_key(G.order)
    basis = [(g.leading_monomial(G.order), g.terms) for g in G.elements]
    F = f.ring.field
    basis = [(lm, _monic(g, key, F)) for lm, g in basis]
    return Polynomial(f.ring, _reduce(f.terms, basis, key, F))


def is_groebner_basis(G: GroebnerBasis) -> bool:
    """Check that every S-polynomial reduces to zero."""
    if not G.elements:
        return True
    key = order_key(G.order)
    F = G.ring.field
    basis = [(g.leading_monomial(G.order), _monic(g.terms, key, F)) for g in G.elements]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            s = _spoly(basis[a], basis[b], key, F)
            if s and _reduce(s, basis, key, F):
                return False
    return True


def initial_ideal(G: GroebnerBasis, ring=None) -> MonomialIdeal:
    ring = ring or G.ring
    return MonomialIdeal(ring, G.leading_monomials())


def initial_ideal_of(I: Ideal, order: str = "degrevlex") -> MonomialIdeal:
    if not I.generators:
        return MonomialIdeal(I.ring, [])
    return initial_ideal(buchberger(I, order), I.ring)


# ---------------------------------------------------------------------------
# generic initial ideals

@dataclass
class GinResult:
    gin: MonomialIdeal
    trials_used: int
    seed: int
    borel_fixed: bool
    max_gen_degree: int
    warnings: List[str] = field(default_factory=list)


def random_invertible_matrix(ring, rng: random.Random, bound: int = RANDOM_RANGE):
    F = ring.field
    r = ring.nvars
    p = F.characteristic
    while True:
        if p:
            M = [[rng.randrange(p) for _ in range(r)] for _ in range(r)]
        else:
            M = [[rng.randint(-bound, bound) for _ in range(r)] for _ in range(r)]
        if determinant(M, F):
            return M


def transformed_ideal(I: Ideal, matrix) -> Ideal:
    images = linear_images(I.ring, matrix)
    return Ideal(I.ring, [substitute(g, images) for g in I.generators])


def gin(I: Ideal, seed: int = 0, trials: int = 3, order: str = "degrevlex") -> GinResult:
    """Generic initial ideal (degrevlex) by agreement of random coordinate changes.

    Trials run until two of them produce the same initial ideal.  Over a
    prime field genericity is only probabilistic; a result that fails the
    characteristic-0 Borel test is returned with a ``NOT-BOREL`` warning.
    """
    if order != "degrevlex":
        raise ValueError("gin is only defined here for degrevlex")
    if trials < 2:
        raise ValueError("gin needs at least two trials")
    rng = random.Random(seed)
    seen: Counter = Counter()
    agreed: Optional[MonomialIdeal] = None
    used = 0
    for _ in range(trials):
        used += 1
        M = random_invertible_matrix(I.ring, rng)
        J = initial_ideal_of(transformed_ideal(I, M), order)
        seen[J] += 1
        if seen[J] >= 2:
            agreed = J
            break
    if agreed is None:
        raise GinDisagreementError(
            f"no two of {trials} random coordinate changes agreed "
            f"({len(seen)} distinct initial ideals)")
    borel = is_borel_fixed(agreed, "borel-char0")
    warnings = [] if borel else ["NOT-BOREL"]
    return GinResult(agreed, used, seed, borel, agreed.max_degree(), warnings)
