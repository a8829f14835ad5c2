"""Shared builders and independent oracles for the test suite."""

import random

import pytest

from hilbreg import Ideal, MonomialIdeal, PolyRing, Polynomial, parse_ideal
from hilbreg.monideal import default_ring, is_stable, matrix_rank
from hilbreg.ring import monomials_of_degree


def ideal(text, char=None):
    return parse_ideal(text, char).ideal


def random_monomial_ideal(rng, nvars, ngens=(1, 4), deg=(1, 4)):
    ring = default_ring(nvars)
    gens = []
    for _ in range(rng.randint(*ngens)):
        d = rng.randint(*deg)
        gens.append(rng.choice(monomials_of_degree(nvars, d)))
    return MonomialIdeal(ring, gens)


def random_stable_ideal(rng, nvars, ngens=(1, 4), deg=(1, 4)):
    """Close random monomials under the stable moves x_j * u / x_max(u)."""
    ring = default_ring(nvars)
    seeds = [rng.choice(monomials_of_degree(nvars, rng.randint(*deg)))
             for _ in range(rng.randint(*ngens))]
    J = MonomialIdeal(ring, seeds)
    while not is_stable(J):
        extra = []
        for u in J.gens:
            m = max(i for i, a in enumerate(u) if a)
            for j in range(m):
                v = list(u)
                v[m] -= 1
                v[j] += 1
                extra.append(tuple(v))
        J = MonomialIdeal(ring, list(J.gens) + extra)
    return J


def random_homogeneous_ideal(rng, ring, ngens=(1, 3), deg=(1, 3), terms=(1, 3), coeff=3):
    gens = []
    for _ in range(rng.randint(*ngens)):
        d = rng.randint(*deg)
        mons = monomials_of_degree(ring.nvars, d)
        k = min(rng.randint(*terms), len(mons))
        items = [(rng.choice([c for c in range(-coeff, coeff + 1) if c]), u)
                 for u in rng.sample(mons, k)]
        f = Polynomial.from_terms(ring, items)
        if not f.is_zero():
            gens.append(f)
    if not gens:
        gens = [ring.gen(0)]
    return Ideal(ring, gens)


def macaulay_matrix_hf(I, n_max):
    """``h_{S/I}(t) = dim S_t - rank`` of the span of ``u * g`` in degree ``t``."""
    ring = I.ring
    r = ring.nvars
    out = []
    for t in range(n_max + 1):
        basis = monomials_of_degree(r, t)
        index = {u: k for k, u in enumerate(basis)}
        rows = []
        for g in I.generators:
            dg = g.degree()
            if dg > t:
                continue
            for u in monomials_of_degree(r, t - dg):
                row = [0] * len(basis)
                for v, c in g.terms.items():
                    row[index[tuple(a + b for a, b in zip(u, v))]] = c
                rows.append(row)
        rank = matrix_rank(rows, ring.field.characteristic) if rows else 0
        out.append(len(basis) - rank)
    return out


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def xyz():
    return PolyRing(["x", "y", "z"])
