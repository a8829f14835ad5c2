"""Monomial ideals: minimal generators, saturation, lex segments and Betti numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import CapExceededError, MacaulayViolationError, NotStableError
from .ring import (
    Field,
    Monomial,
    PolyRing,
    Polynomial,
    binomial,
    divides,
    format_monomial,
    max_index,
    mlcm,
    monomials_of_degree,
)

LCM_GENERATOR_CAP = 15


def default_ring(nvars: int, field: Field = None) -> PolyRing:
    names = "xyzwuv"
    if nvars <= len(names):
        variables = list(names[:nvars])
    else:
        variables = [f"x{i + 1}" for i in range(nvars)]
    return PolyRing(variables, field or Field(0))


def _minimal(gens: Iterable[Monomial]) -> List[Monomial]:
    out: List[Monomial] = []
    for u in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(divides(v, u) for v in out):
            out.append(u)
    return out


def _canonical(gens):
    # degree ascending, lex descending within a degree
    return tuple(sorted(gens, key=lambda m: (sum(m), tuple(-a for a in m))))


class MonomialIdeal:
    """A monomial ideal stored by its minimal generators."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: PolyRing, gens: Iterable[Monomial] = ()):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != ring.nvars or any(a < 0 for a in g):
                raise ValueError(f"bad exponent vector {g} for {ring}")
        self.ring = ring
        self.gens = _canonical(_minimal(gens))

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.gens == other.gens

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        return f"MonomialIdeal({self.to_str()})"

    def to_str(self) -> str:
        if not self.gens:
            return "0"
        return ", ".join(format_monomial(g, self.ring.variables) for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def contains(self, u: Monomial) -> bool:
        return any(divides(g, u) for g in self.gens)

    def max_degree(self) -> int:
        """Largest degree of a minimal generator (0 for the zero ideal)."""
        return max((sum(g) for g in self.gens), default=0)

    def generators_of_degree(self, d: int):
        return [g for g in self.gens if sum(g) == d]

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, [mlcm(u, v) for u in self.gens for v in other.gens])

    def colon_monomial(self, p: Monomial) -> "MonomialIdeal":
        return MonomialIdeal(
            self.ring, [tuple(max(a - b, 0) for a, b in zip(g, p)) for g in self.gens])

    def colon_variable_power(self, i: int) -> "MonomialIdeal":
        """``J : x_i^oo`` (zero out the ``x_i`` exponent of each generator)."""
        return MonomialIdeal(
            self.ring, [g[:i] + (0,) + g[i + 1:] for g in self.gens])

    def restrict_last(self) -> "MonomialIdeal":
        """Image in ``k[x_1..x_{r-1}]`` after setting the last variable to 0."""
        if self.nvars < 2:
            raise ValueError("cannot drop the only variable")
        ring = PolyRing(self.ring.variables[:-1], self.ring.field)
        return MonomialIdeal(ring, [g[:-1] for g in self.gens if g[-1] == 0])

    def degree_part(self, d: int):
        """Monomials of degree ``d`` lying in the ideal."""
        return [u for u in monomials_of_degree(self.nvars, d) if self.contains(u)]

    def polynomials(self) -> List[Polynomial]:
        return [self.ring.monomial(g) for g in self.gens]


def minimalize(gens: Iterable[Monomial], ring: PolyRing) -> MonomialIdeal:
    return MonomialIdeal(ring, gens)


def saturate(J: MonomialIdeal) -> MonomialIdeal:
    """``J : m^oo`` computed as the intersection of the ``J : x_i^oo``."""
    if J.is_zero():
        return J
    result = J.colon_variable_power(0)
    for i in range(1, J.nvars):
        result = result.intersect(J.colon_variable_power(i))
    return result


def is_borel_fixed(J: MonomialIdeal, mode: str = "borel-char0") -> bool:
    """Strong stability (``borel-char0``) or stability (``stable``) test."""
    if mode not in ("borel-char0", "stable"):
        raise ValueError(f"unknown mode {mode!r}")
    for u in J.gens:
        if mode == "stable":
            idx = [max_index(u)] if sum(u) else []
        else:
            idx = [i for i, a in enumerate(u) if a]
        for i in idx:
            for j in range(i):
                v = list(u)
                v[i] -= 1
                v[j] += 1
                if not J.contains(tuple(v)):
                    return False
    return True


def is_stable(J: MonomialIdeal) -> bool:
    return is_borel_fixed(J, "stable")


# ---------------------------------------------------------------------------
# lex segments

def lex_segment_ideal(h: Sequence[int], ring: PolyRing) -> MonomialIdeal:
    """Lex-segment ideal whose quotient has Hilbert function ``h`` up to ``len(h)-1``.

    Degrees beyond the table are generated by the last segment, so pass a
    table long enough for the lex ideal to be fully generated.
    """
    if not h or h[0] != 1:
        raise MacaulayViolationError("h(0) must be 1 for a quotient algebra")
    r = ring.nvars
    gens: List[Monomial] = []
    prev: set = set()
    for t in range(1, len(h)):
        mons = monomials_of_degree(r, t)
        size = len(mons) - h[t]
        if h[t] < 0 or size < 0:
            raise MacaulayViolationError(
                f"h({t}) = {h[t]} is outside [0, {len(mons)}] = [0, dim S_{t}]")
        segment = set(mons[:size])
        shifted = {tuple(a + (k == i) for k, a in enumerate(u))
                   for u in prev for i in range(r)}
        if not shifted <= segment:
            raise MacaulayViolationError(
                f"h({t}) = {h[t]} exceeds the maximal growth from h({t - 1}) = {h[t - 1]}")
        gens.extend(segment - shifted)
        prev = segment
    return MonomialIdeal(ring, gens)


# ---------------------------------------------------------------------------
# Betti numbers

@dataclass
class BettiTable:
    """Graded Betti numbers ``beta[i, j]`` of a monomial ideal (not its quotient)."""

    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def add(self, i: int, j: int, n: int = 1):
        if n:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + n

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def nonzero(self) -> Dict[Tuple[int, int], int]:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def shifts(self) -> Dict[int, int]:
        """``b_i``: the largest internal degree in homological degree ``i``."""
        out: Dict[int, int] = {}
        for (i, j), n in self.entries.items():
            if n:
                out[i] = max(out.get(i, j), j)
        return dict(sorted(out.items()))

    def projective_dimension(self) -> int:
        return max((i for (i, _), n in self.entries.items() if n), default=-1)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def as_rows(self):
        return [[i, j, n] for (i, j), n in self.nonzero().items()]


def ek_betti(J: MonomialIdeal) -> BettiTable:
    """Eliahou-Kervaire Betti numbers of a stable ideal."""
    if not is_stable(J):
        raise NotStableError(f"ideal ({J.to_str()}) is not stable")
    B = BettiTable()
    for u in J.gens:
        d = sum(u)
        if d == 0:
            B.add(0, 0)
            continue
        top = max_index(u) + 1  # 1-based index of the smallest variable in u
        for i in range(top):
            B.add(i, i + d, binomial(top - 1, i))
    return B


def lcm_lattice(gens: Sequence[Monomial]) -> set:
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                c = mlcm(a, g)
                if c not in lattice:
                    new.add(c)
        lattice |= new
        frontier = new
    return lattice


def matrix_rank(rows, characteristic: int = 0) -> int:
    """Rank of an integer matrix over QQ or GF(p)."""
    p = characteristic
    if p:
        M = [[x % p for x in row] for row in rows]
    else:
        M = [[Fraction(x) for x in row] for row in rows]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        inv = pow(pr[col], -1, p) if p else 1 / pr[col]
        for r in range(rank + 1, len(M)):
            f = M[r][col]
            if f:
                f = f * inv
                if p:
                    M[r] = [(a - f * b) % p for a, b in zip(M[r], pr)]
                else:
                    M[r] = [a - f * b for a, b in zip(M[r], pr)]
        rank += 1
        if rank == len(M):
            break
    return rank


def reduced_homology(faces_by_dim: Dict[int, list], characteristic: int = 0) -> Dict[int, int]:
    """Reduced Betti numbers of a simplicial complex.

    ``faces_by_dim[k]`` lists the faces of dimension ``k`` (sorted tuples of
    vertices); the empty face is ``faces_by_dim[-1] == [()]``.
    """
    if not faces_by_dim.get(-1):
        return {}
    top = max(faces_by_dim)
    index = {k: {f: n for n, f in enumerate(fs)} for k, fs in faces_by_dim.items()}
    ranks = {}
    for k in range(0, top + 1):
        rows = []
        lower = index[k - 1]
        for face in faces_by_dim[k]:
            row = [0] * len(lower)
            for pos in range(len(face)):
                row[lower[face[:pos] + face[pos + 1:]]] = (-1) ** pos
            rows.append(row)
        ranks[k] = matrix_rank(rows, characteristic)
    out = {}
    for k in range(-1, top + 1):
        dim = len(faces_by_dim[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if dim:
            out[k] = dim
    return out


def upper_koszul_complex(J: MonomialIdeal, b: Monomial) -> Dict[int, list]:
    support = [i for i, a in enumerate(b) if a]
    faces: Dict[int, list] = {}
    for size in range(len(support) + 1):
        found = []
        for sigma in combinations(support, size):
            v = list(b)
            for i in sigma:
                v[i] -= 1
            if J.contains(tuple(v)):
                found.append(sigma)
        if not found:
            break
        faces[size - 1] = found
    return faces


def betti_lcm(J: MonomialIdeal, cap: int = LCM_GENERATOR_CAP) -> BettiTable:
    """Betti numbers from the homology of upper Koszul complexes on the lcm lattice."""
    if len(J.gens) > cap:
        raise CapExceededError(
            f"{len(J.gens)} generators exceed the lcm-lattice cap of {cap}",
            partial_count=0)
    B = BettiTable()
    p = J.ring.field.characteristic
    for b in sorted(lcm_lattice(J.gens)):
        for k, n in reduced_homology(upper_koszul_complex(J, b), p).items():
            B.add(k + 1, sum(b), n)
    return B


def regularity_from_betti(B: BettiTable, as_quotient: bool = True) -> int:
    """``max(j - i)`` over nonzero Betti numbers; minus one for ``S/J``.

    The zero ideal has an empty table; its quotient ``S`` has regularity 0.
    """
    nz = B.nonzero()
    if not nz:
        if as_quotient:
            return 0
        raise ValueError("the zero ideal has no Betti numbers")
    reg = max(j - i for (i, j) in nz)
    return reg - 1 if as_quotient else reg


def betti_numbers(J: MonomialIdeal) -> Tuple[BettiTable, str]:
    """Betti table by the fastest applicable route, and the route's name."""
    if is_stable(J):
        return ek_betti(J), "stable-EK"
    return betti_lcm(J), "lcm-lattice"


def quotient_regularity(J: MonomialIdeal) -> int:
    """``reg(S/J)``; the unit ideal gives -1 (regularity of the zero module)."""
    if J.is_unit():
        return -1
    B, _ = betti_numbers(J)
    return regularity_from_betti(B, as_quotient=True)
