"""Exact coefficient fields, monomials, term orders and polynomials.

Monomials are plain tuples of nonnegative exponents (dense, one entry per
variable).  Variables are ordered as listed: ``x_1 > x_2 > ... > x_r``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Sequence, Tuple

from .errors import RingMismatchError, SingularMatrixError

Monomial = Tuple[int, ...]

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """The rationals (``characteristic == 0``) or a prime field GF(p).

    Rational elements are :class:`fractions.Fraction`; prime-field elements
    are ints in ``range(p)``.
    """

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")
        object.__setattr__(self, "characteristic", characteristic)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    def __call__(self, value):
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, p)) % p
        return int(value) % p

    def reduce(self, value):
        """Normalize the result of a native ``+ - *`` on two elements."""
        p = self.characteristic
        return value % p if p else value

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return pow(a, -1, p) if p else 1 / a

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


class PolyRing:
    """``k[x_1, ..., x_r]`` with variables ordered as given (first is largest)."""

    def __init__(self, variables: Sequence[str], field: Field = QQ):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"variable names must be unique: {variables}")
        self.variables = variables
        self.field = field

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"PolyRing({','.join(self.variables)}; {self.field!r})"

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field.one})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def monomial(self, exps: Iterable[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise RingMismatchError("exponent vector length does not match the ring")
        c = self.field(coeff)
        return Polynomial(self, {exps: c} if c else {})

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.variables, field)


# ---------------------------------------------------------------------------
# monomial helpers

def mdeg(u: Monomial) -> int:
    return sum(u)


def mmul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mdiv(u: Monomial, v: Monomial) -> Monomial:
    """``u / v``; caller guarantees ``v | u``."""
    return tuple(a - b for a, b in zip(u, v))


def divides(v: Monomial, u: Monomial) -> bool:
    return all(a <= b for a, b in zip(v, u))


def mlcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(u, v))


def mgcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a < b else b for a, b in zip(u, v))


def max_index(u: Monomial) -> int:
    """0-based index of the smallest variable dividing ``u`` (-1 for 1)."""
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i
    return -1


def monomials_of_degree(nvars: int, d: int):
    """All exponent vectors of total degree ``d``, in lex-descending order."""
    if nvars == 1:
        return [(d,)] if d >= 0 else []
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            out.append((a,) + rest)
    return out


def format_monomial(u: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# term orders

TERM_ORDERS = ("degrevlex", "lex")


@lru_cache(maxsize=None)
def _degrevlex_key(u: Monomial):
    return (sum(u), tuple(-a for a in reversed(u)))


def _lex_key(u: Monomial):
    return u


def order_key(order: str):
    """Sort key: larger key means larger monomial."""
    if order == "degrevlex":
        return _degrevlex_key
    if order == "lex":
        return _lex_key
    raise ValueError(f"unknown term order {order!r}; expected one of {TERM_ORDERS}")


def cmp_monomials(u: Monomial, v: Monomial, order: str = "degrevlex") -> int:
    """Return 1 if ``u > v``, -1 if ``u < v`` and 0 if equal."""
    if len(u) != len(v):
        raise RingMismatchError("monomials have different numbers of variables")
    if u == v:
        return 0
    diff = [a - b for a, b in zip(u, v)]
    if order == "lex":
        first = next(x for x in diff if x)
        return 1 if first > 0 else -1
    if order == "degrevlex":
        du, dv = sum(u), sum(v)
        if du != dv:
            return 1 if du > dv else -1
        last = next(x for x in reversed(diff) if x)
        return 1 if last < 0 else -1
    raise ValueError(f"unknown term order {order!r}")


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Sparse polynomial: a dict ``{monomial: nonzero coefficient}``.

    Treated as immutable; all operations return new objects.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, object]):
        self.ring = ring
        self.terms = terms

    @classmethod
    def from_terms(cls, ring: PolyRing, items) -> "Polynomial":
        """Build from ``(coeff, monomial)`` pairs, merging and dropping zeros."""
        F = ring.field
        acc: Dict[Monomial, object] = {}
        for c, u in items:
            u = tuple(u)
            if len(u) != ring.nvars:
                raise RingMismatchError("exponent vector length does not match the ring")
            acc[u] = F.reduce(acc.get(u, F.zero) + F(c))
        return cls(ring, {u: c for u, c in acc.items() if c})

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial) or other.ring != self.ring:
            raise RingMismatchError("polynomials belong to different rings")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for u, c in other.terms.items():
            s = F.reduce(out.get(u, F.zero) + c)
            if s:
                out[u] = s
            else:
                out.pop(u, None)
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        F = self.ring.field
        return Polynomial(self.ring, {u: F.reduce(-c) for u, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        F = self.ring.field
        out: Dict[Monomial, object] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = tuple(x + y for x, y in zip(u, v))
                out[w] = F.reduce(out.get(w, F.zero) + a * b)
        return Polynomial(self.ring, {u: c for u, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {u: F.reduce(a * c) for u, a in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sorted_terms(self, order: str = "degrevlex"):
        """``[(coeff, monomial), ...]`` strictly descending in ``order``."""
        key = order_key(order)
        return [(self.terms[u], u) for u in sorted(self.terms, key=key, reverse=True)]

    def leading_monomial(self, order: str = "degrevlex") -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order_key(order))

    def degree(self) -> int:
        return max((sum(u) for u in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(u) for u in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monic(self, order: str = "degrevlex") -> "Polynomial":
        lc = self.terms[self.leading_monomial(order)]
        return self.scale(self.ring.field.inv(lc))

    def to_str(self, order: str = "degrevlex") -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables
        out = []
        for c, u in self.sorted_terms(order):
            c = _signed(c, self.ring.field)
            neg = c < 0
            mag = -c if neg else c
            mono = format_monomial(u, names)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append("-" + body if neg else body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


def _signed(c, field: Field):
    """Symmetric representative for printing prime-field elements."""
    p = field.characteristic
    if p and c > p // 2:
        return c - p
    return c


# ---------------------------------------------------------------------------
# ideals and linear changes of coordinates

class Ideal:
    """Homogeneous ideal given by a list of nonzero homogeneous generators."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator is not in the ideal's ring")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            gens.append(g)
        self.ring = ring
        self.generators = gens

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"


def binomial(a: int, k: int) -> int:
    """``C(a, k)`` with ``C(a, k) = 0`` whenever ``k < 0`` or ``a < k``."""
    if k < 0 or a < k:
        return 0
    if a >= 0:
        return math.comb(a, k)
    # a < k and a negative can only reach here when k < 0, handled above
    return 0


def _rank_and_det(matrix, field: Field):
    rows = [[field(x) for x in row] for row in matrix]
    n = len(rows)
    det = field.one
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = field.reduce(-det)
        p = rows[col][col]
        det = field.reduce(det * p)
        inv = field.inv(p)
        for r in range(col + 1, n):
            f = rows[r][col]
            if f:
                f = field.reduce(f * inv)
                rows[r] = [field.reduce(a - f * b) for a, b in zip(rows[r], rows[col])]
    return det


def determinant(matrix, field: Field = QQ):
    return _rank_and_det(matrix, field)


def linear_images(ring: PolyRing, matrix) -> list:
    """Images of the variables under ``x_i -> sum_j M[i][j] x_j``."""
    r = ring.nvars
    if len(matrix) != r or any(len(row) != r for row in matrix):
        raise RingMismatchError("matrix size must match the number of variables")
    if not determinant(matrix, ring.field):
        raise SingularMatrixError("coordinate change matrix is singular")
    images = []
    for i in range(r):
        items = []
        for j in range(r):
            e = [0] * r
            e[j] = 1
            items.append((matrix[i][j], tuple(e)))
        images.append(Polynomial.from_terms(ring, items))
    return images


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Evaluate ``f`` at the given images of the variables."""
    ring = f.ring
    F = ring.field
    power_cache: Dict[Tuple[int, int], Polynomial] = {}

    def power(i, e):
        key = (i, e)
        if key not in power_cache:
            power_cache[key] = images[i] ** e
        return power_cache[key]

    acc: Dict[Monomial, object] = {}
    for u, c in f.terms.items():
        term = ring.one()
        for i, e in enumerate(u):
            if e:
                term = term * power(i, e)
        for v, b in term.terms.items():
            acc[v] = F.reduce(acc.get(v, F.zero) + b * c)
    return Polynomial(ring, {u: c for u, c in acc.items() if c})


def apply_linear_change(f: Polynomial, matrix) -> Polynomial:
    """Substitute ``x_i -> sum_j M[i][j] x_j`` into ``f`` (``M`` invertible)."""
    return substitute(f, linear_images(f.ring, matrix))
