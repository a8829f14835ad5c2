"""Regularity and geometric regularity of homogeneous ideals.

All reported values refer to the quotient ``S/I``.  Monomial inputs are
resolved directly (Eliahou-Kervaire when stable, otherwise the lcm lattice);
other ideals go through a generic initial ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .errors import CapExceededError, DepthZeroError, DimensionError
from .groebner import GinResult, gin
from .hilbert import (
    gotzmann_representation,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    macaulay_growth_bound,
)
from .monideal import (
    MonomialIdeal,
    betti_lcm,
    ek_betti,
    is_stable,
    lex_segment_ideal,
    quotient_regularity,
    regularity_from_betti,
    saturate,
)
from .ring import Ideal


@dataclass
class RegularityReport:
    reg: int
    g_reg: int
    route: str
    dim: int
    mult: Optional[int]
    embdim: int
    D: int
    gin_used: Optional[GinResult] = None
    upper_bound_only: bool = False
    warnings: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        out = {
            "reg": self.reg,
            "g_reg": self.g_reg,
            "route": self.route,
            "dim": self.dim,
            "mult": self.mult,
            "embdim": self.embdim,
            "D": self.D,
            "upper_bound_only": self.upper_bound_only,
        }
        if self.gin_used is not None:
            out["gin"] = self.gin_used.gin.to_str()
            out["gin_trials_used"] = self.gin_used.trials_used
        return out


def as_monomial_ideal(I: Ideal) -> MonomialIdeal:
    """The monomial ideal generated by an ideal whose generators are monomials."""
    if not I.is_monomial():
        raise ValueError("ideal is not generated by monomials")
    return MonomialIdeal(I.ring, [next(iter(g.terms)) for g in I.generators])


def _numerics(J: MonomialIdeal):
    series = hilbert_series(J)
    hf = hilbert_function(series, 2)
    mult = series.multiplicity if series.dim > 0 else series.length
    return series.dim, mult, hf.embdim


def monomial_regularity(J: MonomialIdeal) -> RegularityReport:
    if J.is_unit():
        route, reg = "stable-EK", -1
    elif is_stable(J):
        route, reg = "stable-EK", regularity_from_betti(ek_betti(J))
    else:
        route, reg = "lcm-lattice", regularity_from_betti(betti_lcm(J))
    g_reg = quotient_regularity(saturate(J))
    dim, mult, embdim = _numerics(J)
    return RegularityReport(reg, g_reg, route, dim, mult, embdim, J.max_degree())


def regularity(I: Ideal, seed: int = 0, trials: int = 3) -> RegularityReport:
    """Regularity report for ``S/I``."""
    if I.is_monomial():
        J = as_monomial_ideal(I)
        try:
            return monomial_regularity(J)
        except CapExceededError:
            pass  # too many generators for the lattice: use the gin route
    G = gin(I, seed=seed, trials=trials)
    J = G.gin
    dim, mult, embdim = _numerics(J)
    warnings = list(G.warnings)
    if G.borel_fixed:
        reg = J.max_degree() - 1 if not J.is_zero() else 0
        if J.is_unit():
            reg = -1
        return RegularityReport(reg, quotient_regularity(saturate(J)), "gin-pipeline",
                                dim, mult, embdim, J.max_degree(), G, False, warnings)
    # an initial ideal always bounds the regularity from above
    reg = regularity_from_betti(betti_lcm(J))
    warnings.append("UPPER-BOUND-ONLY")
    return RegularityReport(reg, quotient_regularity(saturate(J)), "gin-pipeline",
                            dim, mult, embdim, J.max_degree(), G, True, warnings)


def lex_ideal(J: MonomialIdeal) -> MonomialIdeal:
    """Lex-segment ideal with the same Hilbert function as ``S/J``."""
    series = hilbert_series(J)
    s = gotzmann_representation(hilbert_polynomial(series)).s
    # past both the agreement degree and the Gotzmann number growth is maximal
    top = max(len(series.reduced), s) + 1
    h = series.expand(top + 1)
    if h[top + 1] != macaulay_growth_bound(h[top], top):
        raise AssertionError("Hilbert function is not yet at maximal growth")
    return lex_segment_ideal(h[:top + 1], J.ring)


def _monomial_model(I: Ideal, seed: int, trials: int) -> MonomialIdeal:
    """A monomial ideal with the Hilbert function and saturation data of ``I``."""
    if I.is_monomial():
        return as_monomial_ideal(I)
    return gin(I, seed=seed, trials=trials).gin


def h0_dims(I: Ideal, upto: int, seed: int = 0, trials: int = 3) -> List[int]:
    """``dim H^0(S/I)_j`` for ``j = 0..upto``."""
    J = _monomial_model(I, seed, trials)
    return h0_dims_monomial(J, upto)


def h0_dims_monomial(J: MonomialIdeal, upto: int) -> List[int]:
    a = hilbert_function(J, upto).values
    b = hilbert_function(saturate(J), upto).values
    return [x - y for x, y in zip(a, b)]


def depth_positive(I: Ideal, seed: int = 0, trials: int = 3) -> bool:
    J = _monomial_model(I, seed, trials)
    return saturate(J) == J


@dataclass
class MumfordReport:
    reg: int
    m: int
    deficiency: Dict[int, int]
    h0_section: Dict[int, int]
    checks: Dict[str, bool]
    status: str

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def as_dict(self) -> dict:
        return {
            "reg": self.reg,
            "m": self.m,
            "deficiency": {str(k): v for k, v in self.deficiency.items()},
            "h0_section": {str(k): v for k, v in self.h0_section.items()},
            "checks": self.checks,
            "status": self.status,
        }


def check_mumford(I: Ideal, seed: int = 0, trials: int = 3, window: int = 4) -> MumfordReport:
    """Numerically verify the hyperplane-section identities for ``R = S/I``.

    With ``J = gin(I)`` in generic coordinates and ``z`` the last variable,
    ``R/zR`` has generic initial ideal ``J`` restricted to ``z = 0``.  Let ``m``
    be the geometric regularity of ``R/zR`` and ``delta(t) = p_R(t) - h_R(t)``.
    Checked:

    * ``b``: ``reg(R) <= m + delta(m)``;
    * ``a``: ``delta(m) = delta(s) + sum_{j=m+1..s} dim H^0(R/zR)_j`` for
      ``s = m+1 .. m+window``;
    * ``c``: ``delta(t)`` equals ``sum_{j>t} dim H^0(R/zR)_j`` for
      ``t = m-1 .. m+window``; the right side is ``dim H^1(R)_t`` obtained by
      telescoping the long exact sequence of ``0 -> R(-1) -> R -> R/zR -> 0``;
    * ``regular``: ``h_{R/zR}(t) = h_R(t) - h_R(t-1)`` (``z`` is a nonzerodivisor).

    A failure is reported as ``INCONCLUSIVE``: regularity of ``z`` is only
    certified through genericity.
    """
    # monomial inputs need not be in generic coordinates, so always pass to gin
    J = gin(I, seed=seed, trials=trials).gin
    series = hilbert_series(J)
    if series.dim < 2:
        raise DimensionError(f"need dim >= 2, got {series.dim}")
    if saturate(J) != J:
        raise DepthZeroError("S/I has depth zero (H^0 is nonzero)")
    reg = quotient_regularity(J)
    Jbar = J.restrict_last()
    sat_bar = saturate(Jbar)
    m = quotient_regularity(sat_bar)
    reg_bar = quotient_regularity(Jbar)
    top = max(reg, m, reg_bar) + window + 4
    hf = hilbert_function(series, top)
    p = hilbert_polynomial(series)
    hbar = hilbert_function(Jbar, top).values
    hsat = hilbert_function(sat_bar, top).values
    h0 = {j: hbar[j] - hsat[j] for j in range(top + 1)}

    def delta(t):
        return int(p(t) - (hf[t] if t >= 0 else 0))

    deficiency = {t: delta(t) for t in range(m - 1, m + window + 1)}
    checks = {}
    checks["regular"] = all(hbar[t] == hf[t] - (hf[t - 1] if t else 0) for t in range(top + 1))
    checks["b"] = reg <= m + delta(m)
    checks["a"] = all(
        delta(m) == delta(s) + sum(h0[j] for j in range(m + 1, s + 1))
        for s in range(m + 1, m + window + 1))
    checks["c"] = all(
        delta(t) == sum(h0[j] for j in range(max(t + 1, 0), top + 1))
        for t in range(m - 1, m + window + 1))
    status = "verified" if all(checks.values()) else "INCONCLUSIVE"
    return MumfordReport(reg, m, deficiency,
                         {j: h0[j] for j in range(max(m - 1, 0), m + window + 1)},
                         checks, status)
