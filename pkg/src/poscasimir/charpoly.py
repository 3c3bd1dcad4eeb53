"""
Characters as Laurent polynomials and the characteristic polynomials ``P(x)``.

With ``k_i = exp(2 pi t_i)`` a weight with root coordinates ``c`` contributes
the monomial ``prod_i k_i^{-2 c_i}``.  Characteristic polynomials are always
built as ``prod_j (x + r_j)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import UnsupportedTypeError
from .polynomials import LaurentPoly, MultiPoly, UniPoly, discriminant
from .rootdata import RootDatum, build_root_datum
from .weights import WeightSystem, fundamental_rep

__all__ = ["laurent_from_weight_system", "fundamental_characters", "char_poly",
           "char_poly_roots", "SUPPORTED_CHAR_POLY", "FactorReport", "factor_check",
           "ExponentDenominatorError", "coefficient_poly", "character_names",
           "discriminant_of"]


class ExponentDenominatorError(ValueError):
    """The requested exponent denominator cannot represent the weights."""


def character_names(d: RootDatum) -> tuple[str, ...]:
    return tuple(f"k{lab}" for lab in d.labels)


def laurent_from_weight_system(ws: WeightSystem, denom: int | None = None) -> LaurentPoly:
    """Character of ``ws`` as a Laurent polynomial in ``k_i``.

    ``denom`` defaults to the smallest exponent denominator that works.

    Raises
    ------
    ExponentDenominatorError
        if an explicit ``denom`` is too small for some exponent.
    """
    d = build_root_datum(ws.lie_type)
    exps = [(tuple(-2 * c for c in rc), k) for rc, k in ws.root_coords]
    need = math.lcm(1, *(x.denominator for e, _ in exps for x in e))
    if denom is None:
        denom = need
    elif denom % need:
        raise ExponentDenominatorError(
            f"exponents of {ws.lie_type} V{ws.highest} need denominator {need}, got {denom}")
    terms = {tuple(int(x * denom) for x in e): k for e, k in exps}
    return LaurentPoly(d.rank, denom, terms, character_names(d))


def fundamental_characters(d: RootDatum) -> tuple[LaurentPoly, ...]:
    """``(C_k)`` as Laurent polynomials, in node position order."""
    return tuple(laurent_from_weight_system(fundamental_rep(d, lab)) for lab in d.labels)


SUPPORTED_CHAR_POLY = ("A", "B3", "C3", "D4", "G2")


def _monomial(d: RootDatum, rc) -> LaurentPoly:
    p = LaurentPoly.monomial([-2 * c for c in rc])
    return LaurentPoly(p.nvars, p.denom, p.terms, character_names(d))


def _pairs(rcs):
    """Split nonzero weights into ``{mu, -mu}`` pairs, representative first."""
    seen = set()
    out = []
    for rc in sorted(rcs, reverse=True):
        neg = tuple(-x for x in rc)
        if rc in seen or neg in seen:
            continue
        seen.add(rc)
        out.append((rc, neg))
    return out


def char_poly_roots(d: RootDatum) -> tuple[LaurentPoly, ...]:
    """The ``r_j`` in ``P(x) = prod (x + r_j)`` for the built-in recipes.

    * ``A_n``: every weight of ``V_1``.
    * ``B_3``: the six nonzero weights of ``V_3``.
    * ``C_3``: the six weights of ``V_3``.
    * ``D_4``: ``m + m^{-1}`` over the four weight pairs of ``V_0``.
    * ``G_2``: ``m + m^{-1}`` over the three pairs of nonzero weights of ``V_2``.
    """
    t = d.lie_type
    name = str(t)
    if t.family == "A":
        ws = fundamental_rep(d, 1)
        return tuple(_monomial(d, rc) for rc, _ in ws.root_coords)
    if name in ("B3", "C3"):
        ws = fundamental_rep(d, 3)
        return tuple(_monomial(d, rc) for rc, _ in ws.root_coords if any(rc))
    if name in ("D4", "G2"):
        ws = fundamental_rep(d, 0 if name == "D4" else 2)
        rcs = [rc for rc, _ in ws.root_coords if any(rc)]
        return tuple(_monomial(d, a) + _monomial(d, b) for a, b in _pairs(rcs))
    raise UnsupportedTypeError(f"no characteristic polynomial recipe for {t}")


def char_poly(d: RootDatum) -> UniPoly:
    """``P(x) = prod_j (x + r_j)`` expanded exactly over Laurent polynomials."""
    roots = char_poly_roots(d)
    one = LaurentPoly(d.rank, 1, {(0,) * d.rank: 1}, character_names(d))
    return UniPoly.from_roots(roots, one)


def coefficient_poly(coeffs: list[MultiPoly]) -> UniPoly:
    """``UniPoly`` over :class:`MultiPoly` from a low-degree-first list."""
    return UniPoly(tuple(coeffs))


@dataclass
class FactorReport:
    """Outcome of checking ``disc = c * prod(factors)`` exactly.

    ``constant`` is the integer (or rational) ``c``; ``remainder`` holds the
    text of the division remainder when the claim fails.
    """
    type: str
    claim: str
    holds: bool
    constant: Fraction | None
    discriminant: str
    remainder: str | None = None
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "type": self.type, "claim": self.claim, "holds": self.holds,
            "constant": None if self.constant is None else str(self.constant),
            "discriminant": self.discriminant, "remainder": self.remainder,
            "notes": list(self.notes),
        }


def factor_check(type_name: str, disc: MultiPoly, factors: list[MultiPoly],
                 claim: str) -> FactorReport:
    """Check ``disc == c * prod(factors)`` for a constant ``c``.

    ``c`` is the ratio of the leading coefficients; equality is then tested
    coefficient-wise.  On failure the remainder of dividing ``disc`` by the
    product is recorded.
    """
    prod = MultiPoly.constant(disc.nvars, 1)
    for f in factors:
        prod = prod * f
    prod = prod.rename(disc.names) if disc.names else prod
    e, lc_prod = prod.leading()
    lc_disc = disc.terms.get(e, 0)
    c = Fraction(lc_disc, lc_prod)
    holds = c != 0 and c.denominator == 1 and disc == int(c) * prod
    if holds:
        return FactorReport(type_name, claim, True, c, disc.to_text())
    _, rem = disc.divmod(prod)
    return FactorReport(type_name, claim, False, None, disc.to_text(), rem.to_text())


def discriminant_of(coeffs: list[MultiPoly]) -> MultiPoly:
    return discriminant(coefficient_poly(coeffs))
