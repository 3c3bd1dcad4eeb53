"""
Published closed forms, transcribed verbatim for verification.

Everything here is a *claim* to be checked against first-principles
computation, so misprints are kept as printed.  Corrected variants carry a
``_corrected`` suffix and are only used where the correction is itself being
tested.

Characters use the variables ``k_i = exp(2 pi t_i)`` in node position order
(``k0..k3`` for D_4).  Polynomials in the characters use ``X, Y, Z`` for
``C_1, C_2, C_3`` and ``C0..C3`` for D_4.
"""
from __future__ import annotations

from fractions import Fraction as F
from typing import Iterable, Sequence

from .polynomials import LaurentPoly, MultiPoly

__all__ = ["printed_characters", "printed_char_poly_roots", "printed_coefficients",
           "printed_discriminant", "printed_factors", "printed_boundary_curves",
           "B2_DL_PRINTED", "B2_DL_CORRECTED", "B2_C1_PRINTED", "B2_C1_CORRECTED",
           "REFERENCE_TYPES", "D4_NAMES"]

REFERENCE_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2")
D4_NAMES = ("C0", "C1", "C2", "C3")


def _lp(nvars: int, items: Iterable[tuple[Sequence, int]], names=None) -> LaurentPoly:
    p = LaurentPoly.from_rational_terms(nvars, list(items))
    return LaurentPoly(p.nvars, p.denom, p.terms, names)


def _mono(*exps) -> tuple[Sequence, int]:
    return (exps, 1)


def _with_inverse(nvars: int, monos: Sequence[Sequence], constant: int = 0, names=None):
    items = [(m, 1) for m in monos] + [([-x for x in m], 1) for m in monos]
    if constant:
        items.append(((0,) * nvars, constant))
    return _lp(nvars, items, names)


def _xyz(n: int = 3):
    return MultiPoly.variables(n)


# -- characters ------------------------------------------------------------

def _a1():
    return {1: _lp(1, [_mono(1), _mono(-1)])}


def _a2():
    t = F(1, 3)
    c1 = _lp(2, [_mono(4 * t, 2 * t), _mono(-2 * t, 2 * t), _mono(-2 * t, -4 * t)])
    c2 = _lp(2, [_mono(2 * t, 4 * t), _mono(2 * t, -2 * t), _mono(-4 * t, -2 * t)])
    return {1: c1, 2: c2}


def _a3():
    h = F(1, 2)
    c1 = _lp(3, [_mono(3 * h, 1, h), _mono(-h, 1, h), _mono(-h, -1, h), _mono(-h, -1, -3 * h)])
    c2 = _lp(3, [_mono(1, 2, 1), _mono(1, 0, 1), _mono(-1, 0, 1), _mono(1, 0, -1),
                 _mono(-1, 0, -1), _mono(-1, -2, -1)])
    c3 = _lp(3, [_mono(h, 1, 3 * h), _mono(h, 1, -h), _mono(h, -1, -h), _mono(-3 * h, -1, -h)])
    return {1: c1, 2: c2, 3: c3}


# "k_2^2 k_2" as printed; the four-dimensional weight system needs k_1^2 k_2
B2_C1_PRINTED = _lp(2, [_mono(0, 3), _mono(0, 1), _mono(0, -1), _mono(-2, -1)])
B2_C1_CORRECTED = _lp(2, [_mono(2, 1), _mono(0, 1), _mono(0, -1), _mono(-2, -1)])


def _b2(corrected: bool = False):
    c2 = _lp(2, [_mono(2, 2), _mono(2, 0), _mono(-2, 0), _mono(-2, -2), ((0, 0), 1)])
    return {1: B2_C1_CORRECTED if corrected else B2_C1_PRINTED, 2: c2}


def _b3():
    c1 = _with_inverse(3, [(3, 2, 1), (1, 2, 1), (1, 0, 1), (1, 0, -1)])
    c2 = _with_inverse(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (4, 2, 0), (2, 2, 0), (0, 2, 2),
                           (4, 2, 2), (2, 2, 2), (4, 4, 2)], constant=3)
    c3 = _with_inverse(3, [(2, 0, 0), (2, 2, 0), (2, 2, 2)], constant=1)
    return {1: c1, 2: c2, 3: c3}


def _c3(corrected: bool = False):
    # printed first monomial "k_1^3 k_2^4 k_1^2"; the evident intent is k_1^3 k_2^4 k_3^2
    first = (3, 4, 2) if corrected else (5, 4, 0)
    c1 = _with_inverse(3, [first, (1, 4, 2), (1, 0, 2), (1, 0, -2)])
    c2 = _with_inverse(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (2, 2, 0), (2, 4, 0), (2, 2, 2),
                           (2, 4, 2), (2, 4, 4), (0, 2, 2)], constant=3)
    c3 = _with_inverse(3, [(1, 0, 0), (1, 2, 0), (1, 2, 2)])
    return {1: c1, 2: c2, 3: c3}


def _d4():
    names = ("k0", "k1", "k2", "k3")
    # exponent vectors in the order (k0, k1, k2, k3)
    c0 = _with_inverse(4, [(2, 1, 2, 1), (0, 1, 2, 1), (0, 1, 0, 1), (0, -1, 0, 1)], names=names)
    c1 = _with_inverse(4, [(1, 2, 2, 1), (1, 0, 2, 1), (1, 0, 0, 1), (-1, 0, 0, 1)], names=names)
    c3 = _with_inverse(4, [(1, 1, 2, 2), (1, 1, 2, 0), (1, 1, 0, 0), (-1, 1, 0, 0)], names=names)
    c2 = _with_inverse(4, [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2),
                           (2, 0, 2, 0), (0, 2, 2, 0), (0, 0, 2, 2), (2, 2, 2, 0),
                           (2, 0, 2, 2), (0, 2, 2, 2), (2, 2, 2, 2), (2, 2, 4, 2)],
                       constant=4, names=names)
    return {0: c0, 1: c1, 2: c2, 3: c3}


def _g2():
    c2 = _with_inverse(2, [(2, 1), (1, 1), (1, 0)], constant=1)
    c1 = _with_inverse(2, [(3, 2), (3, 1), (0, 1)], constant=1) + c2
    return {1: c1, 2: c2}


_CHARACTERS = {"A1": _a1, "A2": _a2, "A3": _a3, "B2": _b2, "B3": _b3,
               "C3": _c3, "D4": _d4, "G2": _g2}


def printed_characters(name: str, corrected: bool = False) -> dict[int, LaurentPoly]:
    """Printed central characters keyed by node label.

    ``corrected`` applies the two evident monomial misprints (B_2's ``C_1`` and
    the first monomial of C_3's ``C_1``); it has no effect on other types.
    """
    if name in ("B2", "C3"):
        return _CHARACTERS[name](corrected)
    return _CHARACTERS[name]()


# -- characteristic polynomials -------------------------------------------

def printed_char_poly_roots(name: str) -> tuple[LaurentPoly, ...]:
    """Roots of the printed factorizations of ``P(x)``, up to the sign convention."""
    if name == "A2":
        return tuple(_lp(2, [m]) for m in _a2()[1].exponents().items())
    if name == "B3":
        return tuple(_lp(3, [(e, 1)]) for e in
                     [(2, 0, 0), (-2, 0, 0), (2, 2, 0), (-2, -2, 0), (2, 2, 2), (-2, -2, -2)])
    if name == "C3":
        return tuple(_lp(3, [(e, 1)]) for e in
                     [(2, 0, 0), (-2, 0, 0), (1, 2, 0), (-1, -2, 0), (1, 2, 2), (-1, -2, -2)])
    if name == "D4":
        names = ("k0", "k1", "k2", "k3")
        pairs = [(2, 1, 2, 1), (0, 1, 2, 1), (0, 1, 0, 1), (0, -1, 0, 1)]
        return tuple(_with_inverse(4, [p], names=names) for p in pairs)
    if name == "G2":
        return tuple(_with_inverse(2, [p]) for p in [(1, 0), (1, 1), (2, 1)])
    raise KeyError(name)


def printed_coefficients(name: str) -> list[MultiPoly]:
    """Printed coefficients of ``P(x)`` in terms of the characters, lowest degree first."""
    if name.startswith("A"):
        n = int(name[1:])
        xs = MultiPoly.variables(n)
        one = MultiPoly.constant(n, 1)
        return [one] + [xs[n - 1 - j] for j in range(n)] + [one]
    if name == "B3":
        X, Y, Z = _xyz()
        one = MultiPoly.constant(3, 1)
        a, b, c = Z - 1, Y - Z + 1, X ** 2 - 2 * Y - 2
        return [one, a, b, c, b, a, one]
    if name == "C3":
        X, Y, Z = _xyz()
        one = MultiPoly.constant(3, 1)
        a, b, c = Z, Z ** 2 - Y, X + 2 * Z
        return [one, a, b, c, b, a, one]
    if name == "D4":
        c0, c1, c2, c3 = MultiPoly.variables(4, D4_NAMES)
        return [c1 ** 2 + c3 ** 2 - 4 * c2, c1 * c3 - 4 * c0, c2 - 4, c0,
                MultiPoly(4, {(0, 0, 0, 0): 1}, D4_NAMES)]
    if name == "G2":
        X, Y = _xyz(2)
        return [(Y - 1) ** 2 - 2 * X, X - 2, Y - 1, MultiPoly.constant(2, 1)]
    raise KeyError(name)


# -- discriminants and their factors ---------------------------------------

def printed_discriminant(name: str) -> MultiPoly:
    if name == "A1":
        (X,) = _xyz(1)
        return X ** 2 - 4
    if name == "A2":
        X, Y = _xyz(2)
        return (X * Y + 9) ** 2 - 4 * (X ** 3 + Y ** 3 + 27)
    if name == "A3":
        X, Y, Z = _xyz()
        return (256 - 27 * X**4 + 144 * X**2 * Y - 128 * Y**2 - 4 * X**2 * Y**3
                + 16 * Y**4 - 192 * X * Z + 18 * X**3 * Y * Z - 80 * X * Y**2 * Z
                - 6 * X**2 * Z**2 + 144 * Y * Z**2 + X**2 * Y**2 * Z**2
                - 4 * Y**3 * Z**2 - 4 * X**3 * Z**3 + 18 * X * Y * Z**3 - 27 * Z**4)
    raise KeyError(name)


X2, Y2 = MultiPoly.variables(2)
B2_DL_PRINTED = (Y2 + 3) ** 2 - 4 * Y2 ** 2
B2_DL_CORRECTED = (Y2 + 3) ** 2 - 4 * X2 ** 2


def printed_factors(name: str) -> dict[str, MultiPoly]:
    """Printed ``D_s`` and ``D_l`` (and extra factors) as polynomials in the characters."""
    if name == "B2":
        return {"D_s": X2 ** 2 - 4 * Y2 + 4, "D_l": B2_DL_PRINTED}
    if name == "B3":
        X, Y, Z = _xyz()
        d_l = (36 + 40 * X**2 - 27 * X**4 - 132 * Y + 90 * X**2 * Y - 47 * Y**2
               - 4 * Y**3 - 36 * Z + 78 * X**2 * Z - 162 * Y * Z + 18 * X**2 * Y * Z
               - 26 * Y**2 * Z - 27 * Z**2 - 6 * X**2 * Z**2 - 36 * Y * Z**2
               + Y**2 * Z**2 + 18 * Z**3 - 4 * X**2 * Z**3 + 6 * Y * Z**3 + 9 * Z**4)
        return {"D_s": X**2 - 4 * Y + 4 * Z - 8, "D_l": d_l}
    if name == "C3":
        X, Y, Z = _xyz()
        d_l = X**2 - (2 * (Z - 1) ** 2 - 2 * Y) ** 2
        d_s = (108 - 27 * X**2 + 108 * Y + 36 * Y**2 + 4 * Y**3 - 54 * X * Z
               - 18 * X * Y * Z - 99 * Z**2 - 66 * Y * Z**2 - 11 * Y**2 * Z**2
               + 14 * X * Z**3 + 30 * Z**4 + 10 * Y * Z**4 - 3 * Z**6)
        return {"D_s": d_s, "D_l": d_l}
    if name == "G2":
        X, Y = _xyz(2)
        return {"D_s": 4 * (Y + 2) - (X + 1) ** 2,
                "D_l": 4 * X**3 - X**2 - Y**2 - 10 * X * Y - 2 * X - 10 * Y + 7}
    raise KeyError(name)


def printed_boundary_curves(name: str) -> dict[str, MultiPoly]:
    """Printed equations of the boundary curves of rank-2 regions (``f = 0``)."""
    if name == "A2":
        return {"disc": printed_discriminant("A2")}
    if name == "B2":
        return {"line": 2 * X2 - Y2 - 3, "parabola": X2 ** 2 - 4 * (Y2 - 1)}
    if name == "G2":
        return printed_factors("G2")
    raise KeyError(name)
