"""
Central characters of positive representations and related quantities.

Spectral parameters are always the rescaled coefficients ``t_i = b_i lambda_i``
of ``lambda_b`` in the fundamental coweight basis.  In these coordinates the
central characters, the map ``Phi`` and the product ``D`` carry no dependence
on ``b``; only the virtual-weight functions take a :class:`ParamContext`.

A weight ``mu`` with root coordinates ``c`` contributes
``exp(-4 pi sum_i c_i t_i)`` to ``C_k``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .errors import (ConsistencyError, DegeneratePointError, NumericRangeError)
from .rootdata import (RootDatum, apply_word, build_root_datum,
                       check_reduced_longest, diagram_involution,
                       enumerate_weyl, weyl_act_params, weyl_cap_from_env)
from .weights import WeightSystem, fundamental_rep

__all__ = ["CharPoint", "ParamContext", "VirtualPoint", "central_character",
           "phi", "weyl_character_oracle", "product_D", "act_params_word",
           "root_com_check", "root_com_exhaustive", "virtual_lowest_point",
           "virtual_K_scalar", "virtual_weights", "MAX_EXPONENT",
           "DEGENERATE_TOL", "K_SCALAR_RTOL", "safe_t_max"]

# exp overflows a double just above 709.78
MAX_EXPONENT = 709.0
DEGENERATE_TOL = 1e-8
K_SCALAR_RTOL = 1e-10
_ORACLE_DPS = 50


def _check_params(d: RootDatum, t: Sequence[float]) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    if arr.shape != (d.rank,):
        raise ValueError(f"expected {d.rank} spectral parameters, got {len(arr)}")
    if not np.isfinite(arr).all():
        raise ValueError("spectral parameters must be finite")
    return arr


def _sum_exp(exponents: np.ndarray, mults: np.ndarray) -> float:
    top = float(exponents.max())
    if top > MAX_EXPONENT:
        raise NumericRangeError(
            f"exponent {top:.1f} overflows double precision; use smaller t")
    return math.fsum(mults * np.exp(exponents - top)) * math.exp(top)


@dataclass(frozen=True)
class CharPoint:
    """``Phi(t) = (C_1, ..., C_n)`` together with the parameters used."""
    t: tuple[float, ...]
    c: tuple[float, ...]


def central_character(d: RootDatum, ws: WeightSystem, t: Sequence[float]) -> float:
    """``sum_mu mult(mu) exp(-4 pi mu(lambda_b))`` for the weights of ``ws``.

    Raises
    ------
    NumericRangeError
        if the largest exponent does not fit in a double.
    """
    if ws.lie_type != d.lie_type:
        raise ValueError(f"weight system of {ws.lie_type} used with {d.lie_type}")
    arr = _check_params(d, t)
    coords, mults = ws.numeric
    return _sum_exp(-4.0 * math.pi * (coords @ arr), mults)


def phi(d: RootDatum, t: Sequence[float]) -> CharPoint:
    """All central characters, in node position order."""
    values = tuple(central_character(d, fundamental_rep(d, lab), t) for lab in d.labels)
    return CharPoint(tuple(float(x) for x in t), values)


def safe_t_max(d: RootDatum) -> float:
    """Largest ``T`` with every ``C_k`` representable for all ``t`` in ``[0, T]^n``."""
    worst = max(float(sum(abs(c) for c in rc))
                for lab in d.labels for rc, _ in fundamental_rep(d, lab).root_coords)
    return MAX_EXPONENT / (4 * math.pi * worst)


def act_params_word(d: RootDatum, word: Sequence[int], t: Sequence[float]) -> list:
    """``w . t`` for ``w = s_{i_1} ... s_{i_t}`` (rightmost letter acts first)."""
    out = list(t)
    for lab in reversed(word):
        out = weyl_act_params(d, lab, out)
    return out


@lru_cache(maxsize=None)
def _orbit_cached(t, k: int, cap: int | None):
    d = build_root_datum(t)
    p = d.index(k)
    shifted = [w + r for w, r in zip(d.fundamental_weight(p), d.rho)]
    den = math.lcm(*(x.denominator for x in shifted))
    base = np.asarray([int(x * den) for x in shifted], dtype=np.int64)
    out = []
    for el in enumerate_weyl(d, cap):
        out.append((el.sign, tuple(int(x) for x in el.matrix @ base)))
    return den, tuple(out)


def _shifted_orbit(d: RootDatum, k: int, cap: int | None):
    """Signed Weyl orbit of ``w_k + rho``: a common denominator and integer root coordinates."""
    return _orbit_cached(d.lie_type, k, weyl_cap_from_env() if cap is None else cap)


def weyl_character_oracle(d: RootDatum, k: int, t: Sequence[float],
                          cap: int | None = None) -> float:
    """``C_k(t)`` from the Weyl character formula, in 50-digit arithmetic.

    The numerator is the alternating sum over the orbit of ``w_k + rho``, the
    denominator ``prod_{alpha > 0} (exp(-2 pi alpha(lambda_b)) - exp(2 pi alpha(lambda_b)))``.

    Raises
    ------
    DegeneratePointError
        when some positive root has ``|alpha(lambda_b)| < 1e-8``.
    CapExceededError
        when the Weyl group is too large to enumerate.
    """
    arr = _check_params(d, t)
    roots = np.asarray(d.positive_roots, dtype=float)
    pairings = roots @ arr
    if np.abs(pairings).min() < DEGENERATE_TOL:
        raise DegeneratePointError(
            f"t = {arr.tolist()} is on a wall: some alpha(lambda_b) is below {DEGENERATE_TOL}")
    den, orbit = _shifted_orbit(d, k, cap)
    mp = mpmath.MPContext()
    mp.dps = _ORACLE_DPS
    tm = [mp.mpf(float(x)) for x in arr]
    scaled = [-4 * mp.pi * x / den for x in tm]
    terms = []
    for sign, coords in orbit:
        term = mp.exp(mp.fdot(coords, scaled))
        terms.append(term if sign > 0 else -term)
    num = mp.fsum(terms)
    den = mp.mpf(1)
    two_pi = 2 * mp.pi
    for alpha in d.positive_roots:
        x = two_pi * mp.fsum(a * tm[i] for i, a in enumerate(alpha) if a)
        den *= mp.exp(-x) - mp.exp(x)
    return float(num / den)


def product_D(d: RootDatum, t: Sequence[float]) -> tuple[float, float, float]:
    """``(D, D_s, D_l)`` with ``D`` the product over all roots of ``1 - exp(-4 pi alpha(lambda_b))``.

    Each pair ``+-alpha`` contributes ``-4 sinh^2(2 pi alpha(lambda_b))``.
    For simply-laced types every root counts as short, so ``D_l = 1``.
    """
    arr = _check_params(d, t)
    d_s = 1.0
    d_l = 1.0
    for alpha in d.positive_roots:
        x = 2.0 * math.pi * float(np.dot(alpha, arr))
        if abs(x) > MAX_EXPONENT / 2:
            raise NumericRangeError("D overflows double precision; use smaller t")
        factor = -4.0 * math.sinh(x) ** 2
        if d.lie_type.simply_laced or d.is_short(alpha):
            d_s *= factor
        else:
            d_l *= factor
    total = d_s * d_l
    if not math.isfinite(total):
        raise NumericRangeError("D overflows double precision; use smaller t")
    # adding 0.0 turns the -0.0 of a vanishing factor into 0.0
    return total + 0.0, d_s + 0.0, d_l + 0.0


# -- commutation of reflections with simple roots --------------------------

def root_com_check(d: RootDatum, word: Sequence[int], k: int) -> bool:
    """Exact check of ``s_{i_1}...s_{i_t}(alpha_k) = alpha_k - sum_j a_{i_j k} s_{i_1}...s_{i_{j-1}}(alpha_{i_j})``."""
    pk = d.index(k)
    lhs = apply_word(d, word, d.simple_root(pk))
    rhs = list(d.simple_root(pk))
    for j, lab in enumerate(word):
        p = d.index(lab)
        beta = apply_word(d, word[:j], d.simple_root(p))
        coeff = d.cartan[p][pk]
        for m in range(d.rank):
            rhs[m] -= coeff * beta[m]
    return tuple(lhs) == tuple(rhs)


def root_com_exhaustive(d: RootDatum, max_len: int) -> tuple[int, int]:
    """Check the identity for every word of length ``<= max_len`` and every ``k``.

    Left sides come from multiplying reflection matrices, right sides from the
    accumulated prefix columns.  Returns ``(checked, failures)``.
    """
    gens = d.simple_reflection_matrices
    cartan = np.asarray(d.cartan, dtype=np.int64)
    n = d.rank
    checked = failures = 0
    stack = [(np.eye(n, dtype=np.int64), np.eye(n, dtype=np.int64), 0)]
    while stack:
        prefix, rhs, depth = stack.pop()
        checked += n
        failures += int((prefix != rhs).any(axis=0).sum())
        if depth == max_len:
            continue
        for p in range(n):
            # rhs[:, k] -= a_{p k} * (prefix applied to alpha_p)
            stack.append((prefix @ gens[p],
                          rhs - np.outer(prefix[:, p], cartan[p]),
                          depth + 1))
    return checked, failures


# -- virtual lowest and highest weights ------------------------------------

@dataclass(frozen=True)
class ParamContext:
    """Quantum parameter ``b`` together with the symmetrizers of one datum.

    ``b_i = b sqrt(d_i)``, ``q_i = exp(i pi b_i^2)``, ``Q_i = b_i + 1/b_i``.
    """
    b: float
    dsym: tuple[Fraction, ...]

    def __post_init__(self):
        if not 0 < self.b < 1:
            raise ValueError(f"b must lie in (0, 1), got {self.b}")

    @classmethod
    def for_datum(cls, d: RootDatum, b: float) -> "ParamContext":
        return cls(float(b), d.dsym)

    @property
    def b_i(self) -> tuple[float, ...]:
        return tuple(self.b * math.sqrt(x) for x in self.dsym)

    @property
    def q_i(self) -> tuple[complex, ...]:
        return tuple(cmath.exp(1j * math.pi * bi * bi) for bi in self.b_i)

    @property
    def Q_i(self) -> tuple[float, ...]:
        return tuple(bi + 1 / bi for bi in self.b_i)


@dataclass(frozen=True)
class VirtualPoint:
    """Coordinates ``v_1..v_N`` of the virtual lowest weight for one reduced word."""
    word: tuple[int, ...]
    v: tuple[complex, ...]


def virtual_lowest_point(d: RootDatum, word: Sequence[int], ctx: ParamContext,
                         lam: Sequence[float]) -> VirtualPoint:
    """``v_j = (1/b_{i_j}) (-iQ/2 - 2 lambda_b, s_{i_1}...s_{i_{j-1}}(alpha_{i_j}))``.

    Raises
    ------
    NonReducedWordError
        if ``word`` is not a reduced expression of ``w_0``.
    """
    word = check_reduced_longest(d, word)
    lam = _check_params(d, lam)
    bs, Qs = ctx.b_i, ctx.Q_i
    shift = [-0.5j * Qs[i] * bs[i] - 2.0 * lam[i] * bs[i] for i in range(d.rank)]
    v = []
    for j, lab in enumerate(word):
        p = d.index(lab)
        c = apply_word(d, word[:j], d.simple_root(p))
        v.append(sum(c[i] * shift[i] for i in range(d.rank) if c[i]) / bs[p])
    return VirtualPoint(word, tuple(v))


def virtual_K_scalar(d: RootDatum, vp: VirtualPoint, ctx: ParamContext,
                     lam: Sequence[float], i: int) -> complex:
    """Scalar by which ``K_i`` acts on the virtual lowest weight vector.

    Evaluates ``exp(-pi sum_k a_{i_k, i} b_{i_k} v_k - 2 pi b_i lambda_i)`` and
    checks it against ``-q_i exp(2 pi b_i lambda_sigma(i))``.

    Raises
    ------
    ConsistencyError
        if the two disagree beyond a relative ``1e-10``.
    """
    lam = _check_params(d, lam)
    p = d.index(i)
    bs = ctx.b_i
    acc = 0j
    for lab, vk in zip(vp.word, vp.v):
        pk = d.index(lab)
        acc += d.cartan[pk][p] * bs[pk] * vk
    value = cmath.exp(-math.pi * acc - 2 * math.pi * bs[p] * lam[p])
    sigma = diagram_involution(d)
    expected = -ctx.q_i[p] * math.exp(2 * math.pi * bs[p] * lam[sigma[p]])
    if abs(value - expected) > K_SCALAR_RTOL * abs(expected):
        raise ConsistencyError(
            f"K_{i} scalar {value} differs from {expected} for word {vp.word}")
    return value


def virtual_weights(ctx: ParamContext, lam: Sequence[float],
                    sigma: Sequence[int]) -> tuple[tuple[complex, ...], tuple[complex, ...]]:
    """Virtual lowest and highest weights ``(Lambda_i)``.

    Lowest: ``Q_i/2 - i lambda_sigma(i)``.  Highest: ``-Q_i/2 + i lambda_i``.
    ``sigma`` is given in node positions.
    """
    Qs = ctx.Q_i
    if len(lam) != len(Qs) or len(sigma) != len(Qs):
        raise ValueError("lambda, sigma and the context must have the same rank")
    lowest = tuple(Qs[p] / 2 - 1j * lam[sigma[p]] for p in range(len(Qs)))
    highest = tuple(-Qs[p] / 2 + 1j * lam[p] for p in range(len(Qs)))
    return lowest, highest
