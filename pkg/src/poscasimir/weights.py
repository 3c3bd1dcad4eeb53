"""
Weight systems and dimensions of finite-dimensional irreducible modules.

Multiplicities come from Freudenthal's recursion over the dominant weights,
then each dominant weight is expanded into its Weyl orbit.  Dimensions come
from the Weyl dimension formula and are never bounded, so they also cover the
large E_7 / E_8 fundamentals whose weight systems are out of reach.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .errors import DimensionBoundError, NonDominantError
from .rootdata import LieType, RootDatum, WeightVec, build_root_datum

__all__ = ["WeightSystem", "weyl_dim", "weight_system", "fundamental_rep",
           "fundamental_dims", "closed_form_dims", "audit_closed_form_dims",
           "DEFAULT_DIMENSION_BOUND"]

DEFAULT_DIMENSION_BOUND = 20_000


def _as_weight_coords(d: RootDatum, hw) -> tuple[int, ...]:
    if isinstance(hw, WeightVec):
        hw = hw.to_weight(d).coords
    m = tuple(Fraction(x) for x in hw)
    if len(m) != d.rank:
        raise ValueError(f"expected {d.rank} coordinates, got {len(m)}")
    if any(x.denominator != 1 for x in m):
        raise NonDominantError(f"{hw} is not integral")
    if any(x < 0 for x in m):
        raise NonDominantError(f"{hw} is not dominant")
    return tuple(int(x) for x in m)


def weyl_dim(d: RootDatum, hw) -> int:
    """Dimension of the irreducible module with dominant highest weight ``hw``.

    ``hw`` is a :class:`WeightVec` or a sequence of weight coordinates.
    """
    m = _as_weight_coords(d, hw)
    num = Fraction(1)
    for alpha in d.positive_roots:
        num *= (d.inner_weight_root([x + 1 for x in m], alpha)
                / d.inner_weight_root([1] * d.rank, alpha))
    assert num.denominator == 1
    return int(num)


@dataclass(frozen=True, eq=False)
class WeightSystem:
    """Weights with multiplicities of one irreducible module.

    ``entries`` maps weight coordinates (tuples of ints) to multiplicities.
    """
    lie_type: LieType
    highest: tuple[int, ...]
    entries: Mapping[tuple[int, ...], int] = field(repr=False)

    @property
    def dim(self) -> int:
        return sum(self.entries.values())

    def __len__(self):
        return len(self.entries)

    def weights(self) -> list[tuple[WeightVec, int]]:
        return [(WeightVec(m, "weight"), k) for m, k in sorted(self.entries.items())]

    @cached_property
    def root_coords(self) -> tuple[tuple[tuple[Fraction, ...], int], ...]:
        """``(mu(W_1), ..., mu(W_n))`` and multiplicity for every weight."""
        d = build_root_datum(self.lie_type)
        return tuple((d.weight_to_root(m), k) for m, k in sorted(self.entries.items()))

    @cached_property
    def numeric(self) -> tuple[np.ndarray, np.ndarray]:
        """Float root-coordinate matrix (one row per weight) and multiplicities."""
        coords = np.array([[float(c) for c in rc] for rc, _ in self.root_coords])
        mults = np.array([k for _, k in self.root_coords], dtype=float)
        coords.setflags(write=False)
        mults.setflags(write=False)
        return coords, mults


def _dominant_conjugate(d: RootDatum, m: Sequence[int], alpha_w) -> tuple[int, ...]:
    m = list(m)
    while True:
        for i, mi in enumerate(m):
            if mi < 0:
                col = alpha_w[i]
                for j in range(d.rank):
                    m[j] -= mi * col[j]
                break
        else:
            return tuple(m)


def _orbit(d: RootDatum, m: tuple[int, ...], alpha_w) -> set[tuple[int, ...]]:
    seen = {m}
    queue = deque([m])
    while queue:
        mu = queue.popleft()
        for i, mi in enumerate(mu):
            if mi == 0:
                continue
            col = alpha_w[i]
            image = tuple(mu[j] - mi * col[j] for j in range(d.rank))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def weight_system(d: RootDatum, hw, bound: int = DEFAULT_DIMENSION_BOUND) -> WeightSystem:
    """Full weight system of the irreducible module with highest weight ``hw``.

    Raises
    ------
    DimensionBoundError
        when ``weyl_dim(hw)`` exceeds ``bound``.
    """
    lam = _as_weight_coords(d, hw)
    dim = weyl_dim(d, lam)
    if dim > bound:
        raise DimensionBoundError(
            f"dim V({lam}) = {dim} for {d.lie_type} exceeds bound {bound}")
    n = d.rank
    # alpha_w[i] = weight coordinates of alpha_i (column i of the Cartan matrix)
    alpha_w = [tuple(d.cartan[j][i] for j in range(n)) for i in range(n)]
    pos_w = [(alpha, tuple(sum(alpha[i] * alpha_w[i][j] for i in range(n)) for j in range(n)))
             for alpha in d.positive_roots]

    # dominant weights below lam: closed under subtracting positive roots
    level = {lam: 0}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for alpha, aw in pos_w:
            nu = tuple(mu[j] - aw[j] for j in range(n))
            if min(nu) >= 0 and nu not in level:
                level[nu] = level[mu] + sum(alpha)
                queue.append(nu)
    # level must be the true height of lam - mu, independent of the path
    lam_root = d.weight_to_root(lam)
    for mu in level:
        level[mu] = int(sum(a - b for a, b in zip(lam_root, d.weight_to_root(mu))))

    rho_shift = lambda m: d.weight_to_root([x + 1 for x in m])  # noqa: E731
    norm_lam = d.inner_weight_root([x + 1 for x in lam], rho_shift(lam))

    mult: dict[tuple[int, ...], int] = {lam: 1}
    for mu in sorted(level, key=level.get):
        if mu == lam:
            continue
        total = Fraction(0)
        for alpha, aw in pos_w:
            ht = sum(alpha)
            k = 1
            while level[mu] - k * ht >= 0:
                nu = tuple(mu[j] + k * aw[j] for j in range(n))
                m_nu = mult.get(_dominant_conjugate(d, nu, alpha_w), 0)
                if m_nu:
                    total += m_nu * d.inner_weight_root(nu, alpha)
                k += 1
        denom = norm_lam - d.inner_weight_root([x + 1 for x in mu], rho_shift(mu))
        value = 2 * total / denom
        assert value.denominator == 1, (mu, value)
        if value:
            mult[mu] = int(value)

    entries: dict[tuple[int, ...], int] = {}
    for mu, k in mult.items():
        for nu in _orbit(d, mu, alpha_w):
            entries[nu] = k
    ws = WeightSystem(d.lie_type, lam, MappingProxyType(entries))
    assert ws.dim == dim, (ws.dim, dim)
    return ws


@lru_cache(maxsize=None)
def _fundamental(t: LieType, label: int, bound: int) -> WeightSystem:
    d = build_root_datum(t)
    p = d.index(label)
    return weight_system(d, tuple(int(i == p) for i in range(d.rank)), bound)


def fundamental_rep(d: RootDatum, k: int, bound: int = DEFAULT_DIMENSION_BOUND) -> WeightSystem:
    """Weight system of the fundamental module ``V_k`` (``k`` a node label)."""
    return _fundamental(d.lie_type, k, bound)


def fundamental_dims(d: RootDatum) -> tuple[int, ...]:
    """``(dim V_k)`` in position order."""
    return tuple(weyl_dim(d, tuple(int(i == p) for i in range(d.rank)))
                 for p in range(d.rank))


def closed_form_dims(t: LieType) -> dict[int, int]:
    """Closed-form fundamental dimensions as tabulated per family.

    These are transcribed as printed (they are the *claims* being audited),
    including the A_n and D_n rows that disagree with the Weyl dimension.
    """
    n = t.rank
    C = math.comb
    if t.family == "A":
        return {k: C(n, k) for k in range(1, n + 1)}
    if t.family == "B":
        return {k: 2 ** n if k == 1 else C(2 * n + 1, n + k) for k in range(1, n + 1)}
    if t.family == "C":
        return {k: 2 * n if k == n else C(2 * n, n + 1 - k) - C(2 * n, n + 1 + k)
                for k in range(1, n + 1)}
    if t.family == "D":
        return {k: 2 ** (n - 1) if k in (0, 1) else C(2 * n, n + 1 + k) for k in range(n)}
    table = {
        6: (78, 27, 351, 2925, 351, 27),
        7: (912, 133, 8645, 365750, 27664, 1539, 56),
        8: (147250, 3875, 6696000, 6899079264, 146325270, 2450240, 30380, 248),
    }
    if t.family == "E":
        return dict(enumerate(table[n]))
    if t.family == "F":
        return {1: 52, 2: 1274, 3: 273, 4: 26}
    return {1: 14, 2: 7}


def audit_closed_form_dims(t: LieType) -> list[dict]:
    """Compare tabulated fundamental dimensions with the Weyl dimension formula.

    Never raises on a mismatch; each row carries a ``match`` flag.
    """
    d = build_root_datum(t)
    table = closed_form_dims(t)
    dims = fundamental_dims(d)
    return [{"node": lab, "closed_form": table[lab], "weyl_dim": dims[p],
             "match": table[lab] == dims[p]}
            for p, lab in enumerate(d.labels)]
