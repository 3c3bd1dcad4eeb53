"""
Root data, weights and Weyl group combinatorics for the simple Lie types.

Node labels follow the convention used throughout this package (see the
README for the map to Bourbaki labels):

* ``A_n``: chain ``1 - 2 - ... - n``.
* ``B_n``: node 1 is the unique short root, ``1 => 2 - ... - n``.
* ``C_n``: node 1 is the unique long root, nodes ``2..n`` are short.
* ``D_n``: branch nodes ``0`` and ``1`` both attached to ``2``, then the
  chain ``2 - 3 - ... - (n-1)``.
* ``E_n``: chain ``1 - ... - (n-1)`` with node ``0`` attached to node 3.
* ``F_4``: ``1 - 2 => 3 - 4`` with 1, 2 long and 3, 4 short.
* ``G_2``: node 1 long, node 2 short.

Root lengths are normalized by ``(alpha_i, alpha_i)/2 = d_i`` with
``d_i = 1`` for long roots, ``1/2`` for short roots of B, C, F and ``1/3``
for the short root of G_2.  The Cartan matrix is
``a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`` so that
``(alpha_i, alpha_j) = d_i a_ij``.

Coordinates
-----------
A weight ``mu`` is stored either in *root coordinates* ``c`` (``mu = sum c_i
alpha_i``) or in *weight coordinates* ``m`` (``mu = sum m_i w_i``).  They are
related by ``m = A c``.  Pairing with the fundamental coweights is
``mu(W_i) = c_i`` and pairing with the coroots is ``mu(H_i) = m_i``.

All exact quantities use :class:`fractions.Fraction` or ``int``.
"""
from __future__ import annotations

import math
import os
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import (BasisMismatchError, CapExceededError,
                     InadmissibleTypeError, NonReducedWordError)

__all__ = [
    "LieType", "RootDatum", "WeightVec", "WeylElement",
    "parse_lie_type", "build_root_datum", "positive_roots", "reflect",
    "weyl_act_params", "weyl_order", "enumerate_weyl", "longest_word",
    "diagram_involution", "is_reduced_longest", "reduced_words",
    "random_reduced_word", "apply_word", "check_reduced_longest",
    "bourbaki_labels", "DEFAULT_WEYL_CAP",
]

DEFAULT_WEYL_CAP = 60_000

_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def weyl_cap_from_env() -> int:
    raw = os.environ.get("CASIMIR_WEYL_CAP")
    return int(raw) if raw else DEFAULT_WEYL_CAP


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _ADMISSIBLE:
            raise InadmissibleTypeError(f"unknown family {self.family!r}")
        if not _ADMISSIBLE[self.family](self.rank):
            raise InadmissibleTypeError(
                f"inadmissible rank {self.rank} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"


def parse_lie_type(text: str) -> LieType:
    """Parse ``"A2"``, ``"g2"``, ``"E_8"`` and the like into a :class:`LieType`.

    ``D3`` is rejected rather than silently aliased to ``A3``; likewise
    ``B1``, ``C1``, ``D2`` etc.
    """
    match = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
    if match is None:
        raise InadmissibleTypeError(f"malformed Lie type {text!r}")
    return LieType(match.group(1).upper(), int(match.group(2)))


def _labels(t: LieType) -> tuple[int, ...]:
    if t.family in "DE":
        return tuple(range(t.rank))
    return tuple(range(1, t.rank + 1))


def _edges(t: LieType) -> list[tuple[int, int]]:
    """Dynkin edges as pairs of labels."""
    n = t.rank
    if t.family in "ABCFG":
        return [(i, i + 1) for i in range(1, n)]
    if t.family == "D":
        return [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    # E_n
    return [(0, 3)] + [(i, i + 1) for i in range(1, n - 1)]


def _short_labels(t: LieType) -> set[int]:
    return {
        "B": {1},
        "C": set(range(2, t.rank + 1)),
        "F": {3, 4},
        "G": {2},
    }.get(t.family, set())


def _fraction_inverse(mat: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class WeightVec:
    """An exact weight together with the basis its coordinates refer to.

    ``basis`` is ``"root"`` (simple-root coordinates) or ``"weight"``
    (fundamental-weight coordinates).
    """
    coords: tuple[Fraction, ...]
    basis: str = "root"

    def __post_init__(self):
        if self.basis not in ("root", "weight"):
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def to_root(self, d: "RootDatum") -> "WeightVec":
        if self.basis == "root":
            return self
        return WeightVec(d.weight_to_root(self.coords), "root")

    def to_weight(self, d: "RootDatum") -> "WeightVec":
        if self.basis == "weight":
            return self
        return WeightVec(d.root_to_weight(self.coords), "weight")

    def __add__(self, other: "WeightVec") -> "WeightVec":
        if self.basis != other.basis:
            raise BasisMismatchError("cannot add weights in different bases")
        return WeightVec(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        if self.basis != other.basis:
            raise BasisMismatchError("cannot subtract weights in different bases")
        return WeightVec(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "WeightVec":
        return WeightVec(tuple(-a for a in self.coords), self.basis)

    def scale(self, k) -> "WeightVec":
        return WeightVec(tuple(k * a for a in self.coords), self.basis)


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Cartan data and positive roots of one simple type.

    Nodes are addressed by *position* ``0..n-1`` in all array-valued fields;
    ``labels[p]`` is the conventional node label of position ``p``.
    """
    lie_type: LieType
    labels: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]
    dsym: tuple[Fraction, ...]
    cartan_inv: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    _short: frozenset = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: int) -> int:
        """Position of the node with the given label."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise InadmissibleTypeError(
                f"{self.lie_type} has no node labelled {label}") from None

    # -- inner products and coordinate changes ---------------------------
    def sym(self, i: int, j: int) -> Fraction:
        """``(alpha_i, alpha_j)`` for positions ``i, j``."""
        return self.dsym[i] * self.cartan[i][j]

    def inner_root(self, c1: Sequence, c2: Sequence) -> Fraction:
        n = self.rank
        return sum((Fraction(c1[i]) * c2[j] * self.sym(i, j)
                    for i in range(n) for j in range(n) if c1[i] and c2[j]),
                   Fraction(0))

    def inner_weight_root(self, m: Sequence, c: Sequence) -> Fraction:
        """``(mu, nu)`` with ``mu`` in weight and ``nu`` in root coordinates."""
        return sum((Fraction(m[j]) * self.dsym[j] * c[j] for j in range(self.rank)),
                   Fraction(0))

    def root_to_weight(self, c: Sequence) -> tuple:
        n = self.rank
        return tuple(sum(self.cartan[i][j] * Fraction(c[j]) for j in range(n))
                     for i in range(n))

    def weight_to_root(self, m: Sequence) -> tuple[Fraction, ...]:
        n = self.rank
        return tuple(sum(self.cartan_inv[i][j] * Fraction(m[j]) for j in range(n))
                     for i in range(n))

    def is_short(self, root: Sequence[int]) -> bool:
        """True for a short root of a non-simply-laced type."""
        return tuple(abs(x) for x in root) in self._short

    def simple_root(self, i: int) -> tuple[int, ...]:
        return tuple(int(i == j) for j in range(self.rank))

    def fundamental_weight(self, i: int) -> tuple[Fraction, ...]:
        """Root coordinates of ``w_i`` (``i`` a position)."""
        return tuple(self.cartan_inv[j][i] for j in range(self.rank))

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        """Root coordinates of the Weyl vector."""
        return tuple(sum(row) for row in self.cartan_inv)

    @cached_property
    def simple_reflection_matrices(self) -> tuple[np.ndarray, ...]:
        mats = []
        for i in range(self.rank):
            s = np.eye(self.rank, dtype=np.int64)
            s[i, :] -= np.asarray(self.cartan[i], dtype=np.int64)
            s.setflags(write=False)
            mats.append(s)
        return tuple(mats)


def _close_positive_roots(cartan, n) -> list[tuple[int, ...]]:
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    order = list(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            pair = sum(cartan[i][j] * beta[j] for j in range(n))
            if pair == 0:
                continue
            image = list(beta)
            image[i] -= pair
            image = tuple(image)
            if min(image) >= 0 and image not in seen:
                seen.add(image)
                order.append(image)
                queue.append(image)
    order.sort(key=lambda r: (sum(r), r))
    return order


@lru_cache(maxsize=None)
def build_root_datum(t: LieType) -> RootDatum:
    """Construct the :class:`RootDatum` of ``t`` in the package's labelling."""
    labels = _labels(t)
    n = t.rank
    pos = {lab: p for p, lab in enumerate(labels)}
    short = _short_labels(t)
    short_d = Fraction(1, 3) if t.family == "G" else Fraction(1, 2)
    dsym = tuple(short_d if lab in short else Fraction(1) for lab in labels)

    # (alpha_i, alpha_j) for adjacent nodes is -min(d_i, d_j) except across a
    # multiple bond, where it is -1 with the long root carrying d = 1.
    sym = [[Fraction(0)] * n for _ in range(n)]
    for p in range(n):
        sym[p][p] = 2 * dsym[p]
    for a, b in _edges(t):
        i, j = pos[a], pos[b]
        value = -min(dsym[i], dsym[j]) if dsym[i] == dsym[j] else Fraction(-1)
        sym[i][j] = sym[j][i] = value
    cartan = tuple(tuple(int(2 * sym[i][j] / sym[i][i]) for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            assert 2 * sym[i][j] / sym[i][i] == cartan[i][j]

    roots = _close_positive_roots(cartan, n)

    def norm(c):
        return sum(c[i] * c[j] * sym[i][j] for i in range(n) for j in range(n))

    long_norm = max(norm(r) for r in roots)
    short_roots = frozenset(r for r in roots if norm(r) < long_norm)
    return RootDatum(t, labels, cartan, dsym, _fraction_inverse(cartan),
                     tuple(roots), short_roots)


def positive_roots(d: RootDatum) -> tuple[tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, sorted by height."""
    return d.positive_roots


def reflect(d: RootDatum, i: int, v: WeightVec) -> WeightVec:
    """Simple reflection at node label ``i``: ``s_i(v) = v - v(H_i) alpha_i``."""
    if v.basis != "root":
        raise BasisMismatchError("reflect expects root-basis coordinates")
    p = d.index(i)
    pair = sum(d.cartan[p][j] * v.coords[j] for j in range(d.rank))
    coords = list(v.coords)
    coords[p] -= pair
    return WeightVec(tuple(coords), "root")


def weyl_act_params(d: RootDatum, i: int, t: Sequence[float]) -> list:
    """Act by ``s_i`` on coweight coefficients: ``t_j -> t_j - a_ij t_i``."""
    p = d.index(i)
    if len(t) != d.rank:
        raise ValueError(f"expected {d.rank} parameters, got {len(t)}")
    row = d.cartan[p]
    ti = t[p]
    return [t[j] - row[j] * ti for j in range(d.rank)]


def weyl_order(t: LieType) -> int:
    n = t.rank
    return {
        "A": lambda: math.factorial(n + 1),
        "B": lambda: 2 ** n * math.factorial(n),
        "C": lambda: 2 ** n * math.factorial(n),
        "D": lambda: 2 ** (n - 1) * math.factorial(n),
        "E": lambda: {6: 51_840, 7: 2_903_040, 8: 696_729_600}[n],
        "F": lambda: 1152,
        "G": lambda: 12,
    }[t.family]()


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element: its matrix on root coordinates and a reduced word.

    ``word`` holds node labels ``(i_1, ..., i_t)`` for ``s_{i_1} ... s_{i_t}``;
    ``matrix`` is the product of the simple reflection matrices in that order,
    so that ``s_{i_t}`` acts first on a column vector.
    """
    matrix: np.ndarray
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1


def enumerate_weyl(d: RootDatum, cap: int | None = None) -> list[WeylElement]:
    """All elements of the Weyl group, identity first, by breadth-first search.

    Each element carries a reduced word (BFS depth equals length).

    Raises
    ------
    CapExceededError
        if ``|W|`` is larger than ``cap`` (default ``CASIMIR_WEYL_CAP`` or
        60000).
    """
    cap = weyl_cap_from_env() if cap is None else cap
    order = weyl_order(d.lie_type)
    if order > cap:
        raise CapExceededError(f"|W({d.lie_type})| = {order} exceeds cap {cap}")
    gens = d.simple_reflection_matrices
    ident = np.eye(d.rank, dtype=np.int64)
    ident.setflags(write=False)
    elements = [WeylElement(ident, ())]
    seen = {ident.tobytes()}
    head = 0
    while head < len(elements):
        el = elements[head]
        head += 1
        for p, s in enumerate(gens):
            m = el.matrix @ s
            key = m.tobytes()
            if key not in seen:
                seen.add(key)
                m.setflags(write=False)
                elements.append(WeylElement(m, el.word + (d.labels[p],)))
    assert len(elements) == order
    return elements


def apply_word(d: RootDatum, word: Sequence[int], c: Sequence) -> tuple:
    """Apply ``s_{i_1} ... s_{i_t}`` to root coordinates (``s_{i_t}`` first)."""
    v = list(c)
    for lab in reversed(word):
        p = d.index(lab)
        pair = sum(d.cartan[p][j] * v[j] for j in range(d.rank))
        v[p] -= pair
    return tuple(v)


def _word_matrix(d: RootDatum, word: Sequence[int]) -> np.ndarray:
    gens = d.simple_reflection_matrices
    m = np.eye(d.rank, dtype=np.int64)
    for lab in word:
        m = m @ gens[d.index(lab)]
    return m


def longest_word(d: RootDatum) -> tuple[int, ...]:
    """A reduced word for the longest element ``w_0``.

    Built greedily: extend ``w`` by ``s_i`` while ``w(alpha_i)`` is positive.
    No enumeration of the group is needed, so this works for every type.
    """
    word: list[int] = []
    m = np.eye(d.rank, dtype=np.int64)
    gens = d.simple_reflection_matrices
    while True:
        for p in range(d.rank):
            if (m[:, p] >= 0).all():
                word.append(d.labels[p])
                m = m @ gens[p]
                break
        else:
            return tuple(word)


def is_reduced_longest(d: RootDatum, word: Sequence[int]) -> bool:
    """Whether ``word`` is a reduced expression of ``w_0``."""
    if len(word) != len(d.positive_roots):
        return False
    m = _word_matrix(d, word)
    roots = np.asarray(d.positive_roots, dtype=np.int64).T
    return bool((m @ roots <= 0).all())


def diagram_involution(d: RootDatum) -> tuple[int, ...]:
    """Positions permutation ``sigma`` with ``w_0(alpha_i) = -alpha_sigma(i)``."""
    m = _word_matrix(d, longest_word(d))
    sigma = []
    for p in range(d.rank):
        col = -m[:, p]
        (target,) = np.flatnonzero(col)
        assert col[target] == 1
        sigma.append(int(target))
    return tuple(sigma)


def reduced_words(d: RootDatum, word: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every reduced word of the element with reduced word ``word``.

    Defaults to ``w_0``.  The count grows quickly (A_3 has 16, A_4 768).
    """
    gens = d.simple_reflection_matrices

    def rec(m, length):
        if length == 0:
            yield ()
            return
        # w = w' s_i with l(w') = l(w) - 1  iff  w(alpha_i) < 0
        for p in range(d.rank):
            if (m[:, p] <= 0).all():
                for head in rec(m @ gens[p], length - 1):
                    yield head + (d.labels[p],)

    if word is None:
        word = longest_word(d)
    yield from rec(_word_matrix(d, word), len(word))


def random_reduced_word(d: RootDatum, rng) -> tuple[int, ...]:
    """A reduced word of ``w_0`` with letters chosen at random among ascents."""
    word: list[int] = []
    m = np.eye(d.rank, dtype=np.int64)
    gens = d.simple_reflection_matrices
    while True:
        ascents = [p for p in range(d.rank) if (m[:, p] >= 0).all()]
        if not ascents:
            return tuple(word)
        p = ascents[int(rng.integers(len(ascents)))]
        word.append(d.labels[p])
        m = m @ gens[p]


def check_reduced_longest(d: RootDatum, word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(word)
    if not is_reduced_longest(d, word):
        raise NonReducedWordError(f"{word} is not a reduced word for w_0 of {d.lie_type}")
    return word


def bourbaki_labels(t: LieType) -> dict[int, int]:
    """Map from this package's node labels to Bourbaki's numbering."""
    n = t.rank
    if t.family in "AF":
        return {k: k for k in range(1, n + 1)}
    if t.family in "BC":
        return {k: n + 1 - k for k in range(1, n + 1)}
    if t.family == "G":
        return {1: 2, 2: 1}
    if t.family == "D":
        return {0: n - 1, 1: n, **{k: n - k for k in range(2, n)}}
    return {0: 2, 1: 1, **{k: k + 1 for k in range(2, n)}}
