from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from poscasimir import datum
from poscasimir.errors import DimensionBoundError, NonDominantError
from poscasimir.rootdata import WeightVec, apply_word
from poscasimir.weights import (audit_closed_form_dims, fundamental_dims, fundamental_rep,
                                weight_system, weyl_dim)

# [DERIVED] fundamental dimensions from the standard tables, in node-label order
FUNDAMENTAL_DIMS = {
    "B2": (4, 5), "C2": (5, 4), "B3": (8, 21, 7), "C3": (14, 14, 6), "D4": (8, 8, 28, 8),
    "F4": (52, 1274, 273, 26), "G2": (14, 7),
    "E6": (78, 27, 351, 2925, 351, 27),
    "E7": (912, 133, 8645, 365750, 27664, 1539, 56),
    "E8": (147250, 3875, 6696000, 6899079264, 146325270, 2450240, 30380, 248),
}


@pytest.mark.parametrize("n", range(1, 9))
def test_type_a_dims_are_binomials(n):
    assert fundamental_dims(datum(f"A{n}")) == tuple(math.comb(n + 1, k) for k in range(1, n + 1))


@pytest.mark.parametrize("name", sorted(FUNDAMENTAL_DIMS))
def test_fundamental_dims(name):
    assert fundamental_dims(datum(name)) == FUNDAMENTAL_DIMS[name]


BUILT = ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "F4", "G2"]


@pytest.mark.parametrize("name", BUILT)
def test_fundamental_weight_systems(name):
    d = datum(name)
    for p, lab in enumerate(d.labels):
        ws = fundamental_rep(d, lab)
        assert ws.dim == fundamental_dims(d)[p]
        _check_system(d, ws)


def test_e6_minuscule():
    d = datum("E6")
    ws = fundamental_rep(d, 1)
    assert ws.dim == 27 and len(ws) == 27 and set(ws.entries.values()) == {1}
    _check_system(d, ws)


def _check_system(d, ws):
    # weights sum to zero and lie below the highest weight
    total = [sum(rc[i] * m for rc, m in ws.root_coords) for i in range(d.rank)]
    assert total == [0] * d.rank
    top = d.weight_to_root(ws.highest)
    for rc, _ in ws.root_coords:
        diff = [a - b for a, b in zip(top, rc)]
        assert all(x.denominator == 1 and x >= 0 for x in diff)
    # multiplicities are Weyl invariant
    mults = dict(ws.root_coords)
    for rc, m in ws.root_coords:
        for lab in d.labels:
            assert mults[tuple(Fraction(x) for x in apply_word(d, (lab,), rc))] == m


@pytest.mark.parametrize("name,label,zero_mult,distinct", [
    ("G2", 1, 2, 13), ("G2", 2, 1, 7), ("D4", 2, 4, 25), ("B3", 2, 3, 19),
    ("F4", 1, 4, 49), ("F4", 4, 2, 25), ("A2", 1, 0, 3), ("C3", 2, 2, 13),
])
def test_zero_weight_multiplicities(name, label, zero_mult, distinct):
    ws = fundamental_rep(datum(name), label)
    assert ws.entries.get((0,) * len(ws.highest), 0) == zero_mult
    assert len(ws) == distinct


def test_a2_adjoint():
    d = datum("A2")
    ws = weight_system(d, (1, 1))
    assert ws.dim == 8 and ws.entries[(0, 0)] == 2


def test_weight_vec_input():
    d = datum("B2")
    hw = WeightVec((1, 0), "weight")
    assert weyl_dim(d, hw) == weyl_dim(d, (1, 0)) == weyl_dim(d, hw.to_root(d))


def test_non_dominant_and_bound():
    d = datum("A2")
    with pytest.raises(NonDominantError):
        weight_system(d, (-1, 1))
    with pytest.raises(NonDominantError):
        weyl_dim(d, (Fraction(1, 2), 0))
    with pytest.raises(DimensionBoundError):
        fundamental_rep(datum("E7"), 3)
    with pytest.raises(DimensionBoundError):
        weight_system(d, (3, 3), bound=10)


def test_closed_form_dimension_audit():
    for n in range(1, 6):
        rows = audit_closed_form_dims(datum(f"A{n}").lie_type)
        assert not any(r["match"] for r in rows)
    rows = audit_closed_form_dims(datum("D4").lie_type)
    assert [r["node"] for r in rows if not r["match"]] == [2, 3]
    for name in ("B2", "B3", "B4", "C2", "C3", "C4", "E6", "E7", "E8", "F4", "G2"):
        assert all(r["match"] for r in audit_closed_form_dims(datum(name).lie_type)), name


SMALL_RANK = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"]


@given(st.sampled_from(SMALL_RANK), st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_random_highest_weights(name, coords):
    d = datum(name)
    hw = tuple(coords[:d.rank])
    assume(weyl_dim(d, hw) <= 1500)
    ws = weight_system(d, hw)
    assert ws.dim == weyl_dim(d, hw)
    assert ws.entries[hw] == 1
    _check_system(d, ws)


@given(st.sampled_from(SMALL_RANK), st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_weyl_dim_is_positive_integer(name, coords):
    d = datum(name)
    assert weyl_dim(d, tuple(coords[:d.rank])) >= 1
