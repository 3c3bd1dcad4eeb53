from __future__ import annotations

import cmath
import inspect
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from poscasimir import datum
from poscasimir.casimir import (ParamContext, act_params_word, central_character, phi,
                                product_D, root_com_check, root_com_exhaustive, safe_t_max,
                                virtual_K_scalar, virtual_lowest_point, virtual_weights,
                                weyl_character_oracle)
from poscasimir.errors import ConsistencyError, DegeneratePointError, NumericRangeError
from poscasimir.rootdata import diagram_involution, enumerate_weyl, longest_word, reduced_words
from poscasimir.weights import fundamental_dims, fundamental_rep

BUILT = ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "F4", "G2"]


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def test_a1_values():
    d = datum("A1")
    # [DERIVED] e^{pi} + e^{-pi}
    assert phi(d, [0.5]).c[0] == pytest.approx(math.exp(math.pi) + math.exp(-math.pi), rel=1e-15)
    assert phi(d, [0.0]).c == (2.0,)


def test_a2_closed_form():
    # [DERIVED] weights of V_1 for A_2 in root coordinates: (2/3,1/3), (-1/3,1/3), (-1/3,-2/3)
    d = datum("A2")
    t1, t2 = 0.13, 0.31
    e = lambda a, b: math.exp(-4 * math.pi * (a * t1 + b * t2))  # noqa: E731
    expected = e(2 / 3, 1 / 3) + e(-1 / 3, 1 / 3) + e(-1 / 3, -2 / 3)
    assert phi(d, [t1, t2]).c[0] == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("name", BUILT)
def test_cusp_is_dimension_vector(name):
    d = datum(name)
    assert phi(d, [0.0] * d.rank).c == tuple(float(k) for k in fundamental_dims(d))


def test_phi_has_no_quantum_parameter():
    for fn in (phi, central_character, product_D, weyl_character_oracle):
        assert "b" not in inspect.signature(fn).parameters


def test_bad_parameters():
    d = datum("A2")
    with pytest.raises(ValueError):
        phi(d, [0.1])
    with pytest.raises(ValueError):
        phi(d, [0.1, float("nan")])
    with pytest.raises(ValueError):
        central_character(d, fundamental_rep(datum("B2"), 1), [0.1, 0.1])


@pytest.mark.parametrize("name", ["F4", "E6", "B3", "G2"])
def test_numeric_range(name):
    d = datum(name)
    limit = safe_t_max(d)
    phi(d, [limit * (1 - 1e-9)] * d.rank)
    with pytest.raises(NumericRangeError):
        phi(d, [limit * 1.05] * d.rank)
    with pytest.raises(OverflowError):
        phi(d, [limit * 1.05] * d.rank)


def test_safe_range_of_f4_is_below_three():
    assert 2.5 < safe_t_max(datum("F4")) < 3.0


def test_degenerate_oracle_point():
    d = datum("B2")
    with pytest.raises(DegeneratePointError):
        weyl_character_oracle(d, 1, [0.0, 0.4])
    with pytest.raises(DegeneratePointError):
        weyl_character_oracle(d, 1, [0.3, -0.3])


@given(st.sampled_from(BUILT), st.integers(0, 2**32 - 1))
def test_oracle_equivalence(name, seed):
    d = datum(name)
    rng = np.random.default_rng(seed)
    t = [float(x) for x in rng.uniform(0.01, min(2.0, safe_t_max(d)), d.rank)]
    c = phi(d, t).c
    for p, lab in enumerate(d.labels):
        assert _rel(c[p], weyl_character_oracle(d, lab, t)) <= 1e-9


@given(st.sampled_from(BUILT), st.integers(0, 2**32 - 1))
def test_weyl_invariance(name, seed):
    d = datum(name)
    rng = np.random.default_rng(seed)
    t = [float(x) for x in rng.uniform(0.0, 0.4, d.rank)]
    elements = enumerate_weyl(d)
    base = phi(d, t).c
    for idx in rng.integers(0, len(elements), 25):
        moved = phi(d, act_params_word(d, elements[int(idx)].word, t)).c
        assert all(_rel(a, b) <= 1e-9 for a, b in zip(base, moved))


@given(st.sampled_from(BUILT),
       st.lists(st.one_of(st.just(0.0), st.floats(1e-6, 3.0)), min_size=4, max_size=4))
def test_positivity_and_lower_bound(name, t):
    d = datum(name)
    t = [min(x, safe_t_max(d)) for x in t[:d.rank]]
    c = phi(d, t).c
    dims = fundamental_dims(d)
    if any(t):
        assert all(x > k for x, k in zip(c, dims))
    else:
        assert c == tuple(float(k) for k in dims)


@given(st.sampled_from(BUILT), st.lists(st.floats(-1.0, 1.0), min_size=4, max_size=4))
def test_sigma_symmetry(name, t):
    # w_0 sends t to (-t_sigma(i)); relabelling t by sigma permutes the characters
    d = datum(name)
    t = t[:d.rank]
    sigma = diagram_involution(d)
    base = phi(d, t).c
    w0 = phi(d, [-t[sigma[p]] for p in range(d.rank)]).c
    assert all(_rel(a, b) <= 1e-9 for a, b in zip(base, w0))
    swapped = phi(d, [t[sigma[p]] for p in range(d.rank)]).c
    assert all(_rel(swapped[p], base[sigma[p]]) <= 1e-9 for p in range(d.rank))


def test_sigma_nontrivial_for_a2():
    d = datum("A2")
    c = phi(d, [0.1, 0.3]).c
    assert c[0] != pytest.approx(c[1])
    assert phi(d, [0.3, 0.1]).c == pytest.approx(c[::-1], rel=1e-12)


@pytest.mark.parametrize("name", BUILT)
def test_D_vanishes_on_faces(name):
    d = datum(name)
    rng = np.random.default_rng(1)
    for p in range(d.rank):
        t = [float(x) for x in rng.uniform(0.0, 1.0, d.rank)]
        t[p] = 0.0
        total, d_s, d_l = product_D(d, t)
        assert total == 0.0
    total, d_s, d_l = product_D(d, [0.2] * d.rank)
    assert total == pytest.approx(d_s * d_l, rel=1e-15)
    if d.lie_type.simply_laced:
        assert d_l == 1.0
    # D has sign (-1)^{|Delta+|} away from the walls
    assert math.copysign(1, total) == (-1) ** len(d.positive_roots)


def test_D_a1():
    d = datum("A1")
    c = phi(d, [0.3]).c[0]
    assert product_D(d, [0.3])[0] == pytest.approx(4 - c * c, rel=1e-13)


@pytest.mark.parametrize("name,count", [("A2", 1022), ("B2", 1022), ("G2", 1022), ("A3", 29523)])
def test_root_com_exhaustive(name, count):
    assert root_com_exhaustive(datum(name), 8) == (count, 0)


@given(st.sampled_from(["D4", "F4", "A4"]), st.lists(st.integers(0, 3), max_size=10),
       st.integers(0, 3))
def test_root_com_random_words(name, letters, k):
    d = datum(name)
    word = tuple(d.labels[i % d.rank] for i in letters)
    assert root_com_check(d, word, d.labels[k % d.rank])


def test_param_context():
    with pytest.raises(ValueError):
        ParamContext.for_datum(datum("A1"), 1.0)
    with pytest.raises(ValueError):
        ParamContext.for_datum(datum("A1"), 0.0)
    ctx = ParamContext.for_datum(datum("G2"), 0.6)
    assert ctx.b_i == pytest.approx((0.6, 0.6 / math.sqrt(3)))
    assert ctx.Q_i[0] == pytest.approx(0.6 + 1 / 0.6)
    assert ctx.q_i[1] == pytest.approx(cmath.exp(1j * math.pi * 0.12))


def test_virtual_a1_base_case():
    d = datum("A1")
    ctx = ParamContext.for_datum(d, 0.6)
    vp = virtual_lowest_point(d, (1,), ctx, [1.0])
    q = 0.6 + 1 / 0.6
    # [DERIVED] v_1 = -2 lambda - i Q / 2
    assert vp.v[0] == pytest.approx(-2 - 0.5j * q)
    lowest, highest = virtual_weights(ctx, [1.0], diagram_involution(d))
    assert lowest[0] == pytest.approx(q / 2 - 1j)
    assert highest[0] == pytest.approx(-q / 2 + 1j)


def test_virtual_zero_lambda_is_imaginary():
    d = datum("A2")
    ctx = ParamContext.for_datum(d, 0.7)
    vp = virtual_lowest_point(d, longest_word(d), ctx, [0.0, 0.0])
    assert all(v.real == 0 and v.imag < 0 for v in vp.v)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "C3", "D4"])
def test_virtual_word_independence(name):
    d = datum(name)
    rng = np.random.default_rng(5)
    words = [w for _, w in zip(range(6), reduced_words(d))]
    for b in (0.3, 0.6, 0.9):
        ctx = ParamContext.for_datum(d, b)
        lam = [float(x) for x in rng.uniform(0.0, 2.0, d.rank)]
        scalars = [[virtual_K_scalar(d, virtual_lowest_point(d, w, ctx, lam), ctx, lam, lab)
                    for lab in d.labels] for w in words]
        for row in scalars[1:]:
            assert row == pytest.approx(scalars[0], rel=1e-10)


def test_virtual_inconsistent_point_is_detected():
    d = datum("A2")
    ctx = ParamContext.for_datum(d, 0.5)
    vp = virtual_lowest_point(d, longest_word(d), ctx, [0.3, 0.8])
    with pytest.raises(ConsistencyError):
        # the point belongs to another lambda
        virtual_K_scalar(d, vp, ctx, [0.3, 0.9], 1)


def test_virtual_weights_validation():
    ctx = ParamContext.for_datum(datum("A2"), 0.5)
    with pytest.raises(ValueError):
        virtual_weights(ctx, [0.1], (1, 0))
