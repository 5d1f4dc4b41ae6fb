"""Kernel tests: canonical form, coordinates, norms, linear ops, literals."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from holderlab.errors import InvalidIndexError, NotInSpaceError
from holderlab.seqvec import (
    ZERO,
    NormKind,
    SeqVec,
    axpy,
    basis_vector,
    c_basis_coefficients,
    coordinate,
    distance,
    format_vec,
    norm,
    parse_vec,
    reconstruct_from_c_basis,
    scale,
    shift_right,
    tail_limit,
)

SUP = NormKind.sup()
L1 = NormKind.lp(1.0)
L2 = NormKind.lp(2.0)
MPN = NormKind.max_pos_neg_l1()


finite_values = st.floats(min_value=-4.0, max_value=4.0,
                          allow_nan=False, allow_infinity=False)


@st.composite
def vectors(draw, tail_zero=False, values=finite_values):
    entries = draw(st.dictionaries(st.integers(1, 50), values, max_size=8))
    tail = 0.0 if tail_zero else draw(values)
    return SeqVec.from_dict(entries, tail)


def random_vec(rng, max_index=40, tail_zero=True, spread=2.0):
    size = int(rng.integers(0, 9))
    idx = rng.integers(1, max_index + 1, size=size)
    vals = rng.uniform(-spread, spread, size=size)
    tail = 0.0 if tail_zero else float(rng.uniform(-spread, spread))
    return SeqVec.from_dict(
        {int(i): float(v) for i, v in zip(idx, vals)}, tail
    )


# ---------------------------------------------------------------------------
# canonical form


def test_from_dict_sorts_and_drops_tail_entries():
    x = SeqVec.from_dict({3: 1.0, 1: 0.25, 7: 0.25}, 0.25)
    assert x.support == ((3, 1.0),)
    assert x.tail == 0.25
    assert x.is_canonical()


def test_from_dict_normalizes_negative_zero():
    x = SeqVec.from_dict({1: -0.0, 2: 1.0}, -0.0)
    assert x == SeqVec.from_dict({2: 1.0}, 0.0)
    assert repr(x.tail) == "0.0"
    assert x.support == ((2, 1.0),)


def test_from_dict_rejects_bad_index():
    with pytest.raises(InvalidIndexError):
        SeqVec.from_dict({0: 1.0})
    with pytest.raises(InvalidIndexError):
        SeqVec.from_dict({-3: 1.0})


def test_renormalizing_is_idempotent():
    x = SeqVec.from_dict({2: 0.5, 9: -1.0}, 0.125)
    again = SeqVec.from_dict(dict(x.support), x.tail)
    assert again == x


@given(vectors())
def test_from_dict_output_is_canonical(x):
    assert x.is_canonical()


@given(st.dictionaries(st.integers(1, 50), finite_values, max_size=8),
       finite_values)
def test_from_sorted_matches_from_dict(entries, tail):
    via_dict = SeqVec.from_dict(entries, tail)
    via_sorted = SeqVec.from_sorted(sorted(entries.items()), tail)
    assert via_dict == via_sorted


@given(vectors(), vectors())
def test_structural_equality_is_coordinatewise(x, y):
    same_coords = all(
        coordinate(x, i) == coordinate(y, i) for i in range(1, 60)
    ) and x.tail == y.tail
    assert (x == y) == same_coords


# ---------------------------------------------------------------------------
# coordinates and tails


def test_coordinate_rules():
    x = SeqVec.from_dict({1: 0.5}, 0.25)
    assert coordinate(x, 7) == 0.25
    y = SeqVec.from_dict({2: 1.0}, 0.0)
    assert coordinate(y, 1) == 0.0
    with pytest.raises(InvalidIndexError):
        coordinate(x, 0)


def test_tail_limit():
    ones_then_zero = SeqVec.from_dict({i: 1.0 for i in range(1, 6)}, 0.0)
    assert tail_limit(ones_then_zero) == 0.0
    assert tail_limit(SeqVec.from_dict({}, 1.0)) == 1.0
    assert tail_limit(SeqVec.from_dict({1: 0.3}, 0.25)) == 0.25


# ---------------------------------------------------------------------------
# norms


def test_norm_examples():
    assert norm(SeqVec.from_dict({1: 1.0, 2: -1.0}), MPN) == 1.0
    assert norm(SeqVec.from_dict({1: 0.6, 2: 0.3}), L1) == 0.6 + 0.3
    assert norm(SeqVec.from_dict({1: 0.9}, 0.25), SUP) == 0.9
    assert norm(SeqVec.from_dict({}, 0.25), SUP) == 0.25


def test_lp_and_mpn_need_zero_tail():
    x = SeqVec.from_dict({1: 1.0}, 0.5)
    for kind in (L1, L2, MPN):
        with pytest.raises(NotInSpaceError):
            norm(x, kind)


def test_norm_kind_validation():
    with pytest.raises(ValueError):
        NormKind.lp(0.5)
    with pytest.raises(ValueError):
        NormKind("sup", p=2.0)
    with pytest.raises(ValueError):
        NormKind("nonsense")


@pytest.mark.parametrize("kind,tail_zero,seed", [
    (SUP, False, 101),
    (L1, True, 102),
    (L2, True, 103),
    (MPN, True, 104),
], ids=["sup", "l1", "l2", "max_pos_neg_l1"])
def test_norm_axioms_on_sampled_pairs(kind, tail_zero, seed):
    """Nonnegativity/definiteness, absolute homogeneity to 1e-14 relative,
    and the triangle inequality to 1e-12 absolute, on 10^4 sampled pairs."""
    rng = np.random.default_rng(seed)
    for _ in range(10_000):
        x = random_vec(rng, tail_zero=tail_zero)
        y = random_vec(rng, tail_zero=tail_zero)
        nx, ny = norm(x, kind), norm(y, kind)
        assert nx >= 0.0
        assert (nx == 0.0) == (x == ZERO)
        a = float(rng.uniform(-3.0, 3.0))
        na = norm(scale(a, x), kind)
        assert abs(na - abs(a) * nx) <= 1e-14 * max(1.0, abs(a) * nx)
        ns = norm(axpy(1.0, x, 1.0, y), kind)
        assert ns <= nx + ny + 1e-12


def test_mpn_sandwiched_by_l1():
    rng = np.random.default_rng(7)
    for _ in range(2000):
        x = random_vec(rng, tail_zero=True)
        m = norm(x, MPN)
        l1 = norm(x, L1)
        slack = 1e-15 * max(1.0, l1)
        assert m <= l1 + slack
        assert l1 <= 2.0 * m + slack


def test_distance_sup_sees_tail_difference():
    x = SeqVec.from_dict({}, 0.5)
    y = SeqVec.from_dict({1: 0.5}, 0.0)
    assert distance(x, y, SUP) == 0.5


def test_distance_lp_rejects_tail_mismatch():
    x = SeqVec.from_dict({}, 0.5)
    with pytest.raises(NotInSpaceError):
        distance(x, ZERO, L1)
    # equal nonzero tails cancel, so the difference is back in the space
    y = SeqVec.from_dict({1: 0.25}, 0.5)
    assert distance(x, y, L1) == 0.25


@given(vectors(), vectors())
def test_distance_is_symmetric(x, y):
    assert distance(x, y, SUP) == distance(y, x, SUP)
    assert distance(x, x, SUP) == 0.0


# ---------------------------------------------------------------------------
# linear operations


def test_axpy_examples():
    e1 = basis_vector(1)
    assert axpy(1.0, e1, -1.0, e1) == ZERO
    half = axpy(0.5, e1, 0.5, basis_vector(2))
    assert half == SeqVec.from_dict({1: 0.5, 2: 0.5})
    ones = SeqVec.from_dict({}, 1.0)
    dip = SeqVec.from_dict({1: 0.0}, 1.0)
    diff = axpy(1.0, ones, -1.0, dip)
    assert diff == SeqVec.from_dict({1: 1.0}, 0.0)


@given(vectors(), vectors(),
       st.floats(min_value=-3, max_value=3, allow_nan=False),
       st.floats(min_value=-3, max_value=3, allow_nan=False))
def test_axpy_is_coordinatewise(x, y, a, b):
    z = axpy(a, x, b, y)
    assert z.tail == a * x.tail + b * y.tail
    for i in list(dict(x.support)) + list(dict(y.support)) + [59]:
        assert coordinate(z, i) == a * coordinate(x, i) + b * coordinate(y, i)


@given(vectors())
def test_scale_edge_cases(x):
    assert scale(1.0, x) == x
    assert scale(0.0, x) == ZERO


def test_shift_right_moves_support_and_keeps_tail():
    x = SeqVec.from_dict({1: 0.6, 2: 0.3}, 0.0)
    assert shift_right(x) == SeqVec.from_dict({2: 0.6, 3: 0.3}, 0.0)
    assert norm(shift_right(x), L1) == norm(x, L1)
    withtail = SeqVec.from_dict({1: 0.3}, 0.25)
    s = shift_right(withtail)
    assert coordinate(s, 1) == 0.0
    assert coordinate(s, 2) == 0.3
    assert s.tail == 0.25


# ---------------------------------------------------------------------------
# basis coefficients against the all-ones sequence


def test_c_basis_examples():
    t, coeffs = c_basis_coefficients(SeqVec.from_dict({}, 1.0))
    assert t == 1.0 and coeffs == ZERO
    t, coeffs = c_basis_coefficients(basis_vector(1))
    assert t == 0.0 and coeffs == basis_vector(1)
    t, coeffs = c_basis_coefficients(SeqVec.from_dict({1: 0.0}, 1.0))
    assert t == 1.0 and coeffs == SeqVec.from_dict({1: -1.0})


dyadic_values = st.integers(min_value=-(2 ** 22), max_value=2 ** 22).map(
    lambda k: k / 2 ** 20
)


@given(vectors(values=dyadic_values))
def test_c_basis_round_trip_exact_on_dyadics(x):
    """On a dyadic grid the subtraction v - tail is exact, so the round trip
    is bit-for-bit."""
    t, coeffs = c_basis_coefficients(x)
    assert t == x.tail
    assert coeffs.tail == 0.0
    assert reconstruct_from_c_basis(t, coeffs) == x


@given(vectors())
def test_c_basis_round_trip_close_in_general(x):
    t, coeffs = c_basis_coefficients(x)
    back = reconstruct_from_c_basis(t, coeffs)
    assert back.tail == x.tail
    for i in range(1, 55):
        v, w = coordinate(x, i), coordinate(back, i)
        assert abs(v - w) <= 4 * math.ulp(max(abs(v), abs(t)))


# ---------------------------------------------------------------------------
# literals


def test_format_examples():
    assert format_vec(SeqVec.from_dict({1: 0.5})) == "{1:0.5}"
    assert format_vec(SeqVec.from_dict({1: 0.5}, 0.25)) == "{1:0.5; tail:0.25}"
    assert format_vec(ZERO) == "{}"


@given(vectors())
def test_literal_round_trip(x):
    assert parse_vec(format_vec(x)) == x


@pytest.mark.parametrize("bad", [
    "1:2",
    "{1:0.5",
    "{2:1, 1:3}",
    "{1:1, 1:2}",
    "{1}",
    "{1:1; 0.5}",
])
def test_parse_rejects_malformed_literals(bad):
    with pytest.raises(ValueError):
        parse_vec(bad)


def test_parse_rejects_bad_index():
    with pytest.raises(InvalidIndexError):
        parse_vec("{0:1.0}")
