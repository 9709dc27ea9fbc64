import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import ref_distilled_edge, ref_majorized, ref_tensor_spectrum
from qbraess.concurrence import INV_SQRT2, DomainError
from qbraess.distillation import (
    ResourceError,
    distilled_alpha,
    distilled_concurrence,
    majorization_feasible,
    tensor_spectrum,
)

A = 2**-0.25


def test_spectrum_single_copy():
    np.testing.assert_allclose(tensor_spectrum(INV_SQRT2, 1), [0.707106781, 0.292893219], atol=1e-9)


def test_spectrum_two_copies():
    spec = tensor_spectrum(INV_SQRT2, 2)
    np.testing.assert_allclose(spec, [0.5, 0.207106781, 0.207106781, 0.085786438], atol=1e-9)
    assert spec.sum() == pytest.approx(1.0, abs=1e-12)


def test_spectrum_product_state():
    np.testing.assert_array_equal(tensor_spectrum(1.0, 3), [1, 0, 0, 0, 0, 0, 0, 0])


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_spectrum_matches_brute_force(n):
    alpha_sq = Fraction(7, 10)
    ref = [float(v) for v in ref_tensor_spectrum(alpha_sq, n)]
    np.testing.assert_allclose(tensor_spectrum(0.7, n), ref, atol=1e-15)


def test_spectrum_cap():
    with pytest.raises(ResourceError):
        tensor_spectrum(0.7, 21)
    with pytest.raises(DomainError):
        tensor_spectrum(0.3, 2)


@given(st.floats(0.5, 1.0), st.integers(1, 12))
@settings(max_examples=50)
def test_spectrum_normalized_sorted(alpha_sq, n):
    spec = tensor_spectrum(alpha_sq, n)
    assert spec.size == 2**n
    assert abs(spec.sum() - 1.0) <= 1e-10
    assert np.all(np.diff(spec) <= 0)


def test_distilled_alpha_examples():
    assert distilled_alpha(A, 6, 3) == pytest.approx(INV_SQRT2, abs=1e-12)
    assert distilled_alpha(A, 6, 4) == pytest.approx(2 ** (-0.375), abs=1e-12)
    assert distilled_alpha(A, 6, 4) == pytest.approx(0.771105413, abs=1e-9)
    assert distilled_alpha(A, 6, 6) == pytest.approx(A, abs=1e-12)
    with pytest.raises(DomainError):
        distilled_alpha(A, 3, 4)


def test_distilled_concurrence_examples():
    assert distilled_concurrence(A, 6, 3) == 1.0
    # 30-digit value of 2 a sqrt(1 - a^2), a^2 = 2^-3/4
    assert distilled_concurrence(A, 6, 4) == pytest.approx(0.981937201470820681, abs=1e-12)
    assert distilled_concurrence(A, 40, 40) == pytest.approx(0.910179721124454683, abs=1e-12)


@pytest.mark.parametrize("n_half", range(1, 11))
def test_matches_piecewise_rule(n_half):
    for m in range(n_half, 2 * n_half + 1):
        ref = float(ref_distilled_edge(n_half, m))
        assert distilled_concurrence(A, 2 * n_half, m) == pytest.approx(ref, abs=1e-13)


@given(st.floats(INV_SQRT2, 0.999), st.integers(1, 30), st.data())
def test_distilled_concurrence_nonincreasing(a, n, data):
    m1 = data.draw(st.integers(1, n))
    m2 = data.draw(st.integers(m1, n))
    assert distilled_concurrence(a, n, m1) >= distilled_concurrence(a, n, m2) - 1e-15
    if (a * a) ** (n / m1) <= 0.5:
        assert distilled_concurrence(a, n, m1) == 1.0
    assert INV_SQRT2 - 1e-15 <= distilled_alpha(a, n, m1) <= a + 1e-15


def test_majorization_examples():
    s = tensor_spectrum(0.7, 3)
    assert majorization_feasible(s, s)
    assert majorization_feasible(tensor_spectrum(INV_SQRT2, 4), tensor_spectrum(2 ** (-2 / 3), 3))
    assert not majorization_feasible(tensor_spectrum(INV_SQRT2, 1), tensor_spectrum(0.5, 1))


@given(
    st.lists(st.floats(0, 1), min_size=1, max_size=8),
    st.lists(st.floats(0, 1), min_size=1, max_size=8),
)
def test_majorization_agrees_with_reference(a, b):
    sa, sb = sum(a), sum(b)
    if sa == 0 or sb == 0:
        return
    a = [v / sa for v in a]
    b = [v / sb for v in b]
    assert majorization_feasible(a, b) == ref_majorized(a, b)


@pytest.mark.parametrize("n_half", range(1, 7))
def test_distilled_transforms_are_feasible(n_half):
    n = 2 * n_half
    src = tensor_spectrum(A * A, n)
    for m in range(n_half, n + 1):
        tgt = tensor_spectrum(distilled_alpha(A, n, m) ** 2, m)
        assert majorization_feasible(src, tgt), (n, m)
