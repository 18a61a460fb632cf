from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ruledmotion import _kernels, _pykernels

from .strategies import rationals

ckernels = pytest.importorskip("ruledmotion._ckernels")

coeff_lists = st.lists(rationals, max_size=6)
nonzero_lists = st.lists(rationals, min_size=1, max_size=4).filter(lambda cs: cs[-1] != 0)


def test_backend_reported():
    assert _kernels.BACKEND in ("compiled", "python")


@given(coeff_lists, coeff_lists)
@settings(max_examples=100)
def test_ring_operations_agree(a, b):
    for name in ("mul", "add", "sub"):
        assert getattr(ckernels, name)(list(a), list(b)) == getattr(_pykernels, name)(list(a), list(b))


@given(coeff_lists, nonzero_lists)
@settings(max_examples=100)
def test_division_agrees(a, b):
    assert ckernels.divmod_(list(a), list(b)) == _pykernels.divmod_(list(a), list(b))


quat_lists = st.lists(coeff_lists, min_size=4, max_size=4)


@given(quat_lists, quat_lists)
@settings(max_examples=100)
def test_hamilton_agrees(p, q):
    assert tuple(ckernels.hamilton(p, q)) == tuple(_pykernels.hamilton(p, q))


@given(coeff_lists, rationals)
@settings(max_examples=100)
def test_evaluate_agrees(a, x):
    assert ckernels.evaluate(list(a), x) == _pykernels.evaluate(list(a), x)


def test_float_inputs_agree():
    a = [0.5, -1.25, 3.0]
    b = [2.0, 0.1]
    assert ckernels.mul(a, b) == _pykernels.mul(a, b)
    assert ckernels.evaluate(a, 0.3) == _pykernels.evaluate(a, 0.3)
    assert ckernels.evaluate([Fraction(1, 3)], Fraction(2)) == Fraction(1, 3)
