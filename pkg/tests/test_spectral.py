from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic.cycles import descent, parse_cycle, rotation_cycle
from cyclic.spectral import (
    format_rational,
    iterate_until_stable,
    parse_rational,
    stationary_by_iteration,
    stationary_vector,
    verify_eigen,
)
from cyclic.transition import pair_matrix, transition_matrix

from .conftest import CYC5, CYC6, CYC8, cycles_up_to, q_cycles

GOLDEN = {
    CYC5: ((32, 38, 58, 46, 68), 3**5 - 1),
    CYC6: ((546, 819, 546, 819, 546, 819), 4**6 - 1),
    CYC8: ((21284, 52584, 53836, 67608, 21284, 52584, 53836, 67608), 5**8 - 1),
}


def _sympy_stationary(m):
    q, c = m.q, m.column_sum
    mat = sympy.Matrix(m.entries) - c * sympy.eye(q)
    (v,) = mat.nullspace()
    v = v / sum(v)
    return tuple(Fraction(int(x.p), int(x.q)) for x in v)


@pytest.mark.parametrize("text", list(GOLDEN))
def test_golden_stationary_vectors(text):
    nums, den = GOLDEN[text]
    ell = stationary_vector(transition_matrix(parse_cycle(text)))
    assert ell == tuple(Fraction(a, den) for a in nums)


def test_iteration_snapshot_example():
    snap = stationary_by_iteration(transition_matrix(parse_cycle(CYC5)), 40)
    assert all(col == (32, 38, 58, 46, 68) for col in zip(*snap))


@pytest.mark.parametrize("text", list(GOLDEN))
def test_iteration_stabilizes_to_golden(text):
    nums, _ = GOLDEN[text]
    n, col = iterate_until_stable(transition_matrix(parse_cycle(text)))
    assert col == nums
    a = transition_matrix(parse_cycle(text))
    assert stationary_by_iteration(a, n) == stationary_by_iteration(a, n + 1)


def test_rotation_cycle_rejected():
    a = transition_matrix(rotation_cycle(5, 2))
    with pytest.raises(ValueError):
        stationary_vector(a)
    with pytest.raises(ValueError):
        stationary_by_iteration(a, 10)


def test_verify_eigen():
    a = transition_matrix(parse_cycle(CYC5))
    ell = stationary_vector(a)
    assert verify_eigen(a, ell)
    swapped = (ell[1], ell[0]) + ell[2:]
    assert not verify_eigen(a, swapped)
    # first row of A raised by one everywhere
    b = pair_matrix(parse_cycle(CYC5), (1, 0, 0, 0, 0))
    ell_b = stationary_vector(b)
    assert verify_eigen(b, ell_b)
    assert ell_b == _sympy_stationary(b)
    with pytest.raises(ValueError):
        verify_eigen(a, ell[:4])


def test_rational_format():
    assert format_rational(Fraction(242, 484)) == "1/2"
    assert parse_rational("16/242") == Fraction(8, 121)


def test_exhaustive_minimal_matrices():
    for sigma in cycles_up_to(7, qmin=3):
        if descent(sigma) < 2:
            continue
        a = transition_matrix(sigma)
        ell = stationary_vector(a)
        assert all(x > 0 for x in ell) and sum(ell) == 1
        assert stationary_vector(a) == ell
        scaled = [x * (a.column_sum**sigma.q - 1) for x in ell]
        assert all(x.denominator == 1 for x in scaled)
        _, col = iterate_until_stable(a)
        assert col == tuple(int(x) for x in scaled)


def _windings(q, total_max):
    for p in product(range(total_max + 1), repeat=q):
        if 0 < sum(p) <= total_max:
            yield p


def test_pair_matrices_small_q():
    for sigma in cycles_up_to(5):
        for p in _windings(sigma.q, 3):
            b = pair_matrix(sigma, p)
            ell = stationary_vector(b)
            assert verify_eigen(b, ell)
            scaled = [x * (b.column_sum**sigma.q - 1) for x in ell]
            assert all(x.denominator == 1 for x in scaled)
            _, col = iterate_until_stable(b)
            assert col == tuple(int(x) for x in scaled)


@st.composite
def pair_inputs(draw):
    sigma = draw(q_cycles(max_q=7))
    p = draw(st.lists(st.integers(0, 3), min_size=sigma.q, max_size=sigma.q).filter(lambda v: 0 < sum(v) <= 3))
    return sigma, tuple(p)


@settings(max_examples=60, deadline=None)
@given(pair_inputs())
def test_pair_matrices_against_sympy(inputs):
    sigma, p = inputs
    b = pair_matrix(sigma, p)
    ell = stationary_vector(b)
    assert ell == _sympy_stationary(b)
    _, col = iterate_until_stable(b)
    assert col == tuple(int(x * (b.column_sum**sigma.q - 1)) for x in ell)


@settings(max_examples=40, deadline=None)
@given(q_cycles(min_q=4, max_q=9).filter(lambda s: descent(s) >= 2))
def test_minimal_against_sympy(sigma):
    a = transition_matrix(sigma)
    assert stationary_vector(a) == _sympy_stationary(a)
