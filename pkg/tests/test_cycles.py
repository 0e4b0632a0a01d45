import math

import pytest
from hypothesis import given
from sympy.combinatorics import Permutation

from cyclic.cycles import (
    Cycle,
    all_cycles,
    canonical_representative,
    combinatorial_type,
    conjugate_by_rotation,
    cycle_from_table,
    descent,
    enumerate_types,
    parse_cycle,
    rho,
    rotation_cycle,
    rotation_number,
    symmetry_order,
)
from cyclic.errors import BudgetExceeded, CycleParseError

from .conftest import CYC5, CYC6, CYC8, cycles_up_to, q_cycles


def test_cycle_notation_example():
    assert parse_cycle(CYC5).table == (2, 4, 1, 5, 3)
    assert parse_cycle("(1 2)").table == (2, 1)


@pytest.mark.parametrize(
    "text, position",
    [("(1 2 2 4 5)", 2), ("(2 1 3)", 0), ("(1 2 7)", 2), ("(1 x 3)", 1)],
)
def test_cycle_notation_errors(text, position):
    with pytest.raises(CycleParseError) as info:
        parse_cycle(text)
    assert info.value.position == position


def test_one_line_input():
    assert parse_cycle("2 4 1 5 3", one_line=True) == parse_cycle(CYC5)
    with pytest.raises(CycleParseError):
        cycle_from_table([2, 1, 4, 3])  # two 2-cycles
    with pytest.raises(CycleParseError):
        parse_cycle("1 2 3", one_line=True)


def test_notation_round_trip():
    for sigma in cycles_up_to(6):
        assert parse_cycle(str(sigma)) == sigma


def test_rotation_cycle():
    assert str(rotation_cycle(5, 2)) == "(1 3 5 2 4)"
    assert rotation_cycle(5, 1) == rho(5)
    assert str(rotation_cycle(5, 3)) == "(1 4 2 5 3)"
    assert str(rotation_cycle(5, 4)) == "(1 5 4 3 2)"
    with pytest.raises(ValueError):
        rotation_cycle(4, 2)
    assert rotation_number(rotation_cycle(7, 3)) == (3, 7)
    assert rotation_number(parse_cycle(CYC5)) is None


@pytest.mark.parametrize(
    "text, d",
    [(CYC5, 3), ("(1 3 2 6 4 5)", 3), ("(1 5 4 6 2 3)", 4), ("(1 2 3 5 4)", 2),
     ("(1 4 5 3 2)", 2), ("(1 3 5 4 2)", 3), (CYC6, 4), (CYC8, 5)],
)
def test_descent_examples(text, d):
    assert descent(parse_cycle(text)) == d


def test_rotation_cycles_have_descent_one():
    for q in range(2, 10):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                assert descent(rotation_cycle(q, p)) == 1


@pytest.mark.parametrize("text, s", [(CYC6, 3), (CYC8, 2), (CYC5, 1), ("(1 2 3 4 5)", 5)])
def test_symmetry_order_examples(text, s):
    assert symmetry_order(parse_cycle(text)) == s


def _sympy_conjugate(sigma, j):
    # independent route: rho^{-j} sigma rho^{j} via sympy on 0..q-1
    q = sigma.q
    s = Permutation([v - 1 for v in sigma.table])
    r = Permutation([(i + 1) % q for i in range(q)])
    # sympy composes left to right: (p*q)(i) = q(p(i))
    conj = (r**j) * s * (r ** (-j))
    return Cycle(tuple(conj(i) + 1 for i in range(q)))


def test_conjugation_examples():
    assert str(conjugate_by_rotation(parse_cycle(CYC5), 3)) == "(1 2 5 3 4)"
    assert str(conjugate_by_rotation(parse_cycle(CYC8), 3)) == "(1 4 2 3 5 8 6 7)"
    sigma = parse_cycle(CYC5)
    assert conjugate_by_rotation(sigma, 0) == sigma
    assert conjugate_by_rotation(sigma, 5) == sigma


def test_conjugation_matches_sympy():
    for sigma in cycles_up_to(6):
        for j in range(sigma.q):
            assert conjugate_by_rotation(sigma, j) == _sympy_conjugate(sigma, j)


def test_combinatorial_type_examples():
    assert combinatorial_type(rho(5)).representatives == (rho(5),)
    t = combinatorial_type(parse_cycle(CYC5))
    assert t.size == 5 and len(set(t.representatives)) == 5
    assert parse_cycle(CYC5) in t
    # brute force: distinct sympy conjugates
    sigma = parse_cycle(CYC6)
    brute = {_sympy_conjugate(sigma, j) for j in range(6)}
    assert len(brute) == 2
    t = combinatorial_type(sigma)
    assert set(t.representatives) == brute and t.size * symmetry_order(sigma) == 6


def test_type_representatives_q5():
    types = enumerate_types(5)
    assert len(types) == 8
    expected = ["(1 2 3 4 5)", "(1 3 5 2 4)", "(1 4 2 5 3)", "(1 5 4 3 2)",
                "(1 2 3 5 4)", "(1 4 5 3 2)", "(1 2 4 5 3)", "(1 3 5 4 2)"]
    canon = {str(t.canonical) for t in types}
    assert canon == {str(canonical_representative(parse_cycle(e))) for e in expected}
    assert sorted(t.size for t in types) == [1, 1, 1, 1, 5, 5, 5, 5]
    assert [t.canonical.table for t in types] == sorted(t.canonical.table for t in types)


def _burnside_type_count(q):
    # orbits of the rotation group acting by conjugation, by Burnside's lemma
    cycles = list(all_cycles(q))
    fixed = sum(1 for j in range(q) for s in cycles if _sympy_conjugate(s, j) == s)
    assert fixed % q == 0
    return fixed // q


@pytest.mark.parametrize("q", [3, 4, 5, 6, 7])
def test_type_count_against_burnside(q):
    assert len(enumerate_types(q)) == _burnside_type_count(q)


def test_prime_type_formula():
    for q in (3, 5, 7):
        assert len(enumerate_types(q)) == (math.factorial(q - 1) + (q - 1) ** 2) // q
    assert len(enumerate_types(3)) == 2


def test_enumerate_types_bound():
    with pytest.raises(BudgetExceeded):
        enumerate_types(10)
    assert len(enumerate_types(4, bound=4)) > 0


@pytest.mark.parametrize("q", range(2, 9))
def test_type_partition(q):
    types = enumerate_types(q)
    sizes = [t.size for t in types]
    assert sum(sizes) == math.factorial(q - 1)
    seen = set()
    for t in types:
        assert not seen & set(t.representatives)
        seen.update(t.representatives)
    assert sum(1 for t in types if t.descent == 1) == sum(1 for p in range(1, q) if math.gcd(p, q) == 1)


def test_every_divisor_occurs_as_symmetry_order():
    # claimed without proof for q >= 5; only checked here
    for q in range(5, 10):
        syms = {t.symmetry for t in enumerate_types(q)}
        assert syms == {s for s in range(1, q + 1) if q % s == 0}


def test_exhaustive_descent_laws():
    for sigma in cycles_up_to(7):
        d = descent(sigma)
        q = sigma.q
        assert 1 <= d <= max(1, q - 2)
        assert (d == 1) == any(sigma == rotation_cycle(q, p) for p in range(1, q) if math.gcd(p, q) == 1)
        for j in range(q):
            assert descent(conjugate_by_rotation(sigma, j)) == d
        s = symmetry_order(sigma)
        assert q % s == 0


@given(q_cycles())
def test_symmetry_constant_on_type(sigma):
    s = symmetry_order(sigma)
    for nu in combinatorial_type(sigma).representatives:
        assert symmetry_order(nu) == s
        assert canonical_representative(nu) == canonical_representative(sigma)


@given(q_cycles())
def test_inverse(sigma):
    inv = sigma.inverse()
    assert all(inv(sigma(i)) == i for i in range(1, sigma.q + 1))


def _is_generator(d, p):
    return len({pow(d, e, p) for e in range(1, p)}) == p - 1


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_multiplication_by_generator_descent(p):
    for d in range(2, p):
        if not _is_generator(d, p):
            continue
        sigma = cycle_from_table([d * i % p for i in range(1, p)])
        assert descent(sigma) == (d if 2 * d < p else d - 1)
