from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from alexfoam.qalg import (
    BiGradedPoly,
    DominoConfig,
    LaurentPoly,
    enumerate_dominoes,
    pell,
    qbinom,
    qfactorial,
    qint,
    weight_polynomial,
)

P = LaurentPoly.parse


def _factorial_quotient(n: int, a: int) -> LaurentPoly:
    """Oracle: [n]! / ([a]! [n-a]!) by exact long division."""
    return qfactorial(n).divmod_exact(qfactorial(a) * qfactorial(n - a))


@pytest.mark.parametrize(
    "n, expected",
    [(0, "0"), (1, "1"), (2, "q^-1 + q"), (3, "q^-2 + 1 + q^2")],
)
def test_qint_examples(n, expected):
    assert qint(n) == P(expected)


@pytest.mark.parametrize(
    "n, a, expected",
    [(2, 1, "q^-1 + q"), (1, 2, "0"), (3, 1, "q^-2 + 1 + q^2"), (0, 0, "1")],
)
def test_qbinom_examples(n, a, expected):
    assert qbinom(n, a) == P(expected)


@pytest.mark.parametrize("n", range(0, 9))
def test_qbinom_matches_factorial_quotient(n):
    for a in range(n + 1):
        assert qbinom(n, a) == _factorial_quotient(n, a)


@pytest.mark.parametrize("n, expected", [(0, "1"), (1, "q^-1 + q"), (2, "q^-2 + 3 + q^2")])
def test_pell_examples(n, expected):
    assert pell(n) == P(expected)


def test_pell_value_at_one_is_pell_number():
    # classical Pell numbers 1, 2, 5, 12, 29, 70
    assert [pell(n).evaluate(1) for n in range(6)] == [1, 2, 5, 12, 29, 70]


def test_dominoes_small():
    assert [str(s) for s in enumerate_dominoes(0)] == ["()"]
    one = enumerate_dominoes(1)
    assert [s.weight for s in one] == [-1, 1]
    two = enumerate_dominoes(2)
    assert len(two) == 5
    assert weight_polynomial(two) == P("q^-2 + 3 + q^2")


def test_domino_order_is_anti_lexicographic():
    # minus < zero < plus, compared from the last box backwards
    order = [str(s) for s in enumerate_dominoes(2)]
    assert order[0] == "--" and order[-1] == "++"
    keys = [s.sort_key() for s in enumerate_dominoes(4)]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


@pytest.mark.parametrize("n", range(0, 13))
def test_domino_weights_sum_to_pell(n):
    configs = enumerate_dominoes(n)
    assert all(s.length == n for s in configs)
    assert weight_polynomial(configs) == pell(n)


@pytest.mark.parametrize("n", range(0, 9))
def test_domino_dual_is_weight_negating_involution(n):
    configs = enumerate_dominoes(n)
    for s in configs:
        assert s.dual.dual == s
        assert s.dual.weight == -s.weight
    assert sorted(s.dual.sort_key() for s in configs) == sorted(s.sort_key() for s in configs)


@given(st.integers(0, 12))
def test_pell_symmetric(n):
    assert pell(n).is_symmetric()


@given(st.integers(0, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_qbinom_symmetric(na):
    n, a = na
    assert qbinom(n, a) == qbinom(n, n - a)
    assert qbinom(n, a).is_symmetric()


laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(laurent, laurent)
def test_exact_division_roundtrip(a, b):
    if b.is_zero():
        return
    assert (a * b).divmod_exact(b) == a


@given(laurent)
def test_laurent_string_roundtrip(a):
    assert P(str(a)) == a


def test_laurent_no_stored_zeros_and_reduced_coefficients():
    p = LaurentPoly({0: 0, 1: Fraction(2, 4)})
    assert p.coeffs == {1: Fraction(1, 2)}
    assert str(P("q^-2 + 2 + q^2")) == "q^-2 + 2 + q^2"


def test_exponent_overflow_rejected():
    with pytest.raises(OverflowError):
        LaurentPoly.monomial(2**62) * LaurentPoly.monomial(2**62)


def test_bigraded_string_and_specialization():
    p = BiGradedPoly({(0, 2): 1, (1, 0): 1, (2, -2): 1})
    assert str(p) == "q^2 + t + t^2q^-2"
    assert BiGradedPoly.parse(str(p)) == p
    assert p.at_t(-1) == P("q^-2 - 1 + q^2")


def test_domino_config_from_string():
    s = DominoConfig.from_string("+0-")
    assert s.length == 4 and s.weight == 0
    assert str(s.dual) == "-0+"
