from fractions import Fraction

import pytest

from hatlab.poly import UnivariatePoly
from hatlab.roots import (
    RootError,
    cauchy_bound,
    count_real_roots,
    family,
    smallest_positive_root,
    sturm_roots,
    sturm_sequence,
    verify_root_interval,
)

X = UnivariatePoly.x()


def test_sturm_sequence_ends_nonzero():
    seq = sturm_sequence((X - 1) * (X + 2))
    assert seq and not seq[-1].is_zero()


def test_sturm_roots_counts_distinct_roots():
    p = (X - 1) * (X - 2) * (X - 3)
    assert sturm_roots(p, Fraction(0), Fraction(10)) == 3
    assert sturm_roots(p, Fraction(0), Fraction(5, 2)) == 2
    # half-open (lo, hi]: lo itself is excluded, hi is included
    assert sturm_roots(p, Fraction(1), Fraction(2)) == 1


def test_sturm_roots_ignores_multiplicity():
    p = (X - 1) * (X - 1)
    assert sturm_roots(p, Fraction(0), Fraction(2)) == 1


def test_count_real_roots():
    assert count_real_roots(X * X + 1) == 0
    assert count_real_roots(X * X - 2) == 2


def test_cauchy_bound_contains_roots():
    p = (X - 3) * (X + 5)
    b = cauchy_bound(p)
    assert b > 5


def test_smallest_positive_root_exact_rational():
    p = UnivariatePoly.of(1, -4, 3)  # roots 1/3 and 1
    iso = smallest_positive_root(p)
    assert iso.exact_root == Fraction(1, 3)


def test_smallest_positive_root_candidate_confirmed():
    p = UnivariatePoly.of(1, -4, 3)
    iso = smallest_positive_root(p, candidate=Fraction(1, 3))
    assert iso.exact_root == Fraction(1, 3)
    assert iso.width() == 0


def test_smallest_positive_root_candidate_not_minimal():
    p = UnivariatePoly.of(1, -4, 3)
    with pytest.raises(RootError, match="not minimal"):
        smallest_positive_root(p, candidate=Fraction(1))


def test_smallest_positive_root_candidate_not_a_root():
    with pytest.raises(RootError, match="not a root"):
        smallest_positive_root(X - 1, candidate=Fraction(1, 2))


def test_smallest_positive_root_irrational_isolated():
    p = X * X - 2
    iso = smallest_positive_root(p)
    assert iso.exact_root is None
    assert iso.lower < iso.upper
    assert p(iso.lower) * p(iso.upper) < 0
    assert iso.width() <= Fraction(1, 10**12)


def test_smallest_positive_root_none_when_all_negative():
    assert smallest_positive_root(X + 1) is None


def test_family_values():
    # A_0 = 1, A_1 = k+1, A_2 = k(k+2)
    assert family("A", 0).poly == UnivariatePoly.ONE
    assert family("A", 1).poly == X + 1
    assert family("A", 2).poly == X * (X + 2)
    assert family("A", 2, k=2) == 8
    # Phi is the Chebyshev-style recurrence Phi_n = k Phi_{n-1} - Phi_{n-2}
    assert family("Phi", 2).poly == X * X - 1
    assert family("E", 1).poly == X + 1


def test_family_unknown_tag():
    with pytest.raises(RootError, match="unknown family"):
        family("Q", 3)


def test_root_intervals_hold():
    for n in range(2, 8):
        assert verify_root_interval("A", n)
        assert verify_root_interval("Phi", n)


def test_root_interval_custom_fails_when_too_small():
    assert not verify_root_interval("Phi", 5, interval=(Fraction(-1), Fraction(1)))
