from math import comb, factorial

import pytest

from extdelta.core import DomainError, compositions
from extdelta.qpoly import ONE, QTPolynomial
from extdelta.qseries import (
    DistributionKey,
    D_mahonian_recursive,
    D_mahonian_simplified,
    D_plus,
    I_recursive,
    I_shape_recursive,
    M_recursive,
    brute_force_D,
    cyclic_shift_maj_gap,
    lemma_l36_check,
    lemma_l36_cyclic_sides,
    lemma_l36_sides,
    miniword_commutes,
    q_binomial,
    q_factorial,
    q_int,
    q_stirling,
)
from extdelta.core import Composition, Content, enumerate_omps

P = QTPolynomial.parse


def stirling2(n, k):
    if n == k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_q_analogues():
    assert q_int(0) == 0 and q_int(3) == P("1+q+q^2")
    assert q_factorial(3) == P("1+2*q+2*q^2+q^3")
    assert q_binomial(4, 2) == P("1+q+2*q^2+q^3+q^4")
    assert q_binomial(3, 5) == 0
    with pytest.raises(DomainError):
        q_int(-1)


@pytest.mark.parametrize("n", range(0, 8))
def test_q_binomial_properties(n):
    for k in range(n + 1):
        b = q_binomial(n, k)
        assert b.eval_at(1) == comb(n, k)
        assert b == q_binomial(n, n - k)
        # [n]! = [k]! [n-k]! [n, k]
        assert q_factorial(n) == q_factorial(k) * q_factorial(n - k) * b


def test_q_stirling_values():
    assert q_stirling(3, 2) == P("2+q")
    assert q_stirling(0, 0) == ONE and q_stirling(3, 0) == 0
    for n in range(7):
        for k in range(n + 1):
            assert q_stirling(n, k).eval_at(1) == stirling2(n, k)


@pytest.mark.parametrize("n", range(0, 6))
def test_ordered_set_partitions_carry_factorial(n):
    for k in range(n + 1):
        d = brute_force_D(DistributionKey(0, (1,) * n, k))
        assert d == q_factorial(k) * q_stirling(n, k)
        assert d.eval_at(1) == factorial(k) * stirling2(n, k)


def test_plain_stirling_form_fails_from_two_blocks():
    d = brute_force_D(DistributionKey(0, (1, 1, 1), 2))
    assert d == P("2+3*q+q^2") != q_stirling(3, 2)
    assert brute_force_D(DistributionKey(0, (1, 1, 1), 1)) == q_stirling(3, 1)


def test_distribution_key_validation():
    with pytest.raises(DomainError):
        DistributionKey(0, (1,), 1, variant="some")
    with pytest.raises(DomainError):
        DistributionKey(0, (1,), 1, stat="area")
    with pytest.raises(DomainError):
        DistributionKey(0, (1, 1), 2, shape=(1,))
    with pytest.raises(DomainError):
        DistributionKey(-1, (1,), 1)
    assert str(DistributionKey(1, (2,), 2, "all", "maj", (2, 1))) == "maj:all:r=1:beta=(2):k=2:shape=(2,1)"


def test_brute_force_counts():
    content = Content(Composition((2, 1)), 1)
    for k in range(1, 5):
        for variant, tail in (("tail_positive", True), ("all", False)):
            n = sum(1 for _ in enumerate_omps(content, k, tail_positive=tail))
            assert brute_force_D(DistributionKey(1, (2, 1), k, variant)).eval_at(1) == n


def test_d_plus_relabels_zeros():
    key = DistributionKey(2, (1, 1), 3, "all", "inv")
    assert D_plus(key) == brute_force_D(key)
    with pytest.raises(DomainError):
        D_plus(DistributionKey(2, (1, 1), 3))


def small_cases(max_size=5, max_r=2):
    for size in range(0, max_size + 1):
        for r in range(0, min(max_r, size) + 1):
            for beta in compositions(size - r):
                yield size, r, beta


def test_inv_recursion_both_inner_modes():
    for size, r, beta in small_cases():
        for k in range(size + 1):
            bf = brute_force_D(DistributionKey(r, beta, k))
            assert I_recursive(r, beta, k) == bf
            assert I_recursive(r, beta, k, "oracle") == bf


def test_shape_recursion():
    for size, r, beta in small_cases():
        for alpha in compositions(size):
            assert I_shape_recursive(r, beta, alpha) == brute_force_D(DistributionKey(r, beta, len(alpha), shape=alpha))
    with pytest.raises(DomainError):
        I_shape_recursive(0, (1,), (2,))


def test_minimaj_recursion():
    for size, r, beta in small_cases():
        for k in range(size + 1):
            bf = brute_force_D(DistributionKey(r, beta, k, stat="minimaj"))
            assert M_recursive(r, beta, k) == bf
            assert M_recursive(r, beta, k, "recursive") == bf
    with pytest.raises(DomainError):
        M_recursive(0, (1,), 1, "guess")


def test_mahonian_recursion():
    for size, r, beta in small_cases():
        for k in range(size + 1):
            assert D_mahonian_recursive(r, beta, k) == brute_force_D(DistributionKey(r, beta, k))


def test_simplified_line_is_wrong():
    # the smallest failure: two distinct letters in two blocks
    assert D_mahonian_simplified(0, (1, 1), 2) == 2
    assert brute_force_D(DistributionKey(0, (1, 1), 2)) == P("1+q") == D_mahonian_recursive(0, (1, 1), 2)


def test_singleton_last_block_printed_form_fails_with_zeros():
    lhs, rhs = lemma_l36_sides(1, (1, 2), (1, 2, 1))
    assert lhs == P("1+2*q+q^2") and rhs == P("1+2*q+q^3")
    assert not lemma_l36_check(1, (1, 2), (1, 2, 1))
    assert lemma_l36_check(1, (1, 2), (1, 2, 1), form="cyclic")
    lhs, rhs = lemma_l36_sides(2, (1, 1), (1, 2, 1))
    assert lhs == P("1+q^2") and rhs == P("1+q")


def test_singleton_last_block_forms():
    for size, r, beta in small_cases(5, 3):
        per_k = {}
        for alpha in compositions(size):
            if not alpha or alpha[-1] != 1:
                continue
            lhs, rhs = lemma_l36_sides(r, beta, alpha)
            _, cyc = lemma_l36_cyclic_sides(r, beta, alpha)
            assert lhs == cyc
            if r == 0:
                assert lhs == rhs
            acc = per_k.setdefault(len(alpha), [0, 0])
            acc[0] = lhs + acc[0]
            acc[1] = rhs + acc[1]
        for lhs, rhs in per_k.values():
            assert lhs == rhs
    with pytest.raises(DomainError):
        lemma_l36_sides(0, (1, 1), (2,))
    with pytest.raises(DomainError):
        lemma_l36_check(0, (1,), (1,), form="other")


def test_minimaj_symmetry_in_content():
    from itertools import permutations

    for r, beta in [(1, (2, 1)), (2, (1, 1)), (0, (1, 2, 1)), (1, (1, 1, 2))]:
        seq = (r,) + beta
        for k in range(1, sum(seq) + 1):
            base = brute_force_D(DistributionKey(r, beta, k, "all", "minimaj"))
            for g in set(permutations(seq)):
                assert brute_force_D(DistributionKey(g[0], g[1:], k, "all", "minimaj")) == base


def test_cyclic_action_lemmas():
    # c shifts maj by the number of zeros when the word does not end in 0
    assert cyclic_shift_maj_gap((2, 0, 1, 0, 2), 3) == 2
    content = Content(Composition((1, 2)), 2)
    for k in range(1, 6):
        for mu in enumerate_omps(content, k, tail_positive=False):
            if len(mu.blocks[-1]) == 1:
                assert miniword_commutes(mu, 3)
