from math import factorial

import pytest
from hypothesis import given, strategies as st

from extspringer.exact_algebra import MultiPoly
from extspringer.type_a_springer import (
    Tableau, charge_word, cocharge, elementary_in_powers, fake_degree_crosscheck, hook,
    hook_identity_check, kostka_foulkes_bar, n_statistic, partition, partitions, ssyt,
)


def dominates(lam, mu):
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hook_length_count(shape):
    n = sum(shape)
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])]
    h = 1
    for i, r in enumerate(shape):
        for j in range(r):
            h *= (r - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // h


def q_binomial(n, k):
    """Gaussian binomial as a coefficient list, by the q-Pascal rule."""
    if k < 0 or k > n:
        return [0]
    if k == 0 or k == n:
        return [1]
    a = q_binomial(n - 1, k - 1)
    b = [0] * k + q_binomial(n - 1, k)
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def test_partitions_order_and_counts():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    with pytest.raises(ValueError):
        partition((1, 2))


def test_known_kostka_foulkes():
    assert kostka_foulkes_bar((2, 1), (1, 1, 1)) == MultiPoly(1, {(1,): 1, (2,): 1})
    assert kostka_foulkes_bar((1, 1, 1, 1), (1, 1, 1, 1)) == MultiPoly(1, {(6,): 1})
    assert kostka_foulkes_bar((3,), (1, 1, 1)) == 1
    # K_{(2,2),(1^4)} = q^2 + q^4 (cocharge form)
    assert kostka_foulkes_bar((2, 2), (1, 1, 1, 1)) == MultiPoly(1, {(2,): 1, (4,): 1})


def test_charge_of_words():
    assert charge_word((1, 2, 3)) == 3
    assert charge_word((3, 2, 1)) == 0
    assert charge_word((2, 1, 1, 2)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_foulkes_structure(n):
    for lam in partitions(n):
        for mu in partitions(n):
            K = kostka_foulkes_bar(lam, mu)
            count = len(ssyt(lam, mu))
            assert K.evaluate((1,)) == count
            if not dominates(lam, mu):
                assert K.is_zero()
                continue
            # lowest term q^{n(lam)} with coefficient 1; top degree n(mu)
            low = min(e[0] for e in K.terms)
            assert low == n_statistic(lam) and K.terms[(low,)] == 1
            assert K.degree() <= n_statistic(mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_content_counts_syt(n):
    ones = (1,) * n
    for lam in partitions(n):
        assert len(ssyt(lam, ones)) == hook_length_count(lam)


@given(st.integers(2, 6).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
def test_ssyt_are_semistandard_with_right_content(lam):
    for mu in partitions(sum(lam)):
        for t in ssyt(lam, mu):
            assert t.is_semistandard()
            assert t.content() == mu
            assert 0 <= cocharge(t) <= n_statistic(mu)


@pytest.mark.parametrize("n", range(2, 8))
def test_hook_at_standard_content_is_q_binomial(n):
    # e_i(q, ..., q^{n-1}) = q^{i(i+1)/2} [n-1 choose i]_q
    for i in range(n):
        coeffs = [0] * (i * (i + 1) // 2) + q_binomial(n - 1, i)
        expected = MultiPoly(1, {(k,): c for k, c in enumerate(coeffs) if c})
        assert elementary_in_powers(i, list(range(1, n))) == expected
        assert kostka_foulkes_bar(hook(n, i), (1,) * n) == expected


def test_hook_identity_examples():
    rep = hook_identity_check((2, 2))
    assert rep.verdict == "pass" and rep.s == 1
    assert [str(r[1]) for r in rep.rows] == ["1", "x1", "0", "0"]


def test_crosscheck_small():
    assert fake_degree_crosscheck(4).verdict == "pass"
    with pytest.raises(ValueError):
        fake_degree_crosscheck(9)


def test_tableau_reading_word():
    t = Tableau((2, 1), ((1, 2), (3,)))
    assert t.reading_word() == (3, 1, 2)
    assert t.is_semistandard()
