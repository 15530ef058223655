from math import prod

import pytest
from hypothesis import given, strategies as st

from extspringer.exact_algebra import MultiPoly, elementary_symmetric, monomials
from extspringer.invariant_theory import (
    DEGREE_OBSTRUCTION, FAIL, PASS, act, check_condition1, coexponents, delta_certificate,
    fundamental_degrees, invariant_space, is_invariant, jacobian_nonzero, pi_K,
    reduce_sum_zero, search_condition1, standard_witnesses,
)
from extspringer.root_data import weyl_group

DEGREE_TABLE = {
    ("A", 1): (2,), ("A", 2): (2, 3), ("A", 3): (2, 3, 4), ("A", 4): (2, 3, 4, 5),
    ("B", 2): (2, 4), ("B", 3): (2, 4, 6), ("C", 3): (2, 4, 6), ("B", 4): (2, 4, 6, 8),
    ("D", 3): (2, 3, 4), ("D", 4): (2, 4, 4, 6), ("D", 5): (2, 4, 5, 6, 8),
}


@pytest.mark.parametrize("key", sorted(DEGREE_TABLE))
def test_fundamental_degrees(key):
    W = weyl_group(*key)
    d = fundamental_degrees(W)
    assert d.degrees == DEGREE_TABLE[key]
    assert prod(d.degrees) == W.order
    assert sum(x - 1 for x in d.degrees) == len(W.root_system.positive_roots)


def molien_dims(W, top):
    """Invariant dimensions from the degrees: coefficients of prod 1/(1-q^d)."""
    c = [1] + [0] * top
    for d in fundamental_degrees(W).degrees:
        for k in range(d, top + 1):
            c[k] += c[k - d]
    return c


@pytest.mark.parametrize("family,rank,top", [("A", 2, 6), ("B", 2, 6), ("A", 3, 5), ("D", 4, 6)])
def test_invariant_space_dimensions_match_degree_series(family, rank, top):
    W = weyl_group(family, rank)
    dims = [len(invariant_space(W, k)) for k in range(top + 1)]
    assert dims == molien_dims(W, top)


def test_invariant_space_basis_is_invariant_and_monic():
    W = weyl_group("B", 3)
    for f in invariant_space(W, 4):
        assert is_invariant(W, f)
        assert f.leading_term()[1] == 1


def test_D4_has_no_cubic_invariants():
    assert invariant_space(weyl_group("D", 4), 3) == []


@given(st.sampled_from([("A", 2), ("B", 2), ("C", 3)]), st.data())
def test_action_is_a_left_action(case, data):
    W = weyl_group(*case)
    n = W.root_system.ambient_dim
    a = data.draw(st.sampled_from(W.elements))
    b = data.draw(st.sampled_from(W.elements))
    f = MultiPoly(n, {e: i + 1 for i, e in enumerate(monomials(n, 2)[:3])})
    assert act(W.multiply(a, b), f) == act(a, act(b, f))
    # (w f)(v) = f(w^-1 v)
    v = data.draw(st.tuples(*[st.integers(-3, 3)] * n))
    assert act(a, f).evaluate(v) == f.evaluate(W.inverse(a).apply(v))


def test_reduce_sum_zero():
    x = [MultiPoly.var(3, i) for i in range(3)]
    p = reduce_sum_zero(x[0] + x[1] + x[2])
    assert p.is_zero()
    assert reduce_sum_zero(x[2]) == -(x[0] + x[1])


def test_coexponents_closed_forms():
    assert coexponents("A", 3).values == (1, 2, 3)
    assert coexponents("B", 3).values == (1, 3, 5)
    assert coexponents("C", 2).values == (1, 3)
    with pytest.raises(ValueError):
        coexponents("D", 2)


def test_pi_K_is_skew():
    W = weyl_group("A", 3)
    p = pi_K(W.root_system, (2, 3))
    assert p.degree() == 3
    for g in W.generators[1:]:
        assert act(g, p) == -p


@pytest.mark.parametrize("family,rank,s", [("A", 2, 1), ("A", 3, 2), ("B", 2, 1), ("B", 3, 2), ("C", 3, 3)])
def test_condition1_with_standard_witnesses(family, rank, s):
    W = weyl_group(family, rank)
    K = tuple(range(rank - s + 1, rank + 1))
    fs = standard_witnesses(W.root_system, s)
    rep = check_condition1(W, K, coexponents(family, s), fs)
    assert rep.verdict == PASS, rep


def test_condition1_rejects_wrong_degrees():
    W = weyl_group("A", 3)
    fs = [elementary_symmetric(4, 2), elementary_symmetric(4, 2)]
    rep = check_condition1(W, (2, 3), (1, 2), fs)
    assert rep.verdict == FAIL and not rep.degrees_ok


def test_condition1_rejects_dependent_witnesses():
    W = weyl_group("B", 2)
    p2 = elementary_symmetric(2, 1, power=2)
    rep = check_condition1(W, (1, 2), (1, 3), [p2, p2 * p2])
    assert rep.verdict == FAIL and not rep.jacobian_nonzero


def test_jacobian_evaluation_certificate_matches_symbolic():
    gs = [elementary_symmetric(5, k) for k in range(1, 6)]
    assert jacobian_nonzero(gs, 5, symbolic_limit=4) == (True, "evaluation-certificate")
    assert jacobian_nonzero(gs, 5, symbolic_limit=5) == (True, "symbolic")
    dep = gs[:4] + [gs[0] * gs[0] * gs[0] * gs[0] * gs[0]]
    assert jacobian_nonzero(dep, 5, symbolic_limit=4)[0] is False


@pytest.mark.parametrize("family,rank,s", [("A", 2, 1), ("A", 2, 2), ("A", 3, 2), ("B", 3, 2), ("C", 2, 2)])
def test_delta_is_nonzero_multiple_of_pi_K(family, rank, s):
    W = weyl_group(family, rank)
    K = tuple(range(rank - s + 1, rank + 1))
    cert = delta_certificate(W, K, standard_witnesses(W.root_system, s))
    assert cert.verdict == PASS and cert.c != 0
    assert cert.delta == cert.pi_K.scale(cert.c) or cert.normalized


def test_delta_fails_on_bad_witnesses():
    W = weyl_group("A", 2)
    x = [MultiPoly.var(3, i) for i in range(3)]
    cert = delta_certificate(W, (2,), [x[0] * x[0]])
    assert cert.verdict == FAIL


def test_search_reports_D4_obstruction():
    W = weyl_group("D", 4)
    rep = search_condition1(W, (3, 4), (1, 2))
    assert rep.verdict == DEGREE_OBSTRUCTION
    assert rep.obstruction_degree == 3


def test_search_finds_witnesses_in_A3():
    W = weyl_group("A", 3)
    rep = search_condition1(W, (2, 3), (1, 2))
    assert rep.verdict == PASS
    assert [f.degree() for f in rep.witnesses] == [2, 3]
