from math import comb

import pytest

from extspringer.character_theory import (
    coinvariant_graded_multiplicity, conjugacy_classes, exterior_character, exterior_coefficients,
    induced_trivial, inner_product, product_formula, sign_character, solomon_check,
    trivial_character, two_power_check,
)
from extspringer.exact_algebra import MultiPoly
from extspringer.root_data import weyl_group

GROUPS = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4)]

# number of conjugacy classes: partitions, bipartitions, D4 from tables
CLASS_COUNTS = {("A", 1): 2, ("A", 2): 3, ("A", 3): 5, ("A", 4): 7, ("B", 2): 5,
                ("B", 3): 10, ("C", 3): 10, ("D", 4): 13}


@pytest.mark.parametrize("case", GROUPS)
def test_class_counts_and_sizes(case):
    W = weyl_group(*case)
    cc = conjugacy_classes(W)
    assert len(cc) == CLASS_COUNTS[case]
    assert sum(cc.sizes) == W.order
    assert all(W.order % s == 0 for s in cc.sizes)


@pytest.mark.parametrize("case", GROUPS)
def test_exterior_powers_irreducible_and_orthogonal(case):
    W = weyl_group(*case)
    chars = [exterior_character(W, i) for i in range(W.rank + 1)]
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert inner_product(a, b) == int(i == j)
        assert a.degree() == comb(W.rank, i)
    assert chars[0] == trivial_character(W)
    assert chars[-1] == sign_character(W)


@pytest.mark.parametrize("case", [("A", 3), ("B", 3)])
def test_det_identity(case):
    W = weyl_group(*case)
    for w in W.elements:
        coeffs = exterior_coefficients(W, w)
        assert coeffs[-1] == w.sign
        assert coeffs[0] == 1


def cycle_type(perm):
    n = len(perm)
    seen, out = set(), []
    for i in range(n):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = abs(perm[j]) - 1
            k += 1
        out.append(k)
    return out


def cycle_formula(perm):
    """Coefficients of det(1 + t w | V) for S_n: prod over cycles (1 - (-t)^c), divided by (1 + t)."""
    p = [1]
    for c in cycle_type(perm):
        f = [0] * (c + 1)
        f[0] = 1
        f[c] = -((-1) ** c)
        p = [sum(p[i] * f[k - i] for i in range(len(p)) if 0 <= k - i < len(f))
             for k in range(len(p) + len(f) - 1)]
    q = []
    for k in range(len(p) - 1):
        q.append(p[k] - (q[k - 1] if k else 0))
    return tuple(q)


@pytest.mark.parametrize("rank", [2, 3, 4])
def test_type_A_exterior_coefficients_cycle_formula(rank):
    W = weyl_group("A", rank)
    for w in W.elements:
        assert exterior_coefficients(W, w) == cycle_formula(w.signed_perm)


def test_induced_trivial_degree_and_multiplicity():
    W = weyl_group("B", 3)
    ind = induced_trivial(W, (1, 2))
    assert ind.degree() == W.order // 6
    assert inner_product(ind, trivial_character(W)) == 1


@pytest.mark.parametrize("case", GROUPS)
def test_two_power_all_subsets(case):
    from itertools import combinations
    W = weyl_group(*case)
    for k in range(W.rank + 1):
        for J in combinations(range(1, W.rank + 1), k):
            rep = two_power_check(W, J)
            assert rep.total == 2 ** (W.rank - k)
            assert rep.verdict == "pass"


def q_poly(coeffs):
    return MultiPoly(1, {(i,): c for i, c in enumerate(coeffs) if c})


def test_molien_known_fake_degrees():
    W = weyl_group("A", 2)
    assert coinvariant_graded_multiplicity(W, trivial_character(W)) == 1
    assert coinvariant_graded_multiplicity(W, exterior_character(W, 1)) == q_poly([0, 1, 1])
    assert coinvariant_graded_multiplicity(W, sign_character(W)) == q_poly([0, 0, 0, 1])
    B = weyl_group("B", 2)
    assert coinvariant_graded_multiplicity(B, exterior_character(B, 1)) == q_poly([0, 1, 0, 1])


@pytest.mark.parametrize("case", GROUPS)
def test_molien_total_dimension_is_order(case):
    W = weyl_group(*case)
    cc = conjugacy_classes(W)
    # regular character has value |W| at the identity only
    from extspringer.character_theory import ClassFunction
    reg = ClassFunction(cc, tuple(W.order if i == cc.class_of[0] else 0 for i in range(len(cc))))
    fake = coinvariant_graded_multiplicity(W, reg)
    # the coinvariant algebra is the regular representation: total multiplicity |W|
    assert sum(fake.terms.values()) == W.order


def test_product_formula():
    p = product_formula([1, 3])
    assert p == MultiPoly(2, {(0, 0): 1, (1, 1): 1, (1, 3): 1, (2, 4): 1})


@pytest.mark.parametrize("case", [("A", 3), ("B", 3), ("D", 4)])
def test_solomon(case):
    assert solomon_check(weyl_group(*case)).verdict == "pass"
