from math import factorial

import pytest
from hypothesis import given, strategies as st

from extspringer.root_data import (
    CACHE_ENV, CartanType, GuardExceeded, build_root_system, cache_filename, compose,
    dump_listing, enumerate_weyl, load_listing, parabolic_data, weyl_group,
)

CASES = [("A", l) for l in range(1, 6)] + [(f, l) for f in "BC" for l in range(2, 5)] + \
        [("D", l) for l in range(3, 6)]


def order_oracle(f, l):
    return {"A": factorial(l + 1), "B": 2**l * factorial(l), "C": 2**l * factorial(l),
            "D": 2 ** (l - 1) * factorial(l)}[f]


def npos_oracle(f, l):
    return {"A": l * (l + 1) // 2, "B": l * l, "C": l * l, "D": l * (l - 1)}[f]


def inversion_length(rs, w):
    """Number of positive roots sent to negative roots."""
    return sum(1 for b in rs.positive_roots if not rs.is_positive(w.apply(b)))


@pytest.mark.parametrize("family,rank", CASES)
def test_counts_against_closed_forms(family, rank):
    W = weyl_group(family, rank)
    assert W.order == order_oracle(family, rank)
    assert len(W.root_system.positive_roots) == npos_oracle(family, rank)
    assert len(W.root_system.roots) == 2 * npos_oracle(family, rank)


@pytest.mark.parametrize("family,rank", CASES)
def test_root_closure_and_simple_coordinates(family, rank):
    rs = weyl_group(family, rank).root_system
    roots = rs.roots
    W = weyl_group(family, rank)
    for g in W.generators:
        assert {g.apply(b) for b in roots} == roots
    for b in rs.positive_roots:
        c = rs.coords_of[b]
        assert all(x >= 0 for x in c) and any(c)
        v = [0] * rs.ambient_dim
        for ci, a in zip(c, rs.simple_roots):
            v = [x + ci * y for x, y in zip(v, a)]
        assert tuple(v) == b


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_bfs_length_is_inversion_count(family, rank):
    W = weyl_group(family, rank)
    rs = W.root_system
    for w in W.elements:
        assert w.length == inversion_length(rs, w)
    lengths = [w.length for w in W.elements]
    assert lengths == sorted(lengths)
    assert max(lengths) == len(rs.positive_roots)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4)])
def test_group_axioms(family, rank):
    W = weyl_group(family, rank)
    elems = set(W.index)
    for a in W.elements[:40]:
        assert W.multiply(a, W.inverse(a)).signed_perm == W.elements[0].signed_perm
        for b in W.elements[::7]:
            assert compose(a.signed_perm, b.signed_perm) in elems
    for g in W.generators:
        assert g.length == 1 and g.sign == -1


@given(st.sampled_from(CASES[:8]), st.data())
def test_matrix_action_agrees_with_signed_permutation(case, data):
    W = weyl_group(*case)
    w = data.draw(st.sampled_from(W.elements))
    v = data.draw(st.tuples(*[st.integers(-5, 5)] * W.root_system.ambient_dim))
    M = w.matrix
    assert tuple(sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(v))) == w.apply(v)


def test_length_polynomial_is_poincare():
    # A2: 1 + 2q + 2q^2 + q^3
    assert weyl_group("A", 2).length_polynomial() == [1, 2, 2, 1]
    assert weyl_group("B", 2).length_polynomial() == [1, 2, 2, 2, 1]


def test_guard():
    with pytest.raises(GuardExceeded):
        weyl_group("B", 6, guard=1000)
    with pytest.raises(ValueError):
        CartanType("D", 2)
    with pytest.raises(ValueError):
        CartanType("E", 6)


def test_cache_is_byte_identical_and_reused(tmp_path):
    rs = build_root_system(CartanType("B", 3))
    cold = enumerate_weyl(rs, cache_dir=tmp_path)
    path = tmp_path / cache_filename(rs.cartan)
    first = path.read_bytes()
    warm = enumerate_weyl(rs, cache_dir=tmp_path)
    assert [w.signed_perm for w in warm.elements] == [w.signed_perm for w in cold.elements]
    assert [w.length for w in warm.elements] == [w.length for w in cold.elements]
    path.unlink()
    enumerate_weyl(rs, cache_dir=tmp_path)
    assert path.read_bytes() == first
    assert not list(tmp_path.glob("*.tmp"))


def test_cache_env_and_corruption(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    rs = build_root_system(CartanType("A", 3))
    W = enumerate_weyl(rs)
    path = tmp_path / cache_filename(rs.cartan)
    assert path.exists()
    path.write_bytes(b"{not json")
    assert enumerate_weyl(rs).order == W.order
    listing = [(w.signed_perm, w.length) for w in W.elements]
    assert load_listing(dump_listing(listing, rs.cartan), CartanType("A", 4)) is None


@pytest.mark.parametrize("J,size,r", [((), 1, 0), ((1,), 2, 1), ((1, 3), 4, 2), ((1, 2, 3), 24, 3)])
def test_parabolic_data_A3(J, size, r):
    P = parabolic_data(weyl_group("A", 3), J)
    assert len(P.subgroup) == size
    assert P.r == r and P.s == 3 - r
    assert len(P.fixed_basis) == P.s


def test_parabolic_subsystem_B3():
    P = parabolic_data(weyl_group("B", 3), (2, 3))
    assert len(P.subgroup) == 8
    assert len(P.pos_roots_J) == 4
