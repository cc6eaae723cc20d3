import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from multisemi import fixture, FIXTURE_NAMES
from multisemi import green
from multisemi.core import MultiOp, find_identity, find_zero, is_associative, subset_product
from multisemi.errors import AxiomError, InputError
from multisemi.representations import (
    LEFT, RIGHT, bool_product, format_matrix, l_class_rep, regular_rep, tau, verify_l_class_rep, verify_rep,
)

from oracles import construction_matrix

MATRIX = construction_matrix()


def test_regular_rep_examples():
    t = fixture("two_element")
    tau_a = regular_rep(t, "a")
    assert tau_a[:, 0].tolist() == [True, False]
    assert tau_a[:, 1].tolist() == [True, True]
    h = fixture("hecke_a2")
    assert (regular_rep(h, find_identity(h)) == np.eye(6, dtype=bool)).all()
    kl = fixture("kl_a2")
    z = find_zero(kl)
    tz = regular_rep(kl, z)
    assert tz[z].all() and not np.delete(tz, z, axis=0).any()
    with pytest.raises(InputError):
        regular_rep(kl, 0, "up")


def test_right_rep_convention():
    t = fixture("two_element")
    rho_b = regular_rep(t, "b", RIGHT)
    # column x lists x*b
    assert rho_b[:, 0].tolist() == [True, True]
    assert rho_b[:, 1].tolist() == [False, True]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
@pytest.mark.parametrize("side", [LEFT, RIGHT])
def test_verify_rep_fixtures(name, side):
    assert verify_rep(fixture(name), side)


@pytest.mark.parametrize("m", MATRIX)
@pytest.mark.parametrize("side", [LEFT, RIGHT])
def test_verify_rep_constructions(m, side):
    assert verify_rep(m, side)


def test_verify_rep_singleton_hypergroup():
    assert verify_rep(MultiOp([[1]]))


def test_verify_rep_rejects_non_associative():
    m = fixture("hecke_a2")
    cube = [list(r) for r in m.cube]
    cube[1][1] = 1
    with pytest.raises(AxiomError):
        verify_rep(MultiOp(cube, m.names))


def test_representation_identity_fails_on_corrupted_table():
    # regression seed: the first random non-associative 3-element table
    # for which the matrix identity breaks
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        m = MultiOp.from_array(rng.random((3, 3, 3)) < 0.5)
        if is_associative(m):
            continue
        mats = [regular_rep(m, a) for a in range(3)]
        broken = any(
            not np.array_equal(bool_product(mats[a], mats[b]), tau(m, m(a, b)))
            for a in range(3) for b in range(3)
        )
        if broken:
            break
    else:
        pytest.fail("no corrupted table breaks the identity")


def test_l_class_rep_examples():
    kl = fixture("kl_b2_T")
    Ls = green.green_data(kl).L_class(kl.index("s"))
    assert kl.labels(Ls) == ["s", "ts", "sts"]
    lam = l_class_rep(kl, Ls, "s")
    order = kl.labels(Ls)
    col = {x: {order[i] for i in np.flatnonzero(lam[:, j])} for j, x in enumerate(order)}
    assert col == {"s": {"s"}, "sts": {"sts"}, "ts": {"s", "sts"}}
    for L in green.green_data(kl).L:
        assert verify_l_class_rep(kl, L)
    with pytest.raises(InputError):
        l_class_rep(kl, kl.subset(["s"]), "s")


def test_l_class_rep_zero_action():
    m = MultiOp([[0, 0], [0, 3]])
    assert is_associative(m)
    L = green.green_data(m).L_class(1)
    assert not l_class_rep(m, L, 0).any()


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_l_class_reps_on_fixtures(name):
    m = fixture(name)
    for L in green.green_data(m).L:
        assert verify_l_class_rep(m, L)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(FIXTURE_NAMES), st.integers(0, 63), st.integers(0, 63))
def test_tau_multiplicative_on_subsets(name, a, b):
    m = fixture(name)
    A, B = a & m.full, b & m.full
    for side in (LEFT, RIGHT):
        lhs = tau(m, subset_product(m, A, B) if side == LEFT else subset_product(m, B, A), side)
        assert np.array_equal(bool_product(tau(m, A, side), tau(m, B, side)), lhs)


def test_format_matrix():
    assert format_matrix(np.eye(2, dtype=bool)) == "10\n01"
