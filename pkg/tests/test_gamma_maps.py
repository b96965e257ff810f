import random
from itertools import combinations

import pytest

from weylanke.combinatorics import enumerate_sst
from weylanke.gamma_maps import (
    defining_tableaux,
    g_image,
    gamma1,
    gamma2,
    gamma3,
    gamma_by_name,
    gamma_generator_image,
    gamma_image,
    gamma_omega_image,
    base_shape,
    adjacent_shape,
    doubled_shape,
    omega_gamma1,
    omega_gamma2,
    omega_gamma3,
    omega_sign,
)
from weylanke.linalg import rank_rational
from weylanke.tensor_algebra import (
    dp_strip,
    LinComb,
    divided_tensors,
    divided_weight,
    e_tensor,
    exterior_tensors,
    parse_tensor,
)
from weylanke.weyl import pi_U, psi_S, sst_basis_vectors


def test_defining_tableaux_shapes_and_weights():
    for n in (2, 3, 4, 5):
        tabs = defining_tableaux(n)
        for name in ("S1", "S2", "S3", "S4"):
            assert tabs[name].shape == base_shape(n)
            assert tabs[name].weight(3) == (n, n - 1, n - 1)
        for name in ("Q1", "Q2"):
            assert tabs[name].shape == base_shape(n)
            assert tabs[name].weight(3) == tuple(x for x in (n, n, n - 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gamma_generator_images(n):
    eps = (-1) ** n
    got1 = gamma_generator_image(gamma1(n))
    # identity term plus 1 2^(n-1) | 1^(n-1) | 3^(n-1)
    shifted = ((1, n - 1), (n - 1,), (0, 0, n - 1))
    expect1 = LinComb([(e_tensor((n, n - 1, n - 1)), 1), (shifted, eps)])
    assert got1 == expect1

    got2 = gamma_generator_image(gamma2(n))
    expect2 = LinComb(
        [
            (e_tensor((n, n - 1, n - 1)), 1),
            (tuple(map(dp_strip, ((n,), (0, 0, n - 1), (0, n - 1)))), eps),
            (tuple(map(dp_strip, ((0, 1, n - 1), (1, n - 2), (n - 1,)))), eps),
        ]
    )
    assert got2 == expect2

    got3 = gamma_generator_image(gamma3(n))
    expect3 = LinComb(
        [
            (tuple(map(dp_strip, ((n,), (0, 1, n - 2), (0, n - 1)))), 1),
            (tuple(map(dp_strip, ((0, n), (1, 0, n - 2), (n - 1,)))), eps),
        ]
    )
    assert got3 == expect3


def test_gamma_by_name_and_errors():
    assert gamma_by_name("gamma3", 3).name == "gamma3"
    with pytest.raises(ValueError):
        gamma_by_name("gamma9", 3)


def test_gamma_profile_mismatch():
    g = gamma1(3)
    with pytest.raises(ValueError):
        gamma_image(g, parse_tensor("1 | 2 | 3"))


def test_gamma_weight_preservation():
    rng = random.Random(3)
    for n in (2, 3):
        for g in (gamma1(n), gamma2(n), gamma3(n)):
            pool = divided_tensors(g.domain, 3)
            for x in rng.sample(pool, min(5, len(pool))):
                w = divided_weight(x, 3)
                for t, _ in gamma_image(g, x).items():
                    assert divided_weight(t, 3) == w


def test_g_image_example_and_nilpotent_collapse():
    got = g_image(2, ((1, 2), (3,)))
    expect = LinComb([(((1, 2), (3,)), 1), (((1, 3), (2,)), -1), (((2, 3), (1,)), 1)])
    assert got == expect
    # moves whose product repeats a letter drop; when the factors
    # overlap, the single surviving move cancels the identity term
    assert not g_image(2, ((1, 2), (1,)))
    assert not g_image(2, ((1, 2), (2,)))


def test_g_cokernel_dimension():
    basis = exterior_tensors((2, 1), 3)
    col = {t: i for i, t in enumerate(basis)}
    rows = [{col[k]: c for k, c in g_image(2, t).items()} for t in basis]
    assert len(basis) - rank_rational(rows) == 8


def test_omega_gamma1_example():
    w = ((1, 2), (3,), (4,))
    got = omega_gamma1(2, LinComb.term(w))
    expect = LinComb([(w, 1), (((1, 3), (2,), (4,)), -1), (((2, 3), (1,), (4,)), 1)])
    assert got == expect


def test_omega_gamma3_example():
    u = ((1, 2), (3, 4), ())
    got = omega_gamma3(2, LinComb.term(u))
    expect = LinComb(
        [
            (((1, 2), (3,), (4,)), 1),
            (((1, 2), (4,), (3,)), -1),
            (((3, 4), (1,), (2,)), 1),
            (((3, 4), (2,), (1,)), -1),
        ]
    )
    assert got == expect


def test_omega_gamma3_term_count():
    # all letters distinct: 2n terms before cancellation
    u = ((1, 2, 3), (4, 5, 6), (7,))
    assert len(omega_gamma3(3, LinComb.term(u))) == 6


def test_omega_gamma2_collapse_by_nilpotence():
    # z = y: the swap term cancels the identity and every exchange
    # term dies on a repeated letter
    w = ((1, 2), (3,), (3,))
    assert not omega_gamma2(2, LinComb.term(w))


def test_omega_signs_of_defining_tableaux():
    # transported fillings match the closed forms only with these signs
    for n in (2, 3, 4, 5):
        tabs = defining_tableaux(n)
        eps = (-1) ** n
        assert omega_sign(tabs["S1"]) == 1
        assert eps * omega_sign(tabs["S2"]) == -1
        assert eps * omega_sign(tabs["S3"]) == -1
        assert eps * omega_sign(tabs["S4"]) == 1
        assert omega_sign(tabs["Q1"]) == 1
        assert eps * omega_sign(tabs["Q2"]) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_transported_equals_closed_forms(n):
    m = 3 * n - 2
    letters = tuple(range(1, m + 1))
    for g, closed in ((gamma1(n), omega_gamma1), (gamma2(n), omega_gamma2)):
        for xs in combinations(letters, n):
            rest = tuple(a for a in letters if a not in xs)
            for ys in combinations(rest, n - 1):
                w = (xs, ys, tuple(a for a in rest if a not in ys))
                assert gamma_omega_image(g, w) == closed(n, LinComb.term(w))
    g3 = gamma3(n)
    for xs in combinations(letters, n):
        rest = tuple(a for a in letters if a not in xs)
        for ys in combinations(rest, n):
            u = (xs, ys, tuple(a for a in rest if a not in ys))
            assert gamma_omega_image(g3, u) == omega_gamma3(n, LinComb.term(u))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_projections_kill_the_maps(n):
    lm, mus = base_shape(n), adjacent_shape(n)
    g1 = gamma_generator_image(gamma1(n))
    g2 = gamma_generator_image(gamma2(n))
    g3 = gamma_generator_image(gamma3(n))
    (top,) = enumerate_sst(lm, lm)
    assert pi_U(top, g1).is_zero()
    assert pi_U(top, g2).is_zero()
    r0, r1 = enumerate_sst(mus, lm)
    T = sst_basis_vectors(mus, (n, n - 1, n - 1))
    assert pi_U(r0, g1) == -1 * T[1]
    assert pi_U(r1, g1) == 3 * T[1]
    assert pi_U(r0, g2).is_zero()
    assert pi_U(r1, g2).is_zero()
    assert pi_U(top, g3).is_zero()
    assert pi_U(r0, g3).is_zero()
    assert pi_U(r1, g3).is_zero()
