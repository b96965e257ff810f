import random

from weylanke.tensor_algebra import (
    LinComb,
    dp_comultiply,
    dp_comultiply3,
    dp_product,
    dp_split,
    dp_strip,
    e_tensor,
    ext_comultiply,
    ext_product,
    ext_split,
    lincomb_text,
    mono_text,
    parse_mono,
    parse_tensor,
    tensor_text,
)


def test_lincomb_basics():
    a = LinComb.term((1, 2), 2) + LinComb.term((0, 1), -1)
    b = LinComb.term((0, 1), 1)
    assert (a + b).coeff((0, 1)) == 0
    assert (a + b) == LinComb.term((1, 2), 2)
    assert not (a - a)
    assert 3 * b == LinComb.term((0, 1), 3)
    assert list((a + b).items()) == [((1, 2), 2)]


def test_dp_product_unit_and_single_letter():
    assert dp_product((), (3, 1)) == LinComb.term((3, 1), 1)
    for i in range(5):
        got = dp_product((1,), (i,))
        assert got == LinComb.term((i + 1,), i + 1)


def test_dp_product_derived_example():
    # (1^(2) 2) * (1 2) = C(3,1) C(2,1) 1^(3) 2^(2)
    assert dp_product((2, 1), (1, 1)) == LinComb.term((3, 2), 6)


def test_dp_comultiply_worked_example():
    # split 1 2^(2) into degrees (2,1)
    got = dp_comultiply((1, 2), (2, 1))
    assert got == LinComb([(((1, 1), (0, 1)), 1), (((0, 2), (1,)), 1)])


def test_dp_comultiply_counit_and_divided_convention():
    assert dp_comultiply((1, 2), (0, 3)) == LinComb.term(((), (1, 2)), 1)
    assert dp_comultiply((2,), (1, 1)) == LinComb.term(((1,), (1,)), 1)


def test_dp_comultiply3_restriction():
    # degree-(3,3,0) component of 1 2^(5)
    got = dp_comultiply3((1, 5), (3, 3, 0))
    assert got == LinComb([(((1, 2), (0, 3), ()), 1), (((0, 3), (1, 2), ()), 1)])
    assert dp_comultiply3((2, 2), (4, 0, 0)) == LinComb.term(((2, 2), (), ()), 1)


def test_dp_coassociativity_spot():
    m = (2, 2)
    direct = dp_split(m, (1, 2, 1))
    via = LinComb()
    for (u, rest), c in dp_split(m, (1, 3)).items():
        via = via + c * dp_split(rest, (2, 1)).apply(lambda pair, u=u: LinComb.term((u,) + pair))
    assert direct == via


def test_ext_product_signs():
    assert ext_product((1, 2), (3,)) == LinComb.term((1, 2, 3), 1)
    assert ext_product((2,), (1,)) == LinComb.term((1, 2), -1)
    assert not ext_product((1, 3), (1,))
    assert not ext_product((2, 5), (5,))


def test_ext_comultiply_shuffles():
    got = ext_comultiply((1, 2), (1, 1))
    assert got == LinComb([(((1,), (2,)), 1), (((2,), (1,)), -1)])
    got3 = ext_comultiply((1, 2, 3), (2, 1))
    assert got3 == LinComb([(((1, 2), (3,)), 1), (((1, 3), (2,)), -1), (((2, 3), (1,)), 1)])
    assert ext_comultiply((1, 2, 3), (3, 0)) == LinComb.term(((1, 2, 3), ()), 1)


def test_dp_product_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(100):
        nl = rng.randint(1, 6)
        mono = lambda: dp_strip(tuple(rng.randint(0, 2) for _ in range(nl)))
        a, b, c = mono(), mono(), mono()
        assert dp_product(a, b) == dp_product(b, a)
        left = dp_product(a, b).apply(lambda m: dp_product(m, c))
        right = dp_product(b, c).apply(lambda m: dp_product(a, m))
        assert left == right


def test_ext_square_vanishes():
    rng = random.Random(11)
    for _ in range(50):
        nl = rng.randint(1, 8)
        deg = rng.randint(1, nl)
        m = tuple(sorted(rng.sample(range(1, nl + 1), deg)))
        assert not ext_product(m, m)


def test_e_tensor_and_profiles():
    t = e_tensor((3, 2, 2))
    assert t == ((3,), (0, 2), (0, 0, 2))
    assert e_tensor((2, 2, 0)) == ((2,), (0, 2))


def test_text_roundtrips():
    m = parse_mono("1^3 3")
    assert m == (3, 0, 1)
    assert mono_text(m) == "1^3 3"
    assert parse_mono("()") == ()
    t = parse_tensor("1 2^2 | 1 2^5 | 3")
    assert tensor_text(t) == "1 2^2 | 1 2^5 | 3"
    assert parse_tensor("1 2⊗2") == ((1, 1), (0, 1))


def test_lincomb_text_deterministic():
    lc = LinComb([((1,), 1), ((0, 1), -2)])
    assert lincomb_text(lc, mono_text) == "-2*(2) + (1)"
    assert lincomb_text(LinComb(), mono_text) == "0"
