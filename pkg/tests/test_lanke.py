import random
from math import comb, factorial

import pytest

from weylanke.combinatorics import mn_character, partitions, specht_dim
from weylanke.lanke import (
    PRESENTATIONS,
    QuotientContext,
    _representative,
    dim_w,
    dim_w1,
    expected_lie_dim,
    g1_words,
    g2_words,
    lie2_dim,
    lie_character,
    lie_dim,
    normalize,
    normalize_g1,
    normalize_g2,
    presentation_rows,
    quotient_context,
    r1_row,
    r5_row,
    relation_rows,
    schur_bridge,
    specht_multiplicities,
    word_from_text,
    word_index,
    word_to_text,
)
from weylanke.linalg import rank_rational


def test_normalize_g1_signs():
    sign, word = normalize_g1((2, 1, 3), (4, 5), (6, 7))
    assert sign == -1 and word == ("G1", (1, 2, 3), (4, 5), (6, 7))
    sign, word = normalize_g1((1, 2, 3), (5, 4), (7, 6))
    assert sign == 1
    sign, word = normalize_g1((1, 2), (3,), (4,))
    assert sign == 1 and word == ("G1", (1, 2), (3,), (4,))


def test_normalize_g2_block_swap():
    sign, word = normalize_g2((3, 4), (1, 2), ())
    assert sign == -1 and word == ("G2", (1, 2), (3, 4), ())
    sign, word = normalize_g2((1, 2), (3, 4), ())
    assert sign == 1


def test_word_counts_match_formulas():
    for n in (2, 3, 4):
        assert len(g1_words(n)) == dim_w1(n) == comb(3 * n - 2, n) * comb(2 * n - 2, n - 1)
        assert len(g1_words(n)) + len(g2_words(n)) == dim_w(n)


def test_word_text_roundtrip():
    sign, word = word_from_text("[[[1,2,3],4,5],6,7]")
    assert sign == 1 and word_to_text(word) == "[[[1,2,3],4,5],6,7]"
    sign, word = word_from_text("[[[2,1,3],4,5],6,7]")
    assert sign == -1
    sign, word = word_from_text("[[3,4,5],[1,2,6],7]")
    assert sign == -1 and word == ("G2", (1, 2, 6), (3, 4, 5), (7,))
    with pytest.raises(ValueError):
        word_from_text("[1,2,3]")


def test_r1_instance_at_n2():
    index = word_index(2, False)
    row = r1_row(2, index, (1, 2), (3,), (4,))
    words = sorted(index, key=index.__getitem__)
    as_words = {words[c]: v for c, v in row.items()}
    assert as_words == {
        ("G1", (1, 2), (3,), (4,)): 1,
        ("G1", (1, 3), (2,), (4,)): -1,
        ("G1", (2, 3), (1,), (4,)): 1,
    }


def test_r5_instance_at_n2_has_alternating_signs():
    index = word_index(2, False)
    row = r5_row(2, index, (1, 2), (3, 4), ())
    words = sorted(index, key=index.__getitem__)
    as_words = {words[c]: v for c, v in row.items()}
    assert as_words == {
        ("G1", (1, 2), (3,), (4,)): 1,
        ("G1", (1, 2), (4,), (3,)): -1,
        ("G1", (3, 4), (1,), (2,)): 1,
        ("G1", (3, 4), (2,), (1,)): -1,
    }


def test_relations_reject_bad_names():
    with pytest.raises(ValueError):
        relation_rows(2, ("R9",))
    with pytest.raises(ValueError):
        relation_rows(2, ("R2",), include_g2=False)


@pytest.mark.parametrize("n", [2, 3])
def test_r4_r5_lie_in_full_span(n):
    rows = relation_rows(n, ("R1", "R2", "R3"), True)
    base = rank_rational(rows)
    extra = relation_rows(n, ("R4", "R5"), True)
    assert rank_rational(rows + extra) == base


@pytest.mark.parametrize("n", [2, 3])
def test_presentations_agree_small(n):
    dims = {lie_dim(n, p) for p in PRESENTATIONS}
    assert dims == {expected_lie_dim(n)}


def test_expected_dims():
    assert expected_lie_dim(2) == 6
    assert expected_lie_dim(3) == 56
    assert expected_lie_dim(4) == 660


def test_lie2_calibration():
    assert [lie2_dim(n) for n in (2, 3, 4)] == [2, 5, 14]
    assert lie2_dim(3) == specht_dim((2, 2, 1))


def test_character_identity_class():
    assert lie_character(2, (1, 1, 1, 1)) == lie_dim(2)
    assert lie_character(3, (1,) * 7) == lie_dim(3)


def test_character_n2_matches_sum_of_irreducibles():
    for cyc in partitions(4):
        expect = mn_character((3, 1), cyc) + mn_character((2, 1, 1), cyc)
        assert lie_character(2, cyc) == expect, cyc


def test_character_is_class_function():
    rng = random.Random(17)
    ctx = quotient_context(2)
    m = 4
    for cyc in partitions(m):
        base = ctx.class_trace(cyc)
        rep = _representative(cyc)
        for _ in range(3):
            tau = list(range(1, m + 1))
            rng.shuffle(tau)
            tmap = {i + 1: tau[i] for i in range(m)}
            tinv = {v: k for k, v in tmap.items()}
            conj = {a: tmap[rep[tinv[a]]] for a in tinv}
            assert ctx.perm_trace(conj) == base


def test_specht_multiplicities_small():
    assert specht_multiplicities(2) == (((2, 1, 1), 1), ((3, 1), 1))
    assert specht_multiplicities(3) == (((3, 2, 1, 1), 1), ((3, 3, 1), 1))


def test_multiplicity_dimension_bookkeeping():
    for n in (2, 3):
        total = sum(m * specht_dim(p) for p, m in specht_multiplicities(n))
        assert total == lie_dim(n)


@pytest.mark.parametrize("n", [2, 3])
def test_schur_bridge(n):
    rep = schur_bridge(n)
    assert rep["match"]
    assert rep["coker_dim"] == expected_lie_dim(n)
    assert rep["weight_space_dim"] == dim_w1(n)
    assert rep["relation_rows_checked"] == 2 * dim_w1(n) + comb(3 * n - 2, n) * comb(2 * n - 2, n)


def test_relation_rows_deduplicate():
    rows = relation_rows(2, ("R1",))
    keys = {tuple(sorted(r.items())) for r in rows}
    assert len(keys) == len(rows)


def test_presentation_rows_shapes():
    rows, ncols = presentation_rows(2, "full")
    assert ncols == dim_w(2)
    rows, ncols = presentation_rows(2, "g1_r14")
    assert ncols == dim_w1(2)


def test_normalize_rejects_shared_letters():
    with pytest.raises(ValueError):
        normalize_g1((1, 2), (2,), (4,))
    with pytest.raises(ValueError):
        normalize_g2((1, 2), (2, 3), ())


def test_word_parser_rejects_bad_sizes():
    with pytest.raises(ValueError):
        word_from_text("[[[1,2],3,4],5]")
    with pytest.raises(ValueError):
        word_from_text("[[1,2],[3,4,5],6]")
    with pytest.raises(ValueError):
        word_from_text("[[[1,2],2],3]")
