import random
from fractions import Fraction


from weylanke.linalg import (
    PRIMES,
    ModEchelon,
    minor_spot_check,
    rank_auto,
    rank_mod,
    rank_rational,
    rref_rational,
)


def dense_to_rows(mat):
    return [{j: v for j, v in enumerate(row) if v} for row in mat]


def test_rank_rational_known():
    rows = dense_to_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank_rational(rows) == 2
    assert rank_rational([]) == 0
    assert rank_rational([{}]) == 0
    rows = dense_to_rows([[Fraction(1, 2), 1], [1, 2], [0, 5]])
    assert rank_rational(rows) == 2


def test_rref_rational_properties():
    rows = dense_to_rows([[1, 2, 0, 3], [0, 0, 1, 4], [1, 2, 1, 7], [2, 4, 1, 10]])
    piv = rref_rational(rows)
    assert sorted(piv) == [0, 2]
    for c, row in piv.items():
        assert row[c] == 1
        for other in piv:
            if other != c:
                assert other not in row


def test_rank_mod_matches_rational_on_random_sparse():
    rng = random.Random(123)
    for _ in range(10):
        nrows, ncols = rng.randint(5, 40), rng.randint(5, 30)
        rows = []
        for _ in range(nrows):
            row = {}
            for _ in range(rng.randint(0, 6)):
                row[rng.randrange(ncols)] = rng.randint(-5, 5)
            rows.append({k: v for k, v in row.items() if v})
        exact = rank_rational(rows)
        for p in PRIMES:
            assert rank_mod(rows, ncols, p) == exact


def test_mod_echelon_batches_are_consistent():
    rng = random.Random(321)
    ncols = 50
    rows = []
    for _ in range(200):
        row = {rng.randrange(ncols): rng.randint(1, 9) for _ in range(rng.randint(1, 4))}
        rows.append(row)
    exact = rank_rational(rows)
    for batch in (3, 17, 1000):
        ech = ModEchelon(ncols, PRIMES[0], batch=batch)
        for row in rows:
            ech.add(row)
        assert ech.rank == exact


def test_rank_auto_and_dual_prime():
    rows = dense_to_rows([[1, 1], [1, 2], [2, 3]])
    assert rank_auto(rows, 2) == 2


def test_minor_spot_check():
    rng = random.Random(7)
    rows = []
    ncols = 40
    for _ in range(60):
        rows.append({rng.randrange(ncols): rng.randint(-3, 3) for _ in range(3)})
    rows = [{k: v for k, v in r.items() if v} for r in rows]
    assert minor_spot_check(rows, ncols, 20, seed=1)


def test_rref_pivot_rows_reduce_incoming():
    # solving a dependent system must leave no spurious pivots
    rows = dense_to_rows([[1, 1, 1], [1, 2, 3], [2, 3, 4], [0, 1, 2]])
    piv = rref_rational(rows)
    assert len(piv) == 2
