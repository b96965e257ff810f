"""Exact and modular linear algebra on sparse integer/rational rows.

Rows are dicts mapping column index to a nonzero coefficient.  Small
systems are eliminated exactly over the rationals; large ones fall back
to row reduction modulo one or two ~20-bit primes, sized so that a
float64 matrix product of up to 4096 accumulated terms is exact.  A
modular rank can only undercount, so agreement of two primes plus an
exact spot check on a random column minor is the acceptance protocol.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

Row = dict[int, int | Fraction]

# primes just below/above 2^20; (p-1)^2 * 4096 < 2^53 keeps dgemm exact
PRIMES = (1048573, 1048583)
EXACT_DIMENSION_LIMIT = 5000
_CHUNK = 4096


def _reduce_sparse(row: Row, pivots: dict[int, Row]) -> Row:
    row = dict(row)
    while row:
        c = min(row)
        if row[c] == 0:
            del row[c]
            continue
        piv = pivots.get(c)
        if piv is None:
            return row
        f = row.pop(c)
        for cc, v in piv.items():
            if cc == c:
                continue
            nv = row.get(cc, 0) - f * v
            if nv:
                row[cc] = nv
            else:
                row.pop(cc, None)
    return {}


def rank_rational(rows) -> int:
    """Exact rank over the rationals, sparse Gaussian elimination."""
    pivots: dict[int, Row] = {}
    for raw in rows:
        row = _reduce_sparse(raw, pivots)
        if not row:
            continue
        c = min(row)
        inv = Fraction(1, 1) / Fraction(row[c])
        pivots[c] = {cc: v * inv for cc, v in row.items()}
    return len(pivots)


def rref_rational(rows) -> dict[int, Row]:
    """Fully reduced row echelon form, returned as pivot column -> row.

    Every returned row has coefficient 1 at its pivot column and zeros
    at all other pivot columns.
    """
    pivots: dict[int, Row] = {}
    for raw in rows:
        row: Row = {c: Fraction(v) for c, v in raw.items() if v}
        while True:
            hit = [c for c in row if c in pivots]
            if not hit:
                break
            c = min(hit)
            f = row.pop(c)
            for cc, v in pivots[c].items():
                if cc == c:
                    continue
                nv = row.get(cc, 0) - f * v
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        if not row:
            continue
        c = min(row)
        inv = Fraction(1, 1) / row[c]
        row = {cc: v * inv for cc, v in row.items()}
        for pc, prow in list(pivots.items()):
            f = prow.get(c)
            if not f:
                continue
            new = dict(prow)
            del new[c]
            for cc, v in row.items():
                if cc == c:
                    continue
                nv = new.get(cc, 0) - f * v
                if nv:
                    new[cc] = nv
                else:
                    new.pop(cc, None)
            pivots[pc] = new
        pivots[c] = row
    return pivots


def _mm_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """(a @ b) mod p with float64 blocks kept inside the exact window."""
    out = np.zeros((a.shape[0], b.shape[1]))
    for lo in range(0, a.shape[1], _CHUNK):
        hi = lo + _CHUNK
        out += a[:, lo:hi] @ b[lo:hi]
        np.mod(out, p, out=out)
    return out


class ModEchelon:
    """Incremental reduced row echelon form over GF(p), float64 backed."""

    def __init__(self, ncols: int, p: int, batch: int = 768):
        self.ncols = ncols
        self.p = p
        self.batch = batch
        self.rows = np.zeros((0, ncols))
        self.pivcols: list[int] = []
        self._pending: list[Row] = []

    def add(self, row: Row) -> None:
        self._pending.append(row)
        if len(self._pending) >= self.batch:
            self.flush()

    def flush(self) -> None:
        if not self._pending:
            return
        p = self.p
        m = np.zeros((len(self._pending), self.ncols))
        for i, row in enumerate(self._pending):
            for c, v in row.items():
                m[i, c] = v % p
        self._pending = []
        if self.pivcols:
            m -= _mm_mod(m[:, self.pivcols], self.rows, p)
            np.mod(m, p, out=m)
        new_cols: list[int] = []
        new_idx: list[int] = []
        for k in range(m.shape[0]):
            nz = np.nonzero(m[k])[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            m[k] = m[k] * pow(int(m[k, c]), p - 2, p) % p
            col = m[:, c].copy()
            col[k] = 0.0
            hit = np.nonzero(col)[0]
            if hit.size:
                m[hit] = (m[hit] - np.outer(col[hit], m[k])) % p
            new_cols.append(c)
            new_idx.append(k)
        if not new_cols:
            return
        new_rows = m[new_idx]
        if self.pivcols:
            self.rows -= _mm_mod(self.rows[:, new_cols], new_rows, p)
            np.mod(self.rows, p, out=self.rows)
        self.rows = np.vstack([self.rows, new_rows])
        self.pivcols.extend(new_cols)

    @property
    def rank(self) -> int:
        self.flush()
        return len(self.pivcols)

    def row_for_pivot(self) -> dict[int, int]:
        """Map pivot column -> index into self.rows."""
        self.flush()
        return {c: i for i, c in enumerate(self.pivcols)}


def rank_mod(rows, ncols: int, p: int) -> int:
    ech = ModEchelon(ncols, p)
    for row in rows:
        ech.add(row)
    return ech.rank


def rank_auto(rows, ncols: int, *, dual_prime: bool = True, primes=PRIMES) -> int:
    """Exact rank when small; modular rank (one or two primes) when large."""
    rows = list(rows)
    if max(len(rows), ncols) <= EXACT_DIMENSION_LIMIT and len(rows) * ncols <= 400_000:
        return rank_rational(rows)
    r = rank_mod(rows, ncols, primes[0])
    if dual_prime:
        r2 = rank_mod(rows, ncols, primes[1])
        if r != r2:
            raise ArithmeticError(f"modular ranks disagree: {r} vs {r2}")
    return r


def minor_spot_check(rows, ncols: int, n_cols_sample: int, seed: int, primes=PRIMES) -> bool:
    """Exact rational rank of a random column minor vs both modular ranks."""
    import random

    rng = random.Random(seed)
    cols = sorted(rng.sample(range(ncols), min(n_cols_sample, ncols)))
    colmap = {c: i for i, c in enumerate(cols)}
    sub = []
    for row in rows:
        r = {colmap[c]: v for c, v in row.items() if c in colmap}
        if r:
            sub.append(r)
    exact = rank_rational(sub)
    return all(rank_mod(sub, len(cols), p) == exact for p in primes)
