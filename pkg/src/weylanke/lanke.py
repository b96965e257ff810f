"""Bracketed words on m = 3n-2 letters, the relation spans that present
the three-bracket multilinear component, its dimension and characters,
and the weight-space bridge to the exterior side.

Words use each letter exactly once and come in two skeletons: G1 words
``[[[x-block], y-block], z-block]`` with block sizes (n, n-1, n-1), and
G2 words ``[[x-block], [y-block], z-block]`` with sizes (n, n, n-2).
Skew commutativity makes sorted blocks a normal form; a G2 word also
fixes the block with the smaller minimum first, at the cost of a sign.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import cache
from itertools import combinations

import numpy as np

from .combinatorics import (
    CycleType,
    Partition,
    class_size,
    mn_character,
    normalize_partition,
    partitions,
    specht_dim,
)
from .linalg import (
    PRIMES,
    ModEchelon,
    minor_spot_check,
    rank_mod,
    rank_rational,
    rref_rational,
)
from .tensor_algebra import LinComb

Block = tuple[int, ...]
Word = tuple[str, Block, Block, Block]

PRESENTATIONS = ("full", "g1_r145", "g1_r14")


def sort_sign(seq) -> tuple[int, Block]:
    """Sign of the permutation sorting distinct integers, with the result."""
    seq = list(seq)
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return (-1 if inv % 2 else 1), tuple(sorted(seq))


def _check_disjoint(*blocks) -> None:
    total = sum(len(b) for b in blocks)
    if len({t for b in blocks for t in b}) != total:
        raise ValueError("blocks share a letter")


def normalize_g1(xs, ys, zs) -> tuple[int, Word]:
    s1, x = sort_sign(xs)
    s2, y = sort_sign(ys)
    s3, z = sort_sign(zs)
    _check_disjoint(x, y, z)
    return s1 * s2 * s3, ("G1", x, y, z)


def normalize_g2(first, second, zs) -> tuple[int, Word]:
    s1, a = sort_sign(first)
    s2, b = sort_sign(second)
    s3, z = sort_sign(zs)
    _check_disjoint(a, b, z)
    sign = s1 * s2 * s3
    if a and b and min(b) < min(a):
        a, b = b, a
        sign = -sign
    return sign, ("G2", a, b, z)


def normalize(kind: str, blocks) -> tuple[int, Word]:
    if kind == "G1":
        return normalize_g1(*blocks)
    if kind == "G2":
        return normalize_g2(*blocks)
    raise ValueError(f"unknown word kind {kind!r}")


def g1_words(n: int) -> list[Word]:
    m = 3 * n - 2
    letters = tuple(range(1, m + 1))
    out = []
    for xs in combinations(letters, n):
        rest = tuple(a for a in letters if a not in xs)
        for ys in combinations(rest, n - 1):
            zs = tuple(a for a in rest if a not in ys)
            out.append(("G1", xs, ys, zs))
    return out


def g2_words(n: int) -> list[Word]:
    m = 3 * n - 2
    letters = tuple(range(1, m + 1))
    out = []
    for xs in combinations(letters, n):
        rest = tuple(a for a in letters if a not in xs)
        for ys in combinations(rest, n):
            if min(ys) < min(xs):
                continue
            zs = tuple(a for a in rest if a not in ys)
            out.append(("G2", xs, ys, zs))
    return out


@cache
def word_index(n: int, include_g2: bool) -> dict[Word, int]:
    words = g1_words(n) + (g2_words(n) if include_g2 else [])
    return {w: i for i, w in enumerate(sorted(words))}


def word_to_text(word: Word) -> str:
    kind, a, b, z = word
    inner = "[" + ",".join(map(str, a)) + "]"
    if kind == "G1":
        mid = "[" + ",".join([inner] + [str(t) for t in b]) + "]"
        return "[" + ",".join([mid] + [str(t) for t in z]) + "]"
    second = "[" + ",".join(map(str, b)) + "]"
    return "[" + ",".join([inner, second] + [str(t) for t in z]) + "]"


def word_from_text(text: str) -> tuple[int, Word]:
    """Parse a bracket word; unsorted blocks are normalized and signed."""
    tree = json.loads(text)
    if not isinstance(tree, list):
        raise ValueError("not a bracket word")
    compound = [t for t in tree if isinstance(t, list)]
    plain = [t for t in tree if isinstance(t, int)]
    if len(compound) == 1:
        mid = compound[0]
        inner = [t for t in mid if isinstance(t, list)]
        if len(inner) != 1:
            raise ValueError("malformed word: expected one inner block")
        xs, ys = inner[0], [t for t in mid if isinstance(t, int)]
        if not (len(xs) >= 2 and len(ys) == len(xs) - 1 and len(plain) == len(xs) - 1):
            raise ValueError(f"block sizes {len(xs)},{len(ys)},{len(plain)} do not fit any bracket arity")
        return normalize_g1(xs, ys, plain)
    if len(compound) == 2:
        if any(isinstance(t, list) for blk in compound for t in blk):
            raise ValueError("malformed word: nested blocks in a two-block word")
        a, b = compound
        if not (len(a) >= 2 and len(b) == len(a) and len(plain) == len(a) - 2):
            raise ValueError(f"block sizes {len(a)},{len(b)},{len(plain)} do not fit any bracket arity")
        return normalize_g2(a, b, plain)
    raise ValueError("not a three-bracket word")


# ---------------------------------------------------------------------------
# Relation rows

Row = dict[int, int]


def _add_word(row: Row, index: dict[Word, int], coeff: int, sign_word: tuple[int, Word]) -> None:
    sign, word = sign_word
    col = index[word]
    nv = row.get(col, 0) + coeff * sign
    if nv:
        row[col] = nv
    else:
        del row[col]


def r1_row(n: int, index, xs: Block, ys: Block, zs: Block) -> Row:
    """Jacobi exchange of the y block into the inner bracket."""
    row: Row = {}
    _add_word(row, index, 1, normalize_g1(xs, ys, zs))
    for i, xi in enumerate(xs):
        sign = -1 if i % 2 else 1
        rest = xs[:i] + xs[i + 1 :]
        _add_word(row, index, -sign, normalize_g1((xi,) + ys, rest, zs))
    return row


def r2_row(n: int, index, xs: Block, ys: Block, zs: Block) -> Row:
    """Jacobi exchange of the z block across the outer bracket (needs G2)."""
    row: Row = {}
    _add_word(row, index, 1, normalize_g1(xs, ys, zs))
    _add_word(row, index, -1, normalize_g1(xs, zs, ys))
    for i, yi in enumerate(ys):
        sign = -1 if i % 2 else 1
        resty = ys[:i] + ys[i + 1 :]
        _add_word(row, index, -sign, normalize_g2(xs, (yi,) + zs, resty))
    return row


def r3_row(n: int, index, xs: Block, ys: Block, zs: Block) -> Row:
    """Jacobi expansion of a G2 word into G1 words."""
    row: Row = {}
    _add_word(row, index, 1, normalize_g2(xs, ys, zs))
    for i, xi in enumerate(xs):
        sign = 1 if i % 2 else -1
        rest = xs[:i] + xs[i + 1 :]
        _add_word(row, index, -sign, normalize_g1(ys, (xi,) + zs, rest))
    return row


def r4_row(n: int, index, xs: Block, ys: Block, zs: Block) -> Row:
    """R2 with its G2 words re-expanded through R3; G1 words only."""
    row: Row = {}
    _add_word(row, index, 1, normalize_g1(xs, ys, zs))
    _add_word(row, index, -1, normalize_g1(xs, zs, ys))
    for i, yi in enumerate(ys):
        isign = -1 if i % 2 else 1
        resty = ys[:i] + ys[i + 1 :]
        for j, xj in enumerate(xs):
            jsign = 1 if j % 2 else -1
            restx = xs[:j] + xs[j + 1 :]
            _add_word(row, index, -isign * jsign, normalize_g1((yi,) + zs, (xj,) + resty, restx))
    return row


def r5_row(n: int, index, xs: Block, ys: Block, zs: Block) -> Row:
    """Symmetric sum moving one letter of either n-block inward.

    Extracting the i-th letter carries (-1)^(i-1); the unsigned variant
    is not a relation.
    """
    row: Row = {}
    for i, yi in enumerate(ys):
        sign = -1 if i % 2 else 1
        rest = ys[:i] + ys[i + 1 :]
        _add_word(row, index, sign, normalize_g1(xs, (yi,) + zs, rest))
    for i, xi in enumerate(xs):
        sign = -1 if i % 2 else 1
        rest = xs[:i] + xs[i + 1 :]
        _add_word(row, index, sign, normalize_g1(ys, (xi,) + zs, rest))
    return row


def relation_rows(n: int, which, include_g2: bool | None = None) -> list[Row]:
    """All relation instances over canonical block data, deduplicated."""
    which = tuple(which)
    needs_g2 = any(r in ("R2", "R3") for r in which)
    if include_g2 is None:
        include_g2 = needs_g2
    if needs_g2 and not include_g2:
        raise ValueError("R2/R3 involve two-block words; the span needs them")
    index = word_index(n, include_g2)
    m = 3 * n - 2
    letters = tuple(range(1, m + 1))
    rows: list[Row] = []
    seen: set = set()

    def push(row: Row) -> None:
        if not row:
            return
        key = tuple(sorted(row.items()))
        if key not in seen:
            seen.add(key)
            rows.append(row)

    for name in which:
        if name in ("R1", "R2", "R4"):
            for xs in combinations(letters, n):
                rest = tuple(a for a in letters if a not in xs)
                for ys in combinations(rest, n - 1):
                    zs = tuple(a for a in rest if a not in ys)
                    fn = {"R1": r1_row, "R2": r2_row, "R4": r4_row}[name]
                    push(fn(n, index, xs, ys, zs))
        elif name in ("R3", "R5"):
            for xs in combinations(letters, n):
                rest = tuple(a for a in letters if a not in xs)
                for ys in combinations(rest, n):
                    if name == "R5" and min(ys) < min(xs):
                        continue
                    zs = tuple(a for a in rest if a not in ys)
                    fn = {"R3": r3_row, "R5": r5_row}[name]
                    push(fn(n, index, xs, ys, zs))
        else:
            raise ValueError(f"unknown relation {name!r}")
    return rows


_PRESENTATION_DATA = {
    "full": (("R1", "R2", "R3"), True),
    "g1_r145": (("R1", "R4", "R5"), False),
    "g1_r14": (("R1", "R4"), False),
}


def presentation_rows(n: int, presentation: str) -> tuple[list[Row], int]:
    which, include_g2 = _PRESENTATION_DATA[presentation]
    rows = relation_rows(n, which, include_g2)
    return rows, len(word_index(n, include_g2))


def lie_dim(n: int, presentation: str = "g1_r145", *, dual_prime: bool = True) -> int:
    """Dimension of the generator space modulo the relation span."""
    if presentation not in _PRESENTATION_DATA:
        raise ValueError(f"unknown presentation {presentation!r}")
    rows, ncols = presentation_rows(n, presentation)
    if max(len(rows), ncols) <= 600:
        return ncols - rank_rational(rows)
    ranks = {rank_mod(rows, ncols, p) for p in (PRIMES if dual_prime else PRIMES[:1])}
    if len(ranks) != 1:
        raise ArithmeticError(f"modular ranks disagree: {ranks}")
    return ncols - ranks.pop()


def lie2_dim(n: int) -> int:
    """Two-bracket calibration on 2n-1 letters: one generator skeleton,
    one Jacobi-type relation."""
    m = 2 * n - 1
    letters = tuple(range(1, m + 1))
    words = {}
    for xs in combinations(letters, n):
        ys = tuple(a for a in letters if a not in xs)
        words[("G", xs, ys)] = len(words)
    rows: list[Row] = []
    for xs in combinations(letters, n):
        ys = tuple(a for a in letters if a not in xs)
        row: Row = {}
        row[words[("G", xs, ys)]] = 1
        for i, xi in enumerate(xs):
            sign = -1 if i % 2 else 1
            rest = xs[:i] + xs[i + 1 :]
            s1, nx = sort_sign((xi,) + ys)
            col = words[("G", nx, rest)]
            nv = row.get(col, 0) - sign * s1
            if nv:
                row[col] = nv
            else:
                del row[col]
        rows.append(row)
    return len(words) - rank_rational(rows)


# ---------------------------------------------------------------------------
# Quotient action and characters


class QuotientContext:
    """Reduced relation span plus the induced quotient coordinates."""

    def __init__(self, n: int, presentation: str = "g1_r145"):
        self.n = n
        self.presentation = presentation
        rows, ncols = presentation_rows(n, presentation)
        self.ncols = ncols
        include_g2 = _PRESENTATION_DATA[presentation][1]
        self.index = word_index(n, include_g2)
        self.words = sorted(self.index, key=self.index.__getitem__)
        self.modulus: int | None = None
        if max(len(rows), ncols) <= 600:
            pivots = rref_rational(rows)
            self.pivcols = sorted(pivots)
            self._rows = {c: pivots[c] for c in pivots}
        else:
            self.modulus = PRIMES[0]
            ech = ModEchelon(ncols, self.modulus)
            for row in rows:
                ech.add(row)
            ech.flush()
            self.pivcols = sorted(ech.pivcols)
            self._rowidx = ech.row_for_pivot()
            self._mat = ech.rows.astype(np.int32)
        self.free = [c for c in range(ncols) if c not in set(self.pivcols)]
        self.free_pos = {c: i for i, c in enumerate(self.free)}

    @property
    def dimension(self) -> int:
        return len(self.free)

    def _pivot_row_value(self, pivcol: int, col: int):
        if self.modulus is None:
            return self._rows[pivcol].get(col, 0)
        return int(self._mat[self._rowidx[pivcol], col])

    def class_trace(self, cyc: CycleType) -> int:
        """Trace of a cycle-type representative on the quotient."""
        return self.perm_trace(_representative(cyc))

    def perm_trace(self, perm: dict[int, int]) -> int:
        total = 0
        p = self.modulus
        for col in self.free:
            word = self.words[col]
            kind, a, b, z = word
            blocks = (tuple(perm[t] for t in a), tuple(perm[t] for t in b), tuple(perm[t] for t in z))
            sign, nw = normalize(kind, blocks)
            tgt = self.index[nw]
            if tgt in self.free_pos:
                if tgt == col:
                    total += sign
            else:
                total -= sign * self._pivot_row_value(tgt, col)
            if p is not None:
                total %= p
        if p is not None:
            # trace magnitudes are bounded by the dimension, far below p/2
            if total > p // 2:
                total -= p
            return int(total)
        total = Fraction(total)
        if total.denominator != 1:
            raise ArithmeticError("non-integral trace; this is a bug")
        return int(total)


def _representative(cyc: CycleType) -> dict[int, int]:
    perm = {}
    nxt = 1
    for part in normalize_partition(cyc):
        cycle = list(range(nxt, nxt + part))
        for i, a in enumerate(cycle):
            perm[a] = cycle[(i + 1) % part]
        nxt += part
    return perm


@cache
def quotient_context(n: int, presentation: str = "g1_r145") -> QuotientContext:
    return QuotientContext(n, presentation)


def lie_character(n: int, cyc: CycleType) -> int:
    cyc = normalize_partition(cyc)
    if sum(cyc) != 3 * n - 2:
        raise ValueError(f"cycle type {cyc} is not a class of the right group")
    return quotient_context(n).class_trace(cyc)


def specht_multiplicities(n: int) -> tuple[tuple[Partition, int], ...]:
    """Constituent multiplicities from class-size-weighted inner products."""
    m = 3 * n - 2
    traces = {cyc: lie_character(n, cyc) for cyc in partitions(m)}
    fact = 1
    for k in range(2, m + 1):
        fact *= k
    out = []
    for p in sorted(partitions(m)):
        tot = sum(class_size(c) * traces[c] * mn_character(p, c) for c in traces)
        mult = Fraction(tot, fact)
        if mult.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity for {p}: {mult}")
        if mult:
            out.append((p, int(mult)))
    return tuple(out)


# ---------------------------------------------------------------------------
# Bridge between the exterior weight space and the word presentation


def _distinct_basis_lambda(n: int) -> list[tuple[Block, Block, Block]]:
    m = 3 * n - 2
    letters = tuple(range(1, m + 1))
    out = []
    for xs in combinations(letters, n):
        rest = tuple(a for a in letters if a not in xs)
        for ys in combinations(rest, n - 1):
            zs = tuple(a for a in rest if a not in ys)
            out.append((xs, ys, zs))
    return out


def _distinct_basis_nu(n: int) -> list[tuple[Block, Block, Block]]:
    m = 3 * n - 2
    letters = tuple(range(1, m + 1))
    out = []
    for xs in combinations(letters, n):
        rest = tuple(a for a in letters if a not in xs)
        for ys in combinations(rest, n):
            zs = tuple(a for a in rest if a not in ys)
            out.append((xs, ys, zs))
    return out


def schur_bridge(n: int) -> dict:
    """Restrict the three exterior maps to the all-distinct-letters weight
    space, compare the quotient dimension with the word quotient, and
    check that bracketing carries each restricted map's rows to the
    matching relation rows."""
    from .gamma_maps import omega_gamma1, omega_gamma2, omega_gamma3

    index = word_index(n, False)
    basis_l = _distinct_basis_lambda(n)
    basis_n = _distinct_basis_nu(n)
    col = {t: i for i, t in enumerate(basis_l)}

    def to_row(lc) -> Row:
        row: Row = {}
        for tensor, c in lc.items():
            row[col[tensor]] = row.get(col[tensor], 0) + c
        return {k: v for k, v in row.items() if v}

    def bracket_row(lc) -> Row:
        row: Row = {}
        for tensor, c in lc.items():
            sign, word = normalize_g1(*tensor)
            tgt = index[word]
            nv = row.get(tgt, 0) + c * sign
            if nv:
                row[tgt] = nv
            else:
                del row[tgt]
        return row

    rows = []
    row_checks = 0
    for w in basis_l:
        img1 = omega_gamma1(n, LinComb.term(w))
        img2 = omega_gamma2(n, LinComb.term(w))
        rows.append(to_row(img1))
        rows.append(to_row(img2))
        if bracket_row(img1) != r1_row(n, index, *w):
            raise AssertionError(f"bracketed row of the first map differs at {w}")
        if bracket_row(img2) != r4_row(n, index, *w):
            raise AssertionError(f"bracketed row of the second map differs at {w}")
        row_checks += 2
    for u in basis_n:
        img3 = omega_gamma3(n, LinComb.term(u))
        rows.append(to_row(img3))
        if bracket_row(img3) != r5_row(n, index, *u):
            raise AssertionError(f"bracketed row of the third map differs at {u}")
        row_checks += 1
    coker = len(basis_l) - rank_rational(rows)
    dim = lie_dim(n)
    return {
        "n": n,
        "weight_space_dim": len(basis_l),
        "coker_dim": coker,
        "lie_dim": dim,
        "match": coker == dim,
        "relation_rows_checked": row_checks,
    }


def dim_w1(n: int) -> int:
    """Number of normal-form G1 words: C(m,n) * C(m-n, n-1)."""
    from math import comb

    m = 3 * n - 2
    return comb(m, n) * comb(m - n, n - 1)


def dim_w(n: int) -> int:
    """G1 words plus block-swap-reduced G2 words."""
    from math import comb

    m = 3 * n - 2
    return dim_w1(n) + comb(m, n) * comb(m - n, n) // 2


def expected_lie_dim(n: int) -> int:
    """Hook-length value of the two-constituent sum."""
    tall = normalize_partition((3,) * (n - 2) + (2, 1, 1))
    wide = normalize_partition((3,) * (n - 1) + (1,))
    return specht_dim(tall) + specht_dim(wide)


def spot_check_presentation(n: int, presentation: str, n_cols: int = 200, seed: int = 20240801) -> bool:
    """Exact-rational rank of a random column minor agrees with both primes."""
    rows, ncols = presentation_rows(n, presentation)
    return minor_spot_check(rows, ncols, n_cols, seed)
