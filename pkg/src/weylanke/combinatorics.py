"""Partitions, tableaux, Kostka numbers, Pieri constituents and
symmetric-group characters.

Everything here is exact integer combinatorics.  Partitions are plain
tuples with trailing zeros stripped; tableaux store one multiplicity
row per tableau row (``counts[i][j]`` = number of entries ``j + 1`` in
row ``i + 1``), which makes every representable tableau row
semistandard by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

Partition = tuple[int, ...]


def normalize_partition(parts) -> Partition:
    """Canonical partition tuple: trailing zeros stripped, validated."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts!r}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form, e.g. ``"4,2,1"``."""
    text = text.strip()
    if not text:
        return ()
    return normalize_partition(int(tok) for tok in text.split(","))


def partition_text(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def conjugate(p: Partition) -> Partition:
    """Column lengths of p; an involution."""
    p = normalize_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def dominates(p: Partition, q: Partition) -> bool:
    """Dominance order: every partial sum of p is >= that of q (|p| = |q|)."""
    if sum(p) != sum(q):
        return False
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


@cache
def partitions(m: int, max_rows: int | None = None, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of m, largest-first lexicographic order."""
    if m == 0:
        return ((),)
    if max_rows is not None and max_rows <= 0:
        return ()
    out: list[Partition] = []
    top = m if max_part is None else min(m, max_part)
    for first in range(top, 0, -1):
        sub_rows = None if max_rows is None else max_rows - 1
        for rest in partitions(m - first, sub_rows, first):
            out.append((first,) + rest)
    return tuple(out)


# ---------------------------------------------------------------------------
# Tableaux


def _strip_counts(rows) -> tuple[tuple[int, ...], ...]:
    rows = [list(r) for r in rows]
    while rows and not any(rows[-1]):
        rows.pop()
    width = 0
    for r in rows:
        for j, c in enumerate(r):
            if c:
                width = max(width, j + 1)
    return tuple(tuple(r[j] if j < len(r) else 0 for j in range(width)) for r in rows)


@dataclass(frozen=True)
class Tableau:
    """Row-semistandard tableau stored as per-row entry multiplicities."""

    counts: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rows) -> "Tableau":
        """Build from (possibly ragged, zero-padded) multiplicity rows."""
        rows = _strip_counts(rows)
        if any(c < 0 for r in rows for c in r):
            raise ValueError("negative multiplicity")
        return cls(rows)

    @classmethod
    def from_entries(cls, rows) -> "Tableau":
        """Build from explicit entry rows, e.g. [[1,1,3],[2,3]]."""
        width = max((max(r) for r in rows if r), default=0)
        counts = []
        for r in rows:
            if list(r) != sorted(r):
                raise ValueError(f"row not weakly increasing: {r!r}")
            row = [0] * width
            for e in r:
                row[e - 1] += 1
            counts.append(row)
        return cls.of(counts)

    @property
    def shape(self) -> Partition:
        return normalize_partition(sum(r) for r in self.counts)

    @property
    def nrows(self) -> int:
        return len(self.counts)

    @property
    def width(self) -> int:
        return len(self.counts[0]) if self.counts else 0

    def weight(self, width: int | None = None) -> tuple[int, ...]:
        w = [sum(r[j] for r in self.counts) for j in range(self.width)]
        if width is not None:
            if width < self.width:
                raise ValueError("width too small for tableau weight")
            w += [0] * (width - self.width)
        return tuple(w)

    def row_entries(self, i: int) -> tuple[int, ...]:
        out = []
        for j, c in enumerate(self.counts[i]):
            out.extend([j + 1] * c)
        return tuple(out)

    def is_semistandard(self) -> bool:
        """Strict column increase, checked row pair by row pair."""
        for i in range(len(self.counts) - 1):
            a, b = self.counts[i], self.counts[i + 1]
            below = 0
            above = 0
            for j in range(len(a)):
                below += b[j]
                if below > above:
                    return False
                above += a[j]
        return True

    def reading_key(self) -> tuple[tuple[int, ...], ...]:
        """Row-reading word, bottom row first; used as the canonical sort key."""
        return tuple(self.row_entries(i) for i in reversed(range(self.nrows)))

    def to_text(self) -> str:
        return " / ".join(_row_text(r) for r in self.counts)

    @classmethod
    def from_text(cls, text: str) -> "Tableau":
        rows = [_parse_row(part) for part in text.split("/")]
        width = max((len(r) for r in rows), default=0)
        return cls.of([list(r) + [0] * (width - len(r)) for r in rows])

    def __lt__(self, other: "Tableau") -> bool:
        return self.reading_key() < other.reading_key()


def _row_text(row) -> str:
    toks = []
    for j, c in enumerate(row):
        if c == 1:
            toks.append(str(j + 1))
        elif c > 1:
            toks.append(f"{j + 1}^{c}")
    return " ".join(toks) if toks else "()"


def _parse_row(text: str) -> tuple[int, ...]:
    text = text.strip()
    counts: dict[int, int] = {}
    if text and text != "()":
        for tok in text.split():
            if "^" in tok:
                letter, exp = tok.split("^")
                counts[int(letter)] = counts.get(int(letter), 0) + int(exp)
            else:
                counts[int(tok)] = counts.get(int(tok), 0) + 1
    width = max(counts, default=0)
    return tuple(counts.get(j + 1, 0) for j in range(width))


def superstandard(shape: Partition) -> Tableau:
    """Row i filled with the letter i."""
    shape = normalize_partition(shape)
    n = len(shape)
    return Tableau.of([[shape[i] if j == i else 0 for j in range(n)] for i in range(n)])


def _compositions(total: int, caps: tuple[int, ...]):
    """All tuples c with sum(c) == total and 0 <= c[j] <= caps[j]."""
    if not caps:
        if total == 0:
            yield ()
        return
    head_max = min(total, caps[0])
    for h in range(head_max + 1):
        for rest in _compositions(total - h, caps[1:]):
            yield (h,) + rest


@cache
def enumerate_sst(shape: Partition, weight: tuple[int, ...]) -> tuple[Tableau, ...]:
    """All semistandard tableaux of the given shape and weight.

    Canonical order: lexicographic on the bottom-to-top row-reading
    word, which for one-box-per-column Pieri shapes coincides with
    indexing by the number of 2's in the first row.
    """
    shape = normalize_partition(shape)
    weight = tuple(weight)
    if sum(shape) != sum(weight):
        return ()
    width = len(weight)
    results: list[Tableau] = []

    def fill(i: int, remaining: tuple[int, ...], prev: tuple[int, ...] | None, acc):
        if i == len(shape):
            if not any(remaining):
                results.append(Tableau.of(acc))
            return
        for row in _compositions(shape[i], remaining):
            if prev is not None:
                below = above = 0
                ok = True
                for j in range(width):
                    below += row[j]
                    if below > above:
                        ok = False
                        break
                    above += prev[j]
                if not ok:
                    continue
            left = tuple(r - c for r, c in zip(remaining, row))
            fill(i + 1, left, row, acc + [row])

    fill(0, weight, None, [])
    results.sort(key=Tableau.reading_key)
    return tuple(results)


def kostka(shape: Partition, weight) -> int:
    """Number of semistandard tableaux of the given shape and weight."""
    return len(enumerate_sst(normalize_partition(shape), tuple(weight)))


# ---------------------------------------------------------------------------
# Pieri constituents of K_(n,n-1) (x) D_(n-1)


@dataclass(frozen=True)
class PieriConstituent:
    """Shape (n+c1, n-1+c2, c3) obtained by adding n-1 boxes, at most one
    of them in row two and none twice in a column."""

    n: int
    c1: int
    c2: int
    c3: int

    @property
    def c(self) -> int:
        return self.c1 + self.c2

    @property
    def partition(self) -> Partition:
        return normalize_partition((self.n + self.c1, self.n - 1 + self.c2, self.c3))


def pieri_constituents(n: int) -> list[PieriConstituent]:
    """All constituents of K_(n,n-1) (x) D_(n-1), each of multiplicity one."""
    if n < 2:
        raise ValueError("need n >= 2")
    out = []
    for c2 in (0, 1):
        for c1 in range(n - c2):
            c3 = n - 1 - c1 - c2
            parts = (n + c1, n - 1 + c2, c3)
            if parts[1] >= parts[2]:
                out.append(PieriConstituent(n, c1, c2, c3))
    out.sort(key=lambda pc: pc.partition)
    return out


# ---------------------------------------------------------------------------
# Specht dimensions and characters


def specht_dim(p: Partition) -> int:
    """Number of standard Young tableaux of shape p (hook length formula)."""
    p = normalize_partition(p)
    m = sum(p)
    conj = conjugate(p)
    denom = 1
    for i, row in enumerate(p):
        for j in range(row):
            denom *= (row - j) + (conj[j] - i) - 1
    return math.factorial(m) // denom


def enumerate_syt(p: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """Explicit standard fillings, by placing 1..m left to right, top down."""
    p = normalize_partition(p)
    m = sum(p)
    results: list[tuple[tuple[int, ...], ...]] = []
    rows = [[] for _ in p]

    def place(v: int):
        if v > m:
            results.append(tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            j = len(row)
            if j >= p[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= j:
                continue
            row.append(v)
            place(v + 1)
            row.pop()

    place(1)
    return results


CycleType = tuple[int, ...]


@cache
def _mn(betas: tuple[int, ...], cyc: CycleType) -> int:
    """Border-strip recursion on the beta-set (first-column hooks)."""
    if not cyc:
        return 1
    t, rest = cyc[0], cyc[1:]
    bset = set(betas)
    total = 0
    for idx, b in enumerate(betas):
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        crossed = sum(1 for x in betas if nb < x < b)
        new = tuple(sorted(bset - {b} | {nb}, reverse=True))
        term = _mn(new, rest)
        if term:
            total += (-1 if crossed % 2 else 1) * term
    return total


def _beta_set(p: Partition) -> tuple[int, ...]:
    k = len(p)
    return tuple(p[i] + (k - 1 - i) for i in range(k))


def mn_character(p: Partition, cyc: CycleType) -> int:
    """Irreducible character of the symmetric group at a cycle type."""
    p = normalize_partition(p)
    cyc = normalize_partition(cyc)
    if sum(p) != sum(cyc):
        raise ValueError("partition and cycle type have different sizes")
    betas = _beta_set(p)
    # normalize the beta-set so memoized keys collide across shapes
    while betas and betas[-1] == 0:
        betas = tuple(b - 1 for b in betas[:-1])
    return _mn(betas, cyc)


def class_size(cyc: CycleType) -> int:
    """Size of the conjugacy class with the given cycle type."""
    cyc = normalize_partition(cyc)
    m = sum(cyc)
    z = 1
    mult: dict[int, int] = {}
    for part in cyc:
        mult[part] = mult.get(part, 0) + 1
    for k, mk in mult.items():
        z *= k**mk * math.factorial(mk)
    return math.factorial(m) // z


def class_sign(cyc: CycleType) -> int:
    """Sign character at the class: (-1)^(m - number of cycles)."""
    return -1 if (sum(cyc) - len(normalize_partition(cyc))) % 2 else 1


def gl_dim(p: Partition, n_letters: int) -> int:
    """Dimension of the irreducible polynomial GL_N module labelled p
    (equivalently, semistandard tableaux of shape p with entries <= N)."""
    p = normalize_partition(p)
    if len(p) > n_letters:
        return 0
    full = p + (0,) * (n_letters - len(p))
    num = den = 1
    for i in range(n_letters):
        for j in range(i + 1, n_letters):
            num *= full[i] - full[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den
