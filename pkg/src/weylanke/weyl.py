"""Weyl-module coordinates for shapes with at most three rows.

Three cooperating pieces:

* ``phi_S`` / ``psi_S`` -- the row-filling maps attached to a row
  semistandard tableau: comultiply each tensor factor along the
  tableau's letter columns, regroup by rows, multiply each row.

* ``straighten`` -- rewrites a projected tableau in the semistandard
  coordinate basis by repeatedly raising the smallest letter of a
  violating row pair.  Every raising move strictly decreases the
  letter-weighted row positions in lexicographic order, so the loop
  terminates; terms whose violations cannot be raised (a smaller letter
  blocks the pair) are handed to the independent solver.

* ``oracle_coords`` -- an independent realization of the projection:
  fully polarize each row into single letters placed into columns,
  wedge the columns, and solve for the coordinates in the images of the
  semistandard basis tableaux.  The two routes must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product as iproduct
from math import comb

from .combinatorics import (
    Partition,
    Tableau,
    enumerate_sst,
    normalize_partition,
)
from .tensor_algebra import (
    DividedTensor,
    LinComb,
    arrangements,
    as_lincomb,
    divided_profile,
    divided_weight,
    dp_product_mono,
    dp_split,
    dp_strip,
    ext_product_mono,
    ext_split,
    exterior_profile,
    lincomb_text,
    strip_profile,
)


def _acc(target: dict, key, coeff) -> None:
    if not coeff:
        return
    nv = target.get(key, 0) + coeff
    if nv:
        target[key] = nv
    else:
        del target[key]


@dataclass(frozen=True)
class WeylVector:
    """Element of a Weyl module in semistandard coordinates."""

    shape: Partition
    weight: tuple[int, ...]
    terms: tuple[tuple[Tableau, Fraction], ...]

    @classmethod
    def make(cls, shape, weight, coeffs: dict) -> "WeylVector":
        terms = tuple(
            sorted(((t, Fraction(c)) for t, c in coeffs.items() if c), key=lambda tc: tc[0].reading_key())
        )
        return cls(normalize_partition(shape), tuple(weight), terms)

    def coeff(self, t: Tableau) -> Fraction:
        for tab, c in self.terms:
            if tab == t:
                return c
        return Fraction(0)

    def vector(self) -> tuple[Fraction, ...]:
        """Coordinates against the canonical semistandard enumeration."""
        basis = enumerate_sst(self.shape, self.weight)
        return tuple(self.coeff(t) for t in basis)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WeylVector") -> "WeylVector":
        assert self.shape == other.shape and self.weight == other.weight
        coeffs = {t: c for t, c in self.terms}
        for t, c in other.terms:
            coeffs[t] = coeffs.get(t, Fraction(0)) + c
        return WeylVector.make(self.shape, self.weight, coeffs)

    def __rmul__(self, scalar) -> "WeylVector":
        return WeylVector.make(self.shape, self.weight, {t: scalar * c for t, c in self.terms})

    def __neg__(self) -> "WeylVector":
        return -1 * self

    def to_text(self) -> str:
        lc = LinComb([(t.counts, c) for t, c in self.terms])
        return lincomb_text(lc, lambda k: Tableau(k).to_text())


# ---------------------------------------------------------------------------
# Row-filling maps


def _tableau_matrix(S: Tableau, width: int) -> list[tuple[int, ...]]:
    return [tuple(r[j] if j < len(r) else 0 for j in range(width)) for r in S.counts]


def _check_profile(S: Tableau, profile) -> int:
    want = strip_profile(S.weight())
    have = strip_profile(profile)
    if want != have:
        raise ValueError(f"profile {have} does not match tableau weight {want}")
    return max(len(profile), S.width)


def phi_S(S: Tableau, x) -> LinComb:
    """Divided-power row filling along S; input profile must be weight(S)."""
    out: dict = {}
    for tensor, coeff in as_lincomb(x).items():
        for key, c in _phi_one(S, tensor).items():
            _acc(out, key, coeff * c)
    return LinComb(list(out.items()))


def _phi_one(S: Tableau, x: DividedTensor) -> LinComb:
    width = _check_profile(S, divided_profile(x))
    a = _tableau_matrix(S, width)
    nrows = len(a)
    factors = list(x) + [()] * (width - len(x))
    splits = [dp_split(factors[j], tuple(a[i][j] for i in range(nrows))) for j in range(width)]
    out: dict = {}
    for combo in iproduct(*(s.items() for s in splits)):
        coeff = 1
        for _, c in combo:
            coeff *= c
        rows = []
        for i in range(nrows):
            mono: tuple[int, ...] = ()
            for j in range(width):
                c, mono = dp_product_mono(mono, combo[j][0][i])
                coeff *= c
            rows.append(mono)
        _acc(out, tuple(rows), coeff)
    return LinComb(list(out.items()))


def psi_S(S: Tableau, x) -> LinComb:
    """Exterior row filling along S, with shuffle signs and nilpotence."""
    out: dict = {}
    for tensor, coeff in as_lincomb(x).items():
        for key, c in _psi_one(S, tensor).items():
            _acc(out, key, coeff * c)
    return LinComb(list(out.items()))


def _psi_one(S: Tableau, x) -> LinComb:
    width = _check_profile(S, exterior_profile(x))
    a = _tableau_matrix(S, width)
    nrows = len(a)
    factors = list(x) + [()] * (width - len(x))
    splits = [ext_split(factors[j], tuple(a[i][j] for i in range(nrows))) for j in range(width)]
    out: dict = {}
    for combo in iproduct(*(s.items() for s in splits)):
        coeff = 1
        for _, c in combo:
            coeff *= c
        rows = []
        dead = False
        for i in range(nrows):
            mono: tuple[int, ...] = ()
            for j in range(width):
                res = ext_product_mono(mono, combo[j][0][i])
                if res is None:
                    dead = True
                    break
                sign, mono = res
                coeff *= sign
            if dead:
                break
            rows.append(mono)
        if not dead:
            _acc(out, tuple(rows), coeff)
    return LinComb(list(out.items()))


# ---------------------------------------------------------------------------
# Two-row raising


def straighten_pair(shape: Partition, S: Tableau, v: int) -> LinComb:
    """Raise every v from row 2 of a two-row tableau into row 1.

    Valid when v is the smallest letter present in the two rows.  The
    result is a combination of two-row tableaux; it is empty when the v
    count overflows the first row, which forces the projection to
    vanish.
    """
    shape = normalize_partition(shape)
    if len(shape) != 2 or S.nrows != 2:
        raise ValueError("straighten_pair needs a two-row shape")
    if S.shape != shape:
        raise ValueError(f"tableau shape {S.shape} is not {shape}")
    width = S.width
    a = list(S.counts[0]) + [0] * (width - len(S.counts[0]))
    b = list(S.counts[1]) + [0] * (width - len(S.counts[1]))
    pair = _raise_counts(shape[0], a, b, v)
    return LinComb([(Tableau.of(rows), c) for rows, c in pair.items()])


def _raise_counts(top_len: int, a: list[int], b: list[int], v: int) -> LinComb:
    """Core raising identity on multiplicity rows a (top) and b (bottom).

    Moves the b_v copies of v up and sends, for every choice of
    k_{v+1} + ... + k_N = b_v with k_t bounded by the top row, k_t
    copies of t down, weighted by the product of binomials
    C(b_t + k_t, k_t) and the sign (-1)^(b_v).
    """
    if b[v - 1] == 0:
        raise ValueError(f"letter {v} does not occur in the lower row")
    if any(a[t] or b[t] for t in range(v - 1)):
        raise ValueError(f"letters smaller than {v} present; raising does not apply")
    bv = b[v - 1]
    if a[v - 1] + bv > top_len:
        return LinComb.zero()
    sign = -1 if bv % 2 else 1
    bigger = list(range(v, len(a)))
    out = []

    def rec(idx: int, left: int, coeff: int, na: list[int], nb: list[int]):
        if idx == len(bigger):
            if left == 0:
                out.append(((tuple(na), tuple(nb)), sign * coeff))
            return
        t = bigger[idx]
        for k in range(min(left, a[t]) + 1):
            na2 = list(na)
            nb2 = list(nb)
            na2[t] -= k
            nb2[t] += k
            rec(idx + 1, left - k, coeff * comb(b[t] + k, k), na2, nb2)

    na0 = list(a)
    nb0 = list(b)
    na0[v - 1] += bv
    nb0[v - 1] = 0
    rec(0, bv, 1, na0, nb0)
    return LinComb(out)


def raise_in_rows(T: Tableau, j: int, v: int) -> LinComb:
    """Apply the two-row raising to rows (j, j+1) of T, 1-based j.

    Relations between consecutive rows embed into the full shape, so
    the result is a combination of tableaux of the same shape.
    """
    shape = T.shape
    if not 1 <= j < len(shape):
        raise ValueError(f"no row pair ({j},{j + 1}) in shape {shape}")
    width = T.width
    rows = [list(r) + [0] * (width - len(r)) for r in T.counts]
    pair = _raise_counts(shape[j - 1], rows[j - 1], rows[j], v)
    out = []
    for (na, nb), c in pair.items():
        w = max(width, len(na), len(nb))
        new = [tuple(r) + (0,) * (w - len(r)) for r in rows]
        new[j - 1] = na + (0,) * (w - len(na))
        new[j] = nb + (0,) * (w - len(nb))
        out.append((Tableau.of(new), c))
    return LinComb(out)


def _eligible_move(T: Tableau) -> tuple[int, int] | None:
    """Smallest raisable letter and its row pair, bottom pair first."""
    shape = T.shape
    width = T.width
    rows = [tuple(r) + (0,) * (width - len(r)) for r in T.counts]
    best: tuple[int, int] | None = None
    for j in range(len(shape) - 1, 0, -1):
        a, b = rows[j - 1], rows[j]
        below = above = 0
        bad = False
        for t in range(width):
            below += b[t]
            if below > above:
                bad = True
                break
            above += a[t]
        if not bad:
            continue
        lo = next((t for t in range(width) if a[t] or b[t]), None)
        if lo is None or b[lo] == 0:
            continue
        v = lo + 1
        if best is None or v < best[0]:
            best = (v, j)
    return best


def straighten(shape: Partition, S: Tableau) -> WeylVector:
    """Semistandard coordinates of the projected tableau S.

    Raising handles every term it can reach; stuck terms are resolved
    through ``oracle_coords``, so the result is total and always agrees
    with the independent realization.
    """
    shape = normalize_partition(shape)
    if S.shape != shape:
        raise ValueError(f"tableau shape {S.shape} is not {shape}")
    weight = S.weight()
    work: list[tuple[Tableau, Fraction]] = [(S, Fraction(1))]
    done: dict[Tableau, Fraction] = {}
    stuck: dict[DividedTensor, Fraction] = {}
    while work:
        T, c = work.pop()
        if T.is_semistandard():
            done[T] = done.get(T, Fraction(0)) + c
            continue
        move = _eligible_move(T)
        if move is None:
            _acc(stuck, tuple(dp_strip(r) for r in T.counts), c)
            continue
        v, j = move
        for T2, c2 in raise_in_rows(T, j, v).items():
            work.append((T2, c * c2))
    result = WeylVector.make(shape, weight, done)
    if stuck:
        result = result + oracle_coords(shape, LinComb(list(stuck.items())), weight=weight)
    return result


# ---------------------------------------------------------------------------
# Independent realization through the exterior algebra


def coschur_image(shape: Partition, x: DividedTensor) -> LinComb:
    """Polarize each row into single letters per column, wedge the columns.

    The resulting combination lives in the column tensor product of
    exterior powers indexed by the conjugate shape; its kernel on the
    row tensor space is exactly the kernel of the projection.  Column j
    collects one letter from every row long enough to reach it,
    multiplied top to bottom.
    """
    shape = normalize_partition(shape)
    if strip_profile(divided_profile(x)) != shape:
        raise ValueError(f"profile {divided_profile(x)} does not match shape {shape}")
    nrows = len(shape)
    perms = [arrangements(dp_strip(f)) for f in x[:nrows]]
    ncols = shape[0] if shape else 0
    out: dict[tuple, int] = {}
    for combo in iproduct(*perms):
        sign = 1
        cols = []
        dead = False
        for j in range(ncols):
            letters = [combo[i][j] for i in range(nrows) if shape[i] > j]
            if len(set(letters)) != len(letters):
                dead = True
                break
            inv = sum(
                1
                for s in range(len(letters))
                for t in range(s + 1, len(letters))
                if letters[s] > letters[t]
            )
            if inv % 2:
                sign = -sign
            cols.append(tuple(sorted(letters)))
        if not dead:
            _acc(out, tuple(cols), sign)
    return LinComb(list(out.items()))


@cache
def _realization(shape: Partition, weight: tuple[int, ...]):
    """Images of the semistandard basis plus a pivoted exact solver."""
    ssts = enumerate_sst(shape, weight)
    images = [coschur_image(shape, _row_tensor(t)) for t in ssts]
    q = len(ssts)
    if q == 0:
        return ssts, images, None, None
    keys: list = []
    seen = set()
    for img in images:
        for k in img.keys():
            if k not in seen:
                seen.add(k)
                keys.append(k)
    pivot_keys: list = []
    basis: list[list[Fraction]] = []
    for k in keys:
        red = [Fraction(img.coeff(k)) for img in images]
        for prow in basis:
            lead = next(i for i, val in enumerate(prow) if val)
            f = red[lead]
            if f:
                red = [x - f * y for x, y in zip(red, prow)]
        if any(red):
            lead = next(i for i, val in enumerate(red) if val)
            basis.append([x / red[lead] for x in red])
            pivot_keys.append(k)
        if len(pivot_keys) == q:
            break
    if len(pivot_keys) < q:
        raise ArithmeticError("semistandard images are not independent; this is a bug")
    m = [[Fraction(img.coeff(k)) for img in images] for k in pivot_keys]
    inv = _invert(m)
    return ssts, images, pivot_keys, inv


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]]:
    q = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(q)] for i, row in enumerate(m)]
    for col in range(q):
        piv = next(r for r in range(col, q) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [x / f for x in aug[col]]
        for r in range(q):
            if r != col and aug[r][col]:
                fr = aug[r][col]
                aug[r] = [x - fr * y for x, y in zip(aug[r], aug[col])]
    return [row[q:] for row in aug]


def _row_tensor(t: Tableau) -> DividedTensor:
    return tuple(dp_strip(r) for r in t.counts)


def oracle_coords(shape: Partition, x, weight=None) -> WeylVector:
    """Coordinates of x in the semistandard basis via the exterior image.

    Solves the image of x against the images of the basis tableaux and
    verifies the solution on every coordinate; an inconsistency would
    mean an implementation bug and raises.
    """
    shape = normalize_partition(shape)
    x = as_lincomb(x)
    if x:
        width = max(len(divided_weight(t)) for t, _ in x.items())
        weights = {divided_weight(t, width) for t, _ in x.items()}
        if len(weights) > 1:
            raise ValueError("terms are not weight homogeneous")
        weight = weights.pop()
    elif weight is None:
        raise ValueError("cannot infer the weight of an empty combination")
    weight = tuple(weight)
    ssts, images, pivot_keys, inv = _realization(shape, weight)
    img: dict = {}
    for tensor, c in x.items():
        for key, ic in coschur_image(shape, tensor).items():
            _acc(img, key, c * ic)
    if pivot_keys is None:
        if img:
            raise ArithmeticError("nonzero image with empty semistandard basis; this is a bug")
        return WeylVector.make(shape, weight, {})
    b = [Fraction(img.get(k, 0)) for k in pivot_keys]
    q = len(b)
    coords = [sum((inv[i][j] * b[j] for j in range(q)), Fraction(0)) for i in range(q)]
    check: dict = {}
    for c, im in zip(coords, images):
        for key, ic in im.items():
            _acc(check, key, c * ic)
    if check != img:
        raise ArithmeticError("inconsistent solve in the exterior realization; this is a bug")
    return WeylVector.make(shape, weight, {t: c for t, c in zip(ssts, coords) if c})


def pi_U(U: Tableau, x) -> WeylVector:
    """Projection attached to a semistandard tableau: fill along U, then solve."""
    if not U.is_semistandard():
        raise ValueError("pi_U needs a semistandard tableau")
    return oracle_coords(U.shape, phi_S(U, x))


def sst_basis_vectors(shape: Partition, weight) -> list[WeylVector]:
    """Unit coordinate vectors T_0, ..., T_q in canonical order."""
    shape = normalize_partition(shape)
    return [WeylVector.make(shape, tuple(weight), {t: Fraction(1)}) for t in enumerate_sst(shape, tuple(weight))]
