"""The equivariant maps gamma1, gamma2 (on D(n,n-1,n-1)), gamma3 (from
D(n,n,n-2)) and the two-factor exterior map g, together with their
exterior counterparts.

Each gamma map is a signed sum of row-filling maps attached to a short
list of defining tableaux; images are computed lazily per basis element
and no full matrix is ever materialized.  The exterior counterparts
exist in two independent forms: closed letter-shuffling formulas and
the transported sums of psi maps with the factor-swap sign rule; their
agreement is a test, not a definition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import Partition, Tableau, normalize_partition
from .tensor_algebra import (
    ExteriorTensor,
    LinComb,
    as_lincomb,
    e_tensor,
    ext_product_mono,
)
from .weyl import _acc, phi_S, psi_S


def base_shape(n: int) -> Partition:
    return normalize_partition((n, n - 1, n - 1))


def adjacent_shape(n: int) -> Partition:
    return normalize_partition((n + 1, n - 1, n - 2))


def doubled_shape(n: int) -> Partition:
    return normalize_partition((n, n, n - 2))


def _tab(*rows) -> Tableau:
    width = max(len(r) for r in rows)
    return Tableau.of([list(r) + [0] * (width - len(r)) for r in rows])


def defining_tableaux(n: int) -> dict[str, Tableau]:
    """The six row fillings the maps are built from.

    S1 is diagonal (identity filling); S2 moves one 1 next to the 2's;
    S3 swaps the last two rows; S4 cycles letters across all three
    rows; Q1/Q2 redistribute the doubled letters of the (n,n,n-2)
    weight.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return {
        "S1": _tab((n, 0, 0), (0, n - 1, 0), (0, 0, n - 1)),
        "S2": _tab((1, n - 1, 0), (n - 1, 0, 0), (0, 0, n - 1)),
        "S3": _tab((n, 0, 0), (0, 0, n - 1), (0, n - 1, 0)),
        "S4": _tab((0, 1, n - 1), (1, n - 2, 0), (n - 1, 0, 0)),
        "Q1": _tab((n, 0, 0), (0, 1, n - 2), (0, n - 1, 0)),
        "Q2": _tab((0, n, 0), (1, 0, n - 2), (n - 1, 0, 0)),
    }


@dataclass(frozen=True)
class GammaMap:
    name: str
    n: int
    domain: tuple[int, ...]
    terms: tuple[tuple[int, Tableau], ...]


def gamma1(n: int) -> GammaMap:
    eps = -1 if n % 2 else 1
    t = defining_tableaux(n)
    return GammaMap("gamma1", n, base_shape(n), ((1, t["S1"]), (eps, t["S2"])))


def gamma2(n: int) -> GammaMap:
    eps = -1 if n % 2 else 1
    t = defining_tableaux(n)
    return GammaMap("gamma2", n, base_shape(n), ((1, t["S1"]), (eps, t["S3"]), (eps, t["S4"])))


def gamma3(n: int) -> GammaMap:
    eps = -1 if n % 2 else 1
    t = defining_tableaux(n)
    return GammaMap("gamma3", n, doubled_shape(n), ((1, t["Q1"]), (eps, t["Q2"])))


def gamma_by_name(name: str, n: int) -> GammaMap:
    try:
        return {"gamma1": gamma1, "gamma2": gamma2, "gamma3": gamma3}[name](n)
    except KeyError:
        raise ValueError(f"unknown map {name!r}") from None


def gamma_image(g: GammaMap, x) -> LinComb:
    """Signed sum of row fillings applied to x (a tensor or combination)."""
    out: dict = {}
    for sign, tab in g.terms:
        for key, c in phi_S(tab, x).items():
            _acc(out, key, sign * c)
    return LinComb(list(out.items()))


def gamma_generator_image(g: GammaMap) -> LinComb:
    """Image of the cyclic generator of the domain weight space."""
    return gamma_image(g, e_tensor(g.domain))


def gamma_omega_image(g: GammaMap, w) -> LinComb:
    """Exterior transport of the map: signed psi sums with the factor-swap rule.

    Re-grouping the nine comultiplied factors from letter-major to
    row-major order multiplies each filling by (-1) to the sum of
    degree products over swapped factor pairs.
    """
    out: dict = {}
    for sign, tab in g.terms:
        for key, c in psi_S(tab, w).items():
            _acc(out, key, sign * omega_sign(tab) * c)
    return LinComb(list(out.items()))


def omega_sign(T: Tableau) -> int:
    """Sign picked up by a filling under the divided-to-exterior transport."""
    rows = T.counts
    width = T.width
    a = [tuple(r) + (0,) * (width - len(r)) for r in rows]
    total = 0
    for c1 in range(width):
        for c2 in range(c1 + 1, width):
            for r1 in range(len(a)):
                for r2 in range(r1):
                    total += a[r1][c1] * a[r2][c2]
    return -1 if total % 2 else 1


# ---------------------------------------------------------------------------
# The two-factor exterior map g


def g_image(n: int, t) -> LinComb:
    """Identity minus the alternating one-letter move between the two
    factors of an exterior tensor of profile (n, n-1)."""
    out: dict = {}
    for tensor, coeff in as_lincomb(t).items():
        if len(tensor) != 2 or len(tensor[0]) != n or len(tensor[1]) != n - 1:
            raise ValueError(f"profile {tuple(len(f) for f in tensor)} is not ({n},{n - 1})")
        x, y = tensor
        _acc(out, tensor, coeff)
        for i, xi in enumerate(x):
            res = ext_product_mono((xi,), y)
            if res is None:
                continue
            sign, top = res
            rest = x[:i] + x[i + 1 :]
            isign = -1 if i % 2 else 1
            _acc(out, (top, rest), -coeff * isign * sign)
    return LinComb(list(out.items()))


# ---------------------------------------------------------------------------
# Closed exterior formulas


def _delete(m: ExteriorTensor, i: int) -> tuple[int, ...]:
    return m[:i] + m[i + 1 :]


def omega_gamma1(n: int, w) -> LinComb:
    """w minus the alternating sum moving one x letter into the y factor."""
    out: dict = {}
    for tensor, coeff in as_lincomb(w).items():
        x, y, z = tensor
        _acc(out, tensor, coeff)
        for i, xi in enumerate(x):
            res = ext_product_mono((xi,), y)
            if res is None:
                continue
            sign, top = res
            isign = -1 if i % 2 else 1
            _acc(out, (top, _delete(x, i), z), -coeff * isign * sign)
    return LinComb(list(out.items()))


def omega_gamma2(n: int, w) -> LinComb:
    """w - x|z|y plus the double letter exchange between x and y via z."""
    out: dict = {}
    for tensor, coeff in as_lincomb(w).items():
        x, y, z = tensor
        _acc(out, tensor, coeff)
        _acc(out, (x, z, y), -coeff)
        for i, yi in enumerate(y):
            res1 = ext_product_mono((yi,), z)
            if res1 is None:
                continue
            s1, top = res1
            isign = -1 if i % 2 else 1
            for j, xj in enumerate(x):
                res2 = ext_product_mono((xj,), _delete(y, i))
                if res2 is None:
                    continue
                s2, mid = res2
                jsign = -1 if j % 2 else 1
                _acc(out, (top, mid, _delete(x, j)), coeff * isign * jsign * s1 * s2)
    return LinComb(list(out.items()))


def omega_gamma3(n: int, u) -> LinComb:
    """Symmetric sum moving one letter of either n-block into the short factor.

    Extracting the i-th letter to the front carries (-1)^(i-1), exactly
    as in the comultiplication components realizing the map.
    """
    out: dict = {}
    for tensor, coeff in as_lincomb(u).items():
        x, y, z = tensor
        for i, yi in enumerate(y):
            res = ext_product_mono((yi,), z)
            if res is None:
                continue
            sign, mid = res
            isign = -1 if i % 2 else 1
            _acc(out, (x, mid, _delete(y, i)), coeff * isign * sign)
        for i, xi in enumerate(x):
            res = ext_product_mono((xi,), z)
            if res is None:
                continue
            sign, mid = res
            isign = -1 if i % 2 else 1
            _acc(out, (y, mid, _delete(x, i)), coeff * isign * sign)
    return LinComb(list(out.items()))


def omega_gamma_closed(name: str, n: int, t) -> LinComb:
    fn = {"gamma1": omega_gamma1, "gamma2": omega_gamma2, "gamma3": omega_gamma3}[name]
    return fn(n, t)
