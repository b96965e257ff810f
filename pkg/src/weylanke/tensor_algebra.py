"""Divided-power and exterior algebra bases with exact rational
linear combinations.

A divided monomial is an exponent tuple ``(a_1, ..., a_k)`` standing for
``1^(a_1) ... k^(a_k)`` (trailing zeros stripped); an exterior monomial
is a strictly increasing letter tuple.  Tensors are tuples of monomials.
Products carry the divided-power binomials, comultiplications are the
coefficient-free splittings (divided case) or signed shuffles (exterior
case).  Everything is weight homogeneous, so computations stay inside
small weight spaces.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations, product as iproduct
from math import comb

Coeff = int | Fraction
DividedMonomial = tuple[int, ...]
ExteriorMonomial = tuple[int, ...]


class LinComb:
    """Finite formal sum of hashable basis keys with nonzero coefficients.

    Terms are kept in a dict and exposed in sorted key order, so the
    serialized form of equal combinations is byte-stable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict = {}
        if terms:
            for key, c in terms.items() if isinstance(terms, dict) else terms:
                if c:
                    nc = data.get(key, 0) + c
                    if nc:
                        data[key] = nc
                    else:
                        del data[key]
        self._terms = data

    @classmethod
    def term(cls, key, coeff: Coeff = 1) -> "LinComb":
        lc = cls()
        if coeff:
            lc._terms[key] = coeff
        return lc

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def items(self):
        return sorted(self._terms.items())

    def keys(self):
        return sorted(self._terms)

    def coeff(self, key) -> Coeff:
        return self._terms.get(key, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self._terms == other._terms

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self._terms)
        for key, c in other._terms.items():
            nc = out.get(key, 0) + c
            if nc:
                out[key] = nc
            else:
                del out[key]
        lc = LinComb()
        lc._terms = out
        return lc

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def __rmul__(self, scalar: Coeff) -> "LinComb":
        lc = LinComb()
        if scalar:
            lc._terms = {k: scalar * c for k, c in self._terms.items()}
        return lc

    def apply(self, fn) -> "LinComb":
        """Linear extension of a key-to-LinComb map."""
        out = LinComb()
        for key, c in self._terms.items():
            out = out + c * fn(key)
        return out

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb(0)"
        return "LinComb(" + " + ".join(f"{c}*{k}" for k, c in self.items()) + ")"


def as_lincomb(x) -> LinComb:
    return x if isinstance(x, LinComb) else LinComb.term(x)


# ---------------------------------------------------------------------------
# Divided power algebra


def dp_strip(m) -> DividedMonomial:
    m = tuple(m)
    while m and m[-1] == 0:
        m = m[:-1]
    return m


def dp_degree(m: DividedMonomial) -> int:
    return sum(m)


def dp_product_mono(a: DividedMonomial, b: DividedMonomial) -> tuple[int, DividedMonomial]:
    """Product of two divided monomials: one term with a binomial weight."""
    k = max(len(a), len(b))
    a = a + (0,) * (k - len(a))
    b = b + (0,) * (k - len(b))
    coeff = 1
    for x, y in zip(a, b):
        if x and y:
            coeff *= comb(x + y, y)
    return coeff, dp_strip(x + y for x, y in zip(a, b))


def dp_product(a: DividedMonomial, b: DividedMonomial) -> LinComb:
    coeff, m = dp_product_mono(a, b)
    return LinComb.term(m, coeff)


def _bounded_compositions(total: int, caps: tuple[int, ...]):
    if not caps:
        if total == 0:
            yield ()
        return
    for h in range(min(total, caps[0]) + 1):
        for rest in _bounded_compositions(total - h, caps[1:]):
            yield (h,) + rest


def dp_split(m: DividedMonomial, degrees: tuple[int, ...]) -> LinComb:
    """Component of the iterated comultiplication, all coefficients 1.

    Returns a combination over tuples of monomials, one per requested
    degree, summing over all exponentwise splittings.
    """
    m = dp_strip(m)
    if sum(degrees) != dp_degree(m):
        raise ValueError("degrees do not sum to the monomial degree")
    parts: list[tuple[tuple[DividedMonomial, ...], int]] = []

    def rec(rest: DividedMonomial, degs: tuple[int, ...], acc):
        if len(degs) == 1:
            if sum(rest) == degs[0]:
                parts.append((tuple(acc) + (dp_strip(rest),), 1))
            return
        for beta in _bounded_compositions(degs[0], rest):
            rec(tuple(r - b for r, b in zip(rest, beta)), degs[1:], acc + [dp_strip(beta)])

    rec(m, tuple(degrees), [])
    return LinComb(parts)


def dp_comultiply(m: DividedMonomial, degrees: tuple[int, int]) -> LinComb:
    return dp_split(m, degrees)


def dp_comultiply3(m: DividedMonomial, degrees: tuple[int, int, int]) -> LinComb:
    return dp_split(m, degrees)


@cache
def arrangements(m: DividedMonomial) -> tuple[tuple[int, ...], ...]:
    """All distinct letter sequences with the multiset of m (full polarization)."""
    m = dp_strip(m)
    if not m:
        return ((),)
    out = []
    for j, c in enumerate(m):
        if c:
            rest = list(m)
            rest[j] -= 1
            for tail in arrangements(dp_strip(rest)):
                out.append((j + 1,) + tail)
    return tuple(out)


# ---------------------------------------------------------------------------
# Exterior algebra


def ext_product_mono(a: ExteriorMonomial, b: ExteriorMonomial) -> tuple[int, ExteriorMonomial] | None:
    """Wedge of two sorted index tuples: None when an index repeats."""
    if set(a) & set(b):
        return None
    inv = 0
    for x in a:
        inv += sum(1 for y in b if y < x)
    return (-1 if inv % 2 else 1), tuple(sorted(a + b))


def ext_product(a: ExteriorMonomial, b: ExteriorMonomial) -> LinComb:
    res = ext_product_mono(a, b)
    if res is None:
        return LinComb.zero()
    sign, m = res
    return LinComb.term(m, sign)


def ext_split(m: ExteriorMonomial, degrees: tuple[int, ...]) -> LinComb:
    """Signed shuffle splitting of a sorted index tuple into blocks."""
    if sum(degrees) != len(m):
        raise ValueError("degrees do not sum to the monomial degree")
    parts: list[tuple[tuple[ExteriorMonomial, ...], int]] = []

    def rec(rest: tuple[int, ...], degs: tuple[int, ...], acc, sign: int):
        if not degs:
            parts.append((tuple(acc), sign))
            return
        d = degs[0]
        for pick in combinations(range(len(rest)), d):
            chosen = tuple(rest[i] for i in pick)
            left = tuple(rest[i] for i in range(len(rest)) if i not in pick)
            inv = 0
            for x in chosen:
                inv += sum(1 for y in left if y < x)
            rec(left, degs[1:], acc + [chosen], sign * (-1 if inv % 2 else 1))

    rec(tuple(m), tuple(degrees), [], 1)
    return LinComb(parts)


def ext_comultiply(m: ExteriorMonomial, degrees: tuple[int, int]) -> LinComb:
    return ext_split(m, degrees)


# ---------------------------------------------------------------------------
# Tensors

DividedTensor = tuple[DividedMonomial, ...]
ExteriorTensor = tuple[ExteriorMonomial, ...]


def e_tensor(alpha) -> DividedTensor:
    """Canonical cyclic generator of D(alpha): letter j to the power alpha_j."""
    alpha = tuple(alpha)
    while alpha and alpha[-1] == 0:
        alpha = alpha[:-1]
    return tuple(dp_strip((0,) * j + (a,)) for j, a in enumerate(alpha))


def divided_profile(t: DividedTensor) -> tuple[int, ...]:
    return tuple(dp_degree(f) for f in t)


def exterior_profile(t: ExteriorTensor) -> tuple[int, ...]:
    return tuple(len(f) for f in t)


def strip_profile(profile) -> tuple[int, ...]:
    p = tuple(profile)
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def divided_weight(t: DividedTensor, width: int | None = None) -> tuple[int, ...]:
    w = max((len(f) for f in t), default=0)
    if width is not None:
        w = max(w, width)
    out = [0] * w
    for f in t:
        for j, c in enumerate(f):
            out[j] += c
    return tuple(out)


def exterior_weight(t: ExteriorTensor, width: int | None = None) -> tuple[int, ...]:
    w = max((max(f) for f in t if f), default=0)
    if width is not None:
        w = max(w, width)
    out = [0] * w
    for f in t:
        for j in f:
            out[j - 1] += 1
    return tuple(out)


def divided_monomials(degree: int, n_letters: int) -> list[DividedMonomial]:
    return [dp_strip(c) for c in _bounded_compositions(degree, (degree,) * n_letters)]


def exterior_monomials(degree: int, n_letters: int) -> list[ExteriorMonomial]:
    return [tuple(s) for s in combinations(range(1, n_letters + 1), degree)]


def divided_tensors(profile, n_letters: int, weight=None) -> list[DividedTensor]:
    pools = [divided_monomials(d, n_letters) for d in profile]
    out = []
    for combo in iproduct(*pools):
        if weight is None or divided_weight(combo, len(weight)) == tuple(weight):
            out.append(tuple(combo))
    return out


def exterior_tensors(profile, n_letters: int, weight=None) -> list[ExteriorTensor]:
    pools = [exterior_monomials(d, n_letters) for d in profile]
    out = []
    for combo in iproduct(*pools):
        if weight is None or exterior_weight(combo, len(weight)) == tuple(weight):
            out.append(tuple(combo))
    return out


# ---------------------------------------------------------------------------
# Text forms


def mono_text(m: DividedMonomial) -> str:
    toks = []
    for j, c in enumerate(m):
        if c == 1:
            toks.append(str(j + 1))
        elif c > 1:
            toks.append(f"{j + 1}^{c}")
    return " ".join(toks) if toks else "()"


def parse_mono(text: str) -> DividedMonomial:
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


def ext_text(m: ExteriorMonomial) -> str:
    return " ".join(str(i) for i in m) if m else "()"


def parse_ext(text: str) -> ExteriorMonomial:
    m = parse_mono(text)
    if any(c > 1 for c in m):
        raise ValueError(f"repeated letter in exterior monomial: {text!r}")
    return tuple(j + 1 for j, c in enumerate(m) if c)


def tensor_text(t, exterior: bool = False) -> str:
    fmt = ext_text if exterior else mono_text
    return " | ".join(fmt(f) for f in t)


def parse_tensor(text: str, exterior: bool = False):
    parts = text.replace("⊗", "|").split("|")
    parser = parse_ext if exterior else parse_mono
    return tuple(parser(p) for p in parts)


def lincomb_text(lc: LinComb, key_text) -> str:
    """Deterministic rendering: signed rational multiples of key text forms."""
    if not lc:
        return "0"
    chunks = []
    for key, c in lc.items():
        mag = abs(c)
        body = f"({key_text(key)})" if mag == 1 else f"{mag}*({key_text(key)})"
        if not chunks:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append(("- " if c < 0 else "+ ") + body)
    return " ".join(chunks)
