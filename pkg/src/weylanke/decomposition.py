"""Multiplicity bookkeeping for the cokernels of the gamma maps.

Everything happens at the Hom level: the domain weight spaces are
cyclic, so a map out of them is pinned by its value on the canonical
generator, and the multiplicity of a constituent inside a sum of images
is the rank of a small matrix whose rows are the projections of the
generator images.  The full tensor spaces are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import (
    Partition,
    Tableau,
    enumerate_sst,
    kostka,
    normalize_partition,
    partitions,
)
from .gamma_maps import gamma_by_name, gamma_generator_image, base_shape
from .linalg import rank_rational
from .tensor_algebra import LinComb, divided_profile, divided_weight, strip_profile
from .weyl import oracle_coords, phi_S, pi_U


@dataclass(frozen=True)
class HomSpace:
    """Basis of projections onto a constituent, one per filling tableau."""

    domain_weight: tuple[int, ...]
    target: Partition
    basis: tuple[Tableau, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def hom_space(target: Partition, domain_weight) -> HomSpace:
    target = normalize_partition(target)
    weight = tuple(domain_weight)
    return HomSpace(weight, target, tuple(enumerate_sst(target, weight)))


SpechtDecomposition = tuple[tuple[Partition, int], ...]


def restriction_rank(mu: Partition, generators: list[LinComb]) -> int:
    """Rank of the projections restricted to the span of the images.

    Rows are indexed by the filling tableaux of shape mu and weight
    equal to the generators' common profile; the row for U concatenates
    the semistandard coordinates of U's projection applied to every
    generator image (each image keeps its own weight block).  The rank
    equals the multiplicity of the mu constituent inside the sum of the
    images.
    """
    mu = normalize_partition(mu)
    profiles = set()
    weights = []
    for g in generators:
        ps = {strip_profile(divided_profile(t)) for t, _ in g.items()}
        if len(ps) != 1:
            raise ValueError("generator image mixes profiles")
        profiles |= ps
        width = max(len(divided_weight(t)) for t, _ in g.items())
        ws = {divided_weight(t, width) for t, _ in g.items()}
        if len(ws) != 1:
            raise ValueError("generator image is not weight homogeneous")
        weights.append(ws.pop())
    if len(profiles) != 1:
        raise ValueError(f"generator images live in different spaces: {profiles}")
    profile = profiles.pop()
    ssts = enumerate_sst(mu, profile)
    if not ssts:
        return 0
    offsets = []
    pos = 0
    for w in weights:
        offsets.append(pos)
        pos += kostka(mu, w)
    rows = []
    for u in ssts:
        row: dict[int, object] = {}
        for g, w, off in zip(generators, weights, offsets):
            img = phi_S(u, g)
            if not img:
                continue
            vec = oracle_coords(mu, img).vector()
            for k, c in enumerate(vec):
                if c:
                    row[off + k] = c
        rows.append(row)
    return rank_rational(rows)


def generator_images(n: int, maps) -> list[LinComb]:
    out = []
    for name in maps:
        g = gamma_by_name(name, n) if isinstance(name, str) else name
        out.append(gamma_generator_image(g))
    return out


def cokernel_multiplicity(n: int, mu: Partition, maps) -> int:
    """Multiplicity of the mu constituent in the quotient by the images."""
    mu = normalize_partition(mu)
    gens = generator_images(n, maps)
    return kostka(mu, base_shape(n)) - restriction_rank(mu, gens)


def scan_shapes(n: int) -> list[Partition]:
    """All shapes that can receive a projection from weight (n,n-1,n-1).

    Only partitions with at most three rows can have a semistandard
    filling of a three-letter weight.
    """
    return [p for p in partitions(3 * n - 2, max_rows=3) if kostka(p, base_shape(n)) > 0]


def decompose_cokernel(n: int, maps) -> SpechtDecomposition:
    """Constituents of the quotient of D(n,n-1,n-1) by the selected images."""
    if n < 2:
        raise ValueError("need n >= 2")
    if not maps:
        raise ValueError("need at least one map")
    gens = generator_images(n, maps)
    out = []
    for mu in sorted(scan_shapes(n)):
        mult = kostka(mu, base_shape(n)) - restriction_rank(mu, gens)
        if mult:
            out.append((mu, mult))
    return tuple(out)


def check_image_inclusion(n: int) -> bool:
    """True when adding gamma3 never grows the restricted rank."""
    pair = generator_images(n, ("gamma1", "gamma2"))
    triple = generator_images(n, ("gamma1", "gamma2", "gamma3"))
    for mu in scan_shapes(n):
        if restriction_rank(mu, pair) != restriction_rank(mu, triple):
            return False
    return True


def decomposition_report(n: int, maps) -> dict:
    """JSON-ready report of the cokernel decomposition."""
    decomp = decompose_cokernel(n, maps)
    return {
        "schema": "weyl-lanke/1",
        "n": n,
        "maps": list(maps),
        "cokernel": [{"partition": list(p), "mult": m} for p, m in decomp],
    }
