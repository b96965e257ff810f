"""Batch command-line front end.

Every verification and computation is exposed as a subcommand with
deterministic text or JSON output.  Exit codes: 0 on success, 1 when a
verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinatorics import Tableau, enumerate_sst, normalize_partition, parse_partition
from .decomposition import check_image_inclusion, decomposition_report
from .gamma_maps import g_image, gamma_by_name, gamma_generator_image, base_shape
from .lanke import (
    PRESENTATIONS,
    expected_lie_dim,
    lie2_dim,
    lie_character,
    lie_dim,
    schur_bridge,
    specht_multiplicities,
)
from .selftest import run_selftest
from .tensor_algebra import lincomb_text, parse_tensor, tensor_text
from .weyl import phi_S, straighten

SCHEMA = "weyl-lanke/1"


class VerificationFailure(Exception):
    pass


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_straighten(args) -> int:
    shape = parse_partition(args.shape)
    tab = Tableau.from_text(args.tableau)
    vec = straighten(shape, tab)
    payload = {
        "schema": SCHEMA,
        "shape": list(shape),
        "tableau": tab.to_text(),
        "coordinates": [{"tableau": t.to_text(), "coeff": str(c)} for t, c in vec.terms],
    }
    _emit(args, payload, [vec.to_text()])
    return 0


def cmd_phi(args) -> int:
    tab = Tableau.from_text(args.tableau)
    x = parse_tensor(args.tensor)
    img = phi_S(tab, x)
    payload = {
        "schema": SCHEMA,
        "tableau": tab.to_text(),
        "tensor": tensor_text(x),
        "image": [{"tensor": tensor_text(k), "coeff": str(c)} for k, c in img.items()],
    }
    _emit(args, payload, [lincomb_text(img, tensor_text)])
    return 0


def cmd_gamma(args) -> int:
    names = args.maps.split(",")
    lines = []
    images = []
    for name in names:
        if name == "g":
            n = args.n
            x = (tuple(range(1, n + 1)), tuple(range(n + 1, 2 * n)))
            img = g_image(n, x)
            text = lincomb_text(img, lambda k: tensor_text(k, exterior=True))
        else:
            g = gamma_by_name(name, args.n)
            img = gamma_generator_image(g)
            text = lincomb_text(img, tensor_text)
        images.append({"map": name, "image": [{"tensor": tensor_text(k), "coeff": str(c)} for k, c in img.items()]})
        lines.append(f"{name}: {text}")
    _emit(args, {"schema": SCHEMA, "n": args.n, "maps": images}, lines)
    return 0


def cmd_decompose(args) -> int:
    maps = args.maps.split(",")
    report = decomposition_report(args.n, maps)
    lines = [
        f"coker({'+'.join(maps)}) at n={args.n}: "
        + " + ".join(f"K{tuple(e['partition'])}^{e['mult']}" for e in report["cokernel"])
    ]
    _emit(args, report, lines)
    return 0


def cmd_lie_dim(args) -> int:
    pres = args.presentation.replace("-", "_")
    dim = lie_dim(args.n, pres, dual_prime=args.prime_check)
    payload = {"schema": SCHEMA, "n": args.n, "presentation": args.presentation, "dim": dim}
    _emit(args, payload, [f"dim at n={args.n} ({args.presentation}): {dim}"])
    return 0


def cmd_lie_character(args) -> int:
    cyc = parse_partition(getattr(args, "class"))
    value = lie_character(args.n, cyc)
    payload = {"schema": SCHEMA, "n": args.n, "class": list(cyc), "trace": value}
    _emit(args, payload, [f"trace of class {','.join(map(str, cyc))} at n={args.n}: {value}"])
    return 0


def cmd_specht(args) -> int:
    mults = specht_multiplicities(args.n)
    payload = {
        "schema": SCHEMA,
        "n": args.n,
        "multiplicities": [{"partition": list(p), "mult": m} for p, m in mults],
    }
    _emit(args, payload, [" + ".join(f"S{p}^{m}" for p, m in mults)])
    return 0


def cmd_bridge(args) -> int:
    rep = schur_bridge(args.n)
    payload = {"schema": SCHEMA, **rep}
    lines = [
        f"weight space {rep['weight_space_dim']}, coker {rep['coker_dim']}, "
        f"word quotient {rep['lie_dim']}, rows checked {rep['relation_rows_checked']}, "
        f"match: {rep['match']}"
    ]
    _emit(args, payload, lines)
    if not rep["match"]:
        raise VerificationFailure("bridge cokernel does not match the word quotient")
    return 0


def _verify_assert(cond: bool, message: str, log) -> None:
    if not cond:
        raise VerificationFailure(message)
    log(f"ok: {message}")


def cmd_verify(args) -> int:
    """Per-n acceptance bundle; stops at the first failing assertion."""
    from .combinatorics import pieri_constituents
    from .gamma_maps import gamma1, gamma2, gamma3, adjacent_shape
    from .weyl import pi_U, sst_basis_vectors

    n = args.n
    log = print
    lm = base_shape(n)
    mus = adjacent_shape(n)
    expected = tuple(sorted([(lm, 1), (mus, 1)]))

    rep = decomposition_report(n, ["gamma1", "gamma2"])
    got = tuple((tuple(e["partition"]), e["mult"]) for e in rep["cokernel"])
    _verify_assert(got == expected, f"coker(gamma1+gamma2) = K{lm} + K{mus} (got {got})", log)

    rep3 = decomposition_report(n, ["gamma1", "gamma2", "gamma3"])
    got3 = tuple((tuple(e["partition"]), e["mult"]) for e in rep3["cokernel"])
    _verify_assert(got3 == expected, f"coker with gamma3 added is unchanged (got {got3})", log)
    _verify_assert(check_image_inclusion(n), "third image inside the first two", log)

    rep1 = decomposition_report(n, ["gamma1"])
    got1 = tuple((tuple(e["partition"]), e["mult"]) for e in rep1["cokernel"])
    pieri = tuple(sorted((pc.partition, 1) for pc in pieri_constituents(n)))
    _verify_assert(got1 == pieri, f"coker(gamma1) is the one-row tensor list (got {got1})", log)

    g1 = gamma_generator_image(gamma1(n))
    g2 = gamma_generator_image(gamma2(n))
    g3 = gamma_generator_image(gamma3(n))
    (top,) = enumerate_sst(lm, lm)
    _verify_assert(pi_U(top, g1).is_zero() and pi_U(top, g2).is_zero(), "top projection kills both maps", log)
    r0, r1 = enumerate_sst(mus, lm)
    T = sst_basis_vectors(mus, top.weight())
    _verify_assert(pi_U(r0, g1) == -1 * T[1], "first projection sends the generator to -T1", log)
    _verify_assert(pi_U(r1, g1) == 3 * T[1], "second projection sends the generator to 3*T1", log)
    _verify_assert(pi_U(r0, g2).is_zero() and pi_U(r1, g2).is_zero(), "both projections kill the second map", log)
    _verify_assert(
        pi_U(top, g3).is_zero() and pi_U(r0, g3).is_zero() and pi_U(r1, g3).is_zero(),
        "all three projections kill the third map",
        log,
    )

    if n <= 4:
        dims = {p: lie_dim(n, p, dual_prime=args.prime_check) for p in PRESENTATIONS}
        _verify_assert(
            set(dims.values()) == {expected_lie_dim(n)},
            f"presentations agree at {expected_lie_dim(n)} (got {dims})",
            log,
        )
        mults = specht_multiplicities(n)
        tall = normalize_partition((3,) * (n - 2) + (2, 1, 1))
        wide = normalize_partition((3,) * (n - 1) + (1,))
        _verify_assert(
            mults == tuple(sorted([(tall, 1), (wide, 1)])),
            f"character multiplicities match (got {mults})",
            log,
        )
    if n <= 3:
        repb = schur_bridge(n)
        _verify_assert(repb["match"], "bridge quotient dimensions agree", log)
    _verify_assert(lie2_dim(n) == _two_bracket_dim(n), "two-bracket calibration", log)
    print(f"verify --n {n}: all checks passed")
    return 0


def _two_bracket_dim(n: int) -> int:
    from .combinatorics import specht_dim

    return specht_dim(normalize_partition((2,) * (n - 1) + (1,)))


def cmd_selftest(args) -> int:
    ok = run_selftest(seed=args.seed)
    if not ok:
        raise VerificationFailure("selftest failed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylanke", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_required=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--n", type=int, default=None, required=n_required)
        p.add_argument("--prime-check", action="store_true", help="confirm modular ranks with a second prime")
        p.add_argument("--seed", type=int, default=20240801)

    p = sub.add_parser("straighten", help="semistandard coordinates of a projected tableau")
    common(p)
    p.add_argument("--shape", required=True)
    p.add_argument("--tableau", required=True)
    p.set_defaults(fn=cmd_straighten)

    p = sub.add_parser("phi", help="row-filling image of a divided tensor")
    common(p)
    p.add_argument("--tableau", required=True)
    p.add_argument("--tensor", required=True)
    p.set_defaults(fn=cmd_phi)

    p = sub.add_parser("gamma", help="generator images of the equivariant maps")
    common(p, n_required=True)
    p.add_argument("--maps", default="gamma1")
    p.set_defaults(fn=cmd_gamma)

    p = sub.add_parser("decompose", help="constituents of the cokernel")
    common(p, n_required=True)
    p.add_argument("--maps", default="gamma1,gamma2")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("lie-dim", help="dimension of the word quotient")
    common(p, n_required=True)
    p.add_argument("--presentation", choices=("full", "g1-r145", "g1-r14", "g1_r145", "g1_r14"), default="g1-r145")
    p.set_defaults(fn=cmd_lie_dim)

    p = sub.add_parser("lie-character", help="trace of a conjugacy class on the quotient")
    common(p, n_required=True)
    p.add_argument("--class", required=True)
    p.set_defaults(fn=cmd_lie_character)

    p = sub.add_parser("specht", help="constituent multiplicities from characters")
    common(p, n_required=True)
    p.set_defaults(fn=cmd_specht)

    p = sub.add_parser("bridge", help="weight-space quotient versus word quotient")
    common(p, n_required=True)
    p.set_defaults(fn=cmd_bridge)

    p = sub.add_parser("verify", help="run the per-n acceptance bundle")
    common(p, n_required=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("selftest", help="run the seeded property suites")
    common(p)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("gamma", "decompose", "lie-dim", "lie-character", "specht", "bridge", "verify") and (
        args.n is None or args.n < 2
    ):
        parser.error("--n must be an integer >= 2")
    try:
        return args.fn(args)
    except VerificationFailure as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # malformed flag values (shapes, tableaux, classes, map names)
        parser.exit(2, f"{parser.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
