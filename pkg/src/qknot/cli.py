"""Command-line interface: compute invariants, run verification suites.

Exit codes: 0 success, 1 internal assertion failure (e.g. a pairing
coefficient outside the even-exponent lattice), 2 validation errors (bad
word, non-knot closure without --force).  Errors print one machine-parsable
line on stderr of the form `error: <code>: <message>`.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import random
import sys
import time

from . import oracles, pairing
from .braid import (BraidError, BraidWord, NotAKnotError, closure_cycle_count,
                    conjugate, is_knot, load_knot_table, parse_braid,
                    stabilize)
from .pairing import InvariantResult, PairingImageError
from .rings import TwoVarLaurent, XD
from .special import (eta_generic, eta_root, gamma, psi_generic, psi_root,
                      truncation_vanishing)
from .verma import WeightVector, apply_braid, apply_generator, enumerate_basis, \
    rmatrix_entry, rmatrix_series_oracle


@dataclasses.dataclass
class RunConfig:
    """One resolved invocation: command plus its input and output options."""

    command: str
    braid: BraidWord | None = None
    colour: int = 2
    fmt: str = "text"
    force: bool = False
    jobs: int = 1
    oracle_kind: str = "jones"
    suite: str = "all"
    max_len: int = 6
    colours: tuple[int, ...] = (2, 3)
    count: int = 200
    seed: int = 7


def _default_jobs():
    env = os.environ.get("QKNOT_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qknot",
        description="Exact quantum invariants of braid closures from the "
                    "two-variable pairing.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_flags(p, invariant=True):
        p.add_argument("--braid", help="braid word, e.g. '1 1 1' or '1,-2,1,-2'")
        p.add_argument("--strands", type=int, help="strand count for --braid")
        p.add_argument("--knot", help="name of an entry in the knot table")
        p.add_argument("--table", help="knot table file (name strands letters...)")
        if invariant:
            p.add_argument("--color", "--colour", dest="color", type=int,
                           default=2, help="colour N (default 2)")
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--force", action="store_true",
                       help="compute even if the closure is not a knot")
        p.add_argument("--jobs", type=int, default=None,
                       help="parallel workers (default: QKNOT_JOBS or 1)")

    for name, help_ in (("jones", "colour-N generic invariant of a knot closure"),
                        ("ado", "colour-N root-of-unity invariant"),
                        ("unified", "two-variable pairing value")):
        add_input_flags(sub.add_parser(name, help=help_))

    p_oracle = sub.add_parser("oracle", help="independent cross-check invariants")
    p_oracle.add_argument("--kind", choices=("jones", "alexander"),
                          default="jones")
    add_input_flags(p_oracle, invariant=False)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--suite", default="all",
                          help="comma list of suites or 'all' "
                               f"(available: {', '.join(sorted(_SUITES))})")
    p_verify.add_argument("--max-len", type=int, default=6)
    p_verify.add_argument("--colors", "--colours", dest="colors", default="2,3")
    p_verify.add_argument("--count", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=7)
    p_verify.add_argument("--jobs", type=int, default=None)
    return parser


def _resolve_braid(args):
    has_inline = args.braid is not None
    has_table = args.knot is not None or args.table is not None
    if has_inline == has_table:
        raise BraidError("exactly one input source required: "
                         "--braid/--strands or --knot/--table")
    if has_inline:
        if args.strands is None:
            raise BraidError("--braid requires --strands")
        return parse_braid(args.braid, args.strands)
    if args.knot is None or args.table is None:
        raise BraidError("--knot and --table must be given together")
    table = load_knot_table(args.table)
    if args.knot not in table:
        raise BraidError(f"knot {args.knot!r} not found in {args.table}")
    return table[args.knot]


def _emit(result: InvariantResult, fmt, out):
    if fmt == "json":
        out.write(json.dumps(result.to_json_dict()) + "\n")
    else:
        out.write(result.render() + "\n")


def _run_invariant(cfg: RunConfig, out, err):
    beta, N = cfg.braid, cfg.colour
    if N < 1 or (cfg.command == "ado" and N < 2):
        raise BraidError(f"bad colour {N} for {cfg.command}")
    components = closure_cycle_count(beta)
    if components != 1:
        # The pairing itself is defined for any closure, so `unified` only
        # flags multi-component input; the knot invariants refuse it unless
        # forced.
        if cfg.command != "unified" and not cfg.force:
            raise NotAKnotError(f"closure is not a knot ({components} components)")
        err.write(f"warning: closure is not a knot ({components} "
                  "components); result unvalidated\n")
    unified = pairing.unified_pairing(beta, N, jobs=cfg.jobs)
    if cfg.command == "jones":
        value = pairing.jones_from_unified(unified)
    elif cfg.command == "ado":
        value = pairing.ado_from_unified(unified)
    else:
        value = unified.value
    _emit(InvariantResult(cfg.command, N, beta, value), cfg.fmt, out)
    return 0


def _run_oracle(cfg: RunConfig, out, err):
    if cfg.oracle_kind == "jones":
        value = oracles.kauffman_jones(cfg.braid, force=cfg.force)
    else:
        value = oracles.burau_alexander(cfg.braid, force=cfg.force)
    out.write(value.render() + "\n")
    return 0


# ---------------------------------------------------------------------------
# Verification suites (bundle the acceptance checks behind one entry point)
# ---------------------------------------------------------------------------

def _random_knot_word(rng, strands, max_len):
    while True:
        length = rng.randint(1, max_len)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1)
                        for _ in range(length))
        beta = BraidWord(strands, letters)
        if is_knot(beta):
            return beta


def _random_move(rng, beta):
    kind = rng.randrange(3)
    if kind == 0:
        length = rng.randint(1, 2)
        alpha = BraidWord(beta.strands,
                          tuple(rng.choice((1, -1)) * rng.randint(1, beta.strands - 1)
                                for _ in range(length)))
        return conjugate(beta, alpha)
    return stabilize(beta, 1 if kind == 1 else -1)


def _suite_braid_relations(cfg, report):
    checked = 0
    for n, m, rels in (
            (3, 1, None), (3, 2, None), (3, 3, None), (3, 4, None), (5, 2, None)):
        b1 = BraidWord(n, (1, 2, 1))
        b2 = BraidWord(n, (2, 1, 2))
        for e in enumerate_basis(n, m):
            v = WeightVector.basis_vector(e)
            if apply_braid(b1, v) != apply_braid(b2, v):
                report(f"braid relation failed on {e} in ({n},{m})")
            for i in range(1, n):
                w = apply_generator(apply_generator(v, i, 1), i, -1)
                if w != v:
                    report(f"inverse failed at generator {i} on {e}")
            checked += 1 + (n - 1)
    # far commutation on 4 strands
    for m in (1, 2):
        for e in enumerate_basis(4, m):
            v = WeightVector.basis_vector(e)
            lhs = apply_braid(BraidWord(4, (1, 3)), v)
            rhs = apply_braid(BraidWord(4, (3, 1)), v)
            if lhs != rhs:
                report(f"far commutation failed on {e}")
            checked += 1
    return checked


def _suite_rmatrix(cfg, report):
    checked = 0
    for i in range(5):
        for j in range(5):
            series = rmatrix_series_oracle(i, j, i + 2)
            closed = {}
            for n in range(i + 1):
                closed[(j + n, i - n)] = rmatrix_entry(i, j, n)
            if {k: v for k, v in closed.items() if v} != series.entries:
                report(f"closed form != series at ({i},{j})")
            checked += 1
    return checked


def _suite_knots(cfg, report):
    checked = 0
    trefoil = BraidWord(2, (1, 1, 1))
    fig8 = BraidWord(3, (1, -2, 1, -2))
    expected_unified = TwoVarLaurent({(0, 0): 1, (-1, 1): 1, (-2, 1): -1}, XD)
    u = pairing.unified_pairing(trefoil, 2, jobs=cfg.jobs)
    if u.value != expected_unified:
        report("trefoil pairing value mismatch")
    checked += 1
    for beta in (trefoil, fig8):
        jones_t = oracles.jones_to_classical(pairing.coloured_jones(beta, 2))
        if jones_t != oracles.kauffman_jones(beta):
            report(f"generic invariant disagrees with state sum on {beta.letters}")
        alex_t = oracles.ado2_to_classical(pairing.ado(beta, 2))
        if not oracles.alexander_match_up_to_unit(alex_t,
                                                  oracles.burau_alexander(beta)):
            report(f"root invariant disagrees with determinant on {beta.letters}")
        checked += 2
    return checked


def _suite_markov(cfg, report):
    rng = random.Random(cfg.seed)
    checked = 0
    pairs_per_colour = max(1, cfg.count // len(cfg.colours))
    for N in cfg.colours:
        done = 0
        while done < pairs_per_colour:
            beta = _random_knot_word(rng, rng.choice((2, 3)), cfg.max_len)
            moved = _random_move(rng, beta)
            u0 = pairing.unified_pairing(beta, N, jobs=cfg.jobs)
            u1 = pairing.unified_pairing(moved, N, jobs=cfg.jobs)
            if pairing.jones_from_unified(u0) != pairing.jones_from_unified(u1):
                report(f"generic invariant changed: {beta.letters} -> "
                       f"{moved.letters} at N={N}")
            if pairing.ado_from_unified(u0) != pairing.ado_from_unified(u1):
                report(f"root invariant changed: {beta.letters} -> "
                       f"{moved.letters} at N={N}")
            done += 1
            checked += 2
    return checked


def _suite_znroute(cfg, report):
    rng = random.Random(cfg.seed + 1)
    checked = 0
    for N in cfg.colours:
        for _ in range(max(1, cfg.count // (4 * len(cfg.colours)))):
            beta = _random_knot_word(rng, rng.choice((2, 3)), cfg.max_len)
            if pairing.ado(beta, N) != pairing.ado_zn_route(beta, N):
                report(f"mod-N route mismatch on {beta.letters} at N={N}")
            checked += 1
    return checked


def _suite_truncation(cfg, report):
    checked = 0
    for N in range(2, 6):
        for i in range(N):
            for j in range(N):
                for n in range(i + 1):
                    value = truncation_vanishing(i, j, n, N)
                    if j + n >= N and value:
                        report(f"truncation failed at (i={i}, j={j}, n={n}, N={N})")
                    checked += 1
    return checked


def _suite_identity(cfg, report):
    checked = 0
    for n in range(1, 5):
        for N in range(1, 5):
            expected = TwoVarLaurent({(0, k): 1 for k in range(N)}, XD) ** (n - 1)
            got = pairing.unified_pairing(BraidWord(n), N).value
            if got != expected:
                report(f"identity-braid value wrong at (n={n}, N={N})")
            checked += 1
    return checked


def _random_xd_poly(rng):
    terms = {}
    for _ in range(rng.randint(1, 6)):
        terms[(rng.randint(-4, 4), rng.randint(-4, 4))] = rng.randint(-9, 9)
    return TwoVarLaurent(terms, XD)


def _suite_diagram(cfg, report):
    rng = random.Random(cfg.seed + 2)
    checked = 0
    for N in (2, 3, 4):
        for _ in range(50):
            p = _random_xd_poly(rng)
            if eta_generic(gamma(p), N) != psi_generic(p, N):
                report(f"generic diagram square fails at N={N} on {p}")
            if eta_root(gamma(p), N) != psi_root(p, N):
                report(f"root diagram square fails at N={N} on {p}")
            checked += 2
    return checked


def _suite_scale(cfg, report):
    checked = 0
    t0 = time.monotonic()
    pairing.coloured_jones(BraidWord(2, (1, 1, 1)), 4, jobs=cfg.jobs)
    pairing.ado(BraidWord(2, (1, 1, 1)), 4, jobs=cfg.jobs)
    pairing.coloured_jones(BraidWord(3, (1, -2, 1, -2)), 3, jobs=cfg.jobs)
    pairing.ado(BraidWord(3, (1, -2, 1, -2)), 3, jobs=cfg.jobs)
    elapsed = time.monotonic() - t0
    if elapsed > 120:
        report(f"scale check too slow: {elapsed:.1f}s")
    checked += 1
    for N in range(1, 5):
        if pairing.coloured_jones(BraidWord(1), N) != 1:
            report(f"unknot anchor failed at N={N}")
        if pairing.coloured_jones(BraidWord(2, (1,)), N) != 1:
            report(f"stabilised unknot anchor failed at N={N}")
        checked += 2
    return checked


_SUITES = {
    "braidrel": _suite_braid_relations,
    "rmatrix": _suite_rmatrix,
    "knots": _suite_knots,
    "markov": _suite_markov,
    "znroute": _suite_znroute,
    "truncation": _suite_truncation,
    "identity": _suite_identity,
    "diagram": _suite_diagram,
    "scale": _suite_scale,
}


def _run_verify(cfg: RunConfig, out, err):
    names = sorted(_SUITES) if cfg.suite == "all" else cfg.suite.split(",")
    failures = []
    total = 0
    for name in names:
        name = name.strip()
        if name not in _SUITES:
            raise BraidError(f"unknown suite {name!r}; available: "
                             f"{', '.join(sorted(_SUITES))}")
        local_failures = []
        checked = _SUITES[name](cfg, local_failures.append)
        total += checked
        failures.extend(local_failures)
        status = "PASS" if not local_failures else "FAIL"
        out.write(f"{name}: {status} {checked - len(local_failures)}/{checked}\n")
        for msg in local_failures:
            err.write(f"error: verify: {name}: {msg}\n")
    out.write(f"PASS {total - len(failures)}/{total}\n")
    return 0 if not failures else 1


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(command=args.command)
    try:
        if args.command == "verify":
            cfg.suite = args.suite
            cfg.max_len = args.max_len
            cfg.colours = tuple(int(c) for c in args.colors.split(",") if c)
            cfg.count = args.count
            cfg.seed = args.seed
            cfg.jobs = args.jobs if args.jobs else _default_jobs()
            if not cfg.colours or any(c < 2 for c in cfg.colours):
                raise BraidError("--colors needs a comma list of integers >= 2")
            return _run_verify(cfg, out, err)
        cfg.braid = _resolve_braid(args)
        cfg.force = args.force
        cfg.jobs = args.jobs if args.jobs else _default_jobs()
        if args.command == "oracle":
            cfg.oracle_kind = args.kind
            return _run_oracle(cfg, out, err)
        cfg.fmt = args.format
        cfg.colour = args.color
        return _run_invariant(cfg, out, err)
    except (BraidError, NotAKnotError, ValueError) as exc:
        code = "closure-not-knot" if isinstance(exc, NotAKnotError) else "bad-arguments"
        err.write(f"error: {code}: {exc}\n")
        return 2
    except PairingImageError as exc:
        err.write(f"error: gamma-image: {exc}\n")
        return 1


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
