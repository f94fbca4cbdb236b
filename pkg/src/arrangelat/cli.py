"""Command-line surface: compute, verify, and export.

    arrangelat <verb> (--input PATH | --family NAME [--n N] [--m M])
               [--pivot K] [--method direct|recursive|both] [--prime P]
               [--format json|text|dot] [--output PATH]

Verbs: lattice, mobius, poincare, charpoly, length, decompose, triple,
verify, hasse, builtin. Exit codes: 0 success, 1 a verified identity
failed, 2 bad input. ARRANGELAT_BUDGET overrides the oracle point budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus as corpus_mod
from .arrangement import (
    Arrangement,
    ArrangementError,
    JSON_DUMP_ARGS,
    builtin,
    parse,
    serialize,
)
from .fforacle import (
    BadPrimeError,
    BudgetExceededError,
    DEFAULT_BUDGET,
    oracle_check,
    result_to_bytes,
)
from .invariants import (
    characteristic_polynomial,
    check_mobius_additivity,
    check_triple_identity,
    length,
    poincare_polynomial,
)
from .lattice import IntersectionLattice, build_lattice, lattice_to_json, mobius
from .perverse import decompose_direct, decompose_recursive, report

VERBS = (
    "lattice",
    "mobius",
    "poincare",
    "charpoly",
    "length",
    "decompose",
    "triple",
    "verify",
    "hasse",
    "builtin",
)

DEFAULT_PRIMES = (101, 103)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arrangelat", description=__doc__.splitlines()[0])
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--input", metavar="PATH", help="arrangement JSON file")
    p.add_argument("--family", help="built-in family: braid, boolean, generic")
    p.add_argument("--n", type=int, help="family dimension parameter")
    p.add_argument("--m", type=int, help="family count parameter (generic)")
    p.add_argument("--pivot", type=int, default=0, help="pivot hyperplane index")
    p.add_argument(
        "--method", choices=("direct", "recursive", "both"), default="both"
    )
    p.add_argument("--prime", type=int, help="oracle prime (default: 101 and 103)")
    p.add_argument("--format", choices=("json", "text", "dot"), default=None)
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p.add_argument(
        "--corpus", action="store_true", help="verify: run the whole fixed-seed corpus"
    )
    p.add_argument(
        "--emit-json", action="store_true", help="builtin: emit arrangement JSON (default)"
    )
    return p


def emit_hasse_dot(l: IntersectionLattice) -> bytes:
    """DOT digraph of the cover relation, nodes labeled "F<i> dim=<d> mu=<mu>".

    Node and edge order follow the canonical flat order, so output is
    byte-stable across runs.
    """
    mu = mobius(l)
    lines = ["digraph hasse {"]
    for i, f in enumerate(l.flats):
        lines.append(f'  F{i} [label="F{i} dim={f.dim} mu={mu[i]}"];')
    for lo, hi in sorted(l.covers):
        lines.append(f"  F{lo} -> F{hi};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _load_arrangement(args) -> Arrangement:
    if (args.input is None) == (args.family is None):
        raise ArrangementError("exactly one of --input or --family is required")
    if args.input is not None:
        with open(args.input, "rb") as fh:
            return parse(fh.read())
    return builtin(args.family, n=args.n, m=args.m)


def _emit(payload: bytes, args, stdout) -> None:
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    else:
        stdout.write(payload.decode("utf-8"))


def _json_bytes(doc) -> bytes:
    return (json.dumps(doc, **JSON_DUMP_ARGS) + "\n").encode("utf-8")


def _budget() -> int:
    raw = os.environ.get("ARRANGELAT_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _verify_corpus(args, stdout, stderr) -> int:
    budget = _budget()
    failures = 0
    for seed, a in corpus_mod.corpus():
        problems = []
        direct = decompose_direct(a)
        if decompose_recursive(a) != direct:
            problems.append("decompose mismatch")
        for pivot in range(len(a.hyperplanes)):
            if not check_triple_identity(a, pivot).holds:
                problems.append(f"triple identity failed at pivot {pivot}")
            if not check_mobius_additivity(a, pivot).holds:
                problems.append(f"mobius additivity failed at pivot {pivot}")
        if a.ambient_dim <= 3:
            for p in DEFAULT_PRIMES:
                try:
                    res = oracle_check(a, p, budget)
                except (BadPrimeError, BudgetExceededError) as e:
                    problems.append(f"oracle prime {p}: {e}")
                    continue
                if not res.passed:
                    problems.append(f"oracle prime {p}: {res}")
        status = "ok" if not problems else "FAIL " + "; ".join(problems)
        stdout.write(
            f"seed {seed}: n={a.ambient_dim} m={len(a.hyperplanes)} {status}\n"
        )
        failures += bool(problems)
    stdout.write(f"corpus: {len(corpus_mod.SEEDS) - failures}/{len(corpus_mod.SEEDS)} ok\n")
    return 1 if failures else 0


def _dispatch(args, stdout, stderr) -> int:
    verb = args.verb

    if verb == "verify" and args.corpus:
        return _verify_corpus(args, stdout, stderr)

    a = _load_arrangement(args)
    fmt = args.format

    if verb in ("lattice", "mobius"):
        lat = build_lattice(a)
        _emit(_json_bytes(lattice_to_json(lat, mobius(lat))), args, stdout)
        return 0

    if verb == "poincare" or verb == "charpoly":
        poly = poincare_polynomial(a) if verb == "poincare" else characteristic_polynomial(a)
        if fmt == "text":
            _emit((str(poly) + "\n").encode(), args, stdout)
        else:
            _emit(_json_bytes(poly.to_json()), args, stdout)
        return 0

    if verb == "length":
        value = length(a)
        if fmt == "json":
            _emit(_json_bytes({"length": str(value)}), args, stdout)
        else:
            _emit(f"{value}\n".encode(), args, stdout)
        return 0

    if verb == "decompose":
        if args.method == "both":
            direct = decompose_direct(a)
            recursive = decompose_recursive(a)
            if direct != recursive:
                stderr.write("decompose: direct and recursive classes disagree\n")
                return 1
            method = "direct"
        else:
            method = args.method
        _emit(report(a, fmt or "json", method=method), args, stdout)
        return 0

    if verb == "triple":
        tri = check_triple_identity(a, args.pivot)
        add = check_mobius_additivity(a, args.pivot)
        if fmt == "text":
            payload = f"{tri}\nmobius additivity: {'ok' if add.holds else 'FAIL'}\n".encode()
        else:
            payload = _json_bytes(
                {"triple_identity": tri.to_json(), "mobius_additivity": add.to_json()}
            )
        _emit(payload, args, stdout)
        return 0 if tri.holds and add.holds else 1

    if verb == "verify":
        primes = (args.prime,) if args.prime else DEFAULT_PRIMES
        results = [oracle_check(a, p, _budget()) for p in primes]
        if fmt == "text":
            payload = ("".join(f"{r}\n" for r in results)).encode()
        else:
            payload = result_to_bytes(results)
        _emit(payload, args, stdout)
        return 0 if all(r.passed for r in results) else 1

    if verb == "hasse":
        if fmt not in (None, "dot"):
            raise ArrangementError("hasse only emits DOT")
        _emit(emit_hasse_dot(build_lattice(a)), args, stdout)
        return 0

    if verb == "builtin":
        if args.family is None:
            raise ArrangementError("builtin requires --family")
        _emit(serialize(a), args, stdout)
        return 0

    raise AssertionError(f"unhandled verb {verb}")


def run(argv, stdout=None, stderr=None) -> int:
    """Parse argv and execute; returns the process exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return _dispatch(args, stdout, stderr)
    except (ArrangementError, BadPrimeError, BudgetExceededError) as e:
        stderr.write(f"arrangelat: {e}\n")
        return 2
    except (OSError, json.JSONDecodeError, IndexError, ValueError) as e:
        stderr.write(f"arrangelat: {e}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
