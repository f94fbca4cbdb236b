"""Finite-field verification oracle.

For a good prime p (one where the mod-p arrangement has the same
intersection-lattice combinatorics as the rational one), the number of
points of F_p^n avoiding every hyperplane equals the characteristic
polynomial evaluated at p. The count is exhaustive and shares no code with
the Moebius computation beyond the field-generic RREF, so agreement checks
the whole invariant pipeline from the outside.

Counting is vectorized over int64 blocks; all arithmetic stays in exact
integer residues.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .arrangement import Arrangement, Hyperplane, JSON_DUMP_ARGS
from .exactalg import GF
from .invariants import characteristic_polynomial
from .lattice import build_lattice, combinatorial_fingerprint

DEFAULT_BUDGET = 10**8
_BLOCK = 1 << 18


class BadPrimeError(ValueError):
    """The arrangement does not reduce cleanly mod p."""


class BudgetExceededError(RuntimeError):
    """p^n exceeds the enumeration budget; use a smaller prime or dimension."""


def reduce_mod_p(a: Arrangement, p: int) -> Arrangement:
    """Reduce a rational arrangement mod p, recanonicalized over F_p.

    Errors when a coefficient denominator is divisible by p, when a normal
    vector vanishes mod p, or when two hyperplanes collide mod p; any of
    these makes the prime unusable for this arrangement.
    """
    fld = GF(p)
    reduced: list[Hyperplane] = []
    by_plane: dict[Hyperplane, int] = {}
    for i, h in enumerate(a.hyperplanes):
        for x in h.row():
            if x.denominator % p == 0:
                raise BadPrimeError(
                    f"hyperplane {i}: denominator of {x} divisible by {p}"
                )
        normal = tuple(fld(x) for x in h.normal)
        if not any(normal):
            raise BadPrimeError(f"hyperplane {i}: normal vector vanishes mod {p}")
        hp = Hyperplane(normal, fld(h.offset))
        if hp in by_plane:
            raise BadPrimeError(
                f"hyperplanes {by_plane[hp]} and {i} collide mod {p}"
            )
        by_plane[hp] = i
        reduced.append(hp)
    return Arrangement(a.ambient_dim, tuple(reduced), fld)


def is_good_prime(a: Arrangement, p: int) -> bool:
    """True iff the mod-p lattice is combinatorially equal to the rational one."""
    mod = reduce_mod_p(a, p)
    return combinatorial_fingerprint(build_lattice(a)) == combinatorial_fingerprint(
        build_lattice(mod)
    )


def count_complement_points(a: Arrangement, budget: int = DEFAULT_BUDGET) -> int:
    """Exhaustively count points of F_p^n lying on no hyperplane.

    Enumerates in row-major blocks; the total is order-independent.
    """
    p = a.field.p
    n = a.ambient_dim
    total = p**n
    if total > budget:
        raise BudgetExceededError(
            f"{p}^{n} = {total} points exceed the budget of {budget}"
        )
    if n == 0:
        return 1
    normals = [
        np.array([x.value for x in h.normal], dtype=np.int64) for h in a.hyperplanes
    ]
    offsets = [h.offset.value for h in a.hyperplanes]
    powers = [p ** (n - 1 - k) for k in range(n)]  # row-major digit weights
    hit_total = 0
    for start in range(0, total, _BLOCK):
        idx = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
        digits = np.empty((n, idx.size), dtype=np.int64)
        for k in range(n):
            digits[k] = (idx // powers[k]) % p
        on_any = np.zeros(idx.size, dtype=bool)
        for normal, off in zip(normals, offsets):
            on_any |= (normal @ digits) % p == off
        hit_total += int(on_any.sum())
    return total - hit_total


@dataclass(frozen=True)
class OracleResult:
    prime: int
    good_prime: bool
    point_count: int
    chi_at_p: int
    passed: bool

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "good_prime": self.good_prime,
            "point_count": str(self.point_count),
            "chi_at_p": str(self.chi_at_p),
            "pass": self.passed,
        }

    def __str__(self) -> str:
        mark = "pass" if self.passed else "FAIL"
        return (
            f"prime {self.prime}: good={self.good_prime} "
            f"count={self.point_count} chi(p)={self.chi_at_p} [{mark}]"
        )


def oracle_check(a: Arrangement, p: int, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Compare the exhaustive complement count over F_p with chi(A, p).

    Reduction failures (bad denominators, collisions) propagate as
    BadPrimeError; a prime that reduces cleanly but degenerates the lattice
    yields good_prime=False and never passes.
    """
    mod = reduce_mod_p(a, p)
    good = combinatorial_fingerprint(build_lattice(a)) == combinatorial_fingerprint(
        build_lattice(mod)
    )
    count = count_complement_points(mod, budget)
    chi = characteristic_polynomial(a)(p)
    return OracleResult(p, good, count, chi, good and count == chi)


def result_to_bytes(results: list[OracleResult]) -> bytes:
    return (
        json.dumps([r.to_json() for r in results], **JSON_DUMP_ARGS) + "\n"
    ).encode("utf-8")
