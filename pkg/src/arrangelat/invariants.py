"""Polynomial invariants of an arrangement and the deletion-restriction
identities they satisfy.

The Poincare polynomial is sum over flats of mu(F) * (-t)^codim(F); its
value at t = 1 is the perverse length of the direct image and is also the
sum of |mu(F)|. The characteristic polynomial chi(A, t), with coefficient
of t^d equal to the mu-sum over flats of dimension d, is the companion
used by the finite-field counting oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement, deletion, embed_system, restriction
from .lattice import (
    Flat,
    IntersectionLattice,
    MobiusTable,
    build_lattice,
    flat_from_system,
    mobius,
)


class IntPolynomial:
    """Dense integer polynomial; coeffs[k] is the t^k coefficient, trailing
    zeros trimmed, the zero polynomial being the empty tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(int(x) for x in c)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(x * other for x in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by t^k."""
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "IntPolynomial":
        return cls(int(s) for s in data)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs})"


def poincare_from(l: IntersectionLattice, mu: MobiusTable) -> IntPolynomial:
    coeffs = [0] * (l.ambient_dim + 1)
    for i, f in enumerate(l.flats):
        k = f.codim
        coeffs[k] += mu[i] * (-1) ** k
    return IntPolynomial(coeffs)


def characteristic_from(l: IntersectionLattice, mu: MobiusTable) -> IntPolynomial:
    coeffs = [0] * (l.ambient_dim + 1)
    for i, f in enumerate(l.flats):
        coeffs[f.dim] += mu[i]
    return IntPolynomial(coeffs)


def poincare_polynomial(a: Arrangement) -> IntPolynomial:
    l = build_lattice(a)
    return poincare_from(l, mobius(l))


def characteristic_polynomial(a: Arrangement) -> IntPolynomial:
    l = build_lattice(a)
    return characteristic_from(l, mobius(l))


def length(a: Arrangement) -> int:
    """Perverse length of the direct image: Pi(A, 1), cross-checked against
    the independent sum of |mu(F)| over the lattice."""
    l = build_lattice(a)
    mu = mobius(l)
    at_one = poincare_from(l, mu)(1)
    abs_sum = sum(abs(v) for v in mu.values)
    if at_one != abs_sum:
        raise RuntimeError(
            f"length self-check failed: Pi(A,1) = {at_one} but sum |mu| = {abs_sum}"
        )
    return at_one


@dataclass(frozen=True)
class TripleIdentityReport:
    """Pi(A,t) against Pi(A',t) + t*Pi(A'',t) for one pivot."""

    pivot: int
    poincare: IntPolynomial
    deletion_poincare: IntPolynomial
    restriction_poincare: IntPolynomial
    holds: bool

    def to_json(self) -> dict:
        return {
            "pivot": self.pivot,
            "poincare": self.poincare.to_json(),
            "deletion_poincare": self.deletion_poincare.to_json(),
            "restriction_poincare": self.restriction_poincare.to_json(),
            "holds": self.holds,
        }

    def __str__(self) -> str:
        mark = "ok" if self.holds else "FAIL"
        return (
            f"pivot {self.pivot}: Pi(A) = {self.poincare}; Pi(A') = "
            f"{self.deletion_poincare}; Pi(A'') = {self.restriction_poincare} [{mark}]"
        )


def check_triple_identity(a: Arrangement, pivot: int) -> TripleIdentityReport:
    """Deletion-restriction identity Pi(A,t) = Pi(A',t) + t*Pi(A'',t)."""
    pi = poincare_polynomial(a)
    pi_del = poincare_polynomial(deletion(a, pivot))
    pi_res = poincare_polynomial(restriction(a, pivot)[0])
    holds = pi == pi_del + pi_res.shift()
    return TripleIdentityReport(pivot, pi, pi_del, pi_res, holds)


@dataclass(frozen=True)
class AdditivityRow:
    flat: Flat
    total: int  # |mu_A(F)|
    from_deletion: int  # |mu_A'(F)|, 0 when F is not a flat of A'
    from_restriction: int  # |mu_A''(F)| after embedding, 0 when absent
    ok: bool


@dataclass(frozen=True)
class MobiusAdditivityReport:
    pivot: int
    rows: tuple[AdditivityRow, ...]
    holds: bool

    def to_json(self) -> dict:
        fld_rows = []
        for r in self.rows:
            fld = r.flat.system.field
            fld_rows.append(
                {
                    "flat_system": [
                        [fld.format(x) for x in row] for row in r.flat.system.rows
                    ],
                    "dim": r.flat.dim,
                    "total": str(r.total),
                    "from_deletion": str(r.from_deletion),
                    "from_restriction": str(r.from_restriction),
                    "ok": r.ok,
                }
            )
        return {"pivot": self.pivot, "rows": fld_rows, "holds": self.holds}


def check_mobius_additivity(a: Arrangement, pivot: int) -> MobiusAdditivityReport:
    """Per-flat check |mu_A(F)| = |mu_A'(F)| + |mu_A''(F)|, flats absent
    from a sublattice contributing 0 and A''-flats compared after embedding."""
    lat = build_lattice(a)
    mu = mobius(lat)

    dlat = build_lattice(deletion(a, pivot))
    dmu = mobius(dlat)
    from_deletion = {f: abs(dmu[i]) for i, f in enumerate(dlat.flats)}

    sub, emb = restriction(a, pivot)
    rlat = build_lattice(sub)
    rmu = mobius(rlat)
    from_restriction: dict[Flat, int] = {}
    for i, f in enumerate(rlat.flats):
        pushed = flat_from_system(a.ambient_dim, embed_system(emb, f.system))
        from_restriction[pushed] = abs(rmu[i])

    rows = []
    all_ok = True
    for i, f in enumerate(lat.flats):
        d = from_deletion.get(f, 0)
        r = from_restriction.get(f, 0)
        ok = abs(mu[i]) == d + r
        all_ok = all_ok and ok
        rows.append(AdditivityRow(f, abs(mu[i]), d, r, ok))
    return MobiusAdditivityReport(pivot, tuple(rows), all_ok)
