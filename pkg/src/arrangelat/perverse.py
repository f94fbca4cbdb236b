"""Grothendieck-group decomposition of the direct image of the constant
sheaf on the arrangement complement.

The class is a formal sum over flats, one symbol per flat F with
multiplicity |mu(F)|; the factor attached to F is the shifted constant
sheaf on F, recorded here only through its label. Two independent
algorithms produce the class: directly from the Moebius table, and by the
deletion-restriction recursion, which never consults the lattice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .arrangement import Arrangement, JSON_DUMP_ARGS, deletion, embed_system, restriction
from .invariants import poincare_from
from .lattice import Flat, ambient_flat, build_lattice, flat_from_system, hyperplane_flat, mobius


class GrothendieckClass:
    """Formal nonnegative-integer combination of flats, read as
    sum of multiplicity * [N_F]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Flat, int] | Iterable[tuple[Flat, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Flat, int] = {}
        for flat, mult in items:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if mult:
                acc[flat] = acc.get(flat, 0) + mult
        self._terms = acc

    def multiplicity(self, flat: Flat) -> int:
        return self._terms.get(flat, 0)

    @property
    def total(self) -> int:
        return sum(self._terms.values())

    def items_canonical(self) -> list[tuple[Flat, int]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __add__(self, other: "GrothendieckClass") -> "GrothendieckClass":
        out = dict(self._terms)
        for flat, mult in other._terms.items():
            out[flat] = out.get(flat, 0) + mult
        return GrothendieckClass(out)

    def __sub__(self, other: "GrothendieckClass") -> "GrothendieckClass":
        out = dict(self._terms)
        for flat, mult in other._terms.items():
            out[flat] = out.get(flat, 0) - mult  # constructor rejects negatives
        return GrothendieckClass(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, GrothendieckClass) and self._terms == other._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"dim {f.dim}: {m}" for f, m in self.items_canonical())
        return f"GrothendieckClass({{{body}}})"


def decompose_direct(a: Arrangement) -> GrothendieckClass:
    """One term |mu(F)| * [N_F] per lattice flat."""
    lat = build_lattice(a)
    mu = mobius(lat)
    return GrothendieckClass((f, abs(mu[i])) for i, f in enumerate(lat.flats))


def reduced_class(a: Arrangement) -> GrothendieckClass:
    """The direct decomposition minus one copy of the ambient term."""
    cls = decompose_direct(a)
    bottom = ambient_flat(a)
    if cls.multiplicity(bottom) != 1:
        raise RuntimeError("ambient flat should appear with multiplicity exactly 1")
    return cls - GrothendieckClass({bottom: 1})


def _push_class(emb, cls: GrothendieckClass, ambient_dim: int) -> GrothendieckClass:
    out = []
    for flat, mult in cls._terms.items():
        pushed = flat_from_system(ambient_dim, embed_system(emb, flat.system))
        out.append((pushed, mult))
    return GrothendieckClass(out)


def decompose_recursive(
    a: Arrangement, choose_pivot: Callable[[Arrangement], int] | None = None
) -> GrothendieckClass:
    """Deletion-restriction recursion for the class, no Moebius values used.

    The reduced class satisfies Q(empty) = 0 and, for any pivot H0,
    Q(A) = [N_H0] + Q(A') + push(Q(A'')); the full class adds [N_X]. The
    result must be independent of the pivot choice; choose_pivot defaults
    to the first hyperplane in stored order.
    """
    chooser = choose_pivot or (lambda arr: 0)
    memo: dict[Arrangement, GrothendieckClass] = {}

    def q(arr: Arrangement) -> GrothendieckClass:
        if not arr.hyperplanes:
            return GrothendieckClass()
        got = memo.get(arr)
        if got is not None:
            return got
        k = chooser(arr)
        sub, emb = restriction(arr, k)
        out = GrothendieckClass({hyperplane_flat(arr, k): 1})
        out = out + q(deletion(arr, k))
        out = out + _push_class(emb, q(sub), arr.ambient_dim)
        memo[arr] = out
        return out

    return GrothendieckClass({ambient_flat(a): 1}) + q(a)


def dual_class(c: GrothendieckClass) -> GrothendieckClass:
    """Verdier duality fixes every factor [N_F], so the class of the
    extension by zero equals the class of the direct image: the identity."""
    return c


@dataclass(frozen=True)
class FactorDescriptor:
    """One decomposition factor: the flat, its multiplicity |mu(F)|, and the
    two presentations of N_F as display labels."""

    flat: Flat
    dim: int
    multiplicity: int
    label_star: str
    label_shriek: str


def factor_table(a: Arrangement) -> list[FactorDescriptor]:
    lat = build_lattice(a)
    mu = mobius(lat)
    n = a.ambient_dim
    out = []
    for i, f in enumerate(lat.flats):
        out.append(
            FactorDescriptor(
                flat=f,
                dim=f.dim,
                multiplicity=abs(mu[i]),
                label_star=f"i_*C_F[{f.dim}]",
                label_shriek=f"i_*i^!C_X[{2 * n - f.dim}]",
            )
        )
    return out


def _flat_name(f: Flat) -> str:
    if f.codim == 0:
        return f"C^{f.ambient_dim}"
    return f"codim-{f.codim} flat"


def report(a: Arrangement, format: str = "json", method: str = "direct") -> bytes:
    """Human- and machine-readable decomposition report.

    format is "json" (stable, key-sorted) or "text". method selects which
    algorithm produced the multiplicities shown; the factors themselves are
    always listed in canonical flat order.
    """
    if format not in ("json", "text"):
        raise ValueError(f"unknown format: {format!r}")
    if method not in ("direct", "recursive"):
        raise ValueError(f"unknown method: {method!r}")

    lat = build_lattice(a)
    mu = mobius(lat)
    pi = poincare_from(lat, mu)
    factors = factor_table(a)
    if method == "recursive":
        cls = decompose_recursive(a)
        factors = [
            FactorDescriptor(f.flat, f.dim, cls.multiplicity(f.flat), f.label_star, f.label_shriek)
            for f in factors
        ]
    total = sum(f.multiplicity for f in factors)

    if format == "json":
        fld = a.field
        doc = {
            "arrangement": a.to_json(),
            "poincare": pi.to_json(),
            "length": str(total),
            "factors": [
                {
                    "flat_system": [
                        [fld.format(x) for x in row] for row in f.flat.system.rows
                    ],
                    "dim": f.dim,
                    "multiplicity": f.multiplicity,
                    "label_star": f.label_star,
                    "label_shriek": f.label_shriek,
                }
                for f in factors
            ],
        }
        return (json.dumps(doc, **JSON_DUMP_ARGS) + "\n").encode("utf-8")

    lines = [
        f"arrangement: {len(a.hyperplanes)} hyperplanes in C^{a.ambient_dim}",
        f"poincare polynomial: {pi}",
        "factors:",
    ]
    for i, f in enumerate(factors):
        support = ",".join(str(s) for s in f.flat.support)
        lines.append(
            f"  F{i}  {_flat_name(f.flat)}  dim={f.dim}  support={{{support}}}  "
            f"multiplicity={f.multiplicity}  {f.label_star} = {f.label_shriek}"
        )
    lines.append(f"total length {total}")
    return ("\n".join(lines) + "\n").encode("utf-8")
