"""Affine hyperplane arrangements: data model, JSON format, built-in families,
and the deletion/restriction constructors.

A hyperplane is the locus normal.x = offset, stored canonically so that the
first nonzero entry of the normal is 1. Restriction fixes an explicit chart
on the pivot hyperplane (an Embedding) so that restricted arrangements live
in concrete coordinates and flats can be pushed back into the ambient space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .exactalg import QQ, Matrix, RATIONAL_RE, _lead, rref

JSON_DUMP_ARGS = dict(sort_keys=True, indent=2)


class ArrangementError(ValueError):
    """Invalid arrangement input: bad JSON, zero normals, duplicates, bad dims."""


@dataclass(frozen=True)
class Hyperplane:
    """The locus normal.x = offset; normal's first nonzero entry is 1."""

    normal: tuple
    offset: object

    def __post_init__(self):
        lead = _lead(self.normal)
        if lead is None:
            raise ArrangementError("hyperplane normal is the zero vector")
        lv = self.normal[lead]
        if lv != lv / lv:
            object.__setattr__(self, "normal", tuple(x / lv for x in self.normal))
            object.__setattr__(self, "offset", self.offset / lv)

    def row(self) -> tuple:
        """Augmented row (normal..., offset) of the defining equation."""
        return self.normal + (self.offset,)


@dataclass(frozen=True)
class Arrangement:
    """A finite list of pairwise-distinct hyperplanes in C^ambient_dim.

    ambient_dim 0 is permitted only for the (necessarily empty) arrangement
    produced by restricting a one-dimensional arrangement; user-facing input
    always has ambient_dim >= 1.
    """

    ambient_dim: int
    hyperplanes: tuple[Hyperplane, ...]
    field: object = QQ

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ArrangementError("ambient dimension must be nonnegative")
        seen: dict[Hyperplane, int] = {}
        for i, h in enumerate(self.hyperplanes):
            if len(h.normal) != self.ambient_dim:
                raise ArrangementError(
                    f"hyperplane {i} has {len(h.normal)} coordinates, expected {self.ambient_dim}"
                )
            if h in seen:
                raise ArrangementError(
                    f"duplicate hyperplane after canonicalization: indices {seen[h]} and {i}"
                )
            seen[h] = i

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "hyperplanes": [
                {
                    "normal": [self.field.format(x) for x in h.normal],
                    "offset": self.field.format(h.offset),
                }
                for h in self.hyperplanes
            ],
        }


@dataclass(frozen=True)
class Embedding:
    """Chart of a hyperplane H0 in C^n: H0 = {base_point + basis.y}.

    basis is n x (n-1) with linearly independent columns; base_point lies
    on H0.
    """

    base_point: tuple
    basis: Matrix

    @cached_property
    def _chart(self) -> tuple[tuple, tuple]:
        """(left inverse rows L with L.basis = I, augmented rows cutting out H0).

        Both come from one RREF of [basis | I_n]: rows of the transform T
        with T.basis = [I; 0] split into the left inverse (top) and the
        left-null rows t (bottom), and each t gives the H0 equation
        t.x = t.base_point.
        """
        f = self.basis.field
        n, k = self.basis.nrows, self.basis.ncols
        ident = Matrix.identity(f, n)
        aug = Matrix(f, [self.basis.rows[i] + ident.rows[i] for i in range(n)], k + n)
        red = rref(aug).rows
        left_inverse = tuple(r[k:] for r in red[:k])
        h0_rows = []
        for r in red[k:]:
            t = r[k:]
            rhs = sum((a * b for a, b in zip(t, self.base_point)), f.zero)
            h0_rows.append(t + (rhs,))
        return left_inverse, tuple(h0_rows)

    def push_row(self, row: tuple) -> tuple:
        """Rewrite one augmented row (m | c) from chart coordinates to ambient ones."""
        f = self.basis.field
        left_inverse, _ = self._chart
        m, c = row[:-1], row[-1]
        coeffs = tuple(
            sum((mi * li[j] for mi, li in zip(m, left_inverse)), f.zero)
            for j in range(self.basis.nrows)
        )
        rhs = c + sum((a * b for a, b in zip(coeffs, self.base_point)), f.zero)
        return coeffs + (rhs,)


def parse(text: bytes | str) -> Arrangement:
    """Parse the JSON arrangement format into a canonicalized Arrangement."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ArrangementError(f"malformed JSON: {e}") from e
    if not isinstance(data, dict):
        raise ArrangementError("top-level JSON value must be an object")
    try:
        n = data["ambient_dim"]
        raw = data["hyperplanes"]
    except KeyError as e:
        raise ArrangementError(f"missing key {e}") from e
    if not isinstance(n, int) or n < 1:
        raise ArrangementError("ambient_dim must be a positive integer")
    if not isinstance(raw, list):
        raise ArrangementError("hyperplanes must be a list")
    hps = []
    for i, item in enumerate(raw):
        try:
            normal = item["normal"]
            offset = item["offset"]
        except (TypeError, KeyError) as e:
            raise ArrangementError(f"hyperplane {i}: missing field {e}") from e
        if not isinstance(normal, list) or len(normal) != n:
            raise ArrangementError(
                f"hyperplane {i}: normal has {len(normal) if isinstance(normal, list) else '?'} "
                f"coordinates, expected {n}"
            )
        try:
            coords = tuple(QQ.parse(s) for s in normal)
            off = QQ.parse(offset)
        except (ValueError, TypeError) as e:
            raise ArrangementError(f"hyperplane {i}: {e}") from e
        hps.append(Hyperplane(coords, off))
    return Arrangement(n, tuple(hps))


def serialize(a: Arrangement) -> bytes:
    """JSON bytes; parse(serialize(a)) == a, bit-exact."""
    return (json.dumps(a.to_json(), **JSON_DUMP_ARGS) + "\n").encode("utf-8")


def builtin(family: str, n: int | None = None, m: int | None = None) -> Arrangement:
    """Built-in families: braid(n), boolean(n), generic(n, m).

    braid(n) is {x_i = x_j : i < j}; boolean(n) is {x_i = 0}; generic(n, m)
    takes m hyperplanes on the moment curve, normal (1, i, ..., i^(n-1)) and
    offset i^n, whose Vandermonde minors guarantee general position.
    """
    if family == "braid":
        if n is None or n < 1:
            raise ArrangementError("braid family needs n >= 1")
        hps = []
        for i in range(n):
            for j in range(i + 1, n):
                normal = [QQ.zero] * n
                normal[i] = QQ.one
                normal[j] = -QQ.one
                hps.append(Hyperplane(tuple(normal), QQ.zero))
        return Arrangement(n, tuple(hps))
    if family == "boolean":
        if n is None or n < 1:
            raise ArrangementError("boolean family needs n >= 1")
        hps = []
        for i in range(n):
            normal = [QQ.zero] * n
            normal[i] = QQ.one
            hps.append(Hyperplane(tuple(normal), QQ.zero))
        return Arrangement(n, tuple(hps))
    if family == "generic":
        if n is None or n < 1 or m is None or m < 0:
            raise ArrangementError("generic family needs n >= 1 and m >= 0")
        hps = []
        for i in range(1, m + 1):
            normal = tuple(QQ(i) ** k for k in range(n))
            hps.append(Hyperplane(normal, QQ(i) ** n))
        return Arrangement(n, tuple(hps))
    raise ArrangementError(f"unknown family: {family!r}")


def deletion(a: Arrangement, pivot: int) -> Arrangement:
    """A' = A - H_pivot, order otherwise preserved."""
    if not 0 <= pivot < len(a.hyperplanes):
        raise IndexError(f"pivot {pivot} out of range for {len(a.hyperplanes)} hyperplanes")
    hps = a.hyperplanes[:pivot] + a.hyperplanes[pivot + 1 :]
    return Arrangement(a.ambient_dim, hps, a.field)


def _chart_of(h: Hyperplane, n: int, field) -> Embedding:
    # H0 in RREF form has its pivot at the first nonzero coordinate; base
    # point solves the equation with minimal support (lexicographic
    # preference), basis vectors are the kernel basis in free-column order.
    j0 = _lead(h.normal)
    base = [field.zero] * n
    base[j0] = h.offset
    free = [c for c in range(n) if c != j0]
    cols = []
    for c in free:
        v = [field.zero] * n
        v[c] = field.one
        v[j0] = -h.normal[c]
        cols.append(v)
    basis = Matrix(field, [[col[r] for col in cols] for r in range(n)], n - 1)
    return Embedding(tuple(base), basis)


def restriction(a: Arrangement, pivot: int) -> tuple[Arrangement, Embedding]:
    """A'' = the arrangement induced on H_pivot, in chart coordinates.

    Substitutes the chart into every other hyperplane's equation; equations
    that become trivial (H contains H0) or inconsistent (H parallel to H0)
    are dropped, and coincident traces are deduplicated, first occurrence
    winning.
    """
    if a.ambient_dim == 0:
        raise ArrangementError("cannot restrict in ambient dimension 0")
    if not 0 <= pivot < len(a.hyperplanes):
        raise IndexError(f"pivot {pivot} out of range for {len(a.hyperplanes)} hyperplanes")
    n = a.ambient_dim
    f = a.field
    emb = _chart_of(a.hyperplanes[pivot], n, f)
    out: list[Hyperplane] = []
    for i, h in enumerate(a.hyperplanes):
        if i == pivot:
            continue
        coeffs = tuple(
            sum((h.normal[r] * emb.basis.rows[r][k] for r in range(n)), f.zero)
            for k in range(n - 1)
        )
        rhs = h.offset - sum((a_ * b for a_, b in zip(h.normal, emb.base_point)), f.zero)
        if not any(coeffs):
            continue  # trivial (H contains H0) or parallel (empty trace)
        trace = Hyperplane(coeffs, rhs)
        if trace not in out:
            out.append(trace)
    return Arrangement(n - 1, tuple(out), f), emb


def embed_system(e: Embedding, system: Matrix) -> Matrix:
    """Push an augmented defining system from chart coordinates into C^n.

    Adjoins H0's own equations and rewrites each chart-coordinate equation
    in ambient coordinates; the result is in RREF with zero rows stripped.
    """
    if system.ncols != e.basis.ncols + 1:
        raise ValueError(
            f"dimension mismatch: system has {system.ncols} columns, "
            f"chart coordinates need {e.basis.ncols + 1}"
        )
    _, h0_rows = e._chart
    rows = list(h0_rows) + [e.push_row(r) for r in system.rows]
    return Matrix(e.basis.field, rows, e.basis.nrows + 1).rref().strip_zero_rows()
