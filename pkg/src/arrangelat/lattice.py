"""The intersection poset L(A) of flats, ordered by reverse inclusion, and
its Moebius function.

A flat is identified with the RREF of its augmented defining system (zero
rows stripped), which is a unique canonical form: two flats are equal iff
their systems are equal. The canonical order of flats in a lattice is
ascending codimension, then row-major lexicographic comparison of the RREF
entries; that order is a linear extension of the poset and gives stable
indices across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property

from .arrangement import Arrangement
from .exactalg import Matrix, reduce_against_rref, rowspace_contains, rref_insert

_EMPTY = object()  # inconsistent-system marker used during closure


@dataclass(frozen=True)
class Flat:
    """A nonempty affine subspace of C^n in canonical (RREF) form.

    support lists the indices of all arrangement hyperplanes containing the
    flat; it is bookkeeping relative to one arrangement and takes no part
    in equality or hashing.
    """

    ambient_dim: int
    system: Matrix
    support: tuple[int, ...] = field(default=(), compare=False)

    @property
    def codim(self) -> int:
        return self.system.nrows

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.system.nrows

    def sort_key(self):
        return (self.system.nrows, self.system.rows)

    def __repr__(self) -> str:
        return f"Flat(dim={self.dim}, system={self.system!r})"


def flat_from_system(ambient_dim: int, system: Matrix) -> Flat | None:
    """Canonical flat of a (possibly unreduced) system; None when empty."""
    red = system.rref().strip_zero_rows()
    for row in red.rows:
        if not any(row[:-1]) and row[-1]:
            return None
    return Flat(ambient_dim, red)


def ambient_flat(a: Arrangement) -> Flat:
    return Flat(a.ambient_dim, Matrix(a.field, [], a.ambient_dim + 1))


def hyperplane_flat(a: Arrangement, i: int) -> Flat:
    # a canonical hyperplane row is already its own RREF
    return Flat(a.ambient_dim, Matrix(a.field, [a.hyperplanes[i].row()]), support=(i,))


def intersect(f: Flat, g: Flat) -> Flat | None:
    """Canonical flat of the intersection, or None when it is empty."""
    if f.ambient_dim != g.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return flat_from_system(f.ambient_dim, f.system.stack(g.system))


def leq(f: Flat, g: Flat) -> bool:
    """Poset order F <= G, i.e. G is contained in F as a point set."""
    if f.ambient_dim != g.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return rowspace_contains(g.system, f.system)


def _insert_row(flat: Flat, row: tuple) -> Flat | None | object:
    """flat cut by one more equation: a new Flat, None (no change), or _EMPTY."""
    rows = rref_insert(flat.system.rows, row)
    if rows is None:
        return None
    for r in rows:
        if not any(r[:-1]) and r[-1]:
            return _EMPTY
    return Flat(flat.ambient_dim, Matrix(flat.system.field, rows, flat.system.ncols))


@dataclass(frozen=True)
class IntersectionLattice:
    """L(A): all nonempty intersections of hyperplanes, canonically ordered.

    leq[i][j] holds iff flats[i] <= flats[j] in the poset (reverse
    inclusion); bottom is the index of the ambient flat C^n.
    """

    ambient_dim: int
    flats: tuple[Flat, ...]
    leq: tuple[tuple[bool, ...], ...]
    bottom: int

    def __len__(self) -> int:
        return len(self.flats)

    @cached_property
    def _index(self) -> dict[Flat, int]:
        return {f: i for i, f in enumerate(self.flats)}

    def index_of(self, f: Flat) -> int:
        return self._index[f]

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Transitive reduction of leq as (lower, upper) index pairs."""
        n = len(self.flats)
        codim = [f.codim for f in self.flats]
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.leq[i][j]:
                    continue
                if any(
                    self.leq[i][k] and self.leq[k][j]
                    for k in range(n)
                    if codim[i] < codim[k] < codim[j]
                ):
                    continue
                out.append((i, j))
        return tuple(out)


def build_lattice(a: Arrangement) -> IntersectionLattice:
    """Enumerate L(A) by closing the hyperplane flats under intersection.

    Worklist closure: every flat is cut by every hyperplane until no new
    canonical system appears. The brute-force subset enumeration is kept in
    the test suite as the oracle for this procedure.
    """
    bottom = ambient_flat(a)
    rows = [h.row() for h in a.hyperplanes]
    seen: dict[Flat, None] = {bottom: None}
    queue = [bottom]
    while queue:
        flat = queue.pop()
        for row in rows:
            cut = _insert_row(flat, row)
            if cut is None or cut is _EMPTY:
                continue
            if cut not in seen:
                seen[cut] = None
                queue.append(cut)

    flats = []
    for flat in seen:
        support = tuple(
            i
            for i, row in enumerate(rows)
            if not any(reduce_against_rref(flat.system.rows, row))
        )
        flats.append(replace(flat, support=support))
    flats.sort(key=Flat.sort_key)

    # supports are maximal, so F = intersection of its support and the
    # poset order coincides with support containment
    supp = [frozenset(f.support) for f in flats]
    table = tuple(
        tuple(supp[i] <= supp[j] for j in range(len(flats))) for i in range(len(flats))
    )
    bottom_index = next(i for i, f in enumerate(flats) if f.codim == 0)
    return IntersectionLattice(a.ambient_dim, tuple(flats), table, bottom_index)


@dataclass(frozen=True)
class MobiusTable:
    """mu(F) = mu(C^n, F) for every flat, indexed like the lattice."""

    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


def mobius(l: IntersectionLattice) -> MobiusTable:
    """mu(bottom) = 1 and mu(G) = -sum of mu over flats strictly below G.

    The defining recursion sums over bottom <= K < G; canonical order is a
    linear extension, so one forward sweep suffices.
    """
    n = len(l.flats)
    mu = [0] * n
    mu[l.bottom] = 1
    for j in range(n):
        if j == l.bottom:
            continue
        mu[j] = -sum(mu[i] for i in range(n) if i != j and l.leq[i][j])
    return MobiusTable(tuple(mu))


def mobius_pair(l: IntersectionLattice, f: int, g: int) -> int:
    """mu(F, G) on the interval [F, G]; 0 unless F <= G, 1 when F = G."""
    memo: dict[int, int] = {}

    def mu(k: int) -> int:
        if k == f:
            return 1
        if k in memo:
            return memo[k]
        val = -sum(
            mu(i)
            for i in range(len(l.flats))
            if i != k and l.leq[f][i] and l.leq[i][k]
        )
        memo[k] = val
        return val

    if not l.leq[f][g]:
        return 0
    return mu(g)


def combinatorial_fingerprint(l: IntersectionLattice) -> frozenset:
    """The set of (support, dim) pairs; equal fingerprints over different
    fields mean combinatorially equal lattices."""
    return frozenset((f.support, f.dim) for f in l.flats)


def lattice_to_json(l: IntersectionLattice, mu: MobiusTable) -> dict:
    fld = l.flats[0].system.field
    return {
        "ambient_dim": l.ambient_dim,
        "bottom": l.bottom,
        "flats": [
            {
                "system": [[fld.format(x) for x in row] for row in f.system.rows],
                "dim": f.dim,
                "support": list(f.support),
                "mu": str(mu[i]),
            }
            for i, f in enumerate(l.flats)
        ],
        "covers": [list(c) for c in l.covers],
    }
