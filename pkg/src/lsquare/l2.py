"""The pair complexes L2_q and L2(I), deletion bookkeeping, and face-count bounds.

L2_q lives on the vertex set of index pairs (i, j) with 1 <= i <= j <= q.  Its
facets are one "row" per index i (all pairs containing i) plus the set of all
off-diagonal pairs; for q <= 2 the off-diagonal set is swallowed by the rows.
Labeling pair (i, j) of L2_q with the product of generators i and j of a
square-free ideal I, and deleting every vertex whose product is a redundant
generator of the square, produces the induced subcomplex L2(I) whose surviving
labels are exactly the minimal generators of I^2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .complexes import SimplicialComplex, induced_subcomplex
from .homology import DEFAULT_LIMITS, Field, HomologyLimits, RATIONALS
from .labeled import LabeledComplex, betti_numbers
from .monomials import Monomial, MonomialIdeal


@dataclass(frozen=True)
class PairVertex:
    """An unordered index pair; construction normalizes to i <= j."""

    i: int
    j: int

    def __post_init__(self):
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)
        if self.i < 1:
            raise ValueError("pair indices are 1-based")

    @property
    def is_diagonal(self) -> bool:
        return self.i == self.j

    def __str__(self) -> str:
        return f"l({self.i},{self.j})"


def pairs_of(q: int) -> list[PairVertex]:
    """All pair vertices for q generators, in lexicographic order; the position
    of a pair in this list is its vertex id in every complex built here."""
    return [PairVertex(i, j) for i in range(1, q + 1) for j in range(i, q + 1)]


def pair_index(q: int, i: int, j: int) -> int:
    if not (1 <= i <= j <= q):
        i, j = min(i, j), max(i, j)
    if not (1 <= i <= j <= q):
        raise ValueError(f"pair ({i},{j}) out of range for q={q}")
    # pairs (1,1)..(1,q) come first, then (2,2)..(2,q), etc.
    return (i - 1) * q - (i - 1) * (i - 2) // 2 + (j - i)


def l2_skeleton(q: int) -> SimplicialComplex:
    """The pair complex on C(q+1,2) vertices: q row facets plus the off-diagonal facet."""
    if q < 1:
        raise ValueError("q must be >= 1")
    candidates = []
    for i in range(1, q + 1):
        candidates.append(
            frozenset(pair_index(q, i, j) for j in range(1, q + 1))
        )
    candidates.append(
        frozenset(
            pair_index(q, i, j)
            for i in range(1, q + 1)
            for j in range(i + 1, q + 1)
        )
    )
    # for q <= 2 the off-diagonal set is a face of a row, not a facet
    return SimplicialComplex.from_facets(c for c in candidates if c)


@dataclass(frozen=True)
class DeletionRecord:
    """Which pair vertices were deleted when specializing the skeleton to an ideal."""

    q: int
    deleted: frozenset[PairVertex]

    def __post_init__(self):
        for v in self.deleted:
            if v.is_diagonal:
                raise ValueError("diagonal pair vertices are never deleted")
            if v.j > self.q:
                raise ValueError(f"{v} out of range for q={self.q}")

    @property
    def s(self) -> int:
        """Number of surviving vertices = minimal generators of the square."""
        return comb(self.q + 1, 2) - len(self.deleted)

    @property
    def t(self) -> tuple[int, ...]:
        """t[i-1] counts deleted pairs containing index i; sums to 2x deletions."""
        counts = [0] * self.q
        for v in self.deleted:
            counts[v.i - 1] += 1
            counts[v.j - 1] += 1
        return tuple(counts)

    def to_json(self) -> dict:
        return {
            "deleted": sorted([v.i, v.j] for v in self.deleted),
            "s": self.s,
            "t": list(self.t),
        }

    @classmethod
    def from_json(cls, obj, q: int) -> "DeletionRecord":
        return cls(q, frozenset(PairVertex(i, j) for i, j in obj["deleted"]))


def _deletion_scan(gens: tuple[Monomial, ...]) -> set[tuple[int, int]]:
    """Redundant pair products.

    For index pairs {i,j} != {u,v}: if the products are equal, the pair holding
    the smallest of the four indices is deleted (that is the lexicographically
    smaller pair); if one product properly divides the other, the pair with the
    larger product is deleted.
    """
    q = len(gens)
    pairs = [(i, j) for i in range(1, q + 1) for j in range(i, q + 1)]
    product = {
        (i, j): gens[i - 1] * gens[j - 1] for (i, j) in pairs
    }
    deleted: set[tuple[int, int]] = set()
    for P, Q in itertools.combinations(pairs, 2):
        p, r = product[P], product[Q]
        if p == r:
            deleted.add(min(P, Q))
        elif p.divides(r):
            deleted.add(Q)
        elif r.divides(p):
            deleted.add(P)
    return deleted


def l2_of_ideal(ideal: MonomialIdeal) -> tuple[LabeledComplex, DeletionRecord]:
    """The labeled induced subcomplex of the skeleton specialized to a square-free ideal.

    Vertex (i, j) is labeled by the product of generators i and j; vertices
    carrying redundant products are deleted.  The surviving labels are checked
    against an independent minimalization of all pair products.
    """
    for g in ideal.gens:
        if not g.is_squarefree():
            raise ValueError(f"generator {g} is not square-free")
    q = ideal.q
    deleted_pairs = _deletion_scan(ideal.gens)
    for i, j in deleted_pairs:
        if i == j:
            raise AssertionError("a diagonal product compared equal or divisible")
    record = DeletionRecord(q, frozenset(PairVertex(i, j) for i, j in deleted_pairs))

    skeleton = l2_skeleton(q)
    pairs = pairs_of(q)
    survivors = {
        k for k, v in enumerate(pairs) if (v.i, v.j) not in deleted_pairs
    }
    sub = induced_subcomplex(skeleton, survivors, warn_unknown=False)
    labels = {
        k: ideal.gens[pairs[k].i - 1] * ideal.gens[pairs[k].j - 1]
        for k in survivors
    }
    lab = LabeledComplex(sub, labels, ideal.table)

    square = ideal.power(2)
    if set(labels.values()) != set(square.gens) or len(labels) != len(square.gens):
        raise AssertionError(
            "surviving labels disagree with the minimal generators of the square"
        )
    return lab, record


# ---------------------------------------------------------------------------
# Face-count bounds.
# ---------------------------------------------------------------------------


def _comb0(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def skeleton_face_bound(q: int, d: int) -> int:
    """d-face count of the skeleton: C(q(q-1)/2, d+1) + q*C(q-1, d)."""
    return _comb0(q * (q - 1) // 2, d + 1) + q * _comb0(q - 1, d)


def deletion_face_bound(record: DeletionRecord, d: int) -> int:
    """d-face count of the specialized complex: C(s-q, d+1) + sum_i C(q-1-t_i, d).

    Faces without a diagonal vertex are arbitrary sets of surviving off-diagonal
    pairs; faces with the diagonal vertex of index i extend it by surviving
    pairs in row i.
    """
    return _comb0(record.s - record.q, d + 1) + sum(
        _comb0(record.q - 1 - ti, d) for ti in record.t
    )


def taylor_face_bound(vertices: int, d: int) -> int:
    """d-face count of a simplex on the given number of vertices."""
    if vertices < 1:
        raise ValueError("vertex count must be >= 1")
    return _comb0(vertices, d + 1)


@dataclass
class BoundTable:
    """Comparison of Betti-number bounds for the square of an ideal, by degree."""

    q: int
    s: int
    t: tuple[int, ...]
    max_d: int
    rows: list[tuple[str, list[int]]]

    def row(self, name: str) -> list[int]:
        for label, values in self.rows:
            if label == name:
                return values
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "s": self.s,
            "t": list(self.t),
            "d": list(range(self.max_d + 1)),
            "rows": {label: values for label, values in self.rows},
        }


def bound_table(
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    include_exact: bool = True,
    max_d: int | None = None,
    limits: HomologyLimits = DEFAULT_LIMITS,
) -> BoundTable:
    """Taylor bounds, skeleton bound, deletion-refined bound and (optionally)
    the exact Betti numbers of the square, tabulated for d = 0..max_d."""
    lab, record = l2_of_ideal(ideal)
    q = ideal.q
    if max_d is None:
        max_d = max(q * (q - 1) // 2 - 1, q - 1) + 1
    ds = range(max_d + 1)
    rows: list[tuple[str, list[int]]] = [
        ("taylor-largest", [taylor_face_bound(q * (q + 1) // 2, d) for d in ds]),
        ("taylor", [taylor_face_bound(record.s, d) for d in ds]),
        ("skeleton", [skeleton_face_bound(q, d) for d in ds]),
        ("complex", [deletion_face_bound(record, d) for d in ds]),
    ]
    if include_exact:
        table = betti_numbers(lab, ideal.power(2), field, check=True, limits=limits)
        rows.append(("betti", table.as_vector(max_d)))
    return BoundTable(q, record.s, record.t, max_d, rows)
