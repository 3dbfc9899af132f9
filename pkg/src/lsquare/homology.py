"""Exact reduced simplicial homology over the rationals or a prime field.

The engine works on bitmasks: a complex is handed over as a list of "member"
masks, each the vertex set of a simplex, whose union is the complex (the facet
list is always such a family).  Three strategies are used, cheapest first:

* cone shortcut: a vertex common to all members makes the complex acyclic;
* face enumeration: list every face, build sparse boundary matrices, and take
  exact ranks (integer fraction-free elimination over Q, bit-rows over GF(2));
* nerve reduction: when the face count would blow up but the member count is
  small, compute the homology of the nerve of the member family instead.  All
  nonempty intersections of simplexes on vertex subsets are simplexes, hence
  contractible, so the nerve has the same reduced homology.

Rank results are returned as dicts {dimension: rank} with keys running from -1
(the augmentation spot) up to the complex dimension.  The void complex (no
faces at all) gives {}, and the complex whose only face is the empty set gives
{-1: 1}.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import gcd


class ResourceLimit(RuntimeError):
    """A configurable resource cap was exceeded; `cap` names the knob."""

    def __init__(self, message: str, cap: str):
        super().__init__(message)
        self.cap = cap


@dataclass(frozen=True)
class HomologyLimits:
    """Caps and routing thresholds for homology computations.

    `max_faces` is the hard cap on enumerated faces; `enumeration_budget` is
    the face-count estimate up to which direct enumeration is always used
    (above it, the smaller of enumeration and nerve reduction is chosen).
    """

    max_faces: int = 1 << 22
    enumeration_budget: int = 512
    max_nerve_members: int = 40

    def __post_init__(self):
        if self.max_faces <= 0 or self.enumeration_budget <= 0:
            raise ValueError("resource caps must be positive")


DEFAULT_LIMITS = HomologyLimits()


@dataclass(frozen=True)
class RationalField:
    def __str__(self) -> str:
        return "rational"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
            raise ValueError(f"{self.p} is not prime")

    def __str__(self) -> str:
        return f"gf:{self.p}"


RATIONALS = RationalField()

Field = RationalField | PrimeField


def parse_field(spec: str) -> Field:
    s = spec.strip().lower()
    if s in ("rational", "rationals", "qq", "q"):
        return RATIONALS
    if s.startswith("gf:"):
        return PrimeField(int(s[3:]))
    raise ValueError(f"unknown field spec {spec!r} (use 'rational' or 'gf:p')")


# ---------------------------------------------------------------------------
# Sparse exact ranks.  Matrices arrive as lists of columns; rank is side
# agnostic, so columns are processed as if they were rows.
# ---------------------------------------------------------------------------


def rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                rank += 1
                break
            row ^= piv
    return rank


def rank_gfp(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {cc: (vv * inv) % p for cc, vv in row.items()}
                rank += 1
                break
            f = row[c]
            for cc, vv in piv.items():
                nv = (row.get(cc, 0) - f * vv) % p
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
    return rank


def rank_rational(rows: list[dict[int, int]]) -> int:
    """Exact rank over Q via integer rows: scaling a row never changes rank,
    so eliminations use a*row - b*pivot followed by gcd normalization."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    row = {cc: vv // g for cc, vv in row.items()}
                pivots[c] = row
                rank += 1
                break
            a = piv[c]
            b = row[c]
            if a == 1 or a == -1:
                f = b * a  # b/a, exact for unit pivots; no rescaling needed
                new = dict(row)
                for cc, vv in piv.items():
                    w = new.get(cc, 0) - f * vv
                    if w:
                        new[cc] = w
                    else:
                        new.pop(cc, None)
            else:
                new = {cc: a * vv for cc, vv in row.items()}
                for cc, vv in piv.items():
                    w = new.get(cc, 0) - b * vv
                    if w:
                        new[cc] = w
                    else:
                        new.pop(cc, None)
                if new:
                    g = 0
                    for v in new.values():
                        g = gcd(g, v)
                        if g == 1:
                            break
                    if g > 1:
                        new = {cc: vv // g for cc, vv in new.items()}
            row = new
    return rank


def matrix_rank(columns, field: Field) -> int:
    if isinstance(field, PrimeField):
        if field.p == 2 and columns and isinstance(columns[0], int):
            return rank_gf2(columns)
        if columns and isinstance(columns[0], int):
            raise TypeError("bit columns are only valid over GF(2)")
        return rank_gfp(columns, field.p)
    return rank_rational(columns)


# ---------------------------------------------------------------------------
# Faces and boundary matrices on bitmasks.
# ---------------------------------------------------------------------------


def estimated_face_count(members: list[int]) -> int:
    return sum(1 << m.bit_count() for m in members)


def enumerate_face_masks(members: list[int], max_faces: int) -> set[int]:
    """All submasks of all members (the faces of the union complex), deduplicated."""
    if estimated_face_count(members) > 64 * max_faces:
        raise ResourceLimit("face enumeration would exceed the face cap", "max-faces")
    faces: set[int] = set()
    for m in members:
        sub = m
        while True:
            faces.add(sub)
            if len(faces) > max_faces:
                raise ResourceLimit("face enumeration exceeded the face cap", "max-faces")
            if sub == 0:
                break
            sub = (sub - 1) & m
    return faces


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def ranks_from_face_masks(faces: set[int], field: Field) -> dict[int, int]:
    """Reduced homology ranks of a subset-closed face family (given as masks)."""
    if not faces:
        return {}
    by_dim: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_dim[f.bit_count() - 1].append(f)
    top = max(by_dim)
    counts = {d: len(by_dim[d]) for d in by_dim}
    index: dict[int, dict[int, int]] = {}
    for d, lst in by_dim.items():
        lst.sort()
        index[d] = {mask: k for k, mask in enumerate(lst)}

    gf2 = isinstance(field, PrimeField) and field.p == 2
    boundary_rank: dict[int, int] = {}
    for d in range(0, top + 1):
        if d not in by_dim or (d - 1) not in index:
            boundary_rank[d] = 0
            continue
        rows_below = index[d - 1]
        columns = []
        for mask in by_dim[d]:
            if gf2:
                col = 0
                for b in _bits(mask):
                    col |= 1 << rows_below[mask ^ (1 << b)]
                columns.append(col)
            else:
                col = {}
                for pos, b in enumerate(_bits(mask)):
                    col[rows_below[mask ^ (1 << b)]] = -1 if pos & 1 else 1
                columns.append(col)
        boundary_rank[d] = matrix_rank(columns, field)

    ranks = {}
    for d in range(-1, top + 1):
        n = counts.get(d, 0)
        ranks[d] = n - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
    return ranks


# ---------------------------------------------------------------------------
# The member-family engine.
# ---------------------------------------------------------------------------


def maximal_masks(members) -> list[int]:
    uniq = sorted({m for m in members if m})
    return [m for m in uniq if not any(m != o and m & o == m for o in uniq)]


def _nerve_face_masks(members: list[int], max_faces: int) -> set[int]:
    """Faces of the nerve of the member family, as index masks over members.

    A subfamily is a nerve face when its members share a vertex; the family is
    downward closed, so faces are grown level by level from their prefix with
    the top index removed.
    """
    k = len(members)
    faces: set[int] = {0}
    level = {}
    for i, m in enumerate(members):
        level[1 << i] = m
        faces.add(1 << i)
    while level:
        nxt = {}
        for fmask, inter in level.items():
            hi = fmask.bit_length() - 1
            for j in range(hi + 1, k):
                inter2 = inter & members[j]
                if inter2:
                    nxt[fmask | (1 << j)] = inter2
        faces.update(nxt)
        if len(faces) > max_faces:
            raise ResourceLimit("nerve enumeration exceeded the face cap", "max-faces")
        level = nxt
    return faces


def ranks_from_members(
    members,
    field: Field = RATIONALS,
    limits: HomologyLimits = DEFAULT_LIMITS,
    force: str | None = None,
) -> dict[int, int]:
    """Reduced homology ranks of the union of simplexes on the given vertex masks.

    `force` pins the strategy to "enumerate" or "nerve" (used by cross-checks);
    by default enumeration is used when the face-count estimate fits the
    budget and the nerve reduction otherwise.
    """
    members = list(members)
    if not members:
        return {}
    live = maximal_masks(members)
    if not live:
        return {-1: 1}
    dim = max(m.bit_count() for m in live) - 1

    common = live[0]
    for m in live[1:]:
        common &= m
    if common and force is None:
        return {d: 0 for d in range(-1, dim + 1)}

    if force is None:
        # route by size estimates: faces of the union vs faces of its nerve
        est_enum = estimated_face_count(live)
        est_nerve = 1 << len(live)
        if est_enum <= limits.enumeration_budget or est_enum <= est_nerve:
            mode = "enumerate"
        else:
            mode = "nerve"
    else:
        mode = force
    if mode == "enumerate":
        return ranks_from_face_masks(enumerate_face_masks(live, limits.max_faces), field)
    if mode != "nerve":
        raise ValueError(f"unknown strategy {mode!r}")
    if len(live) > limits.max_nerve_members:
        raise ResourceLimit(
            "complex too large: face enumeration over budget and too many "
            "facets for the nerve reduction",
            "max-nerve-members",
        )
    nerve_ranks = ranks_from_face_masks(_nerve_face_masks(live, limits.max_faces), field)
    out = {d: 0 for d in range(-1, dim + 1)}
    for d, r in nerve_ranks.items():
        if d <= dim:
            out[d] = r
        elif r:
            raise AssertionError("nerve has homology above the complex dimension")
    return out


def is_acyclic(ranks: dict[int, int]) -> bool:
    return all(r == 0 for r in ranks.values())


def connected_from_members(members) -> bool | None:
    """Connectivity of the union of simplexes; None when there are no vertices."""
    live = [m for m in members if m]
    if not live:
        return None
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in live:
        bits = _bits(m)
        for b in bits:
            parent.setdefault(b, b)
        root = find(bits[0])
        for b in bits[1:]:
            parent[find(b)] = root
    roots = {find(b) for b in parent}
    return len(roots) == 1
