"""Facet-presented simplicial complexes over integer vertex ids.

A complex is stored by its facets (maximal faces).  Two degenerate complexes
are distinguished: the void complex, with no faces at all (empty facet tuple),
and the empty complex {()}, whose only face is the empty set (a single empty
facet).  Both have no vertices, but they differ in reduced homology at -1.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import homology as hml
from .homology import DEFAULT_LIMITS, Field, HomologyLimits, RATIONALS

Face = frozenset  # a face is a frozenset of vertex ids; dim(F) = len(F) - 1


def _maximalize(faces: Iterable[frozenset]) -> tuple[frozenset, ...]:
    uniq = set(map(frozenset, faces))
    keep = [f for f in uniq if not any(f < g for g in uniq)]
    keep.sort(key=lambda f: tuple(sorted(f)))
    return tuple(keep)


@dataclass(frozen=True)
class SimplicialComplex:
    facets: tuple[frozenset, ...]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(_maximalize(frozenset(f) for f in facets))

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(map(frozenset, self.facets)))

    @cached_property
    def vertices(self) -> frozenset:
        out: set = set()
        for f in self.facets:
            out |= f
        return frozenset(out)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        """No vertices (covers both the void complex and the empty complex)."""
        return not self.vertices

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    @cached_property
    def _vertex_order(self) -> dict[int, int]:
        return {v: k for k, v in enumerate(sorted(self.vertices))}

    def mask_of(self, face: Iterable[int]) -> int:
        order = self._vertex_order
        m = 0
        for v in face:
            m |= 1 << order[v]
        return m

    def unmask(self, mask: int) -> frozenset:
        verts = sorted(self.vertices)
        return frozenset(verts[b] for b in hml._bits(mask))

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(self.mask_of(f) for f in self.facets)

    def __contains__(self, face: Iterable[int]) -> bool:
        f = frozenset(face)
        return any(f <= g for g in self.facets)

    def __str__(self) -> str:
        if self.is_void:
            return "<void complex>"
        inner = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"<{inner}>"


def faces_by_dim(
    delta: SimplicialComplex, limits: HomologyLimits = DEFAULT_LIMITS
) -> dict[int, list[frozenset]]:
    """Every face grouped by dimension; the empty face sits at dimension -1."""
    if delta.is_void:
        return {}
    masks = hml.enumerate_face_masks(list(delta.facet_masks) or [0], limits.max_faces)
    out: dict[int, list[frozenset]] = {}
    for m in masks:
        out.setdefault(m.bit_count() - 1, []).append(delta.unmask(m))
    for lst in out.values():
        lst.sort(key=lambda f: tuple(sorted(f)))
    return out


def f_vector(
    delta: SimplicialComplex, limits: HomologyLimits = DEFAULT_LIMITS
) -> tuple[int, ...]:
    """Face counts by dimension, starting at dimension 0."""
    if delta.is_empty:
        return ()
    masks = hml.enumerate_face_masks(list(delta.facet_masks), limits.max_faces)
    counts = [0] * (delta.dim + 1)
    for m in masks:
        if m:
            counts[m.bit_count() - 1] += 1
    return tuple(counts)


def induced_subcomplex(
    delta: SimplicialComplex, keep: Iterable[int], warn_unknown: bool = True
) -> SimplicialComplex:
    """Faces contained in `keep`, re-maximalized.  Unknown ids are ignored."""
    keep = frozenset(keep)
    unknown = keep - delta.vertices
    if unknown and warn_unknown:
        warnings.warn(
            f"{len(unknown)} vertex id(s) not in the complex were ignored",
            stacklevel=2,
        )
    if delta.is_void:
        return delta
    return SimplicialComplex.from_facets(f & keep for f in delta.facets)


def delete_vertex(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    if v not in delta.vertices:
        raise ValueError(f"vertex {v} is not in the complex")
    return induced_subcomplex(delta, delta.vertices - {v}, warn_unknown=False)


def is_connected(delta: SimplicialComplex) -> bool:
    """Graph connectivity of the 1-skeleton; raises on a complex with no vertices."""
    result = hml.connected_from_members(delta.facet_masks)
    if result is None:
        raise ValueError("connectivity is undefined for a complex with no vertices")
    return result


def empty_or_connected(delta: SimplicialComplex) -> bool:
    return delta.is_empty or is_connected(delta)


def reduced_homology_ranks(
    delta: SimplicialComplex,
    field: Field = RATIONALS,
    limits: HomologyLimits = DEFAULT_LIMITS,
    force: str | None = None,
) -> dict[int, int]:
    """Reduced homology ranks {dim: rank}; see the homology module for conventions."""
    if delta.is_void:
        return {}
    if delta.is_empty:
        return {-1: 1}
    return hml.ranks_from_members(delta.facet_masks, field, limits, force)


# ---------------------------------------------------------------------------
# Leaves, joints, quasi-forest orders.
# ---------------------------------------------------------------------------


def leaf_joint(delta: SimplicialComplex, facet: Iterable[int]) -> frozenset | None:
    """A facet G witnessing that `facet` is a leaf, or None.

    With a single facet there is no joint; `is_leaf` treats that case as a leaf.
    """
    f = frozenset(facet)
    others = [g for g in delta.facets if g != f]
    if f not in delta.facets or not others:
        return None
    hull: set = set()
    for h in others:
        hull |= f & h
    for g in others:
        if hull <= g:
            return g
    return None


def is_leaf(delta: SimplicialComplex, facet: Iterable[int]) -> bool:
    f = frozenset(facet)
    if f not in delta.facets:
        return False
    if len(delta.facets) == 1:
        return True
    return leaf_joint(delta, f) is not None


def find_leaf(delta: SimplicialComplex) -> tuple[frozenset, frozenset | None] | None:
    """Some leaf facet with a witnessing joint (None when it is the only facet)."""
    if delta.is_empty:
        raise ValueError("the complex has no vertices, hence no leaf")
    if len(delta.facets) == 1:
        return delta.facets[0], None
    for f in sorted(delta.facets, key=lambda f: (len(f), tuple(sorted(f)))):
        g = leaf_joint(delta, f)
        if g is not None:
            return f, g
    return None


def _is_leaf_of(facets: Sequence[frozenset], f: frozenset) -> bool:
    others = [h for h in facets if h != f]
    if not others:
        return True
    hull: set = set()
    for h in others:
        hull |= f & h
    return any(hull <= g for g in others)


def verify_leaf_order(order: Sequence[frozenset]) -> bool:
    """Each facet must be a leaf of the complex spanned by it and its predecessors."""
    for k in range(len(order)):
        if not _is_leaf_of(order[: k + 1], order[k]):
            return False
    return True


def _greedy_order(facets: list[frozenset]) -> list[frozenset] | None:
    remaining = list(facets)
    tail: list[frozenset] = []
    while remaining:
        pick = None
        for f in sorted(remaining, key=lambda f: (len(f), tuple(sorted(f)))):
            if _is_leaf_of(remaining, f):
                pick = f
                break
        if pick is None:
            return None
        remaining.remove(pick)
        tail.append(pick)
    return tail[::-1]


def _backtrack_order(facets: list[frozenset]) -> list[frozenset] | None:
    n = len(facets)
    memo: dict[frozenset, tuple[int, ...] | None] = {}

    def solve(alive: frozenset) -> tuple[int, ...] | None:
        if len(alive) <= 1:
            return tuple(alive)
        if alive in memo:
            return memo[alive]
        current = [facets[i] for i in sorted(alive)]
        result = None
        for i in sorted(alive):
            if _is_leaf_of(current, facets[i]):
                sub = solve(alive - {i})
                if sub is not None:
                    result = sub + (i,)
                    break
        memo[alive] = result
        return result

    order = solve(frozenset(range(n)))
    if order is None:
        return None
    return [facets[i] for i in order]


def quasi_forest_order(
    delta: SimplicialComplex,
    method: str = "auto",
    backtrack_limit: int = 16,
) -> list[frozenset] | None:
    """A facet order F_0..F_k with each F_i a leaf of <F_0..F_i>, or None.

    The greedy search repeatedly removes any leaf of the remaining facets; on
    failure an exhaustive backtracking pass runs when the facet count is within
    `backtrack_limit` (method="auto").  Orders are re-verified before return.
    """
    facets = [f for f in delta.facets if f]
    if not facets:
        return []
    if method == "greedy":
        order = _greedy_order(facets)
    elif method == "backtrack":
        order = _backtrack_order(facets)
    elif method == "auto":
        order = _greedy_order(facets)
        if order is None and len(facets) <= backtrack_limit:
            order = _backtrack_order(facets)
    else:
        raise ValueError(f"unknown method {method!r}")
    if order is not None and not verify_leaf_order(order):
        raise AssertionError("search produced an invalid leaf order")
    return order


# ---------------------------------------------------------------------------
# JSON serialization: {"vertices": [...], "facets": [[...]], "labels": {...}}.
# ---------------------------------------------------------------------------


def complex_to_json(
    delta: SimplicialComplex, labels: Mapping[int, str] | None = None
) -> dict:
    obj: dict = {
        "vertices": sorted(delta.vertices),
        "facets": [sorted(f) for f in delta.facets],
    }
    if labels is not None:
        obj["labels"] = {str(v): labels[v] for v in sorted(labels)}
    return obj


def complex_from_json(obj: Mapping) -> tuple[SimplicialComplex, dict[int, str] | None]:
    facets = [frozenset(map(int, f)) for f in obj["facets"]]
    delta = SimplicialComplex.from_facets(facets)
    declared = frozenset(map(int, obj.get("vertices", ())))
    missing = declared - delta.vertices
    if missing:
        # isolated vertices are singleton facets
        delta = SimplicialComplex.from_facets(
            list(delta.facets) + [frozenset([v]) for v in missing]
        )
    labels = None
    if "labels" in obj and obj["labels"] is not None:
        labels = {int(k): str(v) for k, v in obj["labels"].items()}
    return delta, labels
