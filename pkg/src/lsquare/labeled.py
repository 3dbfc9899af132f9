"""Monomial-labeled complexes, support criteria, and the exact Betti oracle.

A labeled complex carries one monomial per vertex; a face is labeled by the
lcm of its vertex labels.  Such a complex "supports a free resolution" of a
monomial ideal exactly when, for every multidegree m in the lcm lattice, the
subcomplex induced on the vertices whose labels divide m is empty or acyclic.
For quasi-forests the acyclicity can be replaced by mere connectivity, which
gives a second, independent route to the same verdict.

The multigraded Betti numbers of the ideal are then read off the supported
complex: beta_{d,m} is the reduced homology rank in dimension d-1 of the
subcomplex of faces whose label strictly divides m.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from . import complexes as cx
from . import homology as hml
from .complexes import SimplicialComplex
from .homology import DEFAULT_LIMITS, Field, HomologyLimits, RATIONALS, ResourceLimit
from .monomials import Monomial, MonomialIdeal, VariableTable, lcm_lattice


class NotQuasiForest(ValueError):
    """The connectivity criterion only applies to quasi-forests."""


class UnsupportedComplex(ValueError):
    """The complex fails the support criterion; carries the witness."""

    def __init__(self, witness: Monomial, witness_dim: int | None):
        where = f" (homology in dimension {witness_dim})" if witness_dim is not None else ""
        super().__init__(f"complex does not support a resolution: witness {witness}{where}")
        self.witness = witness
        self.witness_dim = witness_dim


@dataclass(frozen=True, eq=True)
class LabeledComplex:
    complex: SimplicialComplex
    labels: Mapping[int, Monomial]
    table: VariableTable

    def __post_init__(self):
        labels = dict(self.labels)
        object.__setattr__(self, "labels", MappingProxyType(labels))
        missing = self.complex.vertices - labels.keys()
        if missing:
            raise ValueError(f"unlabeled vertices: {sorted(missing)}")
        for m in labels.values():
            if m.table != self.table:
                raise ValueError("label over a different variable table")

    def face_label(self, face: Iterable[int]) -> Monomial:
        m = self.table.one()
        for v in face:
            m = m.lcm(self.labels[v])
        return m

    def top_label(self) -> Monomial:
        return self.face_label(self.complex.vertices)

    # vertex order, exponent rows and facet masks used by the fast paths
    @property
    def _view(self):
        view = getattr(self, "_view_cache", None)
        if view is None:
            verts = sorted(self.complex.vertices)
            view = (
                verts,
                [self.labels[v].exponents for v in verts],
                list(self.complex.facet_masks),
            )
            object.__setattr__(self, "_view_cache", view)
        return view

    def _divisor_mask(self, m: Monomial) -> int:
        _verts, exps, _facets = self._view
        target = m.exponents
        mask = 0
        for k, e in enumerate(exps):
            if all(a <= b for a, b in zip(e, target)):
                mask |= 1 << k
        return mask

    def _strict_members(self, m: Monomial) -> list[int]:
        """Vertex masks of simplexes whose union is the strictly-below subcomplex.

        A face has label strictly dividing m iff all its labels divide m and it
        misses, for some variable of m, every vertex attaining m's exponent.
        """
        _verts, exps, facet_masks = self._view
        target = m.exponents
        vm = self._divisor_mask(m)
        members = []
        support = [k for k, e in enumerate(target) if e]
        if not support:
            return []
        drop_masks = []
        for p in support:
            a = 0
            probe = vm
            while probe:
                low = probe & -probe
                bit = low.bit_length() - 1
                if exps[bit][p] == target[p]:
                    a |= low
                probe ^= low
            drop_masks.append(~a)
        for fm in facet_masks:
            base = fm & vm
            for drop in drop_masks:
                members.append(base & drop)
        return members


def taylor_complex(
    ideal: MonomialIdeal, max_vertices: int = 22
) -> LabeledComplex:
    """The full simplex on the minimal generators, vertex i labeled by generator i."""
    if ideal.q > max_vertices:
        raise ResourceLimit(
            f"Taylor complex would have {ideal.q} vertices (cap {max_vertices})",
            "max-taylor",
        )
    facet = frozenset(range(ideal.q))
    return LabeledComplex(
        SimplicialComplex.from_facets([facet]),
        {k: g for k, g in enumerate(ideal.gens)},
        ideal.table,
    )


def restrict_divides(lab: LabeledComplex, m: Monomial) -> LabeledComplex:
    """The subcomplex induced on the vertices whose labels divide m."""
    keep = {v for v in lab.complex.vertices if lab.labels[v].divides(m)}
    sub = cx.induced_subcomplex(lab.complex, keep, warn_unknown=False)
    return LabeledComplex(sub, {v: lab.labels[v] for v in keep}, lab.table)


def restrict_strict(lab: LabeledComplex, m: Monomial) -> LabeledComplex:
    """The subcomplex of faces whose label strictly divides m.

    This is a face-filtered subcomplex, not an induced one: a face can consist
    of strict divisors yet have label exactly m.
    """
    if lab.complex.is_void:
        return lab
    members = lab._strict_members(m)
    verts = sorted(lab.complex.vertices)
    facets = [frozenset(verts[b] for b in hml._bits(mask)) for mask in members]
    if not m.is_one:
        facets.append(frozenset())
    sub = SimplicialComplex.from_facets(facets)
    return LabeledComplex(sub, {v: lab.labels[v] for v in sub.vertices}, lab.table)


def _check_labels_match(lab: LabeledComplex, ideal: MonomialIdeal) -> None:
    labels = list(lab.labels.values())
    if len(labels) != len(ideal.gens) or set(labels) != set(ideal.gens):
        raise ValueError(
            "vertex labels do not biject with the ideal's minimal generators"
        )


@dataclass(frozen=True)
class SupportReport:
    supported: bool
    criterion: str
    witness: Monomial | None = None
    witness_dim: int | None = None

    def __str__(self) -> str:
        if self.supported:
            return f"PASS ({self.criterion})"
        extra = f", homology dim {self.witness_dim}" if self.witness_dim is not None else ""
        return f"FAIL ({self.criterion}; witness {self.witness}{extra})"


def _sorted_lattice(ideal: MonomialIdeal) -> list[Monomial]:
    return sorted(lcm_lattice(ideal), key=Monomial.sort_key)


def supports_resolution_quasitree(
    lab: LabeledComplex, ideal: MonomialIdeal
) -> SupportReport:
    """Connectivity criterion: every lcm-lattice restriction is empty or connected.

    Only valid on quasi-forests; anything else is rejected so it stays clear
    which criterion produced the verdict.
    """
    _check_labels_match(lab, ideal)
    if cx.quasi_forest_order(lab.complex) is None:
        raise NotQuasiForest(
            "connectivity criterion is inapplicable: the complex is not a quasi-forest"
        )
    _verts, _exps, facet_masks = lab._view
    for m in _sorted_lattice(ideal):
        vm = lab._divisor_mask(m)
        verdict = hml.connected_from_members([fm & vm for fm in facet_masks])
        if verdict is False:
            return SupportReport(False, "quasi-forest connectivity", witness=m)
    return SupportReport(True, "quasi-forest connectivity")


def supports_resolution_homological(
    lab: LabeledComplex,
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    limits: HomologyLimits = DEFAULT_LIMITS,
) -> SupportReport:
    """Acyclicity criterion: every lcm-lattice restriction is empty or acyclic."""
    _check_labels_match(lab, ideal)
    _verts, _exps, facet_masks = lab._view
    name = f"homological over {field}"
    for m in _sorted_lattice(ideal):
        vm = lab._divisor_mask(m)
        members = [fm & vm for fm in facet_masks]
        if not any(members):
            continue
        ranks = hml.ranks_from_members(members, field, limits)
        for d in sorted(ranks):
            if ranks[d]:
                return SupportReport(False, name, witness=m, witness_dim=d)
    return SupportReport(True, name)


@dataclass
class BettiTable:
    """Total and (optionally) multigraded Betti numbers; zero entries are dropped."""

    total: dict[int, int]
    graded: dict[tuple[int, Monomial], int] | None = None

    def __post_init__(self):
        self.total = {d: r for d, r in self.total.items() if r}
        if self.graded is not None:
            self.graded = {k: r for k, r in self.graded.items() if r}

    @property
    def max_d(self) -> int:
        return max(self.total, default=-1)

    def as_vector(self, upto: int | None = None) -> list[int]:
        top = self.max_d if upto is None else upto
        return [self.total.get(d, 0) for d in range(top + 1)]

    def to_json(self) -> dict:
        obj: dict = {"total": {str(d): r for d, r in sorted(self.total.items())}}
        if self.graded is not None:
            obj["graded"] = [
                {"d": d, "m": str(m), "rank": r}
                for (d, m), r in sorted(
                    self.graded.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key())
                )
            ]
        return obj

    @classmethod
    def from_json(cls, obj: Mapping, table: VariableTable) -> "BettiTable":
        from .monomials import parse_monomial

        total = {int(d): int(r) for d, r in obj["total"].items()}
        graded = None
        if "graded" in obj and obj["graded"] is not None:
            graded = {
                (int(e["d"]), parse_monomial(e["m"], table)): int(e["rank"])
                for e in obj["graded"]
            }
        return cls(total, graded)


def betti_numbers(
    lab: LabeledComplex,
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    check: bool = True,
    limits: HomologyLimits = DEFAULT_LIMITS,
) -> BettiTable:
    """Multigraded Betti numbers of `ideal` read off a supporting complex.

    beta_{d,m} = rank of reduced homology in dimension d-1 of the subcomplex of
    faces with label strictly dividing m, for m running over the lcm lattice
    (all other multidegrees contribute zero).  With check=True the homological
    support criterion is verified first and a failure raises UnsupportedComplex.
    """
    _check_labels_match(lab, ideal)
    if check:
        report = supports_resolution_homological(lab, ideal, field, limits)
        if not report.supported:
            raise UnsupportedComplex(report.witness, report.witness_dim)
    graded: dict[tuple[int, Monomial], int] = {}
    total: dict[int, int] = {}
    for m in _sorted_lattice(ideal):
        # all-zero member masks mean only the empty face survives, giving the
        # rank-1 contribution at homological dimension -1 (so beta_{0,m} = 1)
        ranks = hml.ranks_from_members(lab._strict_members(m), field, limits)
        for d, r in ranks.items():
            if r:
                graded[(d + 1, m)] = r
                total[d + 1] = total.get(d + 1, 0) + r
    return BettiTable(total, graded)


def betti_upper_bounds(
    lab: LabeledComplex, limits: HomologyLimits = DEFAULT_LIMITS
) -> BettiTable:
    """Face counts of the complex, an entrywise bound for the Betti numbers."""
    fv = cx.f_vector(lab.complex, limits)
    return BettiTable({d: c for d, c in enumerate(fv)})


# JSON for labeled complexes reuses the complex schema with labels as strings.


def labeled_to_json(lab: LabeledComplex) -> dict:
    return cx.complex_to_json(
        lab.complex, {v: str(lab.labels[v]) for v in lab.complex.vertices}
    )


def labeled_from_json(obj: Mapping, table: VariableTable) -> LabeledComplex:
    from .monomials import parse_monomial

    delta, raw = cx.complex_from_json(obj)
    if raw is None:
        raise ValueError("labeled complex JSON requires a 'labels' entry")
    labels = {v: parse_monomial(s, table) for v, s in raw.items()}
    return LabeledComplex(delta, labels, table)
