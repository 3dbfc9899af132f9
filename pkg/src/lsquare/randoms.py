"""Random square-free ideals and the seeded invariant sweep behind `verify`.

The sampling model: draw a generator count q and a variable count n uniformly
from the configured ranges (n is floored so that q pairwise-incomparable
subsets can exist at all), then draw each generator as a uniform nonempty
variable subset and reject the batch unless it is already a minimal generating
set.  A fixed seed determines the whole sweep.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass, field as dc_field
from math import comb

from . import complexes as cx
from . import l2
from .homology import DEFAULT_LIMITS, Field, HomologyLimits, RATIONALS
from .labeled import (
    betti_numbers,
    supports_resolution_homological,
    supports_resolution_quasitree,
    taylor_complex,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    VariableTable,
    format_ideal,
    minimalize,
    parse_ideal,
)

SHARPNESS_IDEAL_TEXT = "xabc,yade,zbdf,wcef"


def _min_n_for(q: int) -> int:
    n = 1
    while comb(n, n // 2) < q:
        n += 1
    return n


def _table(n: int) -> VariableTable:
    return VariableTable(tuple(string.ascii_lowercase[:n]))


def random_squarefree_ideal(
    rng: random.Random, n: int, q: int, max_tries: int = 5000
) -> MonomialIdeal | None:
    """q uniform nonempty variable subsets, redrawn until they form a minimal set."""
    table = _table(n)
    for _ in range(max_tries):
        gens = []
        for _ in range(q):
            exps = [rng.randint(0, 1) for _ in range(n)]
            if not any(exps):
                exps[rng.randrange(n)] = 1
            gens.append(Monomial(table, tuple(exps)))
        if len(minimalize(gens)) == q and len(set(gens)) == q:
            return MonomialIdeal(table, tuple(gens))
    return None


def sample_ideal(rng: random.Random, max_n: int, max_q: int) -> MonomialIdeal:
    while True:
        q = rng.randint(1, max_q)
        lo = _min_n_for(q)
        if lo > max_n:
            continue
        n = rng.randint(lo, max_n)
        ideal = random_squarefree_ideal(rng, n, q)
        if ideal is not None:
            return ideal


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class InstanceResult:
    index: int
    ideal_text: str
    q: int
    n: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 1
    count: int = 100
    max_n: int = 6
    max_q: int = 4
    include_fixture: bool = True


@dataclass
class SweepReport:
    config: SweepConfig
    instances: list[InstanceResult] = dc_field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(inst.passed for inst in self.instances)

    @property
    def failures(self) -> list[InstanceResult]:
        return [inst for inst in self.instances if not inst.passed]


def generator_triple_property(ideal: MonomialIdeal, powers=(2, 3)) -> CheckResult:
    """Brute force: a pure power of one generator and a product of r generators
    only divide each other when all indices agree."""
    import itertools

    gens = ideal.gens
    for r in powers:
        for i, g in enumerate(gens):
            gr = g
            for _ in range(r - 1):
                gr = gr * g
            for combo in itertools.combinations_with_replacement(range(len(gens)), r):
                prod = gens[combo[0]]
                for k in combo[1:]:
                    prod = prod * gens[k]
                if (gr.divides(prod) or prod.divides(gr)) and combo != (i,) * r:
                    return CheckResult(
                        "generator-power-triples",
                        False,
                        f"i={i + 1} r={r} indices={tuple(k + 1 for k in combo)}",
                    )
    return CheckResult("generator-power-triples", True)


def partner_generator_property(ideal: MonomialIdeal) -> CheckResult:
    """Brute force: each generator index i has a partner j so that no product
    avoiding both indices divides the product of generators i and j."""
    gens = ideal.gens
    q = len(gens)
    if q < 2:
        return CheckResult("irredundant-partner", True)
    for i in range(q):
        found = False
        for j in range(q):
            if j == i:
                continue
            pij = gens[i] * gens[j]
            ok = True
            for u in range(q):
                for v in range(u, q):
                    if {u, v} & {i, j}:
                        continue
                    if (gens[u] * gens[v]).divides(pij):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found = True
                break
        if not found:
            return CheckResult("irredundant-partner", False, f"i={i + 1}")
    return CheckResult("irredundant-partner", True)


def ideal_checks(
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    limits: HomologyLimits = DEFAULT_LIMITS,
) -> list[CheckResult]:
    """The per-ideal invariant suite used by sweeps."""
    out: list[CheckResult] = []
    q = ideal.q
    square = ideal.power(2)
    out.append(
        CheckResult(
            "square-size",
            square.q <= comb(q + 1, 2),
            f"s={square.q} cap={comb(q + 1, 2)}",
        )
    )

    try:
        lab, record = l2.l2_of_ideal(ideal)
        out.append(CheckResult("labels-match-square", True))
    except AssertionError as exc:
        out.append(CheckResult("labels-match-square", False, str(exc)))
        return out

    out.append(
        CheckResult(
            "diagonal-survives",
            all(not v.is_diagonal for v in record.deleted),
        )
    )
    out.append(
        CheckResult(
            "quasi-forest",
            cx.quasi_forest_order(lab.complex) is not None,
        )
    )

    rep_c = supports_resolution_quasitree(lab, square)
    out.append(
        CheckResult(
            "support-connectivity", rep_c.supported, str(rep_c.witness or "")
        )
    )
    rep_h = supports_resolution_homological(lab, square, field, limits)
    out.append(
        CheckResult(
            "support-homology",
            rep_h.supported,
            "" if rep_h.supported else f"{rep_h.witness} dim {rep_h.witness_dim}",
        )
    )

    # bounds chain: exact betti <= complex face counts == enumerated f-vector
    # <= skeleton bound, through every dimension with a nonzero entry anywhere
    beta = betti_numbers(taylor_complex(square), square, field, limits=limits)
    top = max(q * (q - 1) // 2 - 1, q - 1, beta.max_d) + 1
    fv = cx.f_vector(lab.complex, limits)
    chain_ok = True
    detail = ""
    for d in range(top + 1):
        b = beta.total.get(d, 0)
        refined = l2.deletion_face_bound(record, d)
        coarse = l2.skeleton_face_bound(q, d)
        enumerated = fv[d] if d < len(fv) else 0
        if not (b <= refined <= coarse) or refined != enumerated:
            chain_ok = False
            detail = (
                f"d={d} beta={b} refined={refined} skeleton={coarse} "
                f"enumerated={enumerated}"
            )
            break
    out.append(CheckResult("bound-chain", chain_ok, detail))

    out.append(generator_triple_property(ideal))
    out.append(partner_generator_property(ideal))
    return out


def sharpness_fixture_checks(
    field: Field = RATIONALS, limits: HomologyLimits = DEFAULT_LIMITS
) -> list[CheckResult]:
    """The 4-generator ideal whose complex loses no vertices and resolves minimally."""
    ideal, _ = parse_ideal(SHARPNESS_IDEAL_TEXT)
    out = ideal_checks(ideal, field, limits)
    lab, record = l2.l2_of_ideal(ideal)
    beta = betti_numbers(lab, ideal.power(2), field, limits=limits)
    fv = cx.f_vector(lab.complex, limits)
    out.append(CheckResult("sharpness-no-deletions", not record.deleted))
    out.append(
        CheckResult(
            "sharpness-minimal",
            beta.as_vector(len(fv) - 1) == list(fv),
            f"beta={beta.as_vector()} f={list(fv)}",
        )
    )
    return out


def run_sweep(
    config: SweepConfig,
    field: Field = RATIONALS,
    limits: HomologyLimits = DEFAULT_LIMITS,
) -> SweepReport:
    report = SweepReport(config)
    if config.count <= 0:
        return report
    rng = random.Random(config.seed)
    index = 0
    if config.include_fixture:
        ideal, _ = parse_ideal(SHARPNESS_IDEAL_TEXT)
        checks = sharpness_fixture_checks(field, limits)
        report.instances.append(
            InstanceResult(
                index, SHARPNESS_IDEAL_TEXT, ideal.q, ideal.table.n, tuple(checks)
            )
        )
        index += 1
    for _ in range(config.count):
        ideal = sample_ideal(rng, config.max_n, config.max_q)
        checks = ideal_checks(ideal, field, limits)
        report.instances.append(
            InstanceResult(
                index, format_ideal(ideal), ideal.q, ideal.table.n, tuple(checks)
            )
        )
        index += 1
    return report
