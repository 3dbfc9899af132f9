import random

import pytest

from lsquare.complexes import SimplicialComplex, reduced_homology_ranks
from lsquare.homology import (
    HomologyLimits,
    PrimeField,
    RATIONALS,
    ResourceLimit,
    enumerate_face_masks,
    maximal_masks,
    parse_field,
    rank_gf2,
    rank_gfp,
    rank_rational,
    ranks_from_members,
)

from oracles import brute_reduced_homology, dense_rank


def cx(*facets):
    return SimplicialComplex.from_facets(facets)


def test_simplex_is_acyclic():
    for k in range(1, 6):
        ranks = reduced_homology_ranks(cx(set(range(k))))
        assert all(r == 0 for r in ranks.values())


def test_hollow_triangle_circle():
    ranks = reduced_homology_ranks(cx({1, 2}, {2, 3}, {1, 3}))
    assert ranks == {-1: 0, 0: 0, 1: 1}


def test_two_points():
    assert reduced_homology_ranks(cx({1}, {2}))[0] == 1


def test_sphere_from_tetrahedron_boundary():
    ranks = reduced_homology_ranks(cx({1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}))
    assert ranks == {-1: 0, 0: 0, 1: 0, 2: 1}


def test_projective_plane_detects_the_field():
    # minimal 6-vertex triangulation of the projective plane; 2-torsion makes
    # GF(2) homology differ from rational homology
    rp2 = cx(
        {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
        {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6},
    )
    assert reduced_homology_ranks(rp2, RATIONALS) == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert reduced_homology_ranks(rp2, PrimeField(2)) == {-1: 0, 0: 0, 1: 1, 2: 1}


def test_matches_brute_force_oracle_on_random_complexes():
    rng = random.Random(21)
    for _ in range(60):
        nf = rng.randint(1, 6)
        facets = [
            tuple(sorted(rng.sample(range(7), rng.randint(1, 4)))) for _ in range(nf)
        ]
        delta = SimplicialComplex.from_facets(facets)
        for field, p in ((RATIONALS, None), (PrimeField(2), 2), (PrimeField(3), 3)):
            got = reduced_homology_ranks(delta, field)
            want = brute_reduced_homology(facets, p=p)
            assert got == want, (facets, field)


def test_nerve_route_equals_enumeration_route():
    rng = random.Random(22)
    for _ in range(80):
        nf = rng.randint(2, 7)
        facets = [
            tuple(sorted(rng.sample(range(9), rng.randint(1, 5)))) for _ in range(nf)
        ]
        delta = SimplicialComplex.from_facets(facets)
        for field in (RATIONALS, PrimeField(2)):
            via_enum = reduced_homology_ranks(delta, field, force="enumerate")
            via_nerve = reduced_homology_ranks(delta, field, force="nerve")
            assert via_enum == via_nerve, facets


def test_members_engine_edge_cases():
    assert ranks_from_members([]) == {}
    assert ranks_from_members([0]) == {-1: 1}
    assert ranks_from_members([0, 0]) == {-1: 1}
    # a cone: common vertex bit 0
    ranks = ranks_from_members([0b011, 0b101])
    assert all(r == 0 for r in ranks.values())


def test_maximal_masks():
    assert maximal_masks([0b01, 0b11, 0b11, 0, 0b100]) == [0b11, 0b100]


def test_enumeration_cap():
    with pytest.raises(ResourceLimit) as err:
        enumerate_face_masks([(1 << 30) - 1], max_faces=1000)
    assert err.value.cap == "max-faces"


def test_homology_respects_face_cap():
    big = cx(set(range(18)))
    tight = HomologyLimits(max_faces=100, enumeration_budget=1 << 20)
    with pytest.raises(ResourceLimit):
        reduced_homology_ranks(big, RATIONALS, tight, force="enumerate")


def test_rank_functions_match_dense_oracle():
    rng = random.Random(23)
    for _ in range(60):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        dense = [
            [rng.randint(-4, 4) for _ in range(ncols)] for _ in range(nrows)
        ]
        sparse = [
            {j: v for j, v in enumerate(row) if v} for row in dense
        ]
        assert rank_rational(sparse) == dense_rank(dense)
        assert rank_gfp(sparse, 3) == dense_rank(dense, p=3)
        bits = [
            sum(1 << j for j, v in enumerate(row) if v % 2) for row in dense
        ]
        assert rank_gf2(bits) == dense_rank(dense, p=2)


def test_parse_field():
    assert parse_field("rational") == RATIONALS
    assert parse_field("gf:5") == PrimeField(5)
    with pytest.raises(ValueError):
        parse_field("gf:6")
    with pytest.raises(ValueError):
        parse_field("float")


def test_limits_validation():
    with pytest.raises(ValueError):
        HomologyLimits(max_faces=0)
