import random

import pytest
from hypothesis import given, settings, strategies as st

from lsquare.complexes import (
    SimplicialComplex,
    complex_from_json,
    complex_to_json,
    delete_vertex,
    empty_or_connected,
    f_vector,
    faces_by_dim,
    find_leaf,
    induced_subcomplex,
    is_connected,
    is_leaf,
    leaf_joint,
    quasi_forest_order,
    reduced_homology_ranks,
    verify_leaf_order,
)
from lsquare.l2 import l2_skeleton, pair_index

from oracles import brute_connected

HOLLOW_TRIANGLE = SimplicialComplex.from_facets([{1, 2}, {2, 3}, {1, 3}])

facet_lists = st.lists(
    st.frozensets(st.integers(0, 7), min_size=1, max_size=4),
    min_size=1,
    max_size=6,
)


def random_complex(rng, max_vertices=8, max_facets=6, max_size=4):
    nf = rng.randint(1, max_facets)
    facets = []
    for _ in range(nf):
        size = rng.randint(1, max_size)
        facets.append(rng.sample(range(max_vertices), min(size, max_vertices)))
    return SimplicialComplex.from_facets(facets)


def test_facets_are_maximalized_and_canonical():
    delta = SimplicialComplex.from_facets([{1, 2}, {2}, {1, 2}, {3}])
    assert delta.facets == (frozenset({1, 2}), frozenset({3}))
    assert {1} in delta and {1, 2} in delta and {1, 3} not in delta


def test_void_and_empty_distinction():
    void = SimplicialComplex.from_facets([])
    empty = SimplicialComplex.from_facets([frozenset()])
    assert void.is_void and void.is_empty
    assert not empty.is_void and empty.is_empty
    assert reduced_homology_ranks(void) == {}
    assert reduced_homology_ranks(empty) == {-1: 1}


def test_f_vector_triangle():
    assert f_vector(SimplicialComplex.from_facets([{1, 2, 3}])) == (3, 3, 1)


def test_faces_by_dim_includes_empty_face():
    fd = faces_by_dim(SimplicialComplex.from_facets([{1, 2}]))
    assert fd[-1] == [frozenset()]
    assert fd[0] == [frozenset({1}), frozenset({2})]
    assert fd[1] == [frozenset({1, 2})]


def test_induced_subcomplex_examples():
    delta = SimplicialComplex.from_facets([{1, 2, 3}])
    assert induced_subcomplex(delta, {1, 2, 3}) == delta
    assert induced_subcomplex(delta, {1, 3}).facets == (frozenset({1, 3}),)
    with pytest.warns(UserWarning):
        induced_subcomplex(delta, {1, 99})


def test_induced_on_skeleton_diagonal_pair_is_disconnected():
    sk = l2_skeleton(3)
    w = {pair_index(3, 1, 1), pair_index(3, 2, 2)}
    sub = induced_subcomplex(sk, w)
    assert len(sub.facets) == 2 and not is_connected(sub)


def test_delete_vertex():
    point = SimplicialComplex.from_facets([{7}])
    assert delete_vertex(point, 7).is_empty
    path = SimplicialComplex.from_facets([{1, 2}, {2, 3}])
    assert delete_vertex(path, 2).facets == (frozenset({1}), frozenset({3}))
    with pytest.raises(ValueError):
        delete_vertex(path, 9)


def test_delete_equals_induced_complement():
    rng = random.Random(5)
    for _ in range(50):
        delta = random_complex(rng)
        v = rng.choice(sorted(delta.vertices))
        assert delete_vertex(delta, v) == induced_subcomplex(
            delta, delta.vertices - {v}, warn_unknown=False
        )


def test_induced_is_monotone():
    rng = random.Random(6)
    for _ in range(30):
        delta = random_complex(rng)
        verts = sorted(delta.vertices)
        w2 = set(rng.sample(verts, rng.randint(0, len(verts))))
        w1 = set(rng.sample(sorted(w2), rng.randint(0, len(w2)))) if w2 else set()
        faces1 = brute_faces_set(induced_subcomplex(delta, w1, warn_unknown=False))
        faces2 = brute_faces_set(induced_subcomplex(delta, w2, warn_unknown=False))
        assert faces1 <= faces2


def brute_faces_set(delta):
    out = set()
    for d, faces in faces_by_dim(delta).items():
        out.update(faces)
    return out


def test_connectivity_tristate():
    assert is_connected(SimplicialComplex.from_facets([{4}]))
    assert not is_connected(SimplicialComplex.from_facets([{1, 2}, {3}]))
    assert is_connected(l2_skeleton(3))
    empty = SimplicialComplex.from_facets([frozenset()])
    with pytest.raises(ValueError):
        is_connected(empty)
    assert empty_or_connected(empty)


def test_connectivity_matches_bfs_oracle():
    rng = random.Random(7)
    for _ in range(100):
        delta = random_complex(rng)
        assert is_connected(delta) == brute_connected([tuple(f) for f in delta.facets])


def test_connectivity_matches_homology_rank():
    rng = random.Random(8)
    for _ in range(40):
        delta = random_complex(rng)
        ranks = reduced_homology_ranks(delta)
        assert is_connected(delta) == (ranks.get(0, 0) == 0)


# -- leaves and quasi-forest orders ----------------------------------------


def test_single_facet_is_a_leaf_without_joint():
    delta = SimplicialComplex.from_facets([{1, 2, 3}])
    assert find_leaf(delta) == (frozenset({1, 2, 3}), None)
    assert is_leaf(delta, {1, 2, 3})


def test_skeleton_row_is_leaf_with_big_facet_joint():
    sk = l2_skeleton(3)
    row1 = frozenset(pair_index(3, 1, j) for j in (1, 2, 3))
    big = frozenset(
        pair_index(3, i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i < j
    )
    assert leaf_joint(sk, row1) == big
    leaf, joint = find_leaf(sk)
    assert joint is not None


def test_hollow_triangle_has_no_leaf():
    assert find_leaf(HOLLOW_TRIANGLE) is None
    assert quasi_forest_order(HOLLOW_TRIANGLE) is None
    with pytest.raises(ValueError):
        find_leaf(SimplicialComplex.from_facets([frozenset()]))


def test_quasi_forest_order_trivial_cases():
    assert quasi_forest_order(SimplicialComplex.from_facets([])) == []
    assert quasi_forest_order(SimplicialComplex.from_facets([frozenset()])) == []
    point = SimplicialComplex.from_facets([{1}])
    assert quasi_forest_order(point) == [frozenset({1})]


def test_quasi_forest_order_is_verified_leaf_order():
    rng = random.Random(9)
    for _ in range(100):
        delta = random_complex(rng)
        order = quasi_forest_order(delta)
        if order is not None:
            assert verify_leaf_order(order)
            assert sorted(map(sorted, order)) == sorted(map(sorted, delta.facets))


@given(facet_lists)
@settings(max_examples=150)
def test_greedy_agrees_with_backtracking(facets):
    delta = SimplicialComplex.from_facets(facets)
    greedy = quasi_forest_order(delta, method="greedy")
    exhaustive = quasi_forest_order(delta, method="backtrack")
    assert (greedy is None) == (exhaustive is None)


@given(facet_lists)
@settings(max_examples=60, deadline=None)
def test_euler_characteristic_consistency(facets):
    delta = SimplicialComplex.from_facets(facets)
    fv = f_vector(delta)
    ranks = reduced_homology_ranks(delta)
    lhs = sum((-1) ** d * c for d, c in enumerate(fv))
    rhs = 1 - ranks.get(-1, 0) + sum(
        (-1) ** d * r for d, r in ranks.items() if d >= 0
    )
    assert lhs == rhs


def test_json_round_trip():
    delta = SimplicialComplex.from_facets([{1, 2}, {3}])
    obj = complex_to_json(delta, labels={1: "a", 2: "b", 3: "c"})
    back, labels = complex_from_json(obj)
    assert back == delta
    assert labels == {1: "a", 2: "b", 3: "c"}


def test_json_restores_isolated_vertices():
    obj = {"vertices": [1, 2, 5], "facets": [[1, 2]]}
    back, _ = complex_from_json(obj)
    assert back.vertices == {1, 2, 5}
