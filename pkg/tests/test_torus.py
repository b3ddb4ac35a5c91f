"""Torus geometry: distances, rings, boundaries, box partitions."""

import itertools

import numpy as np
import pytest

import oracles
from swmix import (
    BoxPartition,
    box_core,
    box_core_dichotomy,
    coord_to_index,
    index_to_coord,
    make_box_partition,
    mask_from_indices,
    num_vertices,
    ring,
    ring_size,
    torus_boundary_count,
    torus_distance,
    torus_edge_boundary,
    torus_neighbor_indices,
)


def test_num_vertices():
    assert num_vertices(1) == 9
    assert num_vertices(2) == 25
    assert num_vertices(100) == 201**2


def test_coord_index_round_trip():
    for n in (1, 2, 5):
        seen = set()
        for x in range(-n, n + 1):
            for y in range(-n, n + 1):
                idx = coord_to_index(x, y, n)
                seen.add(idx)
                assert index_to_coord(idx, n) == (x, y)
        assert seen == set(range(num_vertices(n)))


def test_coord_index_is_x_major():
    assert coord_to_index(-2, -2, 2) == 0
    assert coord_to_index(-2, -1, 2) == 1
    assert coord_to_index(-1, -2, 2) == 5
    assert coord_to_index(0, 0, 2) == 12


def test_torus_distance_examples():
    assert torus_distance((0, 0), (2, 2), 2) == 4
    # wraparound: (-2,-2) and (2,2) are one step apart per axis on the 5-cycle
    assert torus_distance((-2, -2), (2, 2), 2) == 2
    assert torus_distance((1, -1), (1, -1), 2) == 0


def test_torus_distance_rejects_out_of_range():
    with pytest.raises(ValueError):
        torus_distance((0, 0), (3, 0), 2)


def test_torus_distance_matches_shift_scan():
    for n in (1, 2, 3):
        side = 2 * n + 1
        pts = oracles.grid_points(n)
        for u in pts:
            for v in pts:
                assert torus_distance(u, v, n) == oracles.wrapped_distance(u, v, side)


def test_torus_distance_broadcasts():
    n = 4
    pts = np.array(oracles.grid_points(n))
    d = torus_distance(pts, (0, 0), n)
    assert d.shape == (pts.shape[0],)
    assert d.max() == 2 * n
    assert (d >= 0).all()


def test_ring_size_examples():
    assert ring_size(2, 2) == 8
    assert ring_size(4, 2) == 4
    assert ring_size(1, 10) == 4


def test_ring_size_range_errors():
    with pytest.raises(ValueError):
        ring_size(0, 3)
    with pytest.raises(ValueError):
        ring_size(7, 3)


def test_ring_sizes_sum_to_all_other_vertices():
    for n in (1, 2, 3, 8, 64):
        total = sum(ring_size(ell, n) for ell in range(1, 2 * n + 1))
        assert total == num_vertices(n) - 1


def test_ring_size_matches_scan():
    for n in (1, 2, 4, 6):
        for ell in range(1, 2 * n + 1):
            assert ring_size(ell, n) == oracles.ring_count(ell, n)


def test_ring_members_are_at_exact_distance():
    for n, v in ((2, (0, 0)), (3, (2, -3)), (4, (-4, 1))):
        for ell in range(1, 2 * n + 1):
            pts = ring(v, ell, n)
            assert pts.shape == (ring_size(ell, n), 2)
            d = torus_distance(pts, v, n)
            assert (np.asarray(d) == ell).all()
            # no coordinate listed twice
            assert len({tuple(p) for p in pts}) == pts.shape[0]


def test_torus_neighbor_indices_of_origin():
    n = 2
    v = coord_to_index(0, 0, n)
    nbr = torus_neighbor_indices(n)[v]
    expect = [
        coord_to_index(1, 0, n),
        coord_to_index(-1, 0, n),
        coord_to_index(0, 1, n),
        coord_to_index(0, -1, n),
    ]
    assert nbr.tolist() == expect


def test_single_vertex_boundary():
    n = 3
    S = mask_from_indices([coord_to_index(0, 0, n)], n)
    edges = torus_edge_boundary(S, n)
    assert edges.shape == (4, 2)
    assert torus_boundary_count(S, n) == 4


def test_column_strip_boundary():
    # a full column only cuts the edges to the two neighbouring columns
    for n in (1, 2, 5):
        side = 2 * n + 1
        idx = [coord_to_index(0, y, n) for y in range(-n, n + 1)]
        S = mask_from_indices(idx, n)
        assert torus_boundary_count(S, n) == 2 * side


def test_full_grid_has_empty_boundary():
    n = 2
    S = np.ones(num_vertices(n), dtype=bool)
    assert torus_edge_boundary(S, n).shape == (0, 2)
    assert torus_boundary_count(S, n) == 0


def test_torus_boundary_matches_edge_scan():
    n = 3
    rng = np.random.default_rng(5)
    edges = oracles.torus_edge_list(n)
    for _ in range(50):
        S = rng.random(num_vertices(n)) < rng.random()
        expect = oracles.edge_boundary_pairs(edges, S)
        got = torus_edge_boundary(S, n)
        assert [tuple(e) for e in got] == expect
        assert torus_boundary_count(S, n) == len(expect)


def test_torus_boundary_count_batched():
    n = 2
    rng = np.random.default_rng(11)
    batch = rng.random((7, 3, num_vertices(n))) < 0.4
    counts = torus_boundary_count(batch, n)
    assert counts.shape == (7, 3)
    for i in range(7):
        for j in range(3):
            assert counts[i, j] == torus_boundary_count(batch[i, j], n)


def test_isoperimetry_exhaustive_smallest_grid():
    # every subset of the 3x3 torus meets the edge-boundary lower bound
    n = 1
    N = num_vertices(n)
    codes = np.arange(2**N, dtype=np.uint32)
    masks = (codes[:, None] >> np.arange(N)[None, :]) & 1
    masks = masks.astype(bool)
    sizes = masks.sum(axis=1)
    keep = (sizes >= 1) & (sizes <= N // 2)
    counts = torus_boundary_count(masks[keep], n)
    bound = np.minimum(2 * n + 1, 2 * np.sqrt(sizes[keep]))
    assert (counts >= bound).all()


def test_partition_regular_tiling():
    part = make_box_partition(4, 3)
    assert part.num_boxes == 9
    assert all(w == 3 and h == 3 for (_, _, w, h) in part.boxes)
    assert part.sizes.tolist() == [9] * 9


def test_partition_remainder_absorbed():
    part = make_box_partition(3, 3)
    assert part.num_boxes == 4
    dims = sorted((w, h) for (_, _, w, h) in part.boxes)
    assert dims == [(3, 3), (3, 4), (4, 3), (4, 4)]
    assert sorted(part.sizes.tolist()) == [9, 12, 12, 16]


def test_partition_unit_boxes():
    part = make_box_partition(1, 1)
    assert part.num_boxes == 9
    assert part.sizes.tolist() == [1] * 9


def test_partition_box_side_validation():
    with pytest.raises(ValueError):
        make_box_partition(3, 0)
    with pytest.raises(ValueError):
        make_box_partition(3, 4)


def test_partition_invariants():
    for n in (1, 2, 3, 5, 8, 13, 21, 40):
        N = num_vertices(n)
        for ell in range(1, n + 1):
            part = make_box_partition(n, ell)
            Q = part.num_boxes
            assert N / (4 * ell**2) <= Q <= N / ell**2
            # labels tile the grid exactly and agree with the stated sizes
            assert np.bincount(part.labels, minlength=Q).tolist() == part.sizes.tolist()
            assert part.sizes.sum() == N
            for (_, _, w, h) in part.boxes:
                assert ell <= w <= 2 * ell
                assert ell <= h <= 2 * ell


def test_partition_labels_match_box_rectangles():
    part = make_box_partition(5, 2)
    for b, (x0, y0, w, h) in enumerate(part.boxes):
        for dx in range(w):
            for dy in range(h):
                idx = coord_to_index(x0 + dx, y0 + dy, 5)
                assert part.labels[idx] == b


def test_box_core_full_and_broken_box():
    n = 4
    part = make_box_partition(n, 3)
    x0, y0, w, h = part.boxes[0]
    idx = [coord_to_index(x0 + dx, y0 + dy, n) for dx in range(w) for dy in range(h)]
    S = mask_from_indices(idx, n)
    assert (box_core(S, part) == S).all()
    # removing any single vertex empties the core
    S2 = S.copy()
    S2[idx[4]] = False
    assert box_core(S2, part).sum() == 0


def test_box_core_idempotent():
    n = 5
    part = make_box_partition(n, 2)
    rng = np.random.default_rng(3)
    for _ in range(20):
        S = rng.random(num_vertices(n)) < 0.8
        core = box_core(S, part)
        again = box_core(core, part)
        assert (core & S).sum() == core.sum()
        assert (again == core).all()


def test_dichotomy_full_box_and_single_vertex():
    n = 4
    part = make_box_partition(n, 2)
    x0, y0, w, h = part.boxes[0]
    idx = [coord_to_index(x0 + dx, y0 + dy, n) for dx in range(w) for dy in range(h)]
    assert box_core_dichotomy(mask_from_indices(idx, n), part, 0.5)
    assert box_core_dichotomy(mask_from_indices([idx[0]], n), part, 0.5)


def test_dichotomy_validation():
    part = make_box_partition(2, 1)
    empty = np.zeros(num_vertices(2), dtype=bool)
    with pytest.raises(ValueError):
        box_core_dichotomy(empty, part, 0.5)
    one = mask_from_indices([0], 2)
    with pytest.raises(ValueError):
        box_core_dichotomy(one, part, 0.0)
    with pytest.raises(ValueError):
        box_core_dichotomy(one, part, 1.0)


def test_dichotomy_random_sweep():
    rng = np.random.default_rng(17)
    for n, ell in ((4, 2), (6, 2), (8, 3)):
        part = make_box_partition(n, ell)
        N = num_vertices(n)
        for _ in range(500):
            S = rng.random(N) < rng.uniform(0.05, 0.95)
            if not S.any():
                continue
            eta = rng.uniform(0.05, 0.95)
            assert box_core_dichotomy(S, part, eta)
