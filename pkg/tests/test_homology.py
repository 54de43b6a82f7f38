"""Unit tests for the cubical complex and GF(2) homology engine."""

import random

import numpy as np
import pytest

from quadbetti.homology import (
    PASS,
    VIOLATION,
    CubicalComplex,
    betti,
    chain_complex,
    close_under_faces,
    cube_all_faces,
    cube_dim,
    cube_faces,
    cube_intervals,
    gf2_rank,
    make_cube,
    mayer_vietoris_audit,
    pad_betti,
)


def solid_cube_complex(d):
    return close_under_faces([make_cube([(0, 1)] * d)])


def hollow_square(x=0, y=0):
    edges = [
        make_cube([(x, x + 1), (y, y)]),
        make_cube([(x, x + 1), (y + 1, y + 1)]),
        make_cube([(x, x), (y, y + 1)]),
        make_cube([(x + 1, x + 1), (y, y + 1)]),
    ]
    return close_under_faces(edges)


def cube_surface():
    solid = solid_cube_complex(3)
    top = make_cube([(0, 1)] * 3)
    return CubicalComplex(3, solid.cells - {top})


def random_closed_complex(rng, max_ambient=4, max_cubes=6):
    ambient = rng.randint(1, max_ambient)
    cubes = []
    for _ in range(rng.randint(1, max_cubes)):
        intervals = []
        for _ in range(ambient):
            m = rng.randint(-3, 3)
            intervals.append((m, m + 1) if rng.random() < 0.6 else (m, m))
        cubes.append(make_cube(intervals))
    return close_under_faces(cubes)


class TestCubeEncoding:
    def test_roundtrip(self):
        c = make_cube([(0, 1), (2, 2), (-3, -2)])
        assert cube_intervals(c) == ((0, 1), (2, 2), (-3, -2))
        assert cube_dim(c) == 2

    def test_rejects_wide_interval(self):
        with pytest.raises(ValueError):
            make_cube([(0, 2)])

    def test_faces_of_square(self):
        sq = make_cube([(0, 1), (0, 1)])
        faces = cube_faces(sq)
        assert len(faces) == 4
        assert all(cube_dim(f) == 1 for f in faces)

    def test_all_faces_count(self):
        sq = make_cube([(0, 1), (0, 1)])
        assert len(cube_all_faces(sq)) == 9  # 4 vertices + 4 edges + itself


class TestCloseUnderFaces:
    def test_square_closure(self):
        cx = close_under_faces([make_cube([(0, 1), (0, 1)])])
        assert cx.n_cells(0) == 4
        assert cx.n_cells(1) == 4
        assert cx.n_cells(2) == 1
        assert cx.is_face_closed()

    def test_empty(self):
        cx = close_under_faces([])
        assert len(cx) == 0
        assert betti(cx) == (0,)

    def test_isolated_vertices(self):
        cx = close_under_faces([make_cube([(0, 0)]), make_cube([(2, 2)])])
        assert len(cx) == 2
        assert betti(cx) == (2,)

    def test_mixed_ambient_rejected(self):
        with pytest.raises(ValueError):
            close_under_faces([make_cube([(0, 1)]), make_cube([(0, 1), (0, 0)])])


class TestGF2Rank:
    def test_identity(self):
        assert gf2_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3

    def test_all_ones(self):
        assert gf2_rank([[1, 1], [1, 1]]) == 1

    def test_zero(self):
        assert gf2_rank([[0, 0], [0, 0]]) == 0

    def test_numpy_input(self):
        assert gf2_rank(np.eye(4, dtype=int)) == 4

    def test_permutation_invariance(self):
        rng = random.Random(11)
        for _ in range(25):
            rows = [[rng.randint(0, 1) for _ in range(7)] for _ in range(5)]
            base = gf2_rank(rows)
            shuffled = rows[:]
            rng.shuffle(shuffled)
            assert gf2_rank(shuffled) == base
            transposed_cols = list(range(7))
            rng.shuffle(transposed_cols)
            permuted = [[row[c] for c in transposed_cols] for row in rows]
            assert gf2_rank(permuted) == base

    def test_matches_numpy_float_rank(self):
        # over GF(2) the rank may differ from the rational rank, but for a
        # permutation matrix both agree
        rng = np.random.default_rng(3)
        for _ in range(10):
            perm = rng.permutation(6)
            mat = np.zeros((6, 6), dtype=int)
            mat[np.arange(6), perm] = 1
            assert gf2_rank(mat) == 6


class TestChainComplex:
    def test_shapes_of_square(self):
        cc = chain_complex(close_under_faces([make_cube([(0, 1), (0, 1)])]))
        assert cc.counts == (4, 4, 1)
        assert cc.boundaries[0].n_rows == 4 and cc.boundaries[0].n_cols == 4
        assert cc.boundaries[1].n_rows == 4 and cc.boundaries[1].n_cols == 1

    def test_dd_zero_on_randoms(self):
        rng = random.Random(5)
        for _ in range(100):
            cx = random_closed_complex(rng)
            assert chain_complex(cx).dd_is_zero()

    def test_not_face_closed_detected(self):
        solid = close_under_faces([make_cube([(0, 1), (0, 1)])])
        broken = CubicalComplex(2, solid.cells - {make_cube([(0, 0), (0, 0)])})
        with pytest.raises(ValueError):
            chain_complex(broken)


class TestBetti:
    def test_hollow_square_is_circle(self):
        assert betti(hollow_square()) == (1, 1)

    def test_solid_square_is_contractible(self):
        assert pad_betti(betti(solid_cube_complex(2)), 3) == (1, 0, 0)

    def test_cube_surface_is_sphere(self):
        assert betti(cube_surface()) == (1, 0, 1)

    def test_single_cube_closures(self):
        for d in range(5):
            expected = (1,) + (0,) * d
            assert betti(solid_cube_complex(d)) == expected

    def test_disjoint_union_adds(self):
        a = hollow_square(0, 0)
        b = hollow_square(5, 5)
        union = CubicalComplex(2, a.cells | b.cells)
        assert betti(union) == tuple(
            x + y for x, y in zip(betti(a), betti(b))
        )

    def test_euler_consistency(self):
        rng = random.Random(17)
        for _ in range(60):
            cx = random_closed_complex(rng)
            vec = betti(cx)
            euler = sum((-1) ** d * v for d, v in enumerate(vec))
            assert euler == cx.euler_characteristic()

    def test_collapse_agrees_with_direct(self):
        rng = random.Random(23)
        for _ in range(60):
            cx = random_closed_complex(rng)
            assert betti(cx, precollapse=True) == betti(cx, precollapse=False)

    def test_empty_complex(self):
        assert betti(CubicalComplex(3, frozenset())) == (0, 0, 0, 0)


class TestPadBetti:
    def test_pads_and_guards(self):
        assert pad_betti((1, 1), 4) == (1, 1, 0, 0)
        assert pad_betti((1, 0, 0), 2) == (1, 0)
        with pytest.raises(ValueError):
            pad_betti((1, 0, 2), 2)


class TestMayerVietoris:
    def test_wedge_numbers(self):
        pieces = {(1,): (1, 1), (2,): (1, 1), (1, 2): (1, 0)}
        assert mayer_vietoris_audit((1, 2), pieces, 1) == PASS

    def test_disjoint_union_degree_zero(self):
        pieces = {(1,): (1, 1), (2,): (1, 1)}
        assert mayer_vietoris_audit((2, 2), pieces, 0) == PASS

    def test_fabricated_violation(self):
        pieces = {(1,): (1, 1), (2,): (1, 1), (1, 2): (1, 0)}
        assert mayer_vietoris_audit((1, 10), pieces, 1) == VIOLATION

    def test_missing_subset_is_an_error(self):
        pieces = {(1,): (1, 1), (2,): (1, 1)}
        with pytest.raises(ValueError, match="inconclusive"):
            mayer_vietoris_audit((1, 2), pieces, 1)

    def test_short_vectors_read_as_zero(self):
        pieces = {(1,): (1,), (2,): (1,), (1, 2): (0,)}
        assert mayer_vietoris_audit((2,), pieces, 1) == PASS
