from math import factorial

import numpy as np
import pytest

from snspectra.formulas import natural_trace, split_sizes
from snspectra.graphs import (
    DenseCapExceededError,
    build,
    connected_components,
    delete_vertex_edges,
    dense_spectrum,
    export_adjacency_matrix,
    export_edge_list,
    from_explicit_set,
    interlacing_check,
    is_bipartite,
    is_connected,
    multiplicity_table,
    natural_module_matrix,
    natural_module_spectrum,
    split_by_last_point,
    star_spectrum,
    weyl_check,
)
from snspectra.permutations import (
    compose,
    enumerate_connecting_set,
    full_cycles,
    parse_cycles,
    prefix_moving_cycles,
    symmetric_group,
)


def adjacency_oracle(vertices, connecting):
    """Direct double-loop oracle: u ~ v iff u * v^-1 is in the set."""
    hset = set(connecting)
    size = len(vertices)
    a = np.zeros((size, size), dtype=int)
    for i, u in enumerate(vertices):
        for j, v in enumerate(vertices):
            a[i, j] = compose(u, v.inverse()) in hset
    return a


class TestConstruction:
    def test_sizes_and_degree(self):
        g = build("alternating", full_cycles(5, 5))
        assert g.size == 60
        assert g.degree == 24
        s = build("symmetric", full_cycles(6, 6))
        assert s.size == 720
        assert s.degree == 120

    def test_regularity(self):
        g = build("symmetric", prefix_moving_cycles(5, 3, 2))
        a = g.adjacency_matrix()
        assert (a.sum(axis=0) == g.degree).all()
        assert (a.sum(axis=1) == g.degree).all()
        assert not np.diag(a).any()
        assert (a == a.T).all()

    def test_odd_set_rejected_on_alternating(self):
        with pytest.raises(ValueError):
            build("alternating", full_cycles(5, 4))

    def test_matches_double_loop_oracle(self):
        connecting = [
            parse_cycles("(1,2)", 3),
            parse_cycles("(2,3)", 3),
            parse_cycles("(1,3)", 3),
        ]
        g = from_explicit_set("symmetric", 3, connecting)
        expected = adjacency_oracle(g.vertices, connecting)
        assert (g.adjacency_matrix() == expected).all()

    def test_explicit_set_validation(self):
        with pytest.raises(ValueError):
            from_explicit_set("symmetric", 3, [parse_cycles("(1,2,3)", 3)])


class TestConnectivity:
    def test_alternating_set_splits_symmetric_group(self):
        g = build("symmetric", prefix_moving_cycles(5, 3, 2))
        comps = connected_components(g)
        assert sorted(len(c) for c in comps) == [60, 60]

    def test_connected_on_its_own_group(self):
        assert is_connected(build("alternating", prefix_moving_cycles(5, 3, 2)))
        assert is_connected(build("symmetric", prefix_moving_cycles(5, 4, 3)))

    def test_bipartite_iff_odd_elements(self):
        assert is_bipartite(build("symmetric", prefix_moving_cycles(5, 4, 3)))
        assert not is_bipartite(build("alternating", full_cycles(5, 5)))


class TestDenseSpectrum:
    def test_transposition_graph_on_sym3(self):
        # All transpositions on three points give K_{3,3}: spectrum 3, 0^4, -3.
        connecting = enumerate_connecting_set(full_cycles(3, 2))
        g = from_explicit_set("symmetric", 3, connecting)
        report = dense_spectrum(g)
        assert report.eigenvalues == [(3.0, 1), (0.0, 4), (-3.0, 1)]

    def test_full_cycles_on_alt5(self):
        report = dense_spectrum(build("alternating", full_cycles(5, 5)))
        assert report.lambda1 == 24.0
        assert report.lambda2 == 4.0

    def test_bipartite_spectrum_is_symmetric(self):
        report = dense_spectrum(build("symmetric", prefix_moving_cycles(5, 4, 3)))
        values = [(v, m) for v, m in report.eigenvalues]
        assert values == sorted([(-v, m) for v, m in values], reverse=True)

    def test_cap(self):
        g = build("symmetric", full_cycles(7, 7))
        with pytest.raises(DenseCapExceededError):
            dense_spectrum(g)


class TestNaturalModule:
    def test_matrix_entries(self):
        connecting = enumerate_connecting_set(prefix_moving_cycles(6, 3, 2))
        m = natural_module_matrix(6, connecting)
        assert all(m[j][j] == 0 for j in range(2))  # moved points
        assert all(m[j][j] == 6 for j in range(2, 6))  # (k-1)! C(n-r-1, k-r)
        assert sum(m[i][1] for i in range(6)) == len(connecting)

    def test_spectrum_example(self):
        connecting = enumerate_connecting_set(prefix_moving_cycles(6, 3, 2))
        report = natural_module_spectrum(6, connecting)
        assert report.eigenvalues == [(8.0, 1), (6.0, 3), (2.0, 1), (-4.0, 1)]

    @pytest.mark.parametrize("n,r", [(6, 2), (7, 3), (8, 4), (9, 2)])
    def test_multiplicity_table_trace(self, n, r):
        table = multiplicity_table(n, r)
        assert sum(m for _, m in table) == n
        assert sum(v * m for v, m in table) == natural_trace(n, r)

    def test_at_most_four_distinct_values(self):
        for n, k, r in [(6, 3, 2), (7, 5, 3), (8, 6, 2), (7, 4, 2)]:
            connecting = enumerate_connecting_set(prefix_moving_cycles(n, k, r))
            report = natural_module_spectrum(n, connecting)
            assert len(report.eigenvalues) <= 4


class TestInterlacing:
    def test_star_spectrum(self):
        values = star_spectrum(4, isolated=2)
        assert values == [(2.0, 1), (0.0, 5), (-2.0, 1)]

    def test_edge_deletion_interlaces(self):
        g = build("alternating", prefix_moving_cycles(5, 3, 2))
        report = interlacing_check(g, 0)
        assert report.ok
        assert report.degree == 6

    def test_deleted_matrix_isolated_vertex(self):
        g = build("symmetric", full_cycles(4, 3))
        a = delete_vertex_edges(g, 3)
        assert not a[3].any() and not a[:, 3].any()


class TestWeylSplit:
    def test_trivial_split_gives_equality(self):
        connecting = enumerate_connecting_set(prefix_moving_cycles(5, 3, 2))
        reports = weyl_check(5, connecting, ())
        assert all(rep.holds for rep in reports)
        for rep in reports:
            assert rep.beta1 == rep.beta2 == 0.0
            assert rep.gamma2 <= rep.alpha1 + 1e-9

    def test_last_point_split(self):
        connecting = enumerate_connecting_set(prefix_moving_cycles(6, 3, 2))
        fixing, moving = split_by_last_point(connecting)
        assert (len(fixing), len(moving)) == split_sizes(6, 2)
        reports = weyl_check(6, fixing, moving)
        assert all(rep.holds for rep in reports)

    def test_rejects_overlapping_parts(self):
        connecting = enumerate_connecting_set(prefix_moving_cycles(5, 3, 2))
        with pytest.raises(ValueError):
            weyl_check(5, connecting, connecting[:1])


class TestExports:
    def test_edge_list(self, tmp_path):
        g = from_explicit_set(
            "symmetric", 3, enumerate_connecting_set(full_cycles(3, 2))
        )
        path = tmp_path / "edges.txt"
        export_edge_list(g, path)
        lines = path.read_text().strip().splitlines()
        assert len(lines) == g.size * g.degree // 2

    def test_adjacency_matrix(self, tmp_path):
        g = from_explicit_set(
            "symmetric", 3, enumerate_connecting_set(full_cycles(3, 2))
        )
        path = tmp_path / "adj.txt"
        export_adjacency_matrix(g, path)
        lines = path.read_text().strip().splitlines()
        assert len(lines) == 6
        assert all(len(line) == 6 for line in lines)


def test_vertex_order_is_lexicographic():
    g = build("symmetric", full_cycles(4, 4))
    assert list(g.vertices) == sorted(symmetric_group(4))
    assert g.index_of(g.vertices[5]) == 5
