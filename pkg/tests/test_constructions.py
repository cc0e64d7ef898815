"""Catalogue graphs: the two standard bases, the circle product, reductions."""

from fractions import Fraction

import pytest

from gemkit import (BaseNotCrystallization, LabeledGem, bicolored_cycles,
                    g1_prime, g1_prime_result, g2_prime, g2_prime_result,
                    genus_for, isomorphic, new_graph, order_two_gem,
                    parse_gem, product_gem, regular_genus, run_script,
                    s2xs1_standard, t3_standard)
from gemkit.constructions import (_BLOCK_COLOR_MAP, PRODUCT_BLOCKS,
                                  _data_text, parse_move_script)


class TestOrderTwo:
    def test_shape(self):
        gem = order_two_gem()
        assert gem.graph.num_vertices == 2
        assert gem.graph.n_colors == 4
        assert sorted(gem.labels) == ["p", "q"]
        assert order_two_gem(5).graph.n_colors == 5

    def test_is_sphere_like(self):
        g = order_two_gem(5).graph
        assert g.is_crystallization()
        assert g.is_bipartite()
        assert regular_genus(g).genus == 0


class TestStandardBases:
    def test_s2xs1(self, s2xs1):
        g = s2xs1.graph
        assert g.num_vertices == 8
        assert g.n_colors == 4
        assert sorted(s2xs1.labels) == [f"v{k}" for k in range(8)]
        assert g.is_crystallization()
        assert g.is_bipartite()
        assert g.euler_characteristic() == 0
        assert regular_genus(g).genus == 1

    def test_t3(self, t3):
        g = t3.graph
        assert g.num_vertices == 24
        assert g.n_colors == 4
        assert g.is_crystallization()
        assert g.is_bipartite()
        assert g.euler_characteristic() == 0
        assert regular_genus(g).genus == 3

    def test_t3_cycle_census(self, t3):
        g = t3.graph
        for pair in ((2, 3), (1, 2), (0, 1), (0, 3)):
            assert bicolored_cycles(g, *pair) == [6] * 4
        for pair in ((0, 2), (1, 3)):
            assert bicolored_cycles(g, *pair) == [4] * 6


class TestProduct:
    def test_vertex_counts(self, s2xs1, t3):
        assert product_gem(s2xs1).graph.num_vertices == 64
        assert product_gem(t3).graph.num_vertices == 192
        assert product_gem(order_two_gem()).graph.num_vertices == 16

    def test_result_is_a_gem(self, s2xs1):
        g = product_gem(s2xs1).graph
        assert g.n_colors == 5
        assert g.is_connected()
        assert g.is_bipartite()
        assert g.euler_characteristic() == 0

    def test_blocks_restrict_to_base(self, s2xs1):
        prod = product_gem(s2xs1)
        base = s2xs1.graph
        p2 = base.num_vertices
        for pos, blk in enumerate(PRODUCT_BLOCKS):
            off = pos * p2
            cmap = _BLOCK_COLOR_MAP[blk.rstrip("'")]
            for base_color, block_color in cmap.items():
                for a, b in base.edges(base_color):
                    assert prod.graph.partner(off + a, block_color) == off + b
            for v in range(p2):
                assert prod.labels[off + v] == f"{s2xs1.labels[v]}^{blk}"

    def test_rejects_bad_bases(self, s2xs1):
        with pytest.raises(BaseNotCrystallization):
            product_gem(order_two_gem(5))
        two_spheres = new_graph(4, [
            [(0, 1), (2, 3)], [(0, 1), (2, 3)],
            [(0, 1), (2, 3)], [(0, 1), (2, 3)]])
        with pytest.raises(BaseNotCrystallization):
            product_gem(LabeledGem(two_spheres))


class TestFirstReduction:
    def test_trace(self):
        result = g1_prime_result()
        assert result.trace == (64, 60, 56, 52, 48, 44, 40)

    def test_every_stage_is_a_flat_gem(self, s2xs1):
        gem = product_gem(s2xs1)
        steps = parse_move_script(_data_text("g1prime.moves"))
        assert gem.graph.euler_characteristic() == 0
        for step in steps:
            gem = run_script(gem, [step]).gem
            g = gem.graph
            assert g.is_connected()
            assert g.is_bipartite()
            assert g.euler_characteristic() == 0
        assert g.is_crystallization()

    def test_g_vector(self, g1p):
        g = g1p.graph
        tens = {(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)}
        for i in range(5):
            for j in range(i + 1, 5):
                expected = 10 if (i, j) in tens else 8
                assert g.residue_count((i, j)) == expected, (i, j)

    def test_genus_six(self, g1p):
        g = g1p.graph
        assert genus_for(g, (0, 2, 4, 1, 3)).genus == 6
        best = regular_genus(g)
        assert best.genus == 6
        assert best.permutation == (0, 2, 4, 1, 3)

    def test_shipped_file_matches_builder(self, g1p):
        shipped = parse_gem(_data_text("g1prime.gem"))
        assert shipped.graph.num_vertices == 40
        assert shipped.graph.n_colors == 5
        assert shipped.graph == g1p.graph
        assert shipped.labels == g1p.labels


class TestSecondReduction:
    def test_trace(self):
        result = g2_prime_result()
        assert result.trace == (192, 180, 168, 156, 152, 148, 144,
                                140, 136, 132, 128, 124, 120)

    def test_every_stage_is_a_flat_gem(self, t3):
        gem = product_gem(t3)
        steps = parse_move_script(_data_text("g2prime.moves"))
        for step in steps:
            gem = run_script(gem, [step]).gem
            assert gem.graph.euler_characteristic() == 0
        g = gem.graph
        assert g.is_crystallization()
        assert g.is_bipartite()

    def test_short_cycle_pairs(self, g2p):
        g = g2p.graph
        for pair in ((0, 2), (2, 4), (1, 4), (1, 3), (0, 3)):
            lengths = bicolored_cycles(g, *pair)
            assert lengths == [4] * 30
            assert g.residue_count(pair) == 30

    def test_genus_sixteen(self, g2p):
        g = g2p.graph
        rep = genus_for(g, (0, 2, 4, 1, 3))
        assert rep.genus == Fraction(16)
        assert regular_genus(g).genus == 16

    def test_shipped_file_matches_builder(self, g2p):
        shipped = parse_gem(_data_text("g2prime.gem"))
        assert shipped.graph.num_vertices == 120
        assert shipped.graph == g2p.graph
        assert shipped.labels == g2p.labels
