"""n-torus gems on permutation vertices, checked against an exact
geometric oracle: the affine reflection tiling of the sum-zero hyperplane,
with simplices taken modulo the integer translation lattice."""

from fractions import Fraction
from math import factorial

import pytest

from gemkit import (AuditFailed, BudgetExceeded, ColoredGraph,
                    DimensionUnsupported, audit_cycle_lengths,
                    bicolored_cycles, expected_genus, genus_for, isomorphic,
                    regular_genus, stated_permutation, torus_gem)


# -- oracle ---------------------------------------------------------------------

def fundamental_simplex(n):
    """Vertices: the origin and the n averaged corner points of the tiling."""
    dim = n + 1
    verts = [tuple(Fraction(0) for _ in range(dim))]
    for k in range(1, dim):
        verts.append(tuple(
            Fraction(1 if t < k else 0) - Fraction(k, dim) for t in range(dim)))
    return tuple(verts)


def point_type(p, n):
    """Which translation class of tiling corners the point belongs to."""
    val = -p[0] * (n + 1)
    assert val.denominator == 1
    return int(val) % (n + 1)


def barycenter(simplex):
    dim = len(simplex[0])
    return tuple(
        sum(v[t] for v in simplex) / len(simplex) for t in range(dim))


def frac_key(point):
    return tuple(x - (x.numerator // x.denominator) for x in point)


def facet_plane(facet, apex):
    """The unique wall x_a - x_b = m through `facet` missing `apex`."""
    dim = len(apex)
    found = []
    for a in range(dim):
        for b in range(dim):
            if a == b:
                continue
            diffs = {u[a] - u[b] for u in facet}
            if len(diffs) != 1:
                continue
            m = diffs.pop()
            if m.denominator != 1 or apex[a] - apex[b] == m:
                continue
            found.append((a, b, m))
    # each wall shows up twice, once per orientation
    assert len(found) == 2, found
    return found[0]


def reflect_across(point, plane):
    a, b, m = plane
    out = list(point)
    out[a] = point[b] + m
    out[b] = point[a] - m
    return tuple(out)


def simplex_tiling_quotient(n):
    """The (n+1)-colored adjacency graph of tiles modulo translation."""
    start = fundamental_simplex(n)
    ids = {frac_key(barycenter(start)): 0}
    reps = [start]
    queue = [start]
    while queue:
        simplex = queue.pop()
        for apex in simplex:
            facet = tuple(v for v in simplex if v != apex)
            plane = facet_plane(facet, apex)
            neighbor = tuple(sorted(facet + (reflect_across(apex, plane),)))
            key = frac_key(barycenter(neighbor))
            if key not in ids:
                ids[key] = len(reps)
                reps.append(neighbor)
                queue.append(neighbor)
    size = len(reps)
    invs = [[-1] * size for _ in range(n + 1)]
    for here, simplex in enumerate(reps):
        for apex in simplex:
            facet = tuple(v for v in simplex if v != apex)
            plane = facet_plane(facet, apex)
            neighbor = tuple(sorted(facet + (reflect_across(apex, plane),)))
            there = ids[frac_key(barycenter(neighbor))]
            color = point_type(apex, n)
            assert there != here
            invs[color][here] = there
    return ColoredGraph(invs)


# -- tests ----------------------------------------------------------------------

class TestGeometricOracle:
    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_matches_tiling_quotient(self, n):
        oracle = simplex_tiling_quotient(n)
        assert oracle.num_vertices == factorial(n + 1)
        gem = torus_gem(n)
        assert isomorphic(oracle, gem.graph) is not None


class TestFamily:
    def test_shapes(self):
        for n in (1, 2, 3, 4):
            g = torus_gem(n).graph
            assert g.num_vertices == factorial(n + 1)
            assert g.n_colors == n + 1
            assert g.is_crystallization()
            assert g.is_bipartite()

    def test_smallest_is_double_edge(self):
        g = torus_gem(1).graph
        assert g.num_vertices == 2
        assert bicolored_cycles(g, 0, 1) == [2]

    def test_circle_squared(self):
        assert regular_genus(torus_gem(2).graph).genus == 1

    def test_matches_catalogue_three_torus(self, t3, torus3):
        assert regular_genus(torus3.graph).genus == 3
        assert isomorphic(torus3.graph, t3.graph) is not None

    def test_labels_are_permutation_words(self, torus3):
        assert torus3.has_label("p1234")
        assert torus3.has_label("p4321")

    def test_dimension_and_budget_guards(self):
        with pytest.raises(DimensionUnsupported):
            torus_gem(0)
        with pytest.raises(BudgetExceeded):
            torus_gem(8)
        with pytest.raises(BudgetExceeded):
            torus_gem(4, budget=10)

    def test_cycle_lengths_audit(self, torus4):
        assert audit_cycle_lengths(torus4)
        g = torus4.graph
        perm = stated_permutation(4)
        for k in range(5):
            pair = (perm[k], perm[(k + 1) % 5])
            assert set(bicolored_cycles(g, *pair)) == {4}


class TestStatedPermutation:
    def test_values(self):
        assert stated_permutation(4) == (0, 2, 4, 1, 3)
        assert stated_permutation(5) == (0, 2, 4, 1, 5, 3)
        assert stated_permutation(6) == (0, 2, 4, 6, 1, 3, 5)
        with pytest.raises(DimensionUnsupported):
            stated_permutation(1)

    def test_genus_formula(self):
        assert expected_genus(4) == 16
        assert expected_genus(5) == 181
        assert expected_genus(6) == 1891
        with pytest.raises(DimensionUnsupported):
            expected_genus(3)


class TestGenusValues:
    def test_dimension_four_matches_reduced_catalogue_gem(self, torus4, g2p):
        g = torus4.graph
        assert genus_for(g, stated_permutation(4)).genus == expected_genus(4)
        assert isomorphic(g, g2p.graph, allow_color_perm=True) is not None

    def test_dimension_five(self):
        gem = torus_gem(5)
        g = gem.graph
        assert g.num_vertices == 720
        assert audit_cycle_lengths(gem)
        assert genus_for(g, stated_permutation(5)).genus == 181

    def test_dimension_six(self):
        gem = torus_gem(6)
        assert gem.graph.num_vertices == 5040
        assert genus_for(gem.graph, stated_permutation(6)).genus \
            == expected_genus(6)

    def test_dimension_seven(self):
        gem = torus_gem(7)
        assert gem.graph.num_vertices == 40320
        assert genus_for(gem.graph, stated_permutation(7)).genus \
            == expected_genus(7)
