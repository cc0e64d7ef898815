"""Edge-colored regular multigraphs stored as one involution per color.

A graph on vertices 0..V-1 with colors 0..n carries, for every color c, a
fixed-point-free involution: involutions[c][v] is the unique vertex joined to
v by the c-colored edge.  That representation makes "properly edge-colored
and (n+1)-regular" true by construction; the validator only has to check
that each array really is a fixed-point-free involution.

Vertices are dense ints.  Human-readable names live in a side table
(LabeledGem), never inside the graph itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    ColorOutOfRange,
    DuplicateVertexInColor,
    LoopEdge,
    OddVertexCount,
    VertexCountMismatch,
)


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


@dataclass(frozen=True)
class Components:
    """Connected components with deterministic ids.

    Component ids are 0..count-1 in order of each component's smallest
    vertex, so two runs over the same graph always agree.
    """

    labels: tuple[int, ...]
    count: int

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.labels):
            out[c].append(v)
        return out


class ColoredGraph:
    """Immutable properly edge-colored (n+1)-regular multigraph."""

    __slots__ = ("n_colors", "num_vertices", "involutions", "_hash")

    def __init__(self, involutions):
        invs = tuple(tuple(col) for col in involutions)
        if len(invs) < 2:
            raise ColorOutOfRange(f"need at least 2 colors, got {len(invs)}")
        nv = len(invs[0])
        if nv == 0 or nv % 2:
            raise OddVertexCount(f"number of vertices must be even and positive, got {nv}")
        for c, col in enumerate(invs):
            if len(col) != nv:
                raise VertexCountMismatch(
                    f"color {c} defined on {len(col)} vertices, expected {nv}")
            for v, w in enumerate(col):
                if not 0 <= w < nv:
                    raise VertexCountMismatch(f"color {c}: partner {w} of vertex {v} out of range")
                if w == v:
                    raise LoopEdge(f"color {c}: vertex {v} matched to itself")
                if col[w] != v:
                    raise DuplicateVertexInColor(
                        f"color {c}: not an involution at vertices {v}, {w}")
        self.n_colors = len(invs)
        self.num_vertices = nv
        self.involutions = invs
        self._hash = None

    # -- basics --------------------------------------------------------------

    def partner(self, v: int, color: int) -> int:
        self._check_color(color)
        return self.involutions[color][v]

    def colors(self) -> range:
        return range(self.n_colors)

    def edges(self, color: int) -> list[tuple[int, int]]:
        """The color's perfect matching as sorted (small, large) pairs."""
        self._check_color(color)
        col = self.involutions[color]
        return [(v, col[v]) for v in range(self.num_vertices) if v < col[v]]

    def _check_color(self, color: int) -> None:
        if not 0 <= color < self.n_colors:
            raise ColorOutOfRange(f"color {color} not in 0..{self.n_colors - 1}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, ColoredGraph)
                and self.involutions == other.involutions)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.involutions)
        return self._hash

    def __repr__(self) -> str:
        return f"ColoredGraph(colors={self.n_colors}, vertices={self.num_vertices})"

    # -- components ----------------------------------------------------------

    def components(self, colors=None) -> Components:
        """Components of the spanning subgraph keeping only `colors` edges.

        colors=None means all colors.  Every vertex is kept, so dropping all
        colors yields num_vertices singleton components.
        """
        if colors is None:
            colors = range(self.n_colors)
        else:
            colors = sorted(set(colors))
            for c in colors:
                self._check_color(c)
        uf = UnionFind(self.num_vertices)
        for c in colors:
            col = self.involutions[c]
            for v in range(self.num_vertices):
                w = col[v]
                if v < w:
                    uf.union(v, w)
        ids: dict[int, int] = {}
        labels = []
        for v in range(self.num_vertices):
            root = uf.find(v)
            if root not in ids:
                ids[root] = len(ids)
            labels.append(ids[root])
        return Components(tuple(labels), len(ids))

    def residue_count(self, colors) -> int:
        """Number of components after keeping only the given edge colors."""
        return self.components(colors).count

    def is_connected(self) -> bool:
        return self.components().count == 1

    # -- manifold-flavored invariants -----------------------------------------

    def is_bipartite(self) -> bool:
        side = [-1] * self.num_vertices
        for start in range(self.num_vertices):
            if side[start] >= 0:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for col in self.involutions:
                    w = col[v]
                    if side[w] < 0:
                        side[w] = side[v] ^ 1
                        stack.append(w)
                    elif side[w] == side[v]:
                        return False
        return True

    def is_contracted(self) -> bool:
        """True when dropping any single color leaves a connected graph."""
        all_colors = set(range(self.n_colors))
        return all(
            self.components(all_colors - {j}).count == 1
            for j in all_colors)

    def is_crystallization(self) -> bool:
        return self.is_connected() and self.is_contracted()

    def face_counts(self) -> tuple[int, ...]:
        """Counts (N_0, ..., N_n) of k-dimensional faces of the encoded complex.

        N_k is the number of components left after deleting, for each
        (k+1)-subset of colors, the edges of the other colors, summed over
        subsets.  In particular N_n = num_vertices.
        """
        all_colors = tuple(range(self.n_colors))
        out = []
        for k in range(self.n_colors):
            total = 0
            for kept in combinations(all_colors, self.n_colors - 1 - k):
                total += self.components(kept).count
            out.append(total)
        return tuple(out)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * nk for k, nk in enumerate(self.face_counts()))

    # -- relabeling ----------------------------------------------------------

    def relabel(self, new_id) -> "ColoredGraph":
        """Relabel vertices; new_id[v] is the new id of old vertex v."""
        new_id = list(new_id)
        if sorted(new_id) != list(range(self.num_vertices)):
            raise VertexCountMismatch("relabeling is not a bijection on vertex ids")
        invs = []
        for col in self.involutions:
            new_col = [0] * self.num_vertices
            for v, w in enumerate(col):
                new_col[new_id[v]] = new_id[w]
            invs.append(tuple(new_col))
        return ColoredGraph(invs)

    def permute_colors(self, new_color) -> "ColoredGraph":
        """Recolor edges; new_color[c] is the new color of old color c."""
        new_color = list(new_color)
        if sorted(new_color) != list(range(self.n_colors)):
            raise ColorOutOfRange("color permutation is not a bijection on colors")
        invs: list = [None] * self.n_colors
        for c, col in enumerate(self.involutions):
            invs[new_color[c]] = col
        return ColoredGraph(invs)


def new_graph(n_colors: int, pairs_per_color, num_vertices: int | None = None) -> ColoredGraph:
    """Build a graph from one edge list per color, validating as we go.

    Vertex count defaults to 1 + the largest id mentioned.  Each color's
    pairs must tile the whole vertex set exactly once (perfect matching).
    """
    pairs_per_color = [list(p) for p in pairs_per_color]
    if len(pairs_per_color) != n_colors:
        raise ColorOutOfRange(
            f"got edge lists for {len(pairs_per_color)} colors, expected {n_colors}")
    if num_vertices is None:
        num_vertices = 0
        for pairs in pairs_per_color:
            for a, b in pairs:
                num_vertices = max(num_vertices, a + 1, b + 1)
    if num_vertices <= 0 or num_vertices % 2:
        raise OddVertexCount(f"number of vertices must be even and positive, got {num_vertices}")
    invs = []
    for c, pairs in enumerate(pairs_per_color):
        col = [-1] * num_vertices
        for a, b in pairs:
            if not (0 <= a < num_vertices and 0 <= b < num_vertices):
                raise VertexCountMismatch(
                    f"color {c}: edge {a}-{b} mentions a vertex outside 0..{num_vertices - 1}")
            if a == b:
                raise LoopEdge(f"color {c}: loop at vertex {a}")
            if col[a] != -1:
                raise DuplicateVertexInColor(f"color {c}: vertex {a} used twice")
            if col[b] != -1:
                raise DuplicateVertexInColor(f"color {c}: vertex {b} used twice")
            col[a], col[b] = b, a
        missing = col.count(-1)
        if missing:
            raise VertexCountMismatch(
                f"color {c}: {missing} of {num_vertices} vertices have no edge")
        invs.append(tuple(col))
    return ColoredGraph(invs)


class LabeledGem:
    """A graph plus a side table of unique human-readable vertex names."""

    __slots__ = ("graph", "labels", "_index")

    def __init__(self, graph: ColoredGraph, labels=None):
        if labels is None:
            labels = tuple(str(v) for v in range(graph.num_vertices))
        labels = tuple(labels)
        if len(labels) != graph.num_vertices:
            raise VertexCountMismatch(
                f"{len(labels)} labels for {graph.num_vertices} vertices")
        index = {}
        for v, name in enumerate(labels):
            if name in index:
                raise VertexCountMismatch(f"duplicate vertex label {name!r}")
            index[name] = v
        self.graph = graph
        self.labels = labels
        self._index = index

    def vertex(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no vertex labeled {label!r}") from None

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def has_label(self, label: str) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        return f"LabeledGem({self.graph!r})"
