"""Colored-graph isomorphism and canonical signatures.

The workhorse is the traversal code: starting from a root, walk the graph
breadth-first, always trying colors in a fixed order, numbering vertices in
discovery order.  Because every vertex has exactly one partner per color,
the walk is fully determined by the root (and a color relabeling), so two
codes are equal exactly when a color-preserving isomorphism maps one root
to the other; the isomorphism is the pairing of discovery orders.  The
canonical signature minimizes the code over all roots, and over all color
bijections when allow_color_perm is set.  No hashing, no refinement, and a
witness falls out of the search for free.
"""

from __future__ import annotations

from itertools import permutations

from .core import ColoredGraph
from .errors import ColorCountMismatch
from .invariants import bicolored_cycles

_IDENTITY_CACHE: dict = {}


def _component_vertex_lists(graph: ColoredGraph) -> list[list[int]]:
    comps = graph.components()
    return comps.members()


def _code_from(graph: ColoredGraph, root: int, color_order, best=None):
    """Traversal code of root's component, abandoned early if it exceeds best.

    Returns (code, discovery_order) or (None, None) once code > best is
    certain.  color_order[r] is the actual color explored in slot r.
    """
    invs = graph.involutions
    new_id = {root: 0}
    order = [root]
    code: list[int] = []
    checking = best is not None  # still tracking equality with best
    pos = 0
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        for c in color_order:
            w = invs[c][v]
            wid = new_id.get(w)
            if wid is None:
                wid = len(order)
                new_id[w] = wid
                order.append(w)
            if checking:
                ref = best[pos]
                if wid > ref:
                    return None, None
                if wid < ref:
                    checking = False
            code.append(wid)
            pos += 1
    if checking and len(code) > len(best):
        # longer code with equal prefix counts as larger (bigger component)
        return None, None
    return code, order


def _min_component_code(graph: ColoredGraph, vertices, color_order):
    """Lexicographically least traversal code over roots in one component."""
    best = None
    best_order = None
    for root in vertices:
        code, order = _code_from(graph, root, color_order, best)
        if code is not None:
            best, best_order = code, order
    return best, best_order


def _graph_code(graph: ColoredGraph, color_order):
    """Sorted component codes plus their witness orders."""
    pieces = []
    for comp in _component_vertex_lists(graph):
        code, order = _min_component_code(graph, comp, color_order)
        pieces.append((tuple(code), order))
    pieces.sort(key=lambda p: (len(p[0]), p[0]))
    return pieces


def _pair_fingerprint(graph: ColoredGraph):
    """Cycle-length census for every color pair; cheap isomorphism filter."""
    out = {}
    for i in range(graph.n_colors):
        for j in range(i + 1, graph.n_colors):
            out[(i, j)] = tuple(bicolored_cycles(graph, i, j))
    return out


def _fingerprints_match(fp1, fp2, cmap) -> bool:
    for (i, j), lengths in fp1.items():
        a, b = cmap[i], cmap[j]
        if a > b:
            a, b = b, a
        if fp2[(a, b)] != lengths:
            return False
    return True


def _identity_code(graph: ColoredGraph):
    cached = _IDENTITY_CACHE.get(graph)
    if cached is None:
        cached = _graph_code(graph, tuple(range(graph.n_colors)))
        _IDENTITY_CACHE[graph] = cached
    return cached


def canonical_signature(graph: ColoredGraph, allow_color_perm: bool = False) -> str:
    """Hashable string equal for two graphs iff they are isomorphic
    (optionally up to a bijection of the palette)."""
    if allow_color_perm:
        best = None
        for cmap in permutations(range(graph.n_colors)):
            pieces = _graph_code(graph, cmap)
            key = [p[0] for p in pieces]
            if best is None or key < best:
                best = key
        codes = best
    else:
        codes = [p[0] for p in _identity_code(graph)]
    body = "|".join(",".join(map(str, code)) for code in codes)
    return f"{graph.n_colors};{graph.num_vertices};{body}"


def _witness_from_pieces(g1, g2, pieces1, pieces2, cmap):
    """Align equal-coded components and replay-check the resulting map."""
    if [p[0] for p in pieces1] != [p[0] for p in pieces2]:
        return None
    vmap = [-1] * g1.num_vertices
    for (_, order1), (_, order2) in zip(pieces1, pieces2):
        for a, b in zip(order1, order2):
            vmap[a] = b
    # replay every edge through the claimed maps
    if sorted(vmap) != list(range(g2.num_vertices)):
        return None
    for c in range(g1.n_colors):
        inv1 = g1.involutions[c]
        inv2 = g2.involutions[cmap[c]]
        for v in range(g1.num_vertices):
            if vmap[inv1[v]] != inv2[vmap[v]]:
                return None
    return tuple(vmap)


def isomorphic(g1: ColoredGraph, g2: ColoredGraph, allow_color_perm: bool = False):
    """Search for an isomorphism.

    Returns (vertex_map, color_map) with vertex_map[v1] = v2 and
    color_map[c1] = c2, or None.  The witness is verified edge-by-edge
    before being returned.
    """
    if g1.n_colors != g2.n_colors:
        raise ColorCountMismatch(
            f"cannot compare graphs with {g1.n_colors} and {g2.n_colors} colors")
    if g1.num_vertices != g2.num_vertices:
        return None
    fp1, fp2 = _pair_fingerprint(g1), _pair_fingerprint(g2)
    pieces1 = _identity_code(g1)
    if allow_color_perm:
        cmaps = permutations(range(g1.n_colors))
    else:
        cmaps = [tuple(range(g1.n_colors))]
    for cmap in cmaps:
        if not _fingerprints_match(fp1, fp2, cmap):
            continue
        # role order r explores color cmap[r] in g2 against color r in g1
        pieces2 = _graph_code(g2, cmap)
        witness = _witness_from_pieces(g1, g2, pieces1, pieces2, cmap)
        if witness is not None:
            return witness, tuple(cmap)
    return None


def brute_force_isomorphic(g1: ColoredGraph, g2: ColoredGraph,
                           allow_color_perm: bool = False) -> bool:
    """Exhaustive backtracking over vertex bijections; test oracle for small V."""
    if g1.n_colors != g2.n_colors:
        raise ColorCountMismatch(
            f"cannot compare graphs with {g1.n_colors} and {g2.n_colors} colors")
    if g1.num_vertices != g2.num_vertices:
        return False
    n = g1.num_vertices
    if allow_color_perm:
        cmaps = list(permutations(range(g1.n_colors)))
    else:
        cmaps = [tuple(range(g1.n_colors))]

    def extend(vmap, used, v, cmap) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w]:
                continue
            vmap[v] = w
            ok = True
            for c in range(g1.n_colors):
                p = g1.involutions[c][v]
                q = g2.involutions[cmap[c]][w]
                if vmap[p] != -1 and vmap[p] != q:
                    ok = False
                    break
                if vmap[p] == -1 and used[q] and q != w:
                    ok = False
                    break
            if ok:
                used[w] = True
                if extend(vmap, used, v + 1, cmap):
                    return True
                used[w] = False
            vmap[v] = -1
        return False

    for cmap in cmaps:
        if extend([-1] * n, [False] * n, 0, cmap):
            return True
    return False
