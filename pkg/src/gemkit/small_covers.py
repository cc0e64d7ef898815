"""Small covers over the product of two triangles.

The base polytope is the product of two triangles: a simple 4-polytope with
nine vertices and six facets, three coming from each factor.  A
characteristic function places a nonzero vector of (Z/2)^4 on every facet
so that the four facets around any polytope vertex receive a basis; gluing
16 copies of the polytope indexed by (Z/2)^4 according to these vectors
yields a closed 4-manifold, the small cover.  The polytope carries a
staircase triangulation by six 4-simplices, so each cover inherits a
colored triangulation with 96 simplices and hence a 5-colored gem on 96
vertices.

This module enumerates the characteristic functions (normalizing the first
four facet vectors to the standard basis), builds the cover gems, tabulates
their 64-vertex middle subgraph in compact row/column form, and glues each
gem down to a 52-vertex crystallization.
"""

from dataclasses import dataclass

from .core import LabeledGem, new_graph
from .errors import AuditFailed, InvalidCharacteristicFunction
from .invariants import bicolored_cycles
from .iso import canonical_signature
from .moves import ScriptStep, run_script


# -- the polytope ---------------------------------------------------------------

# Facet k (1-based) drops one corner of one triangle factor: (factor,
# dropped corner).  Polytope vertices are named (i+j, j) after the corner
# pair (i, j) they come from.
_FACET_DROPS = ((1, 2), (1, 1), (0, 2), (0, 1), (1, 0), (0, 0))


def _facet_contains(facet0, i, j):
    factor, dropped = _FACET_DROPS[facet0]
    return (i, j)[factor] != dropped


def facet_vertex_labels(facet):
    """Vertex labels (i+j, j) lying on the 1-based facet."""
    return tuple((i + j, j) for i in range(3) for j in range(3)
                 if _facet_contains(facet - 1, i, j))


def _gf2_rank(vectors):
    pivots = {}
    for v in vectors:
        while v:
            lead = 1 << (v.bit_length() - 1)
            if lead not in pivots:
                pivots[lead] = v
                break
            v ^= pivots[lead]
    return len(pivots)


def validate_characteristic_function(masks):
    """Check six facet vectors (4-bit ints) against the vertex basis rule.

    Returns the vectors as a tuple, or raises InvalidCharacteristicFunction
    naming the offending facet or polytope vertex.
    """
    masks = tuple(masks)
    if len(masks) != 6:
        raise InvalidCharacteristicFunction(
            f"need 6 facet vectors, got {len(masks)}")
    for pos, m in enumerate(masks):
        if not isinstance(m, int) or not 1 <= m <= 15:
            raise InvalidCharacteristicFunction(
                f"facet {pos + 1} vector {m!r} is not a nonzero (Z/2)^4 value")
    for i in range(3):
        for j in range(3):
            around = tuple(f for f in range(6) if _facet_contains(f, i, j))
            if _gf2_rank(masks[f] for f in around) != 4:
                raise InvalidCharacteristicFunction(
                    "facets %s meeting at polytope vertex (%d,%d) do not form"
                    " a basis" % (",".join(str(f + 1) for f in around),
                                  i + j, j))
    return masks


# The seven valid assignments with the standard basis on facets 1..4, as
# (facet-5, facet-6) vectors, in catalogue order.
CANONICAL_PAIRS = ((3, 12), (3, 15), (3, 13), (3, 14), (15, 12), (7, 12), (11, 12))

_ENUM_CACHE = None


def enumerate_characteristic_functions():
    """All characteristic functions fixing the standard basis on facets 1..4.

    Brute force over both free facet vectors, then checked against the
    catalogue: exactly seven assignments survive the nine vertex basis
    conditions.  Returns them as 6-tuples of 4-bit ints, catalogue order.
    """
    global _ENUM_CACHE
    if _ENUM_CACHE is None:
        found = set()
        for a in range(1, 16):
            for b in range(1, 16):
                try:
                    validate_characteristic_function((1, 2, 4, 8, a, b))
                except InvalidCharacteristicFunction:
                    continue
                found.add((a, b))
        if found != set(CANONICAL_PAIRS):
            raise AuditFailed(
                f"characteristic function search found {sorted(found)}")
        _ENUM_CACHE = tuple((1, 2, 4, 8, a, b) for a, b in CANONICAL_PAIRS)
    return _ENUM_CACHE


def _basis_combo(basis, v):
    # the unique GF(2) combination of the 4 basis vectors giving v
    for combo in range(16):
        acc = 0
        for k in range(4):
            if combo >> k & 1:
                acc ^= basis[k]
        if acc == v:
            return combo
    raise InvalidCharacteristicFunction(f"{v} is not in the span of {basis}")


def dj_equivalent(l1, l2):
    """Whether a linear automorphism of (Z/2)^4 maps one function to the other.

    Facet labels stay fixed; only the group coordinates may move.  Facets
    1..4 meet at a polytope vertex, so their vectors form a basis and force
    the candidate map, which is then checked on facets 5 and 6.
    """
    m1 = validate_characteristic_function(l1)
    m2 = validate_characteristic_function(l2)
    for f in (4, 5):
        combo = _basis_combo(m1[:4], m1[f])
        image = 0
        for k in range(4):
            if combo >> k & 1:
                image ^= m2[k]
        if image != m2[f]:
            return False
    return True


# -- cover gems -------------------------------------------------------------------

def mask_word(mask):
    """Word naming a (Z/2)^4 vector: '0' or its set coordinates, ascending."""
    if mask == 0:
        return "0"
    return "".join(str(b + 1) for b in range(4) if mask >> b & 1)


def word_mask(word):
    """Inverse of mask_word."""
    if word == "0":
        return 0
    out = 0
    for ch in word:
        out |= 1 << (int(ch) - 1)
    return out


# Staircase triangulation of one polytope copy into six 4-simplices.  Per
# copy, simplices share 3-faces as listed by color; every (simplex, color)
# pair not listed is a boundary face lying on the given 1-based facet.
_INTERNAL = {1: ((2, 4), (3, 5)), 2: ((1, 2), (5, 6)), 3: ((2, 3), (4, 5))}
_BOUNDARY = {
    (1, 0): 6, (1, 1): 4, (1, 3): 2, (1, 4): 1,
    (2, 0): 6, (2, 4): 1,
    (3, 0): 6, (3, 2): 2, (3, 4): 3,
    (4, 0): 5, (4, 2): 4, (4, 4): 1,
    (5, 0): 5, (5, 4): 3,
    (6, 0): 5, (6, 1): 2, (6, 3): 4, (6, 4): 3,
}


def small_cover_gem(masks):
    """Build the 96-vertex 5-colored gem of the cover for `masks`.

    `masks` is a characteristic function (six facet vectors) or a 1-based
    index into the canonical seven.  Gem vertices are the simplices of the
    16 polytope copies, labeled T<word>^<sheet> where <word> names the
    (Z/2)^4 copy and <sheet> the simplex 1..6.  Simplices glue along the
    staircase faces within a copy; a boundary face on facet F joins copy w
    to copy w + lambda(F).
    """
    if isinstance(masks, int):
        masks = enumerate_characteristic_functions()[masks - 1]
    masks = validate_characteristic_function(masks)

    def vid(w, sheet):
        return w * 6 + sheet - 1

    pairs = [[] for _ in range(5)]
    for color, joins in _INTERNAL.items():
        for s, t in joins:
            pairs[color].extend((vid(w, s), vid(w, t)) for w in range(16))
    for (sheet, color), facet in _BOUNDARY.items():
        step = masks[facet - 1]
        pairs[color].extend(
            (vid(w, sheet), vid(w ^ step, sheet))
            for w in range(16) if w < w ^ step)
    graph = new_graph(5, pairs, num_vertices=96)
    counts = tuple(
        graph.residue_count(tuple(c for c in range(5) if c != missing))
        for missing in range(5))
    if counts != (1, 2, 3, 2, 1):
        raise AuditFailed(f"cover gem has complement residue counts {counts}")
    if graph.euler_characteristic() != 1 or graph.is_bipartite():
        raise AuditFailed("cover gem fails the basic invariant audit")
    labels = tuple(
        f"T{mask_word(w)}^{sheet}" for w in range(16) for sheet in range(1, 7))
    return LabeledGem(graph, labels)


def infer_characteristic_function(gem):
    """Read the six facet vectors back off a cover gem.

    Sheet 1 crosses facets 6, 4, 2 and 1 with colors 0, 1, 3 and 4; sheets
    3 and 4 cross facets 3 and 5 with colors 4 and 0.
    """
    graph = gem.graph

    def across(start, color):
        twin = gem.label_of(graph.partner(gem.vertex(start), color))
        return word_mask(_label_word(twin))

    masks = (across("T0^1", 4), across("T0^1", 3), across("T0^3", 4),
             across("T0^1", 1), across("T0^4", 0), across("T0^1", 0))
    return validate_characteristic_function(masks)


# -- compact form -----------------------------------------------------------------

def _label_word(label):
    return label[1:label.index("^")]


def _label_sheet(label):
    return int(label[label.index("^") + 1:])


def _cycle_labels(gem, start, colors):
    """Labels along the bicolored cycle through `start`, in walk order."""
    graph = gem.graph
    v0 = gem.vertex(start)
    out = []
    v, flip = v0, 0
    while True:
        out.append(gem.label_of(v))
        v = graph.partner(v, colors[flip])
        flip ^= 1
        if v == v0:
            break
    return tuple(out)


def _word_partition(gem, colors, start_sheet):
    """Word classes of the bicolored cycles met from the given sheet."""
    parts = set()
    for w in range(16):
        start = f"T{mask_word(w)}^{start_sheet}"
        parts.add(frozenset(
            _label_word(l) for l in _cycle_labels(gem, start, colors)))
    if sorted(len(p) for p in parts) != [4, 4, 4, 4]:
        raise AuditFailed(
            f"colors {colors} cycles do not split the words into 4+4+4+4")
    return parts


def middle_subgraph(gem):
    """The 64-vertex part of a cover gem on sheets 2..5, colors 0, 1, 3, 4.

    Colors are renumbered 0..3 in that order.  Every kept-color edge at a
    kept vertex stays among sheets 2..5, so this is an induced 4-colored
    gem in its own right.
    """
    graph = gem.graph
    keep = [v for v in range(graph.num_vertices)
            if 2 <= _label_sheet(gem.label_of(v)) <= 5]
    index = {v: k for k, v in enumerate(keep)}
    pairs = []
    for c in (0, 1, 3, 4):
        acc = []
        for v in keep:
            u = graph.partner(v, c)
            if u not in index:
                raise AuditFailed(f"middle subgraph not closed under color {c}")
            if v < u:
                acc.append((index[v], index[u]))
        pairs.append(acc)
    sub = new_graph(4, pairs, num_vertices=len(keep))
    return LabeledGem(sub, tuple(gem.label_of(v) for v in keep))


@dataclass(frozen=True)
class CompactForm:
    """4x4 word table: rows from {0,1}-cycles, columns from {3,4}-cycles."""

    index: int   # 1-based position of the cover in the catalogue
    rows: tuple  # four rows of four subscript words

    def column(self, c):
        return tuple(row[c] for row in self.rows)


# Stored table layouts per catalogue index.  Row sets and column sets are
# recomputed from each gem and must match these cell for cell.
COMPACT_LAYOUTS = (
    (("1", "134", "234", "2"), ("0", "34", "1234", "12"),
     ("3", "4", "124", "123"), ("13", "14", "24", "23")),
    (("1", "234", "134", "2"), ("0", "1234", "34", "12"),
     ("3", "124", "4", "123"), ("13", "24", "14", "23")),
    (("1", "34", "1234", "2"), ("0", "134", "234", "12"),
     ("3", "14", "24", "123"), ("13", "4", "124", "23")),
    (("1", "1234", "34", "2"), ("0", "234", "134", "12"),
     ("3", "24", "14", "123"), ("13", "124", "4", "23")),
    (("1", "134", "2", "234"), ("0", "34", "12", "1234"),
     ("3", "4", "123", "124"), ("13", "14", "23", "24")),
    (("1", "134", "24", "23"), ("0", "34", "124", "123"),
     ("3", "4", "1234", "12"), ("13", "14", "234", "2")),
    (("1", "134", "23", "24"), ("0", "34", "123", "124"),
     ("3", "4", "12", "1234"), ("13", "14", "2", "234")),
)

_MIDDLE_SIGNATURE = None


def compact_form(gem):
    """Tabulate the middle subgraph of a cover gem in compact form.

    Recomputes the row and column word classes from the gem's cycles and
    aligns them with the stored layout for its characteristic function; any
    disagreement is a hard error.  Also checks the middle subgraph itself:
    64 vertices, every {0,1}- and {3,4}-cycle of length 8, and a single
    isomorphism class shared by all covers.
    """
    global _MIDDLE_SIGNATURE
    masks = infer_characteristic_function(gem)
    try:
        idx = CANONICAL_PAIRS.index(masks[4:]) + 1
    except ValueError:
        raise AuditFailed(f"no stored table layout for facet vectors {masks}")

    middle = middle_subgraph(gem)
    if middle.graph.num_vertices != 64:
        raise AuditFailed("middle subgraph does not have 64 vertices")
    for a, b in ((0, 1), (2, 3)):
        if set(bicolored_cycles(middle.graph, a, b)) != {8}:
            raise AuditFailed(
                f"middle subgraph has a {a},{b} cycle of length other than 8")
    if _MIDDLE_SIGNATURE is None:
        if idx == 1:
            _MIDDLE_SIGNATURE = canonical_signature(middle.graph)
        else:
            _MIDDLE_SIGNATURE = canonical_signature(
                middle_subgraph(small_cover_gem(1)).graph)
    if canonical_signature(middle.graph) != _MIDDLE_SIGNATURE:
        raise AuditFailed("middle subgraph differs from the first cover's")

    rows = _word_partition(gem, (0, 1), 2)
    if rows != _word_partition(gem, (0, 1), 3):
        raise AuditFailed("row classes differ between the two sheet pairs")
    cols = _word_partition(gem, (3, 4), 2)
    if cols != _word_partition(gem, (3, 4), 4):
        raise AuditFailed("column classes differ between the two sheet pairs")
    layout = COMPACT_LAYOUTS[idx - 1]
    for row in layout:
        if frozenset(row) not in rows:
            raise AuditFailed(f"stored row {row} is not a {{0,1}}-cycle class")
    for c in range(4):
        col = tuple(row[c] for row in layout)
        if frozenset(col) not in cols:
            raise AuditFailed(f"stored column {col} is not a {{3,4}}-cycle class")
    return CompactForm(idx, layout)


# -- reduction to a crystallization -----------------------------------------------

def reduce_to_crystallization(gem, form=None):
    """Glue a 96-vertex cover gem down to a 52-vertex crystallization.

    Four gluings: the {0,4}-cycle through T0^1 folds onto its color-2
    partners, likewise the {0,4}-cycle through T0^6; the last table row
    (sheets 2 and 4) folds onto its color-3 partners; and the surviving
    part of the third table column (sheets 2 and 3) folds onto its color-1
    partners.  Returns the script result; its trace is (96, 88, 80, 64, 52).
    """
    if form is None:
        form = compact_form(gem)
    graph = gem.graph

    def partners(labels, color):
        return tuple(
            gem.label_of(graph.partner(gem.vertex(l), color)) for l in labels)

    steps = []
    for k, start in enumerate(("T0^1", "T0^6")):
        lam = _cycle_labels(gem, start, (0, 4))
        steps.append(ScriptStep("glue", (2,), (lam, partners(lam, 2)), k + 1))
    row = form.rows[3]
    lam = tuple(f"T{w}^{sheet}" for sheet in (2, 4) for w in row)
    steps.append(ScriptStep("glue", (3,), (lam, partners(lam, 3)), 3))
    # the word shared by the row and the column is already gone
    gone = set(row)
    col = form.column(2)
    lam = tuple(f"T{w}^{sheet}" for sheet in (2, 3) for w in col if w not in gone)
    steps.append(ScriptStep("glue", (1,), (lam, partners(lam, 1)), 4))

    result = run_script(gem, steps)
    final = result.gem.graph
    if result.trace != (96, 88, 80, 64, 52):
        raise AuditFailed(f"reduction trace is {result.trace}")
    if (not final.is_crystallization() or final.euler_characteristic() != 1
            or final.is_bipartite()):
        raise AuditFailed("reduced cover gem fails the crystallization audit")
    return result


def reduced_cover(index):
    """Build catalogue cover `index` (1-based) and reduce it."""
    gem = small_cover_gem(index)
    return reduce_to_crystallization(gem, compact_form(gem))


def classify_covers():
    """Isomorphism classes of the seven reduced covers, as 1-based index tuples."""
    classes = {}
    for i in range(1, 8):
        sig = canonical_signature(reduced_cover(i).gem.graph)
        classes.setdefault(sig, []).append(i)
    return tuple(sorted(tuple(v) for v in classes.values()))
