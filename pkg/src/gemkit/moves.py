"""Dipole moves, polyhedral gluing, and scripted move sequences.

All moves funnel through one excision routine: delete a set of vertices
paired off by a bijection phi, and for every color that is not part of the
move's defining colors, splice the freed edge ends together pairwise.  The
routine checks its own consistency (interior edges must be phi-compatible,
no survivor may keep a pointer into the removed set) and revalidates the
result, so a move either returns a well-formed graph or raises.

Surviving vertices keep their relative order; results are compacted to
dense ids and every move reports the old-to-new map (-1 for removed).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import ColoredGraph, LabeledGem
from .errors import (
    GraphValidationError,
    GemError,
    MissingIColoredMatching,
    MoveError,
    NotADipole,
    PhiNotIsomorphism,
    PreconditionFailed,
    ResultInvalid,
    SameComponentInIHat,
)


@dataclass(frozen=True)
class DipoleSpec:
    """Vertices v1, v2 joined by exactly the edges of `colors`."""

    v1: int
    v2: int
    colors: frozenset

    def order(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class GlueSpec:
    """Remove lambda1 and lambda2, splicing across the `color`-matching.

    lambda2[k] is phi(lambda1[k]).  phi must be a color-preserving
    isomorphism of the induced subgraphs, and every lambda1[k] must be
    joined to its image by a `color`-colored edge.  Whether the two sides
    bound balls in the encoded complex is the caller's obligation; only the
    combinatorial preconditions are checked here.
    """

    color: int
    lambda1: tuple
    lambda2: tuple


@dataclass(frozen=True)
class CombinedSpec:
    """Simultaneous cancellation of an interlocked 2- and 3-dipole.

    pair = (v1, v2) joined by a k-colored edge, pair_image = (v1p, v2p)
    likewise; v1-v1p and v2-v2p each carry both an i- and a j-colored edge.
    """

    k: int
    i: int
    j: int
    pair: tuple
    pair_image: tuple


@dataclass(frozen=True)
class MoveResult:
    graph: ColoredGraph
    vertex_map: tuple  # old id -> new id, -1 for removed vertices
    added: tuple = ()  # ids (in the new graph) of vertices the move created


def _excise(graph: ColoredGraph, phi: dict, excluded_colors) -> MoveResult:
    lam1 = set(phi)
    lam2 = set(phi.values())
    doomed = lam1 | lam2
    invs = [list(col) for col in graph.involutions]
    for c in range(graph.n_colors):
        if c in excluded_colors:
            continue
        col = invs[c]
        for u, w in phi.items():
            p = col[u]
            q = col[w]
            if p in lam1:
                if q != phi[p]:
                    raise ResultInvalid(
                        f"color {c}: interior edge {u}-{p} has no matching image edge")
                continue
            if p in lam2 or q in doomed:
                raise ResultInvalid(
                    f"color {c}: edge at vertex {u} crosses into the removed set")
            col[p] = q
            col[q] = p
    vmap = [-1] * graph.num_vertices
    fresh = 0
    for v in range(graph.num_vertices):
        if v not in doomed:
            vmap[v] = fresh
            fresh += 1
    new_invs = []
    for c, col in enumerate(invs):
        new_col = [0] * fresh
        for v, nv in enumerate(vmap):
            if nv == -1:
                continue
            t = vmap[col[v]]
            if t == -1:
                raise ResultInvalid(
                    f"color {c}: survivor {v} still wired into the removed set")
            new_col[nv] = t
        new_invs.append(new_col)
    try:
        out = ColoredGraph(new_invs)
    except GraphValidationError as exc:  # pragma: no cover - defensive
        raise ResultInvalid(str(exc)) from exc
    return MoveResult(out, tuple(vmap))


# -- dipoles -------------------------------------------------------------------


def check_dipole(graph: ColoredGraph, spec: DipoleSpec) -> None:
    """Raise NotADipole unless spec describes a genuine h-dipole."""
    v1, v2 = spec.v1, spec.v2
    if v1 == v2:
        raise NotADipole("the two dipole vertices coincide")
    for c in spec.colors:
        graph._check_color(c)
    if not 1 <= len(spec.colors) <= graph.n_colors - 1:
        raise NotADipole(
            f"a dipole involves between 1 and {graph.n_colors - 1} colors, "
            f"got {len(spec.colors)}")
    joined = frozenset(
        c for c in range(graph.n_colors) if graph.involutions[c][v1] == v2)
    if joined != spec.colors:
        raise NotADipole(
            f"vertices {v1},{v2} are joined by colors {sorted(joined)}, "
            f"not exactly {sorted(spec.colors)}")
    rest = [c for c in range(graph.n_colors) if c not in spec.colors]
    comps = graph.components(rest)
    if comps.labels[v1] == comps.labels[v2]:
        raise NotADipole(
            f"vertices {v1},{v2} share a residue once colors "
            f"{sorted(spec.colors)} are deleted")


def find_dipoles(graph: ColoredGraph, order: int | None = None) -> list:
    """All dipoles, or all dipoles of the given order, sorted by vertex ids."""
    out = []
    for v1 in range(graph.num_vertices):
        joined: dict = {}
        for c in range(graph.n_colors):
            w = graph.involutions[c][v1]
            if w > v1:
                joined.setdefault(w, set()).add(c)
        for v2 in sorted(joined):
            cols = joined[v2]
            if order is not None and len(cols) != order:
                continue
            if len(cols) == graph.n_colors:
                continue  # a 2-vertex component, not a dipole
            spec = DipoleSpec(v1, v2, frozenset(cols))
            try:
                check_dipole(graph, spec)
            except NotADipole:
                continue
            out.append(spec)
    return out


def cancel_dipole(graph: ColoredGraph, spec: DipoleSpec) -> MoveResult:
    check_dipole(graph, spec)
    return _excise(graph, {spec.v1: spec.v2}, spec.colors)


def add_dipole(graph: ColoredGraph, at_vertex: int, colors) -> MoveResult:
    """Insert an h-dipole next to `at_vertex`.

    The two new vertices take over every non-dipole color at at_vertex: the
    first one absorbs all of them, which pins its residue in the complement
    colors to {v1, at_vertex} and so guarantees the inserted pair really is
    a dipole, whatever the ambient graph looks like.
    """
    colors = frozenset(colors)
    for c in colors:
        graph._check_color(c)
    if not 1 <= len(colors) <= graph.n_colors - 1:
        raise NotADipole(
            f"a dipole involves between 1 and {graph.n_colors - 1} colors, "
            f"got {len(colors)}")
    if not 0 <= at_vertex < graph.num_vertices:
        raise MoveError(f"vertex {at_vertex} out of range")
    v1 = graph.num_vertices
    v2 = v1 + 1
    invs = []
    for c, col in enumerate(graph.involutions):
        col = list(col) + [0, 0]
        if c in colors:
            col[v1], col[v2] = v2, v1
        else:
            u = col[at_vertex]
            col[at_vertex], col[v1] = v1, at_vertex
            col[v2], col[u] = u, v2
        invs.append(col)
    out = ColoredGraph(invs)
    check_dipole(out, DipoleSpec(v1, v2, colors))  # insurance; always passes
    return MoveResult(out, tuple(range(graph.num_vertices)), added=(v1, v2))


# -- polyhedral glue -----------------------------------------------------------


def polyhedral_glue(graph: ColoredGraph, spec: GlueSpec) -> MoveResult:
    graph._check_color(spec.color)
    lam1, lam2 = tuple(spec.lambda1), tuple(spec.lambda2)
    if not lam1 or len(lam1) != len(lam2):
        raise PhiNotIsomorphism(
            f"phi must pair the two sides, got {len(lam1)} and {len(lam2)} vertices")
    pos1 = {v: k for k, v in enumerate(lam1)}
    pos2 = {v: k for k, v in enumerate(lam2)}
    if len(pos1) != len(lam1) or len(pos2) != len(lam2):
        raise PhiNotIsomorphism("repeated vertex inside a glue side")
    if set(lam1) & set(lam2):
        raise SameComponentInIHat("the two glue sides overlap")
    i = spec.color
    for u, w in zip(lam1, lam2):
        if graph.involutions[i][u] != w:
            raise MissingIColoredMatching(
                f"vertices {u},{w} lack the color-{i} edge the glue crosses")
    for c in range(graph.n_colors):
        if c == i:
            continue
        col = graph.involutions[c]
        for k, u in enumerate(lam1):
            w = lam2[k]
            p = col[u]
            q = col[w]
            if p in pos1:
                if q != lam2[pos1[p]]:
                    raise PhiNotIsomorphism(
                        f"color {c}: edge {u}-{p} is not mirrored between "
                        f"{w} and {lam2[pos1[p]]}")
            elif q in pos2:
                raise PhiNotIsomorphism(
                    f"color {c}: edge {w}-{q} has no preimage edge")
    rest = [c for c in range(graph.n_colors) if c != i]
    comps = graph.components(rest)
    side1 = {comps.labels[v] for v in lam1}
    side2 = {comps.labels[v] for v in lam2}
    if side1 & side2:
        raise SameComponentInIHat(
            f"glue sides meet the same residue of the graph without color {i}")
    return _excise(graph, dict(zip(lam1, lam2)), {i})


def simple_glue(graph: ColoredGraph, color: int, u: int, w: int) -> MoveResult:
    """Single-vertex glue; identical in effect to cancelling the 1-dipole u,w."""
    return polyhedral_glue(graph, GlueSpec(color, (u,), (w,)))


# -- combined move --------------------------------------------------------------


def combined_move(graph: ColoredGraph, spec: CombinedSpec) -> MoveResult:
    k, i, j = spec.k, spec.i, spec.j
    for c in (k, i, j):
        graph._check_color(c)
    if len({k, i, j}) != 3:
        raise PreconditionFailed(f"colors k={k}, i={i}, j={j} must be distinct")
    v1, v2 = spec.pair
    v1p, v2p = spec.pair_image
    if graph.involutions[k][v1] != v2:
        raise PreconditionFailed(
            f"pair clause: vertices {v1},{v2} lack a color-{k} edge")
    if graph.involutions[k][v1p] != v2p:
        raise PreconditionFailed(
            f"pair-image clause: vertices {v1p},{v2p} lack a color-{k} edge")
    for a, b in ((v1, v1p), (v2, v2p)):
        for c in (i, j):
            if graph.involutions[c][a] != b:
                raise PreconditionFailed(
                    f"double-edge clause: vertices {a},{b} lack a color-{c} edge")
    four = (v1, v2, v1p, v2p)
    rest3 = [c for c in range(graph.n_colors) if c not in (i, j, k)]
    comps3 = graph.components(rest3)
    if len({comps3.labels[v] for v in four}) != 4:
        raise PreconditionFailed(
            f"residue clause: vertices {four} must lie in four distinct "
            f"residues of the graph without colors {sorted((i, j, k))}")
    rest2 = [c for c in range(graph.n_colors) if c not in (i, j)]
    comps2 = graph.components(rest2)
    if comps2.labels[v1] == comps2.labels[v1p]:
        raise PreconditionFailed(
            f"separation clause: the pairs share a residue of the graph "
            f"without colors {sorted((i, j))}")
    return _excise(graph, {v1: v1p, v2: v2p}, {i, j})


def combined_move_factored(graph: ColoredGraph, spec: CombinedSpec,
                           labels=None) -> MoveResult:
    """The same move as two dipole cancellations.

    First the {i,j} 2-dipole whose pair contains the smallest vertex (by
    label when labels are supplied, by id otherwise), then the {i,j,k}
    3-dipole the first cancellation creates.  Exists so tests can pin the
    one-shot rewiring against the textbook factorization.
    """
    k, i, j = spec.k, spec.i, spec.j
    v1, v2 = spec.pair
    v1p, v2p = spec.pair_image
    key = (lambda v: labels[v]) if labels is not None else (lambda v: v)
    first = min((v1, v2, v1p, v2p), key=key)
    if first in (v1, v1p):
        two, three = (v1, v1p), (v2, v2p)
    else:
        two, three = (v2, v2p), (v1, v1p)
    r1 = cancel_dipole(graph, DipoleSpec(two[0], two[1], frozenset((i, j))))
    a = r1.vertex_map[three[0]]
    b = r1.vertex_map[three[1]]
    r2 = cancel_dipole(r1.graph, DipoleSpec(a, b, frozenset((i, j, k))))
    vmap = tuple(
        -1 if r1.vertex_map[v] == -1 else r2.vertex_map[r1.vertex_map[v]]
        for v in range(graph.num_vertices))
    return MoveResult(r2.graph, vmap)


# -- scripts --------------------------------------------------------------------


@dataclass(frozen=True)
class ScriptStep:
    """One scripted move, with vertices given by label.

    kind "dipole": colors = dipole colors, groups = ((l1, l2),)
    kind "glue": colors = (i,), groups = (lambda1_labels, lambda2_labels)
    kind "combined": colors = (k, i, j), groups = ((l1, l2), (m1, m2))
    """

    kind: str
    colors: tuple
    groups: tuple
    line: int = 0


@dataclass(frozen=True)
class ScriptResult:
    gem: LabeledGem
    trace: tuple  # vertex counts: initial, then after every step


_GLUE_RE = re.compile(r"^glue\s+(\d+)\s+\[([^\]]*)\]\s*->\s*\[([^\]]*)\]\s*$")
_COMBINED_RE = re.compile(
    r"^combined\s+(\d+)\s+\{(\d+)\s*,\s*(\d+)\}\s+\(([^)]*)\)\s+\(([^)]*)\)\s*$")


def _split_labels(blob: str, line_no: int):
    from .errors import ParseError

    labels = tuple(s.strip() for s in blob.split(","))
    if any(not s for s in labels):
        raise ParseError("empty vertex label in list", line_no, 1)
    return labels


def parse_move_script(text: str) -> list:
    from .errors import ParseError

    steps = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word = line.split(None, 1)[0]
        if word == "dipole":
            parts = line.split()
            if len(parts) != 4:
                raise ParseError(
                    "expected: dipole <v1> <v2> <c1,c2,...>", line_no, 1)
            try:
                colors = tuple(sorted(int(t) for t in parts[3].split(",")))
            except ValueError:
                raise ParseError(
                    f"bad color list {parts[3]!r}", line_no, 1 + raw.find(parts[3]))
            steps.append(ScriptStep("dipole", colors, ((parts[1], parts[2]),), line_no))
        elif word == "glue":
            m = _GLUE_RE.match(line)
            if not m:
                raise ParseError(
                    "expected: glue <i> [u1,u2,...] -> [w1,w2,...]", line_no, 1)
            lam1 = _split_labels(m.group(2), line_no)
            lam2 = _split_labels(m.group(3), line_no)
            if len(lam1) != len(lam2):
                raise ParseError(
                    f"glue sides list {len(lam1)} and {len(lam2)} vertices", line_no, 1)
            steps.append(ScriptStep("glue", (int(m.group(1)),), (lam1, lam2), line_no))
        elif word == "combined":
            m = _COMBINED_RE.match(line)
            if not m:
                raise ParseError(
                    "expected: combined <k> {i,j} (v1,v2) (v1p,v2p)", line_no, 1)
            pair = _split_labels(m.group(4), line_no)
            image = _split_labels(m.group(5), line_no)
            if len(pair) != 2 or len(image) != 2:
                raise ParseError("combined move pairs must list 2 vertices", line_no, 1)
            colors = (int(m.group(1)), int(m.group(2)), int(m.group(3)))
            steps.append(ScriptStep("combined", colors, (pair, image), line_no))
        else:
            raise ParseError(f"unknown move {word!r}", line_no, 1 + raw.find(word))
    return steps


def render_move_script(steps) -> str:
    lines = []
    for s in steps:
        if s.kind == "dipole":
            (l1, l2), = s.groups
            lines.append(f"dipole {l1} {l2} {','.join(map(str, s.colors))}")
        elif s.kind == "glue":
            lam1, lam2 = s.groups
            lines.append(f"glue {s.colors[0]} [{','.join(lam1)}] -> [{','.join(lam2)}]")
        elif s.kind == "combined":
            k, i, j = s.colors
            pair, image = s.groups
            lines.append(f"combined {k} {{{i},{j}}} ({','.join(pair)}) ({','.join(image)})")
        else:
            raise ValueError(f"unknown step kind {s.kind!r}")
    return "\n".join(lines) + "\n"


def _resolve(gem: LabeledGem, label: str) -> int:
    if not gem.has_label(label):
        raise MoveError(f"unknown vertex label {label!r}")
    return gem.vertex(label)


def run_script(gem: LabeledGem, steps) -> ScriptResult:
    """Apply the steps in order, relabeling survivors as ids compact."""
    trace = [gem.graph.num_vertices]
    for step_no, step in enumerate(steps, start=1):
        try:
            if step.kind == "dipole":
                (l1, l2), = step.groups
                spec = DipoleSpec(
                    _resolve(gem, l1), _resolve(gem, l2), frozenset(step.colors))
                result = cancel_dipole(gem.graph, spec)
            elif step.kind == "glue":
                lam1 = tuple(_resolve(gem, l) for l in step.groups[0])
                lam2 = tuple(_resolve(gem, l) for l in step.groups[1])
                result = polyhedral_glue(gem.graph, GlueSpec(step.colors[0], lam1, lam2))
            elif step.kind == "combined":
                k, i, j = step.colors
                pair = tuple(_resolve(gem, l) for l in step.groups[0])
                image = tuple(_resolve(gem, l) for l in step.groups[1])
                result = combined_move(gem.graph, CombinedSpec(k, i, j, pair, image))
            else:
                raise MoveError(f"step {step_no}: unknown step kind {step.kind!r}")
        except GemError as exc:
            raise type(exc)(f"step {step_no} (line {step.line}): {exc}") from exc
        labels = [""] * result.graph.num_vertices
        for old, new in enumerate(result.vertex_map):
            if new != -1:
                labels[new] = gem.labels[old]
        gem = LabeledGem(result.graph, labels)
        trace.append(result.graph.num_vertices)
    return ScriptResult(gem, tuple(trace))


def run_script_text(gem: LabeledGem, text: str) -> ScriptResult:
    return run_script(gem, parse_move_script(text))
