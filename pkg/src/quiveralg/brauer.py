"""Brauer graphs as ribbon graphs, and their algebras.

A Brauer graph is a finite connected graph with a cyclic order of the
edge-ends (half-edges, "germs") around every vertex and a positive integer
multiplicity per vertex.  Loops and multiple edges are allowed; a loop is an
edge whose two half-edges sit at the same vertex.

The graph determines a quiver: one quiver vertex per edge, one arrow per
half-edge pointing from its edge to the edge of its cyclic successor, except
that a half-edge alone at a multiplicity-one vertex contributes no arrow.
Each graph vertex then contributes an oriented arrow cycle, read off the
cyclic order; the relations are

* for every edge whose two half-edges ``h``, ``k`` both generate cycles, the
  commutativity relation ``C_h^{e(h)} - C_k^{e(k)}`` between the two cycle
  powers based at that edge,
* for every edge with one end alone at a multiplicity-one vertex, the zero
  relation ``C_h^{e(h)} * first(C_h)`` (one step beyond the socle),
* a zero relation ``a b`` for every composable arrow pair in which ``b`` is
  not the cycle-successor arrow of ``a``.

The last rule is stated here through half-edges: the cycle-successor of the
arrow of germ ``g`` is the arrow of ``successor(g)``, which keeps the rule
well defined when a loop makes two cycles share a vertex; pairs of arrows
from two distinct graph vertices are never successors, so those all acquire
a relation, and for a loop the two out-of-order compositions do too.
"""

from __future__ import annotations

import random
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InconsistencyError, ParseError
from .quiver import (
    Binomial,
    Monomial,
    Path,
    Presentation,
    Problem,
    Quiver,
    Relation,
    power,
)


class BrauerGraph:
    """A ribbon graph with per-vertex multiplicities.

    ``multiplicities`` maps graph vertices to integers (and fixes the vertex
    set); ``edges`` maps edge names to their two half-edge names; and
    ``rotations`` gives, per vertex, the cyclic sequence of the half-edges
    at that vertex (the starting point of the sequence is irrelevant).
    Values are copied and the graph is immutable afterwards; structural
    well-formedness that :func:`validate_brauer_graph` reports as problems
    is not enforced here, so partially built graphs can be inspected.
    """

    def __init__(
        self,
        multiplicities: Mapping[str, int],
        edges: Mapping[str, tuple[str, str]],
        rotations: Mapping[str, Sequence[str]],
    ):
        self._mult = dict(multiplicities)
        self._edges = {e: (h[0], h[1]) for e, h in edges.items()}
        self._rotations = {v: tuple(seq) for v, seq in rotations.items()}

    @property
    def multiplicities(self) -> dict[str, int]:
        return dict(self._mult)

    @property
    def edges(self) -> dict[str, tuple[str, str]]:
        return dict(self._edges)

    @property
    def rotations(self) -> dict[str, tuple[str, ...]]:
        return dict(self._rotations)

    def multiplicity(self, vertex: str) -> int:
        return self._mult[vertex]

    @cached_property
    def half_edges(self) -> tuple[str, ...]:
        return tuple(sorted(h for pair in self._edges.values() for h in pair))

    @cached_property
    def edge_of(self) -> dict[str, str]:
        return {h: e for e, pair in self._edges.items() for h in pair}

    @cached_property
    def partner(self) -> dict[str, str]:
        out = {}
        for h, k in self._edges.values():
            out[h] = k
            out[k] = h
        return out

    @cached_property
    def vertex_of(self) -> dict[str, str]:
        return {h: v for v, seq in self._rotations.items() for h in seq}

    def valency(self, vertex: str) -> int:
        return len(self._rotations[vertex])

    def successor(self, half_edge: str) -> str:
        """The next half-edge in the cyclic order at the same vertex."""
        seq = self._rotations[self.vertex_of[half_edge]]
        i = seq.index(half_edge)
        return seq[(i + 1) % len(seq)]

    def is_silent_leaf(self, half_edge: str) -> bool:
        """Whether this germ sits alone at a multiplicity-one vertex."""
        v = self.vertex_of[half_edge]
        return self.valency(v) == 1 and self._mult[v] == 1

    def __repr__(self):
        return (
            f"BrauerGraph({len(self._mult)} vertices, {len(self._edges)} edges, "
            f"mult {sorted(self._mult.values())})"
        )

    def __eq__(self, other):
        if not isinstance(other, BrauerGraph):
            return NotImplemented
        return (
            self._mult == other._mult
            and self._edges == other._edges
            and self._rotations == other._rotations
        )

    def __hash__(self):
        return hash(canonical_form(self))


def validate_brauer_graph(g: BrauerGraph) -> list[Problem]:
    """Structural validation; every failing invariant is reported.

    Rejected besides malformed data: disconnected graphs, the edgeless
    graph, and a single edge joining two distinct multiplicity-one vertices
    (the two degenerate algebras the correspondence excludes).
    """
    problems: list[Problem] = []
    halves: list[str] = []
    for e, (h, k) in g.edges.items():
        if h == k:
            problems.append(Problem("pairing", f"edge {e!r} pairs half-edge {h!r} with itself"))
        halves.extend((h, k))
    if len(set(halves)) != len(halves):
        dup = sorted({h for h in halves if halves.count(h) > 1})
        problems.append(Problem("pairing", f"half-edges on several edges: {', '.join(dup)}"))

    placed: list[str] = [h for seq in g.rotations.values() for h in seq]
    if len(set(placed)) != len(placed):
        dup = sorted({h for h in placed if placed.count(h) > 1})
        problems.append(Problem("rotation", f"half-edges placed twice: {', '.join(dup)}"))
    if set(placed) != set(halves):
        missing = sorted(set(halves) - set(placed))
        stray = sorted(set(placed) - set(halves))
        if missing:
            problems.append(Problem("rotation", f"half-edges not placed at any vertex: {missing}"))
        if stray:
            problems.append(Problem("rotation", f"unknown half-edges in rotations: {stray}"))
    if set(g.rotations) != set(g.multiplicities):
        problems.append(Problem("rotation", "rotation and multiplicity vertex sets differ"))

    for v, m in g.multiplicities.items():
        if m < 1:
            problems.append(Problem("multiplicity", f"vertex {v!r} has multiplicity {m} < 1"))

    if not g.edges:
        problems.append(Problem("degenerate", "graph without edges"))
    elif len(g.edges) == 1:
        ((h, k),) = g.edges.values()
        if not problems:
            u, w = g.vertex_of[h], g.vertex_of[k]
            if u != w and g.multiplicity(u) == 1 and g.multiplicity(w) == 1:
                problems.append(
                    Problem(
                        "degenerate",
                        "single edge with multiplicity one at both endpoints",
                    )
                )

    if not problems and g.edges:
        seen: set[str] = set()
        stack = [g.half_edges[0]]
        while stack:
            h = stack.pop()
            if h in seen:
                continue
            seen.add(h)
            stack.append(g.partner[h])
            stack.append(g.successor(h))
        if len(seen) != len(g.half_edges) or len(g.rotations) != len(
            {g.vertex_of[h] for h in seen}
        ):
            problems.append(Problem("connected", "graph is not connected"))
    return problems


def _cycle_arrows(g: BrauerGraph, start: str) -> list[str]:
    """Half-edges around the vertex of ``start``, beginning at ``start``.

    These index the arrows of the cycle at that vertex; the list has one
    entry per germ, so a loop contributes two.
    """
    out = [start]
    h = g.successor(start)
    while h != start:
        out.append(h)
        h = g.successor(h)
    return out


def quiver_of(g: BrauerGraph) -> Quiver:
    """The quiver: vertices are edges, arrows are the non-silent half-edges.

    The arrow of germ ``h`` is named ``h`` and points from the edge of ``h``
    to the edge of its cyclic successor; at a multiplicity >= 2 leaf this is
    a loop arrow, and a multiplicity-one leaf germ is silent.
    """
    arrows = [
        (h, g.edge_of[h], g.edge_of[g.successor(h)])
        for h in g.half_edges
        if not g.is_silent_leaf(h)
    ]
    return Quiver(sorted(g.edges), arrows)


def cycle_path(g: BrauerGraph, quiver: Quiver, start: str) -> Path:
    """The cycle at the vertex of ``start``, as a path based at its edge."""
    return quiver.path(_cycle_arrows(g, start))


def relations_of(g: BrauerGraph) -> list[Relation]:
    """The defining relations of the Brauer graph algebra (see module docs)."""
    quiver = quiver_of(g)
    relations: list[Relation] = []
    for e in sorted(g.edges):
        h, k = sorted(g.edges[e])
        silent_h, silent_k = g.is_silent_leaf(h), g.is_silent_leaf(k)
        if silent_h and silent_k:
            raise InconsistencyError(
                f"edge {e!r} has multiplicity-one leaves at both ends; "
                "validate the graph before building its algebra"
            )
        if silent_h or silent_k:
            loud = k if silent_h else h
            cycle = cycle_path(g, quiver, loud)
            full = power(cycle, g.multiplicity(g.vertex_of[loud]))
            one_past_socle = Path(
                full.vertices + (cycle.vertices[1],), full.arrows + (loud,)
            )
            relations.append(Monomial(one_past_socle))
        else:
            left = power(cycle_path(g, quiver, h), g.multiplicity(g.vertex_of[h]))
            right = power(cycle_path(g, quiver, k), g.multiplicity(g.vertex_of[k]))
            relations.append(Binomial(left, right))
    for h in g.half_edges:
        if g.is_silent_leaf(h):
            continue
        out_edge = g.edge_of[g.successor(h)]
        for b in sorted(g.edges[out_edge]):
            if b == g.successor(h) or g.is_silent_leaf(b):
                continue
            relations.append(Monomial(quiver.path([h, b])))
    return relations


def presentation_of(g: BrauerGraph) -> Presentation:
    return Presentation(quiver_of(g), relations_of(g))


def algebra_of(g: BrauerGraph):
    """The Brauer graph algebra packaged as a normalized biserial presentation."""
    from .ssb import ssb_presentation

    return ssb_presentation(presentation_of(g))


def structural_dimension(g: BrauerGraph) -> int:
    """Dimension from the projective shapes: cycle-power lengths per edge end.

    A multiplicity-one leaf germ contributes one (the trivial path); every
    other germ contributes the length of its cycle power.
    """
    total = 0
    for h in g.half_edges:
        if g.is_silent_leaf(h):
            total += 1
        else:
            v = g.vertex_of[h]
            total += g.multiplicity(v) * g.valency(v)
    return total


# ---------------------------------------------------------------------------
# Canonical form and isomorphism
# ---------------------------------------------------------------------------


def _bfs_encoding(g: BrauerGraph, start: str) -> tuple:
    """Traversal encoding with germs renumbered in discovery order.

    From each germ the successor is explored first, then the partner; the
    encoding records, per germ in discovery order, the numbers of those two
    neighbours and the multiplicity at the germ's vertex.  The encoding
    determines the graph up to renaming, so the minimum over starting germs
    is a canonical form.
    """
    order = _bfs_order(g, start)
    number = {h: i for i, h in enumerate(order)}
    return tuple(
        (number[g.successor(h)], number[g.partner[h]], g.multiplicity(g.vertex_of[h]))
        for h in order
    )


def canonical_form(g: BrauerGraph) -> tuple:
    """Relabeling-invariant encoding; equal exactly for isomorphic graphs."""
    return min(_bfs_encoding(g, h) for h in g.half_edges)


def is_isomorphic(g1: BrauerGraph, g2: BrauerGraph) -> bool:
    return canonical_form(g1) == canonical_form(g2)


def find_isomorphism(g1: BrauerGraph, g2: BrauerGraph) -> dict[str, str] | None:
    """A half-edge bijection realizing an isomorphism, or None.

    Matches the discovery orders of two minimum-encoding traversals; the
    vertex and edge bijections follow from the half-edge one.
    """
    if len(g1.half_edges) != len(g2.half_edges):
        return None
    best1 = min(g1.half_edges, key=lambda h: _bfs_encoding(g1, h))
    enc1 = _bfs_encoding(g1, best1)
    for start2 in g2.half_edges:
        if _bfs_encoding(g2, start2) == enc1:
            return dict(zip(_bfs_order(g1, best1), _bfs_order(g2, start2)))
    return None


def _bfs_order(g: BrauerGraph, start: str) -> list[str]:
    number = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        h = order[i]
        i += 1
        for nb in (g.successor(h), g.partner[h]):
            if nb not in number:
                number[nb] = len(order)
                order.append(nb)
    return order


def relabel_brauer_graph(g: BrauerGraph, rng: random.Random) -> BrauerGraph:
    """An isomorphic copy with names shuffled and rotations re-anchored."""

    def shuffled_names(names: Iterable[str], prefix: str) -> dict[str, str]:
        names = list(names)
        targets = [f"{prefix}{i}" for i in range(len(names))]
        rng.shuffle(targets)
        return dict(zip(names, targets))

    vmap = shuffled_names(g.multiplicities, "v")
    emap = shuffled_names(g.edges, "E")
    hmap = shuffled_names(g.half_edges, "h")
    rotations = {}
    for v, seq in g.rotations.items():
        k = rng.randrange(len(seq)) if seq else 0
        seq = seq[k:] + seq[:k]
        rotations[vmap[v]] = tuple(hmap[h] for h in seq)
    return BrauerGraph(
        {vmap[v]: m for v, m in g.multiplicities.items()},
        {emap[e]: (hmap[h], hmap[k]) for e, (h, k) in g.edges.items()},
        rotations,
    )


# ---------------------------------------------------------------------------
# Text format
#
#   bvertex <id> mult=<int>
#   bedge <edge-id> <half>@<vertex> <half>@<vertex>
#   order <vertex> = <half>,<half>,...
# ---------------------------------------------------------------------------


def parse_brauer_graph(text: str) -> BrauerGraph:
    mult: dict[str, int] = {}
    edges: dict[str, tuple[str, str]] = {}
    at: dict[str, str] = {}
    orders: dict[str, tuple[str, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "bvertex":
            if len(tokens) != 3 or not tokens[2].startswith("mult="):
                raise ParseError(lineno, "expected: bvertex <id> mult=<int>")
            try:
                mult[tokens[1]] = int(tokens[2][5:])
            except ValueError:
                raise ParseError(lineno, f"bad multiplicity {tokens[2][5:]!r}") from None
        elif tokens[0] == "bedge":
            if len(tokens) != 4:
                raise ParseError(lineno, "expected: bedge <id> <half>@<vertex> <half>@<vertex>")
            pair = []
            for end in tokens[2:]:
                if "@" not in end:
                    raise ParseError(lineno, f"expected <half>@<vertex>, got {end!r}")
                h, v = end.rsplit("@", 1)
                if v not in mult:
                    raise ParseError(lineno, f"undeclared vertex {v!r}")
                pair.append(h)
                at[h] = v
            edges[tokens[1]] = (pair[0], pair[1])
        elif tokens[0] == "order":
            if len(tokens) < 4 or tokens[2] != "=":
                raise ParseError(lineno, "expected: order <vertex> = <half>,<half>,...")
            v = tokens[1]
            if v not in mult:
                raise ParseError(lineno, f"undeclared vertex {v!r}")
            orders[v] = tuple(h for h in " ".join(tokens[3:]).replace(",", " ").split())
        else:
            raise ParseError(lineno, f"unknown directive {tokens[0]!r}")
    for v in mult:
        if v not in orders:
            declared = tuple(h for h, w in sorted(at.items()) if w == v)
            orders[v] = declared
    return BrauerGraph(mult, edges, orders)


def serialize_brauer_graph(g: BrauerGraph) -> str:
    lines = [f"bvertex {v} mult={g.multiplicity(v)}" for v in sorted(g.multiplicities)]
    for e in sorted(g.edges):
        h, k = sorted(g.edges[e])
        lines.append(f"bedge {e} {h}@{g.vertex_of[h]} {k}@{g.vertex_of[k]}")
    for v in sorted(g.rotations):
        seq = g.rotations[v]
        if seq:
            k = seq.index(min(seq))  # anchor the cycle for determinism
            seq = seq[k:] + seq[:k]
            lines.append(f"order {v} = {','.join(seq)}")
    return "\n".join(lines) + "\n"


def brauer_graph_dot(g: BrauerGraph) -> str:
    """Graphviz DOT; vertices carry their multiplicities as labels."""
    lines = ["graph brauer {"]
    for v in sorted(g.multiplicities):
        lines.append(f'  "{v}" [label="{v} mult={g.multiplicity(v)}"];')
    for e in sorted(g.edges):
        h, k = g.edges[e]
        lines.append(f'  "{g.vertex_of[h]}" -- "{g.vertex_of[k]}" [label="{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
