"""Exhaustive enumeration of small instances, up to isomorphism.

Brauer graphs are generated as rotation systems: with the pairing of the
``2n`` half-edges fixed, every permutation is a cyclic-order assignment, and
every isomorphism class is reached; canonical forms dedupe.  Multiplicity
assignments are layered on top of each deduped shape and deduped again with
multiplicities included.

Gentle presentations are generated per quiver (endpoint multisets with the
degree bounds of the special biserial conditions) and per relation choice;
at each vertex the admissible choices of which compositions vanish form a
partial matching between incoming and outgoing arrows whose complement is
again a partial matching, which keeps the search tiny.  A canonical key
over vertex relabelings and parallel-arrow swaps dedupes presentations.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

from .brauer import BrauerGraph, canonical_form
from .gentle import GentleAlgebra, validate_gentle
from .quiver import Monomial, Presentation, Quiver


def _shape_key(succ: tuple[int, ...]) -> tuple | None:
    """Canonical encoding of a rotation system over half-edges 0..2n-1.

    The pairing is fixed as ``h ^ 1``; the encoding matches the one used for
    full Brauer graphs but without multiplicities, computed on plain
    integers so that the raw permutation sweep stays cheap.  Returns None
    for disconnected systems.
    """
    n = len(succ)
    best = None
    for start in range(n):
        number = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            h = order[i]
            i += 1
            for nb in (succ[h], h ^ 1):
                if nb not in number:
                    number[nb] = len(order)
                    order.append(nb)
        if len(order) < n:
            return None  # disconnected; the same holds from every start
        encoding = tuple((number[succ[h]], number[h ^ 1]) for h in order)
        if best is None or encoding < best:
            best = encoding
    return best


def _cycles_of(succ: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n = len(succ)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        h = succ[start]
        while h != start:
            cycle.append(h)
            seen[h] = True
            h = succ[h]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def _graph_from(cycles: tuple[tuple[int, ...], ...], mults: tuple[int, ...]) -> BrauerGraph:
    n_edges = sum(len(c) for c in cycles) // 2
    return BrauerGraph(
        multiplicities={f"v{i}": m for i, m in enumerate(mults)},
        edges={f"E{i}": (f"h{2 * i}", f"h{2 * i + 1}") for i in range(n_edges)},
        rotations={
            f"v{i}": tuple(f"h{h}" for h in cycle) for i, cycle in enumerate(cycles)
        },
    )


def connected_brauer_graphs(max_edges: int, max_mult: int) -> Iterator[BrauerGraph]:
    """All connected Brauer graphs with at most the given edges and multiplicities.

    One representative per isomorphism class, excluding the two degenerate
    shapes that the algebra correspondence rejects.  Deterministic order.
    """
    for n_edges in range(1, max_edges + 1):
        shapes = []
        seen_shapes = set()
        for succ in permutations(range(2 * n_edges)):
            key = _shape_key(succ)
            if key is None or key in seen_shapes:
                continue
            seen_shapes.add(key)
            shapes.append(_cycles_of(succ))
        seen: set[tuple] = set()
        found: list[tuple[tuple, BrauerGraph]] = []
        for cycles in shapes:
            for mults in product(range(1, max_mult + 1), repeat=len(cycles)):
                g = _graph_from(cycles, mults)
                if n_edges == 1 and len(cycles) == 2 and mults == (1, 1):
                    continue  # single edge with two multiplicity-one endpoints
                key = canonical_form(g)
                if key in seen:
                    continue
                seen.add(key)
                found.append((key, g))
        for _, g in sorted(found, key=lambda item: item[0]):
            yield g


def _relation_choices(ins: list[str], outs: list[str]) -> list[list[tuple[str, str]]]:
    """Vanishing-composition choices at one vertex.

    A choice and its complement must both be partial matchings between the
    incoming and outgoing arrows (the forbidden- and the allowed-successor
    conditions respectively).
    """
    pairs = [(a, b) for a in ins for b in outs]
    choices = []
    for bits in range(1 << len(pairs)):
        chosen = [p for i, p in enumerate(pairs) if bits >> i & 1]
        rest = [p for i, p in enumerate(pairs) if not bits >> i & 1]
        ok = True
        for group in (chosen, rest):
            for a in ins:
                if sum(1 for x, _ in group if x == a) > 1:
                    ok = False
            for b in outs:
                if sum(1 for _, y in group if y == b) > 1:
                    ok = False
        if ok:
            choices.append(chosen)
    return choices


def _endpoint_multisets(
    pairs: list[tuple[str, str]], count: int
) -> Iterator[tuple[tuple[str, str], ...]]:
    """Nondecreasing endpoint sequences respecting the degree-two bounds.

    Equivalent to filtering ``combinations_with_replacement`` by vertex
    degrees, but prunes as it builds, which matters at five vertices.
    """
    out_deg: dict[str, int] = {}
    in_deg: dict[str, int] = {}
    acc: list[tuple[str, str]] = []

    def rec(start: int, remaining: int) -> Iterator[tuple[tuple[str, str], ...]]:
        if remaining == 0:
            yield tuple(acc)
            return
        for i in range(start, len(pairs)):
            s, t = pairs[i]
            if out_deg.get(s, 0) >= 2 or in_deg.get(t, 0) >= 2:
                continue
            out_deg[s] = out_deg.get(s, 0) + 1
            in_deg[t] = in_deg.get(t, 0) + 1
            acc.append(pairs[i])
            yield from rec(i, remaining - 1)
            acc.pop()
            out_deg[s] -= 1
            in_deg[t] -= 1

    yield from rec(0, count)


def canonical_presentation_key(pres: Presentation):
    """Isomorphism-invariant key: minimum over relabelings of the structure.

    Vertices run over all bijections onto 0..n-1; parallel arrows (which a
    vertex bijection cannot separate) run over their orderings.  Arrows are
    then renamed positionally, so the key is independent of all names.
    """
    quiver = pres.quiver
    vertices = quiver.vertices
    best = None
    for perm in permutations(range(len(vertices))):
        vmap = {v: i for v, i in zip(vertices, perm)}
        groups: dict[tuple[int, int], list[str]] = {}
        for a in quiver.arrows:
            groups.setdefault((vmap[a.source], vmap[a.target]), []).append(a.name)
        group_keys = sorted(groups)
        orderings = [permutations(groups[gk]) for gk in group_keys]
        for arrangement in product(*orderings):
            amap: dict[str, int] = {}
            idx = 0
            endpoints = []
            for gk, names in zip(group_keys, arrangement):
                for name in names:
                    amap[name] = idx
                    endpoints.append(gk)
                    idx += 1
            rels = []
            for r in pres.relations:
                if isinstance(r, Monomial):
                    rels.append((0, tuple(amap[x] for x in r.path.arrows)))
                else:
                    sides = sorted(
                        tuple(amap[x] for x in p.arrows) for p in r.paths()
                    )
                    rels.append((1, tuple(sides[0]), tuple(sides[1])))
            key = (len(vertices), tuple(endpoints), tuple(sorted(rels)))
            if best is None or key < best:
                best = key
    return best


def presentations_isomorphic(p1: Presentation, p2: Presentation) -> bool:
    """Exact isomorphism of presentations (vertex/arrow bijection matching relations)."""
    if len(p1.quiver.vertices) != len(p2.quiver.vertices):
        return False
    if len(p1.quiver.arrows) != len(p2.quiver.arrows):
        return False
    return canonical_presentation_key(p1) == canonical_presentation_key(p2)


def gentle_algebras(max_vertices: int, max_arrows: int) -> Iterator[GentleAlgebra]:
    """All gentle algebras within the bounds, one per isomorphism class.

    Enumerates quivers up to isomorphism first, then the admissible
    vanishing choices on each; everything is passed through the full
    validator, so only finite-dimensional connected gentle presentations
    come out.  Deterministic order.
    """
    for nv in range(1, max_vertices + 1):
        vertices = [str(i) for i in range(nv)]
        pairs = [(s, t) for s in vertices for t in vertices]
        seen_quivers: set = set()
        quivers = []
        min_arrows = max(1, nv - 1)
        for na in range(min_arrows, max_arrows + 1):
            for endpoints in _endpoint_multisets(pairs, na):
                quiver = Quiver(
                    vertices,
                    [(f"a{i}", s, t) for i, (s, t) in enumerate(endpoints)],
                )
                if not quiver.is_connected():
                    continue
                qkey = canonical_presentation_key(Presentation(quiver, ()))
                if qkey in seen_quivers:
                    continue
                seen_quivers.add(qkey)
                quivers.append(quiver)

        seen: set = set()
        found: list[tuple[tuple, GentleAlgebra]] = []
        for quiver in quivers:
            per_vertex = []
            for v in quiver.vertices:
                ins = [a.name for a in quiver.arrows_into[v]]
                outs = [a.name for a in quiver.arrows_from[v]]
                per_vertex.append(_relation_choices(ins, outs))
            for combo in product(*per_vertex):
                relations = [
                    Monomial(quiver.path([a, b]))
                    for choice in combo
                    for a, b in sorted(choice)
                ]
                report = validate_gentle(Presentation(quiver, relations))
                if report.algebra is None:
                    continue
                key = canonical_presentation_key(report.algebra.presentation)
                if key in seen:
                    continue
                seen.add(key)
                found.append((key, report.algebra))
        for _, algebra in sorted(found, key=lambda item: item[0]):
            yield algebra
