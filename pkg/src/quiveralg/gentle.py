"""Recognition of special biserial and gentle presentations.

Gentle algebras are presented by a quiver with only quadratic monomial
relations, subject to the local conditions: at most two arrows in and out of
every vertex, at most one allowed continuation and one forbidden
continuation on either side of every arrow.  On a validated presentation
this module computes the nonzero paths, the maximal paths, the extended
maximal-path set used by the trivial-extension construction, and the socle
basis (computed from the annihilation definition, independently of the
maximal-path machinery, so that their equality is a checkable fact rather
than a definition).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ValidationError
from .quiver import (
    Arrow,
    Monomial,
    Path,
    Presentation,
    Problem,
    compose,
    path_sort_key,
    trivial_path,
)


@dataclass(frozen=True)
class GentleAlgebra:
    """A gentle presentation with its maximal-path data cached.

    ``maximal_paths`` is the set of nonzero nontrivial paths that no arrow
    extends on either side; ``extended_maximal_paths`` additionally contains
    the trivial paths at the vertices singled out by the three local rules
    of :func:`extended_maximal_paths`.  Instances are produced by
    :func:`validate_gentle` / :func:`gentle_algebra`.
    """

    presentation: Presentation
    maximal_paths: tuple[Path, ...]
    extended_maximal_paths: tuple[Path, ...]

    @property
    def quiver(self):
        return self.presentation.quiver

    @cached_property
    def dimension(self) -> int:
        return len(nonzero_paths(self))


@dataclass(frozen=True)
class GentleValidation:
    problems: tuple[Problem, ...]
    algebra: GentleAlgebra | None

    @property
    def ok(self) -> bool:
        return not self.problems


def _allowed_successors(pres: Presentation, arrow: Arrow) -> list[Arrow]:
    rel2 = pres.quadratic_monomials
    return [
        b
        for b in pres.quiver.arrows_from[arrow.target]
        if (arrow.name, b.name) not in rel2
    ]


def _allowed_predecessors(pres: Presentation, arrow: Arrow) -> list[Arrow]:
    rel2 = pres.quadratic_monomials
    return [
        b
        for b in pres.quiver.arrows_into[arrow.source]
        if (b.name, arrow.name) not in rel2
    ]


def validate_special_biserial(pres: Presentation) -> list[Problem]:
    """Check the two local special-biserial conditions.

    Violations are returned as data; an empty list means both conditions
    hold.  Membership of a length-two path in the ideal is read off the
    quadratic monomial relations, which is exact for presentations in which
    longer relations never reduce a length-two path to zero (monomial
    ideals, and the normalized symmetric special biserial form).
    """
    problems = []
    quiver = pres.quiver
    for v in quiver.vertices:
        if len(quiver.arrows_from[v]) > 2:
            problems.append(
                Problem("S1", f"vertex {v!r} is the source of more than two arrows")
            )
        if len(quiver.arrows_into[v]) > 2:
            problems.append(
                Problem("S1", f"vertex {v!r} is the target of more than two arrows")
            )
    for a in quiver.arrows:
        succ = _allowed_successors(pres, a)
        if len(succ) > 1:
            names = ", ".join(b.name for b in succ)
            problems.append(
                Problem("S2", f"arrow {a.name!r} has several allowed successors: {names}")
            )
        pred = _allowed_predecessors(pres, a)
        if len(pred) > 1:
            names = ", ".join(b.name for b in pred)
            problems.append(
                Problem("S2", f"arrow {a.name!r} has several allowed predecessors: {names}")
            )
    return problems


def _has_relation_free_cycle(pres: Presentation) -> bool:
    """Detect an oriented cycle of arrows all of whose steps avoid the ideal.

    Such a cycle supports arbitrarily long nonzero paths, i.e. an
    infinite-dimensional algebra.  DFS over the allowed-successor graph on
    arrows (three-color marking).
    """
    color: dict[str, int] = {}

    def dfs(arrow: Arrow) -> bool:
        color[arrow.name] = 1
        for nxt in _allowed_successors(pres, arrow):
            c = color.get(nxt.name, 0)
            if c == 1:
                return True
            if c == 0 and dfs(nxt):
                return True
        color[arrow.name] = 2
        return False

    return any(color.get(a.name, 0) == 0 and dfs(a) for a in pres.quiver.arrows)


def validate_gentle(pres: Presentation) -> GentleValidation:
    """Full gentle validation; on success the returned report carries the algebra.

    Beyond the special biserial conditions and the quadratic-monomial shape
    of the relation set, this rejects relation-free oriented cycles
    (infinite-dimensional algebras), disconnected quivers, and the two
    degenerate algebras: the empty quiver and the one-vertex, zero-arrow
    quiver.
    """
    problems: list[Problem] = []
    quiver = pres.quiver
    if not quiver.vertices:
        problems.append(Problem("degenerate", "empty quiver"))
    elif len(quiver.vertices) == 1 and not quiver.arrows:
        problems.append(
            Problem("degenerate", "one vertex and no arrows (the ground field)")
        )
    if quiver.vertices and not quiver.is_connected():
        problems.append(Problem("connected", "quiver is not connected"))

    for r in pres.relations:
        if isinstance(r, Monomial):
            if len(r.path) != 2:
                problems.append(
                    Problem("S3", f"monomial relation {r.path.label()!r} has length != 2")
                )
        else:
            problems.append(
                Problem("S3", f"binomial relation {r!r} is not allowed in a gentle presentation")
            )
    problems.extend(validate_special_biserial(pres))

    for a in quiver.arrows:
        rel2 = pres.quadratic_monomials
        forbidden_after = [
            b for b in quiver.arrows_from[a.target] if (a.name, b.name) in rel2
        ]
        if len(forbidden_after) > 1:
            problems.append(
                Problem("S4", f"arrow {a.name!r} has several forbidden successors")
            )
        forbidden_before = [
            b for b in quiver.arrows_into[a.source] if (b.name, a.name) in rel2
        ]
        if len(forbidden_before) > 1:
            problems.append(
                Problem("S4", f"arrow {a.name!r} has several forbidden predecessors")
            )

    if not problems and _has_relation_free_cycle(pres):
        problems.append(
            Problem(
                "finite",
                "an oriented cycle avoids all relations; the algebra is infinite-dimensional",
            )
        )

    if problems:
        return GentleValidation(tuple(problems), None)

    maximal = _maximal_path_chains(pres)
    extended = maximal + tuple(
        trivial_path(v) for v in quiver.vertices if _gets_trivial_maximal(pres, v)
    )
    algebra = GentleAlgebra(pres, maximal, extended)
    for v, occ in vertex_occurrences(algebra).items():
        if len(occ) != 2:
            problems.append(
                Problem(
                    "occurrences",
                    f"vertex {v!r} lies on {len(occ)} maximal-path slots instead of 2",
                )
            )
    if problems:  # pragma: no cover - unreachable for inputs passing the checks above
        return GentleValidation(tuple(problems), None)
    return GentleValidation((), algebra)


def gentle_algebra(pres: Presentation) -> GentleAlgebra:
    """Validate and return the algebra, raising on any problem."""
    report = validate_gentle(pres)
    if report.algebra is None:
        raise ValidationError(report.problems)
    return report.algebra


def _maximal_path_chains(pres: Presentation) -> tuple[Path, ...]:
    """Maximal paths as the chains of the allowed-successor map on arrows.

    After gentle validation each arrow has at most one allowed successor and
    predecessor and the successor graph is acyclic, so the arrows decompose
    into disjoint chains; each chain, read in order, is one maximal path.
    """
    quiver = pres.quiver
    starts = [a for a in quiver.arrows if not _allowed_predecessors(pres, a)]
    chains: list[Path] = []
    used: set[str] = set()
    for start in starts:
        names = [start.name]
        used.add(start.name)
        current = start
        while True:
            succ = _allowed_successors(pres, current)
            if not succ:
                break
            current = succ[0]
            names.append(current.name)
            used.add(current.name)
        chains.append(quiver.path(names))
    leftover = [a.name for a in quiver.arrows if a.name not in used]
    if leftover:  # pragma: no cover - excluded by the relation-free cycle check
        raise ValidationError(
            [Problem("finite", f"arrows {leftover} lie on a relation-free cycle")]
        )
    return tuple(sorted(chains, key=path_sort_key))


def _gets_trivial_maximal(pres: Presentation, v: str) -> bool:
    """Whether the trivial path at ``v`` joins the extended maximal paths.

    Three local shapes qualify: a sink with a single incoming arrow, a
    source with a single outgoing arrow, and a vertex with exactly one
    incoming and one outgoing arrow whose composition avoids the ideal.
    """
    ins = pres.quiver.arrows_into[v]
    outs = pres.quiver.arrows_from[v]
    if len(ins) == 1 and not outs:
        return True
    if len(outs) == 1 and not ins:
        return True
    if len(ins) == 1 and len(outs) == 1:
        return (ins[0].name, outs[0].name) not in pres.quadratic_monomials
    return False


def maximal_paths(algebra: GentleAlgebra) -> tuple[Path, ...]:
    return algebra.maximal_paths


def extended_maximal_paths(algebra: GentleAlgebra) -> tuple[Path, ...]:
    return algebra.extended_maximal_paths


def vertex_occurrences(algebra: GentleAlgebra) -> dict[str, list[tuple[Path, int]]]:
    """Occurrences of each quiver vertex along the extended maximal paths.

    An occurrence is a pair (path, slot) where slot indexes the vertex
    itinerary of the path; one path may visit a vertex twice and then
    contributes two occurrences.  Every vertex has exactly two.
    """
    occ: dict[str, list[tuple[Path, int]]] = {v: [] for v in algebra.quiver.vertices}
    for m in algebra.extended_maximal_paths:
        for slot, v in enumerate(m.vertices):
            occ[v].append((m, slot))
    return occ


def nonzero_paths(algebra: GentleAlgebra) -> list[Path]:
    """All paths avoiding the relations, trivial paths included.

    This set is a basis of the algebra; finiteness is guaranteed by the
    relation-free cycle rejection in :func:`validate_gentle`.
    """
    pres = algebra.presentation
    quiver = pres.quiver
    out: list[Path] = [trivial_path(v) for v in quiver.vertices]
    # every single arrow is nonzero; longer nonzero paths are their unique
    # allowed-successor extensions, so this reaches each path exactly once
    frontier: list[Path] = [quiver.path([a.name]) for a in quiver.arrows]
    while frontier:
        p = frontier.pop()
        out.append(p)
        last = quiver.arrow_map[p.arrows[-1]]
        for nxt in _allowed_successors(pres, last):
            frontier.append(compose(p, quiver.path([nxt.name])))
    return sorted(out, key=path_sort_key)


def socle_basis(algebra: GentleAlgebra) -> list[Path]:
    """Nonzero paths killed by every arrow on both sides.

    Computed by testing annihilation over the enumerated nonzero paths with
    the generic subpath-based zero test, not via the maximal-path chain
    decomposition; agreement with :func:`maximal_paths` is therefore a
    meaningful check.
    """
    pres = algebra.presentation
    quiver = pres.quiver

    def is_zero_extension(p: Path, a: Arrow, on_left: bool) -> bool:
        if on_left:
            if a.target != p.source:
                return True
            extended = compose(quiver.path([a.name]), p)
        else:
            if p.target != a.source:
                return True
            extended = compose(p, quiver.path([a.name]))
        return not pres.path_is_nonzero_monomially(extended)

    basis = [
        p
        for p in nonzero_paths(algebra)
        if all(is_zero_extension(p, a, True) for a in quiver.arrows)
        and all(is_zero_extension(p, a, False) for a in quiver.arrows)
    ]
    return sorted(basis, key=path_sort_key)
