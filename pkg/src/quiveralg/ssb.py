"""Symmetric special biserial presentations in Brauer-normalized form.

A normalized presentation has three kinds of relations: length-two zero
relations, zero relations of the shape ``C^e * first(C)`` for a cycle ``C``
(one step past the socle of a uniserial projective), and commutativity
relations between two cycle powers based at a common vertex.  From these the
validator derives, for every quiver vertex, the descriptor ``P_v(p, q)`` of
its projective: the two maximal cyclic paths through ``v``, one of which may
be trivial.

The descriptors carry everything this module computes: explicit bases of
the projectives, the decomposition of the arrows into vertex cycles, and
the ribbon graph whose vertices are the rotation classes of the maximal
cyclic paths, with one edge per quiver vertex joining its two occurrences.
Building that graph and comparing it with a starting Brauer graph is the
roundtrip exercised by the verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

from .brauer import BrauerGraph
from .errors import InconsistencyError, RotationError, ValidationError
from .quiver import (
    Binomial,
    Monomial,
    Path,
    Presentation,
    Problem,
    path_sort_key,
    rotate,
    trivial_path,
)
from .gentle import validate_special_biserial


@dataclass(frozen=True)
class SimpleCycleDecomp:
    """A cyclic path written as the smallest repeating cycle and its exponent."""

    primitive: Path
    exponent: int


@dataclass(frozen=True)
class ProjectiveDescriptor:
    """The two maximal cyclic paths through a vertex; ``second`` may be trivial."""

    vertex: str
    first: Path
    second: Path

    def paths(self) -> tuple[Path, ...]:
        return (self.first, self.second)

    def is_uniserial(self) -> bool:
        return self.second.is_trivial()


@dataclass(frozen=True)
class SSBPresentation:
    presentation: Presentation
    projectives: tuple[ProjectiveDescriptor, ...]

    @property
    def quiver(self):
        return self.presentation.quiver

    @cached_property
    def projective_at(self) -> dict[str, ProjectiveDescriptor]:
        return {d.vertex: d for d in self.projectives}

    @cached_property
    def cycle_families(self) -> tuple[tuple[Path, int], ...]:
        """The distinct vertex cycles (canonical rotations) with their exponents."""
        families: dict[Path, int] = {}
        for d in self.projectives:
            for w in d.paths():
                if w.is_trivial():
                    continue
                dec = simple_cycle_decomposition(w)
                families[rotation_class(dec.primitive)] = dec.exponent
        return tuple(sorted(families.items(), key=lambda it: path_sort_key(it[0])))

    @cached_property
    def dimension(self) -> int:
        return sum(projective_dimension(self, v) for v in self.quiver.vertices)


@dataclass(frozen=True)
class SSBValidation:
    problems: tuple[Problem, ...]
    algebra: SSBPresentation | None

    @property
    def ok(self) -> bool:
        return not self.problems


def simple_cycle_decomposition(p: Path) -> SimpleCycleDecomp:
    """Smallest-period decomposition ``p = p0^m`` of a nontrivial cycle."""
    if p.is_trivial() or not p.is_cyclic():
        raise RotationError(f"{p!r} is not a nontrivial cycle")
    n = len(p.arrows)
    for d in range(1, n + 1):
        if n % d == 0 and p.arrows == p.arrows[:d] * (n // d):
            return SimpleCycleDecomp(p.prefix(d), n // d)
    raise AssertionError("unreachable: every word has a period")


def p_cycle(p: Path) -> tuple[str, ...]:
    """Source vertices of the arrows of the simple cycle underlying ``p``.

    Trivial maximal paths are allowed and give the one-entry sequence.
    """
    if p.is_trivial():
        return (p.source,)
    return simple_cycle_decomposition(p).primitive.vertices[:-1]


def rotation_class(p: Path) -> Path:
    """Canonical representative: the lexicographically least rotation."""
    if p.is_trivial():
        return p
    if not p.is_cyclic():
        raise RotationError(f"{p!r} is not a cycle")
    return min((rotate(p, k) for k in range(len(p.arrows))), key=lambda r: r.arrows)


def _looks_like_dual_numbers(pres: Presentation) -> bool:
    q = pres.quiver
    return (
        len(q.vertices) == 1
        and len(q.arrows) == 1
        and q.arrows[0].is_loop()
        and all(isinstance(r, Monomial) and len(r.path) == 2 for r in pres.relations)
        and len(pres.relations) == 1
    )


def validate_ssb(pres: Presentation) -> SSBValidation:
    """Check normalized form and derive the projective descriptors.

    The validator refuses to guess: every structural fact the construction
    of the graph relies on (one relation based at each vertex, each arrow on
    exactly one vertex cycle, zero relations exactly at the out-of-cycle
    compositions) is checked and reported rather than assumed.
    """
    problems: list[Problem] = []
    quiver = pres.quiver

    if not quiver.vertices:
        return SSBValidation((Problem("degenerate", "empty quiver"),), None)
    if len(quiver.vertices) == 1 and not quiver.arrows:
        return SSBValidation(
            (Problem("degenerate", "one vertex and no arrows (the ground field)"),),
            None,
        )
    if _looks_like_dual_numbers(pres):
        return SSBValidation(
            (
                Problem(
                    "degenerate",
                    "one loop with a quadratic zero relation (dual numbers); "
                    "excluded from the Brauer graph correspondence",
                ),
            ),
            None,
        )
    if not quiver.is_connected():
        problems.append(Problem("connected", "quiver is not connected"))
    problems.extend(validate_special_biserial(pres))

    quadratic: set[tuple[str, str]] = set()
    socle_steps: list[Path] = []  # monomials C^e * first(C)
    binomials: list[Binomial] = []
    for r in pres.relations:
        if isinstance(r, Binomial):
            binomials.append(r)
            continue
        w = r.path
        if len(w) == 2:
            quadratic.add((w.arrows[0], w.arrows[1]))
            continue
        body = w.prefix(len(w) - 1)
        if body.is_cyclic() and w.arrows[-1] == w.arrows[0]:
            socle_steps.append(w)
        else:
            problems.append(
                Problem(
                    "normal-form",
                    f"monomial {w.label()!r} is neither quadratic nor a cycle power "
                    "followed by its first arrow",
                )
            )
    for r in binomials:
        for side in r.paths():
            if not side.is_cyclic():
                problems.append(
                    Problem("normal-form", f"binomial side {side.label()!r} is not a cycle")
                )
            if not pres.path_is_nonzero_monomially(side):
                problems.append(
                    Problem(
                        "normal-form",
                        f"binomial side {side.label()!r} contains a zero relation",
                    )
                )

    if problems:
        return SSBValidation(tuple(problems), None)

    # exactly one socle-defining relation based at every vertex
    based: dict[str, list[ProjectiveDescriptor]] = {v: [] for v in quiver.vertices}
    for r in binomials:
        v = r.left.source
        first, second = sorted((r.left, r.right), key=path_sort_key)
        based[v].append(ProjectiveDescriptor(v, first, second))
    for w in socle_steps:
        v = w.source
        based[v].append(ProjectiveDescriptor(v, w.prefix(len(w) - 1), trivial_path(v)))
    descriptors: list[ProjectiveDescriptor] = []
    for v in quiver.vertices:
        if len(based[v]) != 1:
            problems.append(
                Problem(
                    "projectives",
                    f"vertex {v!r} is the base of {len(based[v])} socle relations "
                    "instead of exactly one",
                )
            )
        else:
            descriptors.append(based[v][0])
    if problems:
        return SSBValidation(tuple(problems), None)

    for d in descriptors:
        firsts = {w.arrows[0] for w in d.paths() if not w.is_trivial()}
        lasts = {w.arrows[-1] for w in d.paths() if not w.is_trivial()}
        outs = {a.name for a in quiver.arrows_from[d.vertex]}
        ins = {a.name for a in quiver.arrows_into[d.vertex]}
        if not d.is_uniserial() and (len(firsts) != 2 or len(lasts) != 2):
            problems.append(
                Problem(
                    "projectives",
                    f"the two cycles at {d.vertex!r} share a first or last arrow",
                )
            )
        if firsts != outs or lasts != ins:
            problems.append(
                Problem(
                    "projectives",
                    f"cycles at {d.vertex!r} do not account for all arrows there",
                )
            )

    families: dict[Path, int] = {}
    for d in descriptors:
        for w in d.paths():
            if w.is_trivial():
                continue
            dec = simple_cycle_decomposition(w)
            rep = rotation_class(dec.primitive)
            if families.setdefault(rep, dec.exponent) != dec.exponent:
                problems.append(
                    Problem(
                        "cycles",
                        f"cycle {rep.label()!r} appears with two different exponents",
                    )
                )
    arrow_uses: dict[str, int] = {a.name: 0 for a in quiver.arrows}
    for rep in families:
        for name in rep.arrows:
            if name in arrow_uses:
                arrow_uses[name] += 1
    bad = sorted(n for n, c in arrow_uses.items() if c != 1)
    if bad:
        problems.append(
            Problem(
                "cycles",
                f"arrows not on exactly one vertex cycle: {', '.join(bad)}",
            )
        )
    if problems:
        return SSBValidation(tuple(problems), None)

    # zero relations must sit exactly at the out-of-cycle compositions
    in_cycle: set[tuple[str, str]] = set()
    for rep in families:
        n = len(rep.arrows)
        for i in range(n):
            in_cycle.add((rep.arrows[i], rep.arrows[(i + 1) % n]))
    for a in quiver.arrows:
        for b in quiver.arrows_from[a.target]:
            pair = (a.name, b.name)
            if pair in in_cycle and pair in quadratic:
                problems.append(
                    Problem(
                        "normal-form",
                        f"composition {a.name} {b.name} lies on a vertex cycle "
                        "but is declared zero",
                    )
                )
            if pair not in in_cycle and pair not in quadratic:
                problems.append(
                    Problem(
                        "normal-form",
                        f"composition {a.name} {b.name} is off-cycle but has "
                        "no zero relation",
                    )
                )

    if problems:
        return SSBValidation(tuple(problems), None)
    descriptors.sort(key=lambda d: d.vertex)
    return SSBValidation((), SSBPresentation(pres, tuple(descriptors)))


def ssb_presentation(pres: Presentation) -> SSBPresentation:
    report = validate_ssb(pres)
    if report.algebra is None:
        raise ValidationError(report.problems)
    return report.algebra


def projective_basis(ssb: SSBPresentation, vertex: str) -> tuple[Path, ...]:
    """Explicit basis of the projective at ``vertex``.

    The trivial path, the proper prefixes of both cycles, and one canonical
    representative of the socle (the two full cycles are identified in the
    algebra, so only the smaller one is listed); the length of the result is
    the dimension of the projective.
    """
    d = ssb.projective_at[vertex]
    basis: set[Path] = {trivial_path(vertex)}
    for w in d.paths():
        for k in range(1, len(w)):
            basis.add(w.prefix(k))
    basis.add(min(d.paths(), key=path_sort_key) if not d.is_uniserial() else d.first)
    return tuple(sorted(basis, key=path_sort_key))


def projective_dimension(ssb: SSBPresentation, vertex: str) -> int:
    return len(projective_basis(ssb, vertex))


def _basis_path_set(ssb: SSBPresentation, vertex: str) -> frozenset[Path]:
    """All paths spanning the projective, with both socle representatives.

    Unlike :func:`projective_basis` this does not pick one of the two
    identified full cycles, so the set is stable under renaming and is the
    right object for isomorphism comparisons.
    """
    d = ssb.projective_at[vertex]
    paths: set[Path] = {trivial_path(vertex)}
    for w in d.paths():
        for k in range(1, len(w) + 1):
            paths.add(w.prefix(k))
    return frozenset(paths)


def graph_of_ssb(ssb: SSBPresentation) -> BrauerGraph:
    """The ribbon graph of a normalized symmetric special biserial algebra.

    Graph vertices are the rotation classes of the maximal cyclic paths
    (plus one vertex per trivial maximal path), carrying the exponent of
    their simple cycle as multiplicity.  The vertex sequence of each simple
    cycle lays out germs in cyclic order; each quiver vertex occurs exactly
    twice among all germs and its two occurrences are joined into the edge
    named after it.  A double occurrence inside one cycle closes up into a
    loop.
    """
    stations: list[tuple[str, int, tuple[str, ...]]] = []  # (vertex id, mult, mu)
    for rep, exponent in ssb.cycle_families:
        stations.append((f"c({'.'.join(rep.arrows)})", exponent, rep.vertices[:-1]))
    for d in ssb.projectives:
        if d.is_uniserial():
            stations.append((f"t({d.vertex})", 1, (d.vertex,)))

    occurrences: dict[str, list[tuple[str, int]]] = {}
    for gv, _, mu in stations:
        for idx, qv in enumerate(mu):
            occurrences.setdefault(qv, []).append((gv, idx))
    for qv, occ in sorted(occurrences.items()):
        if len(occ) != 2:
            raise InconsistencyError(
                f"quiver vertex {qv!r} has {len(occ)} germ occurrences instead of 2; "
                "the presentation is not genuinely normalized"
            )
    germ_name: dict[tuple[str, int], str] = {}
    edges: dict[str, tuple[str, str]] = {}
    for qv, occ in occurrences.items():
        occ = sorted(occ)
        for side, place in enumerate(occ):
            germ_name[place] = f"{qv}.{side}"
        edges[qv] = (germ_name[occ[0]], germ_name[occ[1]])

    multiplicities = {gv: mult for gv, mult, _ in stations}
    rotations = {
        gv: tuple(germ_name[(gv, idx)] for idx in range(len(mu)))
        for gv, _, mu in stations
    }
    return BrauerGraph(multiplicities, edges, rotations)


# ---------------------------------------------------------------------------
# Isomorphism testing via Lemma-style basis comparison
# ---------------------------------------------------------------------------


def _vertex_invariant(ssb: SSBPresentation, v: str):
    q = ssb.quiver
    d = ssb.projective_at[v]
    shape = tuple(
        sorted(
            (0, 1)
            if w.is_trivial()
            else (
                len(simple_cycle_decomposition(w).primitive),
                simple_cycle_decomposition(w).exponent,
            )
            for w in d.paths()
        )
    )
    loops = sum(1 for a in q.arrows_from[v] if a.is_loop())
    return (len(q.arrows_into[v]), len(q.arrows_from[v]), loops, shape)


def find_ssb_isomorphism(
    a: SSBPresentation, b: SSBPresentation
) -> tuple[dict[str, str], dict[str, str]] | None:
    """Search for a quiver isomorphism matching all projective bases.

    Exact backtracking over vertex bijections with local-shape pruning,
    then over arrow bijections within parallel classes; a candidate is
    accepted when relabeling carries every projective basis of ``a`` onto
    the corresponding basis of ``b`` as a set of paths.
    """
    qa, qb = a.quiver, b.quiver
    if len(qa.vertices) != len(qb.vertices) or len(qa.arrows) != len(qb.arrows):
        return None
    inv_a = {v: _vertex_invariant(a, v) for v in qa.vertices}
    inv_b = {v: _vertex_invariant(b, v) for v in qb.vertices}
    if sorted(inv_a.values()) != sorted(inv_b.values()):
        return None
    if a.dimension != b.dimension:
        return None

    basis_b = {v: _basis_path_set(b, v) for v in qb.vertices}
    arrows_between_a: dict[tuple[str, str], list[str]] = {}
    for ar in qa.arrows:
        arrows_between_a.setdefault((ar.source, ar.target), []).append(ar.name)
    arrows_between_b: dict[tuple[str, str], list[str]] = {}
    for ar in qb.arrows:
        arrows_between_b.setdefault((ar.source, ar.target), []).append(ar.name)

    order = sorted(qa.vertices, key=lambda v: (inv_a[v], v))
    vmap: dict[str, str] = {}
    used: set[str] = set()

    def vertex_compatible(v: str, w: str) -> bool:
        # arrow multiplicities towards already-assigned vertices must agree
        for u, x in vmap.items():
            if len(arrows_between_a.get((u, v), ())) != len(arrows_between_b.get((x, w), ())):
                return False
            if len(arrows_between_a.get((v, u), ())) != len(arrows_between_b.get((w, x), ())):
                return False
        if len(arrows_between_a.get((v, v), ())) != len(arrows_between_b.get((w, w), ())):
            return False
        return True

    def assign(k: int):
        if k == len(order):
            yield dict(vmap)
            return
        v = order[k]
        for w in qb.vertices:
            if w in used or inv_b[w] != inv_a[v]:
                continue
            if not vertex_compatible(v, w):
                continue
            vmap[v] = w
            used.add(w)
            yield from assign(k + 1)
            del vmap[v]
            used.discard(w)

    def arrow_assignments(full_vmap: dict[str, str]):
        groups = []
        for (s, t), names in sorted(arrows_between_a.items()):
            images = arrows_between_b.get((full_vmap[s], full_vmap[t]), [])
            if len(images) != len(names):
                return
            groups.append((sorted(names), sorted(images)))

        def rec(i: int, amap: dict[str, str]):
            if i == len(groups):
                yield dict(amap)
                return
            names, images = groups[i]
            for perm in permutations(images):
                for n, im in zip(names, perm):
                    amap[n] = im
                yield from rec(i + 1, amap)
                for n in names:
                    del amap[n]

        yield from rec(0, {})

    for full_vmap in assign(0):
        for amap in arrow_assignments(full_vmap):

            def relabel(p: Path) -> Path:
                return Path(
                    tuple(full_vmap[v] for v in p.vertices),
                    tuple(amap[n] for n in p.arrows),
                )

            if all(
                frozenset(relabel(p) for p in _basis_path_set(a, v))
                == basis_b[full_vmap[v]]
                for v in qa.vertices
            ):
                return full_vmap, amap
    return None


def is_isomorphic_ssb(a: SSBPresentation, b: SSBPresentation) -> bool:
    return find_ssb_isomorphism(a, b) is not None


def distinguishing_invariant(a: SSBPresentation, b: SSBPresentation) -> str:
    """A human-readable reason two algebras differ, for reporting."""
    if a.dimension != b.dimension:
        return f"dimensions differ: {a.dimension} != {b.dimension}"
    dims_a = sorted(projective_dimension(a, v) for v in a.quiver.vertices)
    dims_b = sorted(projective_dimension(b, v) for v in b.quiver.vertices)
    if dims_a != dims_b:
        return f"projective dimension multisets differ: {dims_a} != {dims_b}"
    if len(a.quiver.arrows) != len(b.quiver.arrows):
        return (
            f"arrow counts differ: {len(a.quiver.arrows)} != {len(b.quiver.arrows)}"
        )
    return "no quiver bijection matches the projective bases"
