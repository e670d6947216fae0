"""Quivers, paths, relations and presentations.

A quiver is a finite directed multigraph.  Paths compose left to right:
``p = a1 a2 ... an`` means "first ``a1``, then ``a2``"; the source of the
path is the source of its first arrow and the target is the target of the
last one.  A trivial path carries an explicit base vertex, so the trivial
paths at two different vertices are distinct values.

A presentation is a quiver together with a list of relations, each either a
monomial (one path, set to zero) or a binomial (a difference of two parallel
paths).  Presentations are the common carrier passed between all the higher
modules; they serialize to a line-oriented text format (see
:func:`parse_presentation`).

All values in this module are immutable after construction and all
operations are pure functions; instances can be shared freely between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

from .errors import CompositionError, ParseError, RotationError


@dataclass(frozen=True)
class Problem:
    """A single validation finding: a short machine code plus a human message."""

    code: str
    message: str

    def __str__(self):
        return f"[{self.code}] {self.message}"


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str

    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Path:
    """A path, stored as its vertex itinerary plus the arrow names traversed.

    ``vertices`` always has one more entry than ``arrows``; a trivial path is
    ``Path((v,), ())``.  Storing the itinerary makes paths self-contained:
    composition, rotation and vertex queries need no quiver lookup.  Use
    :meth:`Quiver.path` to build a path with endpoint checking against a
    quiver.
    """

    vertices: tuple[str, ...]
    arrows: tuple[str, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.arrows) + 1:
            raise ValueError(
                f"itinerary of {len(self.vertices)} vertices does not fit "
                f"{len(self.arrows)} arrows"
            )

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.arrows)

    def is_trivial(self) -> bool:
        return not self.arrows

    def is_cyclic(self) -> bool:
        return self.source == self.target

    def prefix(self, length: int) -> "Path":
        return Path(self.vertices[: length + 1], self.arrows[:length])

    def label(self) -> str:
        if self.is_trivial():
            return f"e({self.source})"
        return " ".join(self.arrows)

    def __repr__(self):
        return f"Path<{self.label()}>"


def trivial_path(vertex: str) -> Path:
    return Path((vertex,), ())


def path_sort_key(p: Path):
    """Deterministic total order on paths: by length, then arrows, then base."""
    return (len(p.arrows), p.arrows, p.vertices)


def compose(p: Path, q: Path) -> Path:
    """Concatenate ``p`` then ``q``; trivial paths act as identities."""
    if p.target != q.source:
        raise CompositionError(
            f"cannot compose: target {p.target!r} != source {q.source!r}"
        )
    return Path(p.vertices + q.vertices[1:], p.arrows + q.arrows)


def power(p: Path, n: int) -> Path:
    if n < 1:
        raise ValueError("exponent must be >= 1")
    out = p
    for _ in range(n - 1):
        out = compose(out, p)
    return out


def rotate(p: Path, k: int) -> Path:
    """Cyclic rotation: the same cycle read from its ``k``-th arrow onwards."""
    if p.is_trivial() or not p.is_cyclic():
        raise RotationError(f"{p!r} is not a nontrivial cycle")
    k %= len(p.arrows)
    if k == 0:
        return p
    arrows = p.arrows[k:] + p.arrows[:k]
    vertices = p.vertices[k:] + p.vertices[1 : k + 1]
    return Path(vertices, arrows)


def is_subpath(p: Path, q: Path) -> bool:
    """Whether ``p`` occurs as a contiguous block of ``q``.

    A trivial path at ``v`` is a subpath of ``q`` exactly when ``q``
    visits ``v``.
    """
    if p.is_trivial():
        return p.source in q.vertices
    n, m = len(p.arrows), len(q.arrows)
    return any(q.arrows[i : i + n] == p.arrows for i in range(m - n + 1))


@dataclass(frozen=True)
class Monomial:
    """A zero relation: the path is declared zero in the algebra."""

    path: Path

    def __post_init__(self):
        if len(self.path) < 2:
            raise ValueError("monomial relation needs a path of length >= 2")

    def paths(self) -> tuple[Path, ...]:
        return (self.path,)

    def __repr__(self):
        return f"Monomial<{self.path.label()}>"


@dataclass(frozen=True)
class Binomial:
    """A commutativity relation ``left - right`` between two parallel paths."""

    left: Path
    right: Path

    def __post_init__(self):
        if self.left.is_trivial() or self.right.is_trivial():
            raise ValueError("binomial relation needs two nontrivial paths")
        if self.left.source != self.right.source or self.left.target != self.right.target:
            raise ValueError("binomial relation needs parallel paths")
        shorter, longer = sorted((self.left, self.right), key=lambda p: len(p))
        if longer.arrows[: len(shorter)] == shorter.arrows:
            raise ValueError("binomial relation paths must not be prefixes of each other")

    def paths(self) -> tuple[Path, ...]:
        return (self.left, self.right)

    def __repr__(self):
        return f"Binomial<{self.left.label()} = {self.right.label()}>"


Relation = Union[Monomial, Binomial]


@dataclass(frozen=True)
class Quiver:
    """A finite quiver; vertices and arrows are identified by opaque strings.

    The constructor normalizes order (so structurally equal quivers compare
    equal) and checks that arrow names are unique and arrow endpoints are
    declared vertices.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __init__(self, vertices: Iterable[str], arrows: Iterable):
        vs = tuple(sorted(set(vertices)))
        normalized = []
        for a in arrows:
            normalized.append(a if isinstance(a, Arrow) else Arrow(*a))
        normalized.sort(key=lambda a: a.name)
        names = [a.name for a in normalized]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate arrow names: {', '.join(dup)}")
        declared = set(vs)
        for a in normalized:
            if a.source not in declared or a.target not in declared:
                raise ValueError(f"arrow {a.name!r} uses undeclared vertices")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arrows", tuple(normalized))

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def arrows_from(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    @cached_property
    def arrows_into(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.target].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrow_map[name]
        except KeyError:
            raise KeyError(f"no arrow named {name!r}") from None

    def trivial(self, vertex: str) -> Path:
        if vertex not in self.arrows_from:
            raise KeyError(f"no vertex named {vertex!r}")
        return trivial_path(vertex)

    def path(self, arrow_names: Iterable[str], base: str | None = None) -> Path:
        """Build a path from arrow names, checking composability."""
        names = tuple(arrow_names)
        if not names:
            if base is None:
                raise ValueError("a trivial path needs a base vertex")
            return self.trivial(base)
        arrows = [self.arrow(n) for n in names]
        vertices = [arrows[0].source]
        for prev, nxt in zip(arrows, arrows[1:]):
            if prev.target != nxt.source:
                raise CompositionError(
                    f"arrows {prev.name!r} and {nxt.name!r} do not compose"
                )
            vertices.append(prev.target)
        vertices.append(arrows[-1].target)
        return Path(tuple(vertices), names)

    def contains_path(self, p: Path) -> bool:
        """Whether ``p`` is a genuine path of this quiver (names and itinerary)."""
        if p.is_trivial():
            return p.source in set(self.vertices)
        if any(n not in self.arrow_map for n in p.arrows):
            return False
        expected = [self.arrow_map[p.arrows[0]].source]
        for n in p.arrows:
            a = self.arrow_map[n]
            if a.source != expected[-1]:
                return False
            expected.append(a.target)
        return tuple(expected) == p.vertices

    def is_connected(self) -> bool:
        """Connectivity as an undirected graph; the empty quiver is not connected."""
        if not self.vertices:
            return False
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class Presentation:
    """A quiver with relations; every relation path must live in the quiver."""

    quiver: Quiver
    relations: tuple[Relation, ...]

    def __init__(self, quiver: Quiver, relations: Iterable[Relation] = ()):
        rels = tuple(relations)
        for r in rels:
            for p in r.paths():
                if not quiver.contains_path(p):
                    raise ValueError(f"relation path {p!r} is not a path of the quiver")
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "relations", rels)

    @cached_property
    def monomials(self) -> tuple[Path, ...]:
        return tuple(r.path for r in self.relations if isinstance(r, Monomial))

    @cached_property
    def binomials(self) -> tuple[Binomial, ...]:
        return tuple(r for r in self.relations if isinstance(r, Binomial))

    @cached_property
    def quadratic_monomials(self) -> frozenset[tuple[str, str]]:
        """The length-two zero relations, as pairs of arrow names."""
        return frozenset(
            (p.arrows[0], p.arrows[1]) for p in self.monomials if len(p) == 2
        )

    def path_is_nonzero_monomially(self, p: Path) -> bool:
        """Whether ``p`` avoids every monomial relation as a subpath.

        For presentations whose ideal is generated by monomials this is
        exactly "p is nonzero in the algebra".
        """
        return not any(is_subpath(m, p) for m in self.monomials)


def relabel_presentation(
    pres: Presentation,
    vertex_map: dict[str, str] | None = None,
    arrow_map: dict[str, str] | None = None,
) -> Presentation:
    """Rename vertices and arrows throughout a presentation.

    Maps may be partial; unmentioned identifiers are kept.  The renamed
    identifiers must remain pairwise distinct.
    """
    vmap = dict(vertex_map or {})
    amap = dict(arrow_map or {})
    rv = lambda v: vmap.get(v, v)
    ra = lambda a: amap.get(a, a)
    quiver = Quiver(
        (rv(v) for v in pres.quiver.vertices),
        ((ra(a.name), rv(a.source), rv(a.target)) for a in pres.quiver.arrows),
    )

    def rp(p: Path) -> Path:
        return Path(tuple(rv(v) for v in p.vertices), tuple(ra(a) for a in p.arrows))

    relations: list[Relation] = []
    for r in pres.relations:
        if isinstance(r, Monomial):
            relations.append(Monomial(rp(r.path)))
        else:
            relations.append(Binomial(rp(r.left), rp(r.right)))
    return Presentation(quiver, relations)


# ---------------------------------------------------------------------------
# Text format
#
#   # comment
#   vertex <id>
#   arrow <id> <src> <tgt>
#   rel mono <arrow> <arrow> ...
#   rel comm <arrow> ... = <arrow> ...
#
# A trivial path may be written e(<vertex>) where a whole relation side is
# trivial; the relation invariants then decide whether that is admissible
# (it never is for mono/comm relations, and the parser reports the line).
# ---------------------------------------------------------------------------


def _strip(line: str) -> str:
    if "#" in line:
        line = line[: line.index("#")]
    return line.strip()


def _parse_side(tokens: list[str], quiver: Quiver, lineno: int) -> Path:
    if len(tokens) == 1 and tokens[0].startswith("e(") and tokens[0].endswith(")"):
        v = tokens[0][2:-1]
        if v not in set(quiver.vertices):
            raise ParseError(lineno, f"undeclared vertex {v!r} in trivial path")
        return trivial_path(v)
    for t in tokens:
        if t not in quiver.arrow_map:
            raise ParseError(lineno, f"undeclared arrow {t!r}")
    try:
        return quiver.path(tokens)
    except CompositionError as exc:
        raise ParseError(lineno, str(exc)) from None


def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented presentation format; errors carry line numbers."""
    vertices: list[str] = []
    arrows: list[tuple[int, tuple[str, str, str]]] = []
    raw_relations: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) != 2:
                raise ParseError(lineno, "expected: vertex <id>")
            vertices.append(tokens[1])
        elif kind == "arrow":
            if len(tokens) != 4:
                raise ParseError(lineno, "expected: arrow <id> <src> <tgt>")
            arrows.append((lineno, (tokens[1], tokens[2], tokens[3])))
        elif kind == "rel":
            if len(tokens) < 2 or tokens[1] not in ("mono", "comm"):
                raise ParseError(lineno, "expected: rel mono ... or rel comm ...")
            raw_relations.append((lineno, tokens[1:]))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")

    declared = set(vertices)
    for lineno, (name, src, tgt) in arrows:
        for v in (src, tgt):
            if v not in declared:
                raise ParseError(lineno, f"undeclared vertex {v!r} in arrow {name!r}")
    try:
        quiver = Quiver(vertices, (a for _, a in arrows))
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None

    relations: list[Relation] = []
    for lineno, tokens in raw_relations:
        try:
            if tokens[0] == "mono":
                relations.append(Monomial(_parse_side(tokens[1:], quiver, lineno)))
            else:
                if "=" not in tokens:
                    raise ParseError(lineno, "rel comm needs '=' between the two sides")
                split = tokens.index("=")
                left = _parse_side(tokens[1:split], quiver, lineno)
                right = _parse_side(tokens[split + 1 :], quiver, lineno)
                relations.append(Binomial(left, right))
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    try:
        return Presentation(quiver, relations)
    except ValueError as exc:  # pragma: no cover - relation paths already checked
        raise ParseError(1, str(exc)) from None


def serialize_presentation(pres: Presentation) -> str:
    """Canonical text for a presentation: declarations sorted, relations in order."""
    lines = [f"vertex {v}" for v in pres.quiver.vertices]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in pres.quiver.arrows]
    for r in pres.relations:
        if isinstance(r, Monomial):
            lines.append(f"rel mono {' '.join(r.path.arrows)}")
        else:
            lines.append(
                f"rel comm {' '.join(r.left.arrows)} = {' '.join(r.right.arrows)}"
            )
    return "\n".join(lines) + "\n"


def presentation_dot(pres: Presentation, dashed_arrows: frozenset[str] = frozenset()) -> str:
    """Graphviz DOT for the quiver, vertices and arrows in lexicographic order."""
    lines = ["digraph quiver {"]
    for v in pres.quiver.vertices:
        lines.append(f'  "{v}";')
    for a in pres.quiver.arrows:
        style = ", style=dashed" if a.name in dashed_arrows else ""
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
