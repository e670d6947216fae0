"""Admissible cuts of multiplicity-one Brauer graph algebras.

The arrows of such an algebra partition into vertex cycles, one per graph
vertex.  A cutting set picks exactly one arrow from every cycle; deleting
it leaves a gentle algebra, and the trivial extension of that gentle
algebra is the original algebra again.  Cycle-power and commutativity
relations always die under a cut (each cycle word loses exactly one arrow),
so the cut algebra keeps precisely the quadratic zero relations supported
on surviving arrows.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .errors import CuttingSetError, MultiplicityError
from .gentle import GentleAlgebra, gentle_algebra
from .quiver import Monomial, Presentation, Quiver
from .ssb import SSBPresentation, is_isomorphic_ssb
from .trivext import trivial_extension


@dataclass(frozen=True)
class CuttingSet:
    arrows: tuple[str, ...]

    def __init__(self, arrows: Iterable[str]):
        object.__setattr__(self, "arrows", tuple(sorted(arrows)))

    def __contains__(self, name: str) -> bool:
        return name in self.arrows


def vertex_cycles(ssb: SSBPresentation) -> list[tuple[str, ...]]:
    """The arrow cycles, one per graph vertex, as canonical rotations.

    Together they cover every arrow exactly once; this is validated when
    the presentation is built.
    """
    return [rep.arrows for rep, _ in ssb.cycle_families]


def enumerate_cutting_sets(ssb: SSBPresentation) -> list[CuttingSet]:
    """All cutting sets, lexicographically; one per choice of arrow per cycle."""
    exponents = [exp for _, exp in ssb.cycle_families]
    if any(e != 1 for e in exponents):
        raise MultiplicityError(
            "cutting requires multiplicity one at every graph vertex; "
            f"found exponents {sorted(set(exponents))}"
        )
    choices = [sorted(cycle) for cycle in vertex_cycles(ssb)]
    return sorted(
        (CuttingSet(combo) for combo in product(*choices)),
        key=lambda c: c.arrows,
    )


def _check_cutting_set(ssb: SSBPresentation, cut: CuttingSet) -> None:
    cycles = vertex_cycles(ssb)
    on_cycles = {a for cycle in cycles for a in cycle}
    stray = sorted(set(cut.arrows) - on_cycles)
    if stray:
        raise CuttingSetError(f"arrows not on any vertex cycle: {', '.join(stray)}")
    for cycle in cycles:
        hits = [a for a in cycle if a in cut]
        if len(hits) != 1:
            word = " ".join(cycle)
            verb = "uncut" if not hits else f"cut {len(hits)} times"
            raise CuttingSetError(f"vertex cycle ({word}) is {verb}")


def admissible_cut(ssb: SSBPresentation, cut: CuttingSet) -> GentleAlgebra:
    """Delete the cutting set; the survivors present a gentle algebra."""
    exponents = [exp for _, exp in ssb.cycle_families]
    if any(e != 1 for e in exponents):
        raise MultiplicityError("cutting requires multiplicity one at every graph vertex")
    _check_cutting_set(ssb, cut)
    quiver = ssb.quiver
    removed = set(cut.arrows)
    remaining = Quiver(
        quiver.vertices,
        [(a.name, a.source, a.target) for a in quiver.arrows if a.name not in removed],
    )
    relations = [
        Monomial(remaining.path([a, b]))
        for a, b in sorted(ssb.presentation.quadratic_monomials)
        if a not in removed and b not in removed
    ]
    return gentle_algebra(Presentation(remaining, relations))


def verify_roundtrip(ssb: SSBPresentation, cut: CuttingSet) -> bool:
    """Whether the trivial extension of the cut recovers the original algebra."""
    return is_isomorphic_ssb(trivial_extension(admissible_cut(ssb, cut)), ssb)
