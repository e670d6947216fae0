"""Computations with gentle algebras, Brauer graphs and their trivial extensions.

The package converts between four kinds of objects and machine-checks the
structural identities that tie them together:

* bound-quiver presentations (``quiveralg.quiver``),
* gentle algebras with their maximal-path data (``quiveralg.gentle``),
* Brauer graphs and their algebras (``quiveralg.brauer``, ``quiveralg.ssb``),
* triangulated marked surfaces (``quiveralg.surface``),

plus the trivial-extension and admissible-cut constructions relating them
(``quiveralg.trivext``, ``quiveralg.cut``), exhaustive small-instance
enumeration (``quiveralg.census``) and roundtrip verification suites
(``quiveralg.suites``) behind a command line (``quiveralg.cli``).
"""

from .brauer import BrauerGraph, algebra_of, canonical_form, is_isomorphic
from .cut import CuttingSet, admissible_cut, enumerate_cutting_sets, verify_roundtrip
from .gentle import GentleAlgebra, gentle_algebra, validate_gentle
from .quiver import (
    Arrow,
    Binomial,
    Monomial,
    Path,
    Presentation,
    Problem,
    Quiver,
    compose,
    is_subpath,
    parse_presentation,
    rotate,
    serialize_presentation,
    trivial_path,
)
from .ssb import SSBPresentation, graph_of_ssb, is_isomorphic_ssb, ssb_presentation, validate_ssb
from .surface import Triangulation, brauer_graph_of_triangulation, jacobian_algebra
from .trivext import graph_of_gentle, trivial_extension

__all__ = [
    "Arrow",
    "Binomial",
    "BrauerGraph",
    "CuttingSet",
    "GentleAlgebra",
    "Monomial",
    "Path",
    "Presentation",
    "Problem",
    "Quiver",
    "SSBPresentation",
    "Triangulation",
    "admissible_cut",
    "algebra_of",
    "brauer_graph_of_triangulation",
    "canonical_form",
    "compose",
    "enumerate_cutting_sets",
    "gentle_algebra",
    "graph_of_gentle",
    "graph_of_ssb",
    "is_isomorphic",
    "is_isomorphic_ssb",
    "is_subpath",
    "jacobian_algebra",
    "parse_presentation",
    "rotate",
    "serialize_presentation",
    "ssb_presentation",
    "trivial_extension",
    "trivial_path",
    "validate_gentle",
    "validate_ssb",
]

__version__ = "0.1.0"
