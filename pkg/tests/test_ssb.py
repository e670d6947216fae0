import pytest
from hypothesis import given, strategies as st

from quiveralg.brauer import algebra_of, is_isomorphic
from quiveralg.errors import RotationError, ValidationError
from quiveralg.quiver import Path, Quiver, relabel_presentation
from quiveralg.ssb import (
    graph_of_ssb,
    is_isomorphic_ssb,
    projective_basis,
    projective_dimension,
    p_cycle,
    rotation_class,
    simple_cycle_decomposition,
    ssb_presentation,
    validate_ssb,
)


def codes(problems):
    return {p.code for p in problems}


@pytest.fixture
def bouquet():
    return Quiver(["v"], [("x", "v", "v"), ("y", "v", "v"), ("z", "v", "v")])


class TestSimpleCycles:
    def test_square_of_loop(self, bouquet):
        dec = simple_cycle_decomposition(bouquet.path(["x", "x"]))
        assert dec.primitive.arrows == ("x",)
        assert dec.exponent == 2

    def test_square_of_two_cycle(self, bouquet):
        dec = simple_cycle_decomposition(bouquet.path(["x", "y", "x", "y"]))
        assert dec.primitive.arrows == ("x", "y")
        assert dec.exponent == 2

    def test_primitive_three_cycle(self, bouquet):
        dec = simple_cycle_decomposition(bouquet.path(["x", "y", "z"]))
        assert dec.exponent == 1

    def test_non_cycle_rejected(self):
        q = Quiver(["1", "2"], [("a", "1", "2")])
        with pytest.raises(RotationError):
            simple_cycle_decomposition(q.path(["a"]))

    @given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=3))
    def test_exponent_times_primitive_length(self, reps, base):
        q = Quiver(["v"], [(f"x{i}", "v", "v") for i in range(base)])
        word = [f"x{i}" for i in range(base)] * reps
        dec = simple_cycle_decomposition(q.path(word))
        assert len(dec.primitive.arrows) * dec.exponent == len(word)
        assert dec.exponent % reps == 0  # base word may itself repeat


class TestPCycle:
    def test_trivial(self):
        assert p_cycle(Path(("1",), ())) == ("1",)

    def test_loop_square_collapses(self, bouquet):
        assert p_cycle(bouquet.path(["x", "x"])) == ("v",)

    def test_fig1_cycle(self, fig1_algebra):
        from quiveralg.trivext import trivial_extension

        ext = trivial_extension(fig1_algebra)
        w = ext.quiver.path(["u", "v", "b(u.v)"])
        assert p_cycle(w) == ("1", "3", "2")

    def test_loop_graph_vertex_twice(self, loop_graph):
        ssb = algebra_of(loop_graph)
        first = ssb.projective_at["E"].first
        assert p_cycle(first) == ("E", "E")


class TestRotationClass:
    def test_lexicographic_least(self, bouquet):
        assert rotation_class(bouquet.path(["y", "x"])).arrows == ("x", "y")

    def test_idempotent(self, bouquet):
        p = bouquet.path(["x", "y"])
        assert rotation_class(rotation_class(p)) == rotation_class(p)

    def test_orbit_collapses(self, bouquet):
        from quiveralg.quiver import rotate

        p = bouquet.path(["x", "y", "z"])
        reps = {rotation_class(rotate(p, k)) for k in range(3)}
        assert len(reps) == 1

    def test_rotation_preserves_exponent(self, bouquet):
        from quiveralg.quiver import rotate

        p = bouquet.path(["x", "y", "x", "y"])
        for k in range(4):
            assert simple_cycle_decomposition(rotate(p, k)).exponent == 2


class TestValidateSSB:
    def test_e21_descriptor(self, e21):
        ssb = algebra_of(e21)
        d = ssb.projective_at["E1"]
        assert d.first.arrows == ("h1", "h1")
        assert d.second.is_trivial()

    def test_loop_graph_descriptor(self, loop_graph):
        d = algebra_of(loop_graph).projective_at["E"]
        assert {d.first.arrows, d.second.arrows} == {("h", "k"), ("k", "h")}

    def test_gentle_input_rejected(self, a3r):
        report = validate_ssb(a3r.presentation)
        assert report.algebra is None
        assert "projectives" in codes(report.problems)

    def test_dual_numbers_rejected(self):
        from quiveralg.quiver import Monomial, Presentation

        q = Quiver(["1"], [("x", "1", "1")])
        report = validate_ssb(Presentation(q, [Monomial(q.path(["x", "x"]))]))
        assert "degenerate" in codes(report.problems)

    def test_ground_field_rejected(self):
        from quiveralg.quiver import Presentation

        report = validate_ssb(Presentation(Quiver(["1"], []), []))
        assert "degenerate" in codes(report.problems)

    def test_missing_offcycle_relation_rejected(self, loop_graph):
        from quiveralg.quiver import Presentation

        pres = algebra_of(loop_graph).presentation
        thinned = Presentation(
            pres.quiver, [r for r in pres.relations if not _is_square(r)]
        )
        report = validate_ssb(thinned)
        assert report.algebra is None
        assert codes(report.problems) & {"normal-form", "S2"}

    def test_raising_constructor(self, a3r):
        with pytest.raises(ValidationError):
            ssb_presentation(a3r.presentation)


def _is_square(relation):
    from quiveralg.quiver import Monomial

    return (
        isinstance(relation, Monomial)
        and len(relation.path) == 2
        and relation.path.arrows[0] == relation.path.arrows[1]
    )


class TestProjectiveBases:
    def test_e21(self, e21):
        ssb = algebra_of(e21)
        labels = [p.arrows for p in projective_basis(ssb, "E1")]
        assert labels == [(), ("h1",), ("h1", "h1")]

    def test_loop_graph(self, loop_graph):
        ssb = algebra_of(loop_graph)
        basis = projective_basis(ssb, "E")
        assert len(basis) == 4
        assert projective_dimension(ssb, "E") == 4

    def test_dimension_sums(self, e21, line3, loop_graph, star3):
        for g, dims in ((e21, [3]), (line3, [3, 3, 4]), (loop_graph, [4]), (star3, [4, 4, 4])):
            ssb = algebra_of(g)
            assert sorted(projective_dimension(ssb, v) for v in ssb.quiver.vertices) == dims


class TestGraphOfSSB:
    def test_roundtrips(self, e21, line3, loop_graph, star3):
        for g in (e21, line3, loop_graph, star3):
            assert is_isomorphic(graph_of_ssb(algebra_of(g)), g)

    def test_loop_recovered_from_double_occurrence(self, loop_graph):
        back = graph_of_ssb(algebra_of(loop_graph))
        assert len(back.multiplicities) == 1
        assert len(back.edges) == 1

    def test_occurrence_invariant(self, e21, line3, loop_graph, star3):
        for g in (e21, line3, loop_graph, star3):
            ssb = algebra_of(g)
            entries = []
            for rep, _ in ssb.cycle_families:
                entries.extend(p_cycle(rep))
            for d in ssb.projectives:
                if d.is_uniserial():
                    entries.append(d.vertex)
            for v in ssb.quiver.vertices:
                assert entries.count(v) == 2


class TestIsomorphismSSB:
    def test_relabeled_copy(self, line3):
        ssb = algebra_of(line3)
        vmap = {v: f"w{i}" for i, v in enumerate(ssb.quiver.vertices)}
        amap = {a.name: f"g{i}" for i, a in enumerate(ssb.quiver.arrows)}
        other = ssb_presentation(relabel_presentation(ssb.presentation, vmap, amap))
        assert is_isomorphic_ssb(ssb, other)

    def test_dimension_distinguishes(self, e21, loop_graph):
        assert not is_isomorphic_ssb(algebra_of(e21), algebra_of(loop_graph))

    def test_line_vs_star_algebras(self, line3, star3):
        assert not is_isomorphic_ssb(algebra_of(line3), algebra_of(star3))

    def test_socle_representative_choice_is_immaterial(self):
        # pendant edge plus loop: relabeling swaps the two socle cycles
        from quiveralg.brauer import BrauerGraph

        g = BrauerGraph(
            {"v0": 1, "v1": 1},
            {"E0": ("h0", "h1"), "E1": ("h2", "h3")},
            {"v0": ("h0",), "v1": ("h1", "h2", "h3")},
        )
        ssb = algebra_of(g)
        amap = {"h1": "z1", "h2": "z2", "h3": "z0"}
        other = ssb_presentation(relabel_presentation(ssb.presentation, None, amap))
        assert is_isomorphic_ssb(ssb, other)
