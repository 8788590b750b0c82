import random
import time
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from addact.artin import (
    LinearRelationWarning,
    Presentation,
    Subspace,
    annihilator,
    build_algebra,
    check_structure_constants,
    embedding_dimension,
    exp_nilpotent,
    generates_algebra,
    hilbert_function,
    is_gorenstein,
    is_ideal,
    largest_ideal_in,
    lift,
    log_unipotent,
    m_power,
    minimal_presentation,
    mul_elements,
    normal_form,
    presents_same_algebra,
    quotient_by_ideal,
    socle,
    truncated_dimension,
)
from addact.errors import (
    DimensionMismatch,
    NonzeroConstantTerm,
    NotAnIdeal,
    NotInMaximalIdeal,
    NotNilpotent,
    QuotientIsZero,
    TruncationCapExceeded,
    UnitPartNotOne,
    VariableMismatch,
)
from addact.exactpoly import Poly, parse_poly, variables

from conftest import XY, census, example_algebra, fixture_pairs


def build(gens, rels, **kw):
    return build_algebra(Presentation.parse(gens, rels, **kw))


def span(A, *names):
    return Subspace.span(A.dim, [A(n) for n in names])


class TestBuild:
    def test_chain(self):
        A = build(["x"], ["x^6"])
        assert A.dim == 6
        assert A.basis_names() == ["1", "x", "x^2", "x^3", "x^4", "x^5"]
        assert A.nilpotency_degree == 5

    def test_example(self):
        A = example_algebra()
        assert A.dim == 6
        assert A.basis_names() == ["1", "x", "y", "x^2", "x*y", "x^3"]
        assert A.nilpotency_degree == 3

    def test_nonlocal_hits_cap(self):
        t = time.perf_counter()
        with pytest.raises(TruncationCapExceeded):
            build(XY, ["x*y"])
        assert time.perf_counter() - t < 5

    def test_small_cap(self):
        with pytest.raises(TruncationCapExceeded):
            build(["x"], ["x^6"], cap=4)

    def test_nonzero_constant(self):
        with pytest.raises(NonzeroConstantTerm):
            build(XY, ["x^2 + 1", "y^2"])

    def test_linear_relation_warns(self):
        with pytest.warns(LinearRelationWarning):
            A = build(XY, ["y - x^2", "x^4"])
        assert A.dim == 4

    def test_staircase_dims(self):
        # K[x,y]/(xy) truncated below D has 2D - 1 monomials 1, x^i, y^i
        rel = [parse_poly("x*y", XY)]
        assert [truncated_dimension(rel, 2, D) for D in range(1, 6)] == [1, 3, 5, 7, 9]

    @pytest.mark.parametrize("entry", range(6))
    def test_census_dims_against_groebner(self, entry):
        e = census()[entry]
        A = build_algebra(e.presentation())
        assert A.dim == 6 == oracles.quotient_dim(A.presentation.relations, A.gens)
        check_structure_constants(A)

    def test_basis_starts_with_one(self):
        for _, H in fixture_pairs():
            A = H.algebra
            assert A.basis[0] == (0,) * len(A.gens)
            assert all(sum(m) >= 1 for m in A.basis[1:])


class TestStructureConstants:
    def test_exhaustive_on_fixtures(self):
        for _, H in fixture_pairs():
            A = H.algebra
            e = [A.basis_element(i) for i in range(A.dim)]
            for a in e:
                for b in e:
                    assert a * b == b * a
                    for c in e:
                        assert (a * b) * c == a * (b * c)

    def test_example_products(self):
        A = example_algebra()
        x, y = A("x"), A("y")
        assert mul_elements(A, x, A("x*y")) == A.zero()
        assert y * y == A("x^3")
        assert A.one() * x == x

    def test_dimension_mismatch(self):
        A = example_algebra()
        B = build(["x"], ["x^3"])
        with pytest.raises(DimensionMismatch):
            A("x") * B("x")


class TestNormalForm:
    def test_examples(self):
        A = example_algebra()
        assert normal_form(A, parse_poly("y^2", XY)) == A.basis_element(5)
        assert normal_form(A, parse_poly("x^4", XY)) == A.zero()
        assert normal_form(A, parse_poly("1", XY)) == A.one()

    def test_relations_vanish(self):
        for _, H in fixture_pairs():
            A = H.algebra
            for r in A.presentation.relations:
                assert normal_form(A, r) == A.zero()

    def test_mismatch(self):
        with pytest.raises(VariableMismatch):
            normal_form(example_algebra(), parse_poly("x", ["x"]))

    @given(st.integers(0, 10 ** 6))
    def test_homomorphism(self, seed):
        A = example_algebra()
        rng = random.Random(seed)

        def rnd():
            return Poly(XY, {(rng.randint(0, 4), rng.randint(0, 3)): rng.randint(-3, 3)
                             for _ in range(3)})
        f, g = rnd(), rnd()
        assert normal_form(A, f * g) == normal_form(A, f) * normal_form(A, g)
        assert normal_form(A, f + g) == normal_form(A, f) + normal_form(A, g)


class TestSubspaces:
    def test_m_power_example(self):
        A = example_algebra()
        assert m_power(A, 3) == span(A, "x^3")
        assert m_power(A, 4).is_zero()
        assert m_power(A, 0) == Subspace.whole(A.dim)

    def test_m_power_chain(self):
        A = build(["x"], ["x^6"])
        assert m_power(A, 5) == span(A, "x^5")

    def test_m_powers_against_products(self):
        for _, H in fixture_pairs():
            A = H.algebra
            for j in range(A.nilpotency_degree + 2):
                P = m_power(A, j)
                assert P.dim == oracles.m_power_dim(A, j)
                assert all(P.contains(v) for v in oracles.power_products(A, j))

    def test_filtration_strictly_decreases(self):
        for _, H in fixture_pairs():
            A = H.algebra
            dims = [m_power(A, j).dim for j in range(A.nilpotency_degree + 2)]
            assert all(a > b for a, b in zip(dims, dims[1:]))
            assert dims[-1] == 0 and dims[-2] > 0

    def test_socle_example(self):
        A = example_algebra()
        assert socle(A) == span(A, "x*y", "x^3")
        assert not is_gorenstein(A)

    def test_socle_census(self):
        e = census()[4]
        A = build_algebra(e.presentation())
        assert socle(A) == span(A, "z^3")

    def test_annihilator_of_zero(self):
        A = example_algebra()
        assert annihilator(A, Subspace.zero(A.dim)) == Subspace.whole(A.dim)

    def test_socle_contains_top_power(self):
        for _, H in fixture_pairs():
            A = H.algebra
            d = A.nilpotency_degree
            assert socle(A).contains_subspace(m_power(A, d))
            if is_gorenstein(A):
                assert socle(A) == m_power(A, d)

    def test_hilbert(self):
        assert hilbert_function(build(["x"], ["x^6"])) == [1] * 6
        assert hilbert_function(example_algebra()) == [1, 2, 2, 1]
        A6 = build_algebra(census()[5].presentation())
        assert hilbert_function(A6) == [1, 4, 1]

    def test_hilbert_against_products(self):
        for _, H in fixture_pairs():
            A = H.algebra
            h = hilbert_function(A)
            assert h == oracles.hilbert(A)
            assert sum(h) == A.dim and h[0] == 1


class TestIdeals:
    def test_largest_ideal_example(self):
        A = example_algebra()
        U = span(A, "x", "y", "x^2", "x*y")
        assert largest_ideal_in(A, U) == span(A, "x*y")

    def test_largest_ideal_is_m_for_m(self):
        A = example_algebra()
        assert largest_ideal_in(A, A.maximal_ideal) == A.maximal_ideal

    def test_largest_ideal_rejects_unit(self):
        A = example_algebra()
        with pytest.raises(NotInMaximalIdeal):
            largest_ideal_in(A, span(A, "1 + x"))

    def test_largest_ideal_against_fixed_point(self):
        for _, H in fixture_pairs():
            A = H.algebra
            J = largest_ideal_in(A, H.U)
            ref = Subspace.span(A.dim, oracles.largest_ideal(A, H.U.rows))
            assert J == ref
            assert is_ideal(A, J) and H.U.contains_subspace(J)

    def test_largest_ideal_contains_every_ideal_line(self):
        # every one-dimensional ideal inside U lies in J
        A = example_algebra()
        U = span(A, "x", "y", "x^2", "x*y")
        J = largest_ideal_in(A, U)
        for row in U.rows:
            line = Subspace.span(A.dim, [row])
            if is_ideal(A, line):
                assert J.contains_subspace(line)

    def test_gorenstein_census_zero(self):
        for e in census():
            H = e.pair()
            assert largest_ideal_in(H.algebra, H.U).is_zero()

    def test_generates(self):
        A = example_algebra()
        assert generates_algebra(A, span(A, "x", "y", "x^2", "x*y"))
        assert generates_algebra(A, A.maximal_ideal)
        C = build(["x"], ["x^6"])
        assert not generates_algebra(C, span(C, "x^2"))


class TestQuotient:
    def test_example_quotient(self):
        A = example_algebra()
        Q, proj = quotient_by_ideal(A, span(A, "x*y"))
        assert Q.dim == 5
        ref = build(XY, ["x*y", "x^3 - y^2"])
        assert presents_same_algebra(Q, ref)
        assert proj.kernel() == span(A, "x*y")

    def test_rebuild_agrees_with_table(self):
        A = example_algebra()
        Q, _ = quotient_by_ideal(A, span(A, "x*y"))
        R = build_algebra(Q.presentation)
        assert R.basis == Q.basis and R.table == Q.table

    def test_chain_quotient(self):
        A = build(["x"], ["x^6"])
        Q, _ = quotient_by_ideal(A, span(A, "x^5"))
        ref = build(["x"], ["x^5"])
        assert Q.dim == 5 and Q.basis == ref.basis and Q.table == ref.table

    def test_zero_ideal_is_identity(self):
        A = example_algebra()
        Q, proj = quotient_by_ideal(A, Subspace.zero(A.dim))
        assert Q is A

    def test_errors(self):
        A = example_algebra()
        with pytest.raises(NotAnIdeal):
            quotient_by_ideal(A, span(A, "x"))
        with pytest.raises(QuotientIsZero):
            quotient_by_ideal(A, Subspace.whole(A.dim))

    def test_projection_is_multiplicative(self):
        A = example_algebra()
        Q, proj = quotient_by_ideal(A, span(A, "x*y"))
        e = [A.basis_element(i) for i in range(A.dim)]
        for a in e:
            for b in e:
                assert proj(a * b) == proj(a) * proj(b)

    def test_quotient_dropping_a_generator(self):
        # J = <y> + m^2-part makes y redundant: K[x,y]/(x^3, y^2, xy) mod <y - x^2>?
        A = build(XY, ["x^3", "x*y", "y^2"])
        J = span(A, "y")
        Q, proj = quotient_by_ideal(A, J)
        assert Q.gens == ("x",)
        assert Q.dim == 3 and Q.nilpotency_degree == 2
        assert embedding_dimension(Q) == 1

    def test_nilpotency_does_not_grow(self):
        for _, H in fixture_pairs():
            A = H.algebra
            J = largest_ideal_in(A, H.U)
            if J.is_zero():
                continue
            Q, _ = quotient_by_ideal(A, J)
            assert Q.nilpotency_degree <= A.nilpotency_degree


class TestMinimalPresentation:
    def test_substitutes_redundant_generator(self):
        with pytest.warns(LinearRelationWarning):
            A = build(["x", "y"], ["y - x^2", "x^4"])
        pres, subst = minimal_presentation(A)
        assert pres.gens == ("x",)
        assert subst[1] == parse_poly("x^2", ["x"])
        B = build_algebra(pres)
        assert B.dim == A.dim == 4

    def test_minimal_is_unchanged(self):
        A = example_algebra()
        pres, _ = minimal_presentation(A)
        assert pres is A.presentation


def _random_nilpotent(A, rng):
    return A.element((Fraction(0),) + tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                                            for _ in range(A.dim - 1)))


class TestExpLog:
    def test_trivial(self):
        A = example_algebra()
        assert exp_nilpotent(A, A.zero()) == A.one()
        assert log_unipotent(A, A.one()) == A.zero()

    def test_errors(self):
        A = example_algebra()
        with pytest.raises(NotNilpotent):
            exp_nilpotent(A, A.one())
        with pytest.raises(UnitPartNotOne):
            log_unipotent(A, A.one() * 2)

    def test_added_variable_exponential(self):
        A = build(["x", "y", "w"], ["x*y", "x^3 - y^2", "x*w", "y*w", "w^2"])
        ts = variables("t", 4, start=1)
        t = Poly.gens(ts)
        u = A("x") * t[0] + A("y") * t[1] + A("w") * t[2] + A("x^2") * t[3]
        g = exp_nilpotent(A, u)
        half = Fraction(1, 2)
        # x^3 collects t2^2/2 (from y^2), t1^3/6 and the cross term t1*t4 (from x * x^2)
        expect = {"1": 1, "x": t[0], "y": t[1], "w": t[2], "x^2": t[3] + t[0] ** 2 * half,
                  "x^3": t[1] ** 2 * half + t[0] ** 3 * Fraction(1, 6) + t[0] * t[3]}
        names = A.basis_names()
        for name, value in expect.items():
            assert g.coords[names.index(name)] == value

    def test_example_exponential_top(self):
        A = example_algebra()
        ts = variables("t", 4, start=1)
        t = Poly.gens(ts)
        u = A("x") * t[0] + A("y") * t[1] + A("x^2") * t[2] + A("x*y") * t[3]
        g = exp_nilpotent(A, u)
        assert g.coords[5] == parse_poly("t1*t3 + 1/2*t2^2 + 1/6*t1^3", ts)

    def test_example_logarithm_top(self):
        A = example_algebra()
        ts = variables("t", 5, start=1)
        t = Poly.gens(ts)
        one_plus = A.one() + A("x") * t[0] + A("y") * t[1] + A("x^2") * t[2] \
            + A("x*y") * t[3] + A("x^3") * t[4]
        lg = log_unipotent(A, one_plus)
        assert lg.coords[5] == parse_poly("t5 - t1*t3 - 1/2*t2^2 + 1/3*t1^3", ts)

    @pytest.mark.parametrize("entry", range(6))
    def test_inverse_and_additivity_100(self, entry):
        A = build_algebra(census()[entry].presentation())
        rng = random.Random(1000 + entry)
        for _ in range(100):
            u = _random_nilpotent(A, rng)
            v = _random_nilpotent(A, rng)
            eu = exp_nilpotent(A, u)
            assert eu.coords[0] == 1
            assert log_unipotent(A, eu) == u
            assert exp_nilpotent(A, log_unipotent(A, A.one() + v)) == A.one() + v
            assert exp_nilpotent(A, u + v) == eu * exp_nilpotent(A, v)


def test_lift_round_trip():
    for _, H in fixture_pairs():
        A = H.algebra
        for i in range(A.dim):
            e = A.basis_element(i)
            assert normal_form(A, lift(A, e)) == e
