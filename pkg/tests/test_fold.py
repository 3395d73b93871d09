"""Coset folding: canonical representatives, oracle agreement, circle bundles."""

import dataclasses
import random

import pytest

from swfold.errors import DomainError, HypothesisError, ParseError, StructuralError
from swfold.fold import (
    EulerClass,
    FoldedSW,
    QuotientLattice,
    canonical_rep,
    circle_bundle_sw_closed_form,
    circle_bundle_sw_direct,
    equal_up_to_sign,
    euler_vector_from_text,
    fold,
    fold_bruteforce,
    fold_poly,
    fold_poly_bruteforce,
    is_injective_fold,
)
from swfold.laurent import Basis, LaurentPoly, from_text, monomial
from swfold.manifolds import T3_BASIS, ThreeManifold, surface_times_circle, three_torus

from conftest import random_basis, random_poly


def quotient_of(basis, vector) -> QuotientLattice:
    return QuotientLattice(EulerClass(basis, vector))


def random_manifold(rng: random.Random, basis: Basis) -> ThreeManifold:
    """Random manifold with a symmetrized polynomial (fold needs b_+ >= 2)."""
    p = random_poly(rng, basis, max_terms=6, max_exp=6, max_coeff=4)
    return ThreeManifold(
        name="random",
        basis=basis,
        b1=max(basis.rank, 3),
        sw3=p + p.conjugate(),
        fibered=False,
        provenance=("random",),
    )


def random_chi(rng: random.Random, rank: int) -> tuple:
    while True:
        vector = tuple(rng.randint(-6, 6) for _ in range(rank))
        if any(vector):
            return vector


# -- Euler class text form ------------------------------------------------


class TestEulerText:
    def test_single_direction(self, b3):
        assert euler_vector_from_text("4*m1", b3) == (4, 0, 0)

    def test_combination(self, b3):
        assert euler_vector_from_text("-1*m1 + 2*m2", b3) == (-1, 2, 0)
        assert euler_vector_from_text("-m1 + 2*m2", b3) == (-1, 2, 0)

    def test_zero_allowed_as_vector(self, b3):
        assert euler_vector_from_text("0", b3) == (0, 0, 0)
        assert euler_vector_from_text("m1 - m1", b3) == (0, 0, 0)

    def test_rejects_nonlinear(self, b3):
        for bad in ("m1^2", "m1*m2", "3", "m1^-1"):
            with pytest.raises(ParseError):
                euler_vector_from_text(bad, b3)

    def test_round_trip_through_text(self, b3):
        chi = EulerClass(b3, (-1, 2, 0))
        assert euler_vector_from_text(chi.text, b3) == (-1, 2, 0)
        assert EulerClass(b3, (4, 0, 0)).text == "4*m1"

    def test_zero_euler_class_rejected(self, b3):
        with pytest.raises(DomainError):
            EulerClass(b3, (0, 0, 0))

    def test_length_mismatch_rejected(self, b3):
        with pytest.raises(StructuralError):
            EulerClass(b3, (1, 0))


class TestQuotientLattice:
    def test_pivot_and_normalization(self, b3):
        q = quotient_of(b3, (0, -2, 1))
        assert q.pivot == 1
        assert q.chi == (0, 2, -1)
        assert q.modulus == 2

    def test_negation_gives_same_quotient(self, b3):
        assert quotient_of(b3, (4, 0, 0)) == quotient_of(b3, (-4, 0, 0))


# -- canonical representatives --------------------------------------------


class TestCanonicalRep:
    def test_merging_example(self, b3):
        q = quotient_of(b3, (4, 0, 0))
        assert canonical_rep(q, (-2, -2, 0)) == (2, -2, 0)

    def test_already_canonical_is_fixed(self, b3):
        q = quotient_of(b3, (4, 0, 0))
        assert canonical_rep(q, (2, -2, 0)) == (2, -2, 0)

    def test_skew_direction(self, b3):
        q = quotient_of(b3, (2, 1, 0))
        assert canonical_rep(q, (2, 0, 0)) == (0, -1, 0)

    def test_idempotent_and_in_coset(self):
        rng = random.Random(31)
        for _ in range(200):
            basis = random_basis(rng)
            chi = random_chi(rng, basis.rank)
            q = quotient_of(basis, chi)
            e = tuple(rng.randint(-12, 12) for _ in range(basis.rank))
            rep = canonical_rep(q, e)
            assert 0 <= rep[q.pivot] < q.modulus
            assert canonical_rep(q, rep) == rep
            diff = tuple(a - b for a, b in zip(e, rep))
            k = diff[q.pivot] // q.modulus
            assert diff == tuple(k * c for c in q.chi)

    def test_length_mismatch(self, b3):
        with pytest.raises(StructuralError):
            canonical_rep(quotient_of(b3, (1, 0, 0)), (1, 2))


# -- the fold ---------------------------------------------------------------


class TestFold:
    def test_fig8_pair_by_4m1(self, fig8_pair):
        folded = fold(fig8_pair, "4*m1")
        assert dict(folded.poly.terms()) == {
            (2, -2, 0): 2,
            (0, -2, 0): -3,
            (0, 0, 0): 9,
            (2, 0, 0): -6,
            (2, 2, 0): 2,
            (0, 2, 0): -3,
        }

    def test_fig8_pair_matches_mixed_representative_display(self, fig8_pair):
        # The same six classes written with mixed representatives
        # normalize onto the fold output term by term.
        folded = fold(fig8_pair, "4*m1")
        q = folded.quotient
        mixed = from_text(
            "2*m1^-2*m2^-2 - 3*m2^-2 + 9 - 6*m1^2 + 2*m1^2*m2^2 - 3*m2^2", T3_BASIS
        )
        assert fold_poly(mixed, q) == folded.poly

    def test_five2_pair_by_m1_plus_m2(self, five2_pair):
        folded = fold(five2_pair, "m1 + m2")
        assert dict(folded.poly.terms()) == {
            (0, -4, 0): 4,
            (0, -2, 0): -12,
            (0, 0, 0): 17,
            (0, 2, 0): -12,
            (0, 4, 0): 4,
        }

    def test_constant_polynomial_any_chi(self):
        rng = random.Random(37)
        t3 = three_torus()
        for _ in range(20):
            folded = fold(t3, random_chi(rng, 3))
            assert folded.poly == LaurentPoly.one(T3_BASIS)

    def test_single_monomial_coefficient_preserved(self, b3):
        rng = random.Random(41)
        for _ in range(50):
            p = monomial(b3, rng.choice([-7, -2, 3, 5]), random_chi(rng, 3))
            q = quotient_of(b3, random_chi(rng, 3))
            folded = fold_poly(p, q)
            assert len(folded) == 1
            assert folded.coefficients() == p.coefficients()

    def test_accepts_euler_class_and_vector_and_text(self, fig8_pair):
        by_text = fold(fig8_pair, "4*m1")
        by_vector = fold(fig8_pair, (4, 0, 0))
        by_class = fold(fig8_pair, EulerClass(T3_BASIS, (4, 0, 0)))
        assert by_text == by_vector == by_class

    def test_zero_chi_routes_to_product_case(self, fig8_pair):
        folded = fold(fig8_pair, "0")
        assert folded.product_case
        assert folded.quotient is None
        assert folded.poly == fig8_pair.sw3
        assert folded.chi_text == "0"

    def test_low_b_plus_raises(self):
        pretend = dataclasses.replace(surface_times_circle(1), b1=2)
        with pytest.raises(HypothesisError):
            fold(pretend, (1,))
        with pytest.raises(HypothesisError):
            fold_bruteforce(pretend, (1,))

    def test_folded_exponents_are_canonical(self, five2_pair):
        rng = random.Random(43)
        for _ in range(30):
            folded = fold(five2_pair, random_chi(rng, 3))
            q = folded.quotient
            for exp in folded.poly.support():
                assert 0 <= exp[q.pivot] < q.modulus

    def test_foldedsw_rejects_noncanonical_exponents(self, b1):
        q = quotient_of(b1, (2,))
        with pytest.raises(StructuralError):
            FoldedSW(quotient=q, poly=from_text("t^3", b1), source="bad")


class TestFoldProperties:
    def test_oracle_agrees_on_golden_folds(self, fig8_pair, five2_pair):
        assert fold_bruteforce(fig8_pair, "4*m1") == fold(fig8_pair, "4*m1")
        assert fold_bruteforce(five2_pair, "m1 + m2") == fold(five2_pair, "m1 + m2")
        assert fold_bruteforce(five2_pair, "2*m1 + m2") == fold(five2_pair, "2*m1 + m2")

    def test_zero_polynomial_folds_to_zero(self, b3):
        rng = random.Random(101)
        for _ in range(10):
            q = quotient_of(b3, random_chi(rng, 3))
            assert fold_poly(LaurentPoly.zero(b3), q).is_zero
            assert fold_poly_bruteforce(LaurentPoly.zero(b3), q).is_zero

    def test_oracle_equivalence_on_manifolds(self):
        rng = random.Random(47)
        for _ in range(200):
            basis = random_basis(rng)
            m = random_manifold(rng, basis)
            chi = random_chi(rng, basis.rank)
            assert fold(m, chi) == fold_bruteforce(m, chi)

    def test_oracle_equivalence_on_raw_polynomials(self):
        rng = random.Random(53)
        for _ in range(200):
            basis = random_basis(rng)
            p = random_poly(rng, basis, max_terms=8, max_exp=6, max_coeff=9)
            q = quotient_of(basis, random_chi(rng, basis.rank))
            assert fold_poly(p, q) == fold_poly_bruteforce(p, q)

    def test_conservation(self):
        rng = random.Random(59)
        for _ in range(100):
            basis = random_basis(rng)
            m = random_manifold(rng, basis)
            folded = fold(m, random_chi(rng, basis.rank))
            assert folded.poly.eval_ones() == m.sw3.eval_ones()

    def test_sign_invariance(self):
        rng = random.Random(61)
        for _ in range(100):
            basis = random_basis(rng)
            m = random_manifold(rng, basis)
            chi = random_chi(rng, basis.rank)
            neg = tuple(-c for c in chi)
            assert fold(m, chi) == fold(m, neg)

    def test_linearity(self):
        rng = random.Random(67)
        for _ in range(100):
            basis = random_basis(rng)
            p = random_poly(rng, basis)
            q = random_poly(rng, basis)
            quotient = quotient_of(basis, random_chi(rng, basis.rank))
            assert fold_poly(p + q, quotient) == fold_poly(p, quotient) + fold_poly(q, quotient)

    def test_symmetric_input_gives_cosetwise_symmetric_output(self):
        rng = random.Random(71)
        for _ in range(100):
            basis = random_basis(rng)
            m = random_manifold(rng, basis)
            quotient = quotient_of(basis, random_chi(rng, basis.rank))
            folded = fold_poly(m.sw3, quotient)
            for exp, coeff in folded.terms():
                mirror = canonical_rep(quotient, tuple(-e for e in exp))
                assert folded.coeff(mirror) == coeff


class TestInjectivity:
    def test_spread_out_chi_is_injective(self, fig8_pair):
        assert is_injective_fold(fig8_pair, "5*m1") is True

    def test_merging_chi_is_not(self, fig8_pair):
        assert is_injective_fold(fig8_pair, "4*m1") is False

    def test_unused_direction_is_injective(self, fig8_pair):
        assert is_injective_fold(fig8_pair, "m3") is True

    def test_zero_chi_rejected(self, fig8_pair):
        with pytest.raises(DomainError):
            is_injective_fold(fig8_pair, (0, 0, 0))

    def test_injective_fold_preserves_coefficient_multiset(self):
        rng = random.Random(73)
        seen = 0
        for _ in range(300):
            basis = random_basis(rng)
            m = random_manifold(rng, basis)
            chi = random_chi(rng, basis.rank)
            if is_injective_fold(m, chi):
                seen += 1
                folded = fold(m, chi)
                assert sorted(folded.poly.coefficients()) == sorted(m.sw3.coefficients())
        assert seen > 50  # the property must actually be exercised


class TestCircleBundles:
    def test_direct_spot_values(self):
        assert circle_bundle_sw_direct(2, 2).poly.is_zero
        t = Basis(("t",))
        assert circle_bundle_sw_direct(2, 4).poly == from_text("-2 + 2*t^2", t)
        assert circle_bundle_sw_direct(2, 3).poly == from_text("-2 + t + t^2", t)

    def test_closed_form_spot_values(self):
        t = Basis(("t",))
        assert circle_bundle_sw_closed_form(2, 2).poly.is_zero
        assert circle_bundle_sw_closed_form(2, 4).poly == from_text("-2 + 2*t^2", t)
        assert circle_bundle_sw_closed_form(2, 3).poly == from_text("-2 + t + t^2", t)

    def test_genus_one_is_unit(self):
        for n in (1, 2, 5, -3):
            closed = circle_bundle_sw_closed_form(1, n)
            direct = circle_bundle_sw_direct(1, n)
            assert equal_up_to_sign(closed, direct)
            assert direct.poly == LaurentPoly.one(direct.poly.basis)

    def test_cross_formula_grid(self):
        for genus in range(1, 6):
            for n in [k for k in range(-10, 11) if k != 0]:
                direct = circle_bundle_sw_direct(genus, n)
                closed = circle_bundle_sw_closed_form(genus, n)
                assert equal_up_to_sign(direct, closed), (genus, n)

    def test_direct_matches_bruteforce_oracle(self):
        for genus in range(1, 6):
            for n in [k for k in range(-10, 11) if k != 0]:
                m = surface_times_circle(genus)
                assert circle_bundle_sw_direct(genus, n) == fold_bruteforce(m, (n,))

    def test_direct_zero_euler_is_product_case(self):
        folded = circle_bundle_sw_direct(2, 0)
        assert folded.product_case
        assert folded.poly == surface_times_circle(2).sw3

    def test_closed_form_zero_euler_rejected(self):
        with pytest.raises(DomainError):
            circle_bundle_sw_closed_form(2, 0)

    def test_bad_genus_rejected(self):
        with pytest.raises(DomainError):
            circle_bundle_sw_direct(0, 2)
        with pytest.raises(DomainError):
            circle_bundle_sw_closed_form(0, 2)


class TestEqualUpToSign:
    def test_reflexive(self):
        folded = circle_bundle_sw_direct(2, 4)
        assert equal_up_to_sign(folded, folded)

    def test_negated(self):
        # chi = -4 normalizes to the same quotient; the closed form's
        # sign(n) prefactor flips the polynomial.
        plus = circle_bundle_sw_closed_form(2, 4)
        minus = circle_bundle_sw_closed_form(2, -4)
        assert minus.poly == -plus.poly
        assert equal_up_to_sign(plus, minus)

    def test_unequal_polynomials(self):
        a = circle_bundle_sw_direct(2, 4)
        b = FoldedSW(quotient=a.quotient, poly=from_text("5", a.poly.basis), source="other")
        assert not equal_up_to_sign(a, b)

    def test_quotient_mismatch_rejected(self):
        with pytest.raises(StructuralError):
            equal_up_to_sign(circle_bundle_sw_direct(2, 4), circle_bundle_sw_direct(2, 3))

    def test_product_cases_compare(self, fig8_pair):
        a = fold(fig8_pair, "0")
        b = fold(fig8_pair, (0, 0, 0))
        assert equal_up_to_sign(a, b)
