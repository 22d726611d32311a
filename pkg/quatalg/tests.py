from unittest import mock

from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from arith.exceptions import InvalidArgument
from arith.services import legendre, primes_below
from localsym.models import Place
from quadfield.services import make_field, squarefree_range

from .models import (
    CaseLabel,
    EvidenceKind,
    ExtensionDescriptor,
    ExtensionKind,
    LemmaCase,
    LemmaMatch,
    QuaternionAlgebraQ,
    Verdict,
    VerdictResult,
)
from .services import (
    classify_extension,
    classify_over_Q,
    classify_quadratic,
    classify_quadratic_closed_form,
    classify_quadratic_engine,
    closed_form_cases,
    kummer_condition,
    lemma_cases,
    lemma_discriminant_case,
    main_theorem_holds,
    ramification_report,
    requires_distinct_primes,
)
from .validation import ABELIAN_EXPONENTS, ELLS, KUMMER_ALPHAS, cross_validate

PRIMES_100 = primes_below(100)
FIELDS_60 = [d for d in squarefree_range(-60, 60) if abs(d) >= 2]

primes = st.sampled_from(PRIMES_100)
fields = st.sampled_from(FIELDS_60)


class QuaternionAlgebraTests(SimpleTestCase):
    def test_zero_rejected(self):
        with self.assertRaises(InvalidArgument):
            QuaternionAlgebraQ(0, 3)

    def test_ramification_report_examples(self):
        report = ramification_report(QuaternionAlgebraQ(3, 2))
        self.assertEqual(report.places, {Place.finite(2), Place.finite(3)})
        self.assertEqual(report.reduced_discriminant, 6)

        report = ramification_report(QuaternionAlgebraQ(5, 3))
        self.assertEqual(report.places, {Place.finite(3), Place.finite(5)})
        self.assertEqual(report.reduced_discriminant, 15)

        report = ramification_report(QuaternionAlgebraQ(1, 7))
        self.assertTrue(report.splits)
        self.assertEqual(report.reduced_discriminant, 1)

    def test_real_place_not_in_discriminant(self):
        report = ramification_report(QuaternionAlgebraQ(-1, -1))
        self.assertEqual(report.sorted_places, [Place.finite(2), Place.real()])
        self.assertEqual(report.reduced_discriminant, 2)


class LemmaTests(SimpleTestCase):
    def test_examples(self):
        match = lemma_discriminant_case(7, 3)
        self.assertEqual((match.case, match.discriminant), (LemmaCase.CASE_I, 14))
        match = lemma_discriminant_case(3, 2)
        self.assertEqual((match.case, match.discriminant), (LemmaCase.CASE_II, 6))
        self.assertIsNone(lemma_discriminant_case(5, 2))

    def test_requires_primes(self):
        with self.assertRaises(InvalidArgument):
            lemma_discriminant_case(9, 2)

    def test_equal_primes(self):
        match = lemma_discriminant_case(7, 7)
        self.assertEqual((match.case, match.discriminant), (LemmaCase.CASE_I, 14))
        self.assertEqual(ramification_report(QuaternionAlgebraQ(7, 7)).reduced_discriminant, 14)
        self.assertIsNone(lemma_discriminant_case(5, 5))

    def test_cases_are_exclusive(self):
        for p in primes_below(200):
            for q in primes_below(200):
                with self.subTest(p=p, q=q):
                    self.assertLessEqual(len(lemma_cases(p, q)), 1)
                    self.assertLessEqual(len(closed_form_cases(p, q)), 1)

    def test_agrees_with_ramification_below_200(self):
        primes_200 = primes_below(200)
        for p in primes_200:
            for q in primes_200:
                match = lemma_discriminant_case(p, q)
                if match is None:
                    continue
                with self.subTest(p=p, q=q, case=match.case):
                    report = ramification_report(QuaternionAlgebraQ(p, q))
                    self.assertEqual(report.reduced_discriminant, match.discriminant)
                    self.assertFalse(any(v.is_real for v in report.places))


class ClassifyOverQTests(SimpleTestCase):
    def test_examples(self):
        verdict = classify_over_Q(QuaternionAlgebraQ(3, 2))
        self.assertTrue(verdict.is_division)
        self.assertEqual(verdict.evidence.place, Place.finite(2))
        self.assertEqual(verdict.evidence.kind, EvidenceKind.WITNESS_PLACE)

        self.assertEqual(classify_over_Q(QuaternionAlgebraQ(1, 1)).result, VerdictResult.SPLIT)
        self.assertTrue(classify_over_Q(QuaternionAlgebraQ(7, 47)).is_division)


class QuadraticTests(SimpleTestCase):
    def test_engine_examples(self):
        verdict = classify_quadratic_engine(make_field(3), QuaternionAlgebraQ(13, 7))
        self.assertTrue(verdict.is_division)
        self.assertEqual(verdict.evidence.place, Place.finite(13))

        verdict = classify_quadratic_engine(make_field(-3), QuaternionAlgebraQ(5, 3))
        self.assertEqual(verdict.result, VerdictResult.SPLIT)
        self.assertEqual(verdict.case, "engine")

        verdict = classify_quadratic_engine(make_field(17), QuaternionAlgebraQ(3, 2))
        self.assertEqual(verdict.evidence.place, Place.finite(2))

    def test_closed_form_examples(self):
        verdict = classify_quadratic_closed_form(make_field(3), 13, 7)
        self.assertTrue(verdict.is_division)
        self.assertEqual(verdict.case, "quadratic/case1")

        verdict = classify_quadratic_closed_form(make_field(-3), 5, 3)
        self.assertFalse(verdict.is_division)
        self.assertEqual(verdict.evidence.case, CaseLabel.QUADRATIC_1)

        verdict = classify_quadratic_closed_form(make_field(17), 11, 2)
        self.assertTrue(verdict.is_division)
        self.assertEqual(verdict.case, "quadratic/case2")

    def test_closed_form_outside_hypotheses(self):
        self.assertIsNone(classify_quadratic_closed_form(make_field(5), 5, 2))
        verdict = classify_quadratic(make_field(5), 5, 2)
        self.assertEqual(verdict.evidence.case, CaseLabel.ENGINE)

    def test_equal_primes_three_mod_four(self):
        F = make_field(2)
        closed = classify_quadratic_closed_form(F, 7, 7)
        self.assertTrue(closed.is_division)
        self.assertEqual(closed.case, "quadratic/case3")
        engine = classify_quadratic_engine(F, QuaternionAlgebraQ(7, 7))
        self.assertEqual(engine.result, closed.result)
        self.assertEqual(engine.evidence.place, Place.finite(7))

    def test_equal_primes_one_mod_four(self):
        with self.assertRaises(InvalidArgument) as ctx:
            classify_quadratic_closed_form(make_field(3), 5, 5)
        self.assertEqual(ctx.exception.code, "distinct_primes")
        self.assertEqual(classify_quadratic(make_field(3), 5, 5).case, "engine")
        self.assertIsNone(classify_quadratic_closed_form(make_field(3), 2, 2))

    def test_closed_form_matches_engine(self):
        for d in FIELDS_60:
            F = make_field(d)
            for p in PRIMES_100:
                for q in PRIMES_100:
                    if requires_distinct_primes(p, q):
                        continue
                    closed = classify_quadratic_closed_form(F, p, q)
                    if closed is None:
                        continue
                    engine = classify_quadratic_engine(F, QuaternionAlgebraQ(p, q))
                    with self.subTest(d=d, p=p, q=q, case=closed.case):
                        self.assertEqual(closed.result, engine.result)

    def test_main_theorem_matches_engine(self):
        for d in FIELDS_60:
            F = make_field(d)
            for p in PRIMES_100:
                for q in PRIMES_100:
                    holds = main_theorem_holds(F, p, q)
                    if holds is None:
                        continue
                    engine = classify_quadratic_engine(F, QuaternionAlgebraQ(p, q))
                    with self.subTest(d=d, p=p, q=q):
                        self.assertEqual(holds, engine.is_division)


class ExtensionTests(SimpleTestCase):
    def test_examples(self):
        verdict = classify_extension(ExtensionDescriptor.dihedral(make_field(3), 5), 13, 7)
        self.assertTrue(verdict.is_division)
        self.assertEqual(verdict.case, "theorem-main/case1")
        self.assertEqual(verdict.evidence.kind, EvidenceKind.DESCENT)
        self.assertEqual(verdict.evidence.inner.case, "quadratic/case1")

        verdict = classify_extension(ExtensionDescriptor.kummer_cubic(2), 13, 7)
        self.assertTrue(verdict.is_division)
        self.assertEqual(verdict.case, "kummer/case1")

        verdict = classify_extension(ExtensionDescriptor.dihedral(make_field(17), 3), 7, 3)
        self.assertTrue(verdict.is_division)
        self.assertEqual(verdict.case, "theorem-main/case3")

    def test_base_and_quadratic_kinds(self):
        verdict = classify_extension(ExtensionDescriptor.base_q(), 3, 2)
        self.assertEqual(verdict.case, "ramification")
        verdict = classify_extension(ExtensionDescriptor.quadratic(make_field(17)), 11, 2)
        self.assertEqual(verdict.case, "quadratic/case2")

    def test_descriptor_validation(self):
        for alpha in (0, 1, -1, 8, 24):
            with self.subTest(alpha=alpha), self.assertRaises(InvalidArgument):
                ExtensionDescriptor.kummer_cubic(alpha)
        self.assertEqual(ExtensionDescriptor.kummer_cubic(-2).base_field.value, -3)
        with self.assertRaises(InvalidArgument):
            ExtensionDescriptor.dihedral(make_field(3), 2)
        with self.assertRaises(InvalidArgument):
            ExtensionDescriptor.unramified_abelian(make_field(3), 3, 0)

    def test_degree(self):
        F = make_field(-23)
        self.assertEqual(ExtensionDescriptor.dihedral(F, 3).degree, 3)
        self.assertEqual(ExtensionDescriptor.unramified_abelian(F, 3, 2).degree, 9)
        self.assertEqual(ExtensionDescriptor.kummer_cubic(2).degree, 3)
        self.assertEqual(ExtensionDescriptor.quadratic(F).kind, ExtensionKind.QUADRATIC)

    @given(fields, primes, primes)
    @settings(max_examples=200, deadline=None)
    def test_descent_invariance(self, d, p, q):
        F = make_field(d)
        expected = classify_quadratic(F, p, q).result
        for ell in ELLS:
            descriptors = [ExtensionDescriptor.dihedral(F, ell)] + [
                ExtensionDescriptor.unramified_abelian(F, ell, n) for n in ABELIAN_EXPONENTS
            ]
            for E in descriptors:
                self.assertEqual(classify_extension(E, p, q).result, expected)

    def test_kummer_independent_of_alpha(self):
        for p in PRIMES_100:
            for q in PRIMES_100:
                expected = kummer_condition(p, q)
                if expected is None:
                    continue
                with self.subTest(p=p, q=q):
                    verdicts = {
                        classify_extension(ExtensionDescriptor.kummer_cubic(alpha), p, q).is_division
                        for alpha in KUMMER_ALPHAS
                    }
                    self.assertEqual(verdicts, {expected})

    def test_kummer_condition_examples(self):
        self.assertIs(kummer_condition(13, 7), legendre(-3, 13) == 1)
        self.assertFalse(kummer_condition(11, 2))
        self.assertIsNone(kummer_condition(5, 2))

    @given(fields, primes, primes)
    @settings(max_examples=300, deadline=None)
    def test_split_over_q_stays_split(self, d, p, q):
        if classify_over_Q(QuaternionAlgebraQ(p, q)).is_division:
            return
        F = make_field(d)
        self.assertFalse(classify_quadratic(F, p, q).is_division)
        self.assertFalse(classify_extension(ExtensionDescriptor.dihedral(F, 3), p, q).is_division)


class CrossValidateTests(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(cross_validate({-3}, 10).ok)
        report = cross_validate(set(), 50)
        self.assertEqual(report.mismatches, ())

    def test_invalid_fields_are_skipped(self):
        self.assertEqual(
            cross_validate({0, 1, 12}, 10).checked, cross_validate(set(), 10).checked
        )

    def test_full_sweep(self):
        report = cross_validate(set(squarefree_range(-60, 60)), 100)
        self.assertEqual(report.mismatches, ())
        self.assertGreater(report.checked, 0)

    def test_thread_count_does_not_change_report(self):
        d_range = {-7, -3, 2, 5, 17}
        self.assertEqual(cross_validate(d_range, 30, threads=1), cross_validate(d_range, 30, threads=3))

    @override_settings(QALG_THREADS=0)
    def test_bad_thread_setting(self):
        with self.assertRaises(ImproperlyConfigured):
            cross_validate({-3}, 10)

    def test_equal_primes_are_swept(self):
        def flipped(F, p, q):
            verdict = classify_quadratic_closed_form(F, p, q)
            if verdict is None or p != q:
                return verdict
            result = VerdictResult.SPLIT if verdict.is_division else VerdictResult.DIVISION
            return Verdict(result, verdict.evidence)

        with mock.patch("quatalg.validation.classify_quadratic_closed_form", side_effect=flipped):
            report = cross_validate({2}, 10)
        self.assertIn((7, 7), {(m.p, m.q) for m in report.mismatches})
        self.assertTrue(all(m.p == m.q for m in report.mismatches))

    def test_overlapping_cases_are_reported(self):
        overlap = [LemmaMatch(LemmaCase.CASE_I, 14), LemmaMatch(LemmaCase.CASE_III, 21)]
        with mock.patch("quatalg.validation.lemma_cases", return_value=overlap):
            report = cross_validate(set(), 5)
        self.assertEqual(
            [(m.check, m.p, m.q, m.got) for m in report.mismatches if m.p == 3 and m.q == 2],
            [("lemma/overlap", 3, 2, "case_i+case_iii")],
        )
