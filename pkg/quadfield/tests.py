from django.test import SimpleTestCase

from arith.exceptions import InvalidArgument
from arith.services import legendre, primes_below
from localsym.models import Place

from .models import DecompositionType
from .services import (
    decompose,
    make_field,
    normalized_field,
    splits_completely,
    squarefree_range,
)

D_VALUES = squarefree_range(-60, 60)
ODD_PRIMES = primes_below(100)[1:]


class MakeFieldTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(make_field(-3).discriminant, -3)
        self.assertEqual(make_field(3).discriminant, 12)
        with self.assertRaises(InvalidArgument):
            make_field(12)

    def test_trivial_values(self):
        for d in (0, 1):
            with self.subTest(d=d), self.assertRaises(InvalidArgument):
                make_field(d)

    def test_normalized_field(self):
        self.assertEqual(normalized_field(12).value, 3)
        self.assertEqual(normalized_field(-50).discriminant, -8)

    def test_discriminant_is_congruent_to_0_or_1(self):
        for d in D_VALUES:
            with self.subTest(d=d):
                self.assertIn(make_field(d).discriminant % 4, (0, 1))

    def test_range(self):
        self.assertEqual(squarefree_range(-3, 3), [-3, -2, -1, 2, 3])
        self.assertNotIn(4, squarefree_range(-10, 10))


class DecomposeTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(decompose(make_field(3), Place.finite(7)), DecompositionType.INERT)
        self.assertEqual(
            decompose(make_field(-3), Place.finite(3)), DecompositionType.RAMIFIED
        )
        self.assertEqual(decompose(make_field(17), Place.finite(2)), DecompositionType.SPLIT)

    def test_splits_completely_examples(self):
        self.assertTrue(splits_completely(make_field(17), Place.finite(2)))
        self.assertFalse(splits_completely(make_field(-1), Place.real()))
        self.assertTrue(splits_completely(make_field(3), Place.finite(13)))
        self.assertTrue(splits_completely(make_field(5), Place.real()))

    def test_ramified_iff_divides_discriminant(self):
        for d in D_VALUES:
            F = make_field(d)
            for p in [2] + ODD_PRIMES:
                with self.subTest(d=d, p=p):
                    ramified = decompose(F, Place.finite(p)) == DecompositionType.RAMIFIED
                    self.assertEqual(ramified, F.discriminant % p == 0)

    def test_odd_primes_follow_legendre(self):
        for d in D_VALUES:
            F = make_field(d)
            for p in ODD_PRIMES:
                if F.discriminant % p == 0:
                    continue
                with self.subTest(d=d, p=p):
                    split = splits_completely(F, Place.finite(p))
                    self.assertEqual(split, legendre(F.discriminant, p) == 1)
                    self.assertEqual(split, legendre(d, p) == 1)

    def test_two_partitions_residues(self):
        for d in D_VALUES:
            kind = decompose(make_field(d), Place.finite(2))
            with self.subTest(d=d):
                if d % 8 == 1:
                    self.assertEqual(kind, DecompositionType.SPLIT)
                elif d % 8 == 5:
                    self.assertEqual(kind, DecompositionType.INERT)
                else:
                    self.assertIn(d % 4, (2, 3))
                    self.assertEqual(kind, DecompositionType.RAMIFIED)
