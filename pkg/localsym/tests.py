from itertools import combinations
from math import prod

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from arith.exceptions import InvalidArgument
from arith.services import factorize

from .models import HilbertValue, Place
from .services import (
    conic_oracle,
    hilbert,
    normalize_at,
    product_formula_check,
    ramified_places,
)

GENERATORS = (-1, 2, 3, 5, 7)
SQUARE_CLASSES = sorted(
    prod(subset) for size in range(len(GENERATORS) + 1)
    for subset in combinations(GENERATORS, size)
)
PLACES = [Place.real()] + [Place.finite(p) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23)]

nonzero = st.integers(min_value=-500, max_value=500).filter(bool)
places = st.sampled_from(PLACES)


class PlaceTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(Place.parse("2"), Place.finite(2))
        self.assertEqual(Place.parse("inf"), Place.real())
        self.assertEqual(str(Place.real()), "real")
        with self.assertRaises(InvalidArgument):
            Place.parse("4")
        with self.assertRaises(InvalidArgument):
            Place.parse("x")

    def test_hashable_in_sets(self):
        self.assertEqual({Place.finite(3), Place("finite", 3)}, {Place.finite(3)})
        self.assertEqual(
            sorted([Place.real(), Place.finite(5), Place.finite(2)], key=Place.sort_key),
            [Place.finite(2), Place.finite(5), Place.real()],
        )


class HilbertTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(hilbert(2, 3, Place.finite(2)), -1)
        self.assertEqual(hilbert(-1, -1, Place.real()), -1)
        self.assertEqual(hilbert(3, 5, Place.finite(7)), HilbertValue.SPLIT)

    def test_zero_argument(self):
        with self.assertRaises(InvalidArgument):
            hilbert(0, 3, Place.finite(3))

    def test_symbol_algebra_over_square_classes(self):
        for v in PLACES:
            for a in SQUARE_CLASSES:
                for b in SQUARE_CLASSES:
                    with self.subTest(a=a, b=b, v=str(v)):
                        self.assertEqual(hilbert(a, b, v), hilbert(b, a, v))
                        self.assertEqual(hilbert(a, -a, v), 1)
                        self.assertEqual(hilbert(a * 9, b, v), hilbert(a, b, v))
                        if a != 1:
                            self.assertEqual(hilbert(a, 1 - a, v), 1)

    @given(nonzero, nonzero, nonzero, places)
    @settings(max_examples=300, deadline=None)
    def test_bimultiplicative(self, a, a2, b, v):
        self.assertEqual(hilbert(a * a2, b, v), hilbert(a, b, v) * hilbert(a2, b, v))

    @given(nonzero, nonzero, st.integers(1, 30), places)
    @settings(max_examples=200, deadline=None)
    def test_square_invariance(self, a, b, c, v):
        self.assertEqual(hilbert(a * c * c, b, v), hilbert(a, b, v))


class ConicOracleTests(SimpleTestCase):
    def test_examples(self):
        cert = conic_oracle(1, 1, Place.finite(3))
        self.assertTrue(cert.solvable)
        w = cert.witness
        self.assertEqual((w.x, w.y, w.z, w.modulus, w.depth), (1, 0, 1, 3, 0))

        cert = conic_oracle(2, 3, Place.finite(2))
        self.assertFalse(cert.solvable)
        self.assertEqual(cert.search_bound, 7)

        self.assertFalse(conic_oracle(5, 3, Place.finite(5)).solvable)

    def test_real_place(self):
        self.assertTrue(conic_oracle(-1, 2, Place.real()).solvable)
        self.assertFalse(conic_oracle(-1, -3, Place.real()).solvable)

    def test_witness_is_liftable(self):
        for a, b, p in ((7, 3, 3), (-1, -1, 3), (2, 7, 2), (10, 15, 5)):
            cert = conic_oracle(a, b, Place.finite(p))
            with self.subTest(a=a, b=b, p=p):
                self.assertTrue(cert.solvable)
                w = cert.witness
                a_n, b_n = normalize_at(a, p), normalize_at(b, p)
                self.assertEqual((a_n * w.x**2 + b_n * w.y**2 - w.z**2) % w.modulus, 0)
                self.assertFalse(w.x % p == 0 and w.y % p == 0 and w.z % p == 0)
                self.assertLessEqual(2 * w.depth + 1, w.exponent)

    def test_unnormalized_rejected(self):
        with self.assertRaises(InvalidArgument):
            conic_oracle(9 * 2, 3, Place.finite(3), normalize=False)
        self.assertEqual(
            conic_oracle(9 * 2, 3, Place.finite(3)).solvable,
            conic_oracle(2, 3, Place.finite(3)).solvable,
        )

    def test_matches_hilbert_on_square_classes(self):
        for v in PLACES:
            for a in SQUARE_CLASSES:
                for b in SQUARE_CLASSES:
                    with self.subTest(a=a, b=b, v=str(v)):
                        self.assertEqual(
                            conic_oracle(a, b, v).solvable, hilbert(a, b, v) == 1
                        )


class RamificationTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(ramified_places(3, 2), {Place.finite(2), Place.finite(3)})
        self.assertEqual(ramified_places(1, 30), frozenset())
        self.assertEqual(ramified_places(5, 3), {Place.finite(3), Place.finite(5)})
        self.assertEqual(ramified_places(-1, -1), {Place.finite(2), Place.real()})

    def test_product_formula_examples(self):
        self.assertTrue(product_formula_check(2, 3))
        self.assertTrue(product_formula_check(1, 1))
        self.assertTrue(product_formula_check(-1, -1))

    def test_product_formula_on_square_classes(self):
        for a in SQUARE_CLASSES:
            for b in SQUARE_CLASSES:
                with self.subTest(a=a, b=b):
                    self.assertTrue(product_formula_check(a, b))
                    self.assertEqual(len(ramified_places(a, b)) % 2, 0)

    @given(nonzero, nonzero)
    @settings(max_examples=300, deadline=None)
    def test_support(self, a, b):
        support = {2} | set(factorize(a).primes) | set(factorize(b).primes)
        for v in ramified_places(a, b):
            self.assertTrue(v.is_real or v.prime in support)
        self.assertEqual(len(ramified_places(a, b)) % 2, 0)
