from math import isqrt

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from .exceptions import FactorizationIncomplete, IntegerRangeError, InvalidArgument
from .models import OddPrime, SquarefreeInt
from .services import (
    factorize,
    is_cubefree,
    is_prime,
    is_squarefree,
    jacobi,
    kronecker,
    legendre,
    mod_pow,
    primes_below,
    squarefree_kernel,
    vp,
)

nonzero = st.integers(min_value=-(10**6), max_value=10**6).filter(bool)
odd_primes = st.sampled_from(primes_below(200)[1:])


class ModPowTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(mod_pow(2, 10, 1000), 24)
        self.assertEqual(mod_pow(5, 0, 7), 1)
        self.assertEqual(mod_pow(3, 100, 101), 1)

    def test_zero_modulus(self):
        with self.assertRaises(InvalidArgument):
            mod_pow(2, 3, 0)

    def test_out_of_range(self):
        with self.assertRaises(IntegerRangeError):
            mod_pow(2**64, 2, 7)


class IsPrimeTests(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(is_prime(2))
        self.assertFalse(is_prime(561))
        self.assertFalse(is_prime(1))
        self.assertFalse(is_prime(-7))

    def test_matches_trial_division_below_2000(self):
        for n in range(2000):
            expected = n > 1 and all(n % k for k in range(2, int(n**0.5) + 1))
            with self.subTest(n=n):
                self.assertEqual(is_prime(n), expected)

    def test_large_values(self):
        self.assertTrue(is_prime(2**61 - 1))
        self.assertFalse(is_prime(3215031751))  # pseudoprimo fuerte en bases 2,3,5,7


class FactorizeTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(factorize(12).factors, ((2, 2), (3, 1)))
        self.assertEqual(factorize(12).sign, 1)
        f = factorize(-30)
        self.assertEqual((f.sign, f.factors), (-1, ((2, 1), (3, 1), (5, 1))))
        self.assertEqual(factorize(9991).factors, ((97, 1), (103, 1)))

    def test_zero(self):
        with self.assertRaises(InvalidArgument):
            factorize(0)

    def test_units(self):
        self.assertEqual(factorize(1).factors, ())
        self.assertEqual(factorize(-1).sign, -1)

    def test_bound_exhausted(self):
        with self.assertRaises(FactorizationIncomplete):
            factorize(1009 * 1013, bound=100)

    def test_prime_cofactor_above_bound(self):
        self.assertEqual(factorize(2 * 1009, bound=10).factors, ((2, 1), (1009, 1)))

    @override_settings(QALG_FACTOR_BOUND=50)
    def test_bound_from_settings(self):
        with self.assertRaises(FactorizationIncomplete):
            factorize(101 * 103)

    @given(nonzero)
    @settings(max_examples=300, deadline=None)
    def test_round_trip(self, n):
        f = factorize(n)
        self.assertEqual(f.value, n)
        self.assertEqual(list(f.primes), sorted(set(f.primes)))
        self.assertTrue(all(is_prime(p) for p in f.primes))


class SquarefreeKernelTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(squarefree_kernel(12), 3)
        self.assertEqual(squarefree_kernel(-50), -2)
        self.assertEqual(squarefree_kernel(7), 7)

    def test_zero(self):
        with self.assertRaises(InvalidArgument):
            squarefree_kernel(0)

    @given(nonzero)
    @settings(max_examples=300, deadline=None)
    def test_idempotent_and_square_quotient(self, n):
        kernel = squarefree_kernel(n)
        self.assertEqual(squarefree_kernel(kernel), kernel)
        self.assertTrue(is_squarefree(kernel))
        quotient, rest = divmod(n, kernel)
        self.assertEqual(rest, 0)
        self.assertGreater(quotient, 0)
        root = isqrt(quotient)
        self.assertEqual(root * root, quotient)

    def test_predicates(self):
        self.assertTrue(is_squarefree(-30))
        self.assertFalse(is_squarefree(18))
        self.assertTrue(is_cubefree(18))
        self.assertFalse(is_cubefree(-24))


class LegendreTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(legendre(2, 7), 1)
        self.assertEqual(legendre(14, 7), 0)
        self.assertEqual(legendre(-3, 13), 1)

    def test_even_prime_rejected(self):
        with self.assertRaises(InvalidArgument):
            legendre(3, 2)

    def test_composite_modulus_rejected(self):
        for n in (1, 9, 15, 91, -7):
            with self.subTest(n=n), self.assertRaises(InvalidArgument) as ctx:
                legendre(5, n)
            self.assertEqual(ctx.exception.code, "not_odd_prime")

    def test_matches_square_scan(self):
        for p in primes_below(98)[1:]:
            squares = {x * x % p for x in range(1, p)}
            for a in range(p):
                expected = 0 if a == 0 else (1 if a in squares else -1)
                with self.subTest(a=a, p=p):
                    self.assertEqual(legendre(a, p), expected)

    @given(nonzero, nonzero, odd_primes)
    @settings(max_examples=300, deadline=None)
    def test_multiplicative(self, a, b, p):
        self.assertEqual(legendre(a * b, p), legendre(a, p) * legendre(b, p))

    @given(st.integers(-(10**6), 10**6), odd_primes)
    @settings(max_examples=200, deadline=None)
    def test_euler_criterion(self, a, p):
        self.assertEqual(legendre(a, p) % p, pow(a, (p - 1) // 2, p))


class JacobiTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(jacobi(2, 15), 1)
        self.assertEqual(jacobi(123, 1), 1)
        self.assertEqual(jacobi(6, 9), 0)

    def test_even_or_nonpositive(self):
        for n in (0, -3, 8):
            with self.subTest(n=n), self.assertRaises(InvalidArgument):
                jacobi(5, n)

    @given(st.integers(-(10**5), 10**5), st.integers(1, 2000).map(lambda k: 2 * k + 1))
    @settings(max_examples=300, deadline=None)
    def test_product_of_legendre(self, a, n):
        expected = 1
        for p, e in factorize(n):
            expected *= legendre(a, p) ** e
        self.assertEqual(jacobi(a, n), expected)

    @given(st.integers(0, 5000), st.integers(0, 5000))
    @settings(max_examples=300, deadline=None)
    def test_reciprocity(self, i, j):
        a, n = 2 * i + 1, 2 * j + 1
        if jacobi(a, n) == 0:
            return
        sign = -1 if ((a - 1) // 2) * ((n - 1) // 2) % 2 else 1
        self.assertEqual(jacobi(a, n) * jacobi(n, a), sign)

    def test_kronecker_at_two(self):
        self.assertEqual(kronecker(17, 2), 1)
        self.assertEqual(kronecker(-3, 2), -1)
        self.assertEqual(kronecker(12, 2), 0)
        self.assertEqual(kronecker(5, 15), jacobi(5, 15))


class VpTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(vp(24, 2), 3)
        self.assertEqual(vp(24, 5), 0)
        self.assertEqual(vp(-98, 7), 2)

    def test_zero(self):
        with self.assertRaises(InvalidArgument):
            vp(0, 3)

    def test_composite_base_rejected(self):
        for p in (1, 4, 6, 9):
            with self.subTest(p=p), self.assertRaises(InvalidArgument):
                vp(36, p)


class TypeTests(SimpleTestCase):
    def test_squarefree_int(self):
        self.assertEqual(int(SquarefreeInt(-3)), -3)
        for bad in (0, 1, 12):
            with self.subTest(value=bad), self.assertRaises(InvalidArgument):
                SquarefreeInt(bad)

    def test_odd_prime(self):
        self.assertEqual(int(OddPrime(7)), 7)
        for bad in (2, 9, -7):
            with self.subTest(value=bad), self.assertRaises(InvalidArgument):
                OddPrime(bad)
