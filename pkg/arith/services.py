import logging
from functools import lru_cache

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from django.utils.translation import gettext_lazy as _

from .exceptions import FactorizationIncomplete, IntegerRangeError, InvalidArgument
from .models import Factorization

logger = logging.getLogger(__name__)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1
INT128_MAX = 2**127 - 1

DEFAULT_FACTOR_BOUND = 2**32

# Bases de Miller-Rabin deterministas para n < 3.3 * 10**24 (cubre 64 bits).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Rueda 2*3*5: saltos entre candidatos coprimos con 30 a partir de 7.
_WHEEL_STEPS = (4, 2, 4, 2, 4, 6, 2, 6)


def _check_int64(*values):
    for value in values:
        if not INT64_MIN <= value <= INT64_MAX:
            raise IntegerRangeError(f"{value} esta fuera del rango de 64 bits.")


def _check_int128(value):
    if abs(value) > INT128_MAX:
        raise IntegerRangeError(f"Producto intermedio {value} excede 128 bits.")
    return value


def _require_nonzero(n, name="n"):
    if n == 0:
        raise InvalidArgument(
            _("%(name)s debe ser distinto de cero."), code="zero", params={"name": name}
        )


def _factor_bound():
    try:
        return settings.QALG_FACTOR_BOUND
    except (ImproperlyConfigured, AttributeError):
        return DEFAULT_FACTOR_BOUND


def mod_pow(base, exp, modulus):
    _check_int64(base, exp, modulus)
    if modulus < 1:
        raise InvalidArgument(_("El modulo debe ser positivo."), code="bad_modulus")
    if exp < 0:
        raise InvalidArgument(_("El exponente debe ser no negativo."), code="negative_exp")
    return pow(base, exp, modulus)


def _mr_witness(a, n, d, s):
    x = pow(a, d, n)
    if x in (1, n - 1):
        return False
    for _step in range(s - 1):
        x = _check_int128(x * x) % n
        if x == n - 1:
            return False
    return True


@lru_cache(maxsize=65536)
def is_prime(n):
    _check_int64(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return not any(_mr_witness(a, n, d, s) for a in _MR_BASES)


def _trial_divisors(bound):
    yield from (2, 3, 5)
    candidate = 7
    while candidate <= bound:
        for step in _WHEEL_STEPS:
            yield candidate
            candidate += step


@lru_cache(maxsize=65536)
def _factorize(n, bound):
    sign = -1 if n < 0 else 1
    rest = abs(n)
    factors = []
    for divisor in _trial_divisors(bound):
        if divisor * divisor > rest:
            break
        if rest % divisor == 0:
            exponent = 0
            while rest % divisor == 0:
                rest //= divisor
                exponent += 1
            factors.append((divisor, exponent))
    else:
        # Se agoto la cota sin que divisor**2 supere el cofactor.
        if rest > 1 and not is_prime(rest):
            raise FactorizationIncomplete(n, rest, bound)
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(sign=sign, factors=tuple(factors))


def factorize(n, bound=None):
    _check_int64(n)
    _require_nonzero(n)
    return _factorize(n, _factor_bound() if bound is None else bound)


def squarefree_kernel(n):
    factorization = factorize(n)
    kernel = factorization.sign
    for p, e in factorization:
        if e % 2:
            kernel *= p
    return kernel


def is_squarefree(n):
    return n != 0 and all(e == 1 for _p, e in factorize(n))


def is_cubefree(n):
    return n != 0 and all(e < 3 for _p, e in factorize(n))


def vp(n, p):
    _check_int64(n, p)
    _require_nonzero(n)
    if not is_prime(p):
        raise InvalidArgument(
            _("%(p)s no es primo."), code="not_prime", params={"p": p}
        )
    n = abs(n)
    exponent = 0
    while n % p == 0:
        n //= p
        exponent += 1
    return exponent


def legendre(a, p):
    """
    Simbolo de Legendre (a/p) por el criterio de Euler. Se reduce a modulo p
    antes de calcular, asi (-3/p) funciona directamente.
    """
    _check_int64(a, p)
    if p == 2 or not is_prime(p):
        raise InvalidArgument(
            _("%(p)s no es un primo impar."), code="not_odd_prime", params={"p": p}
        )
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=200_000)
def jacobi(a, n):
    _check_int64(a, n)
    if n <= 0 or n % 2 == 0:
        raise InvalidArgument(
            _("n debe ser un entero positivo impar."), code="even_modulus"
        )
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a, n):
    """Simbolo de Kronecker (a/n) para n positivo; coincide con Jacobi si n es impar."""
    _check_int64(a, n)
    if n <= 0:
        raise InvalidArgument(_("n debe ser positivo."), code="bad_modulus")
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    return result * jacobi(a, n)


def primes_below(bound):
    return [n for n in range(2, bound) if is_prime(n)]
