import logging
from collections import defaultdict
from math import prod

from django.utils.translation import gettext_lazy as _

from arith.exceptions import InvalidArgument
from arith.services import factorize, legendre, vp

from .models import HenselWitness, HilbertValue, LocalCertificate, Place

logger = logging.getLogger(__name__)


class OracleInconclusive(RuntimeError):
    """El barrido llego a su cota sin testigo de Hensel ni certificado de vacio."""


def _require_nonzero(a, b):
    if a == 0 or b == 0:
        raise InvalidArgument(
            _("Los argumentos del simbolo de Hilbert deben ser no nulos."), code="zero"
        )


def _epsilon(u):
    return ((u - 1) // 2) % 2


def _omega(u):
    return ((u * u - 1) // 8) % 2


def normalize_at(n, p):
    """Quita de n la mayor potencia par de p; el resultado tiene vp en {0, 1}."""
    e = vp(n, p)
    return n // p ** (e - e % 2)


def hilbert(a, b, v):
    _require_nonzero(a, b)
    if v.is_real:
        return HilbertValue.RAMIFIED if a < 0 and b < 0 else HilbertValue.SPLIT
    p = v.prime
    alpha, beta = vp(a, p), vp(b, p)
    if p != 2 and alpha == 0 and beta == 0:
        return HilbertValue.SPLIT
    u, w = a // p**alpha, b // p**beta
    if p == 2:
        exponent = _epsilon(u) * _epsilon(w) + alpha * _omega(w) + beta * _omega(u)
        return HilbertValue.RAMIFIED if exponent % 2 else HilbertValue.SPLIT
    value = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    value *= legendre(u, p) ** beta * legendre(w, p) ** alpha
    return HilbertValue(value)


def _capped_vp(value, p, n):
    value %= p**n
    return n if value == 0 else vp(value, p)


def _square_roots(modulus):
    roots = defaultdict(list)
    for z in range(modulus):
        roots[z * z % modulus].append(z)
    return roots


def _scan_level(a, b, p, n):
    """
    Recorre los pares (x, y) modulo p**n y busca z con a*x^2 + b*y^2 = z^2.
    Devuelve (hay_primitivas, testigo). Si x e y son multiplos de p tambien
    lo es z, asi que esos pares nunca dan ternas primitivas.
    """
    modulus = p**n
    roots = _square_roots(modulus)
    primitive_found = False
    for y in range(modulus):
        by2 = b * y * y
        for x in range(modulus):
            if x % p == 0 and y % p == 0:
                continue
            for z in roots.get((a * x * x + by2) % modulus, ()):
                primitive_found = True
                depth = min(
                    _capped_vp(2 * a * x, p, n),
                    _capped_vp(2 * b * y, p, n),
                    _capped_vp(2 * z, p, n),
                )
                if 2 * depth + 1 <= n:
                    return True, HenselWitness(x, y, z, modulus, n, depth)
    return primitive_found, None


def search_bound(a, b, p):
    return 2 * (1 + vp(2, p) + vp(a, p) + vp(b, p)) + 1


def conic_oracle(a, b, v, normalize=True):
    """
    Decide por fuerza bruta si a*x^2 + b*y^2 = z^2 tiene solucion no trivial
    en la completacion v. En un primo p se prueban los niveles n = 1..N: un
    testigo primitivo con 2k + 1 <= n se levanta por Hensel; un nivel sin
    ternas primitivas certifica que no hay solucion p-adica.
    """
    _require_nonzero(a, b)
    if v.is_real:
        return LocalCertificate(place=v, solvable=a > 0 or b > 0)
    p = v.prime
    if normalize:
        a, b = normalize_at(a, p), normalize_at(b, p)
    elif vp(a, p) > 1 or vp(b, p) > 1:
        raise InvalidArgument(
            _("Coeficientes sin normalizar en %(p)s."),
            code="unnormalized",
            params={"p": p},
        )
    bound = search_bound(a, b, p)
    for n in range(1, bound + 1):
        primitive_found, witness = _scan_level(a, b, p, n)
        if witness is not None:
            logger.debug("(%s, %s) en %s: testigo %s", a, b, p, witness)
            return LocalCertificate(place=v, solvable=True, witness=witness)
        if not primitive_found:
            logger.debug("(%s, %s) en %s: sin ternas primitivas modulo %s^%s", a, b, p, p, n)
            return LocalCertificate(place=v, solvable=False, search_bound=bound)
    raise OracleInconclusive(
        f"Sin testigo ni certificado para ({a}, {b}) en {p} con N = {bound}."
    )


def candidate_places(a, b):
    primes = {2} | set(factorize(a).primes) | set(factorize(b).primes)
    return [Place.finite(p) for p in sorted(primes)] + [Place.real()]


def ramified_places(a, b):
    _require_nonzero(a, b)
    return frozenset(
        v for v in candidate_places(a, b) if hilbert(a, b, v) == HilbertValue.RAMIFIED
    )


def product_formula_check(a, b):
    _require_nonzero(a, b)
    return prod(hilbert(a, b, v) for v in candidate_places(a, b)) == 1
