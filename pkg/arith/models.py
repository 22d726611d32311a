from dataclasses import dataclass
from math import prod

from django.utils.translation import gettext_lazy as _

from .exceptions import InvalidArgument

# Sin tablas: los tipos del dominio son valores inmutables.


@dataclass(frozen=True)
class SquarefreeInt:
    value: int

    def __post_init__(self):
        from .services import is_squarefree

        if self.value in (0, 1):
            raise InvalidArgument(
                _("d debe ser distinto de 0 y de 1."), code="trivial_field"
            )
        if not is_squarefree(self.value):
            raise InvalidArgument(
                _("%(value)s no es libre de cuadrados."),
                code="not_squarefree",
                params={"value": self.value},
            )

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class OddPrime:
    value: int

    def __post_init__(self):
        from .services import is_prime

        if self.value == 2 or not is_prime(self.value):
            raise InvalidArgument(
                _("%(value)s no es un primo impar."),
                code="not_odd_prime",
                params={"value": self.value},
            )

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Factorization:
    """Signo y pares (primo, exponente) con primos estrictamente crecientes."""

    sign: int
    factors: tuple = ()

    @property
    def value(self):
        return self.sign * prod(p**e for p, e in self.factors)

    @property
    def primes(self):
        return tuple(p for p, _e in self.factors)

    def __iter__(self):
        return iter(self.factors)
