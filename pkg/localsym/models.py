from dataclasses import dataclass
from typing import Optional

from django.db import models
from django.utils.translation import gettext_lazy as _

from arith.exceptions import InvalidArgument
from arith.services import is_prime


class PlaceKind(models.TextChoices):
    FINITE = "finite", "Finito"
    REAL = "real", "Real"


class HilbertValue(models.IntegerChoices):
    SPLIT = 1, "+1"
    RAMIFIED = -1, "-1"


@dataclass(frozen=True)
class Place:
    """Completacion de Q: un primo p o el lugar real."""

    kind: str
    prime: Optional[int] = None

    def __post_init__(self):
        if self.kind not in PlaceKind.values:
            raise InvalidArgument(_("Tipo de lugar desconocido."), code="bad_place")
        object.__setattr__(self, "kind", PlaceKind(self.kind))
        if self.kind == PlaceKind.REAL:
            if self.prime is not None:
                raise InvalidArgument(_("El lugar real no lleva primo."), code="bad_place")
        elif self.kind == PlaceKind.FINITE:
            if self.prime is None or not is_prime(self.prime):
                raise InvalidArgument(
                    _("%(prime)s no es primo."),
                    code="not_prime",
                    params={"prime": self.prime},
                )

    @classmethod
    def finite(cls, prime):
        return cls(PlaceKind.FINITE, prime)

    @classmethod
    def real(cls):
        return cls(PlaceKind.REAL)

    @classmethod
    def parse(cls, label):
        label = str(label).strip().lower()
        if label in ("real", "inf", "oo"):
            return cls.real()
        try:
            return cls.finite(int(label))
        except ValueError:
            raise InvalidArgument(
                _("Lugar invalido: %(label)s."), code="bad_place", params={"label": label}
            )

    @property
    def is_real(self):
        return self.kind == PlaceKind.REAL

    def sort_key(self):
        # finitos en orden creciente, el real al final
        return (1, 0) if self.is_real else (0, self.prime)

    def __str__(self):
        return "real" if self.is_real else str(self.prime)


@dataclass(frozen=True)
class HenselWitness:
    x: int
    y: int
    z: int
    modulus: int
    exponent: int
    depth: int


@dataclass(frozen=True)
class LocalCertificate:
    place: Place
    solvable: bool
    witness: Optional[HenselWitness] = None
    search_bound: Optional[int] = None
