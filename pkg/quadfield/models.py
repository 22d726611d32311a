from dataclasses import dataclass, field

from django.db import models

from arith.models import SquarefreeInt


class DecompositionType(models.TextChoices):
    SPLIT = "split", "Descompuesto"
    INERT = "inert", "Inerte"
    RAMIFIED = "ramified", "Ramificado"


@dataclass(frozen=True)
class QuadraticField:
    """Q(sqrt(d)) con d libre de cuadrados y distinto de 0 y 1."""

    d: SquarefreeInt
    discriminant: int = field(init=False)

    def __post_init__(self):
        d = int(self.d)
        object.__setattr__(self, "discriminant", d if d % 4 == 1 else 4 * d)

    @property
    def value(self):
        return int(self.d)

    @property
    def is_real(self):
        return self.value > 0

    def __str__(self):
        return f"Q(sqrt({self.value}))"
