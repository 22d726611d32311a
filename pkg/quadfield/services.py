from django.utils.translation import gettext_lazy as _

from arith.exceptions import InvalidArgument
from arith.models import SquarefreeInt
from arith.services import is_squarefree, legendre, squarefree_kernel

from .models import DecompositionType, QuadraticField


def make_field(d):
    return QuadraticField(SquarefreeInt(d))


def normalized_field(n):
    """Como make_field, pero reduce n a su nucleo libre de cuadrados."""
    return make_field(squarefree_kernel(n))


def squarefree_range(d_min, d_max):
    if d_min > d_max:
        raise InvalidArgument(_("d_min no puede superar a d_max."), code="bad_range")
    return [
        d for d in range(d_min, d_max + 1) if d not in (0, 1) and is_squarefree(d)
    ]


def decompose(F, v):
    """
    Ley de descomposicion de v en F. El lugar real se descompone si d > 0 y
    se ramifica (pasa a ser complejo) si d < 0.
    """
    if v.is_real:
        return DecompositionType.SPLIT if F.is_real else DecompositionType.RAMIFIED
    p = v.prime
    if p == 2:
        residue = F.value % 8
        if residue == 1:
            return DecompositionType.SPLIT
        if residue == 5:
            return DecompositionType.INERT
        return DecompositionType.RAMIFIED
    symbol = legendre(F.discriminant, p)
    if symbol == 0:
        return DecompositionType.RAMIFIED
    return DecompositionType.SPLIT if symbol == 1 else DecompositionType.INERT


def splits_completely(F, v):
    return decompose(F, v) == DecompositionType.SPLIT
