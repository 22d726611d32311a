from dataclasses import dataclass, field
from typing import Optional

from django.db import models
from django.utils.translation import gettext_lazy as _

from arith.exceptions import InvalidArgument
from arith.models import OddPrime
from arith.services import is_cubefree
from localsym.models import Place
from quadfield.models import QuadraticField


class VerdictResult(models.TextChoices):
    SPLIT = "split", "Escindida"
    DIVISION = "division", "De division"


class EvidenceKind(models.TextChoices):
    THEOREM_CASE = "theorem_case", "Caso de teorema"
    WITNESS_PLACE = "witness_place", "Lugar testigo"
    DESCENT = "descent", "Descenso"


class CaseLabel(models.TextChoices):
    RAMIFICATION = "ramification", "Ramificacion sobre Q"
    ENGINE = "engine", "Motor por lugares"
    QUADRATIC_1 = "quadratic/case1", "Cuadratico, p o q = 1 mod 4"
    QUADRATIC_2 = "quadratic/case2", "Cuadratico, q = 2 y p = 3 mod 8"
    QUADRATIC_3 = "quadratic/case3", "Cuadratico, p = q = 3 mod 4"
    MAIN_1 = "theorem-main/case1", "Teorema principal, caso 1"
    MAIN_2 = "theorem-main/case2", "Teorema principal, caso 2"
    MAIN_3 = "theorem-main/case3", "Teorema principal, caso 3"
    KUMMER_1 = "kummer/case1", "Cubica pura, caso 1"
    KUMMER_2 = "kummer/case2", "Cubica pura, caso 2"
    KUMMER_3 = "kummer/case3", "Cubica pura, caso 3"


CASE_FAMILIES = {
    "quadratic": (CaseLabel.QUADRATIC_1, CaseLabel.QUADRATIC_2, CaseLabel.QUADRATIC_3),
    "theorem-main": (CaseLabel.MAIN_1, CaseLabel.MAIN_2, CaseLabel.MAIN_3),
    "kummer": (CaseLabel.KUMMER_1, CaseLabel.KUMMER_2, CaseLabel.KUMMER_3),
}


class LemmaCase(models.TextChoices):
    CASE_I = "case_i", "p = q = 3 mod 4 y (q/p) != 1"
    CASE_II = "case_ii", "q = 2 y p = 3 mod 8"
    CASE_III = "case_iii", "p o q = 1 mod 4 y (p/q) = -1"


class ExtensionKind(models.TextChoices):
    BASE_Q = "base_q", "Q"
    QUADRATIC = "quadratic", "Cuadratica"
    DIHEDRAL = "dihedral", "Diedral de grado 2l"
    UNRAMIFIED_ABELIAN = "unramified_abelian", "Abeliana no ramificada"
    KUMMER_CUBIC = "kummer_cubic", "Cubica pura sobre Q(zeta_3)"


@dataclass(frozen=True)
class QuaternionAlgebraQ:
    """H_Q(a, b): i^2 = a, j^2 = b, ij = -ji."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise InvalidArgument(
                _("a y b deben ser no nulos."), code="zero"
            )

    def __str__(self):
        return f"H({self.a}, {self.b})"


@dataclass(frozen=True)
class RamificationReport:
    places: frozenset
    reduced_discriminant: int

    @property
    def sorted_places(self):
        return sorted(self.places, key=Place.sort_key)

    @property
    def splits(self):
        return not self.places


@dataclass(frozen=True)
class LemmaMatch:
    case: str
    discriminant: int


@dataclass(frozen=True)
class ExtensionDescriptor:
    """
    Descripcion simbolica de K sobre un cuerpo cuadratico F. K nunca se
    construye: el veredicto solo depende de F y de que [K:F] sea impar.
    """

    kind: str
    quadratic_field: Optional[QuadraticField] = None
    ell: Optional[int] = None
    n: Optional[int] = None
    alpha: Optional[int] = None

    @classmethod
    def base_q(cls):
        return cls(ExtensionKind.BASE_Q)

    @classmethod
    def quadratic(cls, F):
        return cls(ExtensionKind.QUADRATIC, quadratic_field=F)

    @classmethod
    def dihedral(cls, F, ell):
        return cls(ExtensionKind.DIHEDRAL, quadratic_field=F, ell=int(OddPrime(ell)))

    @classmethod
    def unramified_abelian(cls, F, ell, n=1):
        if n < 1:
            raise InvalidArgument(_("n debe ser positivo."), code="bad_exponent")
        # Se acepta sin verificar que ell divide al numero de clases de F.
        return cls(
            ExtensionKind.UNRAMIFIED_ABELIAN, quadratic_field=F, ell=int(OddPrime(ell)), n=n
        )

    @classmethod
    def kummer_cubic(cls, alpha):
        if alpha in (-1, 0, 1) or not is_cubefree(alpha):
            raise InvalidArgument(
                _("alpha = %(alpha)s debe ser libre de cubos, distinto de 0, 1 y -1."),
                code="not_cubefree",
                params={"alpha": alpha},
            )
        return cls(ExtensionKind.KUMMER_CUBIC, alpha=alpha)

    @property
    def base_field(self):
        if self.kind == ExtensionKind.KUMMER_CUBIC:
            from quadfield.services import make_field

            return make_field(-3)
        return self.quadratic_field

    @property
    def degree(self):
        """[K:F]; 1 para Q y para el cuerpo cuadratico mismo."""
        if self.kind == ExtensionKind.DIHEDRAL:
            return self.ell
        if self.kind == ExtensionKind.UNRAMIFIED_ABELIAN:
            return self.ell**self.n
        if self.kind == ExtensionKind.KUMMER_CUBIC:
            return 3
        return 1


@dataclass(frozen=True)
class Evidence:
    kind: str
    case: str
    place: Optional[Place] = None
    inner: Optional["Verdict"] = None


@dataclass(frozen=True)
class Verdict:
    result: str
    evidence: Evidence

    @property
    def is_division(self):
        return self.result == VerdictResult.DIVISION

    @property
    def case(self):
        return str(self.evidence.case)


@dataclass(frozen=True)
class Mismatch:
    check: str
    p: int
    q: int
    d: Optional[int] = None
    ell: Optional[int] = None
    expected: str = ""
    got: str = ""

    def sort_key(self):
        return (self.d is not None, self.d or 0, self.p, self.q, self.ell or 0, self.check)

    def as_dict(self):
        return {
            "check": self.check,
            "d": self.d,
            "p": self.p,
            "q": self.q,
            "ell": self.ell,
            "expected": self.expected,
            "got": self.got,
        }


@dataclass(frozen=True)
class MismatchReport:
    checked: int
    mismatches: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        return not self.mismatches
