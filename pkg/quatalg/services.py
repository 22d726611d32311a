import logging
from functools import lru_cache
from math import prod

from django.utils.translation import gettext_lazy as _

from arith.exceptions import InvalidArgument
from arith.services import is_prime, legendre
from localsym.services import ramified_places
from quadfield.services import splits_completely

from .models import (
    CASE_FAMILIES,
    CaseLabel,
    Evidence,
    EvidenceKind,
    ExtensionKind,
    LemmaCase,
    LemmaMatch,
    QuaternionAlgebraQ,
    RamificationReport,
    Verdict,
    VerdictResult,
)

logger = logging.getLogger(__name__)


def _require_primes(*values):
    for value in values:
        if not is_prime(value):
            raise InvalidArgument(
                _("%(value)s no es un primo positivo."),
                code="not_prime",
                params={"value": value},
            )


def _verdict(division, kind, case, place=None, inner=None):
    result = VerdictResult.DIVISION if division else VerdictResult.SPLIT
    return Verdict(result, Evidence(kind, case, place=place, inner=inner))


@lru_cache(maxsize=65536)
def _ramification(a, b):
    places = ramified_places(a, b)
    discriminant = prod(v.prime for v in places if not v.is_real)
    return RamificationReport(places=places, reduced_discriminant=discriminant)


def ramification_report(H):
    return _ramification(H.a, H.b)


def lemma_cases(p, q):
    """Todos los casos del lema de discriminantes cuyas hipotesis cumple (p, q)."""
    _require_primes(p, q)
    matches = []
    if p % 4 == 3 and q % 4 == 3 and legendre(q, p) != 1:
        matches.append(LemmaMatch(LemmaCase.CASE_I, 2 * p))
    if q == 2 and p % 8 == 3:
        matches.append(LemmaMatch(LemmaCase.CASE_II, 2 * p))
    if p != q and q != 2 and (p % 4 == 1 or q % 4 == 1) and legendre(p, q) == -1:
        matches.append(LemmaMatch(LemmaCase.CASE_III, p * q))
    return matches


def lemma_discriminant_case(p, q):
    """
    Primer caso del lema de discriminantes que aplica a (p, q), con el
    discriminante reducido que predice; None si ninguno aplica.
    """
    matches = lemma_cases(p, q)
    return matches[0] if matches else None


def classify_over_Q(H):
    report = ramification_report(H)
    if report.places:
        return _verdict(
            True, EvidenceKind.WITNESS_PLACE, CaseLabel.RAMIFICATION, place=report.sorted_places[0]
        )
    return _verdict(False, EvidenceKind.THEOREM_CASE, CaseLabel.RAMIFICATION)


def classify_quadratic_engine(F, H):
    """H_F es de division si y solo si algun lugar ramificado de H_Q se descompone en F."""
    for v in ramification_report(H).sorted_places:
        if splits_completely(F, v):
            return _verdict(True, EvidenceKind.WITNESS_PLACE, CaseLabel.ENGINE, place=v)
    return _verdict(False, EvidenceKind.THEOREM_CASE, CaseLabel.ENGINE)


def requires_distinct_primes(p, q):
    """
    p = q = 1 mod 4 cumple la congruencia de la forma cerrada 1, que pide
    primos distintos. Con p = q = 3 mod 4 responde la forma 3.
    """
    return p == q and p % 4 == 1


def closed_form_cases(p, q):
    """Indices (1, 2, 3) de las formas cerradas cuyas hipotesis cumple (p, q)."""
    _require_primes(p, q)
    cases = []
    if p != 2 and q != 2 and (p % 4 == 1 or q % 4 == 1) and legendre(p, q) == -1:
        cases.append(1)
    if q == 2 and p % 8 == 3:
        cases.append(2)
    if p % 4 == 3 and q % 4 == 3 and legendre(q, p) != 1:
        cases.append(3)
    return cases


def classify_quadratic_closed_form(F, p, q):
    """
    Veredicto de la primera forma cerrada que cubre (p, q), en el orden
    1, 2, 3; None si ninguna aplica.
    """
    _require_primes(p, q)
    if requires_distinct_primes(p, q):
        raise InvalidArgument(
            _("La forma cerrada 1 pide primos distintos (p = q = %(p)s)."),
            code="distinct_primes",
            params={"p": p},
        )
    cases = closed_form_cases(p, q)
    if not cases:
        return None
    delta, d = F.discriminant, F.value
    index = cases[0]
    if index == 1:
        division = legendre(delta, p) == 1 or legendre(delta, q) == 1
    else:
        division = legendre(delta, p) == 1 or d % 8 == 1
    return _verdict(division, EvidenceKind.THEOREM_CASE, CASE_FAMILIES["quadratic"][index - 1])


def classify_quadratic(F, p, q):
    """Forma cerrada cuando alguna aplica; si no, el motor por lugares."""
    if not requires_distinct_primes(p, q):
        verdict = classify_quadratic_closed_form(F, p, q)
        if verdict is not None:
            return verdict
    logger.debug("(%s, %s) sobre %s fuera de las formas cerradas: motor", p, q, F)
    return classify_quadratic_engine(F, QuaternionAlgebraQ(p, q))


def classify_extension(E, p, q):
    """
    Veredicto sobre K por descenso: [K:F] es impar, asi que H_K es de division
    si y solo si H_F lo es.
    """
    _require_primes(p, q)
    if E.kind == ExtensionKind.BASE_Q:
        return classify_over_Q(QuaternionAlgebraQ(p, q))
    if E.kind == ExtensionKind.QUADRATIC:
        return classify_quadratic(E.base_field, p, q)
    assert E.degree % 2 == 1, E
    family = "kummer" if E.kind == ExtensionKind.KUMMER_CUBIC else "theorem-main"
    inner = classify_quadratic(E.base_field, p, q)
    case = inner.evidence.case
    if case in CASE_FAMILIES["quadratic"]:
        case = CASE_FAMILIES[family][CASE_FAMILIES["quadratic"].index(case)]
    return _verdict(inner.is_division, EvidenceKind.DESCENT, case, inner=inner)


def main_theorem_holds(F, p, q):
    """
    Disyuncion literal del teorema de clasificacion sobre K (el caso 2 se lee
    con q = 2). None si (p, q) no cumple las hipotesis de ningun caso.
    """
    d, delta = F.value, F.discriminant
    odd_distinct = p != q and p != 2 and q != 2
    case1 = odd_distinct and (p % 4 == 1 or q % 4 == 1) and legendre(p, q) == -1
    case2 = q == 2 and p % 8 == 3
    case3 = odd_distinct and p % 4 == 3 and q % 4 == 3 and legendre(q, p) != 1
    if not (case1 or case2 or case3):
        return None
    residue_p = p != 2 and legendre(delta, p) == 1
    return (
        (case1 and (residue_p or legendre(delta, q) == 1))
        or (case2 and (residue_p or d % 8 == 1))
        or (case3 and (residue_p or d % 8 == 1))
    )


def kummer_condition(p, q):
    """Condiciones en (-3/p), (-3/q) para K = Q(zeta_3)(alpha^(1/3)); None fuera de hipotesis."""
    odd_distinct = p != q and p != 2 and q != 2
    if odd_distinct and (p % 4 == 1 or q % 4 == 1) and legendre(p, q) == -1:
        return legendre(-3, p) == 1 or legendre(-3, q) == 1
    if q == 2 and p % 8 == 3:
        return legendre(-3, p) == 1
    if odd_distinct and p % 4 == 3 and q % 4 == 3 and legendre(q, p) != 1:
        return legendre(-3, p) == 1
    return None
