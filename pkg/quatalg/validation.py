import logging
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from arith.services import is_squarefree, primes_below
from quadfield.services import make_field

from .models import ExtensionDescriptor, Mismatch, MismatchReport, QuaternionAlgebraQ
from .services import (
    classify_extension,
    classify_quadratic_closed_form,
    classify_quadratic_engine,
    closed_form_cases,
    kummer_condition,
    lemma_cases,
    lemma_discriminant_case,
    main_theorem_holds,
    ramification_report,
    requires_distinct_primes,
)

logger = logging.getLogger(__name__)

ELLS = (3, 5, 7)
ABELIAN_EXPONENTS = (1, 2)
KUMMER_ALPHAS = (2, 3, 5, 6, 7)


def _result(division):
    return "division" if division else "split"


def _thread_cap(threads):
    if threads is None:
        threads = getattr(settings, "QALG_THREADS", 1)
    if threads < 1:
        raise ImproperlyConfigured("QALG_THREADS debe ser un entero positivo.")
    return threads


def _prime_pairs(prime_bound):
    primes = primes_below(prime_bound)
    return [(p, q) for p in primes for q in primes]


def _check_case_overlap(pairs):
    """El orden de los casos es irrelevante si a lo sumo uno aplica a cada par."""
    checked, mismatches = 0, []
    for p, q in pairs:
        for family, cases in (
            ("lemma", [match.case for match in lemma_cases(p, q)]),
            ("closed-form", [f"case{index}" for index in closed_form_cases(p, q)]),
        ):
            checked += 1
            if len(cases) > 1:
                mismatches.append(
                    Mismatch(
                        check=f"{family}/overlap",
                        p=p,
                        q=q,
                        expected="<=1",
                        got="+".join(str(case) for case in cases),
                    )
                )
    return checked, mismatches


def _check_lemma(pairs):
    checked, mismatches = 0, []
    for p, q in pairs:
        match = lemma_discriminant_case(p, q)
        if match is None:
            continue
        report = ramification_report(QuaternionAlgebraQ(p, q))
        real = any(v.is_real for v in report.places)
        checked += 1
        if report.reduced_discriminant != match.discriminant or real:
            mismatches.append(
                Mismatch(
                    check=f"lemma/{match.case}",
                    p=p,
                    q=q,
                    expected=str(match.discriminant),
                    got=str(report.reduced_discriminant) + ("+real" if real else ""),
                )
            )
    return checked, mismatches


def _check_kummer(pairs):
    checked, mismatches = 0, []
    for p, q in pairs:
        expected = kummer_condition(p, q)
        if expected is None:
            continue
        for alpha in KUMMER_ALPHAS:
            verdict = classify_extension(ExtensionDescriptor.kummer_cubic(alpha), p, q)
            checked += 1
            if verdict.is_division != expected:
                mismatches.append(
                    Mismatch(
                        check=f"kummer/alpha={alpha}",
                        d=-3,
                        p=p,
                        q=q,
                        expected=_result(expected),
                        got=str(verdict.result),
                    )
                )
    return checked, mismatches


def _check_field(d, pairs):
    """Formas cerradas, motor, teorema principal y descenso sobre Q(sqrt(d))."""
    F = make_field(d)
    checked, mismatches = 0, []

    def compare(check, p, q, expected, got, ell=None):
        nonlocal checked
        checked += 1
        if expected != got:
            mismatches.append(
                Mismatch(
                    check=check, d=d, p=p, q=q, ell=ell, expected=str(expected), got=str(got)
                )
            )

    for p, q in pairs:
        if requires_distinct_primes(p, q):
            continue
        closed = classify_quadratic_closed_form(F, p, q)
        if closed is None:
            continue
        engine = classify_quadratic_engine(F, QuaternionAlgebraQ(p, q))
        compare(f"closed-form/{closed.case}", p, q, engine.result, closed.result)
        theorem = main_theorem_holds(F, p, q)
        if theorem is not None:
            compare("theorem-main", p, q, engine.result, _result(theorem))
        for ell in ELLS:
            descriptors = [ExtensionDescriptor.dihedral(F, ell)] + [
                ExtensionDescriptor.unramified_abelian(F, ell, n) for n in ABELIAN_EXPONENTS
            ]
            for E in descriptors:
                verdict = classify_extension(E, p, q)
                compare(f"descent/{E.kind}", p, q, closed.result, verdict.result, ell=ell)
    return checked, mismatches


def cross_validate(d_range, prime_bound, threads=None):
    """
    Barrido de verificacion: formas cerradas contra el motor por lugares,
    descenso a extensiones de grado impar, lema de discriminantes y cubicas
    puras. El informe no depende del orden de ejecucion.
    """
    threads = _thread_cap(threads)
    fields = sorted(d for d in set(d_range) if d not in (0, 1) and is_squarefree(d))
    pairs = _prime_pairs(prime_bound)
    logger.info(
        "Verificando %s cuerpos y %s pares de primos con %s hilos",
        len(fields), len(pairs), threads,
    )
    results = [_check_case_overlap(pairs), _check_lemma(pairs), _check_kummer(pairs)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results.extend(pool.map(lambda d: _check_field(d, pairs), fields))

    checked = sum(count for count, _found in results)
    mismatches = sorted(
        (m for _count, found in results for m in found), key=Mismatch.sort_key
    )
    for mismatch in mismatches:
        logger.warning("Discrepancia: %s", mismatch.as_dict())
    logger.info("Verificadas %s comparaciones, %s discrepancias", checked, len(mismatches))
    return MismatchReport(checked=checked, mismatches=tuple(mismatches))
