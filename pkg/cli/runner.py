import logging
import os
import sys
from contextlib import redirect_stderr, redirect_stdout

from arith.services import kronecker, primes_below
from localsym.services import hilbert
from quadfield.services import make_field
from quatalg.models import QuaternionAlgebraQ
from quatalg.services import (
    classify_extension,
    classify_quadratic_closed_form,
    classify_quadratic_engine,
    ramification_report,
    requires_distinct_primes,
)
from quatalg.validation import cross_validate

from . import serializers
from .models import CommandName

logger = logging.getLogger(__name__)


def _row(F, p, q, verdict):
    delta = F.discriminant
    return {
        "d": F.value,
        "delta": delta,
        "p": p,
        "q": q,
        "verdict": str(verdict.result),
        "case": verdict.case,
        "leg_delta_p": kronecker(delta, p),
        "leg_delta_q": kronecker(delta, q),
    }


def emit_table(spec):
    """
    Una fila por (d, p, q) ordenada por d, p y q. Solo entran los pares que
    cubre alguna forma cerrada, salvo con include_engine. El simbolo de
    Delta en 2 es el de Kronecker.
    """
    primes = primes_below(spec.prime_bound)
    rows = []
    for d in sorted(spec.d_values):
        F = make_field(d)
        for p in primes:
            for q in primes:
                verdict = None
                if not requires_distinct_primes(p, q):
                    verdict = classify_quadratic_closed_form(F, p, q)
                if verdict is None:
                    if not spec.include_engine:
                        continue
                    verdict = classify_quadratic_engine(F, QuaternionAlgebraQ(p, q))
                rows.append(_row(F, p, q, verdict))
    logger.info("Tabla con %s filas para %s cuerpos", len(rows), len(spec.d_values))
    return rows


def answer(spec):
    """Resuelve una consulta validada y devuelve su salida serializable."""
    if spec.command == CommandName.HILBERT:
        return serializers.serialize_hilbert(spec.place, hilbert(spec.a, spec.b, spec.place))
    if spec.command == CommandName.RAMIFY:
        report = ramification_report(QuaternionAlgebraQ(spec.a, spec.b))
        return serializers.serialize_ramification(spec.a, spec.b, report)
    if spec.command == CommandName.CLASSIFY:
        return serializers.serialize_verdict(classify_extension(spec.extension, spec.p, spec.q))
    if spec.command == CommandName.TABLE:
        return serializers.serialize_table(emit_table(spec))
    if spec.command == CommandName.VERIFY:
        report = cross_validate(spec.d_values, spec.prime_bound, threads=spec.threads)
        return serializers.serialize_report(report)
    raise ValueError(f"Comando desconocido: {spec.command}")


def run(argv=None, stdout=None, stderr=None):
    """
    Ejecuta `qalg` con argv y devuelve el estado de salida: 0 si todo fue
    bien, 1 si verify encontro discrepancias, 2 si la entrada es invalida.
    """
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "qalg_project.settings")
    import django
    from django.core.exceptions import ImproperlyConfigured

    argv = sys.argv[1:] if argv is None else list(argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        django.setup()
    except ImproperlyConfigured as exc:
        stderr.write(f"CommandError: {exc}\n")
        return 2
    from django.core.management.base import CommandError

    from .management.commands.qalg import Command

    command = Command(stdout=stdout, stderr=stderr)
    with redirect_stdout(stdout), redirect_stderr(stderr):
        try:
            command.run_from_argv(["manage.py", "qalg", *argv])
        except CommandError as exc:
            # error de argparse en un subcomando: entrada invalida
            stderr.write(f"CommandError: {exc}\n")
            return 2
        except SystemExit as exc:
            if exc.code is None:
                return 0
            return exc.code if isinstance(exc.code, int) else 1
    return 0
