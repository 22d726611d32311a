import logging

from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.core.management.base import BaseCommand, CommandError

from cli.forms import FORMS
from cli.models import CommandName, OutputFormat
from cli.runner import answer
from cli.serializers import render
from quatalg.models import ExtensionKind

logger = logging.getLogger("cli")


def _form_errors(form):
    messages = []
    for name, errors in form.errors.items():
        prefix = "" if name == "__all__" else f"{name}: "
        messages.extend(f"{prefix}{error}" for error in errors)
    return "; ".join(messages)


class Command(BaseCommand):
    help = (
        "Simbolos de Hilbert, ramificacion y clasificacion de algebras de "
        "cuaterniones H(p, q) sobre Q y sobre extensiones de cuerpos cuadraticos."
    )
    requires_system_checks = []

    def _subparser(self, subparsers, name, help_text):
        parser = subparsers.add_parser(name, help=help_text)
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=OutputFormat.values,
            default=OutputFormat.JSON,
        )
        return parser

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="query", required=True)

        hilbert = self._subparser(subparsers, CommandName.HILBERT, "Simbolo (a, b)_v.")
        hilbert.add_argument("-a", required=True)
        hilbert.add_argument("-b", required=True)
        hilbert.add_argument("-p", required=True, help="Primo o 'real'.")

        ramify = self._subparser(subparsers, CommandName.RAMIFY, "Lugares ramificados de H(a, b).")
        ramify.add_argument("-a", required=True)
        ramify.add_argument("-b", required=True)

        classify = self._subparser(subparsers, CommandName.CLASSIFY, "Veredicto de H(p, q) sobre K.")
        classify.add_argument("--d")
        classify.add_argument("--kind", choices=ExtensionKind.values)
        classify.add_argument("--ell")
        classify.add_argument("--n")
        classify.add_argument("--alpha")
        classify.add_argument("-p", required=True)
        classify.add_argument("-q", required=True)

        table = self._subparser(subparsers, CommandName.TABLE, "Tabla de veredictos por (d, p, q).")
        table.add_argument("--d-min", dest="d_min")
        table.add_argument("--d-max", dest="d_max")
        table.add_argument("--d", action="append")
        table.add_argument("--prime-bound", dest="prime_bound", required=True)
        table.add_argument("--include-engine", dest="include_engine", action="store_true")

        verify = self._subparser(subparsers, CommandName.VERIFY, "Barrido de verificacion cruzada.")
        verify.add_argument("--d-max", dest="d_max", required=True)
        verify.add_argument("--prime-bound", dest="prime_bound", required=True)
        verify.add_argument("--threads")

    def handle(self, *args, **options):
        query = options["query"]
        form_class = FORMS[query]
        try:
            form = form_class(data={name: options.get(name) for name in form_class.base_fields})
            if not form.is_valid():
                raise CommandError(_form_errors(form), returncode=2)
            spec = form.to_spec(options["output_format"])
            logger.debug("Consulta %s", spec)
            output = answer(spec)
        except ValidationError as exc:
            raise CommandError("; ".join(exc.messages), returncode=2)
        except (ArithmeticError, ImproperlyConfigured) as exc:
            # fuera de rango, factorizacion incompleta o QALG_* invalido
            raise CommandError(str(exc), returncode=2)

        self.stdout.write(render(output, spec.output_format))
        if query == CommandName.VERIFY:
            found = len(output.document["mismatches"])
            self.stderr.write(
                f"verify: {output.document['checked']} comprobaciones, {found} discrepancias"
            )
            if found:
                raise CommandError(f"{found} discrepancias en la verificacion.", returncode=1)
