from dataclasses import dataclass
from typing import Optional

from django.db import models

from localsym.models import Place
from quatalg.models import ExtensionDescriptor


class CommandName(models.TextChoices):
    HILBERT = "hilbert", "Simbolo de Hilbert"
    RAMIFY = "ramify", "Lugares ramificados"
    CLASSIFY = "classify", "Clasificacion"
    TABLE = "table", "Tabla de veredictos"
    VERIFY = "verify", "Verificacion cruzada"


class OutputFormat(models.TextChoices):
    JSON = "json", "JSON"
    CSV = "csv", "CSV"
    TEXT = "text", "Texto"


@dataclass(frozen=True)
class QuerySpec:
    """Consulta ya validada por el formulario de su comando."""

    command: str
    output_format: str = OutputFormat.JSON
    a: Optional[int] = None
    b: Optional[int] = None
    place: Optional[Place] = None
    p: Optional[int] = None
    q: Optional[int] = None
    extension: Optional[ExtensionDescriptor] = None
    d_values: tuple = ()
    prime_bound: Optional[int] = None
    include_engine: bool = False
    threads: Optional[int] = None
