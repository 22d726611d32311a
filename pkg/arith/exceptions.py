from django.core.exceptions import ValidationError


class InvalidArgument(ValidationError):
    """
    Argumento fuera del dominio de la operacion (cero, no libre de cuadrados,
    no primo, ...). Hereda de ValidationError para que formularios y comandos
    lo traten igual que cualquier error de validacion.
    """


class FactorizationIncomplete(ArithmeticError):
    def __init__(self, n, cofactor, bound):
        self.n = n
        self.cofactor = cofactor
        self.bound = bound
        super().__init__(
            f"No se pudo factorizar {n}: el cofactor {cofactor} supera la cota {bound}."
        )


class IntegerRangeError(OverflowError):
    """Un argumento o producto intermedio sale del rango entero soportado."""
