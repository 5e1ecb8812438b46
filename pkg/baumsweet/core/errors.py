"""Jerarquía de excepciones del paquete."""


class BaumSweetError(Exception):
    """Error base de baumsweet"""


class FieldMismatchError(BaumSweetError, ValueError):
    """Series sobre cuerpos distintos"""


class TruncationError(BaumSweetError, ValueError):
    """Se pide un coeficiente más allá de la truncación conocida"""


class NotInvertibleError(BaumSweetError, ValueError):
    """Serie sin inversa (constante no nula o coeficiente lineal no invertible)"""


class InvalidParameterError(BaumSweetError, ValueError):
    """Parámetro fuera de dominio (r < 2, base inválida, figura desconocida...)"""


class UnknownSequenceError(BaumSweetError, KeyError):
    """Identificador de sucesión desconocido"""


class NotProlongableError(BaumSweetError, ValueError):
    """El morfismo no es prolongable en la letra semilla"""


class InsufficientPrefixError(BaumSweetError, ValueError):
    """El prefijo no alcanza para la profundidad o cota pedida"""


class ParityError(BaumSweetError, ArithmeticError):
    """w_n - n impar: indica un bug, no un dato"""


class UnknownCheckError(BaumSweetError, KeyError):
    """Check no registrado"""


class UnknownIdentityError(BaumSweetError, KeyError):
    """Identidad de palabras no registrada"""
