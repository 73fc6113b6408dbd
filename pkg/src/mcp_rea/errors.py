"""Jerarquía de errores del verificador"""


class ErrorRea(Exception):
    """Error base de todas las operaciones del paquete"""


class PatternError(ErrorRea):
    """Error de lectura o validación de un patrón de pegado.

    Args:
        message: Descripción del problema
        line: Línea del archivo donde se detectó (None si no aplica)
    """

    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        prefix = f"línea {line}: " if line is not None else ""
        super().__init__(prefix + message)


class DimensionError(ErrorRea):
    """Índices o dimensiones incompatibles en una contracción"""


class MissingVariableError(ErrorRea):
    """La asignación no cubre todas las variables del polinomio"""

    def __init__(self, missing: list[str]):
        self.missing = missing
        super().__init__(f"faltan valores para: {', '.join(missing)}")


class InvarianceError(ErrorRea):
    """La r-matriz no es invariante bajo una etiqueta usada"""


class SizeGuardError(ErrorRea):
    """La enumeración excede el límite de estados configurado"""


class AlgebraError(ErrorRea):
    """Solicitud inválida de álgebra de Lie o de diagrama de Dynkin"""


class ReportError(ErrorRea):
    """No se pudo escribir un reporte"""
