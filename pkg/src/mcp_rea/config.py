"""Configuración del verificador a partir de variables de entorno"""

from dotenv import load_dotenv

from .utils.entorno import leer_entero, leer_texto

load_dotenv()


class Configuracion:
    """Parámetros de ejecución; los flags de la CLI tienen prioridad sobre el entorno"""

    def __init__(
        self,
        semilla: int | None = None,
        trabajos: int | None = None,
        algebra: str | None = None,
    ):
        self.semilla = semilla if semilla is not None else leer_entero("REA_SEED", 0)
        self.trabajos = trabajos if trabajos is not None else leer_entero("REA_JOBS", 1)
        self.algebra = algebra or leer_texto("REA_ALGEBRA", "sl3")
        self.max_estados = leer_entero("REA_MAX_ESTADOS", 10**7)
        self.muestras_jacobi = leer_entero("REA_MUESTRAS_JACOBI", 50)
        self.muestras_asociatividad = leer_entero("REA_MUESTRAS_ASOC", 200)

    def como_dict(self) -> dict:
        """Resumen serializable de la configuración"""
        return {
            'semilla': self.semilla,
            'trabajos': self.trabajos,
            'algebra': self.algebra,
            'max_estados': self.max_estados,
            'muestras_jacobi': self.muestras_jacobi,
            'muestras_asociatividad': self.muestras_asociatividad,
        }
