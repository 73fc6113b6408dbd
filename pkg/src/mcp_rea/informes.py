"""Reportes de verificación y ejecución de trabajos de chequeo"""

import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ErrorRea, ReportError
from .utils.formato import serializar

ESTADOS = ("pass", "fail", "error")


@dataclass(frozen=True)
class CheckReport:
    """Resultado de un chequeo sobre un objetivo (patrón, grupo o álgebra)"""

    check: str
    target: str
    status: str
    counterexample: dict | None = None
    elapsed_ms: int | None = None

    def __post_init__(self):
        if self.status not in ESTADOS:
            raise ValueError(f"estado inválido: {self.status}")
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("un chequeo fallido requiere contraejemplo")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def como_dict(self) -> dict:
        """Campos en orden estable; se omiten los opcionales vacíos"""
        datos = {'check': self.check, 'target': self.target, 'status': self.status}
        if self.counterexample is not None:
            datos['counterexample'] = serializar(self.counterexample)
        if self.elapsed_ms is not None:
            datos['elapsed_ms'] = self.elapsed_ms
        return datos


def ordenar(reports: Sequence[CheckReport]) -> list[CheckReport]:
    return sorted(reports, key=lambda r: (r.check, r.target))


def emit_report(reports: Sequence[CheckReport], path: str) -> None:
    """
    Escribe los reportes como arreglo JSON ordenado por (check, target).

    Args:
        reports: Reportes a escribir
        path: Ruta del archivo de salida
    """
    contenido = json.dumps(
        [r.como_dict() for r in ordenar(reports)], ensure_ascii=False, indent=2
    )
    try:
        with open(path, "w", encoding="utf-8") as archivo:
            archivo.write(contenido + "\n")
    except OSError as e:
        raise ReportError(f"{path}: {e.strerror or e}") from e


@dataclass(frozen=True)
class Trabajo:
    """Chequeo independiente: función de módulo que devuelve (cumple, contraejemplo)"""

    check: str
    target: str
    funcion: Callable
    args: tuple = ()


def ejecutar(trabajo: Trabajo, tiempos: bool = False) -> CheckReport:
    """Corre un trabajo y lo convierte en CheckReport; los errores del dominio quedan como 'error'"""
    inicio = time.perf_counter()
    try:
        cumple, contraejemplo = trabajo.funcion(*trabajo.args)
        estado = "pass" if cumple else "fail"
        detalle = None if cumple else serializar(contraejemplo)
    except ErrorRea as e:
        estado, detalle = "error", {'mensaje': str(e)}
    transcurrido = int((time.perf_counter() - inicio) * 1000) if tiempos else None
    print(f"[verify] {trabajo.check} {trabajo.target}: {estado}", file=sys.stderr)
    return CheckReport(trabajo.check, trabajo.target, estado, detalle, transcurrido)


def _ejecutar_con_tiempos(trabajo: Trabajo) -> CheckReport:
    return ejecutar(trabajo, tiempos=True)


def ejecutar_todos(
    trabajos: Sequence[Trabajo], jobs: int = 1, tiempos: bool = False
) -> list[CheckReport]:
    """Ejecuta los trabajos, en paralelo si jobs > 1; el resultado sale ordenado"""
    funcion = _ejecutar_con_tiempos if tiempos else ejecutar
    if jobs > 1 and len(trabajos) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reportes = list(pool.map(funcion, trabajos))
    else:
        reportes = [funcion(t) for t in trabajos]
    return ordenar(reportes)
