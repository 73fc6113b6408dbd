"""Línea de comandos `rea`: lectura de entradas, suites de chequeo y reportes JSON"""

import argparse
import sys
from typing import Sequence

from .config import Configuracion
from .errors import ErrorRea, PatternError, ReportError
from .informes import CheckReport, Trabajo, emit_report, ejecutar_todos
from .pattern import DecoratedPattern, parse_pattern
from .repvar import parse_group
from .tools import cuantizacion, grupos, patrones, poisson, suite
from .utils.entorno import nombre_algebra


class ErrorEntrada(Exception):
    """Entrada inválida: se informa con el archivo y termina con código 2"""

    def __init__(self, origen: str, mensaje: str):
        self.origen = origen
        super().__init__(f"{origen}: {mensaje}")


def _comunes() -> argparse.ArgumentParser:
    comunes = argparse.ArgumentParser(add_help=False)
    comunes.add_argument("--seed", type=int, default=None, help="Semilla maestra de los muestreos")
    comunes.add_argument("--jobs", type=int, default=None, help="Procesos para los chequeos")
    comunes.add_argument("--json", default=None, metavar="RUTA", help="Escribe el reporte JSON")
    comunes.add_argument(
        "--timings", action="store_true", help="Incluye elapsed_ms en los reportes"
    )
    return comunes


def crear_parser() -> argparse.ArgumentParser:
    comunes = _comunes()
    parser = argparse.ArgumentParser(
        prog="rea",
        description="Verificación exacta de álgebras de reflexión torcidas y corchetes de Fock–Rosly",
    )
    sub = parser.add_subparsers(dest="comando", required=True)

    p = sub.add_parser("classify", parents=[comunes], help="Clase de cada par de aristas")
    p.add_argument("--pattern", required=True)

    p = sub.add_parser("surface", parents=[comunes], help="Género y componentes de borde")
    p.add_argument("--pattern", required=True)

    p = sub.add_parser("orbits", parents=[comunes], help="Órbitas de la conjugación torcida")
    p.add_argument("--group", required=True, help="'Z5', 'S3' o ruta a una tabla JSON")
    p.add_argument("--twists", required=True, help="Un twist por generador: id,u2,...")

    p = sub.add_parser("poisson", parents=[comunes], help="Chequeos del bivector")
    p.add_argument("--pattern", required=True)
    p.add_argument("--checks", default=None, help="jacobi,agree,equivariance")
    p.add_argument("--algebra", default=None, help="sl2, sl3, ...")

    verificar = sub.add_parser("verify", help="Suites de verificación")
    objetivos = verificar.add_subparsers(dest="objetivo", required=True)
    p = objetivos.add_parser("quantisation", parents=[comunes], help="Conmutador contra corchete")
    p.add_argument("--pattern", required=True)
    p.add_argument("--algebra", default=None)
    p = objetivos.add_parser("all", parents=[comunes], help="Suite completa")
    p.add_argument(
        "--formas", type=int, default=2, choices=(1, 2, 3),
        help="Máximo de aristas al comparar las formas del bivector (3 recorre todos los patrones)",
    )
    return parser


# === ENTRADAS ===

def _leer_archivo(ruta: str) -> str:
    try:
        with open(ruta, encoding="utf-8") as archivo:
            return archivo.read()
    except OSError as e:
        raise ErrorEntrada(ruta, e.strerror or str(e)) from None


def _leer_patron(ruta: str) -> tuple[str, DecoratedPattern]:
    texto = _leer_archivo(ruta)
    try:
        return texto, parse_pattern(texto)
    except PatternError as e:
        raise ErrorEntrada(ruta, str(e)) from None


def _algebra(args, config: Configuracion) -> int:
    try:
        return nombre_algebra(getattr(args, "algebra", None) or config.algebra)
    except ValueError as e:
        raise ErrorEntrada("--algebra", str(e)) from None


# === SALIDA ===

def _resumen(reportes: Sequence[CheckReport]) -> None:
    for r in reportes:
        print(f"{r.status:<5} {r.check} {r.target}")
    aprobados = sum(1 for r in reportes if r.passed)
    print(f"aprobados: {aprobados}/{len(reportes)}")


def _resumen_pares(reportes: Sequence[CheckReport], pares: dict) -> None:
    """Pares de generadores que coinciden en el chequeo de cuantización"""
    total = pares['misma_arista'] + pares['aristas_distintas']
    for r in reportes:
        if r.check != "quantisation" or r.status == "error":
            continue
        if r.passed:
            print(
                f"pares coincidentes: misma arista={pares['misma_arista']}/{pares['misma_arista']} "
                f"aristas distintas={pares['aristas_distintas']}/{pares['aristas_distintas']}"
            )
        else:
            contraejemplo = r.counterexample
            print(f"pares coincidentes: {contraejemplo['coincidentes']}/{total}")
            print(f"primer par distinto: {' '.join(contraejemplo['par'])}")


def _cerrar(args, reportes: Sequence[CheckReport]) -> int:
    if args.json:
        emit_report(reportes, args.json)
    return 0 if all(r.passed for r in reportes) else 1


def _ejecutar(args, config: Configuracion, trabajos: Sequence[Trabajo]) -> int:
    reportes = ejecutar_todos(trabajos, config.trabajos, args.timings)
    _resumen(reportes)
    return _cerrar(args, reportes)


# === COMANDOS ===

def comando_classify(args, config: Configuracion) -> int:
    texto, decorado = _leer_patron(args.pattern)
    resultado = patrones.clasificar_patron(config, texto)
    print(f"P = {decorado.pattern}  labels = {' '.join(decorado.labels)}")
    print("i  j  clase")
    for par in resultado['pares']:
        print(f"{par['i']:<2} {par['j']:<2} {par['clase']}")
    return _cerrar(args, [CheckReport("classify", decorado.descriptor(), "pass")])


def comando_surface(args, config: Configuracion) -> int:
    texto, decorado = _leer_patron(args.pattern)
    resultado = patrones.invariantes_superficie(config, texto)
    print(f"g={resultado['g']} r={resultado['r']}")
    for k, borde in enumerate(resultado['bordes'], start=1):
        print(f"borde {k}: {borde['palabra']} (holonomía {borde['holonomia']})")
    return _cerrar(args, [CheckReport("surface", decorado.descriptor(), "pass")])


def comando_orbits(args, config: Configuracion) -> int:
    try:
        g = parse_group(args.group)
        grupos.leer_twists(g, args.twists)
    except (ValueError, OSError, KeyError) as e:
        raise ErrorEntrada(args.group, str(e)) from None

    objetivo = f"{g.label} twists={args.twists}"
    trabajo = Trabajo(
        "orbits", objetivo, grupos.chequeo_orbitas, (args.group, args.twists, config.max_estados)
    )
    reportes = ejecutar_todos([trabajo], 1, args.timings)
    if reportes[0].status != "error":
        resultado = grupos.orbitas_torcidas(config, args.group, args.twists)
        print(
            f"órbitas={resultado['total']} burnside={resultado['burnside']} "
            f"cardinalidad={resultado['cardinalidad_grupoide']} esperado={resultado['esperado']}"
        )
    _resumen(reportes)
    return _cerrar(args, reportes)


def comando_poisson(args, config: Configuracion) -> int:
    texto, _ = _leer_patron(args.pattern)
    n = _algebra(args, config)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else None
    try:
        trabajos = poisson.trabajos_poisson(config, texto, checks, n)
    except ValueError as e:
        raise ErrorEntrada("--checks", str(e)) from None
    return _ejecutar(args, config, trabajos)


def comando_verify(args, config: Configuracion) -> int:
    if args.objetivo == "all":
        return _ejecutar(args, config, suite.trabajos_suite(config, args.formas))
    texto, decorado = _leer_patron(args.pattern)
    n = _algebra(args, config)
    pares = cuantizacion.conteo_pares(decorado, n)
    print(f"pares: misma arista={pares['misma_arista']} aristas distintas={pares['aristas_distintas']}")
    reportes = ejecutar_todos(
        cuantizacion.trabajos_cuantizacion(config, texto, n), config.trabajos, args.timings
    )
    _resumen(reportes)
    _resumen_pares(reportes, pares)
    return _cerrar(args, reportes)


COMANDOS = {
    "classify": comando_classify,
    "surface": comando_surface,
    "orbits": comando_orbits,
    "poisson": comando_poisson,
    "verify": comando_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    """
    Ejecuta la CLI.

    Args:
        argv: Argumentos sin el nombre del programa (por defecto sys.argv[1:])

    Returns:
        0 si todo pasa, 1 ante algún fallo, 2 ante errores de uso o de lectura
    """
    parser = crear_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2

    config = Configuracion(semilla=args.seed, trabajos=args.jobs)
    try:
        return COMANDOS[args.comando](args, config)
    except ErrorEntrada as e:
        print(str(e), file=sys.stderr)
        return 2
    except ReportError as e:
        print(f"[verify] no se pudo escribir el reporte: {e}", file=sys.stderr)
        return 2
    except ErrorRea as e:
        print(f"rea: {e}", file=sys.stderr)
        return 2


def main():
    """Punto de entrada principal"""
    sys.exit(run())


if __name__ == "__main__":
    main()
