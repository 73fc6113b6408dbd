"""Suite completa de `verify all`: lista fija de trabajos sobre todos los módulos"""

from itertools import product

from ..informes import Trabajo, ejecutar_todos
from ..pattern import DecoratedPattern, GluingPattern, all_patterns, pattern_text
from . import cuantizacion, grupos, patrones, poisson

# Representantes de las seis clases de pares, de dos aristas
CLASES = (
    (1, 3, 2, 4),
    (2, 4, 1, 3),
    (1, 4, 2, 3),
    (2, 3, 1, 4),
    (1, 2, 3, 4),
    (3, 4, 1, 2),
)

ETIQUETAS = ("id", "flip")


def _texto(secuencia, etiquetas) -> str:
    return pattern_text(DecoratedPattern(GluingPattern.from_sequence(secuencia), tuple(etiquetas)))


def _decorados(n_max: int):
    for n in range(1, n_max + 1):
        for patron in all_patterns(n):
            for etiquetas in product(ETIQUETAS, repeat=n):
                yield DecoratedPattern(patron, etiquetas)


def trabajos_suite(config, n_formas: int = 2) -> list[Trabajo]:
    """
    Todos los chequeos de la suite, en orden estable.

    Args:
        config: Configuración de ejecución (semilla y tamaños de muestra)
        n_formas: Máximo de aristas en la comparación de formas del bivector

    Returns:
        Lista de Trabajo independientes
    """
    semilla = config.semilla
    trabajos = [
        Trabajo("pattern-combinatorics", "n<=5", patrones.chequeo_combinatoria, (5,)),
        Trabajo("pattern-reference", "P=1 2 3 4|P=1 3 2 4", patrones.chequeo_referencias),
        Trabajo("out-table", "A,D,E", poisson.chequeo_out),
        Trabajo("flip-tangent", "sl3", poisson.chequeo_tangente, (3,)),
    ]
    for n in (2, 3, 4):
        trabajos.append(Trabajo("cybe", f"sl{n}", poisson.chequeo_cybe, (n,)))
    for n in (3, 4):
        trabajos.append(Trabajo("flip-invariance", f"sl{n}", poisson.chequeo_flip, (n,)))

    # Formas del bivector sobre sl3
    for decorado in _decorados(n_formas):
        trabajos.append(Trabajo(
            "forms-agree", poisson.objetivo(3, decorado), poisson.chequeo_formas,
            (pattern_text(decorado), 3),
        ))

    # Jacobi: exhaustivo en sl2, muestreado en sl3
    for n, secuencia, etiquetas in (
        (2, (1, 2), ("id",)),
        (2, (1, 3, 2, 4), ("id", "id")),
        (3, (1, 3, 2, 4), ("flip", "id")),
        (3, (1, 4, 2, 3), ("id", "flip")),
    ):
        decorado = DecoratedPattern(GluingPattern.from_sequence(secuencia), etiquetas)
        trabajos.append(Trabajo(
            "jacobi", poisson.objetivo(n, decorado), poisson.chequeo_jacobi,
            (pattern_text(decorado), n, config.muestras_jacobi, semilla),
        ))
    trabajos.append(Trabajo("jacobi-control", "sl3 r=t", poisson.chequeo_jacobi_control, (3,)))

    for secuencia, etiquetas in (((1, 2), ("flip",)), ((1, 3, 2, 4), ("flip", "id"))):
        decorado = DecoratedPattern(GluingPattern.from_sequence(secuencia), etiquetas)
        trabajos.append(Trabajo(
            "equivariance", poisson.objetivo(3, decorado), poisson.chequeo_equivariancia,
            (pattern_text(decorado), 3),
        ))
    trabajos.append(Trabajo(
        "equivariance-control", "sl2 t+E12⊗E21", poisson.chequeo_equivariancia_control, (2,)
    ))
    trabajos.append(Trabajo(
        "equivariance-control", "sl3 flip r+h1∧h2", poisson.chequeo_equivariancia_torcida_control, (3,)
    ))

    # Cuantización: las seis clases con todas las etiquetas en sl3
    for secuencia in CLASES:
        for etiquetas in product(ETIQUETAS, repeat=2):
            texto = _texto(secuencia, etiquetas)
            for trabajo in cuantizacion.trabajos_cuantizacion(config, texto, 3):
                if trabajo.check != "crossing" or etiquetas == ("id", "id"):
                    trabajos.append(trabajo)
    for n, etiqueta in ((2, "id"), (3, "id"), (3, "flip")):
        trabajos.extend(cuantizacion.trabajos_cuantizacion(config, _texto((1, 2), (etiqueta,)), n))
    trabajos.append(Trabajo(
        "associativity-control", "sl2 beta alterada", cuantizacion.chequeo_asociatividad_control, (2,)
    ))
    trabajos.append(Trabajo(
        "rea-equivariance-control", "sl2 t+E12⊗E21",
        cuantizacion.chequeo_equivariancia_rea_control, (2,),
    ))
    trabajos.append(Trabajo(
        "rea-equivariance-control", "sl3 flip r+h1∧h2",
        cuantizacion.chequeo_equivariancia_rea_torcida_control, (3,),
    ))

    # Grupos finitos
    for spec in grupos.grupos_incorporados(12):
        trabajos.append(Trabajo("orbits", spec, grupos.chequeo_grupo, (spec, 3, config.max_estados)))
    trabajos.append(Trabajo("orbits-reference", "Z5 u2", grupos.chequeo_referencia_ciclica))
    trabajos.append(Trabajo("orbits-reference", "S3 id", grupos.chequeo_simetrico))

    trabajos.append(Trabajo(
        "pattern-independence", "sl3 P=1 3 2 4|P=2 4 1 3", poisson.chequeo_independencia, (3,)
    ))
    return trabajos


def verificar_todo(config) -> dict:
    """
    Corre la suite completa.

    Args:
        config: Configuración de ejecución

    Returns:
        Reportes ordenados por (check, target)
    """
    reportes = ejecutar_todos(trabajos_suite(config), config.trabajos)
    return {
        'total': len(reportes),
        'parametros': config.como_dict(),
        'aprobados': sum(1 for r in reportes if r.passed),
        'reportes': [r.como_dict() for r in reportes],
    }
