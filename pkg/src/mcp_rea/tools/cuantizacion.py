"""Herramientas de cuantización a primer orden: conmutadores del álgebra torcida contra el corchete"""

from ..errors import ErrorRea
from ..informes import Trabajo, ejecutar_todos
from ..lie import build_sl, cartan_wedge_r_matrix, standard_r_matrix
from ..pattern import DecoratedPattern, GluingPattern, parse_pattern
from ..poisson import fock_rosly_bivector, sample_triples
from ..rea import (
    all_generator_triples,
    build_deformation_table,
    check_associativity_order1,
    check_equivariance_order1,
    check_quantisation,
    crossing_morphism,
    shuffle_crossing,
    slot_terms_text,
)
from ..utils.entorno import nombre_algebra
from .poisson import objetivo


def _tabla(texto: str, n: int):
    decorado = parse_pattern(texto)
    g = build_sl(n)
    r = standard_r_matrix(g)
    return decorado, r, build_deformation_table(decorado, g, r)


def conteo_pares(decorado: DecoratedPattern, n: int) -> dict:
    """Pares de generadores sobre una misma arista y sobre aristas distintas"""
    por_arista = (n * n) ** 2
    total = (decorado.n * n * n) ** 2
    return {'misma_arista': decorado.n * por_arista, 'aristas_distintas': total - decorado.n * por_arista}


# === CHEQUEOS ===

def chequeo_cuantizacion(texto: str, n: int) -> tuple[bool, dict | None]:
    """[a, b]/ħ = {a, b} en todos los pares ordenados de generadores"""
    decorado, r, tabla = _tabla(texto, n)
    cumple, contraejemplo, _ = check_quantisation(tabla, fock_rosly_bivector(decorado, r))
    return cumple, contraejemplo


def chequeo_asociatividad(
    texto: str, n: int, muestras: int, semilla: int
) -> tuple[bool, dict | None]:
    """Todas las ternas con una arista; una muestra con más aristas"""
    decorado, _, tabla = _tabla(texto, n)
    if decorado.n == 1:
        ternas = all_generator_triples(tabla.ring)
    else:
        ternas = sample_triples(tabla.ring, muestras, semilla)
    return check_associativity_order1(tabla, ternas)


def chequeo_equivariancia_rea(texto: str, n: int) -> tuple[bool, dict | None]:
    _, _, tabla = _tabla(texto, n)
    return check_equivariance_order1(tabla)


def chequeo_cruces(texto: str) -> tuple[bool, dict | None]:
    """Forma cerrada por clase contra los trenzados de barajado, par por par"""
    decorado = parse_pattern(texto)
    for alpha in range(decorado.n):
        for beta in range(alpha + 1, decorado.n):
            cerrada = crossing_morphism(decorado, alpha, beta)
            barajada = shuffle_crossing(decorado, alpha, beta)
            a = {(t.first, t.second): t.coefficient for t in cerrada}
            b = {(t.first, t.second): t.coefficient for t in barajada}
            if a != b:
                return False, {
                    'aristas': [alpha + 1, beta + 1],
                    'forma_cerrada': slot_terms_text(cerrada),
                    'barajado': slot_terms_text(barajada),
                }
    return True, None


def _una_arista() -> DecoratedPattern:
    return DecoratedPattern(GluingPattern((1,), (2,)), ("id",))


def chequeo_asociatividad_control(n: int) -> tuple[bool, dict | None]:
    """Una entrada alterada de la tabla debe romper la asociatividad"""
    g = build_sl(n)
    tabla = build_deformation_table(_una_arista(), g, standard_r_matrix(g))
    anillo = tabla.ring
    alterada = tabla.corrupted(0, 1, anillo.one)
    cumple, _ = check_associativity_order1(alterada, [(0, 1, 2)])
    if cumple:
        return False, {'detalle': 'la tabla alterada pasó la asociatividad'}
    return True, None


def chequeo_equivariancia_rea_control(n: int) -> tuple[bool, dict | None]:
    """Con t no invariante la identidad de álgebra módulo debe fallar"""
    g = build_sl(n)
    r = standard_r_matrix(g).perturbed(g.index("E12"), g.index("E21"), 1)
    tabla = build_deformation_table(_una_arista(), g, r)
    cumple, _ = check_equivariance_order1(tabla)
    if cumple:
        return False, {'detalle': 'la identidad se cumplió con t no invariante'}
    return True, None


def chequeo_equivariancia_rea_torcida_control(n: int) -> tuple[bool, dict | None]:
    """Con r no invariante bajo el flip la identidad de álgebra módulo torcida debe fallar"""
    g = build_sl(n)
    decorado = DecoratedPattern(GluingPattern((1,), (2,)), ("flip",))
    tabla = build_deformation_table(decorado, g, cartan_wedge_r_matrix(g), check_invariance=False)
    cumple, contraejemplo = check_equivariance_order1(tabla)
    if cumple:
        return False, {'detalle': 'la identidad se cumplió con r no invariante bajo el flip'}
    if contraejemplo['accion'] != "flip":
        return False, {'detalle': 'falló la parametrización sin torcer', 'contraejemplo': contraejemplo}
    return True, None


# === HERRAMIENTAS ===

def trabajos_cuantizacion(config, texto: str, n: int | None = None) -> list[Trabajo]:
    """
    Trabajos de verificación de la cuantización de un patrón.

    Args:
        config: Configuración de ejecución
        texto: Contenido del archivo de patrón
        n: Tamaño de sl_n (por defecto el de la configuración)

    Returns:
        Cuantización, asociatividad, equivariancia y cruces
    """
    n = n or nombre_algebra(config.algebra)
    decorado = parse_pattern(texto)
    destino = objetivo(n, decorado)
    trabajos = [
        Trabajo("quantisation", destino, chequeo_cuantizacion, (texto, n)),
        Trabajo(
            "associativity", destino, chequeo_asociatividad,
            (texto, n, config.muestras_asociatividad, config.semilla),
        ),
        Trabajo("rea-equivariance", destino, chequeo_equivariancia_rea, (texto, n)),
    ]
    if decorado.n > 1:
        trabajos.append(Trabajo("crossing", decorado.descriptor(), chequeo_cruces, (texto,)))
    return trabajos


def verificar_cuantizacion(config, texto: str, algebra: str | None = None) -> dict:
    """
    Compara el conmutador a primer orden del álgebra torcida con el corchete de Fock–Rosly.

    Args:
        config: Configuración de ejecución
        texto: Contenido del archivo de patrón
        algebra: 'sl2', 'sl3', ...

    Returns:
        Pares comparados y reportes por chequeo
    """
    try:
        n = nombre_algebra(algebra or config.algebra)
        decorado = parse_pattern(texto)
        trabajos = trabajos_cuantizacion(config, texto, n)
    except (ErrorRea, ValueError) as e:
        return {'error': str(e)}

    reportes = ejecutar_todos(trabajos, config.trabajos)
    return {
        'total': len(reportes),
        'parametros': {
            'algebra': f"sl{n}",
            'P': list(decorado.pattern.sequence()),
            'labels': list(decorado.labels),
            'generadores': decorado.n * n * n,
        },
        'pares': conteo_pares(decorado, n),
        'aprobados': sum(1 for r in reportes if r.passed),
        'reportes': [r.como_dict() for r in reportes],
    }
