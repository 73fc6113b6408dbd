"""Herramientas de patrones de pegado: clasificación de pares e invariantes de superficie"""

from math import factorial

from ..errors import ErrorRea
from ..pattern import (
    DecoratedPattern,
    GluingPattern,
    PairClass,
    all_patterns,
    boundary_words,
    class_table,
    classify_pair,
    extends_over_caps,
    parse_pattern,
    surface_invariants,
)


def _parametros(decorado: DecoratedPattern) -> dict:
    return {
        'n': decorado.n,
        'P': list(decorado.pattern.sequence()),
        'D': decorado.dynkin,
        'labels': list(decorado.labels),
    }


def clasificar_patron(config, texto: str) -> dict:
    """
    Clasifica cada par de aristas i < j del patrón.

    Args:
        config: Configuración de ejecución
        texto: Contenido de un archivo de patrón

    Returns:
        Pares con su clase, o {'error': ...} si el patrón es inválido
    """
    try:
        decorado = parse_pattern(texto)
    except ErrorRea as e:
        return {'error': str(e), 'linea': getattr(e, 'line', None)}

    pares = [
        {'i': i, 'j': j, 'clase': clase.value}
        for i, j, clase in class_table(decorado.pattern)
    ]
    return {
        'total': len(pares),
        'parametros': _parametros(decorado),
        'pares': pares,
    }


def invariantes_superficie(config, texto: str) -> dict:
    """
    Género, componentes de borde y holonomías de borde del patrón.

    Args:
        config: Configuración de ejecución
        texto: Contenido de un archivo de patrón

    Returns:
        g, r, palabras de borde y si el fibrado se extiende sobre los discos
    """
    try:
        decorado = parse_pattern(texto)
    except ErrorRea as e:
        return {'error': str(e), 'linea': getattr(e, 'line', None)}

    g, r = surface_invariants(decorado.pattern)
    bordes = [
        {'palabra': str(palabra), 'holonomia': palabra.holonomy}
        for palabra in boundary_words(decorado)
    ]
    return {
        'total': r,
        'parametros': _parametros(decorado),
        'g': g,
        'r': r,
        'bordes': bordes,
        'se_extiende': extends_over_caps(decorado),
    }


# === CHEQUEOS ===

def chequeo_combinatoria(n_max: int) -> tuple[bool, dict | None]:
    """n = 2g + r − 1 y conteo (2n)!/2ⁿ para todos los patrones con n ≤ n_max"""
    for n in range(1, n_max + 1):
        cuenta = 0
        for patron in all_patterns(n):
            cuenta += 1
            g, r = surface_invariants(patron)
            if g < 0 or 2 * g + r - 1 != n:
                return False, {'P': list(patron.sequence()), 'g': g, 'r': r}
        esperado = factorial(2 * n) // 2**n
        if cuenta != esperado:
            return False, {'n': n, 'patrones': cuenta, 'esperado': esperado}
    return True, None


# Patrones de referencia: (secuencia, (g, r), clase del par 1 < 2)
REFERENCIAS = (
    ((1, 2, 3, 4), (0, 3), PairClass.POS_UNLINKED),
    ((1, 3, 2, 4), (1, 1), PairClass.POS_LINKED),
)


def chequeo_referencias() -> tuple[bool, dict | None]:
    """Esfera con tres agujeros y toro con un agujero"""
    for secuencia, esperado, clase in REFERENCIAS:
        patron = GluingPattern.from_sequence(secuencia)
        obtenido = surface_invariants(patron)
        obtenida = classify_pair(patron, 1, 2)
        if obtenido != esperado or obtenida != clase:
            return False, {
                'P': list(secuencia),
                'g_r': list(obtenido),
                'clase': obtenida.value,
            }
    return True, None
