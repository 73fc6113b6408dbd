"""Herramientas de variedades de representaciones torcidas sobre grupos finitos"""

from fractions import Fraction
from math import gcd

from ..errors import ErrorRea
from ..repvar import (
    FiniteGroup,
    TwistData,
    burnside_count,
    cyclic_group,
    decode_state,
    groupoid_cardinality,
    identity_automorphism,
    parse_group,
    stabilizer,
    symmetric_group,
    twisted_orbits,
)
from ..utils.formato import formatear_racional

MAX_REPRESENTANTES = 50


def leer_twists(grupo: FiniteGroup, twists: str) -> TwistData:
    rho = TwistData.parse(grupo, twists)
    if rho.n == 0:
        raise ValueError("se requiere al menos un twist")
    for kappa in rho.twists:
        if not kappa.is_automorphism_of(grupo):
            raise ValueError(f"{kappa.name} no es un automorfismo de {grupo.label}")
    return rho


def orbitas_torcidas(config, grupo: str, twists: str) -> dict:
    """
    Órbitas de la conjugación torcida g_i ↦ h·g_i·κ_i(h)⁻¹ sobre G^n.

    Args:
        config: Configuración de ejecución (límite de estados y procesos)
        grupo: 'Z5', 'S3' o ruta a una tabla de Cayley en JSON
        twists: Lista separada por comas, uno por generador ('id', 'u2', 'inner:213')

    Returns:
        Conteo de órbitas, conteo de Burnside, cardinalidad del grupoide y representantes
    """
    try:
        g = parse_group(grupo)
        rho = leer_twists(g, twists)
        orbitas = twisted_orbits(g, rho, config.max_estados, config.trabajos)
    except (ErrorRea, ValueError, OSError) as e:
        return {'error': str(e)}

    representantes = []
    cardinalidad = Fraction(0)
    for orbita in orbitas:
        phi = decode_state(g, rho.n, orbita[0])
        estabilizador = len(stabilizer(g, phi, rho))
        cardinalidad += Fraction(1, estabilizador)
        if len(representantes) < MAX_REPRESENTANTES:
            representantes.append({
                'representante': [g.names[x] for x in phi.values],
                'tamano': len(orbita),
                'estabilizador': estabilizador,
            })

    return {
        'total': len(orbitas),
        'parametros': {
            'grupo': g.label,
            'orden': g.order,
            'twists': [k.name for k in rho.twists],
            'n': rho.n,
        },
        'burnside': burnside_count(g, rho),
        'cardinalidad_grupoide': formatear_racional(cardinalidad),
        'esperado': formatear_racional(Fraction(g.order) ** (rho.n - 1)),
        'orbitas': representantes,
    }


# === CHEQUEOS ===

def chequeo_orbitas(
    spec_grupo: str, twists: str, max_estados: int
) -> tuple[bool, dict | None]:
    """Union-find contra Burnside y cardinalidad del grupoide contra |G|^(n-1)"""
    g = parse_group(spec_grupo)
    rho = leer_twists(g, twists)
    orbitas = len(twisted_orbits(g, rho, max_estados))
    burnside = burnside_count(g, rho)
    cardinalidad = groupoid_cardinality(g, rho, max_estados)
    esperado = Fraction(g.order) ** (rho.n - 1)
    if orbitas != burnside or cardinalidad != esperado:
        return False, {
            'twists': twists,
            'orbitas': orbitas,
            'burnside': burnside,
            'cardinalidad_grupoide': cardinalidad,
            'esperado': esperado,
        }
    return True, None


def twists_incorporados(g: FiniteGroup) -> list[str]:
    """Unidades u<k> para Z/m; conjugaciones internas en otro caso"""
    if g.modulus is not None:
        return [f"u{k}" for k in range(1, g.modulus) if gcd(k, g.modulus) == 1] or ["id"]
    return ["id"] + [f"inner:{nombre}" for nombre in g.names if g.names.index(nombre) != g.id]


def grupos_incorporados(orden_max: int = 12) -> list[str]:
    grupos = [f"Z{m}" for m in range(1, orden_max + 1)]
    if orden_max >= 6:
        grupos.append("S3")
    return grupos


def chequeo_grupo(spec_grupo: str, n_max: int, max_estados: int) -> tuple[bool, dict | None]:
    """Para cada twist incorporado κ y n ≤ n_max: ρ = (κ, id, ...) y ρ = (κ, κ, ...)"""
    g = parse_group(spec_grupo)
    identidad = identity_automorphism(g).name
    for twist in twists_incorporados(g):
        for n in range(1, n_max + 1):
            for tokens in ([twist] + [identidad] * (n - 1), [twist] * n):
                cumple, contraejemplo = chequeo_orbitas(spec_grupo, ",".join(tokens), max_estados)
                if not cumple:
                    return cumple, contraejemplo
    return True, None


def chequeo_referencia_ciclica() -> tuple[bool, dict | None]:
    """Z/5 con x ↦ 2x tiene una sola órbita en n = 1; sin twist, cinco"""
    g = cyclic_group(5)
    torcida = len(twisted_orbits(g, TwistData.parse(g, "u2")))
    plana = len(twisted_orbits(g, TwistData.parse(g, "id")))
    if (torcida, plana) != (1, 5):
        return False, {'torcida': torcida, 'sin_twist': plana}
    return True, None


def chequeo_simetrico() -> tuple[bool, dict | None]:
    """S3 sin twist en n = 1: las órbitas son las clases de conjugación"""
    g = symmetric_group(3)
    orbitas = len(twisted_orbits(g, TwistData.parse(g, "id")))
    if orbitas != 3:
        return False, {'orbitas': orbitas, 'esperado': 3}
    return True, None
