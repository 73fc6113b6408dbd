"""Herramientas de estructuras de Poisson: r-matrices, Jacobi, formas del bivector y equivariancia"""

from ..errors import ErrorRea
from ..informes import Trabajo, ejecutar_todos
from ..lie import (
    ClassicalRMatrix,
    build_sl,
    cartan_wedge_r_matrix,
    check_cybe,
    check_r_invariance,
    diagram_automorphism,
    dynkin_graph_aut_order,
    standard_r_matrix,
)
from ..pattern import DecoratedPattern, GluingPattern, parse_pattern
from ..poisson import (
    all_coordinate_triples,
    check_equivariance,
    check_forms_agree,
    check_jacobi,
    check_pattern_independence,
    fock_rosly_bivector,
    sample_triples,
)
from ..utils.entorno import nombre_algebra

CHEQUEOS = ("jacobi", "agree", "equivariance")

# Ternas exhaustivas mientras ngens³ no supere este valor
LIMITE_TERNAS = 512

# (tipo, rango) -> orden de Out(G)
TABLA_OUT = {
    ("A", 1): 1,
    ("A", 2): 2,
    ("A", 5): 2,
    ("D", 4): 6,
    ("D", 5): 2,
    ("D", 7): 2,
    ("E", 6): 2,
    ("E", 7): 1,
    ("E", 8): 1,
}

# Par de patrones con aristas intercambiadas y su correspondencia
INDEPENDENCIA = ((1, 3, 2, 4), (2, 4, 1, 3), (1, 0))


def _preparar(texto: str, n: int) -> tuple[DecoratedPattern, ClassicalRMatrix]:
    decorado = parse_pattern(texto)
    return decorado, standard_r_matrix(build_sl(n))


def objetivo(n: int, decorado: DecoratedPattern) -> str:
    return f"sl{n} {decorado.descriptor()}"


def _entradas(tensor, limite: int = 5) -> list:
    return [[list(indice), valor] for indice, valor in tensor.nonzero()[:limite]]


# === R-MATRIZ Y DIAGRAMAS ===

def chequeo_cybe(n: int) -> tuple[bool, dict | None]:
    residuo = check_cybe(standard_r_matrix(build_sl(n)))
    if residuo.is_zero():
        return True, None
    return False, {'entradas': _entradas(residuo)}


def chequeo_flip(n: int) -> tuple[bool, dict | None]:
    g = build_sl(n)
    residuo = check_r_invariance(standard_r_matrix(g), diagram_automorphism(g, "flip"))
    if residuo.is_zero():
        return True, None
    return False, {'entradas': _entradas(residuo)}


def chequeo_tangente(n: int) -> tuple[bool, dict | None]:
    """El diferencial de Θ en la identidad coincide con el mapa del álgebra"""
    g = build_sl(n)
    kappa = diagram_automorphism(g, "flip")
    for etiqueta, b in zip(g.labels, g.basis):
        if not (kappa.tangent_map(b) == kappa.apply(b)).all():
            return False, {'x': etiqueta}
    return True, None


def chequeo_out() -> tuple[bool, dict | None]:
    for (tipo, rango), esperado in TABLA_OUT.items():
        orden = dynkin_graph_aut_order(tipo, rango)
        if orden != esperado:
            return False, {'diagrama': f"{tipo}{rango}", 'orden': orden, 'esperado': esperado}
    return True, None


# === BIVECTOR ===

def chequeo_jacobi(
    texto: str, n: int, muestras: int, semilla: int
) -> tuple[bool, dict | None]:
    """Jacobiador nulo en todas las ternas de coordenadas o en una muestra"""
    decorado, r = _preparar(texto, n)
    pi = fock_rosly_bivector(decorado, r)
    anillo = pi.ring
    if anillo.ngens**3 <= LIMITE_TERNAS:
        ternas = all_coordinate_triples(anillo)
    else:
        ternas = sample_triples(anillo, muestras, semilla)
    for terna, residuo in check_jacobi(pi, ternas):
        if residuo:
            return False, {
                'terna': [anillo.nombres[k] for k in terna],
                'residuo': residuo,
            }
    return True, None


def chequeo_jacobi_control(n: int) -> tuple[bool, dict | None]:
    """Con r reemplazada por su parte simétrica el jacobiador debe dejar de anularse"""
    g = build_sl(n)
    simetrica = ClassicalRMatrix.from_tensor(g, standard_r_matrix(g).t)
    decorado = DecoratedPattern(GluingPattern((1,), (2,)), ("id",))
    pi = fock_rosly_bivector(decorado, simetrica)
    for terna in all_coordinate_triples(pi.ring):
        (_, residuo), = check_jacobi(pi, [terna])
        if residuo:
            return True, None
    return False, {'detalle': 'el jacobiador se anuló en todas las ternas'}


def chequeo_formas(texto: str, n: int) -> tuple[bool, dict | None]:
    decorado, r = _preparar(texto, n)
    return check_forms_agree(decorado, r)


def chequeo_equivariancia(texto: str, n: int) -> tuple[bool, dict | None]:
    decorado, r = _preparar(texto, n)
    return check_equivariance(fock_rosly_bivector(decorado, r), r)


def chequeo_equivariancia_control(n: int) -> tuple[bool, dict | None]:
    """Una r con parte simétrica no invariante debe romper la identidad de Poisson–Lie"""
    g = build_sl(n)
    r = standard_r_matrix(g).perturbed(g.index("E12"), g.index("E21"), 1)
    decorado = DecoratedPattern(GluingPattern((1,), (2,)), ("id",))
    cumple, _ = check_equivariance(fock_rosly_bivector(decorado, r), r)
    if cumple:
        return False, {'detalle': 'la identidad se cumplió con t no invariante'}
    return True, None


def chequeo_equivariancia_torcida_control(n: int) -> tuple[bool, dict | None]:
    """Con r no invariante bajo el flip la conjugación torcida deja de ser Poisson–Lie"""
    g = build_sl(n)
    r = cartan_wedge_r_matrix(g)
    decorado = DecoratedPattern(GluingPattern((1,), (2,)), ("flip",))
    cumple, contraejemplo = check_equivariance(
        fock_rosly_bivector(decorado, r, check_invariance=False), r
    )
    if cumple:
        return False, {'detalle': 'la identidad se cumplió con r no invariante bajo el flip'}
    if contraejemplo['accion'] != "flip":
        return False, {'detalle': 'falló la parametrización sin torcer', 'contraejemplo': contraejemplo}
    return True, None


def chequeo_independencia(n: int) -> tuple[bool, dict | None]:
    primero, segundo, correspondencia = INDEPENDENCIA
    etiquetas = ("id", "id")
    return check_pattern_independence(
        DecoratedPattern(GluingPattern.from_sequence(primero), etiquetas),
        DecoratedPattern(GluingPattern.from_sequence(segundo), etiquetas),
        correspondencia,
        standard_r_matrix(build_sl(n)),
    )


# === HERRAMIENTAS ===

def trabajos_poisson(config, texto: str, checks=None, n: int | None = None) -> list[Trabajo]:
    """
    Trabajos de verificación del bivector para un patrón.

    Args:
        config: Configuración de ejecución
        texto: Contenido del archivo de patrón
        checks: Subconjunto de 'jacobi', 'agree', 'equivariance' (por defecto todos)
        n: Tamaño de sl_n (por defecto el de la configuración)

    Returns:
        Lista de Trabajo lista para ejecutar_todos
    """
    n = n or nombre_algebra(config.algebra)
    decorado = parse_pattern(texto)
    seleccion = list(checks) if checks else list(CHEQUEOS)
    desconocidos = [c for c in seleccion if c not in CHEQUEOS]
    if desconocidos:
        raise ValueError(f"chequeos desconocidos: {', '.join(desconocidos)}")

    destino = objetivo(n, decorado)
    trabajos = []
    if "jacobi" in seleccion:
        trabajos.append(Trabajo(
            "jacobi", destino, chequeo_jacobi,
            (texto, n, config.muestras_jacobi, config.semilla),
        ))
    if "agree" in seleccion:
        trabajos.append(Trabajo("forms-agree", destino, chequeo_formas, (texto, n)))
    if "equivariance" in seleccion:
        trabajos.append(Trabajo("equivariance", destino, chequeo_equivariancia, (texto, n)))
    return trabajos


def verificar_poisson(
    config, texto: str, checks: str | None = None, algebra: str | None = None
) -> dict:
    """
    Corre los chequeos del bivector de Fock–Rosly torcido sobre un patrón.

    Args:
        config: Configuración de ejecución
        texto: Contenido del archivo de patrón
        checks: Lista separada por comas (jacobi, agree, equivariance)
        algebra: 'sl2', 'sl3', ...

    Returns:
        Reportes por chequeo y cantidad aprobada
    """
    try:
        n = nombre_algebra(algebra or config.algebra)
        seleccion = [c.strip() for c in checks.split(",") if c.strip()] if checks else None
        trabajos = trabajos_poisson(config, texto, seleccion, n)
    except (ErrorRea, ValueError) as e:
        return {'error': str(e)}

    reportes = ejecutar_todos(trabajos, config.trabajos)
    return {
        'total': len(reportes),
        'parametros': {'algebra': f"sl{n}", 'checks': seleccion or list(CHEQUEOS)},
        'aprobados': sum(1 for r in reportes if r.passed),
        'reportes': [r.como_dict() for r in reportes],
    }
