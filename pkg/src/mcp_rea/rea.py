"""Álgebras de reflexión torcidas a primer orden en ħ y su comparación con el corchete de Poisson"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from sympy.polys.rings import PolyElement

from .lie import ClassicalRMatrix, DynkinAut, LieAlgebraA, diagram_automorphism
from .pattern import DecoratedPattern, PairClass, edge_class
from .poisson import (
    FieldFlavor,
    PoissonBivector,
    Slot,
    TensorTerm,
    bracket,
    coordinate_bracket,
    equivariance_defect,
    verify_labels,
)
from .ring import CoordinateRing, qq

MEDIO = Fraction(1, 2)


class SlotKind(str, Enum):
    """Copia dual (actúa por x^R) o primal (actúa por −κ_* x^L) de un generador"""

    DUAL = "dual"
    PRIMAL = "primal"


_SABOR = {SlotKind.DUAL: (FieldFlavor.R, 1), SlotKind.PRIMAL: (FieldFlavor.L, -1)}


@dataclass(frozen=True)
class ReaSlot:
    """Slot de un argumento: cuál (0 = primero, 1 = segundo), arista y copia"""

    argument: int
    edge: int
    kind: SlotKind

    @property
    def flavor(self) -> FieldFlavor:
        return _SABOR[self.kind][0]

    @property
    def sign(self) -> int:
        return _SABOR[self.kind][1]

    def __str__(self):
        return f"{'fg'[self.argument]}{self.edge + 1}.{self.kind.value}"


@dataclass(frozen=True)
class SlotTerm:
    """c·Σ r^{ab} (x_a en first)(x_b en second)"""

    coefficient: Fraction
    first: ReaSlot
    second: ReaSlot

    def __str__(self):
        signo = "+" if self.coefficient > 0 else "-"
        return f"{signo}{abs(self.coefficient)} r^{{{self.first},{self.second}}}"


def slot_terms_to_tensor_terms(
    terminos: Iterable[SlotTerm], r: ClassicalRMatrix
) -> list[TensorTerm]:
    """Traduce términos de slots a términos tensoriales sobre (f, g)"""
    salida = []
    for t in terminos:
        c = t.coefficient * t.first.sign * t.second.sign
        if t.first.argument == t.second.argument:
            raise ValueError(f"el término {t} actúa dos veces sobre el mismo argumento")
        if t.first.argument == 0:
            salida.append(TensorTerm(
                r.r, Slot(t.first.edge, t.first.flavor), Slot(t.second.edge, t.second.flavor), c
            ))
        else:
            salida.append(TensorTerm(
                r.r.transpose(),
                Slot(t.second.edge, t.second.flavor),
                Slot(t.first.edge, t.first.flavor),
                c,
            ))
    return salida


# === MISMA ARISTA ===

def six_slot_operator(edge: int = 0) -> list[SlotTerm]:
    """
    Operador conmutador de un álgebra de reflexión torcida:
    r^{3,2} + r^{1,2} − r^{4,1} − r^{2,1} + r^{2,1} − r^{4,3}
    con 1, 2 las copias duales de f, g y 3, 4 sus copias primales.
    """
    s = {
        1: ReaSlot(0, edge, SlotKind.DUAL),
        2: ReaSlot(1, edge, SlotKind.DUAL),
        3: ReaSlot(0, edge, SlotKind.PRIMAL),
        4: ReaSlot(1, edge, SlotKind.PRIMAL),
    }
    return [
        SlotTerm(Fraction(1), s[3], s[2]),
        SlotTerm(Fraction(1), s[1], s[2]),
        SlotTerm(Fraction(-1), s[4], s[1]),
        SlotTerm(Fraction(-1), s[2], s[1]),
        SlotTerm(Fraction(1), s[2], s[1]),
        SlotTerm(Fraction(-1), s[4], s[3]),
    ]


def _operador(
    anillo: CoordinateRing,
    algebra: LieAlgebraA,
    kappas: Sequence[DynkinAut],
    terminos: Sequence[TensorTerm],
    nombre: str,
) -> PoissonBivector:
    return PoissonBivector(anillo, algebra, tuple(kappas), tuple(terminos), nombre)


def same_edge_product_order1(
    g: LieAlgebraA,
    r: ClassicalRMatrix,
    kappa: DynkinAut,
    ij: tuple[int, int],
    kl: tuple[int, int],
) -> PolyElement:
    """
    Término de orden ħ de a_ij·a_kl en una sola álgebra torcida (orden simétrico).

    Args:
        g: Álgebra sl_n
        r: r-matriz clásica
        kappa: Etiqueta de la arista
        ij: Índices (desde 0) del primer generador
        kl: Índices (desde 0) del segundo generador

    Returns:
        Polinomio de grado 2 en las coordenadas de una arista
    """
    anillo = CoordinateRing(1, g.n)
    operador = _operador(
        anillo, g, [kappa], slot_terms_to_tensor_terms(six_slot_operator(0), r), "six-slot"
    )
    valor = coordinate_bracket(operador, anillo.indice(0, *ij), anillo.indice(0, *kl))
    return valor.mul_ground(qq(MEDIO))


# === ARISTAS DISTINTAS ===

def _slots_cruce(decorado: DecoratedPattern, alpha: int, beta: int) -> dict[int, tuple[ReaSlot, int]]:
    """1, 2: copias dual/primal de α (argumento f); 3, 4: de β (argumento g); con su posición"""
    patron = decorado.pattern
    return {
        1: (ReaSlot(0, alpha, SlotKind.DUAL), patron.start[alpha]),
        2: (ReaSlot(0, alpha, SlotKind.PRIMAL), patron.end[alpha]),
        3: (ReaSlot(1, beta, SlotKind.DUAL), patron.start[beta]),
        4: (ReaSlot(1, beta, SlotKind.PRIMAL), patron.end[beta]),
    }


# Término de orden ħ de a^(β)·a^(α) en orden estándar, por clase:
# (c, primero, segundo) con slots 1, 2 de α y 3, 4 de β
_CRUCES = {
    PairClass.POS_UNLINKED: ((1, 3, 1), (1, 4, 1), (1, 3, 2), (1, 4, 2)),
    PairClass.POS_LINKED: ((1, 3, 1), (1, 4, 1), (-1, 2, 3), (1, 4, 2)),
    PairClass.POS_NESTED: ((1, 3, 1), (1, 4, 1), (-1, 2, 3), (-1, 2, 4)),
    PairClass.NEG_UNLINKED: ((-1, 1, 3), (-1, 1, 4), (-1, 2, 3), (-1, 2, 4)),
    PairClass.NEG_LINKED: ((-1, 1, 3), (1, 4, 1), (-1, 2, 3), (-1, 2, 4)),
    PairClass.NEG_NESTED: ((-1, 1, 3), (1, 4, 1), (-1, 2, 3), (1, 4, 2)),
}


def crossing_morphism(decorado: DecoratedPattern, alpha: int, beta: int) -> list[SlotTerm]:
    """Cruce a primer orden según la forma cerrada de la clase del par α < β"""
    slots = _slots_cruce(decorado, alpha, beta)
    clase = edge_class(decorado.pattern, alpha, beta)
    return [
        SlotTerm(Fraction(c), slots[a][0], slots[b][0]) for c, a, b in _CRUCES[clase]
    ]


def _burbuja(orden: list[int], posicion: dict[int, int]) -> list[tuple[int, int]]:
    """Transposiciones (izquierda, derecha) que ordenan la lista por posición"""
    lista = list(orden)
    cruces = []
    cambiado = True
    while cambiado:
        cambiado = False
        for k in range(len(lista) - 1):
            if posicion[lista[k]] > posicion[lista[k + 1]]:
                cruces.append((lista[k], lista[k + 1]))
                lista[k], lista[k + 1] = lista[k + 1], lista[k]
                cambiado = True
    return cruces


def shuffle_crossing(decorado: DecoratedPattern, alpha: int, beta: int) -> list[SlotTerm]:
    """
    El mismo cruce construido con trenzados de barajado: J_{β,α} menos J_{α,β},
    donde cada transposición (izquierda, derecha) aporta +r^{izquierda,derecha}.
    """
    slots = _slots_cruce(decorado, alpha, beta)
    posicion = {k: p for k, (_, p) in slots.items()}
    terminos: dict[tuple[int, int], Fraction] = {}
    for signo, orden in ((1, [3, 4, 1, 2]), (-1, [1, 2, 3, 4])):
        for izquierda, derecha in _burbuja(orden, posicion):
            clave = (izquierda, derecha)
            terminos[clave] = terminos.get(clave, Fraction(0)) + signo
    return [
        SlotTerm(c, slots[a][0], slots[b][0])
        for (a, b), c in sorted(terminos.items())
        if c != 0
    ]


def crossing_product_order1(
    decorado: DecoratedPattern,
    r: ClassicalRMatrix,
    alpha: int,
    beta: int,
    ij: tuple[int, int],
    kl: tuple[int, int],
    untwisted: bool = False,
) -> PolyElement:
    """
    Término de orden ħ de a^(β)_kl·a^(α)_ij reescrito en orden estándar.

    Args:
        decorado: Patrón decorado
        r: r-matriz clásica
        alpha: Arista del primer generador (desde 0), alpha < beta
        beta: Arista del segundo generador
        ij: Índices del generador de α
        kl: Índices del generador de β
        untwisted: Ignorar las etiquetas

    Returns:
        Polinomio de grado 2 en las coordenadas de ambas aristas
    """
    g = r.algebra
    anillo = CoordinateRing(decorado.n, g.n)
    operador = _operador(
        anillo,
        g,
        _kappas(decorado, g, untwisted),
        slot_terms_to_tensor_terms(crossing_morphism(decorado, alpha, beta), r),
        "crossing",
    )
    valor = coordinate_bracket(operador, anillo.indice(alpha, *ij), anillo.indice(beta, *kl))
    return valor.mul_ground(qq(MEDIO))


# === TABLA DE DEFORMACIÓN ===

def _kappas(decorado: DecoratedPattern, g: LieAlgebraA, untwisted: bool) -> tuple[DynkinAut, ...]:
    etiquetas = ["id"] * decorado.n if untwisted else decorado.labels
    return tuple(diagram_automorphism(g, e) for e in etiquetas)


def beta_operator_terms(decorado: DecoratedPattern, r: ClassicalRMatrix) -> list[TensorTerm]:
    """
    β como biderivación: ½ del operador de seis slots por arista y, para α < β,
    −½X sobre (f_α, g_β) y +½X sobre (g_β, f_α).
    """
    terminos = []
    for alpha in range(decorado.n):
        for t in slot_terms_to_tensor_terms(six_slot_operator(alpha), r):
            terminos.append(t.scaled(MEDIO))
    for alpha in range(decorado.n):
        for beta in range(alpha + 1, decorado.n):
            cruce = slot_terms_to_tensor_terms(crossing_morphism(decorado, alpha, beta), r)
            for t in cruce:
                terminos.append(t.scaled(-MEDIO))
                terminos.append(t.flipped().scaled(MEDIO))
    return terminos


@dataclass(frozen=True, eq=False)
class DeformationTable:
    """β en todos los pares de generadores y el operador bidiferencial que la extiende"""

    pattern: DecoratedPattern
    r: ClassicalRMatrix
    operator: PoissonBivector
    beta: dict[tuple[int, int], PolyElement] = field(repr=False)

    @property
    def ring(self) -> CoordinateRing:
        return self.operator.ring

    def entry(self, u: int, v: int) -> PolyElement:
        return self.beta[(u, v)]

    def extend(self, f: PolyElement, g: PolyElement) -> PolyElement:
        """β(f, g) para polinomios, extendida como biderivación"""
        return bracket(self.operator, f, g)

    def corrupted(self, u: int, v: int, delta: PolyElement) -> "DeformationTable":
        """Copia con la entrada (u, v) alterada; el operador no cambia"""
        beta = dict(self.beta)
        beta[(u, v)] = beta[(u, v)] + delta
        return DeformationTable(self.pattern, self.r, self.operator, beta)


def build_deformation_table(
    decorado: DecoratedPattern,
    g: LieAlgebraA,
    r: ClassicalRMatrix,
    untwisted: bool = False,
    check_invariance: bool = True,
) -> DeformationTable:
    """
    Tabla completa de β sobre todos los pares ordenados de generadores.

    Args:
        decorado: Patrón decorado
        g: Álgebra sl_n
        r: r-matriz clásica invariante bajo las etiquetas
        untwisted: Sustituir todas las etiquetas por id
        check_invariance: Exigir (κ⊗κ)r = r para cada etiqueta usada

    Returns:
        DeformationTable con (n·dim V²)² entradas
    """
    kappas = _kappas(decorado, g, untwisted)
    if check_invariance:
        verify_labels(r, kappas)
    anillo = CoordinateRing(decorado.n, g.n)
    operador = _operador(anillo, g, kappas, beta_operator_terms(decorado, r), "beta")
    total = anillo.ngens
    beta = {
        (u, v): coordinate_bracket(operador, u, v) for u in range(total) for v in range(total)
    }
    return DeformationTable(decorado, r, operador, beta)


# === ELEMENTOS CON JET ===

@dataclass(frozen=True, eq=False)
class JetElement:
    """f0 + ħ·f1 con ħ² = 0"""

    f0: PolyElement
    f1: PolyElement

    @classmethod
    def classical(cls, f0: PolyElement) -> "JetElement":
        return cls(f0, f0.ring.zero)

    def mul(self, otro: "JetElement", tabla: DeformationTable) -> "JetElement":
        """(f0 + ħf1)(g0 + ħg1) = f0g0 + ħ(f0g1 + f1g0 + β(f0, g0))"""
        return JetElement(
            self.f0 * otro.f0,
            self.f0 * otro.f1 + self.f1 * otro.f0 + tabla.extend(self.f0, otro.f0),
        )

    def __eq__(self, otro) -> bool:
        return isinstance(otro, JetElement) and self.f0 == otro.f0 and self.f1 == otro.f1

    __hash__ = None


def commutator_over_hbar(tabla: DeformationTable, f: JetElement, g: JetElement) -> PolyElement:
    """[f, g]/ħ mód ħ"""
    return tabla.extend(f.f0, g.f0) - tabla.extend(g.f0, f.f0)


def generator_commutator(tabla: DeformationTable, u: int, v: int) -> PolyElement:
    return tabla.entry(u, v) - tabla.entry(v, u)


def check_quantisation(
    tabla: DeformationTable, pi: PoissonBivector, pairs: Iterable[tuple[int, int]] | None = None
) -> tuple[bool, dict | None, int]:
    """
    Compara el conmutador de generadores con el corchete de Poisson.

    Args:
        tabla: Tabla de deformación
        pi: Bivector del mismo patrón
        pairs: Pares de generadores (por defecto todos)

    Returns:
        (coinciden, primer contraejemplo, pares comparados)
    """
    anillo = tabla.ring
    total = anillo.ngens
    pares = list(pairs) if pairs is not None else [
        (u, v) for u in range(total) for v in range(total)
    ]
    for cuenta, (u, v) in enumerate(pares, start=1):
        diferencia = generator_commutator(tabla, u, v) - coordinate_bracket(pi, u, v)
        if diferencia:
            return False, {
                'par': [anillo.nombres[u], anillo.nombres[v]],
                'diferencia': diferencia,
                'coincidentes': cuenta - 1,
            }, cuenta
    return True, None, len(pares)


def all_generator_triples(anillo: CoordinateRing) -> list[tuple[int, int, int]]:
    total = anillo.ngens
    return [(a, b, c) for a in range(total) for b in range(total) for c in range(total)]


def check_associativity_order1(
    tabla: DeformationTable, triples: Iterable[tuple[int, int, int]] | None = None
) -> tuple[bool, dict | None]:
    """
    β(fg, h) + β(f, g)·h = β(f, gh) + f·β(g, h) en ternas de generadores.

    β sobre pares de generadores sale de la tabla; sobre productos, del operador.
    """
    anillo = tabla.ring
    gens = anillo.gens
    ternas = list(triples) if triples is not None else all_generator_triples(anillo)
    for a, b, c in ternas:
        f, g, h = gens[a], gens[b], gens[c]
        izquierda = tabla.extend(f * g, h) + tabla.entry(a, b) * h
        derecha = tabla.extend(f, g * h) + f * tabla.entry(b, c)
        if izquierda != derecha:
            return False, {
                'terna': [anillo.nombres[a], anillo.nombres[b], anillo.nombres[c]],
                'diferencia': izquierda - derecha,
            }
    return True, None


def check_equivariance_order1(
    tabla: DeformationTable, pairs: Iterable[tuple[int, int]] | None = None
) -> tuple[bool, dict | None]:
    """
    δ_x β(u,v) − β(δ_x u, v) − β(u, δ_x v) + ½([x⊗1 + 1⊗x, r])^{δ,δ}(u, v) = 0
    para toda x de la base y todo par de generadores, también con el grupo
    reparametrizado por cada etiqueta.
    """
    anillo = tabla.ring
    total = anillo.ngens
    pares = list(pairs) if pairs is not None else [
        (u, v) for u in range(total) for v in range(total)
    ]
    contraejemplo = equivariance_defect(
        anillo, tabla.operator.algebra, tabla.operator.kappas,
        tabla.r.r.scale(MEDIO), tabla.entry, pares,
    )
    return contraejemplo is None, contraejemplo


def slot_terms_text(terminos: Sequence[SlotTerm]) -> str:
    return " ".join(str(t) for t in terminos)
