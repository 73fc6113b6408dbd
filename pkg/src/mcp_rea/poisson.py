"""Bivector de Fock–Rosly torcido en sus dos presentaciones y sus verificaciones exactas"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np
from sympy.polys.rings import PolyElement

from .errors import InvarianceError
from .lie import ClassicalRMatrix, DynkinAut, LieAlgebraA, check_r_invariance, diagram_automorphism
from .pattern import DecoratedPattern, PairClass, edge_class
from .ring import CoordinateRing, DenseTensor, as_rational, qq

MEDIO = Fraction(1, 2)


class FieldFlavor(str, Enum):
    """Campos invariantes: R a derecha, L(κ) a izquierda torcido, AD = R − L(κ)"""

    R = "R"
    L = "L"
    AD = "Ad"


# Descomposición de cada sabor en campos R y L
_COMPONENTES = {
    FieldFlavor.R: ((1, FieldFlavor.R),),
    FieldFlavor.L: ((1, FieldFlavor.L),),
    FieldFlavor.AD: ((1, FieldFlavor.R), (-1, FieldFlavor.L)),
}


@dataclass(frozen=True)
class Slot:
    edge: int
    flavor: FieldFlavor

    def __str__(self):
        return f"{self.flavor.value}{self.edge + 1}"


@dataclass(frozen=True, eq=False)
class TensorTerm:
    """c·Σ T^{ab} (x_a en slot_a) ⊗ (x_b en slot_b)"""

    tensor: DenseTensor
    slot_a: Slot
    slot_b: Slot
    coefficient: Fraction = Fraction(1)

    def flipped(self) -> "TensorTerm":
        """τ: intercambia patas y slots"""
        return TensorTerm(self.tensor.transpose(), self.slot_b, self.slot_a, self.coefficient)

    def scaled(self, c) -> "TensorTerm":
        return TensorTerm(self.tensor, self.slot_a, self.slot_b, self.coefficient * as_rational(c))

    @cached_property
    def entries(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return self.tensor.nonzero()


# === CAMPOS VECTORIALES ===

def _matriz_campo(x: np.ndarray, flavor: FieldFlavor, kappa: DynkinAut) -> np.ndarray:
    return x if flavor == FieldFlavor.R else kappa.apply(x)


def generator_images(
    anillo: CoordinateRing, x: np.ndarray, flavor: FieldFlavor, kappa: DynkinAut, edge: int
) -> dict[int, PolyElement]:
    """Imagen de cada g^{(edge)}_{ij} bajo el campo de x"""
    n = anillo.n
    terminos: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for signo, sabor in _COMPONENTES[flavor]:
        m = _matriz_campo(x, sabor, kappa)
        for i in range(n):
            for j in range(n):
                destino = terminos.setdefault(anillo.indice(edge, i, j), {})
                for p in range(n):
                    if sabor == FieldFlavor.R:
                        c, var = m[i, p], anillo.indice(edge, p, j)
                    else:
                        c, var = m[p, j], anillo.indice(edge, i, p)
                    if c != 0:
                        destino[(var,)] = destino.get((var,), Fraction(0)) + signo * c
    return {k: anillo.desde_terminos(t) for k, t in terminos.items()}


def vf_apply(
    x: np.ndarray,
    flavor: FieldFlavor,
    kappa: DynkinAut,
    p: PolyElement,
    edge: int,
    anillo: CoordinateRing,
) -> PolyElement:
    """
    Aplica el campo invariante de x sobre la arista indicada.

    Args:
        x: Elemento de sl_n como matriz
        flavor: R, L o AD
        kappa: Etiqueta de la arista
        p: Polinomio en las coordenadas
        edge: Arista (desde 0)
        anillo: Anillo de coordenadas de p

    Returns:
        Polinomio derivado; las demás aristas no se tocan
    """
    imagenes = generator_images(anillo, x, flavor, kappa, edge)
    return anillo.aplicar_derivacion(p, lambda k: imagenes.get(k, anillo.zero))


# === BIVECTORES ===

@dataclass(frozen=True, eq=False)
class PoissonBivector:
    """Suma formal de términos tensoriales con slots (arista, sabor)"""

    ring: CoordinateRing
    algebra: LieAlgebraA
    kappas: tuple[DynkinAut, ...]
    terms: tuple[TensorTerm, ...]
    name: str = "π"

    def slot_matrices(self, edge: int, flavor: FieldFlavor) -> np.ndarray:
        """Matrices (d, n, n) por las que actúa cada elemento de la base"""
        return np.stack([
            _matriz_campo(b, flavor, self.kappas[edge]) for b in self.algebra.basis
        ])

    @cached_property
    def _imagenes(self) -> dict[tuple[Slot, int], dict[int, PolyElement]]:
        return {}

    def field_images(self, slot: Slot, a: int) -> dict[int, PolyElement]:
        """Imágenes de los generadores bajo el campo de B_a en el slot"""
        clave = (slot, a)
        if clave not in self._imagenes:
            self._imagenes[clave] = generator_images(
                self.ring, self.algebra.basis[a], slot.flavor, self.kappas[slot.edge], slot.edge
            )
        return self._imagenes[clave]

    @cached_property
    def kernels(self) -> dict[tuple[int, int], list[tuple[FieldFlavor, FieldFlavor, np.ndarray]]]:
        """Núcleos K[i,p,k,q] = Σ A[a]_ip T^ab B[b]_kq agrupados por par de aristas"""
        nucleos: dict[tuple[int, int], list] = {}
        matrices = {}
        for term in self.terms:
            for s1, fa in _COMPONENTES[term.slot_a.flavor]:
                for s2, fb in _COMPONENTES[term.slot_b.flavor]:
                    clave_a = (term.slot_a.edge, fa)
                    clave_b = (term.slot_b.edge, fb)
                    for clave in (clave_a, clave_b):
                        if clave not in matrices:
                            matrices[clave] = self.slot_matrices(*clave)
                    interior = np.tensordot(term.tensor.data, matrices[clave_b], axes=([1], [0]))
                    k = np.tensordot(matrices[clave_a], interior, axes=([0], [0]))
                    k = k * (term.coefficient * s1 * s2)
                    nucleos.setdefault((term.slot_a.edge, term.slot_b.edge), []).append((fa, fb, k))
        return nucleos


def _half_edges(decorado: DecoratedPattern) -> list[tuple[int, int, Slot]]:
    """(posición, signo, slot) por semiarista; P(i) lleva −x^R y P(i') lleva κ_* x^L"""
    semi = []
    for i, (a, b) in enumerate(zip(decorado.pattern.start, decorado.pattern.end)):
        semi.append((a, -1, Slot(i, FieldFlavor.R)))
        semi.append((b, 1, Slot(i, FieldFlavor.L)))
    # el cilio ordena las semiaristas de la posición mayor a la menor
    return sorted(semi, key=lambda h: -h[0])


def edge_automorphisms(decorado: DecoratedPattern, g: LieAlgebraA) -> tuple[DynkinAut, ...]:
    return tuple(diagram_automorphism(g, etiqueta) for etiqueta in decorado.labels)


def verify_labels(r: ClassicalRMatrix, kappas: Sequence[DynkinAut]):
    for kappa in {k.kind: k for k in kappas}.values():
        if not check_r_invariance(r, kappa).is_zero():
            raise InvarianceError(f"(κ⊗κ)r ≠ r para la etiqueta {kappa.kind}")


def fock_rosly_bivector(
    decorado: DecoratedPattern, r: ClassicalRMatrix, check_invariance: bool = True
) -> PoissonBivector:
    """
    Bivector por semiaristas: Σ_{h≺h'} r∧ + ½ Σ_h r∧.

    Args:
        decorado: Patrón decorado
        r: r-matriz clásica
        check_invariance: Exigir (κ⊗κ)r = r para cada etiqueta usada

    Returns:
        PoissonBivector con slots R/L por arista
    """
    g = r.algebra
    kappas = edge_automorphisms(decorado, g)
    if check_invariance:
        verify_labels(r, kappas)

    rt = r.r.transpose()
    terminos = []
    semi = _half_edges(decorado)
    for _, _, slot in semi:
        terminos.append(TensorTerm(r.r, slot, slot, MEDIO))
        terminos.append(TensorTerm(rt, slot, slot, -MEDIO))
    for a in range(len(semi)):
        for b in range(a + 1, len(semi)):
            _, s1, slot1 = semi[a]
            _, s2, slot2 = semi[b]
            terminos.append(TensorTerm(r.r, slot1, slot2, Fraction(s1 * s2)))
            terminos.append(TensorTerm(rt, slot2, slot1, Fraction(-s1 * s2)))

    return PoissonBivector(
        ring=CoordinateRing(decorado.n, g.n),
        algebra=g,
        kappas=kappas,
        terms=tuple(terminos),
        name="fock-rosly",
    )


def sts_edge_terms(r: ClassicalRMatrix, edge: int) -> list[TensorTerm]:
    """π_STS^κ = ω^{Ad,Ad} + t^{R,L} − t^{L,R} sobre una arista"""
    ad = Slot(edge, FieldFlavor.AD)
    derecha = Slot(edge, FieldFlavor.R)
    izquierda = Slot(edge, FieldFlavor.L)
    return [
        TensorTerm(r.omega, ad, ad),
        TensorTerm(r.t, derecha, izquierda),
        TensorTerm(r.t, izquierda, derecha, Fraction(-1)),
    ]


def pair_terms(clase: PairClass, r: ClassicalRMatrix, alpha: int, beta: int) -> list[TensorTerm]:
    """π_{α,β} según la clase del par α < β"""
    ad_a, ad_b = Slot(alpha, FieldFlavor.AD), Slot(beta, FieldFlavor.AD)
    l_a, l_b = Slot(alpha, FieldFlavor.L), Slot(beta, FieldFlavor.L)
    r_a, r_b = Slot(alpha, FieldFlavor.R), Slot(beta, FieldFlavor.R)

    if clase in (PairClass.POS_UNLINKED, PairClass.POS_LINKED, PairClass.POS_NESTED):
        terminos = [TensorTerm(r.r.transpose(), ad_a, ad_b, Fraction(-1))]
        if clase != PairClass.POS_UNLINKED:
            terminos.append(TensorTerm(r.t, l_a, r_b, Fraction(-2)))
        if clase == PairClass.POS_NESTED:
            terminos.append(TensorTerm(r.t, l_a, l_b, Fraction(2)))
        return terminos

    terminos = [TensorTerm(r.r, ad_a, ad_b, Fraction(1))]
    if clase != PairClass.NEG_UNLINKED:
        terminos.append(TensorTerm(r.t, r_a, l_b, Fraction(2)))
    if clase == PairClass.NEG_NESTED:
        terminos.append(TensorTerm(r.t, l_a, l_b, Fraction(-2)))
    return terminos


def sts_case_bivector(
    decorado: DecoratedPattern, r: ClassicalRMatrix, check_invariance: bool = True
) -> PoissonBivector:
    """Σ_α π_STS^{κ_α} + Σ_{α<β} (π_{α,β} − τ(π_{α,β}))"""
    g = r.algebra
    kappas = edge_automorphisms(decorado, g)
    if check_invariance:
        verify_labels(r, kappas)

    terminos = []
    for alpha in range(decorado.n):
        terminos.extend(sts_edge_terms(r, alpha))
    for alpha in range(decorado.n):
        for beta in range(alpha + 1, decorado.n):
            clase = edge_class(decorado.pattern, alpha, beta)
            for term in pair_terms(clase, r, alpha, beta):
                terminos.append(term)
                terminos.append(term.flipped().scaled(-1))

    return PoissonBivector(
        ring=CoordinateRing(decorado.n, g.n),
        algebra=g,
        kappas=kappas,
        terms=tuple(terminos),
        name="sts",
    )


# === CORCHETES ===

def bracket(pi: PoissonBivector, f: PolyElement, g: PolyElement) -> PolyElement:
    """
    Extensión como biderivación: Σ c·T^{ab}·F_a(f)·G_b(g).

    Args:
        pi: Bivector
        f: Primer argumento
        g: Segundo argumento

    Returns:
        {f, g} como polinomio exacto
    """
    anillo = pi.ring
    total = anillo.zero
    if not f or not g:
        return total
    derivadas = (
        {k: f.diff(anillo.gens[k]) for k in anillo.variables_de(f)},
        {k: g.diff(anillo.gens[k]) for k in anillo.variables_de(g)},
    )
    cache: dict[tuple, PolyElement] = {}

    def campo(cual: int, slot: Slot, a: int) -> PolyElement:
        clave = (cual, slot, a)
        if clave not in cache:
            imagenes = pi.field_images(slot, a)
            valor = anillo.zero
            for k, d in derivadas[cual].items():
                img = imagenes.get(k)
                if img:
                    valor += d * img
            cache[clave] = valor
        return cache[clave]

    for term in pi.terms:
        for (a, b), coef in term.entries:
            fa = campo(0, term.slot_a, a)
            if not fa:
                continue
            gb = campo(1, term.slot_b, b)
            if gb:
                total += (fa * gb).mul_ground(qq(coef * term.coefficient))
    return total


def coordinate_bracket(pi: PoissonBivector, u: int, v: int) -> PolyElement:
    """{g_u, g_v} para dos variables de coordenadas, vía los núcleos del bivector"""
    anillo = pi.ring
    n = anillo.n
    alpha, i, j = anillo.coordenada(u)
    beta, k, l = anillo.coordenada(v)
    terminos: dict[tuple[int, ...], Fraction] = {}
    for fa, fb, nucleo in pi.kernels.get((alpha, beta), []):
        for p in range(n):
            if fa == FieldFlavor.R:
                bloque, var1 = nucleo[i, p], anillo.indice(alpha, p, j)
            else:
                bloque, var1 = nucleo[p, j], anillo.indice(alpha, i, p)
            for q in range(n):
                if fb == FieldFlavor.R:
                    c, var2 = bloque[k, q], anillo.indice(beta, q, l)
                else:
                    c, var2 = bloque[q, l], anillo.indice(beta, k, q)
                if c != 0:
                    clave = tuple(sorted((var1, var2)))
                    terminos[clave] = terminos.get(clave, Fraction(0)) + c
    return anillo.desde_terminos(terminos)


def coordinate_brackets(pi: PoissonBivector) -> dict[tuple[int, int], PolyElement]:
    """Tabla completa {g_u, g_v} sobre todos los pares ordenados"""
    total = pi.ring.ngens
    return {(u, v): coordinate_bracket(pi, u, v) for u in range(total) for v in range(total)}


def linear_coefficients(anillo: CoordinateRing, p: PolyElement) -> dict[int, Fraction]:
    """Coeficientes de un polinomio lineal homogéneo"""
    salida = {}
    for monom, coef in p.terms():
        (k,) = [idx for idx, e in enumerate(monom) if e]
        salida[k] = as_rational(coef)
    return salida


# === VERIFICACIONES ===

def all_coordinate_triples(anillo: CoordinateRing) -> list[tuple[int, int, int]]:
    total = anillo.ngens
    return [(a, b, c) for a in range(total) for b in range(total) for c in range(total)]


def sample_triples(
    anillo: CoordinateRing, cantidad: int, semilla: int
) -> list[tuple[int, int, int]]:
    """Ternas de variables muestreadas con numpy.random.default_rng"""
    rng = np.random.default_rng(semilla)
    elegidas = rng.integers(0, anillo.ngens, size=(cantidad, 3))
    return [tuple(int(x) for x in fila) for fila in elegidas]


def check_jacobi(
    pi: PoissonBivector, triples: Iterable[tuple[int, int, int]]
) -> list[tuple[tuple[int, int, int], PolyElement]]:
    """
    Jacobiador {f,{g,h}} + {g,{h,f}} + {h,{f,g}} por terna de variables.

    Args:
        pi: Bivector
        triples: Ternas de índices de variables

    Returns:
        Lista (terna, residuo) en el orden recibido
    """
    anillo = pi.ring
    gens = anillo.gens
    internos: dict[tuple[int, int], PolyElement] = {}

    def interno(a: int, b: int) -> PolyElement:
        if (a, b) not in internos:
            internos[(a, b)] = coordinate_bracket(pi, a, b)
        return internos[(a, b)]

    residuos = []
    for a, b, c in triples:
        residuo = (
            bracket(pi, gens[a], interno(b, c))
            + bracket(pi, gens[b], interno(c, a))
            + bracket(pi, gens[c], interno(a, b))
        )
        residuos.append(((a, b, c), residuo))
    return residuos


def forms_difference(
    primero: PoissonBivector, segundo: PoissonBivector
) -> tuple[bool, dict | None]:
    """Compara dos bivectores en todos los pares de coordenadas"""
    anillo = primero.ring
    for u in range(anillo.ngens):
        for v in range(u, anillo.ngens):
            diferencia = coordinate_bracket(primero, u, v) - coordinate_bracket(segundo, u, v)
            if diferencia:
                return False, {
                    'par': [anillo.nombres[u], anillo.nombres[v]],
                    'diferencia': diferencia,
                }
    return True, None


def check_forms_agree(decorado: DecoratedPattern, r: ClassicalRMatrix) -> tuple[bool, dict | None]:
    """Presentación por semiaristas ≡ presentación por casos en todos los pares"""
    return forms_difference(fock_rosly_bivector(decorado, r), sts_case_bivector(decorado, r))


def conjugation_images(
    anillo: CoordinateRing, x: np.ndarray, kappas: Sequence[DynkinAut]
) -> dict[int, PolyElement]:
    """δ_x en cada generador: g^{(α)} ↦ x·g^{(α)} − g^{(α)}·κ_α(x)"""
    imagenes = {}
    for edge, kappa in enumerate(kappas):
        imagenes.update(generator_images(anillo, x, FieldFlavor.AD, kappa, edge))
    return imagenes


def cobracket_pair(
    anillo: CoordinateRing,
    campos: Sequence[dict[int, PolyElement]],
    cobracket: Sequence[tuple[tuple[int, ...], Fraction]],
    u: int,
    v: int,
) -> PolyElement:
    """([x⊗1 + 1⊗x, r])^{δ,δ}(g_u, g_v) a partir de las entradas no nulas del cobracket"""
    total = anillo.zero
    for (a, b), c in cobracket:
        izquierda, derecha = campos[a][u], campos[b][v]
        if izquierda and derecha:
            total += (izquierda * derecha).mul_ground(qq(c))
    return total


def unit_coords(algebra: LieAlgebraA, a: int) -> list[Fraction]:
    return [Fraction(1) if k == a else Fraction(0) for k in range(algebra.dim)]


def acting_automorphisms(algebra: LieAlgebraA, kappas: Sequence[DynkinAut]) -> list[DynkinAut]:
    """Parametrizaciones del grupo que actúa: la identidad y cada etiqueta no trivial usada"""
    acciones = {"id": diagram_automorphism(algebra, "id")}
    for kappa in kappas:
        acciones.setdefault(kappa.kind, kappa)
    return list(acciones.values())


def equivariance_defect(
    anillo: CoordinateRing,
    algebra: LieAlgebraA,
    kappas: Sequence[DynkinAut],
    cobracket_tensor: DenseTensor,
    valor: Callable[[int, int], PolyElement],
    pares: Sequence[tuple[int, int]],
) -> dict | None:
    """
    Primer par donde no se anula
    δ_{φx}V(u,v) − V(δ_{φx}u, v) − V(u, δ_{φx}v) + (δ∘φ ⊗ δ∘φ)([x⊗1 + 1⊗x, c])(u, v).

    φ recorre acting_automorphisms; con φ = κ la identidad exige que (κ⊗κ)c − c sea ad-invariante.

    Args:
        anillo: Anillo de coordenadas
        algebra: Álgebra sl_n
        kappas: Etiquetas por arista
        cobracket_tensor: Tensor c cuyo ad da el cobracket
        valor: V sobre pares de generadores (corchete o β)
        pares: Pares de generadores a revisar

    Returns:
        Contraejemplo o None
    """
    for phi in acting_automorphisms(algebra, kappas):
        campos = [conjugation_images(anillo, phi.apply(b), kappas) for b in algebra.basis]
        for a in range(algebra.dim):
            imagenes = campos[a]
            cobracket = algebra.ad_tensor(unit_coords(algebra, a), cobracket_tensor).nonzero()
            for u, v in pares:
                residuo = anillo.aplicar_derivacion(
                    valor(u, v), lambda k: imagenes.get(k, anillo.zero)
                )
                for w, c in linear_coefficients(anillo, imagenes[u]).items():
                    residuo -= valor(w, v).mul_ground(qq(c))
                for w, c in linear_coefficients(anillo, imagenes[v]).items():
                    residuo -= valor(u, w).mul_ground(qq(c))
                residuo += cobracket_pair(anillo, campos, cobracket, u, v)
                if residuo:
                    return {
                        'x': algebra.labels[a],
                        'accion': phi.kind,
                        'par': [anillo.nombres[u], anillo.nombres[v]],
                        'residuo': residuo,
                    }
    return None


def check_equivariance(
    pi: PoissonBivector, r: ClassicalRMatrix, pairs: Iterable[tuple[int, int]] | None = None
) -> tuple[bool, dict | None]:
    """
    Identidad infinitesimal de Poisson–Lie para la conjugación torcida:
    δ_x{u,v} − {δ_x u, v} − {u, δ_x v} + ([x⊗1 + 1⊗x, r])^{δ,δ}(u, v) = 0.

    Se revisa también con el grupo que actúa reparametrizado por cada etiqueta κ,
    que es donde interviene (κ⊗κ)r = r.

    Args:
        pi: Bivector construido con r
        r: r-matriz usada en el cobracket
        pairs: Pares de variables (por defecto todos)

    Returns:
        (cumple, primer contraejemplo)
    """
    anillo = pi.ring
    total = anillo.ngens
    pares = list(pairs) if pairs is not None else [
        (u, v) for u in range(total) for v in range(total)
    ]
    tabla: dict[tuple[int, int], PolyElement] = {}

    def corchete(u: int, v: int) -> PolyElement:
        if (u, v) not in tabla:
            tabla[(u, v)] = coordinate_bracket(pi, u, v)
        return tabla[(u, v)]

    contraejemplo = equivariance_defect(anillo, pi.algebra, pi.kappas, r.r, corchete, pares)
    return contraejemplo is None, contraejemplo


# === INDEPENDENCIA DEL PATRÓN ===

def trace_function(anillo: CoordinateRing, word: Sequence[int]) -> PolyElement:
    """tr(g_{w1}·g_{w2}···) para una palabra de aristas con exponentes positivos"""
    if not word:
        return anillo.constante(anillo.n)
    producto = anillo.matriz(word[0])
    for edge in word[1:]:
        producto = producto.dot(anillo.matriz(edge))
    return sum(producto.diagonal(), anillo.zero)


def check_pattern_independence(
    primero: DecoratedPattern,
    segundo: DecoratedPattern,
    correspondence: Sequence[int],
    r: ClassicalRMatrix,
    words: Sequence[Sequence[int]] = ((0,), (1,), (0, 1)),
) -> tuple[bool, dict | None]:
    """
    Compara corchetes de funciones traza en dos patrones bajo una correspondencia de aristas.

    Args:
        primero: Patrón original
        segundo: Patrón alternativo
        correspondence: La arista α de primero corresponde a correspondence[α] de segundo
        r: r-matriz
        words: Palabras cuyas trazas se comparan

    Returns:
        (coinciden, primer contraejemplo)
    """
    pi1 = fock_rosly_bivector(primero, r)
    pi2 = fock_rosly_bivector(segundo, r)
    anillo = pi1.ring
    mapa = dict(enumerate(correspondence))
    funciones = [trace_function(anillo, w) for w in words]
    for a, f in enumerate(funciones):
        for b, h in enumerate(funciones):
            izquierda = anillo.renombrar_aristas(bracket(pi1, f, h), mapa)
            derecha = bracket(pi2, anillo.renombrar_aristas(f, mapa), anillo.renombrar_aristas(h, mapa))
            if izquierda != derecha:
                return False, {'palabras': [list(words[a]), list(words[b])],
                               'diferencia': izquierda - derecha}
    return True, None
