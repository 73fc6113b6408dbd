"""Datos de tipo A: base de sl_n, r-matriz clásica estándar y automorfismos del diagrama de Dynkin"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import AlgebraError
from .ring import (
    DenseTensor,
    Jet1,
    as_rational,
    jet_matrix,
    jet_matrix_inverse,
    jet_parts,
    rational_array,
    rational_identity,
    rational_inverse,
    rational_zeros,
)

MEDIO = Fraction(1, 2)


def matrix_unit(n: int, i: int, j: int) -> np.ndarray:
    """E_ij (índices desde 0) como matriz racional n×n"""
    m = rational_zeros((n, n))
    m[i, j] = Fraction(1)
    return m


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x.dot(y) - y.dot(x)


# === ÁLGEBRA sl_n ===

@dataclass(frozen=True, eq=False)
class LieAlgebraA:
    """
    sl_n en su representación definidora.

    La base es E_ij (i != j, orden lexicográfico) seguida de h_k = E_kk - E_{k+1,k+1}.
    """

    n: int
    basis: tuple[np.ndarray, ...]
    labels: tuple[str, ...]
    cartan_matrix: np.ndarray
    simple_root_vectors: tuple[tuple[int, int], ...]
    structure: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def name(self) -> str:
        return f"sl{self.n}"

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def coords(self, m: np.ndarray) -> np.ndarray:
        """Coordenadas de una matriz sin traza en la base"""
        n = self.n
        traza = sum((as_rational(m[i, i]) for i in range(n)), Fraction(0))
        if traza != 0:
            raise AlgebraError(f"la matriz tiene traza {traza}, no pertenece a sl{n}")
        salida = []
        for i in range(n):
            for j in range(n):
                if i != j:
                    salida.append(as_rational(m[i, j]))
        acumulado = Fraction(0)
        for k in range(n - 1):
            acumulado += as_rational(m[k, k])
            salida.append(acumulado)
        return rational_array(salida)

    def element(self, coords) -> np.ndarray:
        """Matriz Σ c_a B_a"""
        salida = rational_zeros((self.n, self.n))
        for c, b in zip(coords, self.basis):
            if c != 0:
                salida = salida + b * as_rational(c)
        return salida

    def e(self, i: int) -> np.ndarray:
        """Generador de Chevalley e_i (i desde 1)"""
        return self.basis[self.simple_root_vectors[i - 1][0]]

    def f(self, i: int) -> np.ndarray:
        return self.basis[self.simple_root_vectors[i - 1][1]]

    def h(self, i: int) -> np.ndarray:
        return self.basis[self.n * (self.n - 1) + i - 1]

    def ad_matrix(self, coords) -> np.ndarray:
        """M[a, c] = coeficiente de B_c en [x, B_a]"""
        v = rational_array(coords)
        return np.tensordot(v, self.structure, axes=([0], [0]))

    def ad_tensor(self, coords, t: DenseTensor) -> DenseTensor:
        """[x⊗1 + 1⊗x, T] para T en g⊗g"""
        m = self.ad_matrix(coords)
        return DenseTensor(m.T.dot(t.data) + t.data.dot(m))


@lru_cache(maxsize=None)
def build_sl(n: int) -> LieAlgebraA:
    """
    Construye sl_n con su matriz de Cartan y constantes de estructura.

    Args:
        n: Tamaño de la representación definidora (n >= 2)

    Returns:
        LieAlgebraA de dimensión n² - 1
    """
    if n < 2:
        raise AlgebraError(f"sl_n requiere n >= 2, se recibió n={n}")

    basis, labels = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                basis.append(matrix_unit(n, i, j))
                labels.append(f"E{i + 1}{j + 1}")
    for k in range(n - 1):
        basis.append(matrix_unit(n, k, k) - matrix_unit(n, k + 1, k + 1))
        labels.append(f"h{k + 1}")

    simples = tuple(
        (labels.index(f"E{i}{i + 1}"), labels.index(f"E{i + 1}{i}")) for i in range(1, n)
    )
    provisional = LieAlgebraA(
        n=n,
        basis=tuple(basis),
        labels=tuple(labels),
        cartan_matrix=np.zeros((n - 1, n - 1), dtype=int),
        simple_root_vectors=simples,
        structure=np.empty((0, 0, 0), dtype=object),
    )

    d = len(basis)
    estructura = rational_zeros((d, d, d))
    for a in range(d):
        for b in range(d):
            estructura[a, b, :] = provisional.coords(commutator(basis[a], basis[b]))

    # a_ij = α_j(h_i): [h_i, e_j] = a_ij e_j
    cartan = np.zeros((n - 1, n - 1), dtype=int)
    for i in range(n - 1):
        for j in range(n - 1):
            e_j = basis[simples[j][0]]
            imagen = commutator(basis[n * (n - 1) + i], e_j)
            cartan[i, j] = int(provisional.coords(imagen)[simples[j][0]])

    return LieAlgebraA(
        n=n,
        basis=tuple(basis),
        labels=tuple(labels),
        cartan_matrix=cartan,
        simple_root_vectors=simples,
        structure=estructura,
    )


# === R-MATRIZ CLÁSICA ===

@dataclass(frozen=True, eq=False)
class ClassicalRMatrix:
    """r = ω + t en g⊗g, con ω antisimétrica y t simétrica"""

    algebra: LieAlgebraA
    r: DenseTensor
    omega: DenseTensor
    t: DenseTensor

    @classmethod
    def from_tensor(cls, algebra: LieAlgebraA, r: DenseTensor) -> "ClassicalRMatrix":
        rt = r.transpose()
        return cls(
            algebra=algebra,
            r=r,
            omega=(r - rt).scale(MEDIO),
            t=(r + rt).scale(MEDIO),
        )

    def perturbed(self, a: int, b: int, delta=1) -> "ClassicalRMatrix":
        """Copia con el coeficiente (a, b) de r desplazado en delta"""
        datos = self.r.data.copy()
        datos[a, b] = datos[a, b] + as_rational(delta)
        return ClassicalRMatrix.from_tensor(self.algebra, DenseTensor(datos))


def standard_r_matrix(g: LieAlgebraA) -> ClassicalRMatrix:
    """
    r-matriz estándar de Drinfeld–Jimbo en la normalización
    Σ_{i<j} E_ij⊗E_ji + ½Σ E_ii⊗E_ii − (1/2n) Id⊗Id.
    """
    n = g.n
    r = rational_zeros((g.dim, g.dim))
    for i in range(n):
        for j in range(i + 1, n):
            r = r + np.multiply.outer(
                g.coords(matrix_unit(n, i, j)), g.coords(matrix_unit(n, j, i))
            )
    identidad = rational_identity(n) * Fraction(1, n)
    for i in range(n):
        d_i = g.coords(matrix_unit(n, i, i) - identidad)
        r = r + np.multiply.outer(d_i, d_i) * MEDIO
    return ClassicalRMatrix.from_tensor(g, DenseTensor(r))


def cartan_wedge_r_matrix(g: LieAlgebraA, delta=1) -> ClassicalRMatrix:
    """r estándar + δ(h1⊗h2 − h2⊗h1): sigue resolviendo CYBE pero el flip ya no la fija"""
    if g.n < 3:
        raise AlgebraError("se necesitan al menos dos generadores de Cartan")
    h1, h2 = g.index("h1"), g.index("h2")
    return standard_r_matrix(g).perturbed(h1, h2, delta).perturbed(h2, h1, -as_rational(delta))


def check_cybe(r: ClassicalRMatrix) -> DenseTensor:
    """[r12, r13] + [r12, r23] + [r13, r23] como tensor de rango 3"""
    f = r.algebra.structure
    m = r.r.data
    c12_13 = np.tensordot(np.tensordot(f, m, axes=([0], [0])), m, axes=([0], [0]))
    c12_23 = np.tensordot(np.tensordot(m, f, axes=([1], [0])), m, axes=([1], [0]))
    c13_23 = np.tensordot(np.tensordot(m, f, axes=([1], [0])), m, axes=([1], [1]))
    return DenseTensor(c12_13 + c12_23 + c13_23.transpose(0, 2, 1))


def check_ad_invariance(g: LieAlgebraA, t: DenseTensor) -> DenseTensor:
    """Residuo [B_y⊗1 + 1⊗B_y, t] apilado sobre la base (índice y primero)"""
    residuos = []
    for y in range(g.dim):
        coords = [Fraction(1) if k == y else Fraction(0) for k in range(g.dim)]
        residuos.append(g.ad_tensor(coords, t).data)
    return DenseTensor(np.stack(residuos))


# === AUTOMORFISMOS DE DIAGRAMA ===

def _conjugador_flip(n: int) -> np.ndarray:
    """S antidiagonal con S[k, n-1-k] = (-1)^k"""
    s = rational_zeros((n, n))
    for k in range(n):
        s[k, n - 1 - k] = Fraction((-1) ** k)
    return s


@dataclass(frozen=True, eq=False)
class DynkinAut:
    """
    Automorfismo de diagrama κ realizado en sl_n y en SL_n.

    Para κ = flip el mapa de grupo es Θ(g) = S·(gᵀ)⁻¹·S⁻¹ y su diferencial x ↦ −S·xᵀ·S⁻¹.
    """

    algebra: LieAlgebraA
    kind: str
    node_perm: tuple[int, ...]
    algebra_map: np.ndarray = field(repr=False)
    conjugator: np.ndarray | None = field(default=None, repr=False)

    @property
    def is_identity(self) -> bool:
        return self.kind == "id"

    def apply(self, x: np.ndarray) -> np.ndarray:
        """κ(x) para una matriz de sl_n"""
        if self.is_identity:
            return x
        s = self.conjugator
        return -(s.dot(x.T).dot(rational_inverse(s)))

    def apply_coords(self, coords) -> np.ndarray:
        return self.algebra_map.dot(rational_array(coords))

    def apply_tensor(self, t: DenseTensor) -> DenseTensor:
        """(κ⊗κ)(T)"""
        m = self.algebra_map
        return DenseTensor(m.dot(t.data).dot(m.T))

    def group_map(self, g: np.ndarray) -> np.ndarray:
        """Θ(g) para una matriz invertible (entradas Fraction o Jet1)"""
        if self.is_identity:
            return g
        s = self.conjugator
        inversa = jet_matrix_inverse(g.T) if _es_jet(g) else rational_inverse(g.T)
        return s.dot(inversa).dot(rational_inverse(s))

    def tangent_map(self, x: np.ndarray) -> np.ndarray:
        """d/dε Θ(1 + εx) en ε = 0, calculado con jets de primer orden"""
        n = self.algebra.n
        punto = jet_matrix(rational_identity(n), rational_array(x))
        _, derivada = jet_parts(self.group_map(punto))
        return derivada


def _es_jet(m: np.ndarray) -> bool:
    return any(isinstance(x, Jet1) for x in m.flat)


@lru_cache(maxsize=None)
def diagram_automorphism(g: LieAlgebraA, kind: str) -> DynkinAut:
    """
    Automorfismo de diagrama de sl_n.

    Args:
        g: Álgebra sl_n
        kind: 'id' o 'flip' (κ(i) = n - i)

    Returns:
        DynkinAut con su mapa en el álgebra y en el grupo
    """
    n = g.n
    if kind == "id":
        return DynkinAut(
            algebra=g,
            kind="id",
            node_perm=tuple(range(1, n)),
            algebra_map=rational_identity(g.dim),
        )
    if kind != "flip":
        raise AlgebraError(f"Automorfismo desconocido: {kind}")
    if n < 3:
        raise AlgebraError("sl2 no tiene automorfismos de diagrama no triviales")

    s = _conjugador_flip(n)
    s_inv = rational_inverse(s)
    columnas = [g.coords(-(s.dot(b.T).dot(s_inv))) for b in g.basis]
    return DynkinAut(
        algebra=g,
        kind="flip",
        node_perm=tuple(n - i for i in range(1, n)),
        algebra_map=np.stack(columnas, axis=1),
        conjugator=s,
    )


def check_r_invariance(r: ClassicalRMatrix, kappa: DynkinAut) -> DenseTensor:
    """(κ⊗κ)(r) − r"""
    return kappa.apply_tensor(r.r) - r.r


# === DIAGRAMAS SIMPLEMENTE ENLAZADOS ===

def _aristas_dynkin(tipo: str, rango: int) -> list[tuple[int, int]]:
    tipo = tipo.upper()
    if tipo == "A" and rango >= 1:
        return [(k, k + 1) for k in range(rango - 1)]
    if tipo == "D" and rango >= 4:
        return [(k, k + 1) for k in range(rango - 2)] + [(rango - 3, rango - 1)]
    if tipo == "E" and rango in (6, 7, 8):
        return [(k, k + 1) for k in range(rango - 2)] + [(2, rango - 1)]
    raise AlgebraError(f"Diagrama inválido: {tipo}{rango}")


def dynkin_graph_aut_order(tipo: str, rango: int) -> int:
    """
    Orden del grupo de automorfismos del diagrama por búsqueda exhaustiva.

    Args:
        tipo: 'A', 'D' o 'E'
        rango: Número de nodos

    Returns:
        Cantidad de permutaciones de nodos que preservan la adyacencia
    """
    aristas = _aristas_dynkin(tipo, rango)
    vecinos = {v: set() for v in range(rango)}
    for a, b in aristas:
        vecinos[a].add(b)
        vecinos[b].add(a)

    def extender(imagen: list[int], usados: set[int]) -> int:
        v = len(imagen)
        if v == rango:
            return 1
        total = 0
        for w in range(rango):
            if w in usados or len(vecinos[w]) != len(vecinos[v]):
                continue
            if all((imagen[u] in vecinos[w]) == (u in vecinos[v]) for u in range(v)):
                imagen.append(w)
                usados.add(w)
                total += extender(imagen, usados)
                imagen.pop()
                usados.discard(w)
        return total

    return extender([], set())


def out_group(tipo: str, rango: int) -> tuple[int, str]:
    """Out(G) para G simplemente conexo simplemente enlazado: (orden, nombre)"""
    orden = dynkin_graph_aut_order(tipo, rango)
    return orden, {1: "1", 2: "Z2", 6: "S3"}[orden]
