"""Aritmética exacta: racionales, jets de primer orden, polinomios dispersos y tensores densos"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

import numpy as np
import sympy
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from .errors import DimensionError, MissingVariableError


def as_rational(valor) -> Fraction:
    """Convierte enteros, Fraction, racionales de sympy o elementos de QQ a Fraction"""
    if isinstance(valor, Fraction):
        return valor
    if isinstance(valor, int):
        return Fraction(valor)
    if isinstance(valor, sympy.Rational):
        return Fraction(int(valor.p), int(valor.q))
    if hasattr(valor, "numerator") and hasattr(valor, "denominator"):
        return Fraction(int(valor.numerator), int(valor.denominator))
    raise TypeError(f"No es un racional exacto: {valor!r}")


def qq(valor):
    """Elemento del dominio QQ de sympy a partir de un racional"""
    r = as_rational(valor)
    return QQ(r.numerator, r.denominator)


# === JETS DE PRIMER ORDEN ===

@dataclass(frozen=True)
class Jet1:
    """Elemento c0 + ħ·c1 con ħ² = 0"""

    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "c0", as_rational(self.c0))
        object.__setattr__(self, "c1", as_rational(self.c1))

    @staticmethod
    def lift(valor) -> "Jet1":
        return valor if isinstance(valor, Jet1) else Jet1(valor, 0)

    def __add__(self, otro):
        o = Jet1.lift(otro)
        return Jet1(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return Jet1(-self.c0, -self.c1)

    def __sub__(self, otro):
        return self + (-Jet1.lift(otro))

    def __rsub__(self, otro):
        return Jet1.lift(otro) - self

    def __mul__(self, otro):
        return jet_mul(self, Jet1.lift(otro))

    __rmul__ = __mul__

    def __eq__(self, otro):
        if isinstance(otro, (int, Fraction, Jet1)):
            o = Jet1.lift(otro)
            return self.c0 == o.c0 and self.c1 == o.c1
        return NotImplemented

    def __hash__(self):
        return hash((self.c0, self.c1))

    def __str__(self):
        return f"{self.c0} + {self.c1}ħ"


def jet_mul(a: Jet1, b: Jet1) -> Jet1:
    """Producto truncado: (a0 + ħa1)(b0 + ħb1) = a0b0 + ħ(a0b1 + a1b0)"""
    return Jet1(a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0)


# === MATRICES EXACTAS ===

_a_racional = np.frompyfunc(as_rational, 1, 1)


def rational_array(valores) -> np.ndarray:
    """Arreglo numpy de dtype=object con entradas Fraction"""
    return np.asarray(_a_racional(np.asarray(valores, dtype=object)), dtype=object)


def rational_identity(n: int) -> np.ndarray:
    """Matriz identidad n×n con entradas Fraction"""
    return rational_array(np.eye(n, dtype=int))


def rational_zeros(shape) -> np.ndarray:
    return np.full(shape, Fraction(0), dtype=object)


def rational_inverse(m: np.ndarray) -> np.ndarray:
    """Inversa exacta (vía sympy.Matrix) de una matriz racional invertible"""
    inversa = sympy.Matrix(m.tolist()).inv()
    return rational_array([[as_rational(x) for x in fila] for fila in inversa.tolist()])


def jet_matrix(m0: np.ndarray, m1: np.ndarray) -> np.ndarray:
    """Matriz con entradas Jet1 a partir de sus partes de orden 0 y 1"""
    filas, columnas = m0.shape
    salida = np.empty((filas, columnas), dtype=object)
    for i in range(filas):
        for j in range(columnas):
            salida[i, j] = Jet1(m0[i, j], m1[i, j])
    return salida


def jet_parts(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Separa una matriz de Jet1 en sus partes (c0, c1)"""
    c0 = rational_array([[Jet1.lift(x).c0 for x in fila] for fila in m])
    c1 = rational_array([[Jet1.lift(x).c1 for x in fila] for fila in m])
    return c0, c1


def jet_matrix_inverse(m: np.ndarray) -> np.ndarray:
    """(M0 + ħM1)⁻¹ = M0⁻¹ − ħ·M0⁻¹M1M0⁻¹"""
    m0, m1 = jet_parts(m)
    inv0 = rational_inverse(m0)
    return jet_matrix(inv0, -inv0.dot(m1).dot(inv0))


# === TENSORES DENSOS ===

@dataclass(frozen=True, eq=False)
class DenseTensor:
    """Tensor denso de racionales exactos (numpy dtype=object, orden fila-mayor)"""

    data: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "data", np.asarray(self.data, dtype=object))

    @classmethod
    def zeros(cls, shape) -> "DenseTensor":
        return cls(rational_zeros(tuple(shape)))

    @classmethod
    def from_nested(cls, valores) -> "DenseTensor":
        return cls(rational_array(valores))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self.data.shape)

    @property
    def rank(self) -> int:
        return self.data.ndim

    @property
    def entries(self) -> list[Fraction]:
        """Entradas en orden fila-mayor"""
        return list(self.data.flat)

    def __getitem__(self, indice):
        return self.data[indice]

    def __add__(self, otro: "DenseTensor") -> "DenseTensor":
        self._misma_forma(otro)
        return DenseTensor(self.data + otro.data)

    def __sub__(self, otro: "DenseTensor") -> "DenseTensor":
        self._misma_forma(otro)
        return DenseTensor(self.data - otro.data)

    def __neg__(self) -> "DenseTensor":
        return DenseTensor(-self.data)

    def scale(self, c) -> "DenseTensor":
        return DenseTensor(self.data * as_rational(c))

    def outer(self, otro: "DenseTensor") -> "DenseTensor":
        return DenseTensor(np.multiply.outer(self.data, otro.data))

    def transpose(self, *ejes) -> "DenseTensor":
        return DenseTensor(self.data.transpose(*ejes) if ejes else self.data.T)

    def contract(self, pairs) -> "DenseTensor":
        return tensor_contract(self, pairs)

    def item(self) -> Fraction:
        return as_rational(self.data.item())

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.data.flat)

    def nonzero(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return [(tuple(int(k) for k in idx), v) for idx, v in np.ndenumerate(self.data) if v != 0]

    def __eq__(self, otro) -> bool:
        if not isinstance(otro, DenseTensor) or otro.shape != self.shape:
            return False
        return all(a == b for a, b in zip(self.data.flat, otro.data.flat))

    __hash__ = None

    def _misma_forma(self, otro: "DenseTensor"):
        if self.shape != otro.shape:
            raise DimensionError(f"formas distintas: {self.shape} y {otro.shape}")


def tensor_contract(t: DenseTensor, pairs) -> DenseTensor:
    """
    Contracción por trazas sobre pares de índices.

    Args:
        t: Tensor a contraer
        pairs: Lista de pares (i, j) de índices originales de t

    Returns:
        Tensor con los índices restantes en su orden original
    """
    pares = [tuple(int(k) for k in par) for par in pairs]
    usados = [k for par in pares for k in par]
    if len(set(usados)) != len(usados):
        raise DimensionError(f"índice repetido en {pares}")
    for i, j in pares:
        if not (0 <= i < t.rank and 0 <= j < t.rank):
            raise DimensionError(f"par ({i}, {j}) fuera de rango para rango {t.rank}")
        if t.shape[i] != t.shape[j]:
            raise DimensionError(
                f"dimensiones distintas en el par ({i}, {j}): {t.shape[i]} != {t.shape[j]}"
            )

    datos = t.data
    ejes = list(range(t.rank))
    for i, j in pares:
        a, b = ejes.index(i), ejes.index(j)
        datos = np.diagonal(datos, axis1=a, axis2=b).sum(axis=-1)
        ejes = [e for e in ejes if e not in (i, j)]
    return DenseTensor(np.asarray(datos, dtype=object))


# === POLINOMIOS DISPERSOS ===

def nombre_variable(arista: int, i: int, j: int) -> str:
    """Nombre canónico de g^{(α)}_{ij} con índices desde 1: 'g1_23'"""
    return f"g{arista + 1}_{i + 1}{j + 1}"


class CoordinateRing:
    """Anillo Q[g^{(α)}_{ij}] en orden lexicográfico graduado, variables por arista y entrada"""

    def __init__(self, aristas: int, n: int):
        self.aristas = aristas
        self.n = n
        self.coordenadas = [
            (a, i, j) for a in range(aristas) for i in range(n) for j in range(n)
        ]
        self.nombres = [nombre_variable(*c) for c in self.coordenadas]
        self.ring = PolyRing(self.nombres, QQ, grlex)
        self.gens = self.ring.gens

    @property
    def ngens(self) -> int:
        return len(self.gens)

    @property
    def zero(self) -> PolyElement:
        return self.ring.zero

    @property
    def one(self) -> PolyElement:
        return self.ring.one

    def constante(self, c) -> PolyElement:
        return self.ring.ground_new(qq(c))

    def indice(self, arista: int, i: int, j: int) -> int:
        return (arista * self.n + i) * self.n + j

    def var(self, arista: int, i: int, j: int) -> PolyElement:
        return self.gens[self.indice(arista, i, j)]

    def coordenada(self, indice: int) -> tuple[int, int, int]:
        return self.coordenadas[indice]

    def matriz(self, arista: int) -> np.ndarray:
        """Matriz n×n de generadores de la arista"""
        salida = np.empty((self.n, self.n), dtype=object)
        for i in range(self.n):
            for j in range(self.n):
                salida[i, j] = self.var(arista, i, j)
        return salida

    def desde_terminos(self, terminos: Mapping[tuple[int, ...], Fraction]) -> PolyElement:
        """Polinomio a partir de {tupla ordenada de índices de variables: coeficiente}"""
        datos = {}
        for variables, coef in terminos.items():
            if coef == 0:
                continue
            exps = [0] * self.ngens
            for k in variables:
                exps[k] += 1
            datos[tuple(exps)] = qq(coef)
        return self.ring.from_dict(datos)

    def variables_de(self, p: PolyElement) -> list[int]:
        """Índices de las variables que aparecen en p"""
        usadas = set()
        for monom in p.itermonoms():
            usadas.update(k for k, e in enumerate(monom) if e)
        return sorted(usadas)

    def aplicar_derivacion(
        self, p: PolyElement, imagen: Callable[[int], PolyElement]
    ) -> PolyElement:
        """Extiende por Leibniz una derivación dada en los generadores"""
        total = self.ring.zero
        for k in self.variables_de(p):
            img = imagen(k)
            if img:
                total += p.diff(self.gens[k]) * img
        return total

    def renombrar_aristas(self, p: PolyElement, permutacion: Mapping[int, int]) -> PolyElement:
        """Sustituye g^{(α)} por g^{(σ(α))} en todas las variables"""
        destino = [
            self.indice(permutacion.get(a, a), i, j) for (a, i, j) in self.coordenadas
        ]
        datos = {}
        for monom, coef in p.terms():
            exps = [0] * self.ngens
            for k, e in enumerate(monom):
                if e:
                    exps[destino[k]] += e
            datos[tuple(exps)] = coef
        return self.ring.from_dict(datos)


def poly_bracket_eval(p: PolyElement, point: Mapping[str, object]) -> Fraction:
    """
    Evalúa exactamente un polinomio en un punto racional.

    Args:
        p: Polinomio disperso
        point: Valor por nombre de variable

    Returns:
        Valor racional exacto
    """
    nombres = [str(s) for s in p.ring.symbols]
    usadas = set()
    for monom in p.itermonoms():
        usadas.update(k for k, e in enumerate(monom) if e)
    faltan = [nombres[k] for k in sorted(usadas) if nombres[k] not in point]
    if faltan:
        raise MissingVariableError(faltan)

    total = Fraction(0)
    for monom, coef in p.terms():
        valor = as_rational(coef)
        for k, e in enumerate(monom):
            if e:
                valor *= as_rational(point[nombres[k]]) ** e
        total += valor
    return total

