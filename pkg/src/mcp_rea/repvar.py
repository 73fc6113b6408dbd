"""Variedades de representaciones torcidas sobre grupos finitos"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Sequence

from .errors import SizeGuardError

Word = Sequence[tuple[int, int]]


# === GRUPOS ===

@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Grupo finito dado por su tabla de multiplicación (elementos 0..order-1)"""

    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    id: int
    names: tuple[str, ...]
    label: str = "G"
    modulus: int | None = field(default=None, repr=False)

    @classmethod
    def from_table(
        cls,
        mul: Sequence[Sequence[int]],
        names: Sequence[str] | None = None,
        label: str = "G",
        modulus: int | None = None,
    ) -> "FiniteGroup":
        """
        Valida una tabla de Cayley y construye el grupo.

        Args:
            mul: Tabla mul[a][b] = a·b
            names: Nombres de los elementos (por defecto sus índices)
            label: Nombre del grupo para reportes
            modulus: m si el grupo es Z/m aditivo (habilita los twists u<k>)

        Returns:
            FiniteGroup con identidad e inversos calculados
        """
        k = len(mul)
        tabla = tuple(tuple(int(x) for x in fila) for fila in mul)
        if k == 0 or any(len(fila) != k for fila in tabla):
            raise ValueError("la tabla de multiplicación debe ser cuadrada y no vacía")
        if any(not 0 <= x < k for fila in tabla for x in fila):
            raise ValueError("la tabla contiene elementos fuera de rango")

        identidades = [e for e in range(k) if all(tabla[e][x] == x == tabla[x][e] for x in range(k))]
        if not identidades:
            raise ValueError("la tabla no tiene elemento neutro")
        e = identidades[0]

        inversos = []
        for a in range(k):
            candidatos = [b for b in range(k) if tabla[a][b] == e == tabla[b][a]]
            if not candidatos:
                raise ValueError(f"el elemento {a} no tiene inverso")
            inversos.append(candidatos[0])

        for a in range(k):
            for b in range(k):
                ab = tabla[a][b]
                for c in range(k):
                    if tabla[ab][c] != tabla[a][tabla[b][c]]:
                        raise ValueError(f"la tabla no es asociativa en ({a}, {b}, {c})")

        nombres = tuple(names) if names is not None else tuple(str(a) for a in range(k))
        if len(nombres) != k:
            raise ValueError("la cantidad de nombres no coincide con el orden")
        return cls(k, tabla, tuple(inversos), e, nombres, label, modulus)

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def element(self, token: str) -> int:
        """Elemento por nombre o por índice"""
        if token in self.names:
            return self.names.index(token)
        indice = int(token)
        if not 0 <= indice < self.order:
            raise ValueError(f"elemento fuera de rango: {token}")
        return indice

    def generators(self) -> list[int]:
        """Conjunto generador elegido de forma voraz"""
        generados = {self.id}
        gens = []
        for a in range(self.order):
            if a in generados:
                continue
            gens.append(a)
            frontera = list(generados)
            while frontera:
                x = frontera.pop()
                for g in gens:
                    y = self.mul[x][g]
                    if y not in generados:
                        generados.add(y)
                        frontera.append(y)
        return gens


@dataclass(frozen=True)
class GroupAutomorphism:
    """Automorfismo como permutación de los elementos"""

    map: tuple[int, ...]
    name: str = "id"

    def __call__(self, x: int) -> int:
        return self.map[x]

    def compose(self, otro: "GroupAutomorphism") -> "GroupAutomorphism":
        """self ∘ otro"""
        return GroupAutomorphism(tuple(self.map[otro.map[x]] for x in range(len(self.map))),
                                 f"{self.name}∘{otro.name}")

    def inverse(self) -> "GroupAutomorphism":
        inversa = [0] * len(self.map)
        for x, y in enumerate(self.map):
            inversa[y] = x
        return GroupAutomorphism(tuple(inversa), f"{self.name}⁻¹")

    def is_automorphism_of(self, grupo: FiniteGroup) -> bool:
        if sorted(self.map) != list(range(grupo.order)):
            return False
        return all(
            self.map[grupo.mul[a][b]] == grupo.mul[self.map[a]][self.map[b]]
            for a in range(grupo.order)
            for b in range(grupo.order)
        )


def identity_automorphism(grupo: FiniteGroup) -> GroupAutomorphism:
    return GroupAutomorphism(tuple(range(grupo.order)), "id")


def unit_automorphism(grupo: FiniteGroup, u: int) -> GroupAutomorphism:
    """x ↦ u·x en Z/m, para u unidad"""
    m = grupo.modulus
    if m is None:
        raise ValueError(f"los twists u<k> sólo aplican a grupos cíclicos, no a {grupo.label}")
    if gcd(u, m) != 1:
        raise ValueError(f"{u} no es unidad módulo {m}")
    return GroupAutomorphism(tuple((u * x) % m for x in range(m)), f"u{u}")


def inner_automorphism(grupo: FiniteGroup, h: int) -> GroupAutomorphism:
    """x ↦ h·x·h⁻¹"""
    return GroupAutomorphism(
        tuple(grupo.mul[grupo.mul[h][x]][grupo.inv[h]] for x in range(grupo.order)),
        f"inner:{grupo.names[h]}",
    )


def cyclic_group(m: int) -> FiniteGroup:
    """Z/m aditivo"""
    tabla = [[(a + b) % m for b in range(m)] for a in range(m)]
    return FiniteGroup.from_table(tabla, label=f"Z{m}", modulus=m)


def symmetric_group(m: int) -> FiniteGroup:
    """S_m con (a·b)(x) = a(b(x))"""
    elementos = list(permutations(range(m)))
    posicion = {p: k for k, p in enumerate(elementos)}
    tabla = [
        [posicion[tuple(a[b[x]] for x in range(m))] for b in elementos] for a in elementos
    ]
    nombres = ["".join(str(x + 1) for x in p) for p in elementos]
    return FiniteGroup.from_table(tabla, names=nombres, label=f"S{m}")


def group_from_json(texto: str, label: str = "G") -> FiniteGroup:
    """Grupo desde {"order": k, "mul": [[...]], "names": [...]}"""
    datos = json.loads(texto)
    grupo = FiniteGroup.from_table(datos["mul"], names=datos.get("names"), label=label)
    if grupo.order != int(datos.get("order", grupo.order)):
        raise ValueError("'order' no coincide con la tabla")
    return grupo


def parse_group(spec: str) -> FiniteGroup:
    """'Z5', 'S3' o una ruta a un archivo JSON con la tabla de Cayley"""
    texto = spec.strip()
    if texto[:1] in ("Z", "S") and texto[1:].isdigit():
        m = int(texto[1:])
        if m < 1:
            raise ValueError(f"grupo inválido: {spec}")
        return cyclic_group(m) if texto[0] == "Z" else symmetric_group(m)
    with open(texto, encoding="utf-8") as archivo:
        return group_from_json(archivo.read(), label=texto)


def parse_twist(grupo: FiniteGroup, token: str) -> GroupAutomorphism:
    """'id', 'u<k>' (Z/m) o 'inner:<elemento>'"""
    token = token.strip()
    if token == "id":
        return identity_automorphism(grupo)
    if token.startswith("u") and token[1:].isdigit():
        return unit_automorphism(grupo, int(token[1:]))
    if token.startswith("inner:"):
        return inner_automorphism(grupo, grupo.element(token[len("inner:"):]))
    raise ValueError(f"twist desconocido: {token}")


# === TWISTS Y HOMOMORFISMOS CRUZADOS ===

@dataclass(frozen=True)
class TwistData:
    """ρ: un automorfismo κ_i por generador libre"""

    twists: tuple[GroupAutomorphism, ...]

    @property
    def n(self) -> int:
        return len(self.twists)

    @classmethod
    def parse(cls, grupo: FiniteGroup, tokens: str) -> "TwistData":
        return cls(tuple(parse_twist(grupo, t) for t in tokens.split(",") if t.strip()))


@dataclass(frozen=True)
class TwistedHom:
    """φ: valores (g_1, ..., g_n) en los generadores libres"""

    values: tuple[int, ...]


def evaluate_word_with_twist(
    grupo: FiniteGroup, phi: TwistedHom, rho: TwistData, word: Word
) -> tuple[int, GroupAutomorphism]:
    """Evalúa φ(γ₁γ₂) = φ(γ₁)·ρ(γ₁).φ(γ₂) y devuelve también el twist acumulado"""
    g = grupo.id
    acumulado = identity_automorphism(grupo)
    for i, e in word:
        kappa = rho.twists[i]
        if e == 1:
            g = grupo.mul[g][acumulado(phi.values[i])]
            acumulado = acumulado.compose(kappa)
        else:
            inversa = kappa.inverse()
            g = grupo.mul[g][acumulado(inversa(grupo.inv[phi.values[i]]))]
            acumulado = acumulado.compose(inversa)
    return g, acumulado


def evaluate_word(grupo: FiniteGroup, phi: TwistedHom, rho: TwistData, word: Word) -> int:
    """
    Evalúa una palabra en los generadores con la regla del homomorfismo cruzado.

    Args:
        grupo: Grupo finito
        phi: Valores en los generadores
        rho: Twists por generador
        word: Letras (generador desde 0, exponente ±1)

    Returns:
        Elemento del grupo
    """
    return evaluate_word_with_twist(grupo, phi, rho, word)[0]


def boundary_holonomy(grupo: FiniteGroup, phi: TwistedHom, rho: TwistData, word: Word) -> int:
    """Holonomía de φ alrededor de una componente de borde"""
    return evaluate_word(grupo, phi, rho, word)


def twisted_conjugate(grupo: FiniteGroup, h: int, phi: TwistedHom, rho: TwistData) -> TwistedHom:
    """g_i ↦ h·g_i·κ_i(h)⁻¹"""
    return TwistedHom(tuple(
        grupo.mul[grupo.mul[h][g]][grupo.inv[kappa(h)]]
        for g, kappa in zip(phi.values, rho.twists)
    ))


# === ÓRBITAS ===

class UnionFind:
    """Conjuntos disjuntos sobre 0..tamaño-1 con unión por rango"""

    def __init__(self, tamano: int):
        self.parent = list(range(tamano))
        self.rank = [0] * tamano
        self.size = [1] * tamano

    def find(self, x: int) -> int:
        raiz = x
        while self.parent[raiz] != raiz:
            raiz = self.parent[raiz]
        while self.parent[x] != raiz:
            self.parent[x], x = raiz, self.parent[x]
        return raiz

    def union(self, x: int, y: int):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]

    def reps(self) -> list[int]:
        return [x for x in range(len(self.parent)) if self.parent[x] == x]

    def __len__(self):
        return len(self.reps())


def _codificar(valores: Sequence[int], k: int) -> int:
    indice = 0
    for v in valores:
        indice = indice * k + v
    return indice


def _decodificar(indice: int, k: int, n: int) -> tuple[int, ...]:
    valores = [0] * n
    for pos in range(n - 1, -1, -1):
        indice, valores[pos] = divmod(indice, k)
    return tuple(valores)


def _verificar_tamano(grupo: FiniteGroup, rho: TwistData, max_estados: int) -> int:
    estados = grupo.order ** rho.n
    if estados > max_estados:
        raise SizeGuardError(
            f"|G|^n = {grupo.order}^{rho.n} = {estados} excede el límite de {max_estados} estados"
        )
    return estados


def _uniones_bloque(args) -> list[tuple[int, int]]:
    grupo, rho, generadores, desde, hasta = args
    pares = []
    for x in range(desde, hasta):
        phi = TwistedHom(_decodificar(x, grupo.order, rho.n))
        for h in generadores:
            y = _codificar(twisted_conjugate(grupo, h, phi, rho).values, grupo.order)
            if y != x:
                pares.append((x, y))
    return pares


def twisted_orbits(
    grupo: FiniteGroup, rho: TwistData, max_estados: int = 10**7, jobs: int = 1
) -> list[list[int]]:
    """
    Órbitas de la conjugación torcida sobre G^n por union-find.

    Args:
        grupo: Grupo finito
        rho: Twists por generador
        max_estados: Límite de |G|^n
        jobs: Procesos para generar las uniones por bloques

    Returns:
        Órbitas como listas ordenadas de estados codificados, ordenadas por su mínimo
    """
    estados = _verificar_tamano(grupo, rho, max_estados)
    generadores = grupo.generators()
    uf = UnionFind(estados)

    if jobs > 1 and estados > 1:
        paso = -(-estados // jobs)
        bloques = [
            (grupo, rho, generadores, desde, min(desde + paso, estados))
            for desde in range(0, estados, paso)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for pares in pool.map(_uniones_bloque, bloques):
                for x, y in pares:
                    uf.union(x, y)
    else:
        for x, y in _uniones_bloque((grupo, rho, generadores, 0, estados)):
            uf.union(x, y)

    orbitas: dict[int, list[int]] = {}
    for x in range(estados):
        orbitas.setdefault(uf.find(x), []).append(x)
    print(
        f"[orbits] {grupo.label} n={rho.n}: {estados} estados, {len(orbitas)} órbitas",
        file=sys.stderr,
    )
    return sorted(orbitas.values(), key=lambda o: o[0])


def orbit_count(
    grupo: FiniteGroup, rho: TwistData, max_estados: int = 10**7, jobs: int = 1
) -> int:
    return len(twisted_orbits(grupo, rho, max_estados, jobs))


def burnside_count(grupo: FiniteGroup, rho: TwistData) -> int:
    """Σ_h |Fix(h)| / |G|, con Fix(h) producto de los fijos por componente"""
    total = 0
    for h in range(grupo.order):
        fijos = 1
        for kappa in rho.twists:
            inverso = grupo.inv[kappa(h)]
            fijos *= sum(
                1 for g in range(grupo.order) if grupo.mul[grupo.mul[h][g]][inverso] == g
            )
        total += fijos
    cociente = Fraction(total, grupo.order)
    if cociente.denominator != 1:
        raise ValueError(f"conteo de Burnside no entero: {cociente}")
    return int(cociente)


def stabilizer(grupo: FiniteGroup, phi: TwistedHom, rho: TwistData) -> list[int]:
    return [h for h in range(grupo.order) if twisted_conjugate(grupo, h, phi, rho) == phi]


def groupoid_cardinality(
    grupo: FiniteGroup, rho: TwistData, max_estados: int = 10**7, jobs: int = 1
) -> Fraction:
    """Σ_{órbitas} 1/|Stab|, igual a |G|^(n-1)"""
    total = Fraction(0)
    for orbita in twisted_orbits(grupo, rho, max_estados, jobs):
        phi = TwistedHom(_decodificar(orbita[0], grupo.order, rho.n))
        total += Fraction(1, len(stabilizer(grupo, phi, rho)))
    return total


def decode_state(grupo: FiniteGroup, n: int, indice: int) -> TwistedHom:
    return TwistedHom(_decodificar(indice, grupo.order, n))
