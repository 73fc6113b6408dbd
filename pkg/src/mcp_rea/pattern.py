"""Patrones de pegado decorados: lectura, clasificación de pares y trazado del borde"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Sequence

from .errors import PatternError

ETIQUETAS_A = ("id", "flip")


class PairClass(str, Enum):
    """Las seis posiciones relativas de dos aristas i < j"""

    POS_LINKED = "PosLinked"
    NEG_LINKED = "NegLinked"
    POS_NESTED = "PosNested"
    NEG_NESTED = "NegNested"
    POS_UNLINKED = "PosUnlinked"
    NEG_UNLINKED = "NegUnlinked"


@dataclass(frozen=True)
class GluingPattern:
    """Biyección P con start[i] = P(i) y end[i] = P(i'), posiciones desde 1"""

    start: tuple[int, ...]
    end: tuple[int, ...]

    def __post_init__(self):
        if len(self.start) != len(self.end):
            raise PatternError("start y end deben tener la misma longitud")
        posiciones = sorted(self.start + self.end)
        if posiciones != list(range(1, 2 * self.n + 1)):
            raise PatternError(f"P no es una biyección sobre 1..{2 * self.n}")
        for i, (a, b) in enumerate(zip(self.start, self.end), start=1):
            if a >= b:
                raise PatternError(f"P({i}) >= P({i}') ({a} >= {b})")

    @classmethod
    def from_sequence(cls, valores: Sequence[int]) -> "GluingPattern":
        """A partir de P(1) P(1') P(2) P(2') ..."""
        if len(valores) % 2:
            raise PatternError("P debe tener una cantidad par de posiciones")
        return cls(start=tuple(valores[0::2]), end=tuple(valores[1::2]))

    @property
    def n(self) -> int:
        return len(self.start)

    def sequence(self) -> tuple[int, ...]:
        return tuple(p for par in zip(self.start, self.end) for p in par)

    def relabel(self, permutacion: Sequence[int]) -> "GluingPattern":
        """La arista i pasa a llamarse permutacion[i] (índices desde 0)"""
        start = [0] * self.n
        end = [0] * self.n
        for i, destino in enumerate(permutacion):
            start[destino] = self.start[i]
            end[destino] = self.end[i]
        return GluingPattern(tuple(start), tuple(end))

    def __str__(self):
        return " ".join(str(p) for p in self.sequence())


@dataclass(frozen=True)
class DecoratedPattern:
    """Patrón de pegado con etiquetas de Out(G) por arista"""

    pattern: GluingPattern
    labels: tuple[str, ...]
    dynkin: str = "A2"

    def __post_init__(self):
        if len(self.labels) != self.pattern.n:
            raise PatternError(
                f"se esperaban {self.pattern.n} etiquetas, se recibieron {len(self.labels)}"
            )

    @property
    def n(self) -> int:
        return self.pattern.n

    def with_labels(self, labels: Sequence[str]) -> "DecoratedPattern":
        return DecoratedPattern(self.pattern, tuple(labels), self.dynkin)

    def untwisted(self) -> "DecoratedPattern":
        return self.with_labels(["id"] * self.n)

    def descriptor(self) -> str:
        return f"P={self.pattern} labels={','.join(self.labels)}"


# === LECTURA ===

def _asignaciones(texto: str) -> Iterator[tuple[int, str, str]]:
    for numero, linea in enumerate(texto.splitlines(), start=1):
        contenido = linea.split("#", 1)[0]
        for parte in contenido.split(";"):
            if not parte.strip():
                continue
            if "=" not in parte:
                raise PatternError(f"se esperaba 'clave = valor': {parte.strip()!r}", numero)
            clave, valor = parte.split("=", 1)
            yield numero, clave.strip().lower(), valor.strip()


def parse_pattern(text: str) -> DecoratedPattern:
    """
    Lee un patrón decorado en formato 'clave = valor'.

    Args:
        text: Contenido del archivo (n, P, D opcional, labels)

    Returns:
        DecoratedPattern validado
    """
    valores: dict[str, tuple[int, str]] = {}
    for numero, clave, valor in _asignaciones(text):
        if clave not in ("n", "p", "d", "labels"):
            raise PatternError(f"clave desconocida: {clave}", numero)
        if clave in valores:
            raise PatternError(f"clave repetida: {clave}", numero)
        valores[clave] = (numero, valor)

    for requerida in ("n", "p"):
        if requerida not in valores:
            raise PatternError(f"falta la asignación '{requerida}'")

    linea_n, texto_n = valores["n"]
    try:
        n = int(texto_n)
    except ValueError:
        raise PatternError(f"n no es un entero: {texto_n!r}", linea_n) from None
    if n < 1:
        raise PatternError("n debe ser al menos 1", linea_n)

    linea_p, texto_p = valores["p"]
    try:
        posiciones = [int(x) for x in texto_p.replace(",", " ").split()]
    except ValueError:
        raise PatternError(f"P contiene valores no enteros: {texto_p!r}", linea_p) from None
    if len(posiciones) != 2 * n:
        raise PatternError(f"P debe tener {2 * n} posiciones, tiene {len(posiciones)}", linea_p)
    try:
        patron = GluingPattern.from_sequence(posiciones)
    except PatternError as e:
        raise PatternError(e.message, linea_p) from None

    dynkin = "A2"
    rango = 2
    if "d" in valores:
        linea_d, dynkin = valores["d"]
        if not (dynkin[:1].upper() == "A" and dynkin[1:].isdigit() and int(dynkin[1:]) >= 1):
            raise PatternError(f"sólo hay vocabulario de etiquetas para tipo A: {dynkin}", linea_d)
        dynkin = dynkin.upper()
        rango = int(dynkin[1:])

    if "labels" in valores:
        linea_l, texto_l = valores["labels"]
        etiquetas = tuple(texto_l.replace(",", " ").split())
        for token in etiquetas:
            if token not in ETIQUETAS_A:
                raise PatternError(f"etiqueta desconocida: {token}", linea_l)
            if token == "flip" and rango < 2:
                raise PatternError("flip no es un automorfismo de A1", linea_l)
        if len(etiquetas) != n:
            raise PatternError(
                f"se esperaban {n} etiquetas, se recibieron {len(etiquetas)}", linea_l
            )
    else:
        etiquetas = ("id",) * n

    return DecoratedPattern(patron, etiquetas, dynkin)


def pattern_text(decorado: DecoratedPattern) -> str:
    """Representación canónica en el formato de archivo"""
    return (
        f"n = {decorado.n}\n"
        f"P = {decorado.pattern}\n"
        f"D = {decorado.dynkin}\n"
        f"labels = {' '.join(decorado.labels)}\n"
    )


def all_patterns(n: int) -> Iterator[GluingPattern]:
    """Todos los patrones válidos con n aristas, (2n)!/2ⁿ en total"""
    total = 2 * n

    def asignar(arista: int, libres: list[int], start: list[int], end: list[int]):
        if arista == n:
            yield GluingPattern(tuple(start), tuple(end))
            return
        for a_idx, a in enumerate(libres):
            for b in libres[a_idx + 1:]:
                resto = [p for p in libres if p not in (a, b)]
                yield from asignar(arista + 1, resto, start + [a], end + [b])

    yield from asignar(0, list(range(1, total + 1)), [], [])


# === CLASIFICACIÓN ===

def edge_class(patron: GluingPattern, a: int, b: int) -> PairClass:
    """Clase del par de aristas a < b (índices desde 0)"""
    pi, pi_ = patron.start[a], patron.end[a]
    pj, pj_ = patron.start[b], patron.end[b]
    if pi < pj < pi_ < pj_:
        return PairClass.POS_LINKED
    if pj < pi < pj_ < pi_:
        return PairClass.NEG_LINKED
    if pi < pj < pj_ < pi_:
        return PairClass.POS_NESTED
    if pj < pi < pi_ < pj_:
        return PairClass.NEG_NESTED
    if pi < pi_ < pj < pj_:
        return PairClass.POS_UNLINKED
    return PairClass.NEG_UNLINKED


def classify_pair(patron: GluingPattern, i: int, j: int) -> PairClass:
    """
    Clase del par de aristas i < j, numeradas desde 1.

    Args:
        patron: Patrón de pegado
        i: Primera arista
        j: Segunda arista, j > i

    Returns:
        Una de las seis clases PairClass
    """
    if not (1 <= i < j <= patron.n):
        raise PatternError(f"par de aristas fuera de rango: ({i}, {j}) con n={patron.n}")
    return edge_class(patron, i - 1, j - 1)


def class_table(patron: GluingPattern) -> list[tuple[int, int, PairClass]]:
    return [
        (i, j, classify_pair(patron, i, j))
        for i in range(1, patron.n + 1)
        for j in range(i + 1, patron.n + 1)
    ]


# === BORDE ===

@dataclass(frozen=True)
class BoundaryWord:
    """Palabra de borde: letras (generador desde 0, ±1) y su holonomía en Out(G)"""

    letters: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]
    holonomy: str

    def __str__(self):
        return " ".join(f"g{i + 1}" if e == 1 else f"g{i + 1}^-1" for i, e in self.letters)


def _extremos(patron: GluingPattern) -> dict[int, tuple[int, int]]:
    """posición (desde 0) -> (arista, +1 si es P(i), -1 si es P(i'))"""
    extremos = {}
    for i, (a, b) in enumerate(zip(patron.start, patron.end)):
        extremos[a - 1] = (i, 1)
        extremos[b - 1] = (i, -1)
    return extremos


def boundary_cycles(patron: GluingPattern) -> list[list[int]]:
    """Ciclos de p ↦ σ(ι(p)), cada uno desde su posición mínima"""
    total = 2 * patron.n
    pareja = {}
    for a, b in zip(patron.start, patron.end):
        pareja[a - 1] = b - 1
        pareja[b - 1] = a - 1

    visitados = set()
    ciclos = []
    for inicio in range(total):
        if inicio in visitados:
            continue
        ciclo = []
        p = inicio
        while p not in visitados:
            visitados.add(p)
            ciclo.append(p)
            p = (pareja[p] + 1) % total
        ciclos.append(ciclo)
    return ciclos


def surface_invariants(patron: GluingPattern) -> tuple[int, int]:
    """(g, r) con r por trazado del borde y χ = 1 − n = 2 − 2g − r"""
    r = len(boundary_cycles(patron))
    return (1 + patron.n - r) // 2, r


def compose_labels(a: str, b: str) -> str:
    """Producto en Out(SL_n) = Z2 para n >= 3"""
    return "id" if a == b else "flip"


def invert_label(a: str) -> str:
    return a


def boundary_words(
    decorado: DecoratedPattern,
    compose: Callable[[str, str], str] = compose_labels,
    invert: Callable[[str], str] = invert_label,
) -> list[BoundaryWord]:
    """
    Palabras de borde con sus etiquetas acumuladas.

    Args:
        decorado: Patrón decorado
        compose: Producto de etiquetas
        invert: Inversa de una etiqueta

    Returns:
        Una palabra por componente de borde
    """
    extremos = _extremos(decorado.pattern)
    palabras = []
    for ciclo in boundary_cycles(decorado.pattern):
        letras = tuple(extremos[p] for p in ciclo)
        etiquetas = tuple(
            decorado.labels[i] if e == 1 else invert(decorado.labels[i]) for i, e in letras
        )
        holonomia = "id"
        for etiqueta in etiquetas:
            holonomia = compose(holonomia, etiqueta)
        palabras.append(BoundaryWord(letras, etiquetas, holonomia))
    return palabras


def boundary_holonomies(decorado: DecoratedPattern) -> list[str]:
    return [p.holonomy for p in boundary_words(decorado)]


def extends_over_caps(decorado: DecoratedPattern) -> bool:
    """El fibrado se extiende sobre discos que tapan el borde si toda holonomía es trivial"""
    return all(h == "id" for h in boundary_holonomies(decorado))
