"""Fixtures compartidas: rutas de patrones, álgebras y r-matrices"""

from pathlib import Path

import pytest

from mcp_rea.lie import build_sl, standard_r_matrix
from mcp_rea.pattern import DecoratedPattern, GluingPattern

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def sl2():
    return build_sl(2)


@pytest.fixture
def sl3():
    return build_sl(3)


@pytest.fixture
def r2(sl2):
    return standard_r_matrix(sl2)


@pytest.fixture
def r3(sl3):
    return standard_r_matrix(sl3)


def _decorado(secuencia, etiquetas=None) -> DecoratedPattern:
    patron = GluingPattern.from_sequence(secuencia)
    return DecoratedPattern(patron, tuple(etiquetas or ("id",) * patron.n))


@pytest.fixture
def decorado():
    """Fábrica de patrones decorados: decorado((1, 3, 2, 4), ("flip", "id"))"""
    return _decorado
