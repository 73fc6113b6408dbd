from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from sympy.polys.domains import QQ

from mcp_rea.errors import DimensionError, MissingVariableError
from mcp_rea.ring import (
    CoordinateRing,
    DenseTensor,
    Jet1,
    as_rational,
    jet_mul,
    poly_bracket_eval,
    qq,
    rational_array,
    rational_inverse,
    tensor_contract,
)
from mcp_rea.utils.formato import render_poly, serializar


@pytest.mark.fast
def test_as_rational():
    assert as_rational(3) == Fraction(3)
    assert as_rational(sp.Rational(3, 2)) == Fraction(3, 2)
    assert as_rational(QQ(1, 3)) == Fraction(1, 3)
    with pytest.raises(TypeError):
        as_rational(0.5)


@pytest.mark.fast
def test_jet_arithmetic():
    a = Jet1(1, 2)
    b = Jet1(3, 4)
    assert a * b == Jet1(3, 10)
    assert Jet1(0, 1) * Jet1(0, 1) == 0
    assert a + 1 == Jet1(2, 2)
    assert 1 - a == Jet1(0, -2)


@pytest.mark.fast
def test_rational_inverse_exact():
    m = rational_array([[2, 1], [1, 1]])
    inversa = rational_inverse(m)
    assert (m.dot(inversa) == rational_array([[1, 0], [0, 1]])).all()
    assert inversa[0, 0] == Fraction(1)
    assert inversa[0, 1] == Fraction(-1)


@pytest.mark.fast
def test_tensor_contract_trace():
    t = DenseTensor.from_nested([[1, 2], [3, 4]])
    assert tensor_contract(t, [(0, 1)]).item() == Fraction(5)


@pytest.mark.fast
def test_tensor_contract_partial():
    datos = np.arange(12).reshape(2, 2, 3)
    t = DenseTensor.from_nested(datos.tolist())
    resultado = t.contract([(0, 1)])
    assert resultado.shape == (3,)
    esperado = [datos[0, 0, k] + datos[1, 1, k] for k in range(3)]
    assert resultado.entries == [Fraction(int(x)) for x in esperado]


@pytest.mark.fast
def test_tensor_contract_errors():
    t = DenseTensor.zeros((2, 3))
    with pytest.raises(DimensionError):
        tensor_contract(t, [(0, 1)])
    cuadrado = DenseTensor.zeros((2, 2, 2, 2))
    with pytest.raises(DimensionError):
        tensor_contract(cuadrado, [(0, 1), (1, 2)])
    with pytest.raises(DimensionError):
        tensor_contract(cuadrado, [(0, 4)])


@pytest.mark.fast
def test_dense_tensor_algebra():
    a = DenseTensor.from_nested([[1, 0], [0, 1]])
    b = DenseTensor.from_nested([[0, 1], [1, 0]])
    assert (a + b) - b == a
    assert a.scale(Fraction(1, 2))[0, 0] == Fraction(1, 2)
    assert a.outer(b).shape == (2, 2, 2, 2)
    assert b.nonzero() == [((0, 1), Fraction(1)), ((1, 0), Fraction(1))]
    assert not a.is_zero()
    with pytest.raises(DimensionError):
        a + DenseTensor.zeros((3,))


@pytest.mark.fast
def test_coordinate_ring_layout():
    anillo = CoordinateRing(2, 3)
    assert anillo.ngens == 18
    assert anillo.nombres[0] == "g1_11"
    assert anillo.indice(1, 0, 2) == 11
    assert anillo.nombres[11] == "g2_13"
    assert anillo.coordenada(11) == (1, 0, 2)


@pytest.mark.fast
def test_desde_terminos_and_variables():
    anillo = CoordinateRing(1, 2)
    p = anillo.desde_terminos({(0, 1): Fraction(3, 2), (3,): Fraction(-1), (2,): Fraction(0)})
    assert p == anillo.gens[0] * anillo.gens[1] * qq(Fraction(3, 2)) - anillo.gens[3]
    assert anillo.variables_de(p) == [0, 1, 3]


@pytest.mark.fast
def test_aplicar_derivacion_leibniz():
    anillo = CoordinateRing(1, 2)
    g11, g12, _, _ = anillo.gens
    p = g11 * g12
    # ∂ que manda g11 ↦ g12 y anula el resto
    derivada = anillo.aplicar_derivacion(p, lambda k: g12 if k == 0 else anillo.zero)
    assert derivada == g12**2


@pytest.mark.fast
def test_renombrar_aristas():
    anillo = CoordinateRing(2, 2)
    p = anillo.var(0, 0, 1) * anillo.var(1, 1, 1)
    assert anillo.renombrar_aristas(p, {0: 1, 1: 0}) == anillo.var(1, 0, 1) * anillo.var(0, 1, 1)


@pytest.mark.fast
def test_poly_bracket_eval():
    anillo = CoordinateRing(1, 2)
    g11, g12, _, _ = anillo.gens
    p = g11 * g12 + anillo.constante(Fraction(1, 2))
    assert poly_bracket_eval(p, {"g1_11": 2, "g1_12": Fraction(1, 4)}) == Fraction(1)
    with pytest.raises(MissingVariableError) as error:
        poly_bracket_eval(p, {"g1_11": 2})
    assert error.value.missing == ["g1_12"]


@pytest.mark.fast
def test_render_poly_canonical():
    anillo = CoordinateRing(2, 3)
    p = (anillo.var(0, 0, 0) * anillo.var(1, 1, 2)).mul_ground(qq(Fraction(3, 2))) \
        - anillo.var(0, 0, 1) ** 2
    assert render_poly(p) == "3/2*g1_11*g2_23 - g1_12^2"
    assert render_poly(anillo.zero) == "0"
    assert render_poly(-anillo.var(0, 0, 0) + anillo.constante(2)) == "-g1_11 + 2"


@pytest.mark.fast
def test_serializar_anidado():
    anillo = CoordinateRing(1, 2)
    datos = {'par': ("a", "b"), 'valor': Fraction(-1, 3), 'p': anillo.gens[0]}
    assert serializar(datos) == {'par': ["a", "b"], 'valor': "-1/3", 'p': "g1_11"}


def _jets_aleatorios(semilla: int, cantidad: int) -> list[Jet1]:
    rng = np.random.default_rng(semilla)
    numeradores = rng.integers(-9, 10, size=(cantidad, 2))
    denominadores = rng.integers(1, 7, size=(cantidad, 2))
    return [
        Jet1(Fraction(int(n0), int(d0)), Fraction(int(n1), int(d1)))
        for (n0, n1), (d0, d1) in zip(numeradores, denominadores)
    ]


@pytest.mark.fast
def test_jets_form_a_commutative_ring():
    jets = _jets_aleatorios(11, 30)
    for a, b, c in zip(jets[0::3], jets[1::3], jets[2::3]):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
        assert a * 1 == a
        assert a - a == 0
        assert jet_mul(a, b) == a * b


@pytest.mark.fast
def test_tensor_contract_matrix_product():
    e12 = DenseTensor.from_nested([[0, 1], [0, 0]])
    e21 = DenseTensor.from_nested([[0, 0], [1, 0]])
    e11 = DenseTensor.from_nested([[1, 0], [0, 0]])
    assert tensor_contract(e12.outer(e21), [(1, 2)]) == e11


@pytest.mark.fast
def test_tensor_contract_is_linear():
    rng = np.random.default_rng(3)
    a = DenseTensor.from_nested(rng.integers(-5, 6, size=(3, 2, 3)).tolist())
    b = DenseTensor.from_nested(rng.integers(-5, 6, size=(3, 2, 3)).tolist())
    c = Fraction(-2, 3)
    pares = [(0, 2)]
    assert tensor_contract(a + b, pares) == tensor_contract(a, pares) + tensor_contract(b, pares)
    assert tensor_contract(a.scale(c), pares) == tensor_contract(a, pares).scale(c)


@pytest.mark.fast
def test_polynomial_difference_is_empty():
    anillo = CoordinateRing(2, 2)
    p = anillo.var(0, 0, 1) * anillo.var(1, 1, 0) + anillo.constante(Fraction(3, 4)) \
        - anillo.var(1, 0, 0) ** 2
    diferencia = p - p
    assert diferencia == anillo.zero
    assert not diferencia
    assert dict(diferencia) == {}
