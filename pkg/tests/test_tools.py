import json

import pytest

from mcp_rea.config import Configuracion
from mcp_rea.tools import cuantizacion, grupos, patrones, poisson, suite


@pytest.fixture
def config():
    return Configuracion(semilla=0, trabajos=1, algebra="sl2")


@pytest.mark.fast
def test_clasificar_patron(config):
    resultado = patrones.clasificar_patron(config, "n = 2\nP = 1 4 2 3\n")
    assert resultado['total'] == 1
    assert resultado['pares'] == [{'i': 1, 'j': 2, 'clase': "PosNested"}]
    assert resultado['parametros']['labels'] == ["id", "id"]


@pytest.mark.fast
def test_clasificar_patron_invalido(config):
    resultado = patrones.clasificar_patron(config, "n = 1\nP = 2 1\n")
    assert resultado['linea'] == 2
    assert resultado['error'].startswith("línea 2")


@pytest.mark.fast
def test_invariantes_superficie(config):
    resultado = patrones.invariantes_superficie(config, "n = 1; P = 1 2; labels = flip")
    assert (resultado['g'], resultado['r']) == (0, 2)
    assert [b['holonomia'] for b in resultado['bordes']] == ["flip", "flip"]
    assert resultado['se_extiende'] is False


@pytest.mark.fast
def test_pattern_checks():
    assert patrones.chequeo_combinatoria(4) == (True, None)
    assert patrones.chequeo_referencias() == (True, None)


@pytest.mark.fast
def test_orbitas_torcidas(config):
    resultado = grupos.orbitas_torcidas(config, "Z5", "u2")
    assert resultado['total'] == 1
    assert resultado['burnside'] == 1
    assert resultado['cardinalidad_grupoide'] == "1"
    assert resultado['esperado'] == "1"
    assert resultado['orbitas'] == [{'representante': ["0"], 'tamano': 5, 'estabilizador': 1}]
    json.dumps(resultado, ensure_ascii=False)


@pytest.mark.fast
def test_orbitas_torcidas_errors(config):
    assert 'error' in grupos.orbitas_torcidas(config, "Z4", "u2")
    assert 'error' in grupos.orbitas_torcidas(config, "Q8", "id")
    assert 'error' in grupos.orbitas_torcidas(config, "Z5", "")


@pytest.mark.fast
def test_group_checks():
    assert grupos.chequeo_referencia_ciclica() == (True, None)
    assert grupos.chequeo_simetrico() == (True, None)
    assert grupos.chequeo_grupo("Z6", 2, 10**6) == (True, None)
    assert grupos.twists_incorporados(grupos.parse_group("Z6")) == ["u1", "u5"]
    assert grupos.grupos_incorporados(6)[-1] == "S3"


@pytest.mark.fast
def test_verificar_poisson(config):
    resultado = poisson.verificar_poisson(config, "n = 1\nP = 1 2\n", checks="agree,equivariance")
    assert resultado['total'] == 2
    assert resultado['aprobados'] == 2
    assert resultado['parametros'] == {'algebra': "sl2", 'checks': ["agree", "equivariance"]}


@pytest.mark.fast
def test_verificar_poisson_errors(config):
    assert 'error' in poisson.verificar_poisson(config, "n = 1\nP = 1 2\n", checks="cohomologia")
    assert 'error' in poisson.verificar_poisson(config, "n = 1\n", checks="agree")
    assert 'error' in poisson.verificar_poisson(config, "n = 1\nP = 1 2\n", algebra="g2")


@pytest.mark.fast
def test_poisson_controls_detect_broken_inputs():
    assert poisson.chequeo_equivariancia_control(2) == (True, None)
    assert poisson.chequeo_cybe(3) == (True, None)
    assert poisson.chequeo_flip(3) == (True, None)
    assert poisson.chequeo_out() == (True, None)


@pytest.mark.fast
def test_twisted_equivariance_controls():
    assert poisson.chequeo_equivariancia_torcida_control(3) == (True, None)
    assert cuantizacion.chequeo_equivariancia_rea_torcida_control(3) == (True, None)


@pytest.mark.slow
def test_jacobi_control_sl3():
    assert poisson.chequeo_jacobi_control(3) == (True, None)


@pytest.mark.fast
def test_verificar_cuantizacion(config):
    resultado = cuantizacion.verificar_cuantizacion(config, "n = 1\nP = 1 2\n")
    assert resultado['pares'] == {'misma_arista': 16, 'aristas_distintas': 0}
    assert resultado['parametros']['generadores'] == 4
    assert resultado['aprobados'] == resultado['total'] == 3


@pytest.mark.fast
def test_quantisation_controls():
    assert cuantizacion.chequeo_asociatividad_control(2) == (True, None)
    assert cuantizacion.chequeo_equivariancia_rea_control(2) == (True, None)
    assert cuantizacion.chequeo_cruces("n = 3\nP = 1 4 2 5 3 6\n") == (True, None)


@pytest.mark.fast
def test_suite_jobs_are_unique(config):
    trabajos = suite.trabajos_suite(config)
    claves = [(t.check, t.target) for t in trabajos]
    assert len(claves) == len(set(claves))
    assert {"quantisation", "crossing", "forms-agree", "orbits", "jacobi-control"} <= {
        t.check for t in trabajos
    }


@pytest.mark.fast
def test_suite_forms_cover_three_edges(config):
    def formas(trabajos):
        return [t for t in trabajos if t.check == "forms-agree"]

    # 1·2 + 6·4 patrones decorados, más 90·8 con tres aristas
    assert len(formas(suite.trabajos_suite(config))) == 26
    assert len(formas(suite.trabajos_suite(config, 3))) == 26 + 720
    assert {"equivariance-control", "rea-equivariance-control"} <= {
        t.check for t in suite.trabajos_suite(config)
    }
