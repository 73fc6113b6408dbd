import json

import pytest

from mcp_rea.errors import ReportError, SizeGuardError
from mcp_rea.informes import CheckReport, Trabajo, ejecutar, ejecutar_todos, emit_report


def _aprueba():
    return True, None


def _falla(valor):
    return False, {'valor': valor}


def _explota():
    raise SizeGuardError("demasiados estados")


@pytest.mark.fast
def test_report_validation():
    with pytest.raises(ValueError):
        CheckReport("jacobi", "sl2", "fail")
    with pytest.raises(ValueError):
        CheckReport("jacobi", "sl2", "ok")
    assert CheckReport("jacobi", "sl2", "pass").como_dict() == {
        'check': "jacobi", 'target': "sl2", 'status': "pass",
    }


@pytest.mark.fast
def test_ejecutar_maps_outcomes():
    assert ejecutar(Trabajo("a", "t", _aprueba)).status == "pass"
    fallo = ejecutar(Trabajo("b", "t", _falla, (3,)))
    assert fallo.status == "fail"
    assert fallo.counterexample == {'valor': 3}
    error = ejecutar(Trabajo("c", "t", _explota))
    assert error.status == "error"
    assert error.counterexample == {'mensaje': "demasiados estados"}
    assert error.elapsed_ms is None


@pytest.mark.fast
def test_ejecutar_todos_sorted_with_timings():
    trabajos = [Trabajo("z", "1", _aprueba), Trabajo("a", "2", _aprueba), Trabajo("a", "1", _aprueba)]
    reportes = ejecutar_todos(trabajos, tiempos=True)
    assert [(r.check, r.target) for r in reportes] == [("a", "1"), ("a", "2"), ("z", "1")]
    assert all(r.elapsed_ms is not None for r in reportes)


@pytest.mark.fast
def test_emit_report_empty(tmp_path):
    salida = tmp_path / "vacio.json"
    emit_report([], str(salida))
    assert salida.read_text(encoding="utf-8") == "[]\n"


@pytest.mark.fast
def test_emit_report_sorted_and_stable(tmp_path):
    reportes = [
        CheckReport("orbits", "Z5", "pass"),
        CheckReport("forms-agree", "sl3 P=1 2", "fail", {'par': ["g1_11", "g1_12"]}),
    ]
    primera, segunda = tmp_path / "a.json", tmp_path / "b.json"
    emit_report(reportes, str(primera))
    emit_report(list(reversed(reportes)), str(segunda))
    assert primera.read_bytes() == segunda.read_bytes()
    datos = json.loads(primera.read_text(encoding="utf-8"))
    assert [d['check'] for d in datos] == ["forms-agree", "orbits"]
    assert list(datos[0]) == ['check', 'target', 'status', 'counterexample']


@pytest.mark.fast
def test_emit_report_bad_path(tmp_path):
    with pytest.raises(ReportError):
        emit_report([], str(tmp_path / "no-existe" / "r.json"))
