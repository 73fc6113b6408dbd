import asyncio
import json

import pytest

from mcp_rea import server


@pytest.mark.fast
def test_orbitas_torcidas_tool():
    resultado = json.loads(asyncio.run(server.orbitas_torcidas("Z5", "u2")))
    assert resultado['total'] == 1
    assert resultado['parametros']['twists'] == ["u2"]


@pytest.mark.fast
def test_clasificar_patron_tool_reports_errors():
    resultado = json.loads(asyncio.run(server.clasificar_patron("n = 1\nP = 2 1\n")))
    assert resultado['linea'] == 2


@pytest.mark.fast
def test_verificar_poisson_tool():
    texto = asyncio.run(server.verificar_poisson("n = 1; P = 1 2", checks="agree", algebra="sl2"))
    resultado = json.loads(texto)
    assert resultado['aprobados'] == 1
    assert resultado['reportes'][0]['status'] == "pass"
