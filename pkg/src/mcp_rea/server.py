"""Servidor MCP del verificador de álgebras de reflexión torcidas"""

import sys

from mcp.server.fastmcp import FastMCP

from .config import Configuracion
from .tools import cuantizacion, grupos, patrones, poisson, suite
from .utils.formato import a_json

# Configuración tomada del entorno (.env)
config = Configuracion()

mcp = FastMCP("mcp-rea-torcida")


# === HERRAMIENTAS DE PATRONES ===

@mcp.tool()
async def clasificar_patron(patron: str) -> str:
    """Clasifica cada par de aristas de un patrón de pegado (PosLinked, NegNested, ...).

    Args:
        patron: Texto del patrón, p. ej. "n = 2; P = 1 3 2 4; labels = flip id"
    """
    return a_json(patrones.clasificar_patron(config, patron))


@mcp.tool()
async def invariantes_superficie(patron: str) -> str:
    """Género, componentes de borde y holonomías de borde de un patrón decorado.

    Args:
        patron: Texto del patrón
    """
    return a_json(patrones.invariantes_superficie(config, patron))


# === HERRAMIENTAS DE GRUPOS ===

@mcp.tool()
async def orbitas_torcidas(grupo: str, twists: str) -> str:
    """Órbitas de la conjugación torcida sobre G^n, con conteo de Burnside y cardinalidad del grupoide.

    Args:
        grupo: 'Z5', 'S3' o ruta a una tabla de Cayley en JSON
        twists: Un twist por generador, separados por comas (id, u2, inner:213)
    """
    return a_json(grupos.orbitas_torcidas(config, grupo, twists))


# === HERRAMIENTAS DE VERIFICACIÓN ===

@mcp.tool()
async def verificar_poisson(
    patron: str,
    checks: str | None = None,
    algebra: str | None = None
) -> str:
    """Chequeos exactos del bivector de Fock–Rosly torcido.

    Args:
        patron: Texto del patrón
        checks: Subconjunto de jacobi,agree,equivariance (opcional)
        algebra: sl2, sl3, ... (opcional, default: REA_ALGEBRA)
    """
    print(f"[MCP] verificar_poisson checks={checks} algebra={algebra}", file=sys.stderr)
    return a_json(poisson.verificar_poisson(config, patron, checks=checks, algebra=algebra))


@mcp.tool()
async def verificar_cuantizacion(patron: str, algebra: str | None = None) -> str:
    """Compara el conmutador a primer orden del álgebra torcida con el corchete de Poisson.

    Args:
        patron: Texto del patrón
        algebra: sl2, sl3, ... (opcional)
    """
    print(f"[MCP] verificar_cuantizacion algebra={algebra}", file=sys.stderr)
    return a_json(cuantizacion.verificar_cuantizacion(config, patron, algebra=algebra))


@mcp.tool()
async def verificar_todo() -> str:
    """Corre la suite completa de verificación"""
    print("[MCP] verificar_todo", file=sys.stderr)
    return a_json(suite.verificar_todo(config))


def main():
    """Punto de entrada principal"""
    print("[MCP] Iniciando servidor MCP en modo stdio", file=sys.stderr)
    mcp.run(transport="stdio")


if __name__ == "__main__":
    main()
