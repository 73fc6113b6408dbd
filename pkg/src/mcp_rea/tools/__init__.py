"""Herramientas del verificador, compartidas por la CLI y el servidor MCP"""

from . import patrones
from . import grupos
from . import poisson
from . import cuantizacion
from . import suite

__all__ = ['patrones', 'grupos', 'poisson', 'cuantizacion', 'suite']
