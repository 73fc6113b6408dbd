"""Formato canónico de polinomios y serialización JSON de resultados"""

import json
from fractions import Fraction

from sympy.polys.rings import PolyElement

from ..ring import as_rational


def formatear_racional(valor) -> str:
    """'3/2', '-1', '0'"""
    r = as_rational(valor)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def render_poly(p: PolyElement) -> str:
    """
    Representación canónica: orden de monomios del anillo, coeficientes racionales explícitos.

    Args:
        p: Polinomio disperso

    Returns:
        Texto como '3/2*g1_11*g2_23 - g1_12^2'
    """
    if not p:
        return "0"
    nombres = [str(s) for s in p.ring.symbols]
    partes = []
    for monom, coef in p.terms():
        c = as_rational(coef)
        factores = []
        for k, e in enumerate(monom):
            if e == 1:
                factores.append(nombres[k])
            elif e > 1:
                factores.append(f"{nombres[k]}^{e}")
        magnitud = abs(c)
        if not factores:
            cuerpo = formatear_racional(magnitud)
        elif magnitud == 1:
            cuerpo = "*".join(factores)
        else:
            cuerpo = "*".join([formatear_racional(magnitud)] + factores)
        if not partes:
            partes.append(f"-{cuerpo}" if c < 0 else cuerpo)
        else:
            partes.append(f"{'-' if c < 0 else '+'} {cuerpo}")
    return " ".join(partes)


def serializar(valor):
    """Convierte polinomios, racionales y tuplas a tipos JSON"""
    if isinstance(valor, PolyElement):
        return render_poly(valor)
    if isinstance(valor, Fraction):
        return formatear_racional(valor)
    if isinstance(valor, dict):
        return {k: serializar(v) for k, v in valor.items()}
    if isinstance(valor, (list, tuple)):
        return [serializar(v) for v in valor]
    return valor


def a_json(valor) -> str:
    """JSON legible con el mismo formato que devuelven las herramientas MCP"""
    return json.dumps(serializar(valor), default=str, ensure_ascii=False, indent=2)
