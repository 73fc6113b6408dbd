"""Utilidades para leer parámetros del entorno"""

import os


def leer_entero(nombre: str, defecto: int) -> int:
    """Lee una variable de entorno entera, con valor por defecto si falta o es vacía"""
    valor = os.getenv(nombre)
    if valor is None or valor.strip() == "":
        return defecto
    return int(valor)


def leer_texto(nombre: str, defecto: str) -> str:
    """Lee una variable de entorno de texto"""
    valor = os.getenv(nombre)
    return valor.strip() if valor and valor.strip() else defecto


def nombre_algebra(etiqueta: str) -> int:
    """
    Convierte 'sl3' (o 'A2') en el tamaño n de la representación definidora.

    Args:
        etiqueta: Nombre del álgebra, 'slN' o 'AK'

    Returns:
        n tal que el álgebra es sl_n
    """
    texto = etiqueta.strip().lower()
    if texto.startswith("sl") and texto[2:].isdigit():
        return int(texto[2:])
    if texto.startswith("a") and texto[1:].isdigit():
        return int(texto[1:]) + 1
    raise ValueError(f"Álgebra no reconocida: {etiqueta}")
