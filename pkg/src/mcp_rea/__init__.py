"""Álgebras de reflexión torcidas y estructuras de Fock–Rosly: verificación exacta"""

__version__ = "0.1.0"
