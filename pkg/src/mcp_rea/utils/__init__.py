"""Utilidades del verificador"""
