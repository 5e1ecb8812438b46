"""
Inversas formales de sucesiones automáticas tipo Baum-Sweet.

Librería y CLI para generar, invertir y verificar series, sucesiones,
autómatas y palabras.
"""

__version__ = "1.0.0"
