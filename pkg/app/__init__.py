"""
Propagadores de vuelos de Lévy α-estables simétricos
Librería numérica y CLI: inversión de la función característica, función H de Fox,
fórmulas asintóticas, operadores fraccionarios espectrales y oráculo Monte Carlo
"""

__version__ = "1.0.0"
__author__ = "Equipo levyprop"
