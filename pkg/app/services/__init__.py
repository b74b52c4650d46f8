"""
Servicios - Lógica numérica
Cada subpaquete implementa un módulo de la librería; todas las operaciones son puras
"""
