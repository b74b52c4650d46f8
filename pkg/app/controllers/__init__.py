"""
Controladores - Interfaz de línea de comandos
Traduce flags a RunConfig, ejecuta el subcomando y mapea errores a códigos de salida
"""
