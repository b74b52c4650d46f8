"""
Punto de entrada principal de la aplicación de línea de comandos
Propagadores de vuelos de Lévy: densidades, tablas comparativas, verificación y muestreo

Uso:
    python -m app.main density --alpha 1.5 --x 0,1,5
"""

import logging
import sys

from dotenv import load_dotenv

from app.controllers.cli_controller import main as cli_main
from app.settings import get_settings


def configure_logging() -> None:
    """Logging a stderr para no mezclarlo con el CSV de stdout"""
    logging.basicConfig(
        level=get_settings().log_level.upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def main() -> int:
    # Cargar variables de entorno
    load_dotenv()
    configure_logging()
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
