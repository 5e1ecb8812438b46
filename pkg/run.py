#!/usr/bin/env python3
"""
Script principal para ejecutar la CLI de baumsweet
"""

import sys

from dotenv import load_dotenv  # Importar load_dotenv

load_dotenv()  # Cargar variables de entorno desde .env

from baumsweet.core.config import settings  # noqa: E402
from baumsweet.main import main  # noqa: E402

if __name__ == "__main__":
    if settings.debug:
        print(f"🚀 Iniciando {settings.app_name} {settings.app_version}...", file=sys.stderr)
    main()
