from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Configuración de la aplicación
    app_name: str = "baumsweet"
    app_version: str = "1.0.0"
    debug: bool = False

    # Configuración de logging (los logs van a stderr)
    log_level: str = "WARNING"

    # Configuración de generación
    gen_default_n: int = 32

    # Configuración del verificador
    verify_profile: str = "quick"
    verify_jobs: int = 1
    verify_progress: bool = False

    # Método de reversión: auto | incremental | newton
    reversion_method: str = "auto"

    class Config:
        env_file = ".env"
        env_prefix = "BAUMSWEET_"
        case_sensitive = False
        env_file_encoding = "utf-8"


# Perfiles válidos del verificador
PROFILES = ("quick", "full")

# Instancia global de configuración
settings = Settings()
