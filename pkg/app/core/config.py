from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    TOLERANCE: float = 1e-12
    DUMP_THRESHOLD: float = 1e-14          # amplitudes por debajo no se vuelcan
    MAX_CIRCUIT_QUBITS: int = 6            # guarda para circuit_unitary (2^n x 2^n)
    FLOAT_DIGITS: int = 17

    RANDOM_CIRCUITS: int = 100
    RANDOM_SEED: int = 1234

    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(env_file=".env", env_ignore_empty=True)

settings = Settings()


def fmt(x: float) -> str:
    # salida numérica con 17 cifras significativas (golden files exactos)
    return format(float(x), f".{settings.FLOAT_DIGITS}g")


def tol_or_default(tol: float | None) -> float:
    return settings.TOLERANCE if tol is None else tol
