"""
Errores del simulador.

Igual que HTTPException(status_code, detail) en la API: cada error lleva un
``exit_code`` que la CLI usa directamente.
"""


class QuarkSimError(Exception):
    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DimensionError(QuarkSimError):
    pass


class IndexRangeError(QuarkSimError):
    pass


class OverlapError(QuarkSimError):
    pass


class NotUnitaryError(QuarkSimError):
    pass


class NotHermitianError(QuarkSimError):
    pass


class NonFiniteError(QuarkSimError):
    pass


class NormalizationError(QuarkSimError):
    pass


class RegisterTooLargeError(QuarkSimError):
    pass


class UnsupportedPatternError(QuarkSimError):
    pass


class ResourceLevelError(QuarkSimError):
    pass


class CircuitParseError(QuarkSimError):
    exit_code = 2

    def __init__(self, line: int, field: str | None, detail: str):
        where = f"línea {line}" + (f", campo '{field}'" if field else "")
        super().__init__(f"{where}: {detail}")
        self.line = line
        self.field = field


class UsageError(QuarkSimError):
    exit_code = 2


class VerificationError(QuarkSimError):
    exit_code = 1

    def __init__(self, detail: str, failed: list[str] | None = None):
        super().__init__(detail)
        self.failed = failed or []
