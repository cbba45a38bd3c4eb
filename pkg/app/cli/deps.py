import math
from contextlib import contextmanager
from enum import Enum

import click
from pydantic import BaseModel, ValidationError, model_validator

from app.core.config import settings
from app.core.errors import UsageError
from app.models.gates import DecompositionLevel
from app.models.quarks import NucleonKind


class Command(str, Enum):
    PREPARE = "prepare"
    VERIFY = "verify"
    MOMENTS = "moments"
    RESOURCES = "resources"
    PHOTONIC = "photonic"
    EXPORT = "export"


class Backend(str, Enum):
    QUBIT = "qubit"
    PHOTONIC = "photonic"


class CliConfig(BaseModel):
    command: Command
    nucleon: NucleonKind = NucleonKind.PROTON
    backend: Backend = Backend.QUBIT
    level: DecompositionLevel | None = None
    tolerance: float = settings.TOLERANCE
    output: str | None = None

    @model_validator(mode="after")
    def _combinations(self):
        if self.backend == Backend.PHOTONIC:
            if self.nucleon != NucleonKind.PROTON:
                raise ValueError("el backend fotónico solo prepara el protón")
            if self.level is not None:
                raise ValueError("--level solo aplica al backend de qubits")
        if not math.isfinite(self.tolerance) or self.tolerance <= 0:
            raise ValueError("--tolerance debe ser un número finito y positivo")
        return self

    @property
    def decomposition(self) -> DecompositionLevel:
        return self.level or DecompositionLevel.NATIVE


def make_config(**kwargs) -> CliConfig:
    try:
        return CliConfig(**kwargs)
    except ValidationError as e:
        raise UsageError("; ".join(err["msg"].removeprefix("Value error, ") for err in e.errors()))


@contextmanager
def output_errors(output: str):
    try:
        yield
    except OSError as e:
        raise UsageError(f"no se puede escribir en {output}: {e.strerror or e}")


def emit(lines: list[str], output: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if output:
        with output_errors(output), open(output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        click.echo(text, nl=False)


# opciones compartidas
nucleon_option = click.option(
    "--nucleon", type=click.Choice([k.value for k in NucleonKind]), default=NucleonKind.PROTON.value,
)
level_option = click.option(
    "--level", type=click.Choice([lv.value for lv in DecompositionLevel]), default=None,
)
tolerance_option = click.option("--tolerance", type=float, default=settings.TOLERANCE, show_default=True)
output_option = click.option("--output", type=click.Path(dir_okay=False), default=None)

