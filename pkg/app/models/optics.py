from __future__ import annotations

from dataclasses import dataclass
from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.config import settings
from app.core.errors import DimensionError, NonFiniteError, NormalizationError

# posiciones dentro de un triplete de modos (i, j, k) = (1,2,3) o (4,5,6)
MODE_LABELS = ("i", "j", "k")
Mode = Literal[0, 1, 2]


class BeamSplitter(BaseModel):
    """BS_mn(omega) = cos(omega) sigma_x + sin(omega) sigma_z sobre los modos (m, n)."""

    model_config = ConfigDict(frozen=True)

    type: Literal["BS"] = "BS"
    modes: tuple[Mode, Mode]
    omega: float

    @model_validator(mode="after")
    def _distinct(self) -> BeamSplitter:
        if self.modes[0] == self.modes[1]:
            raise ValueError("El divisor de haz necesita dos modos distintos")
        return self


class PhaseShifter(BaseModel):
    model_config = ConfigDict(frozen=True)

    type: Literal["PS"] = "PS"
    mode: Mode
    phi: float


OpticalElement = Annotated[Union[BeamSplitter, PhaseShifter], Field(discriminator="type")]


class Interferometer(BaseModel):
    """Elementos en orden de aplicación (el primero actúa primero)."""

    model_config = ConfigDict(frozen=True)

    elements: tuple[OpticalElement, ...] = ()

    @classmethod
    def from_operator_order(cls, factors: list[BeamSplitter | PhaseShifter]) -> Interferometer:
        return cls(elements=tuple(reversed(factors)))


def _checked(a, shape: tuple[int, ...]) -> np.ndarray:
    arr = np.array(a, dtype=np.complex128)
    if arr.shape != shape:
        raise DimensionError(f"Forma {arr.shape}, se esperaba {shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("Se han encontrado valores NaN/Inf")
    norm2 = float(np.sum(np.abs(arr) ** 2))
    if abs(norm2 - 1.0) >= settings.TOLERANCE:
        raise NormalizationError(f"Norma^2 = {norm2!r}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TripletAmplitudes:
    """Un fotón repartido entre los modos (i, j, k) de un triplete."""

    amplitudes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", _checked(self.amplitudes, (3,)))


@dataclass(frozen=True, eq=False)
class TwoPhotonState:
    """
    grid[m, n]: fotón A en el modo m del triplete de sabor y fotón B en el modo n
    del de espín. Un fotón por triplete por construcción.
    """

    grid: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "grid", _checked(self.grid, (3, 3)))

    def support(self, tol: float | None = None) -> int:
        threshold = settings.DUMP_THRESHOLD if tol is None else tol
        return int(np.count_nonzero(np.abs(self.grid) >= threshold))
