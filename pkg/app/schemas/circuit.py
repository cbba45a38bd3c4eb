from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from app.models.gates import GateKind


class CircuitHeader(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    version: Literal["1"]
    qubits: PositiveInt


class ControlRecord(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    q: int = Field(ge=1)
    pol: Literal[0, 1]


class GateRecord(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    gate: GateKind
    params: list[float] = []
    controls: list[ControlRecord] = []
    targets: list[int]
