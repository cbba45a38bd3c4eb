from typing import Literal

from pydantic import BaseModel


class ElementRecord(BaseModel):
    type: Literal["BS", "PS"]
    modes: list[str]
    angle: float          # radianes


class InterferometerDump(BaseModel):
    elements: list[ElementRecord]
    matrix: list[tuple[float, float]]   # (re, im) fila a fila


class CalibrationCase(BaseModel):
    assignment: tuple[str, str, str]    # modo que lleva |001>, |010>, |100>
    ordering: Literal["operator", "as-written"]
    max_error: float
    match: bool


class LiteralInputCase(BaseModel):
    assignment: tuple[str, str, str]
    ordering: Literal["operator", "as-written"]
    fidelity: float
