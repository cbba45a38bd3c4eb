from enum import Enum

from pydantic import BaseModel, model_validator


class ResourceLevel(str, Enum):
    NATIVE = "native"
    TWO_QUBIT_ONLY = "two-qubit-only"


class ResourceReport(BaseModel):
    level: ResourceLevel
    single_qubit: int
    two_qubit: int
    three_qubit: int          # tres o más qubits
    by_kind: dict[str, int]
    total: int

    @model_validator(mode="after")
    def _check_sum(self):
        if self.single_qubit + self.two_qubit + self.three_qubit != self.total:
            raise ValueError("Las clases no suman el total")
        return self

    @property
    def cnots(self) -> int:
        return self.by_kind.get("CNOT", 0)

    @property
    def entangling(self) -> int:
        return self.two_qubit + self.three_qubit
