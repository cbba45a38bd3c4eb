from __future__ import annotations

import math
from enum import Enum
from typing import Literal, Sequence

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator


class GateKind(str, Enum):
    X = "X"
    Z = "Z"
    H = "H"
    R = "R"          # R(z) = sin z sigma_z + cos z sigma_x
    W = "W"          # W(z) = R(z) sigma_x
    WDG = "WDG"      # W(z)^dagger = sigma_x R(z)
    CNOT = "CNOT"
    CR = "CR"
    CCNOT = "CCNOT"


PARAM_COUNT: dict[GateKind, int] = {
    GateKind.R: 1,
    GateKind.W: 1,
    GateKind.WDG: 1,
    GateKind.CR: 1,
}

# controles exactos exigidos; el resto admite 0 o más
REQUIRED_CONTROLS: dict[GateKind, int] = {
    GateKind.CNOT: 1,
    GateKind.CR: 1,
    GateKind.CCNOT: 2,
}


class ControlSpec(BaseModel):
    """polarity=1: dispara con |1> (punto lleno); polarity=0: con |0> (punto vacío, j barra)."""

    model_config = ConfigDict(frozen=True)

    qubit: int = Field(ge=1)
    polarity: Literal[0, 1] = 1


class GateOp(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: GateKind
    params: tuple[float, ...] = ()
    controls: tuple[ControlSpec, ...] = ()
    targets: tuple[int, ...]

    @model_validator(mode="after")
    def _check_arity(self) -> GateOp:
        expected = PARAM_COUNT.get(self.kind, 0)
        if len(self.params) != expected:
            raise ValueError(f"{self.kind.value} espera {expected} parámetro(s), recibidos {len(self.params)}")
        if any(not math.isfinite(p) for p in self.params):
            raise ValueError("Parámetros no finitos")

        if len(self.targets) != 1:
            raise ValueError(f"{self.kind.value} actúa sobre un único target")
        if any(t < 1 for t in self.targets):
            raise ValueError("Los índices de qubit empiezan en 1")

        required = REQUIRED_CONTROLS.get(self.kind)
        if required is not None and len(self.controls) != required:
            raise ValueError(f"{self.kind.value} espera {required} control(es), recibidos {len(self.controls)}")

        control_qubits = [c.qubit for c in self.controls]
        if len(set(control_qubits)) != len(control_qubits):
            raise ValueError("Qubits de control repetidos")
        if set(control_qubits) & set(self.targets):
            raise ValueError("Controles y targets se solapan")
        return self

    @property
    def qubits(self) -> tuple[int, ...]:
        return tuple(c.qubit for c in self.controls) + self.targets

    @property
    def arity(self) -> int:
        return len(self.controls) + len(self.targets)

    def relabel(self, mapping: dict[int, int]) -> GateOp:
        return GateOp(
            kind=self.kind,
            params=self.params,
            controls=tuple(ControlSpec(qubit=mapping[c.qubit], polarity=c.polarity) for c in self.controls),
            targets=tuple(mapping[t] for t in self.targets),
        )


class Circuit(BaseModel):
    """
    Secuencia de puertas en orden de aplicación: ops[0] se aplica primero.

    Las fórmulas escritas como producto de operadores (factor de la derecha
    primero) se invierten solo en ``from_operator_order``.
    """

    model_config = ConfigDict(frozen=True)

    num_qubits: PositiveInt
    ops: tuple[GateOp, ...] = ()

    @model_validator(mode="after")
    def _check_indices(self) -> Circuit:
        for pos, op in enumerate(self.ops):
            bad = [q for q in op.qubits if q > self.num_qubits]
            if bad:
                raise ValueError(f"op {pos}: qubits {bad} fuera de rango (n={self.num_qubits})")
        return self

    @classmethod
    def from_operator_order(cls, num_qubits: int, factors: Sequence[GateOp]) -> Circuit:
        # único punto donde se pasa de orden de operadores a orden de aplicación
        return cls(num_qubits=num_qubits, ops=tuple(reversed(tuple(factors))))

    def __add__(self, other: Circuit) -> Circuit:
        n = max(self.num_qubits, other.num_qubits)
        return Circuit(num_qubits=n, ops=self.ops + other.ops)

    def __len__(self) -> int:
        return len(self.ops)

    def embed(self, num_qubits: int, qubits: Sequence[int]) -> Circuit:
        """Recoloca el circuito: el qubit k pasa a ser qubits[k-1] de un registro de num_qubits."""
        mapping = {k + 1: q for k, q in enumerate(qubits)}
        return Circuit(num_qubits=num_qubits, ops=tuple(op.relabel(mapping) for op in self.ops))



# Constructores cortos, con la notación de los circuitos: CNOT_(j)k, CCNOT_(3 2barra)1 ...

def _ctrl(spec: int | tuple[int, int]) -> ControlSpec:
    if isinstance(spec, tuple):
        return ControlSpec(qubit=spec[0], polarity=spec[1])
    return ControlSpec(qubit=spec, polarity=1)


def x(target: int) -> GateOp:
    return GateOp(kind=GateKind.X, targets=(target,))


def z(target: int) -> GateOp:
    return GateOp(kind=GateKind.Z, targets=(target,))


def h(target: int) -> GateOp:
    return GateOp(kind=GateKind.H, targets=(target,))


def r(target: int, zeta: float) -> GateOp:
    return GateOp(kind=GateKind.R, params=(zeta,), targets=(target,))


def w(target: int, zeta: float) -> GateOp:
    return GateOp(kind=GateKind.W, params=(zeta,), targets=(target,))


def wdg(target: int, zeta: float) -> GateOp:
    return GateOp(kind=GateKind.WDG, params=(zeta,), targets=(target,))


def cnot(control: int | tuple[int, int], target: int) -> GateOp:
    return GateOp(kind=GateKind.CNOT, controls=(_ctrl(control),), targets=(target,))


def cr(control: int | tuple[int, int], target: int, zeta: float) -> GateOp:
    return GateOp(kind=GateKind.CR, params=(zeta,), controls=(_ctrl(control),), targets=(target,))


def ccnot(c1: int | tuple[int, int], c2: int | tuple[int, int], target: int) -> GateOp:
    return GateOp(kind=GateKind.CCNOT, controls=(_ctrl(c1), _ctrl(c2)), targets=(target,))


class DecompositionLevel(str, Enum):
    NATIVE = "native"
    EXPAND_CR = "expand-cr"
    EXPAND_TOFFOLI = "expand-toffoli"
    FULL = "full"
