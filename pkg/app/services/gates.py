"""
Librería de puertas y ejecución de circuitos.

Semántica de las matrices locales (sobre el target):
    X = sigma_x, Z = sigma_z, H = (sigma_z + sigma_x)/sqrt2,
    R(z) = sin z sigma_z + cos z sigma_x, W(z) = R(z) sigma_x, WDG(z) = sigma_x R(z).
CNOT/CR/CCNOT son X/R/X con controles.
"""
import logging
import math

import numpy as np

from app.core.config import settings
from app.core.errors import DimensionError, IndexRangeError, RegisterTooLargeError
from app.models.gates import Circuit, GateKind, GateOp
from app.models.state import Operator, StateVector
from app.services import simulator

logger = logging.getLogger(__name__)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
IDENTITY = np.eye(2, dtype=np.complex128)


def pauli_x() -> np.ndarray:
    return SIGMA_X.copy()


def pauli_z() -> np.ndarray:
    return SIGMA_Z.copy()


def hadamard() -> np.ndarray:
    return (SIGMA_Z + SIGMA_X) / math.sqrt(2)


def rotation(zeta: float) -> np.ndarray:
    # hermítica y unitaria: R(z)^2 = I
    return math.sin(zeta) * SIGMA_Z + math.cos(zeta) * SIGMA_X


def w_gate(zeta: float) -> np.ndarray:
    return rotation(zeta) @ SIGMA_X


def w_dagger(zeta: float) -> np.ndarray:
    return SIGMA_X @ rotation(zeta)


def local_matrix(op: GateOp) -> np.ndarray:
    """Factor 2x2 que la puerta aplica sobre su target."""
    kind = op.kind
    if kind in (GateKind.X, GateKind.CNOT, GateKind.CCNOT):
        return pauli_x()
    if kind == GateKind.Z:
        return pauli_z()
    if kind == GateKind.H:
        return hadamard()
    if kind in (GateKind.R, GateKind.CR):
        return rotation(op.params[0])
    if kind == GateKind.W:
        return w_gate(op.params[0])
    if kind == GateKind.WDG:
        return w_dagger(op.params[0])
    raise ValueError(f"Tipo de puerta desconocido: {kind}")


def _check_register(op: GateOp, num_qubits: int) -> None:
    bad = [q for q in op.qubits if q > num_qubits]
    if bad:
        raise IndexRangeError(f"{op.kind.value}: qubits {bad} fuera de un registro de {num_qubits}")


def gate_unitary(op: GateOp, num_qubits: int) -> Operator:
    _check_register(op, num_qubits)
    return simulator.embed(Operator(local_matrix(op)), op.targets, op.controls, num_qubits)


def apply_op(state: StateVector, op: GateOp) -> StateVector:
    _check_register(op, state.num_qubits)
    return simulator.apply_gate(state, Operator(local_matrix(op)), op.targets, op.controls)


def run(circuit: Circuit, state: StateVector) -> StateVector:
    if state.num_qubits != circuit.num_qubits:
        raise DimensionError(
            f"Circuito de {circuit.num_qubits} qubits con un estado de {state.num_qubits}"
        )
    for op in circuit.ops:
        state = apply_op(state, op)
    return state


def run_trace(circuit: Circuit, state: StateVector) -> list[StateVector]:
    """Estados intermedios: trace[k] es el estado justo antes de ops[k]; el último es la salida."""
    if state.num_qubits != circuit.num_qubits:
        raise DimensionError(
            f"Circuito de {circuit.num_qubits} qubits con un estado de {state.num_qubits}"
        )
    trace = [state]
    for op in circuit.ops:
        state = apply_op(state, op)
        trace.append(state)
    return trace


def circuit_unitary(circuit: Circuit) -> Operator:
    n = circuit.num_qubits
    if n > settings.MAX_CIRCUIT_QUBITS:
        raise RegisterTooLargeError(
            f"circuit_unitary limitado a {settings.MAX_CIRCUIT_QUBITS} qubits (pedido {n})"
        )
    u = np.eye(2**n, dtype=np.complex128)
    for op in circuit.ops:
        pairs = [(c.qubit, c.polarity) for c in op.controls]
        u = simulator.apply_tensor(u, local_matrix(op), op.targets, pairs, n)
    return Operator(u)
