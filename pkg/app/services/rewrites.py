"""
Pasadas de reescritura del circuito.

expand_cr:
    CR_(j)k(z) = [1_j (x) R_k(z/2)] CNOT_(j)k [1_j (x) R_k(z/2)]
    (R(z/2) sigma_x R(z/2) = R(z) y R(z/2)^2 = I).

expand_ccnot_congruent:
    X_2 W_1(pi/8) CNOT_(2)1 W_1(pi/8) CNOT_(3)1 W_1^dag(pi/8) CNOT_(2)1 W_1^dag(pi/8) X_2
    leído como producto de operadores (el factor de la derecha se aplica
    primero). Comprobado por fuerza bruta sobre las 8 columnas: con esa
    lectura la tabla de verdad coincide con CCNOT_(3 2barra)1 salvo
    |111> -> -|111>. La lectura inversa (izquierda primero) da en cambio
    |011> -> -|011>, así que no sirve.
"""
import logging
import math

import numpy as np

from app.core.config import tol_or_default
from app.core.errors import DimensionError, UnsupportedPatternError
from app.models.gates import Circuit, DecompositionLevel, GateKind, GateOp, cnot, r, w, wdg, x
from app.models.state import Operator

logger = logging.getLogger(__name__)

TOFFOLI_ANGLE = math.pi / 8

MISMATCH = None


def expand_cr(circuit: Circuit) -> Circuit:
    ops: list[GateOp] = []
    for op in circuit.ops:
        if op.kind != GateKind.CR:
            ops.append(op)
            continue
        half = op.params[0] / 2
        target = op.targets[0]
        ops += [
            r(target, half),
            GateOp(kind=GateKind.CNOT, controls=op.controls, targets=op.targets),
            r(target, half),
        ]
        logger.debug("CR%s -> R, CNOT, R (z/2=%r)", op.qubits, half)
    return Circuit(num_qubits=circuit.num_qubits, ops=tuple(ops))


def congruent_toffoli(active: int, inactive: int, target: int) -> Circuit:
    """
    Secuencia de 9 puertas congruente con CCNOT cuyo control ``active`` dispara
    con |1> e ``inactive`` con |0>. Devuelve un circuito de max(qubits) qubits.
    """
    factors = [
        x(inactive),
        w(target, TOFFOLI_ANGLE),
        cnot(inactive, target),
        w(target, TOFFOLI_ANGLE),
        cnot(active, target),
        wdg(target, TOFFOLI_ANGLE),
        cnot(inactive, target),
        wdg(target, TOFFOLI_ANGLE),
        x(inactive),
    ]
    return Circuit.from_operator_order(max(active, inactive, target), factors)


def _toffoli_pattern(op: GateOp) -> tuple[int, int]:
    on = [c.qubit for c in op.controls if c.polarity == 1]
    off = [c.qubit for c in op.controls if c.polarity == 0]
    if len(on) != 1 or len(off) != 1:
        raise UnsupportedPatternError(
            f"CCNOT{op.qubits}: solo se admite un control activo en |1> y otro en |0>"
        )
    return on[0], off[0]


def expand_ccnot_congruent(circuit: Circuit) -> Circuit:
    ops: list[GateOp] = []
    for op in circuit.ops:
        if op.kind != GateKind.CCNOT:
            ops.append(op)
            continue
        active, inactive = _toffoli_pattern(op)
        ops += congruent_toffoli(active, inactive, op.targets[0]).ops
        logger.debug("CCNOT%s -> secuencia congruente de 9 puertas", op.qubits)
    return Circuit(num_qubits=circuit.num_qubits, ops=tuple(ops))


def expand_all(circuit: Circuit) -> Circuit:
    return expand_ccnot_congruent(expand_cr(circuit))


def truth_table_diff(a: Operator, b: Operator, tol: float | None = None) -> list[tuple[int, complex | None]]:
    """
    Para cada columna i: c si a e_i = c b e_i con |c| = 1, si no MISMATCH (None).
    """
    tol = tol_or_default(tol)
    if a.dim != b.dim:
        raise DimensionError(f"Dimensiones distintas: {a.dim} vs {b.dim}")

    out: list[tuple[int, complex | None]] = []
    for i in range(a.dim):
        col_a, col_b = a.matrix[:, i], b.matrix[:, i]
        k = int(np.argmax(np.abs(col_b)))
        c = col_a[k] / col_b[k]
        if abs(abs(c) - 1.0) < tol and np.max(np.abs(col_a - c * col_b)) < tol:
            out.append((i, complex(c)))
        else:
            out.append((i, MISMATCH))
    return out


def phase_flips(diff: list[tuple[int, complex | None]], tol: float | None = None) -> dict[int, complex | None]:
    """Solo las columnas que no coinciden con fase +1."""
    tol = tol_or_default(tol)
    return {i: c for i, c in diff if c is MISMATCH or abs(c - 1.0) >= tol}


def apply_level(circuit: Circuit, level: DecompositionLevel) -> Circuit:
    level = DecompositionLevel(level)
    if level in (DecompositionLevel.EXPAND_CR, DecompositionLevel.FULL):
        circuit = expand_cr(circuit)
    if level in (DecompositionLevel.EXPAND_TOFFOLI, DecompositionLevel.FULL):
        circuit = expand_ccnot_congruent(circuit)
    return circuit
