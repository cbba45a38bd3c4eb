"""
Simulación densa de vectores de estado (n <= 6 en la práctica).

Todas las funciones son puras: reciben valores inmutables y devuelven otros
nuevos. Índices de qubit 1-based, qubit 1 = bit más significativo.
"""
import logging
from typing import Iterable, Sequence

import numpy as np

from app.core.config import settings, tol_or_default
from app.core.errors import (
    DimensionError,
    IndexRangeError,
    NormalizationError,
    NotHermitianError,
    NotUnitaryError,
    OverlapError,
)
from app.models.gates import ControlSpec
from app.models.state import DensityMatrix, Operator, StateVector
from app.schemas.state import AmplitudeRecord

logger = logging.getLogger(__name__)

ControlLike = ControlSpec | tuple[int, int]


def _as_pairs(controls: Iterable[ControlLike]) -> list[tuple[int, int]]:
    out = []
    for c in controls:
        if isinstance(c, ControlSpec):
            out.append((c.qubit, c.polarity))
        else:
            q, p = c
            if p not in (0, 1):
                raise IndexRangeError(f"Polaridad inválida {p} en el control {q}")
            out.append((int(q), int(p)))
    return out


def _validate_wires(num_qubits: int, targets: Sequence[int], controls: list[tuple[int, int]]) -> None:
    wires = list(targets) + [q for q, _ in controls]
    bad = [q for q in wires if q < 1 or q > num_qubits]
    if bad:
        raise IndexRangeError(f"Qubits {bad} fuera de 1..{num_qubits}")
    if not targets:
        raise IndexRangeError("Hace falta al menos un target")
    if len(set(targets)) != len(targets):
        raise OverlapError(f"Targets repetidos: {list(targets)}")
    control_qubits = [q for q, _ in controls]
    if len(set(control_qubits)) != len(control_qubits):
        raise OverlapError(f"Controles repetidos: {control_qubits}")
    if set(control_qubits) & set(targets):
        raise OverlapError(f"Controles {control_qubits} y targets {list(targets)} se solapan")


def apply_tensor(
    block: np.ndarray,
    local: np.ndarray,
    targets: Sequence[int],
    controls: list[tuple[int, int]],
    num_qubits: int,
) -> np.ndarray:
    """
    Núcleo tensorial sin validación. ``block`` es (2^n,) o (2^n, m); en el
    segundo caso se actúa sobre cada columna.
    """
    n = num_qubits
    batch = block.ndim == 2
    psi = block.reshape([2] * n + ([block.shape[1]] if batch else []))
    out = psi.copy()

    idx: list = [slice(None)] * psi.ndim
    for q, p in controls:
        idx[q - 1] = p
    sub = psi[tuple(idx)]

    control_qubits = sorted(q for q, _ in controls)
    axes = [(t - 1) - sum(1 for c in control_qubits if c < t) for t in targets]
    k = len(targets)

    moved = np.moveaxis(sub, axes, list(range(k)))
    shape = moved.shape
    flat = moved.reshape(2**k, -1)
    new = (local @ flat).reshape(shape)
    out[tuple(idx)] = np.moveaxis(new, list(range(k)), axes)
    return out.reshape(block.shape)


def apply_gate(
    state: StateVector,
    local: Operator,
    targets: Sequence[int],
    controls: Iterable[ControlLike] = (),
    tol: float | None = None,
) -> StateVector:
    tol = tol_or_default(tol)
    n = state.num_qubits
    pairs = _as_pairs(controls)
    _validate_wires(n, targets, pairs)
    if local.dim != 2 ** len(targets):
        raise DimensionError(f"Operador local de dim {local.dim} para {len(targets)} target(s)")
    if not local.is_unitary(tol):
        raise NotUnitaryError(f"Operador local no unitario (error {local.unitarity_error():.3e})")

    out = apply_tensor(state.amplitudes, local.matrix, targets, pairs, n)
    norm2 = float(np.vdot(out, out).real)
    if abs(norm2 - 1.0) >= tol:
        raise NormalizationError(f"La norma se ha perdido tras la puerta: {norm2!r}")
    return StateVector(out)


def embed(local: Operator, targets: Sequence[int], controls: Iterable[ControlLike], num_qubits: int) -> Operator:
    """Matriz 2^n x 2^n de ``local`` sobre targets, con controles polarizados."""
    pairs = _as_pairs(controls)
    _validate_wires(num_qubits, targets, pairs)
    if local.dim != 2 ** len(targets):
        raise DimensionError(f"Operador local de dim {local.dim} para {len(targets)} target(s)")
    eye = np.eye(2**num_qubits, dtype=np.complex128)
    return Operator(apply_tensor(eye, local.matrix, targets, pairs, num_qubits))


def partial_trace(state: StateVector, keep: Sequence[int]) -> DensityMatrix:
    n = state.num_qubits
    keep = list(keep)
    if not keep:
        raise IndexRangeError("La lista keep no puede estar vacía")
    if any(q < 1 or q > n for q in keep):
        raise IndexRangeError(f"keep={keep} fuera de 1..{n}")
    if any(b <= a for a, b in zip(keep, keep[1:])):
        raise IndexRangeError(f"keep={keep} debe ser estrictamente creciente")

    psi = state.amplitudes.reshape([2] * n)
    psi = np.moveaxis(psi, [q - 1 for q in keep], list(range(len(keep))))
    m = psi.reshape(2 ** len(keep), -1)
    return DensityMatrix(m @ m.conj().T)


def fidelity(a: StateVector, b: StateVector) -> float:
    if a.dim != b.dim:
        raise DimensionError(f"Dimensiones distintas: {a.num_qubits} vs {b.num_qubits} qubits")
    f = abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2
    return float(min(max(f, 0.0), 1.0))


def expectation(state: StateVector, obs: Operator, tol: float | None = None) -> float:
    tol = tol_or_default(tol)
    if obs.dim != state.dim:
        raise DimensionError(f"Observable de dim {obs.dim} para un estado de dim {state.dim}")
    if not obs.is_hermitian(tol):
        raise NotHermitianError(f"Observable no hermítico (error {obs.hermiticity_error():.3e})")
    value = np.vdot(state.amplitudes, obs.matrix @ state.amplitudes)
    if abs(value.imag) >= tol:
        logger.warning("Parte imaginaria no despreciable en <O>: %r", value.imag)
    return float(value.real)


def relative_phase(a: StateVector, b: StateVector) -> complex:
    """c unitario tal que a ~ c b, tomado de la amplitud de b de mayor módulo."""
    if a.dim != b.dim:
        raise DimensionError(f"Dimensiones distintas: {a.num_qubits} vs {b.num_qubits} qubits")
    k = int(np.argmax(np.abs(b.amplitudes)))
    ratio = a.amplitudes[k] / b.amplitudes[k]
    if abs(ratio) == 0.0:
        return 1.0 + 0j
    return complex(ratio / abs(ratio))


def phase_equivalent(a: StateVector, b: StateVector, tol: float | None = None) -> bool:
    tol = tol_or_default(tol)
    c = relative_phase(a, b)
    return float(np.max(np.abs(a.amplitudes - c * b.amplitudes))) < tol


def purity(rho: DensityMatrix) -> float:
    return float(np.trace(rho.matrix @ rho.matrix).real)


def eigen_residual(rho: DensityMatrix, v: StateVector, lam: float) -> float:
    """||rho v - lam v||; sustituye al eigensolver para los pares (v, lam) conocidos."""
    if v.dim != rho.dim:
        raise DimensionError(f"Vector de dim {v.dim} para una matriz de dim {rho.dim}")
    return float(np.linalg.norm(rho.matrix @ v.amplitudes - lam * v.amplitudes))


def born_probabilities(state: StateVector) -> np.ndarray:
    return np.abs(state.amplitudes) ** 2


def swap_qubits(state: StateVector, a: int, b: int) -> StateVector:
    n = state.num_qubits
    if not (1 <= a <= n and 1 <= b <= n):
        raise IndexRangeError(f"Qubits ({a}, {b}) fuera de 1..{n}")
    psi = np.swapaxes(state.amplitudes.reshape([2] * n), a - 1, b - 1)
    return StateVector(psi.reshape(-1))


def support_on(state: StateVector, qubits: Sequence[int], bits: str) -> float:
    """Probabilidad de encontrar el patrón ``bits`` en los qubits indicados."""
    if len(qubits) != len(bits):
        raise DimensionError("qubits y bits deben tener la misma longitud")
    n = state.num_qubits
    psi = state.amplitudes.reshape([2] * n)
    idx: list = [slice(None)] * n
    for q, bit in zip(qubits, bits):
        if q < 1 or q > n:
            raise IndexRangeError(f"Qubit {q} fuera de 1..{n}")
        idx[q - 1] = int(bit)
    return float(np.sum(np.abs(psi[tuple(idx)]) ** 2))


def state_dump(state: StateVector, threshold: float | None = None) -> list[AmplitudeRecord]:
    threshold = settings.DUMP_THRESHOLD if threshold is None else threshold
    n = state.num_qubits
    return [
        AmplitudeRecord(basis=format(i, f"0{n}b"), re=float(a.real), im=float(a.imag))
        for i, a in enumerate(state.amplitudes)
        if abs(a) >= threshold
    ]
