from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from app.core.config import settings
from app.core.errors import (
    DimensionError,
    NonFiniteError,
    NormalizationError,
    NotHermitianError,
)


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("Se han encontrado valores NaN/Inf")
    arr.setflags(write=False)
    return arr


def _num_qubits_for(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if n < 1 or 2**n != dim:
        raise DimensionError(f"La dimensión {dim} no es 2^n con n >= 1")
    return n


@dataclass(frozen=True, eq=False)
class StateVector:
    """
    Estado puro de n qubits.

    Convención de índices: la etiqueta q1 q2 ... qn del ket se lee como binario
    con q1 el bit más significativo, así que |010> es el índice 2.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _frozen(self.amplitudes).reshape(-1)
        _num_qubits_for(amps.size)
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) >= settings.TOLERANCE:
            raise NormalizationError(f"Estado no normalizado: |psi|^2 = {norm2!r}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def num_qubits(self) -> int:
        return _num_qubits_for(self.amplitudes.size)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def basis(cls, bits: str) -> StateVector:
        """|bits> con bits como la cadena del ket, p.ej. '010'."""
        amps = np.zeros(2 ** len(bits), dtype=np.complex128)
        amps[int(bits, 2)] = 1.0
        return cls(amps)

    @classmethod
    def zeros(cls, num_qubits: int) -> StateVector:
        return cls.basis("0" * num_qubits)

    @classmethod
    def from_amplitudes(cls, amps, normalize: bool = False) -> StateVector:
        arr = np.asarray(amps, dtype=np.complex128).reshape(-1)
        if normalize:
            arr = arr / np.linalg.norm(arr)
        return cls(arr)

    def amplitude(self, bits: str) -> complex:
        return complex(self.amplitudes[int(bits, 2)])

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits})"


@dataclass(frozen=True, eq=False)
class Operator:
    """Matriz densa dim x dim (dim = 2^n para qubits, 3 para los modos ópticos)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _frozen(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise DimensionError(f"Se esperaba una matriz cuadrada, forma {m.shape}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def dagger(self) -> Operator:
        return Operator(self.matrix.conj().T)

    def unitarity_error(self) -> float:
        return float(np.max(np.abs(self.matrix.conj().T @ self.matrix - np.eye(self.dim))))

    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    def is_unitary(self, tol: float | None = None) -> bool:
        return self.unitarity_error() < (settings.TOLERANCE if tol is None else tol)

    def is_hermitian(self, tol: float | None = None) -> bool:
        return self.hermiticity_error() < (settings.TOLERANCE if tol is None else tol)

    def __matmul__(self, other: Operator) -> Operator:
        if other.dim != self.dim:
            raise DimensionError(f"Dimensiones incompatibles: {self.dim} vs {other.dim}")
        return Operator(self.matrix @ other.matrix)

    def max_diff(self, other: Operator) -> float:
        if other.dim != self.dim:
            raise DimensionError(f"Dimensiones incompatibles: {self.dim} vs {other.dim}")
        return float(np.max(np.abs(self.matrix - other.matrix)))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"


@dataclass(frozen=True, eq=False, repr=False)
class Observable(Operator):
    """Operador hermítico (p.ej. el momento magnético Xi)."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_hermitian():
            raise NotHermitianError(
                f"Observable no hermítico (error {self.hermiticity_error():.3e})"
            )


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    matrix: np.ndarray

    def __post_init__(self):
        m = _frozen(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"Se esperaba una matriz cuadrada, forma {m.shape}")
        _num_qubits_for(m.shape[0])
        tol = settings.TOLERANCE
        if np.max(np.abs(m - m.conj().T)) >= tol:
            raise NotHermitianError("Matriz densidad no hermítica")
        if abs(np.trace(m) - 1.0) >= tol:
            raise NormalizationError(f"Traza != 1: {np.trace(m)!r}")
        diag = np.diag(m)
        if np.any(diag.real < -tol) or np.any(np.abs(diag.imag) >= tol):
            raise NormalizationError("Diagonal con entradas negativas o complejas")
        object.__setattr__(self, "matrix", m)

    @property
    def num_qubits(self) -> int:
        return _num_qubits_for(self.matrix.shape[0])

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def __repr__(self) -> str:
        return f"DensityMatrix(num_qubits={self.num_qubits})"
