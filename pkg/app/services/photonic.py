"""
Versión óptico-lineal del protocolo del protón.

Cada triplete de modos (i, j, k) codifica un fotón en la base
{|001>, |010>, |100>}. La calibración (6 asignaciones base->modo x 2 lecturas
del producto de factores) deja una única combinación que reproduce V:
|001> -> i, |010> -> j, |100> -> k, con V_ijk = S_j T_k T_j T_i leído como
producto de operadores (T_i actúa primero). La otra lectura da V^T.
"""
import itertools
import logging
import math

import numpy as np

from app.core.config import tol_or_default
from app.core.errors import NotUnitaryError, UsageError
from app.models.optics import (
    MODE_LABELS,
    BeamSplitter,
    Interferometer,
    PhaseShifter,
    TripletAmplitudes,
    TwoPhotonState,
)
from app.models.quarks import NucleonKind
from app.models.state import Operator, StateVector
from app.schemas.optics import CalibrationCase, ElementRecord, InterferometerDump, LiteralInputCase
from app.services import nucleon, simulator

logger = logging.getLogger(__name__)

I, J, K = 0, 1, 2

# base de un triplete de qubits, en el orden de las filas/columnas de V
TRIPLET_BASIS = ("001", "010", "100")

# resultado de la calibración: BASIS_TO_MODE[b] es el modo que lleva TRIPLET_BASIS[b]
BASIS_TO_MODE = (I, J, K)
ORDERINGS = ("operator", "as-written")
CALIBRATED_ORDERING = "operator"


def element_unitary(e: BeamSplitter | PhaseShifter) -> Operator:
    u = np.eye(3, dtype=np.complex128)
    if isinstance(e, BeamSplitter):
        m, n = e.modes
        c, s = math.cos(e.omega), math.sin(e.omega)
        u[m, m], u[m, n] = s, c
        u[n, m], u[n, n] = c, -s
    else:
        u[e.mode, e.mode] = np.exp(1j * e.phi)
    return Operator(u)


def compose(interferometer: Interferometer) -> Operator:
    """U_n ... U_1: el primer elemento queda a la derecha."""
    u = np.eye(3, dtype=np.complex128)
    for e in interferometer.elements:
        u = element_unitary(e).matrix @ u
    return Operator(u)


def v_reference() -> Operator:
    """V en la base ordenada {|001>, |010>, |100>}; columnas 0 y 1 = |r_A>, |r_S>."""
    s2, s3, s6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)
    return Operator(np.array([
        [0.0, -math.sqrt(2 / 3), 1 / s3],
        [1 / s2, 1 / s6, 1 / s3],
        [-1 / s2, 1 / s6, 1 / s3],
    ], dtype=np.complex128))


def v_factors() -> list[BeamSplitter | PhaseShifter]:
    """[S_j, T_k, T_j, T_i], tal como se escribe el producto V_ijk."""
    t_i = BeamSplitter(modes=(J, K), omega=-math.acos(1 / math.sqrt(3)))
    t_j = BeamSplitter(modes=(I, K), omega=-3 * math.pi / 4)
    t_k = BeamSplitter(modes=(I, J), omega=0.0)
    s_j = PhaseShifter(mode=J, phi=math.pi)
    return [s_j, t_k, t_j, t_i]


def _interferometer(ordering: str) -> Interferometer:
    factors = v_factors()
    if ordering == "operator":
        return Interferometer.from_operator_order(factors)
    return Interferometer(elements=tuple(factors))


def build_v_interferometer() -> Interferometer:
    # orden de aplicación [T_i, T_j, T_k, S_j]
    return _interferometer(CALIBRATED_ORDERING)


def to_basis_matrix(u: Operator, basis_to_mode: tuple[int, int, int] = BASIS_TO_MODE) -> np.ndarray:
    """Matriz en la base {|001>,|010>,|100>} de un unitario escrito en modos."""
    idx = list(basis_to_mode)
    return u.matrix[np.ix_(idx, idx)]


def _labels(assignment: tuple[int, ...]) -> tuple[str, str, str]:
    return tuple(MODE_LABELS[m] for m in assignment)


def calibrate(tol: float | None = None) -> list[CalibrationCase]:
    tol = tol_or_default(tol)
    v = v_reference().matrix
    cases = []
    for ordering in ORDERINGS:
        u = compose(_interferometer(ordering))
        for perm in itertools.permutations(range(3)):
            err = float(np.max(np.abs(to_basis_matrix(u, perm) - v)))
            cases.append(CalibrationCase(
                assignment=_labels(perm), ordering=ordering, max_error=err, match=err < tol,
            ))
    matches = [c for c in cases if c.match]
    logger.debug("Calibración: %d coincidencia(s) de %d", len(matches), len(cases))
    return cases


def path_entangle(a: TripletAmplitudes) -> TwoPhotonState:
    """Correlación de camino: a_m en el modo m de sabor -> entrada (m, m)."""
    return TwoPhotonState(np.diag(a.amplitudes))


def apply_local(u_flavor: Operator, u_spin: Operator, s: TwoPhotonState) -> TwoPhotonState:
    for name, u in (("sabor", u_flavor), ("espín", u_spin)):
        if u.dim != 3 or not u.is_unitary():
            raise NotUnitaryError(f"La transformación de {name} no es un unitario 3x3")
    return TwoPhotonState(u_flavor.matrix @ s.grid @ u_spin.matrix.T)


def decode_to_qubits(s: TwoPhotonState, basis_to_mode: tuple[int, int, int] = BASIS_TO_MODE) -> StateVector:
    amps = np.zeros(64, dtype=np.complex128)
    for b_a, m in enumerate(basis_to_mode):
        for b_b, n in enumerate(basis_to_mode):
            amps[int(TRIPLET_BASIS[b_a] + TRIPLET_BASIS[b_b], 2)] = s.grid[m, n]
    return StateVector(amps)


def psi_plus_input(basis_to_mode: tuple[int, int, int] = BASIS_TO_MODE) -> TripletAmplitudes:
    """Análogo de |psi_+>: el fotón en superposición de los modos de |001> y |010>."""
    a = np.zeros(3, dtype=np.complex128)
    a[basis_to_mode[0]] = a[basis_to_mode[1]] = 1 / math.sqrt(2)
    return TripletAmplitudes(a)


def photonic_v() -> Operator:
    return compose(build_v_interferometer())


def run_photonic_protocol(kind: NucleonKind = NucleonKind.PROTON) -> StateVector:
    if NucleonKind(kind) != NucleonKind.PROTON:
        raise UsageError("El protocolo óptico solo está definido para el protón")
    v = photonic_v()
    state = apply_local(v, v, path_entangle(psi_plus_input()))
    return decode_to_qubits(state)


def literal_input_report() -> list[LiteralInputCase]:
    """
    Entrada literal |psi_2>: fotones en los modos (2,5) y (3,6), es decir en
    j y k de cada triplete. Se prueba con cada asignación base->modo y las
    dos lecturas del producto de factores.
    """
    literal = TripletAmplitudes(np.array([0, 1, 1], dtype=np.complex128) / math.sqrt(2))
    proton = nucleon.nucleon_state(NucleonKind.PROTON)
    out = []
    for ordering in ORDERINGS:
        u = compose(_interferometer(ordering))
        grid = apply_local(u, u, path_entangle(literal))
        for perm in itertools.permutations(range(3)):
            out.append(LiteralInputCase(
                assignment=_labels(perm),
                ordering=ordering,
                fidelity=simulator.fidelity(decode_to_qubits(grid, perm), proton),
            ))
    return out


def interferometer_dump(interferometer: Interferometer | None = None) -> InterferometerDump:
    interferometer = interferometer or build_v_interferometer()
    records = []
    for e in interferometer.elements:
        if isinstance(e, BeamSplitter):
            records.append(ElementRecord(type="BS", modes=[MODE_LABELS[m] for m in e.modes], angle=e.omega))
        else:
            records.append(ElementRecord(type="PS", modes=[MODE_LABELS[e.mode]], angle=e.phi))
    u = compose(interferometer).matrix
    return InterferometerDump(
        elements=records,
        matrix=[(float(z.real), float(z.imag)) for z in u.reshape(-1)],
    )
