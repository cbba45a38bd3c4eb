"""
Estados de espín-sabor de los nucleones y su preparación por circuitos.

Codificación lógica: |u> = |0>, |d> = |1>, |up> = |0>, |down> = |1>.
Qubits 1-3 llevan el sabor y 4-6 el espín.
"""
import logging
import math

import numpy as np

from app.models.gates import (
    Circuit,
    DecompositionLevel,
    GateKind,
    ccnot,
    cnot,
    cr,
    h,
    x,
    z,
)
from app.models.quarks import ComponentStateKind, NucleonKind
from app.models.state import DensityMatrix, Observable, Operator, StateVector
from app.schemas.report import ContractMapping, MomentReport, ReducedDensityReport, ToffoliSupport
from app.services import gates, simulator
from app.services.rewrites import apply_level

logger = logging.getLogger(__name__)

THETA = math.acos(-math.sqrt(2 / 3))
PHI = math.pi / 4

FLAVOR = (1, 2, 3)
SPIN = (4, 5, 6)

_S2 = 1 / math.sqrt(2)
_S6 = 1 / math.sqrt(6)

# amplitudes no nulas de cada estado componente
_COMPONENTS: dict[ComponentStateKind, dict[str, float]] = {
    ComponentStateKind.P_A: {"010": _S2, "100": -_S2},
    ComponentStateKind.P_S: {"010": _S6, "100": _S6, "001": -2 * _S6},
    # n = (sigma_x)^3 p
    ComponentStateKind.N_A: {"101": _S2, "011": -_S2},
    ComponentStateKind.N_S: {"101": _S6, "011": _S6, "110": -2 * _S6},
    ComponentStateKind.CHI_A: {"010": _S2, "100": -_S2},
    ComponentStateKind.CHI_S: {"010": _S6, "100": _S6, "001": -2 * _S6},
}

_NUCLEON_PARTS = {
    NucleonKind.PROTON: (ComponentStateKind.P_S, ComponentStateKind.P_A),
    NucleonKind.NEUTRON: (ComponentStateKind.N_S, ComponentStateKind.N_A),
}


def flavor_spin_state(kind: ComponentStateKind) -> StateVector:
    amps = np.zeros(8, dtype=np.complex128)
    for bits, a in _COMPONENTS[ComponentStateKind(kind)].items():
        amps[int(bits, 2)] = a
    return StateVector(amps)


def nucleon_state(kind: NucleonKind) -> StateVector:
    """(|x_S>|chi_S> + |x_A>|chi_A>)/sqrt2 con x = p, n (espín arriba)."""
    sym, anti = _NUCLEON_PARTS[NucleonKind(kind)]
    chi_s = flavor_spin_state(ComponentStateKind.CHI_S).amplitudes
    chi_a = flavor_spin_state(ComponentStateKind.CHI_A).amplitudes
    amps = (
        np.kron(flavor_spin_state(sym).amplitudes, chi_s)
        + np.kron(flavor_spin_state(anti).amplitudes, chi_a)
    ) / math.sqrt(2)
    return StateVector(amps)


def protocol_intermediate() -> StateVector:
    """
    (|000000> + |010010>)/sqrt2, el estado tras H_2 y CNOT_(2)5.

    Es el estado de entrada que se asume para la doble aplicación de U.
    """
    amps = np.zeros(64, dtype=np.complex128)
    amps[int("000000", 2)] = _S2
    amps[int("010010", 2)] = _S2
    return StateVector(amps)


def build_U() -> Circuit:
    """
    U ~ CR_(3)2(phi) CCNOT_(3 2barra)1 Z_1 CNOT_(2barra)1 H_2 CR_(2)3(theta)

    Cumple U|000> = |p_A> y U|010> = -|p_S> (el signo se cancela en el protón).
    """
    return Circuit.from_operator_order(3, [
        cr(3, 2, PHI),
        ccnot(3, (2, 0), 1),
        z(1),
        cnot((2, 0), 1),
        h(2),
        cr(2, 3, THETA),
    ])


def build_preparation(kind: NucleonKind, level: DecompositionLevel = DecompositionLevel.NATIVE) -> Circuit:
    u = build_U()
    circuit = (
        Circuit(num_qubits=6, ops=(h(2), cnot(2, 5)))
        + u.embed(6, FLAVOR)
        + u.embed(6, SPIN)
    )
    if NucleonKind(kind) == NucleonKind.NEUTRON:
        # tres X sobre el sabor (caja discontinua del circuito)
        circuit = circuit + Circuit(num_qubits=6, ops=(x(1), x(2), x(3)))
    return apply_level(circuit, level)


def prepare(kind: NucleonKind, level: DecompositionLevel = DecompositionLevel.NATIVE) -> StateVector:
    return gates.run(build_preparation(kind, level), StateVector.zeros(6))


def _embed_triplet(state3: StateVector, triplet: tuple[int, ...]) -> StateVector:
    # el otro triplete queda en |000>
    zero = StateVector.zeros(3).amplitudes
    if triplet == FLAVOR:
        return StateVector(np.kron(state3.amplitudes, zero))
    return StateVector(np.kron(zero, state3.amplitudes))


def verify_transform_contract() -> list[ContractMapping]:
    u = build_U()
    cases = [
        (FLAVOR, "000", ComponentStateKind.P_A, "|000>_123 -> |p_A>"),
        (FLAVOR, "010", ComponentStateKind.P_S, "|010>_123 -> |p_S>"),
        (SPIN, "000", ComponentStateKind.CHI_A, "|000>_456 -> |chi_A>"),
        (SPIN, "010", ComponentStateKind.CHI_S, "|010>_456 -> |chi_S>"),
    ]
    out = []
    for triplet, bits, target, label in cases:
        state = _embed_triplet(StateVector.basis(bits), triplet)
        result = gates.run(u.embed(6, triplet), state)
        expected = _embed_triplet(flavor_spin_state(target), triplet)
        phase = simulator.relative_phase(result, expected)
        out.append(ContractMapping(
            mapping=label,
            fidelity=simulator.fidelity(result, expected),
            phase_re=phase.real,
            phase_im=phase.imag,
        ))
    return out


def reduced_flavor_state() -> DensityMatrix:
    return simulator.partial_trace(nucleon_state(NucleonKind.PROTON), keep=list(FLAVOR))


def reduced_flavor_check() -> ReducedDensityReport:
    rho = reduced_flavor_state()
    return ReducedDensityReport(
        residual_pA=simulator.eigen_residual(rho, flavor_spin_state(ComponentStateKind.P_A), 0.5),
        residual_pS=simulator.eigen_residual(rho, flavor_spin_state(ComponentStateKind.P_S), 0.5),
        purity=simulator.purity(rho),
        trace=rho.trace(),
        max_imag=float(np.max(np.abs(rho.matrix.imag))),
    )


def diagonalization_error() -> float:
    """
    U^dagger rho_123 U frente a diag(1/2, 0, 1/2, 0, ...): las columnas 0 y 2 de U
    son |p_A> y -|p_S>; el resto es ortogonal a ese plano (entradas "don't care").
    """
    u = gates.circuit_unitary(build_U()).matrix
    rho = reduced_flavor_state().matrix
    expected = np.zeros((8, 8))
    expected[0, 0] = expected[2, 2] = 0.5
    return float(np.max(np.abs(u.conj().T @ rho @ u - expected)))


def magnetic_moment_observable() -> Observable:
    """
    Xi = sum_i (|1><1| - 2|0><0|)_i (x) sigma_z,i+3, en unidades de mu_d (mu_u = -2 mu_d).
    """
    total = np.zeros((64, 64), dtype=np.complex128)
    for term in _moment_terms():
        total += term.matrix
    return Observable(total)


def _moment_terms() -> list[Operator]:
    flavor = np.diag([-2.0, 1.0]).astype(np.complex128)
    local = Operator(np.kron(flavor, gates.pauli_z()))
    return [simulator.embed(local, (i, i + 3), (), 6) for i in FLAVOR]


def quark_moment_terms(state: StateVector) -> list[float]:
    """Contribución de cada quark i: solo intervienen los qubits i e i+3."""
    return [simulator.expectation(state, Observable(t.matrix)) for t in _moment_terms()]


def moments() -> MomentReport:
    xi = magnetic_moment_observable()
    oracle = {k: simulator.expectation(nucleon_state(k), xi) for k in NucleonKind}

    deviation = 0.0
    for kind in NucleonKind:
        for level in DecompositionLevel:
            value = simulator.expectation(prepare(kind, level), xi)
            deviation = max(deviation, abs(value - oracle[kind]))

    return MomentReport(
        proton_moment=oracle[NucleonKind.PROTON],
        neutron_moment=oracle[NucleonKind.NEUTRON],
        max_backend_deviation=deviation,
    )


def toffoli_support_report(
    kind: NucleonKind = NucleonKind.PROTON,
    level: DecompositionLevel = DecompositionLevel.NATIVE,
) -> list[ToffoliSupport]:
    """
    Peso de |111> en cada triplete justo antes de cada CCNOT. Con soporte nulo
    la sustitución por la puerta congruente (fase -1 en |111>) es exacta.

    Para los niveles que ya expanden el Toffoli se mide sobre el circuito
    equivalente sin esa expansión: los estados previos son los mismos.
    """
    level = DecompositionLevel(level)
    if level == DecompositionLevel.EXPAND_TOFFOLI:
        level = DecompositionLevel.NATIVE
    elif level == DecompositionLevel.FULL:
        level = DecompositionLevel.EXPAND_CR

    circuit = build_preparation(kind, level)
    trace = gates.run_trace(circuit, StateVector.zeros(6))
    out = []
    for pos, op in enumerate(circuit.ops):
        if op.kind != GateKind.CCNOT:
            continue
        state = trace[pos]
        out.append(ToffoliSupport(
            position=pos,
            support_123=simulator.support_on(state, FLAVOR, "111"),
            support_456=simulator.support_on(state, SPIN, "111"),
        ))
    return out

