"""
Registro de comprobaciones para ``verify``.

Cada comprobación mide una desviación (>= 0) y pasa si queda por debajo de la
tolerancia. La simulación en sí usa siempre la tolerancia por defecto; la que
llega aquí solo decide pass/fail.
"""
import itertools
import logging
import math
from typing import Callable

import numpy as np

from app.core.config import settings, tol_or_default
from app.core.errors import QuarkSimError
from app.models.gates import (
    PARAM_COUNT,
    REQUIRED_CONTROLS,
    Circuit,
    ControlSpec,
    DecompositionLevel,
    GateKind,
    GateOp,
    ccnot,
    cr,
)
from app.models.quarks import ComponentStateKind, NucleonKind, QUARK_CONTENT, QuarkFlavor
from app.models.state import StateVector
from app.schemas.report import CheckRecord, VerificationReport
from app.schemas.resources import ResourceLevel
from app.services import gates, nucleon, photonic, quantum_numbers, rewrites, simulator
from app.services.resources import count_resources
from app.services.serialization import parse, serialize

logger = logging.getLogger(__name__)

CheckFn = Callable[[float], list[CheckRecord]]

_REGISTRY: list[tuple[str, CheckFn]] = []

# 12 ángulos, incluidos theta y phi del circuito U
SAMPLE_ANGLES = [nucleon.THETA, nucleon.PHI] + [k * math.pi / 5 - 0.7 for k in range(10)]


def register(name: str) -> Callable[[CheckFn], CheckFn]:
    def deco(fn: CheckFn) -> CheckFn:
        _REGISTRY.append((name, fn))
        return fn
    return deco


def registered() -> list[str]:
    return [name for name, _ in _REGISTRY]


def _record(name: str, measured: float, tol: float, detail: str | None = None) -> CheckRecord:
    return CheckRecord(
        name=name,
        status="pass" if measured < tol else "fail",
        measured=measured,
        tolerance=tol,
        detail=detail,
    )


def _exact(name: str, value: int, expected: int, tol: float) -> CheckRecord:
    # recuentos enteros: la tolerancia numérica no aplica
    return CheckRecord(
        name=name,
        status="pass" if value == expected else "fail",
        measured=float(value),
        tolerance=tol,
        detail=f"esperado {expected}",
    )


# --- preparación -------------------------------------------------------------

@register("preparation")
def _preparation(tol: float) -> list[CheckRecord]:
    out = []
    for kind in NucleonKind:
        oracle = nucleon.nucleon_state(kind)
        for level in DecompositionLevel:
            f = simulator.fidelity(nucleon.prepare(kind, level), oracle)
            out.append(_record(f"preparation.{kind.value}.{level.value}", 1.0 - f, tol))
    return out


@register("transform_contract")
def _transform_contract(tol: float) -> list[CheckRecord]:
    expected_phase = [1.0, -1.0, 1.0, -1.0]
    out = []
    for m, phase in zip(nucleon.verify_transform_contract(), expected_phase):
        err = max(1.0 - m.fidelity, abs(complex(m.phase_re, m.phase_im) - phase))
        out.append(_record(f"contract {m.mapping}", err, tol, detail=f"fase {phase:+.0f}"))
    return out


@register("intermediate")
def _intermediate(tol: float) -> list[CheckRecord]:
    two_step = Circuit(num_qubits=6, ops=nucleon.build_preparation(NucleonKind.PROTON).ops[:2])
    state = gates.run(two_step, StateVector.zeros(6))
    f = simulator.fidelity(state, nucleon.protocol_intermediate())
    return [_record("intermediate H2 CNOT(2)5", 1.0 - f, tol)]


@register("bell_entry")
def _bell_entry(tol: float) -> list[CheckRecord]:
    # sin la cola CCNOT, CR_(3)2 la entrada |000> sigue dando |p_A>
    short = Circuit(num_qubits=3, ops=nucleon.build_U().ops[:4])
    f = simulator.fidelity(
        gates.run(short, StateVector.zeros(3)),
        nucleon.flavor_spin_state(ComponentStateKind.P_A),
    )
    return [_record("U tail redundant on |000>", 1.0 - f, tol)]


# --- reescrituras --------------------------------------------------------------

@register("rotation_algebra")
def _rotation_algebra(tol: float) -> list[CheckRecord]:
    sx = gates.pauli_x()
    involution = max(float(np.max(np.abs(gates.rotation(z) @ gates.rotation(z) - np.eye(2)))) for z in SAMPLE_ANGLES)
    halves = max(
        float(np.max(np.abs(gates.rotation(z / 2) @ sx @ gates.rotation(z / 2) - gates.rotation(z))))
        for z in SAMPLE_ANGLES
    )
    hadamard = float(np.max(np.abs(gates.hadamard() - gates.rotation(math.pi / 4))))
    return [
        _record("R(z)^2 = I", involution, tol),
        _record("R(z/2) X R(z/2) = R(z)", halves, tol),
        _record("H = R(pi/4)", hadamard, tol),
    ]


@register("cr_identity")
def _cr_identity(tol: float) -> list[CheckRecord]:
    err = 0.0
    for z in SAMPLE_ANGLES:
        c = Circuit(num_qubits=2, ops=(cr(1, 2, z),))
        err = max(err, gates.circuit_unitary(c).max_diff(gates.circuit_unitary(rewrites.expand_cr(c))))
    return [_record("CR = R(z/2) CNOT R(z/2)", err, tol, detail=f"{len(SAMPLE_ANGLES)} ángulos")]


def toffoli_relabelings() -> list[tuple[int, int, int]]:
    """(activo, inactivo, target) para las 6 permutaciones de (3, 2, 1)."""
    return list(itertools.permutations((3, 2, 1)))


def toffoli_diff(active: int, inactive: int, target: int, tol: float | None = None) -> dict[int, complex | None]:
    exact = Circuit(num_qubits=3, ops=(ccnot(active, (inactive, 0), target),))
    congruent = rewrites.expand_ccnot_congruent(exact)
    diff = rewrites.truth_table_diff(gates.circuit_unitary(congruent), gates.circuit_unitary(exact), tol)
    return rewrites.phase_flips(diff, tol)


@register("congruent_toffoli")
def _congruent_toffoli(tol: float) -> list[CheckRecord]:
    out = []
    for active, inactive, target in toffoli_relabelings():
        flips = toffoli_diff(active, inactive, target, tol)
        if set(flips) == {7} and flips[7] is not None:
            err = abs(flips[7] + 1.0)
        else:
            err = math.inf
        detail = ", ".join(
            f"index {i} → {'mismatch' if c is None else format(c.real, '+.0f')}" for i, c in sorted(flips.items())
        )
        out.append(_record(f"congruent CCNOT({active}{inactive}bar){target}", err, tol, detail=detail))

    support = max(
        max(s.support_123, s.support_456)
        for kind in NucleonKind
        for s in nucleon.toffoli_support_report(kind, DecompositionLevel.FULL)
    )
    out.append(_record("|111> support before Toffoli", support, tol))
    return out


def random_circuit(rng: np.random.Generator, num_qubits: int, depth: int) -> Circuit:
    """Circuito aleatorio sobre la librería completa (controles de polaridad aleatoria)."""
    kinds = list(GateKind)
    ops = []
    for _ in range(depth):
        kind = kinds[rng.integers(len(kinds))]
        wanted = REQUIRED_CONTROLS.get(kind, 0)
        if wanted >= num_qubits:
            kind, wanted = (GateKind.R if kind == GateKind.CR else GateKind.X), 0
        wires = rng.permutation(num_qubits)[: wanted + 1] + 1
        params = tuple(float(rng.uniform(-math.pi, math.pi)) for _ in range(PARAM_COUNT.get(kind, 0)))
        ops.append(GateOp(
            kind=kind,
            params=params,
            controls=tuple(ControlSpec(qubit=int(q), polarity=int(rng.integers(2))) for q in wires[:wanted]),
            targets=(int(wires[wanted]),),
        ))
    return Circuit(num_qubits=num_qubits, ops=tuple(ops))


@register("rewrite_soundness")
def _rewrite_soundness(tol: float) -> list[CheckRecord]:
    rng = np.random.default_rng(settings.RANDOM_SEED)
    err = 0.0
    for _ in range(settings.RANDOM_CIRCUITS):
        c = random_circuit(rng, int(rng.integers(1, 5)), int(rng.integers(1, 12)))
        err = max(err, gates.circuit_unitary(c).max_diff(gates.circuit_unitary(rewrites.expand_cr(c))))
    return [_record("expand_cr preserves unitary", err, tol, detail=f"{settings.RANDOM_CIRCUITS} circuitos")]


# --- recursos y serialización ----------------------------------------------------

@register("resources")
def _resources(tol: float) -> list[CheckRecord]:
    u_full = rewrites.expand_all(nucleon.build_U())
    full = nucleon.build_preparation(NucleonKind.PROTON, DecompositionLevel.FULL)
    native = nucleon.build_preparation(NucleonKind.PROTON, DecompositionLevel.NATIVE)
    return [
        _exact("U CNOT count", count_resources(u_full, ResourceLevel.TWO_QUBIT_ONLY).cnots, 6, tol),
        _exact("two-qubit total", count_resources(full, ResourceLevel.TWO_QUBIT_ONLY).two_qubit, 13, tol),
        _exact("two+three-qubit total", count_resources(native, ResourceLevel.NATIVE).entangling, 9, tol),
    ]


@register("serialization")
def _serialization(tol: float) -> list[CheckRecord]:
    out = []
    for kind in NucleonKind:
        for level in DecompositionLevel:
            c = nucleon.build_preparation(kind, level)
            back = parse(serialize(c))
            same = back == c and count_resources(back) == count_resources(c)
            out.append(_exact(f"round trip {kind.value}.{level.value}", int(same), 1, tol))
    return out


# --- física ---------------------------------------------------------------------

@register("component_states")
def _component_states(tol: float) -> list[CheckRecord]:
    s = nucleon.flavor_spin_state
    flip = Circuit(num_qubits=3, ops=tuple(GateOp(kind=GateKind.X, targets=(q,)) for q in (1, 2, 3)))
    flip_err = max(
        float(np.max(np.abs(gates.run(flip, s(n)).amplitudes - s(p).amplitudes)))
        for n, p in ((ComponentStateKind.N_A, ComponentStateKind.P_A), (ComponentStateKind.N_S, ComponentStateKind.P_S))
    )
    encoding_err = max(
        float(np.max(np.abs(s(ComponentStateKind.P_A).amplitudes - s(ComponentStateKind.CHI_A).amplitudes))),
        float(np.max(np.abs(s(ComponentStateKind.P_S).amplitudes - s(ComponentStateKind.CHI_S).amplitudes))),
    )
    exchange_err = max(
        float(np.max(np.abs(simulator.swap_qubits(s(ComponentStateKind.P_A), 1, 2).amplitudes + s(ComponentStateKind.P_A).amplitudes))),
        float(np.max(np.abs(simulator.swap_qubits(s(ComponentStateKind.P_S), 1, 2).amplitudes - s(ComponentStateKind.P_S).amplitudes))),
    )
    overlap = abs(np.vdot(s(ComponentStateKind.P_A).amplitudes, s(ComponentStateKind.P_S).amplitudes))
    chi_purity = simulator.purity(simulator.partial_trace(s(ComponentStateKind.CHI_A), keep=[1]))
    return [
        _record("flip symmetry n -> p", flip_err, tol),
        _record("encoding p = chi", encoding_err, tol),
        _record("exchange symmetry (1 2)", exchange_err, tol),
        _record("<p_A|p_S> = 0", float(overlap), tol),
        _record("chi_A qubit-1 purity = 1/2", abs(chi_purity - 0.5), tol),
    ]


@register("reduced_density")
def _reduced_density(tol: float) -> list[CheckRecord]:
    rep = nucleon.reduced_flavor_check()
    return [
        _record("rho_123 residual (p_A, 1/2)", rep.residual_pA, tol),
        _record("rho_123 residual (p_S, 1/2)", rep.residual_pS, tol),
        _record("rho_123 purity = 1/2", abs(rep.purity - 0.5), tol),
        _record("rho_123 trace = 1", abs(rep.trace - 1.0), tol),
        _record("rho_123 real entries", rep.max_imag, tol),
        _record("U diagonalizes rho_123", nucleon.diagonalization_error(), tol),
    ]


@register("moments")
def _moments(tol: float) -> list[CheckRecord]:
    rep = nucleon.moments()
    return [
        _record("proton moment = -3 mu_d", abs(rep.proton_moment + 3.0), tol),
        _record("neutron moment = +2 mu_d", abs(rep.neutron_moment - 2.0), tol),
        _record("ratio = -2/3", abs(rep.ratio + 2 / 3), tol),
        _record("oracle vs circuits", rep.max_backend_deviation, tol),
    ]


@register("quantum_numbers")
def _quantum_numbers(tol: float) -> list[CheckRecord]:
    out = [
        _record(f"Gell-Mann-Nishijima {f.value}",
                abs(float(quantum_numbers.gell_mann_nishijima_residual(f.numbers))), tol)
        for f in QuarkFlavor
    ]
    for kind, charge in ((NucleonKind.PROTON, 1), (NucleonKind.NEUTRON, 0)):
        c = quantum_numbers.composite_numbers(QUARK_CONTENT[kind])
        out.append(_record(f"{kind.value} B = 1, Q = {charge}", float(abs(c.B - 1) + abs(c.Q - charge)), tol))
    return out


# --- fotónica -------------------------------------------------------------------

@register("photonic")
def _photonic(tol: float) -> list[CheckRecord]:
    v = photonic.v_reference()
    composed = photonic.photonic_v()
    matches = [c for c in photonic.calibrate() if c.match]
    proton = nucleon.nucleon_state(NucleonKind.PROTON)
    optical = photonic.run_photonic_protocol()
    qubit = nucleon.prepare(NucleonKind.PROTON, DecompositionLevel.FULL)
    xi = nucleon.magnetic_moment_observable()
    literal = [c for c in photonic.literal_input_report() if 1.0 - c.fidelity < settings.TOLERANCE]

    elem_err = max(
        photonic.element_unitary(e).unitarity_error() for e in photonic.build_v_interferometer().elements
    )
    return [
        _record("optical elements unitary", elem_err, tol),
        _record("V unitary", v.unitarity_error(), tol),
        _record("interferometer = V", float(np.max(np.abs(photonic.to_basis_matrix(composed) - v.matrix))), tol),
        _exact("calibration unique", len(matches), 1, tol),
        _record("photonic proton fidelity", 1.0 - simulator.fidelity(optical, proton), tol),
        _record("photonic moment = -3 mu_d", abs(simulator.expectation(optical, xi) + 3.0), tol),
        _record("qubit vs photonic backend", 1.0 - simulator.fidelity(optical, qubit), tol),
        _exact("literal |psi_2> assignments giving proton", len(literal), 0, tol),
    ]


def run_checks(tol: float | None = None, only: list[str] | None = None) -> VerificationReport:
    tol = tol_or_default(tol)
    records: list[CheckRecord] = []
    for name, fn in _REGISTRY:
        if only and name not in only:
            continue
        try:
            records += fn(tol)
        except QuarkSimError as e:
            records.append(CheckRecord(name=name, status="fail", measured=math.inf, tolerance=tol, detail=e.detail))
    for rec in records:
        if rec.status == "fail":
            logger.warning("Comprobación fallida: %s (medido %r, tol %r)", rec.name, rec.measured, rec.tolerance)
    return VerificationReport(checks=records)
