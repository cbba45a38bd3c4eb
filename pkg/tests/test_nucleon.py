import math

import numpy as np
import pytest

from app.models.gates import Circuit, DecompositionLevel, GateKind, x
from app.models.quarks import ComponentStateKind, NucleonKind
from app.models.state import StateVector
from app.services import gates, nucleon, simulator
from tests.conftest import TOL, max_diff

S = nucleon.flavor_spin_state


# --- estados componentes ------------------------------------------------------------

def test_component_amplitudes():
    assert S(ComponentStateKind.P_A).amplitude("010") == pytest.approx(1 / math.sqrt(2))
    assert S(ComponentStateKind.P_A).amplitude("100") == pytest.approx(-1 / math.sqrt(2))
    assert S(ComponentStateKind.P_S).amplitude("001") == pytest.approx(-2 / math.sqrt(6))
    assert S(ComponentStateKind.N_S).amplitude("110") == pytest.approx(-2 / math.sqrt(6))


@pytest.mark.parametrize("n, p", [
    (ComponentStateKind.N_A, ComponentStateKind.P_A),
    (ComponentStateKind.N_S, ComponentStateKind.P_S),
])
def test_flip_symmetry(n, p):
    flip = Circuit(num_qubits=3, ops=(x(1), x(2), x(3)))
    assert max_diff(gates.run(flip, S(n)), S(p)) < TOL


def test_encoding_identity():
    assert max_diff(S(ComponentStateKind.P_A), S(ComponentStateKind.CHI_A)) < TOL
    assert max_diff(S(ComponentStateKind.P_S), S(ComponentStateKind.CHI_S)) < TOL


def test_exchange_symmetry():
    pa, ps = S(ComponentStateKind.P_A), S(ComponentStateKind.P_S)
    assert max_diff(simulator.swap_qubits(pa, 1, 2), -pa.amplitudes) < TOL
    assert max_diff(simulator.swap_qubits(ps, 1, 2), ps) < TOL


@pytest.mark.parametrize("a, b", [
    (ComponentStateKind.P_A, ComponentStateKind.P_S),
    (ComponentStateKind.N_A, ComponentStateKind.N_S),
    (ComponentStateKind.P_A, ComponentStateKind.N_A),
])
def test_orthogonality(a, b):
    assert abs(np.vdot(S(a).amplitudes, S(b).amplitudes)) < TOL


def test_chi_a_single_qubit_purity():
    rho = simulator.partial_trace(S(ComponentStateKind.CHI_A), keep=[1])
    assert simulator.purity(rho) == pytest.approx(0.5)


def test_proton_oracle_amplitudes():
    p = nucleon.nucleon_state(NucleonKind.PROTON)
    assert p.amplitude("010010") == pytest.approx(math.sqrt(2) / 3)
    assert p.amplitude("001001") == pytest.approx(math.sqrt(2) / 3)
    assert p.amplitude("010100") == pytest.approx(-1 / (3 * math.sqrt(2)))


# --- U ----------------------------------------------------------------------------------

def test_u_gate_sequence():
    ops = nucleon.build_U().ops
    assert [op.kind for op in ops] == [
        GateKind.CR, GateKind.H, GateKind.CNOT, GateKind.Z, GateKind.CCNOT, GateKind.CR,
    ]
    assert ops[0].params == (nucleon.THETA,)
    assert ops[-1].params == (nucleon.PHI,)
    assert [(c.qubit, c.polarity) for c in ops[2].controls] == [(2, 0)]


def test_u_maps_000_to_pa():
    out = gates.run(nucleon.build_U(), StateVector.zeros(3))
    assert max_diff(out, S(ComponentStateKind.P_A)) < TOL


def test_u_maps_010_to_minus_ps():
    out = gates.run(nucleon.build_U(), StateVector.basis("010"))
    ps = S(ComponentStateKind.P_S)
    assert simulator.phase_equivalent(out, ps)
    assert abs(simulator.relative_phase(out, ps) + 1) < TOL


def test_u_tail_redundant_on_000():
    short = Circuit(num_qubits=3, ops=nucleon.build_U().ops[:4])
    out = gates.run(short, StateVector.zeros(3))
    assert simulator.fidelity(out, S(ComponentStateKind.P_A)) == pytest.approx(1.0, abs=TOL)


def test_transform_contract():
    mappings = nucleon.verify_transform_contract()
    assert len(mappings) == 4
    for m, phase in zip(mappings, [1, -1, 1, -1]):
        assert m.fidelity == pytest.approx(1.0, abs=TOL)
        assert abs(complex(m.phase_re, m.phase_im) - phase) < TOL


# --- preparación --------------------------------------------------------------------------

@pytest.mark.parametrize("kind", list(NucleonKind))
@pytest.mark.parametrize("level", list(DecompositionLevel))
def test_prepare_matches_oracle(kind, level):
    state = nucleon.prepare(kind, level)
    assert 1.0 - simulator.fidelity(state, nucleon.nucleon_state(kind)) < TOL


def test_neutron_ends_with_flavor_flips():
    ops = nucleon.build_preparation(NucleonKind.NEUTRON).ops
    assert [(op.kind, op.targets) for op in ops[-3:]] == [(GateKind.X, (q,)) for q in (1, 2, 3)]


def test_intermediate_state():
    two_step = Circuit(num_qubits=6, ops=nucleon.build_preparation(NucleonKind.PROTON).ops[:2])
    out = gates.run(two_step, StateVector.zeros(6))
    assert max_diff(out, nucleon.protocol_intermediate()) < TOL


@pytest.mark.parametrize("kind", list(NucleonKind))
@pytest.mark.parametrize("level", list(DecompositionLevel))
def test_no_111_support_before_toffoli(kind, level):
    report = nucleon.toffoli_support_report(kind, level)
    assert len(report) == 2
    for s in report:
        assert s.support_123 < TOL
        assert s.support_456 < TOL


# --- matriz densidad reducida -----------------------------------------------------------------

def test_reduced_flavor_check():
    rep = nucleon.reduced_flavor_check()
    assert rep.residual_pA < TOL
    assert rep.residual_pS < TOL
    assert rep.purity == pytest.approx(0.5)
    assert rep.trace == pytest.approx(1.0)
    assert rep.max_imag < TOL


def test_u_diagonalizes_reduced_state():
    assert nucleon.diagonalization_error() < TOL


# --- momentos magnéticos -------------------------------------------------------------------------

def test_observable_on_all_up_uuu():
    xi = nucleon.magnetic_moment_observable()
    assert simulator.expectation(StateVector.zeros(6), xi) == pytest.approx(-6.0)


def test_moments():
    rep = nucleon.moments()
    assert rep.proton_moment == pytest.approx(-3.0, abs=TOL)
    assert rep.neutron_moment == pytest.approx(2.0, abs=TOL)
    assert rep.ratio == pytest.approx(-2 / 3, abs=TOL)
    assert rep.max_backend_deviation < TOL


@pytest.mark.parametrize("kind, total", [(NucleonKind.PROTON, -3.0), (NucleonKind.NEUTRON, 2.0)])
def test_quark_terms_sum_to_moment(kind, total):
    terms = nucleon.quark_moment_terms(nucleon.nucleon_state(kind))
    assert len(terms) == 3
    assert sum(terms) == pytest.approx(total, abs=TOL)
