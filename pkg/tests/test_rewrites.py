import math

import numpy as np
import pytest
from hypothesis import given, settings as hsettings

from app.core.errors import UnsupportedPatternError
from app.models.gates import Circuit, DecompositionLevel, GateKind, ccnot, cr, h, x
from app.models.state import Operator, StateVector
from app.services import gates, nucleon, rewrites
from app.services.checks import toffoli_diff, toffoli_relabelings
from tests.conftest import TOL, circuits, max_diff


def _unitary(c: Circuit) -> Operator:
    return gates.circuit_unitary(c)


# --- expand_cr ------------------------------------------------------------------------

def test_expand_cr_without_cr_is_identity():
    c = Circuit(num_qubits=2, ops=(h(1), x(2)))
    assert rewrites.expand_cr(c) == c


def test_expand_cr_shape():
    out = rewrites.expand_cr(Circuit(num_qubits=2, ops=(cr((1, 0), 2, math.pi / 3),)))
    assert [op.kind for op in out.ops] == [GateKind.R, GateKind.CNOT, GateKind.R]
    assert out.ops[0].params == (math.pi / 6,)
    assert out.ops[1].controls[0].polarity == 0


@pytest.mark.parametrize("zeta", [nucleon.THETA, nucleon.PHI, math.pi / 3, -1.2])
def test_expand_cr_single_gate(zeta):
    c = Circuit(num_qubits=2, ops=(cr(1, 2, zeta),))
    assert _unitary(rewrites.expand_cr(c)).max_diff(_unitary(c)) < TOL


@hsettings(max_examples=120)
@given(circuits())
def test_expand_cr_preserves_unitary(circuit):
    assert _unitary(rewrites.expand_cr(circuit)).max_diff(_unitary(circuit)) < TOL


# --- Toffoli congruente -----------------------------------------------------------------

def test_expand_ccnot_without_ccnot_is_identity():
    c = Circuit(num_qubits=3, ops=(cr(1, 2, 0.5),))
    assert rewrites.expand_ccnot_congruent(c) == c


def test_congruent_toffoli_has_nine_gates():
    c = rewrites.congruent_toffoli(3, 2, 1)
    assert len(c) == 9
    assert sum(op.kind == GateKind.CNOT for op in c.ops) == 3


def test_congruent_toffoli_flips_only_111():
    flips = toffoli_diff(3, 2, 1)
    assert set(flips) == {7}
    assert abs(flips[7] + 1) < TOL


@pytest.mark.parametrize("active, inactive, target", toffoli_relabelings())
def test_congruence_under_relabeling(active, inactive, target):
    flips = toffoli_diff(active, inactive, target)
    assert set(flips) == {7}
    assert abs(flips[7] + 1) < TOL


def test_reversed_reading_flips_011():
    # la secuencia leída de izquierda a derecha no sirve
    as_written = Circuit(num_qubits=3, ops=tuple(reversed(rewrites.congruent_toffoli(3, 2, 1).ops)))
    exact = Circuit(num_qubits=3, ops=(ccnot(3, (2, 0), 1),))
    diff = rewrites.truth_table_diff(_unitary(as_written), _unitary(exact))
    flips = rewrites.phase_flips(diff)
    assert set(flips) == {3}
    assert abs(flips[3] + 1) < TOL


def test_congruent_toffoli_on_zero_support_state_is_exact():
    c = Circuit(num_qubits=3, ops=(h(3), ccnot(3, (2, 0), 1)))
    expanded = rewrites.expand_ccnot_congruent(c)
    a = gates.run(c, StateVector.zeros(3))
    b = gates.run(expanded, StateVector.zeros(3))
    assert max_diff(a, b) < TOL


def test_unsupported_polarity_pattern():
    c = Circuit(num_qubits=3, ops=(ccnot(3, 2, 1),))
    with pytest.raises(UnsupportedPatternError):
        rewrites.expand_ccnot_congruent(c)


# --- diff y niveles ----------------------------------------------------------------------

def test_truth_table_diff_identical():
    u = _unitary(nucleon.build_U())
    assert all(abs(c - 1) < TOL for _, c in rewrites.truth_table_diff(u, u))


def test_truth_table_diff_mismatch():
    a = Operator(gates.pauli_x())
    b = Operator(gates.pauli_z())
    assert [c for _, c in rewrites.truth_table_diff(a, b)] == [rewrites.MISMATCH, rewrites.MISMATCH]


def test_truth_table_diff_phase():
    a = Operator(np.diag([1, -1]))
    flips = rewrites.phase_flips(rewrites.truth_table_diff(a, Operator(np.eye(2))))
    assert list(flips) == [1]


@pytest.mark.parametrize("level, has_cr, has_ccnot", [
    (DecompositionLevel.NATIVE, True, True),
    (DecompositionLevel.EXPAND_CR, False, True),
    (DecompositionLevel.EXPAND_TOFFOLI, True, False),
    (DecompositionLevel.FULL, False, False),
])
def test_apply_level(level, has_cr, has_ccnot):
    kinds = {op.kind for op in rewrites.apply_level(nucleon.build_U(), level).ops}
    assert (GateKind.CR in kinds) == has_cr
    assert (GateKind.CCNOT in kinds) == has_ccnot
