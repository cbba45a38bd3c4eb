import math
import os

import hypothesis
import numpy as np
import pytest
from hypothesis import strategies as st

from app.models.gates import PARAM_COUNT, REQUIRED_CONTROLS, Circuit, ControlSpec, GateKind, GateOp
from app.models.state import StateVector

hypothesis.settings.register_profile("dev", deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=300, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))

TOL = 1e-12


def max_diff(a, b) -> float:
    a = getattr(a, "amplitudes", getattr(a, "matrix", a))
    b = getattr(b, "amplitudes", getattr(b, "matrix", b))
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


@st.composite
def gate_ops(draw, num_qubits: int) -> GateOp:
    kinds = [k for k in GateKind if REQUIRED_CONTROLS.get(k, 0) < num_qubits]
    kind = draw(st.sampled_from(kinds))
    n_controls = REQUIRED_CONTROLS.get(kind)
    if n_controls is None:
        # controles extra permitidos en las puertas de un qubit
        n_controls = draw(st.integers(0, min(1, num_qubits - 1)))
    wires = draw(st.permutations(list(range(1, num_qubits + 1))))[: n_controls + 1]
    params = tuple(
        draw(st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False, allow_infinity=False))
        for _ in range(PARAM_COUNT.get(kind, 0))
    )
    controls = tuple(
        ControlSpec(qubit=q, polarity=draw(st.sampled_from([0, 1]))) for q in wires[:n_controls]
    )
    return GateOp(kind=kind, params=params, controls=controls, targets=(wires[n_controls],))


@st.composite
def circuits(draw, max_qubits: int = 4, max_depth: int = 10) -> Circuit:
    n = draw(st.integers(1, max_qubits))
    ops = draw(st.lists(gate_ops(n), max_size=max_depth))
    return Circuit(num_qubits=n, ops=tuple(ops))


@st.composite
def state_vectors(draw, num_qubits: int) -> StateVector:
    dim = 2**num_qubits
    finite = st.floats(-1, 1, allow_nan=False, allow_infinity=False)
    re = np.array(draw(st.lists(finite, min_size=dim, max_size=dim)))
    im = np.array(draw(st.lists(finite, min_size=dim, max_size=dim)))
    amps = re + 1j * im
    hypothesis.assume(np.linalg.norm(amps) > 1e-3)
    return StateVector.from_amplitudes(amps, normalize=True)


@pytest.fixture
def bell_singlet() -> StateVector:
    return StateVector.from_amplitudes([0, 1, -1, 0], normalize=True)
