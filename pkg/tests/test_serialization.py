import json
import math

import pytest
from hypothesis import given

from app.core.errors import CircuitParseError
from app.models.gates import Circuit, DecompositionLevel, cr, h, r
from app.models.quarks import NucleonKind
from app.models.state import StateVector
from app.services import gates, nucleon, simulator
from app.services.serialization import parse, serialize, write_circuit
from tests.conftest import circuits

HEADER = '{"version": "1", "qubits": 2}'


def test_empty_circuit_round_trip():
    c = Circuit(num_qubits=3)
    assert serialize(c) == '{"version": "1", "qubits": 3}\n'
    assert parse(serialize(c)) == c


def test_exact_text():
    c = Circuit(num_qubits=2, ops=(h(1), cr((1, 0), 2, math.pi / 4)))
    lines = serialize(c).splitlines()
    assert lines[0] == HEADER
    assert lines[1] == '{"gate": "H", "params": [], "controls": [], "targets": [1]}'
    assert lines[2] == (
        '{"gate": "CR", "params": [0.78539816339744828], '
        '"controls": [{"q": 1, "pol": 0}], "targets": [2]}'
    )


def test_every_line_is_json():
    text = serialize(nucleon.build_preparation(NucleonKind.PROTON, DecompositionLevel.FULL))
    for line in text.splitlines():
        assert isinstance(json.loads(line), dict)


@pytest.mark.parametrize("kind", list(NucleonKind))
def test_round_trip_reproduces_state(kind):
    c = nucleon.build_preparation(kind)
    back = parse(serialize(c))
    assert back == c
    state = gates.run(back, StateVector.zeros(6))
    assert simulator.fidelity(state, nucleon.nucleon_state(kind)) == pytest.approx(1.0, abs=1e-12)


@given(circuits())
def test_round_trip_random(circuit):
    assert parse(serialize(circuit)) == circuit


def test_file_round_trip(tmp_path):
    path = tmp_path / "proton.jsonl"
    c = nucleon.build_preparation(NucleonKind.PROTON, DecompositionLevel.EXPAND_TOFFOLI)
    write_circuit(c, str(path))
    assert parse(path.read_text(encoding="utf-8")) == c


def test_blank_lines_are_skipped():
    text = HEADER + "\n\n" + '{"gate": "X", "params": [], "controls": [], "targets": [2]}\n'
    assert len(parse(text)) == 1


@pytest.mark.parametrize("text, line, field", [
    ("", 1, None),
    ("not json", 1, None),
    ('{"version": "2", "qubits": 2}', 1, "version"),
    (HEADER + '\n{"gate": "CNOT", "params": [], "controls": [{"q": 1, "pol": 1}], "targets": [1]}', 2, None),
    (HEADER + '\n{"gate": "Y", "params": [], "controls": [], "targets": [1]}', 2, "gate"),
    (HEADER + '\n{"gate": "X", "params": [], "controls": [], "targets": [3]}', 2, "targets"),
    (HEADER + '\n{"gate": "X", "params": [], "controls": [{"q": 1, "pol": 2}], "targets": [2]}', 2, "controls"),
    (HEADER + '\n{"gate": "X", "params": [], "controls": [], "targets": [1]}\n{', 3, None),
    ('{"version": "1", "qubits": true}', 1, "qubits"),
    (HEADER + '\n{"gate": "X", "params": [], "controls": [], "targets": [true]}', 2, "targets"),
    (HEADER + '\n{"gate": "R", "params": ["0.5"], "controls": [], "targets": [1]}', 2, "params"),
])
def test_parse_errors(text, line, field):
    with pytest.raises(CircuitParseError) as exc:
        parse(text)
    assert exc.value.line == line
    assert exc.value.field == field
    assert exc.value.exit_code == 2


def test_zero_angle_written_as_integer_round_trips():
    c = Circuit(num_qubits=1, ops=(r(1, 0.0),))
    assert '"params": [0]' in serialize(c)
    assert parse(serialize(c)) == c
