import pytest

from app.core.errors import ResourceLevelError
from app.models.gates import Circuit, DecompositionLevel, h
from app.models.quarks import NucleonKind
from app.schemas.resources import ResourceLevel
from app.services import nucleon, rewrites
from app.services.resources import count_resources
from app.services.serialization import parse, serialize


def test_expanded_u_uses_six_cnots():
    rep = count_resources(rewrites.expand_all(nucleon.build_U()), ResourceLevel.TWO_QUBIT_ONLY)
    assert rep.cnots == 6
    assert rep.two_qubit == 6
    assert rep.single_qubit == 12


def test_full_protocol_two_qubit_total():
    c = nucleon.build_preparation(NucleonKind.PROTON, DecompositionLevel.FULL)
    rep = count_resources(c, ResourceLevel.TWO_QUBIT_ONLY)
    assert rep.two_qubit == 13
    assert rep.single_qubit == 25
    assert rep.three_qubit == 0
    assert rep.total == 38


def test_native_protocol_entangling_total():
    rep = count_resources(nucleon.build_preparation(NucleonKind.PROTON, DecompositionLevel.NATIVE))
    assert rep.two_qubit == 7
    assert rep.three_qubit == 2
    assert rep.entangling == 9
    assert rep.by_kind == {"H": 3, "Z": 2, "CNOT": 3, "CR": 4, "CCNOT": 2}


def test_neutron_adds_three_single_qubit_gates():
    p = count_resources(nucleon.build_preparation(NucleonKind.PROTON, DecompositionLevel.FULL), ResourceLevel.TWO_QUBIT_ONLY)
    n = count_resources(nucleon.build_preparation(NucleonKind.NEUTRON, DecompositionLevel.FULL), ResourceLevel.TWO_QUBIT_ONLY)
    assert n.single_qubit == p.single_qubit + 3
    assert n.two_qubit == p.two_qubit


def test_two_qubit_only_rejects_toffoli():
    with pytest.raises(ResourceLevelError):
        count_resources(nucleon.build_preparation(NucleonKind.PROTON), ResourceLevel.TWO_QUBIT_ONLY)


def test_empty_circuit():
    rep = count_resources(Circuit(num_qubits=2))
    assert rep.total == 0
    assert rep.by_kind == {}


def test_counts_survive_serialization():
    c = nucleon.build_preparation(NucleonKind.NEUTRON, DecompositionLevel.EXPAND_CR)
    assert count_resources(parse(serialize(c))) == count_resources(c)


def test_single_gate():
    rep = count_resources(Circuit(num_qubits=1, ops=(h(1),)))
    assert (rep.single_qubit, rep.two_qubit, rep.three_qubit) == (1, 0, 0)
