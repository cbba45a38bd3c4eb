import numpy as np

from app.services import checks, gates, rewrites


def test_all_checks_pass():
    report = checks.run_checks()
    assert report.checks
    assert report.passed, report.failed


def test_registry_names():
    assert {"preparation", "congruent_toffoli", "resources", "moments", "photonic"} <= set(checks.registered())


def test_only_filter():
    report = checks.run_checks(only=["resources"])
    assert len(report.checks) == 3
    assert all(c.status == "pass" for c in report.checks)


def test_tiny_tolerance_fails_some_checks():
    report = checks.run_checks(1e-30)
    assert not report.passed
    # los recuentos enteros no dependen de la tolerancia
    assert "U CNOT count" not in report.failed


def test_congruent_detail_names_index_7():
    records = [c for c in checks.run_checks(only=["congruent_toffoli"]).checks if c.name.startswith("congruent")]
    assert len(records) == 6
    assert all(c.detail == "index 7 → -1" for c in records)


def test_random_circuit_is_deterministic():
    a = checks.random_circuit(np.random.default_rng(7), 3, 8)
    b = checks.random_circuit(np.random.default_rng(7), 3, 8)
    assert a == b


def test_random_circuit_on_one_qubit():
    c = checks.random_circuit(np.random.default_rng(0), 1, 20)
    assert all(op.arity == 1 for op in c.ops)
    assert gates.circuit_unitary(rewrites.expand_cr(c)).max_diff(gates.circuit_unitary(c)) < 1e-12
