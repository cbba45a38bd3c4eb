"""
Formato de fichero de circuito (JSON Lines, UTF-8):

    {"version": "1", "qubits": 6}
    {"gate": "H", "params": [], "controls": [], "targets": [2]}
    {"gate": "CNOT", "params": [], "controls": [{"q": 2, "pol": 1}], "targets": [5]}

Orden de campos fijo, índices 1-based, floats con 17 cifras significativas.
"""
import json

from pydantic import ValidationError

from app.core.config import fmt
from app.core.errors import CircuitParseError
from app.models.gates import Circuit, ControlSpec, GateOp
from app.schemas.circuit import CircuitHeader, GateRecord

FORMAT_VERSION = "1"


def _op_line(op: GateOp) -> str:
    params = ", ".join(fmt(p) for p in op.params)
    controls = ", ".join(f'{{"q": {c.qubit}, "pol": {c.polarity}}}' for c in op.controls)
    targets = ", ".join(str(t) for t in op.targets)
    return (
        f'{{"gate": {json.dumps(op.kind.value)}, "params": [{params}], '
        f'"controls": [{controls}], "targets": [{targets}]}}'
    )


def serialize(circuit: Circuit) -> str:
    lines = [f'{{"version": {json.dumps(FORMAT_VERSION)}, "qubits": {circuit.num_qubits}}}']
    lines += [_op_line(op) for op in circuit.ops]
    return "\n".join(lines) + "\n"


def _field(err: ValidationError) -> str | None:
    loc = err.errors()[0].get("loc") or ()
    return str(loc[0]) if loc else None


def _check_json(line_no: int, raw: str) -> None:
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise CircuitParseError(line_no, None, f"JSON inválido ({e.msg}, columna {e.colno})")
    if not isinstance(data, dict):
        raise CircuitParseError(line_no, None, "se esperaba un objeto")


def parse(text: str) -> Circuit:
    numbered = [(i, raw) for i, raw in enumerate(text.splitlines(), start=1) if raw.strip()]
    if not numbered:
        raise CircuitParseError(1, None, "falta la cabecera")

    line_no, raw = numbered[0]
    try:
        _check_json(line_no, raw)
        header = CircuitHeader.model_validate_json(raw)
    except ValidationError as e:
        raise CircuitParseError(line_no, _field(e), e.errors()[0]["msg"])

    ops: list[GateOp] = []
    for line_no, raw in numbered[1:]:
        try:
            _check_json(line_no, raw)
            rec = GateRecord.model_validate_json(raw)
            op = GateOp(
                kind=rec.gate,
                params=tuple(rec.params),
                controls=tuple(ControlSpec(qubit=c.q, polarity=c.pol) for c in rec.controls),
                targets=tuple(rec.targets),
            )
        except ValidationError as e:
            raise CircuitParseError(line_no, _field(e), e.errors()[0]["msg"])

        bad = [q for q in op.qubits if q > header.qubits]
        if bad:
            raise CircuitParseError(line_no, "targets" if bad[0] in op.targets else "controls",
                                    f"qubits {bad} fuera de un registro de {header.qubits}")
        ops.append(op)

    return Circuit(num_qubits=header.qubits, ops=tuple(ops))


def write_circuit(circuit: Circuit, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize(circuit))

