from collections import Counter

from app.core.errors import ResourceLevelError
from app.models.gates import Circuit, GateKind
from app.schemas.resources import ResourceLevel, ResourceReport


def count_resources(circuit: Circuit, level: ResourceLevel = ResourceLevel.NATIVE) -> ResourceReport:
    """
    Clasifica por aridad total (controles + targets). En ``native`` CR cuenta
    como puerta de dos qubits y CCNOT como de tres.
    """
    level = ResourceLevel(level)
    arity = Counter()
    by_kind = Counter()
    for pos, op in enumerate(circuit.ops):
        if level == ResourceLevel.TWO_QUBIT_ONLY and op.arity >= 3:
            raise ResourceLevelError(
                f"op {pos} ({op.kind.value}) usa {op.arity} qubits; expande el circuito antes"
            )
        arity[min(op.arity, 3)] += 1
        by_kind[op.kind.value] += 1

    return ResourceReport(
        level=level,
        single_qubit=arity[1],
        two_qubit=arity[2],
        three_qubit=arity[3],
        by_kind={k.value: by_kind[k.value] for k in GateKind if by_kind[k.value]},
        total=len(circuit.ops),
    )
