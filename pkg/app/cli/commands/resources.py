import click

from app.cli.deps import Command, emit, make_config, nucleon_option, output_option
from app.models.gates import DecompositionLevel
from app.schemas.resources import ResourceLevel, ResourceReport
from app.services import nucleon, rewrites
from app.services.resources import count_resources


def _breakdown(rep: ResourceReport) -> list[str]:
    return [
        f"single-qubit={rep.single_qubit}",
        f"two-qubit={rep.two_qubit}",
        f"three-qubit={rep.three_qubit}",
        "by-kind=" + ",".join(f"{k}:{v}" for k, v in rep.by_kind.items()),
        f"total={rep.total}",
    ]


@click.command("resources")
@nucleon_option
@click.option("--level", type=click.Choice([lv.value for lv in ResourceLevel]), default=None)
@output_option
def resources(level, **opts):
    """Recuento de puertas del protocolo (por defecto, ambos niveles)."""
    cfg = make_config(command=Command.RESOURCES, **opts)
    levels = [ResourceLevel(level)] if level else list(ResourceLevel)

    lines = []
    for lv in levels:
        lines.append(f"[{lv.value}]")
        if lv == ResourceLevel.TWO_QUBIT_ONLY:
            u = count_resources(rewrites.expand_all(nucleon.build_U()), lv)
            rep = count_resources(nucleon.build_preparation(cfg.nucleon, DecompositionLevel.FULL), lv)
            lines.append(f"U-cnots={u.cnots}")
            lines.append(f"two-qubit-total={rep.two_qubit}")
        else:
            rep = count_resources(nucleon.build_preparation(cfg.nucleon, DecompositionLevel.NATIVE), lv)
            lines.append(f"two-three-total={rep.entangling}")
        lines += _breakdown(rep)
    emit(lines, cfg.output)
