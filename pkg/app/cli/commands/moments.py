import click

from app.cli.deps import Command, emit, make_config, output_option
from app.core.config import fmt
from app.models.quarks import NucleonKind
from app.services import nucleon


@click.command("moments")
@output_option
def moments(**opts):
    """Momentos magnéticos en unidades de mu_d."""
    cfg = make_config(command=Command.MOMENTS, **opts)
    rep = nucleon.moments()

    lines = [
        f"proton={fmt(rep.proton_moment)}",
        f"neutron={fmt(rep.neutron_moment)}",
        f"ratio={fmt(rep.ratio)}",
    ]
    for kind in NucleonKind:
        terms = nucleon.quark_moment_terms(nucleon.nucleon_state(kind))
        lines.append(f"{kind.value}_quark_terms=" + ",".join(fmt(t) for t in terms))
    lines.append(f"max_backend_deviation={fmt(rep.max_backend_deviation)}")
    emit(lines, cfg.output)
