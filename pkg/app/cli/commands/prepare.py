import click

from app.cli.deps import Backend, Command, emit, level_option, make_config, nucleon_option, output_option, tolerance_option
from app.core.config import fmt
from app.core.errors import VerificationError
from app.services import nucleon, photonic, simulator


@click.command("prepare")
@nucleon_option
@click.option("--backend", type=click.Choice([b.value for b in Backend]), default=Backend.QUBIT.value)
@level_option
@tolerance_option
@output_option
def prepare(**opts):
    """Prepara el estado del nucleón y lo compara con el oráculo."""
    cfg = make_config(command=Command.PREPARE, **opts)

    if cfg.backend == Backend.PHOTONIC:
        state = photonic.run_photonic_protocol(cfg.nucleon)
    else:
        state = nucleon.prepare(cfg.nucleon, cfg.decomposition)

    f = simulator.fidelity(state, nucleon.nucleon_state(cfg.nucleon))
    lines = [f"{r.basis} {fmt(r.re)} {fmt(r.im)}" for r in simulator.state_dump(state)]
    lines.append(f"fidelity_vs_oracle={fmt(f)}")
    emit(lines, cfg.output)

    if f < 1.0 - cfg.tolerance:
        raise VerificationError(f"fidelidad {fmt(f)} por debajo de 1 - {fmt(cfg.tolerance)}")
