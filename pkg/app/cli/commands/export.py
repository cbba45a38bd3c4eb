import click

from app.cli.commands.photonic import dump_lines
from app.cli.deps import Command, emit, level_option, make_config, nucleon_option, output_errors, output_option
from app.services import nucleon, photonic
from app.services.serialization import serialize, write_circuit


@click.command("export")
@click.option("--format", "fmt_", type=click.Choice(["circuit", "interferometer"]), default="circuit")
@nucleon_option
@level_option
@output_option
def export(fmt_, **opts):
    """Escribe el circuito de preparación o el volcado del interferómetro."""
    cfg = make_config(command=Command.EXPORT, **opts)
    if fmt_ == "interferometer":
        emit(dump_lines(photonic.interferometer_dump()), cfg.output)
        return

    circuit = nucleon.build_preparation(cfg.nucleon, cfg.decomposition)
    if cfg.output:
        with output_errors(cfg.output):
            write_circuit(circuit, cfg.output)
    else:
        click.echo(serialize(circuit), nl=False)
