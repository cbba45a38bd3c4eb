import click

from app.cli.deps import Command, emit, make_config, output_option, tolerance_option
from app.core.config import fmt
from app.core.errors import VerificationError
from app.models.quarks import NucleonKind
from app.schemas.optics import InterferometerDump
from app.services import nucleon, photonic, simulator


def dump_lines(dump: InterferometerDump) -> list[str]:
    lines = [f"{e.type} {','.join(e.modes)} {fmt(e.angle)}" for e in dump.elements]
    lines.append("matrix")
    lines += [f"{fmt(re)} {fmt(im)}" for re, im in dump.matrix]
    return lines


@click.command("photonic")
@tolerance_option
@output_option
def photonic_cmd(**opts):
    """Calibración del interferómetro y protocolo óptico del protón."""
    cfg = make_config(command=Command.PHOTONIC, **opts)

    lines = ["[calibration]"]
    for c in photonic.calibrate():
        lines.append(f"{'/'.join(c.assignment)} {c.ordering} max_error={fmt(c.max_error)} match={c.match}")

    lines.append("[interferometer]")
    lines += dump_lines(photonic.interferometer_dump())

    state = photonic.run_photonic_protocol()
    f = simulator.fidelity(state, nucleon.nucleon_state(NucleonKind.PROTON))
    moment = simulator.expectation(state, nucleon.magnetic_moment_observable())
    lines.append("[protocol]")
    lines.append(f"fidelity_vs_oracle={fmt(f)}")
    lines.append(f"moment={fmt(moment)}")

    lines.append("[literal-psi2]")
    for c in photonic.literal_input_report():
        lines.append(f"{'/'.join(c.assignment)} {c.ordering} fidelity={fmt(c.fidelity)}")
    emit(lines, cfg.output)

    if f < 1.0 - cfg.tolerance:
        raise VerificationError(f"fidelidad {fmt(f)} por debajo de 1 - {fmt(cfg.tolerance)}")
