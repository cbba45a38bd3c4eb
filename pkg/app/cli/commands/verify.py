import click

from app.cli.deps import Command, emit, make_config, output_option, tolerance_option
from app.core.config import fmt
from app.core.errors import VerificationError
from app.services.checks import run_checks


@click.command("verify")
@tolerance_option
@output_option
def verify(**opts):
    """Ejecuta todas las comprobaciones registradas."""
    cfg = make_config(command=Command.VERIFY, **opts)
    report = run_checks(cfg.tolerance)

    lines = []
    for c in report.checks:
        line = f"{c.status} {c.name} measured={fmt(c.measured)} tolerance={fmt(c.tolerance)}"
        if c.detail:
            line += f" [{c.detail}]"
        lines.append(line)
    lines.append(f"checks={len(report.checks)} failed={len(report.failed)}")
    emit(lines, cfg.output)

    if not report.passed:
        raise VerificationError("comprobaciones fallidas: " + ", ".join(report.failed), report.failed)
