import click

from app.core.errors import QuarkSimError
from app.core.logging import setup_logging

from app.cli.commands.prepare import prepare
from app.cli.commands.verify import verify
from app.cli.commands.moments import moments
from app.cli.commands.resources import resources
from app.cli.commands.photonic import photonic_cmd
from app.cli.commands.export import export


class QuarkSimGroup(click.Group):
    # errores de dominio -> código de salida, nunca un traceback
    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except QuarkSimError as e:
            click.echo(f"error: {e.detail}", err=True)
            ctx.exit(e.exit_code)


@click.group(cls=QuarkSimGroup)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
)
def cli(log_level: str | None):
    """Simulador de circuitos para los estados de espín-sabor del protón y el neutrón."""
    setup_logging(log_level)


cli.add_command(prepare)
cli.add_command(verify)
cli.add_command(moments)
cli.add_command(resources)
cli.add_command(photonic_cmd)
cli.add_command(export)


if __name__ == "__main__":
    cli()
