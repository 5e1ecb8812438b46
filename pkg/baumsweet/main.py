import logging

import click

from baumsweet import __version__
from baumsweet.cli.commands import automaton
from baumsweet.cli.commands import gen
from baumsweet.cli.commands import invert
from baumsweet.cli.commands import kernel
from baumsweet.cli.commands import linrep
from baumsweet.cli.commands import verify
from baumsweet.cli.commands import words
from baumsweet.core.config import settings

# Los logs van a stderr; stdout queda para la salida de los comandos
logging.basicConfig(
    level=settings.log_level.upper(),
    format="%(asctime)s %(levelname)s %(name)s: %(message)s",
)


@click.group()
@click.version_option(__version__, prog_name=settings.app_name)
def cli():
    """Inversas formales de sucesiones tipo Baum-Sweet: generación, autómatas y verificación."""


cli.add_command(gen.command)
cli.add_command(invert.command)
cli.add_command(automaton.command)
cli.add_command(kernel.command)
cli.add_command(linrep.command)
cli.add_command(words.command)
cli.add_command(verify.command)


def main(argv=None):
    return cli.main(args=argv, prog_name=settings.app_name)


if __name__ == "__main__":
    main()
