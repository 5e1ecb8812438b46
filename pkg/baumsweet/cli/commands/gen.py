import click

from baumsweet.cli.deps import SEQ_ID, handle_errors
from baumsweet.core.config import settings
from baumsweet.models.seq import seq_prefix


@click.command("gen")
@click.argument("seq_id", type=SEQ_ID)
@click.option("-n", "n", type=click.IntRange(min=0), default=None,
              help="Número de términos (por defecto BAUMSWEET_GEN_DEFAULT_N).")
@click.option("--csv", "as_csv", is_flag=True, help="Salida CSV con columnas n,value.")
@handle_errors
def command(seq_id, n, as_csv):
    """Imprime el prefijo de una sucesión (por ejemplo `gen u_seq -n 8`)."""
    n = settings.gen_default_n if n is None else n
    prefix = seq_prefix(seq_id, n)
    if as_csv:
        click.echo(prefix.to_csv(), nl=False)
    else:
        click.echo(" ".join(str(v) for v in prefix))
