import click

from baumsweet.cli.deps import SEQ_ID, handle_errors
from baumsweet.models.linrep import LinRep, linrep_guess, linrep_to_json
from baumsweet.models.seq import seq_prefix


def _row(values) -> str:
    return " ".join(str(x) for x in values)


def _render(rep: LinRep) -> str:
    lines = [f"dimensión {rep.dim} en base {rep.k}", f"lambda: {_row(rep.lam)}"]
    for d, m in enumerate(rep.mats):
        lines.append(f"M_{d}:")
        lines.extend(f"  {_row(row)}" for row in m)
    lines.append(f"gamma: {_row(rep.gamma)}")
    return "\n".join(lines) + "\n"


@click.command("linrep")
@click.argument("seq_id", type=SEQ_ID)
@click.option("--max-dim", "max_dim", type=click.IntRange(min=1), default=8, show_default=True)
@click.option("--base", "base", type=click.IntRange(min=2), default=2, show_default=True)
@click.option("-n", "n", type=click.IntRange(min=1), default=4096, show_default=True,
              help="Longitud del prefijo usado.")
@click.option("--json", "as_json", is_flag=True, help="Salida JSON.")
@handle_errors
def command(seq_id, max_dim, base, n, as_json):
    """Adivina una representación lineal; si no existe, imprime el perfil de rangos."""
    result = linrep_guess(seq_prefix(seq_id, n).values, base, max_dim)
    if as_json:
        if isinstance(result, LinRep):
            click.echo(linrep_to_json(result))
        else:
            click.echo(result.to_schema().model_dump_json(indent=2))
        return
    if isinstance(result, LinRep):
        click.echo(_render(result), nl=False)
    else:
        click.echo(f"sin representación de dimensión <= {max_dim}: {result.reason}")
        click.echo(f"perfil de rangos: {_row(result.rank_profile)}")
