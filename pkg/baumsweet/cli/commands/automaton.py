import click

from baumsweet.cli.deps import FIXTURE, handle_errors
from baumsweet.models.automata import Dfao, dfao_minimize, dfao_rebase, dfao_to_dot, dfao_to_json


def _table(a: Dfao) -> str:
    lines = [f"base {a.base}, {a.num_states} estados, inicial {a.names[a.init]}"]
    for s, name in enumerate(a.names):
        edges = " ".join(f"{d}->{a.names[t]}" for d, t in enumerate(a.delta[s]))
        lines.append(f"{name} [{a.out[s]}]: {edges}")
    return "\n".join(lines) + "\n"


@click.command("automaton")
@click.argument("figure", type=FIXTURE)
@click.option("--dot", "fmt", flag_value="dot", help="Salida en formato DOT.")
@click.option("--json", "fmt", flag_value="json", help="Salida JSON.")
@click.option("--rebase", "power", type=click.IntRange(min=1), default=None,
              help="Reescribe el autómata en base k^m.")
@click.option("--minimize", is_flag=True, help="Minimiza antes de emitir.")
@click.option("--out", "out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Fichero de salida (por defecto stdout).")
@handle_errors
def command(figure, fmt, power, minimize, out):
    """Emite fig1, fig2, fig3 o fig4:<r>."""
    a = figure
    if power is not None:
        a = dfao_rebase(a, power)
    if minimize:
        a = dfao_minimize(a)
    if fmt == "dot":
        text = dfao_to_dot(a)
    elif fmt == "json":
        text = dfao_to_json(a) + "\n"
    else:
        text = _table(a)
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
        click.echo(f"Autómata escrito en {out}", err=True)
    else:
        click.echo(text, nl=False)
