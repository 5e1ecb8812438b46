import click

from baumsweet.cli.deps import error_message, handle_errors
from baumsweet.core.errors import BaumSweetError
from baumsweet.models.automata import FIGURES, dfao_rebase, parse_fixture
from baumsweet.models.kernel import KernelResult, kernel_empirical, kernel_exact
from baumsweet.models.seq import SeqId, seq_prefix


def _parse_target(ctx, param, value):
    """Figura (núcleo exacto) o id de sucesión (núcleo empírico)."""
    try:
        if value.partition(":")[0] in FIGURES:
            return parse_fixture(value)
        return SeqId.parse(value)
    except BaumSweetError as e:
        raise click.BadParameter(error_message(e))


def _render(result: KernelResult) -> str:
    kind = "heurístico" if result.heuristic else "exacto"
    lines = [f"base {result.base}: {result.size} clases ({kind})"]
    for e in result.elements:
        rep = f"  {e.rep}" if e.rep else ""
        lines.append(f"({e.i}, {e.j})  clase {e.cls}{rep}")
    return "\n".join(lines) + "\n"


@click.command("kernel")
@click.argument("target", callback=_parse_target)
@click.option("--depth", type=click.IntRange(min=0), default=4, show_default=True,
              help="Profundidad máxima i del núcleo empírico.")
@click.option("--bound", type=click.IntRange(min=1), default=64, show_default=True,
              help="Términos comparados por subsucesión.")
@click.option("--base", "base", type=click.IntRange(min=2), default=None,
              help="Base k (por defecto 2, o la del autómata).")
@click.option("--json", "as_json", is_flag=True, help="Salida JSON.")
@handle_errors
def command(target, depth, bound, base, as_json):
    """Clases del k-núcleo: exactas para una figura, empíricas para una sucesión."""
    if isinstance(target, SeqId):
        k = base or 2
        values = seq_prefix(target, k ** depth * bound).values
        result = kernel_empirical(values, k, depth, bound)
    else:
        a = target
        if base is not None and base != a.base:
            power, size = 1, a.base
            while size < base:
                power, size = power + 1, size * a.base
            if size != base:
                raise click.BadParameter(f"{base} no es potencia de {a.base}", param_hint="--base")
            a = dfao_rebase(a, power)
        result = kernel_exact(a)
    click.echo(result.to_json() + "\n" if as_json else _render(result), nl=False)
