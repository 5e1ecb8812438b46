import click

from baumsweet.cli.deps import handle_errors, parse_overrides
from baumsweet.models.words import (
    WORD_IDENTITIES,
    delta_concat,
    h_word,
    l_word,
    letter_frequency,
    psi,
    real_root_xr,
    word_identity_counterexample,
)


def _family(text: str):
    """l, l:<r>, delta:<r> o h -> (nombre, r)."""
    name, _, param = text.partition(":")
    if name == "h" and not param:
        return name, None
    if name in ("l", "delta"):
        if not param and name == "l":
            return name, 2
        if param.isdigit() and int(param) >= 2:
            return name, int(param)
    raise click.BadParameter(f"familia inválida: '{text}' (l, l:<r>, delta:<r> o h)", param_hint="FAMILY")


def _frequency(name: str, r, n: int):
    """Frecuencia de 1 en los n primeros símbolos y su valor de referencia."""
    if name == "l":
        return letter_frequency(l_word(n, r), "1"), real_root_xr(r)
    if name == "delta":
        coded = psi(r).apply(delta_concat(r, n))[:n]
        return letter_frequency(coded, "1"), real_root_xr(r)
    return letter_frequency(h_word(n), "1"), 0.5


@click.command("words")
@click.argument("target")
@click.argument("family", required=False)
@click.option("-n", "n", type=click.IntRange(min=1), default=10_000, show_default=True,
              help="Número de símbolos para `words freq`.")
@click.option("--set", "overrides", multiple=True, metavar="CLAVE=VALOR",
              help="Parámetros de la identidad (length, count, rs).")
@handle_errors
def command(target, family, n, overrides):
    """`words list`, `words <identidad>` o `words freq <familia> -n N`."""
    if target == "list":
        for identity_id in sorted(WORD_IDENTITIES):
            click.echo(f"{identity_id}  {WORD_IDENTITIES[identity_id][1]}")
        return
    if target == "freq":
        if family is None:
            raise click.UsageError("falta la familia: l, l:<r>, delta:<r> o h")
        name, r = _family(family)
        freq, reference = _frequency(name, r, n)
        click.echo(f"{family} n={n} frecuencia={float(freq):.6f} referencia={reference:.6f} "
                   f"diferencia={abs(float(freq) - reference):.6f}")
        return
    if target not in WORD_IDENTITIES:
        raise click.BadParameter(f"identidad desconocida: '{target}'", param_hint="TARGET")
    if family is not None:
        raise click.UsageError(f"argumento inesperado: '{family}'")
    try:
        counterexample = word_identity_counterexample(target, **parse_overrides(overrides))
    except TypeError as e:
        raise click.BadParameter(str(e), param_hint="--set")
    if counterexample is None:
        click.echo(f"{target}: se cumple")
        return
    click.echo(f"{target}: falla {counterexample}")
    click.get_current_context().exit(1)
