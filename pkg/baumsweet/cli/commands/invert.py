import click

from baumsweet.cli.deps import handle_errors
from baumsweet.core.config import settings
from baumsweet.models.fps import Series, series_reversion, series_to_csv
from baumsweet.models.seq import c_series_r, d_series_r, thue_morse_series

# Serie -> constructor (r, n)
_SERIES = {
    "C": lambda r, n: c_series_r(r, n),
    "D": lambda r, n: d_series_r(r, n),
    "thue_morse": lambda r, n: thue_morse_series(n),
}


def _parse_series(ctx, param, value):
    """C, D, C_r:<r>, D_r:<r> o thue_morse."""
    name, _, param_r = value.partition(":")
    if name in ("C", "D", "thue_morse") and not param_r:
        return name, 2
    if name in ("C_r", "D_r") and param_r.isdigit() and int(param_r) >= 2:
        return name[0], int(param_r)
    raise click.BadParameter(f"serie inválida: '{value}' (C, D, C_r:<r>, D_r:<r> o thue_morse)")


@click.command("invert")
@click.option("--series", "series", required=True, callback=_parse_series,
              help="C, D, C_r:<r>, D_r:<r> o thue_morse.")
@click.option("-n", "n", type=click.IntRange(min=1), default=None, help="Truncación N.")
@click.option("--method", type=click.Choice(["auto", "incremental", "newton"]), default=None,
              help="Método de reversión (por defecto BAUMSWEET_REVERSION_METHOD).")
@click.option("--csv", "as_csv", is_flag=True, help="Salida CSV con columnas n,coeff.")
@handle_errors
def command(series, n, method, as_csv):
    """Imprime los coeficientes de la inversa composicional sobre F_2."""
    name, r = series
    n = settings.gen_default_n if n is None else n
    inverse: Series = series_reversion(_SERIES[name](r, n), method)
    if as_csv:
        click.echo(series_to_csv(inverse), nl=False)
    else:
        click.echo(" ".join(str(c) for c in inverse.coeffs))
