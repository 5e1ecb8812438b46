import logging

import click

from baumsweet.cli.deps import error_message, handle_errors, parse_overrides
from baumsweet.core.config import PROFILES, settings
from baumsweet.core.errors import BaumSweetError
from baumsweet.verify.registry import get_check, list_checks, render_table, run_all

logger = logging.getLogger(__name__)


def _validate_checks(ctx, param, values):
    for check_id in values:
        try:
            get_check(check_id)
        except BaumSweetError as e:
            raise click.BadParameter(error_message(e))
    return list(values)


@click.command("verify")
@click.option("--profile", type=click.Choice(PROFILES), default=None,
              help="Perfil de cotas (por defecto BAUMSWEET_VERIFY_PROFILE).")
@click.option("--check", "check_ids", multiple=True, callback=_validate_checks,
              help="Ejecuta sólo este check (repetible).")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Escribe el informe JSON en esta ruta.")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Procesos en paralelo.")
@click.option("--set", "overrides", multiple=True, metavar="CLAVE=VALOR",
              help="Sobrescribe una cota de los checks seleccionados.")
@click.option("--list", "list_only", is_flag=True, help="Lista los checks registrados y sale.")
@click.option("--progress/--no-progress", default=None, help="Barra de progreso en stderr.")
@handle_errors
def command(profile, check_ids, json_path, jobs, overrides, list_only, progress):
    """Ejecuta la verificación acotada; exit 0 sólo si se cumplen todas las expectativas."""
    if list_only:
        for check in list_checks():
            click.echo(f"{check.id}  {check.expected}  {check.description}")
        return

    profile = profile or settings.verify_profile
    bounds = parse_overrides(overrides)
    if bounds:
        selected = [get_check(c) for c in check_ids] if check_ids else list_checks()
        known = set().union(*(c.bounds(profile) for c in selected))
        unknown = sorted(set(bounds) - known)
        if unknown:
            raise click.BadParameter(f"ningún check seleccionado tiene las cotas {unknown}",
                                     param_hint="--set")

    report = run_all(profile=profile, jobs=jobs, progress=progress,
                     check_ids=check_ids or None, overrides=bounds)
    click.echo(render_table(report), nl=False)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as f:
            f.write(report.model_dump_json(indent=2) + "\n")
        logger.info(f"Informe escrito en {json_path}")
    if not report.summary.ok:
        click.get_current_context().exit(1)
