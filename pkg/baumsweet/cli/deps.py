"""Dependencias comunes de los subcomandos: tipos de parámetro y traducción de errores."""

import functools
import logging
from typing import Any, Dict, Sequence

import click

from baumsweet.core.errors import BaumSweetError
from baumsweet.models.automata import Dfao, parse_fixture
from baumsweet.models.seq import SeqId
from baumsweet.verify.registry import parse_override

logger = logging.getLogger(__name__)


def error_message(e: BaumSweetError) -> str:
    """Mensaje sin las comillas que KeyError añade a str(e)."""
    return str(e.args[0]) if e.args else type(e).__name__


class SeqIdType(click.ParamType):
    """`nombre` o `nombre:r`; un id desconocido es un error de uso (exit 2)."""

    name = "seqid"

    def convert(self, value, param, ctx) -> SeqId:
        if isinstance(value, SeqId):
            return value
        try:
            return SeqId.parse(value)
        except BaumSweetError as e:
            self.fail(error_message(e), param, ctx)


class FixtureType(click.ParamType):
    name = "figura"

    def convert(self, value, param, ctx) -> Dfao:
        if isinstance(value, Dfao):
            return value
        try:
            return parse_fixture(value)
        except BaumSweetError as e:
            self.fail(error_message(e), param, ctx)


SEQ_ID = SeqIdType()
FIXTURE = FixtureType()


def parse_overrides(values: Sequence[str]) -> Dict[str, Any]:
    """Opciones `--set clave=valor` repetidas."""
    overrides = {}
    for text in values:
        try:
            key, value = parse_override(text)
        except BaumSweetError as e:
            raise click.BadParameter(error_message(e), param_hint="--set")
        overrides[key] = value
    return overrides


def handle_errors(fn):
    """Traduce los errores del dominio a ClickException (exit 1)."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BaumSweetError as e:
            logger.error(f"Error en el comando {fn.__name__}: {e}")
            raise click.ClickException(error_message(e))

    return wrapper
