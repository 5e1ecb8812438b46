"""
Registro de verificaciones acotadas.

Cada check se registra con un decorador y recibe sus cotas como argumentos
con nombre; devuelve None si se cumple o un contraejemplo (dict) si no.
Los módulos de `baumsweet.verify.checks` se importan bajo demanda.
"""

from __future__ import annotations

import importlib
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from tqdm import tqdm

from baumsweet.core.config import PROFILES, settings
from baumsweet.core.errors import InvalidParameterError, UnknownCheckError
from baumsweet.schemas.schemas import CheckResultSchema, ReportSchema, SummarySchema

logger = logging.getLogger(__name__)

CheckFn = Callable[..., Optional[Dict[str, Any]]]


class Check:
    __slots__ = ("id", "description", "reference", "expected", "quick", "full", "fn")

    def __init__(self, check_id: str, description: str, reference: str, expected: str,
                 quick: Dict[str, Any], full: Dict[str, Any], fn: CheckFn):
        self.id = check_id
        self.description = description
        self.reference = reference
        self.expected = expected
        self.quick = quick
        self.full = full
        self.fn = fn

    def bounds(self, profile: str) -> Dict[str, Any]:
        if profile not in PROFILES:
            raise InvalidParameterError(f"perfil desconocido: {profile}")
        return dict(self.quick if profile == "quick" else self.full)

    def __repr__(self) -> str:
        return f"Check({self.id}, expected={self.expected})"


_REGISTRY: Dict[str, Check] = {}
_loaded = False


def register(check_id: str, description: str, reference: str, expected: str = "pass",
             quick: Optional[Dict[str, Any]] = None, full: Optional[Dict[str, Any]] = None):
    """Decorador: registra fn como check. full hereda de quick lo que no redefine."""
    if expected not in ("pass", "fail"):
        raise InvalidParameterError(f"expectativa inválida: {expected}")

    def decorator(fn: CheckFn) -> CheckFn:
        if check_id in _REGISTRY:
            raise InvalidParameterError(f"check duplicado: {check_id}")
        quick_bounds = dict(quick or {})
        full_bounds = {**quick_bounds, **(full or {})}
        _REGISTRY[check_id] = Check(check_id, description, reference, expected,
                                    quick_bounds, full_bounds, fn)
        return fn

    return decorator


def load_checks() -> None:
    global _loaded
    if not _loaded:
        importlib.import_module("baumsweet.verify.checks")
        _loaded = True


def list_checks() -> List[Check]:
    load_checks()
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def get_check(check_id: str) -> Check:
    load_checks()
    try:
        return _REGISTRY[check_id]
    except KeyError:
        raise UnknownCheckError(f"check no registrado: {check_id}")


def parse_override(text: str) -> Tuple[str, Any]:
    """`clave=valor`; el valor es un entero o una lista de enteros separados por comas."""
    key, sep, raw = text.partition("=")
    key, raw = key.strip(), raw.strip()
    if not sep or not key or not raw:
        raise InvalidParameterError(f"se esperaba clave=valor: '{text}'")
    try:
        if "," in raw:
            return key, tuple(int(part) for part in raw.split(",") if part.strip())
        return key, int(raw)
    except ValueError:
        raise InvalidParameterError(f"valor no entero en '{text}'")


def _json_safe(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


def run_check(check_id: str, overrides: Optional[Mapping[str, Any]] = None,
              profile: Optional[str] = None, strict: bool = True) -> CheckResultSchema:
    """Ejecuta un check. Con strict=False se ignoran las cotas que el check no tiene."""
    check = get_check(check_id)
    profile = profile or settings.verify_profile
    bounds = check.bounds(profile)
    for key, value in (overrides or {}).items():
        if key not in bounds:
            if not strict:
                continue
            raise InvalidParameterError(f"{check_id} no tiene la cota '{key}' (cotas: {sorted(bounds)})")
        bounds[key] = value

    start = time.perf_counter()
    try:
        counterexample = check.fn(**bounds)
        outcome = "pass" if counterexample is None else "fail"
    except Exception as e:
        logger.error(f"Error al ejecutar el check {check_id}: {e}")
        counterexample = {"error": f"{type(e).__name__}: {e}"}
        outcome = "error"
    millis = int((time.perf_counter() - start) * 1000)

    if outcome == check.expected:
        status = "pass" if outcome == "pass" else "flagged"
    else:
        status = "fail"
    logger.info(f"Check {check_id}: {status} ({millis} ms)")
    return CheckResultSchema(
        id=check.id,
        description=check.description,
        reference=check.reference,
        status=status,
        expected=check.expected,
        outcome=outcome,
        bounds=_json_safe(bounds),
        counterexample=_json_safe(counterexample),
        millis=millis,
    )


def run_all(profile: Optional[str] = None, jobs: Optional[int] = None,
            progress: Optional[bool] = None, check_ids: Optional[List[str]] = None,
            overrides: Optional[Mapping[str, Any]] = None) -> ReportSchema:
    """Ejecuta los checks pedidos (todos por defecto) en orden de id estable."""
    profile = profile or settings.verify_profile
    jobs = jobs or settings.verify_jobs
    progress = settings.verify_progress if progress is None else progress
    ids = check_ids or [c.id for c in list_checks()]
    for check_id in ids:
        get_check(check_id)

    worker = partial(run_check, overrides=overrides, profile=profile,
                     strict=check_ids is not None and len(check_ids) == 1)
    start = time.perf_counter()
    bar = partial(tqdm, total=len(ids), desc="verify", file=sys.stderr, disable=not progress)
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(bar(pool.map(worker, ids)))
    else:
        results = list(bar(map(worker, ids)))
    millis = int((time.perf_counter() - start) * 1000)

    failed = sum(r.status == "fail" for r in results)
    summary = SummarySchema(
        total=len(results),
        passed=sum(r.status == "pass" for r in results),
        failed=failed,
        flagged=sum(r.status == "flagged" for r in results),
        millis=millis,
        ok=failed == 0,
    )
    logger.info(f"Verificación {profile}: {summary.passed} pasan, {summary.failed} fallan, "
                f"{summary.flagged} señaladas")
    return ReportSchema(profile=profile, checks=results, summary=summary)


def render_table(report: ReportSchema) -> str:
    width = max([len(r.id) for r in report.checks] + [5])
    lines = [f"{'check'.ljust(width)}  {'estado':8}  {'esperado':8}"]
    for r in report.checks:
        line = f"{r.id.ljust(width)}  {r.status:8}  {r.expected:8}"
        if r.counterexample:
            line += f"  {r.counterexample}"
        lines.append(line)
    s = report.summary
    lines.append(f"total {s.total}: {s.passed} pasan, {s.failed} fallan, {s.flagged} señaladas")
    return "\n".join(lines) + "\n"
