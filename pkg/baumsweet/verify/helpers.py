"""Utilidades compartidas por los checks: series de la familia y búsqueda de contraejemplos."""

from __future__ import annotations

from typing import Any, Dict, Iterable, Optional, Sequence

from baumsweet.models.fps import QQ, RelationTerm, Series, series_add, series_reversion
from baumsweet.models.seq import baum_sweet_r_bits
from baumsweet.models.seq import c_series_r as c_series
from baumsweet.models.seq import d_series_r as d_series

Counterexample = Optional[Dict[str, Any]]


def first_mismatch(left: Sequence, right: Sequence, **context) -> Counterexample:
    """Primer índice donde difieren (compara hasta la longitud menor)."""
    for n, (a, b) in enumerate(zip(left, right)):
        if a != b:
            return {**context, "n": n, "left": a, "right": b}
    return None


def first_failure(cases: Iterable[Counterexample]) -> Counterexample:
    return next((c for c in cases if c is not None), None)


def relation_counterexample(terms: Sequence[RelationTerm], n: int, **context) -> Counterexample:
    """None si la combinación se anula módulo X^n; si no, el primer coeficiente no nulo."""
    total = None
    for term in terms:
        value = term.value(n)
        total = value if total is None else series_add(total, value)
    index = total.valuation() if total is not None else None
    if index is None:
        return None
    return {**context, "index": index, "coeff": total[index]}


def p_series(r: int, n: int) -> Series:
    return series_reversion(c_series(r, n))


def q_series(r: int, n: int) -> Series:
    return series_reversion(d_series(r, n))


def over_rationals(bits: Sequence[int], n: int) -> Series:
    """Los mismos 0/1 como serie sobre los racionales."""
    return Series(QQ, n, coeffs=list(bits[:n]))


def b_bar(r: int, n: int) -> Series:
    return over_rationals(baum_sweet_r_bits(r, n), n)


def q_bar(r: int, n: int) -> Series:
    """Q_r (obtenida por reversión) leída sobre los racionales."""
    return over_rationals(q_series(r, n).coeffs, n)


def monomial(e: int) -> tuple:
    return (0,) * e + (1,)
