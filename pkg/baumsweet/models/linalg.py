"""Álgebra lineal exacta sobre los racionales."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Union

Number = Union[int, Fraction]


def _integer_row(row: Sequence[Number]) -> List[int]:
    scale = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * scale) for x in row]


def matrix_rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rango por eliminación de Bareiss (sin fracciones: todas las divisiones son exactas)."""
    m = [_integer_row(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank, prev = 0, 1
    for c in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, n_rows):
            f = m[r][c]
            row = m[r]
            for cc in range(c + 1, n_cols):
                row[cc] = (row[cc] * p - f * m[rank][cc]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


class EchelonBasis:
    """Base incremental en forma escalonada.

    Cada fila reducida guarda su combinación en términos de los vectores
    originales añadidos, de modo que `express` devuelve coeficientes
    respecto de esos vectores.
    """

    def __init__(self, width: int):
        self.width = width
        self._rows: List[List[Fraction]] = []
        self._pivots: List[int] = []
        self._combos: List[List[Fraction]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Sequence[Number]):
        v = [Fraction(x) for x in vector[: self.width]]
        if len(v) != self.width:
            raise ValueError(f"se esperaban {self.width} componentes, hay {len(v)}")
        coefs: List[Fraction] = []
        for row, piv in zip(self._rows, self._pivots):
            f = v[piv] / row[piv] if v[piv] else Fraction(0)
            if f:
                for c in range(piv, self.width):
                    if row[c]:
                        v[c] -= f * row[c]
            coefs.append(f)
        return v, coefs

    def _combine(self, coefs: Sequence[Fraction], size: int) -> List[Fraction]:
        out = [Fraction(0)] * size
        for f, combo in zip(coefs, self._combos):
            if f:
                for idx, x in enumerate(combo):
                    out[idx] += f * x
        return out

    def express(self, vector: Sequence[Number]) -> Optional[List[Fraction]]:
        """Coeficientes de vector en la base añadida, o None si es independiente."""
        residual, coefs = self._reduce(vector)
        if any(residual):
            return None
        return self._combine(coefs, len(self._rows))

    def add(self, vector: Sequence[Number]) -> bool:
        """Añade vector si es independiente; devuelve True si se añadió."""
        residual, coefs = self._reduce(vector)
        piv = next((c for c, x in enumerate(residual) if x), None)
        if piv is None:
            return False
        size = len(self._rows) + 1
        combo = [-x for x in self._combine(coefs, size)]
        combo[-1] = Fraction(1)
        self._rows.append(residual)
        self._pivots.append(piv)
        self._combos.append(combo)
        return True
