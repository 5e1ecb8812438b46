"""
Representaciones lineales de sucesiones k-regulares sobre los racionales.

a(n) = lambda * M_{d_0} * M_{d_1} ... M_{d_{m-1}} * gamma, con d_0 el dígito
menos significativo de n en base k (la misma convención que los autómatas).
"""

from __future__ import annotations

import logging
from collections import deque
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from baumsweet.core.errors import InsufficientPrefixError, InvalidParameterError
from baumsweet.models.linalg import EchelonBasis, matrix_rank
from baumsweet.schemas.schemas import LinRepFailureSchema, LinRepSchema

logger = logging.getLogger(__name__)

Vector = List[Fraction]
Matrix = List[List[Fraction]]


def _frac_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class LinRep:
    __slots__ = ("k", "dim", "lam", "mats", "gamma")

    def __init__(self, k: int, lam: Sequence, mats: Sequence[Sequence[Sequence]], gamma: Sequence):
        if k < 2:
            raise InvalidParameterError(f"base inválida: {k}")
        dim = len(lam)
        if len(gamma) != dim or len(mats) != k:
            raise InvalidParameterError("dimensiones inconsistentes en la representación")
        for m in mats:
            if len(m) != dim or any(len(row) != dim for row in m):
                raise InvalidParameterError("las matrices deben ser cuadradas de lado dim")
        self.k = k
        self.dim = dim
        self.lam = [Fraction(x) for x in lam]
        self.mats = [[[Fraction(x) for x in row] for row in m] for m in mats]
        self.gamma = [Fraction(x) for x in gamma]

    def __repr__(self) -> str:
        return f"LinRep(k={self.k}, dim={self.dim})"

    def to_schema(self) -> LinRepSchema:
        return LinRepSchema(
            k=self.k,
            dim=self.dim,
            lambda_=[_frac_text(x) for x in self.lam],
            mats=[[[_frac_text(x) for x in row] for row in m] for m in self.mats],
            gamma=[_frac_text(x) for x in self.gamma],
        )


class LinRepFailure:
    """Fracaso de la adivinanza: perfil de rangos como evidencia (nunca prueba)."""

    __slots__ = ("k", "max_dim", "rank_profile", "reason")

    heuristic = True

    def __init__(self, k: int, max_dim: int, rank_profile: List[int], reason: str):
        self.k = k
        self.max_dim = max_dim
        self.rank_profile = rank_profile
        self.reason = reason

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"LinRepFailure(k={self.k}, max_dim={self.max_dim}, ranks={self.rank_profile})"

    def to_schema(self) -> LinRepFailureSchema:
        return LinRepFailureSchema(k=self.k, max_dim=self.max_dim,
                                   rank_profile=self.rank_profile, reason=self.reason)


def _mat_vec(m: Matrix, v: Vector) -> Vector:
    return [sum((a * b for a, b in zip(row, v) if a), Fraction(0)) for row in m]


def linrep_eval(rep: LinRep, n: int) -> Fraction:
    digits = []
    while n:
        n, d = divmod(n, rep.k)
        digits.append(d)
    v = rep.gamma
    for d in reversed(digits):
        v = _mat_vec(rep.mats[d], v)
    return sum((a * b for a, b in zip(rep.lam, v)), Fraction(0))


def linrep_prefix(rep: LinRep, n: int) -> List[Fraction]:
    """Evaluación masiva: R(0) = gamma, R(k m + d) = M_d R(m)."""
    columns: List[Vector] = [rep.gamma]
    for i in range(1, n):
        q, d = divmod(i, rep.k)
        columns.append(_mat_vec(rep.mats[d], columns[q]))
    return [sum((a * b for a, b in zip(rep.lam, v)), Fraction(0)) for v in columns[:n]]


def linrep_to_json(rep: LinRep) -> str:
    return rep.to_schema().model_dump_json(by_alias=True, indent=2)


def linrep_from_json(text: str) -> LinRep:
    schema = LinRepSchema.model_validate_json(text)
    rep = LinRep(schema.k, [Fraction(x) for x in schema.lambda_],
                 [[[Fraction(x) for x in row] for row in m] for m in schema.mats],
                 [Fraction(x) for x in schema.gamma])
    if rep.dim != schema.dim:
        raise InvalidParameterError(f"dim = {schema.dim} no coincide con las entradas ({rep.dim})")
    return rep


def _subsequence(values: Sequence[int], k: int, i: int, j: int, terms: int) -> List[int]:
    step = k ** i
    return list(values[j: j + step * terms: step])


def _min_terms(max_dim: int) -> int:
    return max(2 * max_dim, 8)


def _failure(values: Sequence[int], k: int, max_dim: int, depth: int, reason: str) -> "LinRepFailure":
    """Perfil de rangos hasta depth, recortado a la profundidad que cubre el prefijo."""
    covered = 0
    while len(values) // k ** (covered + 1) >= 1:
        covered += 1
    logger.info(f"Sin representación de dimensión <= {max_dim} (k = {k}): {reason}")
    return LinRepFailure(k, max_dim, rank_profile(values, k, list(range(min(depth, covered) + 1))), reason)


def linrep_guess(values: Sequence[int], k: int, max_dim: int,
                 profile_depth: int = 6) -> Union[LinRep, LinRepFailure]:
    """Busca una representación de dimensión <= max_dim que reproduzca todo el prefijo.

    Recorre el núcleo en anchura: cada (i, j) independiente de los anteriores
    pasa a la base y se exploran sus hijos (i + 1, j + d k^i). En el nivel i
    se comparan L // k^i términos; se necesitan al menos max(2 max_dim, 8).
    """
    if k < 2 or max_dim < 1:
        raise InvalidParameterError(f"parámetros inválidos: k={k}, max_dim={max_dim}")
    total = len(values)
    if total < k * _min_terms(max_dim):
        raise InsufficientPrefixError(
            f"el prefijo tiene {total} términos; se necesitan al menos {k * _min_terms(max_dim)}")

    basis: List[Tuple[int, int]] = []
    relations: Dict[Tuple[int, int], List[Fraction]] = {}
    queue = deque([(0, 0)])
    echelon: Optional[EchelonBasis] = None
    level = -1
    while queue:
        i, j = queue.popleft()
        if i != level:
            level = i
            terms = total // k ** i
            if terms < _min_terms(max_dim):
                return _failure(values, k, max_dim, min(profile_depth, i - 1),
                                f"en profundidad {i} sólo quedan {terms} términos comparables")
            echelon = EchelonBasis(terms)
            for bi, bj in basis:
                if not echelon.add(_subsequence(values, k, bi, bj, terms)):
                    return _failure(values, k, max_dim, min(profile_depth, i),
                                    f"la base deja de ser independiente con {terms} términos")
        vector = _subsequence(values, k, i, j, terms)
        coefs = echelon.express(vector)
        if coefs is not None:
            relations[(i, j)] = coefs
            continue
        if len(basis) == max_dim:
            return _failure(values, k, max_dim, profile_depth,
                            f"el núcleo genera más de {max_dim} dimensiones")
        echelon.add(vector)
        basis.append((i, j))
        step = k ** i
        queue.extend((i + 1, j + d * step) for d in range(k))

    dim = len(basis)
    index = {b: idx for idx, b in enumerate(basis)}
    mats: List[Matrix] = []
    for d in range(k):
        rows = []
        for bi, bj in basis:
            child = (bi + 1, bj + d * k ** bi)
            if child in index:
                row = [Fraction(0)] * dim
                row[index[child]] = Fraction(1)
            else:
                row = relations[child] + [Fraction(0)] * (dim - len(relations[child]))
            rows.append(row)
        mats.append(rows)
    lam = [Fraction(1)] + [Fraction(0)] * (dim - 1)
    gamma = [Fraction(values[bj]) for _, bj in basis]
    rep = LinRep(k, lam, mats, gamma)

    evaluated = linrep_prefix(rep, total)
    mismatch = next((n for n in range(total) if evaluated[n] != values[n]), None)
    if mismatch is not None:
        return _failure(values, k, max_dim, profile_depth,
                        f"la representación adivinada falla en n = {mismatch}")
    logger.info(f"Representación lineal de dimensión {dim} en base {k}")
    return rep


def rank_profile(values: Sequence[int], k: int, depths: Sequence[int]) -> List[int]:
    """Rango de las subsucesiones del núcleo con i <= depth, truncadas a L // k^max(depths)."""
    if not depths:
        return []
    deepest = max(depths)
    terms = len(values) // k ** deepest
    if terms < 1:
        raise InsufficientPrefixError(
            f"el prefijo de {len(values)} términos no cubre la profundidad {deepest}")
    profile = []
    for depth in depths:
        rows = [_subsequence(values, k, i, j, terms) for i in range(depth + 1) for j in range(k ** i)]
        profile.append(matrix_rank(rows))
    logger.debug(f"Perfil de rangos (k = {k}, {terms} términos): {profile}")
    return profile
