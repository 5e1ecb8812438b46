"""
k-núcleo de una sucesión: exacto a partir de un DFAO y empírico a partir de un prefijo.

Con lectura LSB primero, la subsucesión (a_{k^i n + j}) la genera el mismo
autómata arrancado en el estado alcanzado con los i dígitos de j.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence

from baumsweet.core.errors import InsufficientPrefixError, InvalidParameterError
from baumsweet.models.automata import Dfao, dfao_minimize, is_zero_invariant
from baumsweet.schemas.schemas import KernelClassSchema, KernelReportSchema

logger = logging.getLogger(__name__)


class KernelElement:
    """Par (i, j) con 0 <= j < k^i, su clase y, si lo hay, el estado que lo genera."""

    __slots__ = ("i", "j", "cls", "rep")

    def __init__(self, i: int, j: int, cls: int, rep: Optional[str] = None):
        self.i = i
        self.j = j
        self.cls = cls
        self.rep = rep

    def __repr__(self) -> str:
        return f"KernelElement(i={self.i}, j={self.j}, class={self.cls}, rep={self.rep})"

    def __eq__(self, other) -> bool:
        return isinstance(other, KernelElement) and \
            (self.i, self.j, self.cls, self.rep) == (other.i, other.j, other.cls, other.rep)

    def __hash__(self) -> int:
        return hash((self.i, self.j, self.cls, self.rep))


class KernelResult:
    __slots__ = ("base", "elements", "heuristic")

    def __init__(self, base: int, elements: Sequence[KernelElement], heuristic: bool):
        self.base = base
        self.elements = list(elements)
        self.heuristic = heuristic

    @property
    def size(self) -> int:
        return len({e.cls for e in self.elements})

    def __len__(self) -> int:
        return self.size

    def to_schema(self) -> KernelReportSchema:
        return KernelReportSchema(
            base=self.base,
            classes=self.size,
            heuristic=self.heuristic,
            elements=[KernelClassSchema(i=e.i, j=e.j, class_=e.cls, rep=e.rep) for e in self.elements],
        )

    def to_json(self) -> str:
        return self.to_schema().model_dump_json(by_alias=True, indent=2)


def kernel_exact(a: Dfao) -> KernelResult:
    """Un elemento por estado del autómata minimizado, representado por el (i, j) lexicográficamente menor."""
    if not is_zero_invariant(a):
        logger.warning("El autómata no es invariante por ceros: el núcleo exacto puede no coincidir con el de la sucesión")
    m = dfao_minimize(a)
    k = m.base
    found: Dict[int, tuple] = {m.init: (0, 0)}
    level = {m.init: 0}
    i = 0
    seen_levels = set()
    while len(found) < m.num_states:
        key = frozenset(level.items())
        if key in seen_levels:
            break
        seen_levels.add(key)
        power = k ** i
        nxt: Dict[int, int] = {}
        for s, j in level.items():
            for d in range(k):
                t = m.delta[s][d]
                cand = j + d * power
                if t not in nxt or cand < nxt[t]:
                    nxt[t] = cand
        i += 1
        for t, j in sorted(nxt.items(), key=lambda item: item[1]):
            found.setdefault(t, (i, j))
        level = nxt
    ordered = sorted(found.items(), key=lambda item: item[1])
    elements = [KernelElement(i, j, cls, m.names[s]) for cls, (s, (i, j)) in enumerate(ordered)]
    logger.info(f"Núcleo exacto en base {k}: {len(elements)} elementos")
    return KernelResult(k, elements, heuristic=False)


def kernel_empirical(values: Sequence[int], k: int, depth: int, bound: int) -> KernelResult:
    """Clases de (i, j), i <= depth, cuyas subsucesiones coinciden en los primeros bound términos.

    Necesita len(values) >= k^depth * bound. El resultado es heurístico.
    """
    if k < 2 or depth < 0 or bound < 1:
        raise InvalidParameterError(f"parámetros inválidos: k={k}, depth={depth}, bound={bound}")
    need = k ** depth * bound
    if len(values) < need:
        raise InsufficientPrefixError(
            f"el prefijo tiene {len(values)} términos y se necesitan {need} (k^depth * bound)")
    head = list(values[:need])
    values = bytes(head) if all(0 <= v < 256 for v in head) else head
    classes: Dict[tuple, int] = {}
    elements: List[KernelElement] = []
    for i in range(depth + 1):
        step = k ** i
        for j in range(step):
            key = tuple(values[j::step][:bound])
            cls = classes.setdefault(key, len(classes))
            elements.append(KernelElement(i, j, cls))
    logger.info(f"Núcleo empírico en base {k}: {len(classes)} clases (profundidad {depth}, cota {bound})")
    return KernelResult(k, elements, heuristic=True)
