"""
Autómatas finitos con salida (DFAO) que leen los dígitos en base k del
menos significativo al más significativo.

n = 0 se lee como la cadena vacía. Los estados muertos se mantienen
explícitos: delta es siempre total.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from baumsweet.core.errors import InvalidParameterError
from baumsweet.schemas.schemas import AutomatonSchema, EdgeSchema, StateSchema

logger = logging.getLogger(__name__)

FIGURES = ("fig1", "fig2", "fig3", "fig4")


class Dfao:
    """DFAO con estados indexados 0..Q-1 y nombres legibles."""

    __slots__ = ("base", "names", "init", "delta", "out")

    def __init__(self, base: int, names: Sequence[str], init: int,
                 delta: Sequence[Sequence[int]], out: Sequence[int]):
        if base < 2:
            raise InvalidParameterError(f"base inválida: {base}")
        size = len(names)
        if len(delta) != size or len(out) != size:
            raise InvalidParameterError("delta y out deben cubrir todos los estados")
        if not 0 <= init < size:
            raise InvalidParameterError("estado inicial fuera de rango")
        for row in delta:
            if len(row) != base or any(not 0 <= t < size for t in row):
                raise InvalidParameterError("delta debe ser total sobre los dígitos 0..k-1")
        self.base = base
        self.names = tuple(names)
        self.init = init
        self.delta = tuple(tuple(row) for row in delta)
        self.out = tuple(out)

    @classmethod
    def from_table(cls, base: int, init: str, table: Mapping[str, Sequence[str]],
                   out: Mapping[str, int]) -> "Dfao":
        names = list(table)
        index = {name: i for i, name in enumerate(names)}
        delta = [[index[t] for t in table[name]] for name in names]
        return cls(base, names, index[init], delta, [out[name] for name in names])

    @property
    def num_states(self) -> int:
        return len(self.names)

    def run(self, n: int, start: int = None) -> int:
        """Estado alcanzado tras leer los dígitos de n (LSB primero)."""
        s = self.init if start is None else start
        k = self.base
        while n:
            n, d = divmod(n, k)
            s = self.delta[s][d]
        return s

    def __repr__(self) -> str:
        return f"Dfao(base={self.base}, states={self.num_states})"


def dfao_eval(a: Dfao, n: int) -> int:
    return a.out[a.run(n)]


def dfao_eval_msb(a: Dfao, n: int) -> int:
    """Lectura del dígito más significativo primero (sólo para contrastar la convención)."""
    s = a.init
    digits = []
    while n:
        n, d = divmod(n, a.base)
        digits.append(d)
    for d in reversed(digits):
        s = a.delta[s][d]
    return a.out[s]


def dfao_prefix(a: Dfao, n: int) -> List[int]:
    """Salidas para todo m < n.

    Tabla S[s][m] = estado alcanzado desde s leyendo m; se amplía por un
    factor k con S[s][k q + d] = S[delta(s, d)][q] y S[s][0] = s.
    """
    k = a.base
    compact = a.num_states <= 256
    rows = [bytearray([s]) if compact else [s] for s in range(a.num_states)]
    while len(rows[0]) < n:
        size = len(rows[0]) * k
        grown = []
        for s in range(a.num_states):
            row = bytearray(size) if compact else [0] * size
            for d in range(k):
                row[d::k] = rows[a.delta[s][d]]
            row[0] = s
            grown.append(row)
        rows = grown
    return [a.out[s] for s in rows[a.init][:n]]


def dfao_reachable(a: Dfao) -> List[int]:
    """Estados alcanzables en orden BFS (dígitos en orden creciente)."""
    seen = {a.init}
    order = [a.init]
    queue = deque([a.init])
    while queue:
        s = queue.popleft()
        for t in a.delta[s]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def is_zero_invariant(a: Dfao) -> bool:
    """Leer un 0 de más (ceros a la izquierda) no cambia la salida."""
    return all(a.out[a.delta[s][0]] == a.out[s] for s in dfao_reachable(a))


def dfao_minimize(a: Dfao) -> Dfao:
    """Refinamiento de Moore sobre los estados alcanzables."""
    order = dfao_reachable(a)
    block: Dict[int, object] = {s: a.out[s] for s in order}
    count = -1
    while True:
        signatures = {s: (block[s],) + tuple(block[t] for t in a.delta[s]) for s in order}
        numbering: Dict[tuple, int] = {}
        for s in order:
            numbering.setdefault(signatures[s], len(numbering))
        block = {s: numbering[signatures[s]] for s in order}
        if len(numbering) == count:
            break
        count = len(numbering)
    reps: Dict[int, int] = {}
    for s in order:
        reps.setdefault(block[s], s)
    ids = sorted(reps)
    delta = [[block[t] for t in a.delta[reps[b]]] for b in ids]
    logger.debug(f"Minimización: {a.num_states} -> {len(ids)} estados")
    return Dfao(a.base, [a.names[reps[b]] for b in ids], block[a.init], delta,
                [a.out[reps[b]] for b in ids])


def dfao_rebase(a: Dfao, power: int) -> Dfao:
    """Autómata en base k^power: cada dígito nuevo se expande en power dígitos base k (LSB primero)."""
    if power < 1:
        raise InvalidParameterError(f"potencia inválida: {power}")
    k = a.base
    new_base = k ** power
    delta = []
    for s in range(a.num_states):
        row = []
        for digit in range(new_base):
            t, x = s, digit
            for _ in range(power):
                x, d = divmod(x, k)
                t = a.delta[t][d]
            row.append(t)
        delta.append(row)
    return Dfao(new_base, a.names, a.init, delta, a.out)


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


def _dot_lines(a: Dfao) -> Iterator[str]:
    yield "digraph dfao {\n"
    yield "  rankdir=LR;\n"
    for s, name in enumerate(a.names):
        extra = ", penwidth=2, style=bold" if s == a.init else ""
        yield f"  {_gvquote(name)} [label={_gvquote(str(a.out[s]))}{extra}];\n"
    grouped: Dict[Tuple[int, int], List[int]] = {}
    for s in range(a.num_states):
        for d, t in enumerate(a.delta[s]):
            grouped.setdefault((s, t), []).append(d)
    for (s, t), digits in grouped.items():
        label = ",".join(str(d) for d in digits)
        yield f"  {_gvquote(a.names[s])} -> {_gvquote(a.names[t])} [label={_gvquote(label)}];\n"
    yield "}\n"


def dfao_to_dot(a: Dfao) -> str:
    return "".join(_dot_lines(a))


def dfao_to_schema(a: Dfao) -> AutomatonSchema:
    return AutomatonSchema(
        base=a.base,
        states=[StateSchema(id=name, out=a.out[s]) for s, name in enumerate(a.names)],
        init=a.names[a.init],
        edges=[EdgeSchema(from_=a.names[s], digit=d, to=a.names[t])
               for s in range(a.num_states) for d, t in enumerate(a.delta[s])],
    )


def dfao_to_json(a: Dfao) -> str:
    return dfao_to_schema(a).model_dump_json(by_alias=True, indent=2)


def dfao_from_json(text: str) -> Dfao:
    schema = AutomatonSchema.model_validate_json(text)
    names = [st.id for st in schema.states]
    index = {name: i for i, name in enumerate(names)}
    delta = [[-1] * schema.base for _ in names]
    referenced = {schema.init} | {e.from_ for e in schema.edges} | {e.to for e in schema.edges}
    unknown = sorted(referenced - set(index))
    if unknown:
        raise InvalidParameterError(f"estados desconocidos en el autómata: {unknown}")
    for edge in schema.edges:
        if not 0 <= edge.digit < schema.base:
            raise InvalidParameterError(f"dígito {edge.digit} fuera de la base {schema.base}")
        delta[index[edge.from_]][edge.digit] = index[edge.to]
    return Dfao(schema.base, names, index[schema.init], delta, [st.out for st in schema.states])


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

def baum_sweet_r_automaton(r: int) -> Dfao:
    """r + 1 estados: sin ceros pendientes, z_i ceros pendientes (i < r) y muerto."""
    if r < 2:
        raise InvalidParameterError(f"r debe ser >= 2, se recibió {r}")
    names = ["a"] + [f"z{i}" for i in range(1, r)] + ["dead"]
    dead = r
    delta = [[1, 0]]
    for i in range(1, r):
        delta.append([(i + 1) % r, dead])
    delta.append([dead, dead])
    return Dfao(2, names, 0, delta, [1] * r + [0])


def fixture(fig: str, r: int = None) -> Dfao:
    """Autómatas de las figuras: fig1 (b), fig2 y fig3 (q), fig4 (q^(r))."""
    if fig == "fig1":
        return Dfao.from_table(2, "c1", {
            "c1": ["c2", "c1"],
            "c2": ["c1", "c3"],
            "c3": ["c3", "c3"],
        }, {"c1": 1, "c2": 1, "c3": 0})
    if fig == "fig2":
        return Dfao.from_table(2, "c1", {
            "c1": ["c2", "c3"],
            "c2": ["c4", "c5"],
            "c3": ["c5", "c4"],
            "c4": ["c4", "c4"],
            "c5": ["c3", "c3"],
        }, {"c1": 0, "c2": 0, "c3": 1, "c4": 0, "c5": 1})
    if fig == "fig3":
        return Dfao.from_table(4, "c1", {
            "c1": ["c2", "c3", "c3", "c2"],
            "c2": ["c2"] * 4,
            "c3": ["c3", "c3", "c2", "c2"],
        }, {"c1": 0, "c2": 0, "c3": 1})
    if fig == "fig4":
        if r is None or r < 2:
            raise InvalidParameterError(f"fig4 necesita r >= 2, se recibió {r}")
        base = 1 << r
        return Dfao.from_table(base, "c1", {
            "c1": ["c3" if d in (1, 2) else "c2" for d in range(base)],
            "c2": ["c2"] * base,
            "c3": ["c3" if d in (0, 1) else "c2" for d in range(base)],
        }, {"c1": 0, "c2": 0, "c3": 1})
    raise InvalidParameterError(f"figura desconocida: {fig}")


def parse_fixture(text: str) -> Dfao:
    """`fig1`, `fig2`, `fig3` o `fig4:<r>`."""
    name, _, param = text.partition(":")
    if name == "fig4":
        try:
            return fixture("fig4", int(param))
        except ValueError:
            raise InvalidParameterError(f"fig4 necesita r entero: '{text}'")
    if param:
        raise InvalidParameterError(f"{name} no admite parámetro")
    return fixture(name)
