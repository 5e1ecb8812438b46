"""
Generadores de sucesiones.

Cada sucesión con definición doble se ofrece por barrido directo de dígitos
y por sus recurrencias, para poder cruzarlas. Los prefijos masivos se
construyen con asignaciones por rebanadas sobre bytearray (índice = n).
"""

from __future__ import annotations

import csv
import io
import logging
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Union

from baumsweet.core.errors import (
    InvalidParameterError,
    ParityError,
    UnknownSequenceError,
)
from baumsweet.models.fps import Series, series_reversion

logger = logging.getLogger(__name__)

_FLIP = bytes.maketrans(b"\x00\x01", b"\x01\x00")
_FROM_ASCII = bytes.maketrans(b"01", b"\x00\x01")


class SeqName(str, Enum):
    BAUM_SWEET = "baum_sweet"
    BAUM_SWEET_R = "baum_sweet_r"
    B_PRIME = "b_prime"
    B_DPRIME = "b_dprime"
    THUE_MORSE = "thue_morse"
    MOSER_DE_BRUIJN = "moser_de_bruijn"
    MOSER_R = "moser_r"
    P_SEQ = "p_seq"
    P_SEQ_R = "p_seq_r"
    Q_SEQ = "q_seq"
    Q_SEQ_R = "q_seq_r"
    C_SEQ = "c_seq"
    A_SEQ = "a_seq"
    D_SEQ = "d_seq"
    U_SEQ = "u_seq"
    U_SEQ_R = "u_seq_r"
    V_SEQ = "v_seq"
    V_SEQ_R = "v_seq_r"
    W_SEQ_R = "w_seq_r"
    S_SEQ_R = "s_seq_r"
    S_TILDE_R = "s_tilde_r"
    L_SEQ = "l_seq"
    L_SEQ_R = "l_seq_r"
    H_SEQ = "h_seq"
    FIBONACCI_NUMBERS = "fibonacci_numbers"


PARAMETRIC = {
    SeqName.BAUM_SWEET_R, SeqName.MOSER_R, SeqName.P_SEQ_R, SeqName.Q_SEQ_R,
    SeqName.U_SEQ_R, SeqName.V_SEQ_R, SeqName.W_SEQ_R, SeqName.S_SEQ_R,
    SeqName.S_TILDE_R, SeqName.L_SEQ_R,
}

BIT_SEQUENCES = {
    SeqName.BAUM_SWEET, SeqName.BAUM_SWEET_R, SeqName.B_PRIME, SeqName.B_DPRIME,
    SeqName.THUE_MORSE, SeqName.P_SEQ, SeqName.P_SEQ_R, SeqName.Q_SEQ, SeqName.Q_SEQ_R,
    SeqName.C_SEQ, SeqName.S_SEQ_R, SeqName.S_TILDE_R,
}

# Sucesiones de posiciones características: estrictamente crecientes
POSITIONAL = {
    SeqName.L_SEQ, SeqName.L_SEQ_R, SeqName.H_SEQ, SeqName.U_SEQ, SeqName.U_SEQ_R,
    SeqName.V_SEQ, SeqName.V_SEQ_R, SeqName.A_SEQ, SeqName.D_SEQ,
    SeqName.MOSER_DE_BRUIJN, SeqName.MOSER_R, SeqName.W_SEQ_R,
}


class SeqId:
    """Identificador `name` o `name:r` (por ejemplo `baum_sweet_r:3`)."""

    __slots__ = ("name", "r")

    def __init__(self, name: Union[SeqName, str], r: Optional[int] = None):
        try:
            self.name = SeqName(name)
        except ValueError:
            raise UnknownSequenceError(f"sucesión desconocida: {name}")
        if self.name in PARAMETRIC:
            if r is None:
                raise InvalidParameterError(f"{self.name.value} necesita el parámetro r")
            _check_r(r)
        elif r is not None:
            raise InvalidParameterError(f"{self.name.value} no admite parámetro r")
        self.r = r

    @classmethod
    def parse(cls, text: str) -> "SeqId":
        name, _, param = text.strip().partition(":")
        if not param:
            return cls(name)
        try:
            r = int(param)
        except ValueError:
            raise InvalidParameterError(f"parámetro r inválido en '{text}'")
        return cls(name, r)

    @property
    def is_bits(self) -> bool:
        return self.name in BIT_SEQUENCES

    def __str__(self) -> str:
        return self.name.value if self.r is None else f"{self.name.value}:{self.r}"

    def __repr__(self) -> str:
        return f"SeqId({self})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SeqId) and (self.name, self.r) == (other.name, other.r)

    def __hash__(self) -> int:
        return hash((self.name, self.r))


class Prefix:
    """Prefijo finito de una sucesión identificada."""

    __slots__ = ("id", "values")

    def __init__(self, seq_id: SeqId, values: Iterable[int]):
        self.id = seq_id
        self.values = tuple(values)

    @property
    def len(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self.values[:8])
        return f"Prefix({self.id}, [{head}{', ...' if len(self.values) > 8 else ''}])"

    def to_csv(self) -> str:
        return prefix_to_csv(self.values)


def prefix_to_csv(values: Sequence[int]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "value"])
    for i, v in enumerate(values):
        writer.writerow([i, v])
    return buffer.getvalue()


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise InvalidParameterError(f"r debe ser un entero >= 2, se recibió {r}")


# ---------------------------------------------------------------------------
# Baum-Sweet y Thue-Morse
# ---------------------------------------------------------------------------

def baum_sweet_r(r: int, n: int) -> int:
    """Barrido directo: 1 si todos los bloques de 0 del binario de n tienen largo divisible por r."""
    _check_r(r)
    if n == 0:
        return 1
    return int(all(len(block) % r == 0 for block in bin(n)[2:].split("1")))


def baum_sweet(n: int) -> int:
    return baum_sweet_r(2, n)


def baum_sweet_r_rec(r: int, n: int) -> int:
    """b_0 = 1, b_{2n+1} = b_{2^r n} = b_n y b = 0 en valuación 2-ádica 1..r-1."""
    _check_r(r)
    step = 1 << r
    while n:
        if n & 1:
            n >>= 1
        elif n % step == 0:
            n >>= r
        else:
            return 0
    return 1


def baum_sweet_rec(n: int) -> int:
    return baum_sweet_r_rec(2, n)


def thue_morse(n: int) -> int:
    return bin(n).count("1") & 1


def thue_morse_rec(n: int) -> int:
    # t_{2n} = t_n, t_{2n+1} = 1 - t_n
    t = 0
    while n:
        if n & 1:
            t = 1 - t
        n >>= 1
    return t


def b_prime(n: int) -> int:
    """Coeficientes de C = B + 1."""
    return 0 if n == 0 else baum_sweet(n)


def b_dprime(n: int) -> int:
    """Coeficientes de D = XB."""
    return 0 if n == 0 else baum_sweet(n - 1)


# ---------------------------------------------------------------------------
# Moser-de Bruijn y sucesiones derivadas
# ---------------------------------------------------------------------------

def moser_r(r: int, n: int) -> int:
    """m_0 = 0, m_{2n} = 2^r m_n, m_{2n+1} = 2^r m_n + 1."""
    _check_r(r)
    m = 0
    for bit in bin(n)[2:]:
        m = (m << r) + (bit == "1")
    return m


def moser_de_bruijn(n: int) -> int:
    return moser_r(2, n)


def moser_enumerate(r: int, count: int) -> List[int]:
    """Los count menores naturales con dígitos 0/1 en base 2^r, como sumas de potencias distintas."""
    _check_r(r)
    values = [0]
    power = 1
    while len(values) < count:
        values = values + [v + power for v in values]
        power <<= r
    return values[:count]


def moser_scan(r: int, limit: int) -> List[int]:
    """Barrido de fuerza bruta de los k < limit con todos sus dígitos base 2^r en {0, 1}."""
    _check_r(r)
    base = 1 << r
    found = []
    for k in range(limit):
        x = k
        while x and x % base <= 1:
            x //= base
        if x == 0:
            found.append(k)
    return found


def count_moser_below(r: int, x: int) -> int:
    """#{k : m_k < x} por búsqueda binaria sobre la sucesión creciente m."""
    lo, hi = 0, max(x, 0) + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if moser_r(r, mid) < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def p_seq(n: int) -> int:
    return 0 if n in (0, 2) else 1


def p_seq_r(r: int, n: int) -> int:
    _check_r(r)
    return 0 if n % 2 == 0 and n < (1 << r) else 1


def q_seq_r(r: int, n: int) -> int:
    """q_{2^r n+1} = q_{2^r n+2} = q_{n+1}, el resto 0, con q_0 = 0 y q_1 = 1."""
    _check_r(r)
    base = 1 << r
    while n > 1:
        n, d = divmod(n, base)
        if d not in (1, 2):
            return 0
        n += 1
    return n


def q_seq(n: int) -> int:
    return q_seq_r(2, n)


def q_seq_r_unshifted(r: int, n: int) -> int:
    """Variante que alimenta q_n en lugar de q_{n+1} (semillas q_0 = 0, q_1 = 1)."""
    _check_r(r)
    base = 1 << r
    while n > 1:
        n, d = divmod(n, base)
        if d not in (1, 2):
            return 0
    return n


def u_seq_r(r: int, n: int) -> int:
    """u_0 = 1, u_{2n} = 2^r u_n - 2^r + 1, u_{2n+1} = 2^r u_n - 2^r + 2."""
    _check_r(r)
    step = 1 << r
    u = 1
    for bit in bin(n)[2:]:
        u = step * u - step + 1 + (bit == "1")
    return u


def u_seq(n: int) -> int:
    return u_seq_r(2, n)


def u_seq_r_additive(r: int, n: int) -> int:
    """Variante aditiva u_{2n} = u_n - 2^r + 1, u_{2n+1} = u_n - 2^r + 2 (u_0 = 1)."""
    _check_r(r)
    if n == 0:
        return 1
    step = 1 << r
    u = 1
    for bit in bin(n)[2:]:
        u = u - step + 1 + (bit == "1")
    return u


def a_seq(n: int) -> int:
    """Las cinco relaciones de a con a_0..a_3 = 0, 1, 2, 7."""
    if n < 4:
        return (0, 1, 2, 7)[n]
    rem = n % 4
    if rem == 0:
        return a_seq(n - 1) + 1
    if rem == 1:
        return a_seq(n - 2) + 2
    if rem == 2:
        return a_seq(n - 3) + 3
    if n % 8 == 3:
        return a_seq(n - 3) + 7
    return 4 * a_seq((n - 1) // 2) + 3


def a_seq_alt(n: int) -> int:
    """a_{4n+i} = 4a_{2n} + i (i < 3), a_{4n+3} = 4a_{2n+1} + 3, a_0 = 0."""
    if n == 0:
        return 0
    q, rem = divmod(n, 4)
    if rem == 3:
        return 4 * a_seq_alt(2 * q + 1) + 3
    return 4 * a_seq_alt(2 * q) + rem


def w_seq_r(r: int, n: int) -> int:
    """n-ésimo natural fuera de {m_k^(r)}: punto fijo de x = n + #{m_k < x}."""
    _check_r(r)
    x = n
    while True:
        nxt = n + count_moser_below(r, x)
        if nxt == x:
            if count_moser_below(r, x + 1) == count_moser_below(r, x):
                return x
            nxt = x + 1
        x = nxt


def v_seq_r(r: int, n: int) -> int:
    return 0 if n == 0 else w_seq_r(r, n - 1) + 1


def s_seq_r(r: int, n: int) -> int:
    diff = w_seq_r(r, n) - n
    if diff % 2:
        raise ParityError(f"w_{n} - {n} = {diff} es impar (r = {r})")
    return (diff // 2) % 2


def s_representable_set(r: int, bound: int) -> List[int]:
    """Sumas (posiblemente vacías) de 2^{rk} - 2^k con k >= 2 distintos, menores que bound."""
    _check_r(r)
    found = [0]
    k = 2
    while True:
        g = (1 << (r * k)) - (1 << k)
        if g >= bound:
            break
        found.extend([s + g for s in found if s + g < bound])
        k += 1
    return sorted(found)


def s_tilde_r(r: int, n: int) -> int:
    return int(n in set(s_representable_set(r, n + 1)))


def s_tilde_r_via_s(r: int, n: int) -> int:
    """s~ = s si 2^r - 2 divide a n, y 0 en otro caso."""
    return s_seq_r(r, n) if n % ((1 << r) - 2) == 0 else 0


def s_seq_r_sums(r: int, n: int) -> int:
    """1 si n = sigma + j con sigma representable y 0 <= j <= 2^r - 3."""
    span = (1 << r) - 3
    return int(any(0 <= n - s <= span for s in s_representable_set(r, n + 1)))


def fibonacci_numbers(n: int) -> int:
    """f_0 = 0, f_1 = f_2 = 1."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# ---------------------------------------------------------------------------
# Prefijos masivos
# ---------------------------------------------------------------------------

@lru_cache(maxsize=32)
def baum_sweet_r_bits(r: int, n: int) -> bytes:
    _check_r(r)
    b = bytearray(b"\x01")
    step = 1 << r
    while len(b) < n:
        size = 2 * len(b)
        nb = bytearray(size)
        nb[1::2] = b
        nb[0::step] = b[: len(range(0, size, step))]
        b = nb
    return bytes(b[:n])


def baum_sweet_bits(n: int) -> bytes:
    return baum_sweet_r_bits(2, n)


@lru_cache(maxsize=8)
def thue_morse_bits(n: int) -> bytes:
    t = bytearray(b"\x00")
    while len(t) < n:
        nt = bytearray(2 * len(t))
        nt[0::2] = t
        nt[1::2] = t.translate(_FLIP)
        t = nt
    return bytes(t[:n])


@lru_cache(maxsize=32)
def q_seq_r_bits(r: int, n: int) -> bytes:
    _check_r(r)
    base = 1 << r
    q = bytearray(b"\x00\x01\x01")
    while len(q) < n:
        size = 2 * len(q)
        nq = bytearray(size)
        nq[1::base] = q[1: 1 + len(range(1, size, base))]
        nq[2::base] = q[1: 1 + len(range(2, size, base))]
        q = nq
    return bytes(q[:n])


def q_seq_bits(n: int) -> bytes:
    return q_seq_r_bits(2, n)


def thue_morse_series(n: int) -> Series:
    return Series.from_bitvector(thue_morse_bits(n))


def baum_sweet_r_series(r: int, n: int) -> Series:
    return Series.from_bitvector(baum_sweet_r_bits(r, n))


def c_series_r(r: int, n: int) -> Series:
    """C_r = B_r + 1 (coeficientes b')."""
    return baum_sweet_r_series(r, n) + Series.one(n)


def d_series_r(r: int, n: int) -> Series:
    """D_r = X B_r (coeficientes b'')."""
    return Series.from_bits(baum_sweet_r_series(r, n).bits << 1, n)


@lru_cache(maxsize=8)
def c_seq_bits(n: int) -> bytes:
    """Coeficientes de la inversa composicional de T = sum t_n X^n sobre F_2."""
    logger.info(f"Calculando c como reversión de Thue-Morse con N = {n}")
    c = series_reversion(thue_morse_series(n))
    text = bin(c.bits)[2:][::-1].ljust(n, "0")[:n]
    return text.encode("ascii").translate(_FROM_ASCII)


def c_seq(prefix_len: int) -> "Prefix":
    return Prefix(SeqId(SeqName.C_SEQ), c_seq_bits(prefix_len))


def h_seq(prefix_len: int) -> "Prefix":
    """Posiciones de los 0 de b."""
    return seq_prefix(SeqId(SeqName.H_SEQ), prefix_len)


def l_seq_r(r: int, prefix_len: int) -> "Prefix":
    """Posiciones de los 1 de b^(r)."""
    return seq_prefix(SeqId(SeqName.L_SEQ_R, r), prefix_len)


def char_positions(bits: Sequence[int], value: int, prepend_zero: bool = False) -> List[int]:
    """Posiciones crecientes donde bits vale value (todas < len(bits))."""
    positions = [i for i, x in enumerate(bits) if x == value]
    return [0] + positions if prepend_zero else positions


def moser_r_list(r: int, count: int) -> List[int]:
    _check_r(r)
    m = [0]
    while len(m) < count:
        m = [x for pair in ((v << r, (v << r) + 1) for v in m) for x in pair]
    return m[:count]


def w_seq_r_list(r: int, count: int) -> List[int]:
    limit = max(16, 2 * count + 8)
    while True:
        flags = bytearray(limit)
        for v in moser_r_list(r, limit):
            if v >= limit:
                break
            flags[v] = 1
        w = [i for i in range(limit) if not flags[i]]
        if len(w) >= count:
            return w[:count]
        limit *= 2


def s_seq_r_list(r: int, count: int) -> List[int]:
    out = []
    for n, w in enumerate(w_seq_r_list(r, count)):
        diff = w - n
        if diff % 2:
            raise ParityError(f"w_{n} - {n} = {diff} es impar (r = {r})")
        out.append((diff // 2) % 2)
    return out


def s_tilde_r_list(r: int, count: int) -> List[int]:
    flags = [0] * count
    for s in s_representable_set(r, count):
        flags[s] = 1
    return flags


def _grow_positions(bits_of: Callable[[int], Sequence[int]], value: int, count: int,
                    prepend_zero: bool = False, start: int = 64) -> List[int]:
    size = max(start, 2 * count)
    while True:
        positions = char_positions(bits_of(size), value, prepend_zero)
        if len(positions) >= count:
            return positions[:count]
        size *= 2


def seq_prefix(seq_id: Union[SeqId, str], n: int) -> Prefix:
    """Primeros n términos de cualquier sucesión registrada."""
    if isinstance(seq_id, str):
        seq_id = SeqId.parse(seq_id)
    name, r = seq_id.name, seq_id.r
    builders: Dict[SeqName, Callable[[], Sequence[int]]] = {
        SeqName.BAUM_SWEET: lambda: baum_sweet_bits(n),
        SeqName.BAUM_SWEET_R: lambda: baum_sweet_r_bits(r, n),
        SeqName.B_PRIME: lambda: [0] + list(baum_sweet_bits(n)[1:n]) if n else [],
        SeqName.B_DPRIME: lambda: ([0] + list(baum_sweet_bits(max(n - 1, 1))))[:n],
        SeqName.THUE_MORSE: lambda: thue_morse_bits(n),
        SeqName.MOSER_DE_BRUIJN: lambda: moser_r_list(2, n),
        SeqName.MOSER_R: lambda: moser_r_list(r, n),
        SeqName.P_SEQ: lambda: [p_seq(i) for i in range(n)],
        SeqName.P_SEQ_R: lambda: [p_seq_r(r, i) for i in range(n)],
        SeqName.Q_SEQ: lambda: q_seq_bits(n),
        SeqName.Q_SEQ_R: lambda: q_seq_r_bits(r, n),
        SeqName.C_SEQ: lambda: c_seq_bits(n) if n else b"",
        SeqName.A_SEQ: lambda: [a_seq(i) for i in range(n)],
        SeqName.D_SEQ: lambda: [p for p in _grow_positions(c_seq_bits, 0, n + 1) if p][:n],
        SeqName.U_SEQ: lambda: [v + 1 for v in moser_r_list(2, n)],
        SeqName.U_SEQ_R: lambda: [v + 1 for v in moser_r_list(r, n)],
        SeqName.V_SEQ: lambda: _grow_positions(q_seq_bits, 0, n),
        SeqName.V_SEQ_R: lambda: _grow_positions(lambda k: q_seq_r_bits(r, k), 0, n),
        SeqName.W_SEQ_R: lambda: w_seq_r_list(r, n),
        SeqName.S_SEQ_R: lambda: s_seq_r_list(r, n),
        SeqName.S_TILDE_R: lambda: s_tilde_r_list(r, n),
        SeqName.L_SEQ: lambda: _grow_positions(baum_sweet_bits, 1, n),
        SeqName.L_SEQ_R: lambda: _grow_positions(lambda k: baum_sweet_r_bits(r, k), 1, n),
        SeqName.H_SEQ: lambda: _grow_positions(baum_sweet_bits, 0, n),
        SeqName.FIBONACCI_NUMBERS: lambda: [fibonacci_numbers(i) for i in range(n)],
    }
    logger.debug(f"Generando prefijo de {seq_id} con {n} términos")
    return Prefix(seq_id, builders[name]() if n > 0 else [])


# Evaluación término a término (recurrencias) para las sucesiones que la tienen
ELEMENTWISE: Dict[SeqName, Callable[..., int]] = {
    SeqName.BAUM_SWEET: baum_sweet_rec,
    SeqName.BAUM_SWEET_R: baum_sweet_r_rec,
    SeqName.B_PRIME: b_prime,
    SeqName.B_DPRIME: b_dprime,
    SeqName.THUE_MORSE: thue_morse_rec,
    SeqName.MOSER_DE_BRUIJN: moser_de_bruijn,
    SeqName.MOSER_R: moser_r,
    SeqName.P_SEQ: p_seq,
    SeqName.P_SEQ_R: p_seq_r,
    SeqName.Q_SEQ: q_seq,
    SeqName.Q_SEQ_R: q_seq_r,
    SeqName.A_SEQ: a_seq,
    SeqName.U_SEQ: u_seq,
    SeqName.U_SEQ_R: u_seq_r,
    SeqName.V_SEQ: lambda n: v_seq_r(2, n),
    SeqName.V_SEQ_R: v_seq_r,
    SeqName.W_SEQ_R: w_seq_r,
    SeqName.S_SEQ_R: s_seq_r,
    SeqName.S_TILDE_R: s_tilde_r,
    SeqName.FIBONACCI_NUMBERS: fibonacci_numbers,
}


def seq_term(seq_id: Union[SeqId, str], n: int) -> int:
    """Término n evaluado por recurrencia (o por prefijo si la sucesión sólo es posicional)."""
    if isinstance(seq_id, str):
        seq_id = SeqId.parse(seq_id)
    fn = ELEMENTWISE.get(seq_id.name)
    if fn is None:
        return seq_prefix(seq_id, n + 1).values[n]
    return fn(seq_id.r, n) if seq_id.r is not None else fn(n)
