"""
Series de potencias truncadas con coeficientes exactos.

Sobre F_2 los coeficientes se empaquetan en un int de Python (bit i =
coeficiente de X^i), de modo que suma es xor, el cuadrado es un
"esparcido" de bits (Frobenius) y el producto usa una tabla de ventanas
de 8 bits. Sobre F_p (p impar) y sobre los racionales se usa un vector
denso de enteros o Fraction.

Convención: una serie con trunc = N se conoce módulo X^N. Toda operación
devuelve trunc = mínimo de las entradas (salvo la sustitución X -> X^e,
que conoce exactamente e*N coeficientes).
"""

from __future__ import annotations

import csv
import io
import logging
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from baumsweet.core.config import settings
from baumsweet.core.errors import (
    FieldMismatchError,
    InvalidParameterError,
    NotInvertibleError,
    TruncationError,
)

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

# Umbrales de los núcleos de F_2
_SPARSE_BITS = 32
_COMPOSE_DIRECT = 32

_ASCII_BITS = bytes.maketrans(b"\x00\x01", b"01")


class CoeffField:
    """Dominio de coeficientes: cuerpo primo F_p o los racionales (p = None)."""

    __slots__ = ("p",)

    def __init__(self, p: Optional[int] = None):
        if p is not None:
            if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
                raise InvalidParameterError(f"p = {p} no es primo")
        self.p = p

    @property
    def is_gf2(self) -> bool:
        return self.p == 2

    @property
    def name(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    def reduce(self, x: Scalar) -> Scalar:
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inverse(self, x: Scalar) -> Scalar:
        x = self.reduce(x)
        if x == 0:
            raise NotInvertibleError("el cero no es invertible")
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def parse(self, text: str) -> Scalar:
        return self.reduce(Fraction(text.strip()))

    def format(self, x: Scalar) -> str:
        return str(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, CoeffField) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("CoeffField", self.p))

    def __repr__(self) -> str:
        return self.name


GF2 = CoeffField(2)
QQ = CoeffField(None)


# ---------------------------------------------------------------------------
# Núcleos de F_2 sobre enteros empaquetados
# ---------------------------------------------------------------------------

def _mask(n: int) -> int:
    return (1 << n) - 1


def _gf2_mul(a: int, b: int, n: int) -> int:
    """Producto sin acarreo módulo X^n."""
    m = _mask(n)
    a &= m
    b &= m
    if not a or not b:
        return 0
    if a.bit_count() > b.bit_count():
        a, b = b, a
    if a.bit_count() <= _SPARSE_BITS:
        result = 0
        while a:
            low = a & -a
            result ^= b << (low.bit_length() - 1)
            a ^= low
        return result & m
    table = [0] * 256
    for v in range(1, 256):
        table[v] = (table[v >> 1] << 1) ^ (b if v & 1 else 0)
    result = 0
    for i, byte in enumerate(a.to_bytes((a.bit_length() + 7) // 8, "little")):
        if byte:
            result ^= table[byte] << (8 * i)
    return result & m


def _gf2_spread(a: int, e: int) -> int:
    """Sustitución X -> X^e: el bit i pasa a la posición e*i."""
    if a == 0 or e == 1:
        return a
    return int(("0" * (e - 1)).join(bin(a)[2:]), 2)


def _gf2_split(a: int) -> Tuple[int, int]:
    """Separa a = A(X^2) + X*B(X^2) y devuelve (A, B)."""
    s = bin(a)[2:][::-1]
    even = s[0::2][::-1] or "0"
    odd = s[1::2][::-1] or "0"
    return int(even, 2), int(odd, 2)


def _gf2_compose(u: int, v: int, n: int) -> int:
    """u(v) módulo X^n con v(0) = 0.

    Sobre F_2 vale U(X) = A(X)^2 + X*B(X)^2, luego
    U(V) = A(V)^2 + V*B(V)^2, y el cuadrado duplica la precisión gratis.
    """
    m = _mask(n)
    u &= m
    v &= m
    if u <= 1:
        return u
    if n <= _COMPOSE_DIRECT:
        result = 0
        for i in range(u.bit_length() - 1, -1, -1):
            result = _gf2_mul(result, v, n)
            if (u >> i) & 1:
                result ^= 1
        return result
    half = (n + 1) // 2
    even, odd = _gf2_split(u)
    a = _gf2_compose(even, v, half)
    b = _gf2_compose(odd, v, half)
    return (_gf2_spread(a, 2) ^ _gf2_mul(v, _gf2_spread(b, 2), n)) & m


def _gf2_derivative(u: int, n: int) -> int:
    # sólo sobreviven los coeficientes impares; caen a posiciones pares
    even_mask = ((1 << (2 * ((n + 1) // 2))) - 1) // 3
    return (u >> 1) & even_mask & _mask(n)


# ---------------------------------------------------------------------------
# Tipo Series
# ---------------------------------------------------------------------------

class Series:
    """Serie de potencias conocida módulo X^trunc. Inmutable."""

    __slots__ = ("field", "trunc", "_bits", "_coeffs")

    def __init__(self, field: CoeffField, trunc: int, *, bits: Optional[int] = None,
                 coeffs: Optional[Sequence[Scalar]] = None):
        if trunc < 1:
            raise TruncationError(f"trunc debe ser positivo, se recibió {trunc}")
        self.field = field
        self.trunc = trunc
        if field.is_gf2:
            if bits is None:
                bits = 0
                for i, c in enumerate(coeffs or ()):
                    if i < trunc and int(c) % 2:
                        bits |= 1 << i
            self._bits = bits & _mask(trunc)
            self._coeffs = None
        else:
            if coeffs is None:
                coeffs = [(bits >> i) & 1 for i in range(trunc)] if bits else []
            values = [field.reduce(c) for c in list(coeffs)[:trunc]]
            values.extend([field.reduce(0)] * (trunc - len(values)))
            self._coeffs = tuple(values)
            self._bits = None

    # -- constructores -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], field: CoeffField = GF2,
                    trunc: Optional[int] = None) -> "Series":
        """Polinomio exacto visto como serie módulo X^trunc (por defecto su longitud)."""
        coeffs = list(coeffs)
        return cls(field, trunc if trunc is not None else max(len(coeffs), 1), coeffs=coeffs)

    @classmethod
    def from_bits(cls, bits: int, trunc: int) -> "Series":
        return cls(GF2, trunc, bits=bits)

    @classmethod
    def from_bitvector(cls, values: Union[bytes, bytearray], trunc: Optional[int] = None) -> "Series":
        """Serie de F_2 a partir de un vector de bytes 0/1 (índice = exponente)."""
        trunc = trunc if trunc is not None else len(values)
        if len(values) < trunc:
            raise TruncationError(f"se pidieron {trunc} coeficientes y hay {len(values)}")
        text = bytes(values[:trunc]).translate(_ASCII_BITS)[::-1]
        return cls(GF2, trunc, bits=int(text, 2) if text else 0)

    @classmethod
    def x(cls, trunc: int, field: CoeffField = GF2) -> "Series":
        return cls.from_coeffs([0, 1], field, trunc)

    @classmethod
    def one(cls, trunc: int, field: CoeffField = GF2) -> "Series":
        return cls.from_coeffs([1], field, trunc)

    @classmethod
    def zero(cls, trunc: int, field: CoeffField = GF2) -> "Series":
        return cls.from_coeffs([], field, trunc)

    # -- acceso -------------------------------------------------------------

    @property
    def bits(self) -> int:
        if not self.field.is_gf2:
            raise FieldMismatchError("bits sólo existe para series sobre GF(2)")
        return self._bits

    @property
    def coeffs(self) -> Tuple[Scalar, ...]:
        if self._coeffs is not None:
            return self._coeffs
        text = bin(self._bits)[2:][::-1].ljust(self.trunc, "0")[: self.trunc]
        return tuple(1 if ch == "1" else 0 for ch in text)

    def __getitem__(self, i: int) -> Scalar:
        if i < 0 or i >= self.trunc:
            raise TruncationError(f"coeficiente {i} fuera de la truncación {self.trunc}")
        if self._coeffs is not None:
            return self._coeffs[i]
        return (self._bits >> i) & 1

    def __len__(self) -> int:
        return self.trunc

    def is_zero(self) -> bool:
        if self._coeffs is None:
            return self._bits == 0
        return not any(self._coeffs)

    def valuation(self) -> Optional[int]:
        """Menor exponente con coeficiente no nulo (None si la serie es 0 a esta precisión)."""
        if self._coeffs is None:
            return (self._bits & -self._bits).bit_length() - 1 if self._bits else None
        return next((i for i, c in enumerate(self._coeffs) if c), None)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        if self.field != other.field or self.trunc != other.trunc:
            return False
        if self._coeffs is None:
            return self._bits == other._bits
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        key = self._bits if self._coeffs is None else self._coeffs
        return hash((self.field, self.trunc, key))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs[:12]):
            if c:
                terms.append(("" if c == 1 else f"{c}*") + ("1" if i == 0 else f"X^{i}"))
        body = " + ".join(terms) or "0"
        if self.trunc > 12:
            body += " + ..."
        return f"Series({self.field.name}, trunc={self.trunc}, {body})"

    # -- operadores ---------------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return series_sub(self, other)

    def __neg__(self) -> "Series":
        return series_neg(self)

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)

    def __pow__(self, e: int) -> "Series":
        return series_pow(self, e)

    def __call__(self, inner: "Series") -> "Series":
        return series_compose(self, inner)


# ---------------------------------------------------------------------------
# Operaciones
# ---------------------------------------------------------------------------

def _check_field(a: Series, b: Series) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"cuerpos distintos: {a.field.name} y {b.field.name}")


def series_truncate(a: Series, n: int) -> Series:
    if n > a.trunc:
        raise TruncationError(f"no se puede truncar a {n}: la serie se conoce módulo X^{a.trunc}")
    if a.field.is_gf2:
        return Series(GF2, n, bits=a.bits)
    return Series(a.field, n, coeffs=a.coeffs[:n])


def _as_polynomial(a: Series, n: int) -> Series:
    """Lee los coeficientes conocidos como polinomio exacto módulo X^n (uso interno)."""
    if a.field.is_gf2:
        return Series(GF2, n, bits=a.bits)
    return Series(a.field, n, coeffs=a.coeffs[:n])


def series_add(a: Series, b: Series) -> Series:
    _check_field(a, b)
    n = min(a.trunc, b.trunc)
    if a.field.is_gf2:
        return Series(GF2, n, bits=a.bits ^ b.bits)
    return Series(a.field, n, coeffs=[x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n])])


def series_neg(a: Series) -> Series:
    if a.field.is_gf2:
        return a
    return Series(a.field, a.trunc, coeffs=[-x for x in a.coeffs])


def series_sub(a: Series, b: Series) -> Series:
    _check_field(a, b)
    if a.field.is_gf2:
        return series_add(a, b)
    n = min(a.trunc, b.trunc)
    return Series(a.field, n, coeffs=[x - y for x, y in zip(a.coeffs[:n], b.coeffs[:n])])


def series_scale(a: Series, c: Scalar) -> Series:
    c = a.field.reduce(c)
    if a.field.is_gf2:
        return a if c else Series.zero(a.trunc)
    return Series(a.field, a.trunc, coeffs=[c * x for x in a.coeffs])


def _dense_mul(a: Sequence[Scalar], b: Sequence[Scalar], n: int) -> List[Scalar]:
    nz_a = [(i, x) for i, x in enumerate(a[:n]) if x]
    nz_b = [(j, y) for j, y in enumerate(b[:n]) if y]
    if len(nz_a) > len(nz_b):
        nz_a, nz_b = nz_b, nz_a
    out: List[Scalar] = [0] * n
    for i, x in nz_a:
        lim = n - i
        for j, y in nz_b:
            if j >= lim:
                break
            out[i + j] += x * y
    return out


def series_mul(a: Series, b: Series) -> Series:
    _check_field(a, b)
    n = min(a.trunc, b.trunc)
    if a.field.is_gf2:
        return Series(GF2, n, bits=_gf2_mul(a.bits, b.bits, n))
    return Series(a.field, n, coeffs=_dense_mul(a.coeffs, b.coeffs, n))


def series_substitute(a: Series, e: int, limit: Optional[int] = None) -> Series:
    """S(X^e). Se conocen exactamente e*trunc coeficientes (o limit si es menor)."""
    if e < 1:
        raise InvalidParameterError(f"exponente de sustitución inválido: {e}")
    n = a.trunc * e if limit is None else min(limit, a.trunc * e)
    if a.field.is_gf2:
        return Series(GF2, n, bits=_gf2_spread(a.bits, e))
    out: List[Scalar] = [0] * n
    for i, c in enumerate(a.coeffs[: (n + e - 1) // e]):
        out[e * i] = c
    return Series(a.field, n, coeffs=out)


def _is_power_of(e: int, p: int) -> bool:
    while e > 1 and e % p == 0:
        e //= p
    return e == 1


def series_square(a: Series) -> Series:
    """Cuadrado con trunc conservado; sobre F_2 es el esparcido de bits."""
    if a.field.is_gf2:
        return Series(GF2, a.trunc, bits=_gf2_spread(a.bits, 2))
    return series_mul(a, a)


def series_pow(a: Series, e: int) -> Series:
    if e < 0:
        raise InvalidParameterError("sólo potencias no negativas")
    if a.field.p is not None and e > 0 and _is_power_of(e, a.field.p):
        # Frobenius: S^(p^k)(X) = S(X^(p^k)) coeficiente a coeficiente
        return series_truncate(series_substitute(a, e), a.trunc)
    result = Series.one(a.trunc, a.field)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_derivative(a: Series) -> Series:
    if a.trunc < 2:
        raise TruncationError("la derivada de una serie conocida módulo X no tiene coeficientes conocidos")
    n = a.trunc - 1
    if a.field.is_gf2:
        return Series(GF2, n, bits=_gf2_derivative(a.bits, n + 1))
    return Series(a.field, n, coeffs=[(i + 1) * a.coeffs[i + 1] for i in range(n)])


def series_inverse(a: Series) -> Series:
    """Inversa multiplicativa por Newton: I <- I(2 - aI)."""
    inv0 = a.field.inverse(a[0])
    n = a.trunc
    if a.field.is_gf2:
        # en característica 2: I <- a * I^2
        inv, prec = 1, 1
        while prec < n:
            prec = min(2 * prec, n)
            inv = _gf2_mul(a.bits, _gf2_spread(inv, 2), prec)
        return Series(GF2, n, bits=inv)
    inv = Series.from_coeffs([inv0], a.field, 1)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        ip = _as_polynomial(inv, prec)
        two = Series.from_coeffs([2], a.field, prec)
        inv = series_mul(ip, series_sub(two, series_mul(series_truncate(a, prec), ip)))
    return inv


def series_compose(outer: Series, inner: Series) -> Series:
    """outer(inner) módulo X^min(trunc). inner debe tener término constante 0."""
    _check_field(outer, inner)
    if inner[0] != 0:
        raise InvalidParameterError("la serie interior debe tener término constante 0")
    n = min(outer.trunc, inner.trunc)
    if outer.field.is_gf2:
        return Series(GF2, n, bits=_gf2_compose(outer.bits, inner.bits, n))
    # Horner exacto
    coeffs = outer.coeffs[:n]
    inner_c = inner.coeffs[:n]
    result: List[Scalar] = [0] * n
    for c in reversed(coeffs):
        result = [outer.field.reduce(x) for x in _dense_mul(result, inner_c, n)]
        result[0] += c
    return Series(outer.field, n, coeffs=result)


def _slice(a: Series, start: int, stop: int) -> Series:
    """Coeficientes start..stop-1 desplazados a 0."""
    if a.field.is_gf2:
        return Series(GF2, stop - start, bits=a.bits >> start)
    return Series(a.field, stop - start, coeffs=a.coeffs[start:stop])


def _shift_up(a: Series, k: int, n: int) -> Series:
    if a.field.is_gf2:
        return Series(GF2, n, bits=a.bits << k)
    return Series(a.field, n, coeffs=[0] * k + list(a.coeffs))


def _reversion_incremental(u: Series, pivot_inv: Scalar) -> Series:
    field, n = u.field, u.trunc
    coeffs: List[Scalar] = [0, pivot_inv] + [0] * (n - 2)
    for m in range(2, n):
        head = series_truncate(u, m + 1)
        w = series_compose(head, Series.from_coeffs(coeffs[: m + 1], field, m + 1))
        coeffs[m] = field.reduce(-w[m] * pivot_inv)
    return Series.from_coeffs(coeffs, field, n)


def _reversion_newton(u: Series, pivot_inv: Scalar) -> Series:
    """V <- V - (U(V) - X) / U'(V), duplicando la precisión en cada paso."""
    field, n = u.field, u.trunc
    du = series_derivative(u)
    v = Series.from_coeffs([0, pivot_inv], field, 2)
    prec = 2
    while prec < n:
        old, prec = prec, min(2 * prec, n)
        vp = _as_polynomial(v, prec)
        err = series_sub(series_compose(series_truncate(u, prec), vp), Series.x(prec, field))
        k = prec - old
        slope = series_compose(series_truncate(du, k), _as_polynomial(v, k))
        delta = series_mul(_slice(err, old, prec), series_inverse(slope))
        v = series_sub(vp, _shift_up(delta, old, prec))
        logger.debug(f"reversión newton: precisión {prec}/{n}")
    return v


def series_reversion(u: Series, method: Optional[str] = None) -> Series:
    """Inversa composicional V con U(V) = X módulo X^trunc.

    method: "incremental" (resuelve v_n coeficiente a coeficiente con
    pivote u_1), "newton" (levantamiento con duplicación de precisión) o
    "auto" (newton sobre GF(2), incremental en otro caso).
    """
    if u[0] != 0:
        raise NotInvertibleError("u_0 debe ser 0 para invertir composicionalmente")
    if u.trunc < 2:
        return Series.zero(u.trunc, u.field)
    try:
        pivot_inv = u.field.inverse(u[1])
    except NotInvertibleError:
        raise NotInvertibleError("u_1 no es invertible en el cuerpo")
    method = method or settings.reversion_method
    if method == "auto":
        method = "newton" if u.field.is_gf2 else "incremental"
    logger.info(f"Reversión de serie sobre {u.field.name} con N = {u.trunc} ({method})")
    if method == "incremental":
        return _reversion_incremental(u, pivot_inv)
    if method == "newton":
        return _reversion_newton(u, pivot_inv)
    raise InvalidParameterError(f"método de reversión desconocido: {method}")


def rational_series(numerator: Sequence[Scalar], denominator: Sequence[Scalar], n: int,
                    field: CoeffField = QQ) -> Series:
    """Desarrollo de numerator/denominator módulo X^n."""
    den = [field.reduce(c) for c in denominator]
    if not den or den[0] == 0:
        raise NotInvertibleError("el denominador debe tener término constante no nulo")
    num = [field.reduce(c) for c in list(numerator)[:n]]
    num.extend([field.reduce(0)] * (n - len(num)))
    d0_inv = field.inverse(den[0])
    tail = [(j, c) for j, c in enumerate(den) if j > 0 and c]
    out: List[Scalar] = []
    for k in range(n):
        acc = num[k]
        for j, c in tail:
            if j > k:
                break
            acc -= c * out[k - j]
        out.append(field.reduce(acc * d0_inv))
    return Series(field, n, coeffs=out)


class RelationTerm:
    """multiplier(X) * S(X^e) (mode "sub") o multiplier(X) * S^e (mode "pow")."""

    __slots__ = ("series", "exponent", "multiplier", "mode")

    def __init__(self, series: Series, exponent: int = 1,
                 multiplier: Sequence[Scalar] = (1,), mode: str = "sub"):
        if mode not in ("sub", "pow"):
            raise InvalidParameterError(f"modo de término desconocido: {mode}")
        self.series = series
        self.exponent = exponent
        self.multiplier = tuple(multiplier)
        self.mode = mode

    def available(self) -> int:
        s, e = self.series, self.exponent
        if self.mode == "sub":
            return s.trunc * e
        if s.field.p is not None and _is_power_of(e, s.field.p):
            return s.trunc * e
        return s.trunc

    def value(self, n: int) -> Series:
        if self.available() < n:
            raise TruncationError(
                f"la cota {n} supera la truncación disponible {self.available()}")
        s, e = self.series, self.exponent
        if self.mode == "pow" and not (s.field.p is not None and _is_power_of(e, s.field.p)):
            base = series_pow(series_truncate(s, n), e)
        else:
            base = series_substitute(s, e, limit=n)
        return series_mul(Series.from_coeffs(self.multiplier, s.field, n), base)


def check_relation(terms: Sequence[Union[RelationTerm, tuple]], n: int) -> bool:
    """True si la suma de los términos se anula módulo X^n.

    Las tuplas (serie, e, multiplicador[, modo]) se aceptan como atajo; sin
    modo se interpreta e como potencia del argumento, S(X^e).
    """
    parsed = [t if isinstance(t, RelationTerm) else RelationTerm(*t) for t in terms]
    if not parsed:
        return True
    field = parsed[0].series.field
    total = Series.zero(n, field)
    for term in parsed:
        if term.series.field != field:
            raise FieldMismatchError("todos los términos deben compartir cuerpo")
        total = series_add(total, term.value(n))
    return total.is_zero()


def series_from_sequence(values: Union[Callable[[int], Scalar], Iterable[Scalar]], n: int,
                         field: CoeffField = GF2) -> Series:
    """Serie con coeficientes tomados de una función índice -> valor o de un iterable."""
    if callable(values):
        coeffs = [values(i) for i in range(n)]
    else:
        coeffs = list(values)[:n]
        if len(coeffs) < n:
            raise TruncationError(f"se pidieron {n} coeficientes y hay {len(coeffs)}")
    return Series.from_coeffs(coeffs, field, n)


def series_to_csv(s: Series) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "coeff"])
    for i, c in enumerate(s.coeffs):
        writer.writerow([i, s.field.format(c)])
    return buffer.getvalue()


def series_from_csv(text: str, field: CoeffField = GF2) -> Series:
    reader = csv.DictReader(io.StringIO(text))
    rows = sorted(((int(r["n"]), r["coeff"]) for r in reader), key=lambda r: r[0])
    if [i for i, _ in rows] != list(range(len(rows))):
        raise TruncationError("el CSV debe listar los índices 0..N-1 sin huecos")
    return Series.from_coeffs([field.parse(c) for _, c in rows], field, max(len(rows), 1))
