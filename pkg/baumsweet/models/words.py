"""
Morfismos de monoides libres, puntos fijos y las familias de palabras
Fibonacci, Lambda, Delta y H.

Las palabras son str con una letra por carácter. En el alfabeto
{x_0, ..., x_{r-1}} la letra x_i se guarda como el dígito base 36 de i.
"""

from __future__ import annotations

import logging
import string
from collections import deque
from fractions import Fraction
from itertools import islice
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from baumsweet.core.errors import (
    InvalidParameterError,
    NotProlongableError,
    UnknownIdentityError,
)
from baumsweet.models.seq import (
    SeqId,
    SeqName,
    fibonacci_numbers,
    seq_prefix,
)

logger = logging.getLogger(__name__)

_LETTERS = string.digits + string.ascii_lowercase
_SWAP01 = str.maketrans("01", "10")


class Morphism:
    """Endomorfismo del monoide libre dado por las imágenes de cada letra."""

    __slots__ = ("images", "_table")

    def __init__(self, images: Mapping[str, str]):
        for letter in images:
            if len(letter) != 1:
                raise InvalidParameterError(f"las letras deben ser un solo carácter: '{letter}'")
        self.images = dict(images)
        self._table = str.maketrans(self.images)

    @property
    def alphabet(self) -> str:
        return "".join(sorted(self.images))

    def __call__(self, word: str) -> str:
        return self.apply(word)

    def apply(self, word: str) -> str:
        unknown = set(word) - set(self.images)
        if unknown:
            raise InvalidParameterError(f"letras fuera del alfabeto: {sorted(unknown)}")
        return word.translate(self._table)

    def compose(self, other: "Morphism") -> "Morphism":
        """self o other: x -> self(other(x))."""
        return Morphism({x: self.apply(w) for x, w in other.images.items()})

    def power(self, e: int) -> "Morphism":
        if e < 1:
            raise InvalidParameterError(f"potencia inválida: {e}")
        result = self
        for _ in range(e - 1):
            result = self.compose(result)
        return result

    def is_prolongable(self, seed: str) -> bool:
        image = self.images.get(seed, "")
        return len(image) >= 2 and image[0] == seed

    def __eq__(self, other) -> bool:
        return isinstance(other, Morphism) and self.images == other.images

    def __repr__(self) -> str:
        body = ", ".join(f"{x}->{w}" for x, w in sorted(self.images.items()))
        return f"Morphism({body})"


def iter_fixed_point(m: Morphism, seed: str) -> Iterator[str]:
    """Letras del punto fijo m^omega(seed): x = m(x_0) m(x_1) m(x_2) ..."""
    if not m.is_prolongable(seed):
        raise NotProlongableError(f"{m} no es prolongable en '{seed}'")
    image = m.images[seed]
    yield from image
    pending = deque(image[1:])
    while pending:
        piece = m.images[pending.popleft()]
        yield from piece
        pending.extend(piece)


def fixed_point(m: Morphism, seed: str, length: int) -> str:
    return "".join(islice(iter_fixed_point(m, seed), length))


def letter_frequency(word: str, letter: str) -> Fraction:
    if not word:
        raise InvalidParameterError("la frecuencia de una palabra vacía no está definida")
    return Fraction(word.count(letter), len(word))


def root_interval_xr(r: int, tol: Fraction) -> Tuple[Fraction, Fraction]:
    """Intervalo [lo, hi] de ancho <= tol que contiene la raíz de x^r + x - 1 en (0, 1)."""
    if r < 2:
        raise InvalidParameterError(f"r debe ser >= 2, se recibió {r}")
    tol = Fraction(tol)
    if tol <= 0:
        raise InvalidParameterError("la tolerancia debe ser positiva")
    lo, hi = Fraction(0), Fraction(1)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid ** r + mid - 1 < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def real_root_xr(r: int, tol: float = 1e-12) -> float:
    lo, hi = root_interval_xr(r, Fraction(tol))
    return float((lo + hi) / 2)


# ---------------------------------------------------------------------------
# Fibonacci y Lambda
# ---------------------------------------------------------------------------

PHI = Morphism({"0": "01", "1": "0"})
PHI_PRIME = Morphism({"0": "1", "1": "10"})


def fibonacci_word(length: int) -> str:
    return fixed_point(PHI, "0", length)


def swap01(word: str) -> str:
    return word.translate(_SWAP01)


def iter_lambda_words() -> Iterator[str]:
    """Lambda_0 = 1, Lambda_1 = 01, Lambda_n = Lambda_{n-2} Lambda_{n-1}."""
    prev, cur = "1", "01"
    yield prev
    while True:
        yield cur
        prev, cur = cur, prev + cur


def lambda_words(count: int) -> List[str]:
    return list(islice(iter_lambda_words(), count))


def _concat_until(words: Iterator[str], length: int) -> str:
    parts, total = [], 0
    for word in words:
        if total >= length:
            break
        parts.append(word)
        total += len(word)
    return "".join(parts)[:length]


def lambda_concat(length: int) -> str:
    return _concat_until(iter_lambda_words(), length)


def l_word(length: int, r: int = 2) -> str:
    """l_n^(r) mod 2 para n < length."""
    seq_id = SeqId(SeqName.L_SEQ) if r == 2 else SeqId(SeqName.L_SEQ_R, r)
    return "".join(str(v & 1) for v in seq_prefix(seq_id, length))


# ---------------------------------------------------------------------------
# Delta (alfabeto x_0 .. x_{r-1})
# ---------------------------------------------------------------------------

def x(i: int) -> str:
    return _LETTERS[i]


def _check_r(r: int) -> None:
    if r < 2 or r > len(_LETTERS):
        raise InvalidParameterError(f"r debe estar entre 2 y {len(_LETTERS)}, se recibió {r}")


def iter_delta_words(r: int) -> Iterator[str]:
    """Delta_i = x_{i+1} (i < r-1), Delta_{r-1} = x_0 x_{r-1}, Delta_n = Delta_{n-r} Delta_{n-1}."""
    _check_r(r)
    window = deque([x(i + 1) for i in range(r - 1)] + [x(0) + x(r - 1)], maxlen=r)
    yield from window
    while True:
        word = window[0] + window[-1]
        window.append(word)
        yield word


def delta_words(r: int, count: int) -> List[str]:
    return list(islice(iter_delta_words(r), count))


def delta_concat(r: int, length: int) -> str:
    return _concat_until(iter_delta_words(r), length)


def delta_morphism(r: int) -> Morphism:
    """phi(x_i) = Delta_i."""
    return Morphism({x(i): w for i, w in enumerate(delta_words(r, r))})


def mu(r: int) -> Morphism:
    return delta_morphism(r).power(r)


def psi(r: int) -> Morphism:
    """Codificación x_0 -> 0, x_i -> 1."""
    _check_r(r)
    return Morphism({x(i): "0" if i == 0 else "1" for i in range(r)})


def format_delta_word(word: str) -> str:
    return " ".join(f"x{_LETTERS.index(c)}" for c in word)


# ---------------------------------------------------------------------------
# Palabras H, nu y tau
# ---------------------------------------------------------------------------

NU = Morphism({"a": "bc", "b": "ad", "c": "ebc", "d": "de", "e": "de", "f": "fbc"})
TAU = Morphism({"a": "0", "b": "1", "c": "0", "d": "0", "e": "1", "f": "0"})


def iter_h_words() -> Iterator[str]:
    """H_0 = 0, H_1 = 10, H_{n+2} = H_n (01)^{2^n} H_{n+1} desde n = 0."""
    prev, cur = "0", "10"
    yield prev
    n = 0
    while True:
        yield cur
        prev, cur = cur, prev + "01" * (1 << n) + cur
        n += 1


def h_words(count: int) -> List[str]:
    return list(islice(iter_h_words(), count))


def h_concat(length: int) -> str:
    return _concat_until(iter_h_words(), length)


def h_word(length: int) -> str:
    """h_n mod 2 para n < length, a partir de las posiciones de 0 en b."""
    return "".join(str(v & 1) for v in seq_prefix(SeqId(SeqName.H_SEQ), length))


def h_morphic(length: int) -> str:
    return TAU.apply(fixed_point(NU, "f", length))


def h_running_averages(count: int) -> List[Fraction]:
    """|H_0...H_n|_1 / |H_0...H_n| para n < count (la convergencia no se afirma).

    Sólo cuenta letras: |H_{n+2}| = |H_n| + 2^{n+1} + |H_{n+1}| y análogo para los 1.
    """
    sizes, ones = [1, 2], [0, 1]
    while len(sizes) < count:
        n = len(sizes) - 2
        sizes.append(sizes[n] + (2 << n) + sizes[n + 1])
        ones.append(ones[n] + (1 << n) + ones[n + 1])
    averages = []
    total_size = total_ones = 0
    for size, one in zip(sizes[:count], ones[:count]):
        total_size += size
        total_ones += one
        averages.append(Fraction(total_ones, total_size))
    return averages


# ---------------------------------------------------------------------------
# Identidades
# ---------------------------------------------------------------------------

Counterexample = Optional[Dict[str, object]]


def _first_mismatch(a: str, b: str) -> Counterexample:
    for i, (p, q) in enumerate(zip(a, b)):
        if p != q:
            return {"index": i, "left": p, "right": q}
    if len(a) != len(b):
        return {"index": min(len(a), len(b)), "left_len": len(a), "right_len": len(b)}
    return None


def identity_fib_word(length: int = 10_000) -> Counterexample:
    return _first_mismatch(lambda_concat(length), swap01(fibonacci_word(length)))


def identity_ln_mod2(length: int = 10_000) -> Counterexample:
    fib = fibonacci_word(max(length - 2, 0))
    expected = ("01" + swap01(fib))[:length]
    return _first_mismatch(l_word(length), expected)


def identity_lambda_phi_prime(count: int = 20) -> Counterexample:
    words = lambda_words(count + 1)
    for n in range(count):
        if "1" + words[n + 1] != PHI_PRIME.apply(words[n]) + "1":
            return {"n": n}
    return None


def identity_delta_phi(count: int = 25, rs: Sequence[int] = (2, 3, 4)) -> Counterexample:
    for r in rs:
        phi = delta_morphism(r)
        words = delta_words(r, count + 2)
        for n in range(count + 1):
            if phi.apply(words[n]) != words[n + 1]:
                return {"r": r, "n": n}
    return None


def identity_delta_concat_phi(count: int = 20, rs: Sequence[int] = (2, 3, 4)) -> Counterexample:
    """Delta_0 ... Delta_{n+1} = x_1 phi(Delta_0 ... Delta_n)."""
    for r in rs:
        phi = delta_morphism(r)
        words = delta_words(r, count + 2)
        for n in range(count + 1):
            if "".join(words[: n + 2]) != x(1) + phi.apply("".join(words[: n + 1])):
                return {"r": r, "n": n}
    return None


def identity_delta_psi(count: int = 20, rs: Sequence[int] = (2, 3)) -> Counterexample:
    """psi(Delta_n ... Delta_0) 01 = psi(Delta_{n+r})."""
    for r in rs:
        code = psi(r)
        words = delta_words(r, count + r + 1)
        for n in range(count + 1):
            if code.apply("".join(reversed(words[: n + 1]))) + "01" != code.apply(words[n + r]):
                return {"r": r, "n": n}
    return None


def identity_mu_fixed_points(rs: Sequence[int] = (2, 3, 4, 5)) -> Counterexample:
    """mu(x_0) = x_0 x_{r-1}, mu(x_i) = x_i ... x_1 x_0 x_{r-1}, y exactamente r semillas."""
    for r in rs:
        m = mu(r)
        for i in range(r):
            expected = "".join(x(t) for t in range(i, -1, -1)) + x(r - 1)
            if m.images[x(i)] != expected:
                return {"r": r, "letter": f"x{i}", "image": format_delta_word(m.images[x(i)])}
        seeds = [c for c in m.alphabet if m.is_prolongable(c)]
        if len(seeds) != r:
            return {"r": r, "seeds": len(seeds)}
    return None


def identity_psi_length_ones(count: int = 20, rs: Sequence[int] = (2, 3, 4)) -> Counterexample:
    """|psi(Delta_n)| = |psi(Delta_{n+1})|_1."""
    for r in rs:
        code = psi(r)
        words = delta_words(r, count + 2)
        for n in range(count + 1):
            if len(words[n]) != code.apply(words[n + 1]).count("1"):
                return {"r": r, "n": n}
    return None


def identity_lr_parity(length: int = 10_000, rs: Sequence[int] = (2, 3)) -> Counterexample:
    """l^(r) mod 2 = 01 psi(Delta_0 Delta_1 ...)."""
    for r in rs:
        expected = "01" + psi(r).apply(delta_concat(r, max(length - 2, 0)))
        mismatch = _first_mismatch(l_word(length, r), expected[:length])
        if mismatch is not None:
            mismatch["r"] = r
            return mismatch
    return None


def identity_h_length(count: int = 20) -> Counterexample:
    total = 0
    for n, word in enumerate(h_words(count + 1)):
        total += len(word)
        if total != (1 << (n + 2)) - fibonacci_numbers(n + 4):
            return {"n": n, "length": total}
    return None


def identity_h_ones(count: int = 20) -> Counterexample:
    ones = 0
    for n, word in enumerate(h_words(count + 1)):
        ones += word.count("1")
        if ones != (1 << (n + 1)) - fibonacci_numbers(n + 3):
            return {"n": n, "ones": ones}
    return None


def identity_h_concat_scan(length: int = 10_000) -> Counterexample:
    return _first_mismatch(h_concat(length), h_word(length))


def identity_h_morphic(length: int = 10_000) -> Counterexample:
    return _first_mismatch(h_morphic(length), h_word(length))


WORD_IDENTITIES: Dict[str, Tuple[Callable[..., Counterexample], str]] = {
    "fib_word": (identity_fib_word, "Lambda_0 Lambda_1 ... es la palabra de Fibonacci con 0 y 1 intercambiados"),
    "ln_mod2": (identity_ln_mod2, "l_n mod 2 = 0, 1, 1 - phi_{n-2}"),
    "lambda_phi_prime": (identity_lambda_phi_prime, "1 Lambda_{n+1} = phi'(Lambda_n) 1"),
    "delta_phi": (identity_delta_phi, "phi(Delta_n) = Delta_{n+1}"),
    "delta_concat_phi": (identity_delta_concat_phi, "Delta_0 ... Delta_{n+1} = x_1 phi(Delta_0 ... Delta_n)"),
    "delta_psi": (identity_delta_psi, "psi(Delta_n ... Delta_0) 01 = psi(Delta_{n+r})"),
    "mu_fixed_points": (identity_mu_fixed_points, "mu = phi^r tiene exactamente r semillas prolongables"),
    "psi_length_ones": (identity_psi_length_ones, "|psi(Delta_n)| = |psi(Delta_{n+1})|_1"),
    "lr_parity": (identity_lr_parity, "l^(r) mod 2 = 01 psi(Delta_0 Delta_1 ...)"),
    "h_length": (identity_h_length, "|H_0 ... H_n| = 2^{n+2} - f_{n+4}"),
    "h_ones": (identity_h_ones, "|H_0 ... H_n|_1 = 2^{n+1} - f_{n+3}"),
    "h_concat_scan": (identity_h_concat_scan, "h mod 2 = H_0 H_1 H_2 ..."),
    "h_morphic": (identity_h_morphic, "h mod 2 = tau(nu^omega(f))"),
}


def word_identity_counterexample(identity_id: str, **params) -> Counterexample:
    try:
        fn, _ = WORD_IDENTITIES[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"identidad desconocida: {identity_id}")
    result = fn(**params)
    if result is not None:
        logger.info(f"La identidad {identity_id} falla: {result}")
    return result


def check_word_identity(identity_id: str, **params) -> bool:
    return word_identity_counterexample(identity_id, **params) is None
