"""Identidades de palabras y frecuencias de letras."""

from fractions import Fraction

from baumsweet.models.words import (
    WORD_IDENTITIES,
    delta_words,
    h_running_averages,
    l_word,
    letter_frequency,
    psi,
    real_root_xr,
    root_interval_xr,
    word_identity_counterexample,
)
from baumsweet.verify.registry import register

# (referencia, cotas quick, cotas full) por identidad
_WORD_BOUNDS = {
    "fib_word": ("Lambda_0 Lambda_1 Lambda_2 ... = palabra de Fibonacci con 0 <-> 1",
                 {"length": 10_000}, {"length": 100_000}),
    "ln_mod2": ("l_n mod 2 = 1 - phi_{n-2}", {"length": 10_000}, {"length": 100_000}),
    "lambda_phi_prime": ("1 Lambda_{n+1} = phi'(Lambda_n) 1", {"count": 20}, {"count": 25}),
    "delta_phi": ("phi(Delta_n) = Delta_{n+1}", {"count": 20, "rs": (2, 3, 4)}, {"count": 25}),
    "delta_concat_phi": ("Delta_0 Delta_1 ... = x_1 phi(Delta_0 Delta_1 ...)",
                         {"count": 16, "rs": (2, 3, 4)}, {"count": 20}),
    "delta_psi": ("psi(Delta_n Delta_{n-1} ... Delta_0) 01 = psi(Delta_{n+r})",
                  {"count": 16, "rs": (2, 3)}, {"count": 20, "rs": (2, 3, 4)}),
    "mu_fixed_points": ("mu(x_0) = x_0 x_{r-1}, mu(x_i) = x_i ... x_1 x_0 x_{r-1}",
                        {"rs": (2, 3, 4, 5)}, {"rs": (2, 3, 4, 5, 6, 7)}),
    "psi_length_ones": ("|psi(Delta_n)| = |psi(Delta_{n+1})|_1", {"count": 20, "rs": (2, 3, 4)}, {"count": 25}),
    "lr_parity": ("l^(r) mod 2 = 01 psi(Delta_0 Delta_1 ...)", {"length": 10_000, "rs": (2, 3)},
                  {"length": 100_000, "rs": (2, 3, 4)}),
    "h_length": ("|H_0 H_1 ... H_n| = 2^{n+2} - f_{n+4}", {"count": 20}, {"count": 25}),
    "h_ones": ("|H_0 H_1 ... H_n|_1 = 2^{n+1} - f_{n+3}", {"count": 20}, {"count": 25}),
    "h_concat_scan": ("h = H_0 H_1 H_2 ...", {"length": 10_000}, {"length": 100_000}),
    "h_morphic": ("h = tau(nu^omega(f))", {"length": 10_000}, {"length": 100_000}),
}


def _register_identity(identity_id: str) -> None:
    _, description = WORD_IDENTITIES[identity_id]
    reference, quick, full = _WORD_BOUNDS[identity_id]

    def check(**bounds):
        return word_identity_counterexample(identity_id, **bounds)

    register(f"words.{identity_id}", description, reference, quick=quick, full=full)(check)


for _identity in WORD_IDENTITIES:
    _register_identity(_identity)


def _bracket(r: int, margin: Fraction):
    lo, hi = root_interval_xr(r, Fraction(1, 10 ** 9))
    return lo - margin, hi + margin


@register("words.freq_l", "frecuencia de 1 en l mod 2 frente a (sqrt(5) - 1)/2",
          "la frecuencia de 0 en la palabra de Fibonacci es (sqrt(5) - 1)/2",
          quick={"length": 10_000, "margin_milli": 10}, full={"length": 100_000, "margin_milli": 5})
def words_freq_l(length, margin_milli):
    freq = letter_frequency(l_word(length), "1")
    lo, hi = _bracket(2, Fraction(margin_milli, 1000))
    return None if lo <= freq <= hi else {"frequency": str(freq), "root": real_root_xr(2)}


@register("words.freq_delta", "|psi(Delta_n)|_1 / |psi(Delta_n)| se acerca a la raíz de x^r + x - 1",
          "g = lim |psi(Delta_n)|_1 / |psi(Delta_n)| es raíz de x^r + x - 1",
          quick={"n": 20, "rs": (2, 3)}, full={"n": 24})
def words_freq_delta(n, rs):
    for r in rs:
        coded = psi(r).apply(delta_words(r, n + 1)[n])
        freq = letter_frequency(coded, "1")
        lo, hi = _bracket(r, Fraction(1, 1000))
        if not lo <= freq <= hi:
            return {"r": r, "n": n, "frequency": str(freq), "root": real_root_xr(r)}
    return None


@register("words.root", "bisección de la raíz de x^r + x - 1 en (0, 1)", "x^r + x - 1 tiene una única raíz en (0, 1)",
          quick={"rs": (2, 3, 4, 5)})
def words_root(rs):
    golden = (5 ** 0.5 - 1) / 2
    if abs(real_root_xr(2) - golden) > 1e-9:
        return {"r": 2, "root": real_root_xr(2)}
    if abs(real_root_xr(3) - 0.6823278) > 1e-6:
        return {"r": 3, "root": real_root_xr(3)}
    for r in rs:
        lo, hi = root_interval_xr(r, Fraction(1, 10 ** 6))
        if not (lo ** r + lo - 1 <= 0 <= hi ** r + hi - 1):
            return {"r": r, "interval": [str(lo), str(hi)]}
    return None


@register("words.h_averages", "media acumulada de 1 en H_0 ... H_n cerca de 1/2",
          "si la frecuencia existe, vale 1/2", quick={"count": 21, "margin_milli": 10})
def words_h_averages(count, margin_milli):
    last = h_running_averages(count)[-1]
    if abs(last - Fraction(1, 2)) > Fraction(margin_milli, 1000):
        return {"count": count, "average": str(last)}
    return None
