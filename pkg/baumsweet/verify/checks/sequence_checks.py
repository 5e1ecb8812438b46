"""Sucesiones: definiciones dobles, relaciones entre u, m, a, d, v, cotas y la capa s / s~."""

from fractions import Fraction
from itertools import groupby

from baumsweet.models.seq import (
    a_seq,
    a_seq_alt,
    baum_sweet,
    baum_sweet_bits,
    baum_sweet_r,
    baum_sweet_r_bits,
    baum_sweet_r_rec,
    baum_sweet_rec,
    c_seq_bits,
    char_positions,
    count_moser_below,
    moser_enumerate,
    moser_r,
    moser_r_list,
    moser_scan,
    q_seq,
    q_seq_bits,
    q_seq_r,
    q_seq_r_bits,
    s_seq_r_list,
    s_seq_r_sums,
    s_tilde_r_list,
    thue_morse,
    thue_morse_bits,
    thue_morse_rec,
    u_seq,
    u_seq_r,
    u_seq_r_additive,
    w_seq_r,
    w_seq_r_list,
)
from baumsweet.verify.helpers import first_failure, first_mismatch
from baumsweet.verify.registry import register

B_PREFIX_20 = (1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1)


def _runs(bits, value):
    """(inicio, largo) de cada racha maximal de value, sin la última si toca el final."""
    out, pos = [], 0
    for v, group in groupby(bits):
        size = sum(1 for _ in group)
        if v == value and pos + size < len(bits):
            out.append((pos, size))
        pos += size
    return out


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1


@register("seq.b_prefix20", "primeros 20 términos de Baum-Sweet",
          "1,1,0,1,1,0,0,1,0,1,0,0,1,0,0,1,1,0,0,1")
def b_prefix20():
    return first_mismatch(baum_sweet_bits(20), B_PREFIX_20)


# ---------------------------------------------------------------------------
# Definiciones dobles
# ---------------------------------------------------------------------------

@register("dual.b", "barrido de dígitos, recurrencia y prefijo masivo de b coinciden",
          "b_0 = 1, b_{2n+1} = b_{4n} = b_n, b_{4n+2} = 0", quick={"n": 1 << 12}, full={"n": 1 << 16})
def dual_b(n):
    bits = baum_sweet_bits(n)
    return first_mismatch([baum_sweet(i) for i in range(n)], [baum_sweet_rec(i) for i in range(n)]) \
        or first_mismatch([baum_sweet(i) for i in range(n)], bits)


@register("dual.b_r", "barrido de dígitos y recurrencia de b^(r) coinciden; r = 2 es b",
          "b_{2^r n} = b_{2n+1} = b_n", quick={"n": 1 << 12, "rs": (2, 3, 4, 5)}, full={"n": 1 << 16})
def dual_b_r(n, rs):
    def case(r):
        scan = [baum_sweet_r(r, i) for i in range(n)]
        return first_mismatch(scan, [baum_sweet_r_rec(r, i) for i in range(n)], r=r) \
            or first_mismatch(scan, baum_sweet_r_bits(r, n), r=r)
    return first_failure(case(r) for r in rs) or first_mismatch(baum_sweet_r_bits(2, n), baum_sweet_bits(n))


@register("dual.t", "suma de dígitos y recurrencia de Thue-Morse coinciden",
          "t_{2n} = t_n, t_{2n+1} = 1 - t_n", quick={"n": 1 << 12}, full={"n": 1 << 16})
def dual_t(n):
    scan = [thue_morse(i) for i in range(n)]
    return first_mismatch(scan, [thue_morse_rec(i) for i in range(n)]) or first_mismatch(scan, thue_morse_bits(n))


def _dual_moser(r, n, scan_limit):
    values = moser_r_list(r, n)
    return first_mismatch(values, [moser_r(r, i) for i in range(n)], r=r) \
        or first_mismatch(values, moser_enumerate(r, n), r=r) \
        or first_mismatch([v for v in values if v < scan_limit], moser_scan(r, scan_limit), r=r)


@register("dual.m", "Moser-de Bruijn: recurrencia frente a enumeración y barrido en base 4",
          "m_0 = 0, m_{2n} = 4m_n, m_{2n+1} = 4m_n + 1", quick={"n": 1 << 12, "scan_limit": 1 << 12},
          full={"n": 1 << 16, "scan_limit": 1 << 18})
def dual_m(n, scan_limit):
    return _dual_moser(2, n, scan_limit)


@register("dual.m_r", "m^(r): recurrencia frente a enumeración y barrido en base 2^r",
          "m_{2n}^(r) = 2^r m_n^(r), m_{2n+1}^(r) = 2^r m_n^(r) + 1",
          quick={"n": 1 << 12, "scan_limit": 1 << 12, "rs": (2, 3, 4, 5)},
          full={"n": 1 << 14, "scan_limit": 1 << 18})
def dual_m_r(n, scan_limit, rs):
    return first_failure(_dual_moser(r, n, scan_limit) for r in rs)


@register("dual.q", "recurrencia de q frente al prefijo masivo", "q_1 = 1, q_{4n+1} = q_{4n+2} = q_{n+1}",
          quick={"n": 1 << 12}, full={"n": 1 << 16})
def dual_q(n):
    return first_mismatch([q_seq(i) for i in range(n)], q_seq_bits(n))


@register("dual.q_r", "prefijo masivo de q^(r) frente a la recurrencia término a término",
          "q_{2^r n+1} = q_{2^r n+2} = q_{n+1}", quick={"n": 1 << 12, "rs": (2, 3, 4, 5)}, full={"n": 1 << 16})
def dual_q_r(n, rs):
    return first_failure(
        first_mismatch([q_seq_r(r, i) for i in range(n)], q_seq_r_bits(r, n), r=r) for r in rs)


def _u_from_q(r, prefix):
    return char_positions(q_seq_r_bits(r, prefix), 1)


def _u_hits_q(r, n):
    """u^(r) crece y q^(r) vale 1 en cada u_i^(r) para i < n (sin depender del prefijo de q)."""
    previous = 0
    for i in range(n):
        u = u_seq_r(r, i)
        if u <= previous or q_seq_r(r, u) != 1:
            return {"r": r, "n": i, "u": u}
        previous = u
    return None


@register("dual.u", "recurrencia de u frente a las posiciones de los 1 de q (prefijo) y q_{u_n} = 1 (n términos)",
          "{u_n} = {m : q_m = 1}", quick={"prefix": 1 << 12, "n": 1 << 12},
          full={"prefix": 1 << 22, "n": 1 << 16})
def dual_u(prefix, n):
    positions = _u_from_q(2, prefix)
    return first_mismatch([u_seq(i) for i in range(len(positions))], positions) or _u_hits_q(2, n)


@register("dual.u_r", "recurrencia de u^(r) frente a las posiciones de los 1 de q^(r) y q^(r)_{u_n} = 1",
          "{u_n^(r)} = {m : q_m^(r) = 1}", quick={"prefix": 1 << 12, "n": 1 << 12, "rs": (2, 3, 4, 5)},
          full={"prefix": 1 << 22, "n": 1 << 16})
def dual_u_r(prefix, n, rs):
    def case(r):
        positions = _u_from_q(r, prefix)
        return first_mismatch([u_seq_r(r, i) for i in range(len(positions))], positions, r=r) \
            or _u_hits_q(r, n)
    return first_failure(case(r) for r in rs)


def _a_from_c(prefix):
    return char_positions(c_seq_bits(prefix), 1, prepend_zero=True)


@register("dual.a", "recurrencias de a frente a las posiciones de los 1 de c (sólo los a_n < prefix; "
          "dual.a_alt cubre n < 2^16)",
          "a_{8n+7} = 4a_{4n+3} + 3", quick={"prefix": 1 << 12}, full={"prefix": 1 << 16})
def dual_a(prefix):
    positions = _a_from_c(prefix)
    return first_mismatch([a_seq(i) for i in range(len(positions))], positions)


@register("dual.a_alt", "recurrencia alternativa de a frente a la de cinco relaciones",
          "a_{4n} = 4a_{2n}, a_{4n+1} = 4a_{2n} + 1, a_{4n+2} = 4a_{2n} + 2, a_{4n+3} = 4a_{2n+1} + 3",
          quick={"n": 1 << 12}, full={"n": 1 << 16})
def dual_a_alt(n):
    return first_mismatch([a_seq(i) for i in range(n)], [a_seq_alt(i) for i in range(n)])


# ---------------------------------------------------------------------------
# u, m y sus recurrencias
# ---------------------------------------------------------------------------

@register("cor.un_mn", "u_n = m_n + 1", "u_n = m_n + 1", quick={"n": 1 << 12}, full={"n": 1 << 16})
def cor_un_mn(n):
    return first_mismatch([u_seq(i) for i in range(n)], [m + 1 for m in moser_enumerate(2, n)])


@register("seq.unr_mnr", "u_n^(r) = m_n^(r) + 1", "u_n^(r) = m_n^(r) + 1",
          quick={"n": 1 << 12, "rs": (2, 3, 4, 5)})
def unr_mnr(n, rs):
    return first_failure(
        first_mismatch([u_seq_r(r, i) for i in range(n)], [m + 1 for m in moser_enumerate(r, n)], r=r)
        for r in rs)


def _u_recurrence(r, positions):
    step = 1 << r
    for i in range(len(positions) // 2):
        base = step * positions[i]
        expected = (base - step + 1, base - step + 2)
        for offset in (0, 1):
            j = 2 * i + offset
            if positions[j] != expected[offset]:
                return {"r": r, "n": i, "index": j, "left": positions[j], "right": expected[offset]}
    return None


@register("seq.un_recur", "las posiciones de los 1 de q cumplen la recurrencia de u",
          "u_0 = 1, u_{2n} = 4u_n - 3, u_{2n+1} = 4u_n - 2", quick={"prefix": 1 << 12}, full={"prefix": 1 << 22})
def un_recur(prefix):
    positions = _u_from_q(2, prefix)
    if positions[:1] != [1]:
        return {"n": 0, "left": positions[:1], "right": [1]}
    return _u_recurrence(2, positions)


@register("cor.unr_recur.corrected", "recurrencia corregida de u^(r) sobre las posiciones de q^(r)",
          "u_{2n}^(r) = 2^r u_n^(r) - 2^r + 1, u_{2n+1}^(r) = 2^r u_n^(r) - 2^r + 2",
          quick={"prefix": 1 << 12, "rs": (2, 3, 4, 5)}, full={"prefix": 1 << 22})
def cor_unr_recur(prefix, rs):
    return first_failure(_u_recurrence(r, _u_from_q(r, prefix)) for r in rs)


@register("typo.unr_recur.paper_form", "recurrencia de u^(r) tal como está impresa (sin el factor 2^r)",
          "u_{2n}^(r) = u_n^(r) - 2^r + 1", expected="fail",
          quick={"n": 1 << 10, "rs": (3, 4, 5)}, full={"n": 1 << 12})
def typo_unr_recur(n, rs):
    return first_failure(
        first_mismatch([u_seq_r_additive(r, i) for i in range(n)], [m + 1 for m in moser_enumerate(r, n)], r=r)
        for r in rs)


def _differ(r, n):
    """u_{n+1} - u_n = (1 + (2^r - 2) 2^{rk})/(2^r - 1) con k = v_2(n + 1)."""
    denom = (1 << r) - 1
    u = [u_seq_r(r, i) for i in range(n)]
    seen = set()
    for i in range(n - 1):
        k = _v2(i + 1)
        expected = (1 + ((1 << r) - 2) * (1 << (r * k))) // denom
        if u[i + 1] - u[i] != expected:
            return {"r": r, "n": i, "difference": u[i + 1] - u[i], "expected": expected}
        seen.add(u[i + 1] - u[i])
    kmax = (n - 1).bit_length() - 1
    wanted = {(1 + ((1 << r) - 2) * (1 << (r * k))) // denom for k in range(kmax + 1)}
    if seen != wanted:
        return {"r": r, "missing": sorted(wanted - seen), "extra": sorted(seen - wanted)}
    return None


@register("thm.un_differ", "saltos de u: (1 + 2 4^k)/3 exactamente en n = (2m + 1)2^k - 1",
          "u_{n+1} - u_n = (1 + 2 4^k)/3", quick={"n": 1 << 12}, full={"n": 1 << 16})
def un_differ(n):
    return _differ(2, n)


@register("seq.unr_differ", "saltos de u^(r)", "u_{n+1}^(r) - u_n^(r) = (1 + (2^r - 2) 2^{rk})/(2^r - 1)",
          quick={"n": 1 << 12, "rs": (3, 4, 5)}, full={"n": 1 << 16})
def unr_differ(n, rs):
    return first_failure(_differ(r, n) for r in rs)


@register("seq.allseq", "t y b evaluadas sobre m y u",
          "t_{m_n} = t_n; t_{u_{2n}} = t_{u_{2n+1}} = 1 - t_n; b_{m_n} = 1 sii n = 0 o n = 2^k; b_{u_n} = 1 sii n = 0",
          quick={"n": 1 << 12}, full={"n": 1 << 14})
def all_sequences(n):
    for i in range(n):
        m, u = moser_r(2, i), u_seq(i)
        if thue_morse(m) != thue_morse(i):
            return {"identity": "t_m", "n": i}
        flipped = 1 - thue_morse(i)
        if thue_morse(u_seq(2 * i)) != flipped or thue_morse(u_seq(2 * i + 1)) != flipped:
            return {"identity": "t_u", "n": i}
        if baum_sweet(m) != int(i == 0 or i & (i - 1) == 0):
            return {"identity": "b_m", "n": i}
        if baum_sweet(u) != int(i == 0):
            return {"identity": "b_u", "n": i}
    return None


# ---------------------------------------------------------------------------
# a, d frente a m, u, v
# ---------------------------------------------------------------------------

@register("seq.an_mn", "a_{2n} = 2m_n y a_{2n+1} = 2m_{n+1} - 1 sobre las posiciones de c",
          "a_{2n} = 2m_n, a_{2n+1} = 2m_{n+1} - 1", quick={"prefix": 1 << 12}, full={"prefix": 1 << 16})
def an_mn(prefix):
    a = _a_from_c(prefix)
    for j, value in enumerate(a):
        i, odd = divmod(j, 2)
        expected = 2 * moser_r(2, i + 1) - 1 if odd else 2 * moser_r(2, i)
        if value != expected:
            return {"n": j, "left": value, "right": expected}
    return None


@register("cor.an_un", "a_{2n} = 2u_n - 2 y a_{2n+1} = 2u_{n+1} - 3",
          "a_{2n} = 2u_n - 2, a_{2n+1} = 2u_{n+1} - 3", quick={"prefix": 1 << 12}, full={"prefix": 1 << 16})
def cor_an_un(prefix):
    a = _a_from_c(prefix)
    for j, value in enumerate(a):
        i, odd = divmod(j, 2)
        expected = 2 * u_seq(i + 1) - 3 if odd else 2 * u_seq(i) - 2
        if value != expected:
            return {"n": j, "left": value, "right": expected}
    return None


@register("seq.dn_vn", "ceros de c frente a ceros de q", "d_{2n} = 2v_{n+1} - 3, d_{2n+1} = 2v_{n+1} - 2",
          quick={"prefix": 1 << 12}, full={"prefix": 1 << 16})
def dn_vn(prefix):
    d = [p for p in char_positions(c_seq_bits(prefix), 0) if p]
    v = char_positions(q_seq_bits(prefix), 0)
    for j, value in enumerate(d):
        i, odd = divmod(j, 2)
        if i + 1 >= len(v):
            break
        expected = 2 * v[i + 1] - (2 if odd else 3)
        if value != expected:
            return {"n": j, "left": value, "right": expected}
    return None


# ---------------------------------------------------------------------------
# Cotas y crecimiento
# ---------------------------------------------------------------------------

@register("seq.unr_bounds", "cotas de u^(r) y los casos de igualdad",
          "((n+1)^r + 2^r - 2)/(2^r - 1) <= u_n^(r) <= n^r + 1",
          quick={"n": 1 << 10, "rs": (2, 3, 4, 5)}, full={"n": 1 << 12})
def unr_bounds(n, rs):
    for r in rs:
        denom = (1 << r) - 1
        for i in range(n):
            u = u_seq_r(r, i)
            if not (i + 1) ** r + (1 << r) - 2 <= denom * u <= denom * (i ** r + 1):
                return {"r": r, "n": i, "u": u}
        for m in range(1, n.bit_length()):
            low = ((1 << (m * r)) + (1 << r) - 2) // denom
            if u_seq_r(r, (1 << m) - 1) != low:
                return {"r": r, "n": (1 << m) - 1, "expected": low}
            if (1 << m) < n and u_seq_r(r, 1 << m) != (1 << (m * r)) + 1:
                return {"r": r, "n": 1 << m, "expected": (1 << (m * r)) + 1}
    return None


@register("seq.liminf", "m_n^(r)/n^r recorre [1/(2^r - 1), 1] con testigos 2^m y 2^m - 1",
          "liminf u_n/n^2 = 1/3, limsup u_n/n^2 = 1", quick={"n": 1 << 12, "rs": (2, 3)},
          full={"n": 1 << 16, "rs": (2, 3, 4, 5)})
def seq_liminf(n, rs):
    for r in rs:
        low = Fraction(1, (1 << r) - 1)
        for i in range(1, n):
            ratio = Fraction(moser_r(r, i), i ** r)
            if not low <= ratio <= 1:
                return {"r": r, "n": i, "ratio": str(ratio)}
        gaps = []
        for m in range(1, n.bit_length()):
            if Fraction(moser_r(r, 1 << m), 1 << (m * r)) != 1:
                return {"r": r, "n": 1 << m, "witness": "limsup"}
            gaps.append(Fraction(moser_r(r, (1 << m) - 1), ((1 << m) - 1) ** r) - low)
        if any(b >= a for a, b in zip(gaps, gaps[1:])) or gaps[-1] > Fraction(1, 1000):
            return {"r": r, "witness": "liminf", "last_gap": str(gaps[-1])}
    return None


@register("seq.wn_count", "w_n es el n-ésimo natural fuera de m^(r) y w_n = v_{n+1} - 1",
          "w_n - n = #{k : m_k < w_n}", quick={"n": 1 << 10, "rs": (2, 3)}, full={"n": 1 << 12})
def seq_wn_count(n, rs):
    for r in rs:
        w = w_seq_r_list(r, n)
        v = char_positions(q_seq_r_bits(r, w[-1] + 2), 0)
        for i, value in enumerate(w):
            if value - i != count_moser_below(r, value):
                return {"r": r, "n": i, "w": value}
            if w_seq_r(r, i) != value or v[i + 1] - 1 != value:
                return {"r": r, "n": i, "w": value}
    return None


# ---------------------------------------------------------------------------
# Rachas
# ---------------------------------------------------------------------------

def _longest_run(runs, limit, first=0):
    """Racha más larga que empieza en first o después y cabe en [0, limit)."""
    return max((size for start, size in runs if start >= first and start + size <= limit), default=0)


@register("runs.b", "rachas de b: 1 aparece en pares sólo en 4^m - 1 y hay rachas largas de 0",
          "b_n = b_{n+1} = 1 sii n = 4^m - 1",
          quick={"prefix": 10_000, "k_max": 10, "min_zero_run": 1000},
          full={"prefix": 1_000_000, "k_max": 16, "min_zero_run": 100_000})
def runs_b(prefix, k_max, min_zero_run):
    bits = baum_sweet_bits(prefix)
    ones = _runs(bits, 1)
    longest = max(size for _, size in ones)
    if longest != 2:
        return {"max_run_of_ones": longest}
    for i in range(prefix - 1):
        pair = bits[i] == bits[i + 1] == 1
        if pair != ((i + 1) & i == 0 and (i + 1).bit_length() % 2 == 1):
            return {"n": i, "pair": pair}
    for k in range(k_max + 1):
        start = 5 << k
        if any(bits[start: start + (1 << k)]):
            return {"k": k, "block_start": start}
    longest_zeros = _longest_run(_runs(bits, 0), prefix)
    if longest_zeros <= min_zero_run:
        return {"max_run_of_zeros": longest_zeros, "min_zero_run": min_zero_run}
    return None


@register("runs.q", "rachas de q: los 1 van de dos en dos y la racha máxima de 0 crece más que por 4",
          "q_{4n} = q_{4n+3} = 0; una racha de 0 de largo k en n + 1 da otra de largo 4k + 2 en 4n - 1",
          quick={"prefix": 10_000, "min_zero_run": 1000}, full={"prefix": 1_000_000, "min_zero_run": 100_000})
def runs_q(prefix, min_zero_run):
    bits = q_seq_bits(prefix)
    for start, size in _runs(bits, 1):
        if size != 2:
            return {"run_start": start, "length": size}
    zeros = _runs(bits, 0)
    for start, size in zeros:
        n = start - 1
        if n < 1 or 4 * n + 4 * size >= prefix:
            continue
        if any(bits[4 * n - 1: 4 * n + 4 * size + 1]):
            return {"run_start": start, "length": size}
    # la racha inicial q_0 = 0 no tiene imagen
    limit, record = 2, 0
    while 4 * limit <= prefix:
        small, large = _longest_run(zeros, limit, 1), _longest_run(zeros, 4 * limit, 1)
        if large <= 4 * small or large < record:
            return {"limit": limit, "max_run_of_zeros": small, "max_run_of_zeros_4x": large}
        record = large
        limit *= 2
    longest = _longest_run(zeros, prefix)
    if longest <= min_zero_run:
        return {"max_run_of_zeros": longest, "min_zero_run": min_zero_run}
    return None


# ---------------------------------------------------------------------------
# s y s~
# ---------------------------------------------------------------------------

@register("s.sums", "s^(r) por barrido frente a la caracterización por sumas",
          "s_n = 1 sii n = sum (2^{rn_i} - 2^{n_i}) + j, 0 <= j <= 2^r - 3", quick={"n": 1 << 10, "rs": (2, 3)},
          full={"n": 1 << 12, "rs": (2, 3, 4)})
def s_sums(n, rs):
    return first_failure(
        first_mismatch(s_seq_r_list(r, n), [s_seq_r_sums(r, i) for i in range(n)], r=r) for r in rs)


@register("s.runs", "las rachas de 1 de s^(r) miden exactamente 2^r - 2", "|racha de 1| = 2^r - 2",
          quick={"n": 1 << 12, "rs": (2, 3)}, full={"n": 1 << 14, "rs": (2, 3, 4)})
def s_runs(n, rs):
    for r in rs:
        for start, size in _runs(s_seq_r_list(r, n), 1):
            if size != (1 << r) - 2:
                return {"r": r, "run_start": start, "length": size}
    return None


@register("s.tilde_sums", "s~ por sumas frente a s restringida a múltiplos de 2^r - 2",
          "s~_n = s_n si 2^r - 2 | n, 0 en otro caso", quick={"n": 1 << 12, "rs": (2, 3)},
          full={"n": 1 << 14, "rs": (2, 3, 4)})
def s_tilde_sums(n, rs):
    def case(r):
        s = s_seq_r_list(r, n)
        via_s = [s[i] if i % ((1 << r) - 2) == 0 else 0 for i in range(n)]
        return first_mismatch(s_tilde_r_list(r, n), via_s, r=r)
    return first_failure(case(r) for r in rs)


@register("s.interval", "s~ se anula en [2^{r(k+1)-1}, (4/3) 2^{r(k+1)-1}]",
          "s~_n = 0 en el intervalo", quick={"rs": (2, 3), "ks": (2, 3)})
def s_interval(rs, ks):
    for r in rs:
        for k in ks:
            low = 1 << (r * (k + 1) - 1)
            high = (4 * low) // 3
            flags = s_tilde_r_list(r, high + 1)
            hit = next((i for i in range(low, high + 1) if flags[i]), None)
            if hit is not None:
                return {"r": r, "k": k, "n": hit}
    return None


@register("s.divisibility", "para cada k hay n > 0 múltiplo de k con s~^(2)_n = 1",
          "k | n y s~_n = 1", quick={"bound": 1 << 12, "ks": tuple(range(2, 13))}, full={"bound": 1 << 16})
def s_divisibility(bound, ks):
    flags = s_tilde_r_list(2, bound + 1)
    for k in ks:
        if not any(flags[i] for i in range(k, bound + 1, k)):
            return {"k": k, "bound": bound}
    return None
