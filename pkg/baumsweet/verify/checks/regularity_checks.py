"""Representaciones lineales adivinadas y perfiles de rango (evidencia, no prueba)."""

from baumsweet.models.linrep import LinRep, linrep_guess, linrep_prefix, rank_profile
from baumsweet.models.seq import moser_enumerate, seq_prefix
from baumsweet.verify.helpers import first_failure, first_mismatch
from baumsweet.verify.registry import register

DEPTHS = list(range(7))


def _guess(seq_id: str, n: int, max_dim: int):
    values = seq_prefix(seq_id, n).values
    return values, linrep_guess(values, 2, max_dim)


def _failed_guess(rep, max_dim: int):
    if not isinstance(rep, LinRep):
        return {"max_dim": max_dim, "ranks": rep.rank_profile, "reason": rep.reason}
    if rep.dim > max_dim:
        return {"max_dim": max_dim, "dim": rep.dim}
    return None


@register("linrep.u", "u es 2-regular con una representación de dimensión 2",
          "u_{2n} = 4 u_n - 3, u_{2n+1} = 4 u_n - 2", quick={"n": 1 << 12}, full={"n": 1 << 15})
def linrep_u(n):
    _, rep = _guess("u_seq", n, 4)
    failed = _failed_guess(rep, 2)
    if failed:
        return failed
    vals = linrep_prefix(rep, n)
    half = n // 2
    return first_mismatch(vals[0:2 * half:2], [4 * v - 3 for v in vals[:half]], parity="even") \
        or first_mismatch(vals[1:2 * half:2], [4 * v - 2 for v in vals[:half]], parity="odd")


@register("linrep.m", "Moser-de Bruijn es 2-regular con dimensión 2", "m_{2n} = 4 m_n, m_{2n+1} = 4 m_n + 1",
          quick={"n": 1 << 12}, full={"n": 1 << 15})
def linrep_m(n):
    _, rep = _guess("moser_de_bruijn", n, 4)
    failed = _failed_guess(rep, 2)
    if failed:
        return failed
    return first_mismatch(linrep_prefix(rep, n), moser_enumerate(2, n))


@register("linrep.a", "a es 2-regular y la representación reproduce sus cinco relaciones",
          "a_{4n} = a_{4n-1} + 1, a_{4n+1} = a_{4n-1} + 2, a_{4n+2} = a_{4n-1} + 3, "
          "a_{8n+3} = a_{8n} + 7, a_{8n+7} = 4 a_{4n+3} + 3",
          quick={"n": 1 << 12}, full={"n": 1 << 15})
def linrep_a(n):
    _, rep = _guess("a_seq", n, 8)
    failed = _failed_guess(rep, 8)
    if failed:
        return failed
    a = linrep_prefix(rep, n)

    def relation(name, pairs):
        for i, (left, right) in pairs:
            if left != right:
                return {"relation": name, "n": i, "left": str(left), "right": str(right)}
        return None

    return first_failure([
        relation("a_4n", ((i, (a[4 * i], a[4 * i - 1] + 1)) for i in range(1, n // 4))),
        relation("a_4n+1", ((i, (a[4 * i + 1], a[4 * i - 1] + 2)) for i in range(1, n // 4))),
        relation("a_4n+2", ((i, (a[4 * i + 2], a[4 * i - 1] + 3)) for i in range(1, n // 4))),
        relation("a_8n+3", ((i, (a[8 * i + 3], a[8 * i] + 7)) for i in range(n // 8))),
        relation("a_8n+7", ((i, (a[8 * i + 7], 4 * a[4 * i + 3] + 3)) for i in range(n // 8))),
    ])


@register("rank.l", "l no admite representación de dimensión 12 y su perfil de rangos crece estrictamente",
          "l no es k-regular para ningún k", quick={"n": 1 << 12, "profile_n": 1 << 14},
          full={"n": 1 << 14, "profile_n": 1 << 16})
def rank_l(n, profile_n):
    _, rep = _guess("l_seq", n, 12)
    if isinstance(rep, LinRep):
        return {"dim": rep.dim}
    ranks = rank_profile(seq_prefix("l_seq", profile_n).values, 2, DEPTHS)
    if any(b <= a for a, b in zip(ranks, ranks[1:])):
        return {"ranks": ranks}
    return None


@register("rank.v2", "el perfil de rangos de v^(2) crece estrictamente y supera 8 en profundidad 6",
          "v^(r) no es k-regular", quick={"n": 1 << 14}, full={"n": 1 << 16})
def rank_v2(n):
    ranks = rank_profile(seq_prefix("v_seq_r:2", n).values, 2, DEPTHS)
    if ranks[-1] <= 8 or any(b <= a for a, b in zip(ranks, ranks[1:])):
        return {"ranks": ranks}
    return None


@register("rank.u", "el perfil de rangos de u se estabiliza en 2", "u tiene representación de dimensión 2",
          quick={"n": 1 << 12}, full={"n": 1 << 15})
def rank_u(n):
    ranks = rank_profile(seq_prefix("u_seq", n).values, 2, DEPTHS)
    return None if ranks == [1] + [2] * (len(DEPTHS) - 1) else {"ranks": ranks}
