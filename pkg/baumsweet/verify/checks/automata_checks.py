"""Autómatas de las figuras, convención de lectura, minimización y núcleos."""

from baumsweet.models.automata import (
    Dfao,
    baum_sweet_r_automaton,
    dfao_eval,
    dfao_eval_msb,
    dfao_minimize,
    dfao_prefix,
    dfao_rebase,
    fixture,
)
from baumsweet.models.kernel import kernel_empirical, kernel_exact
from baumsweet.models.seq import baum_sweet, baum_sweet_bits, baum_sweet_r_bits, q_seq, q_seq_bits, q_seq_r_bits
from baumsweet.verify.helpers import first_failure, first_mismatch
from baumsweet.verify.registry import register


@register("auto.convention", "la lectura LSB primero reproduce b y q; MSB primero no",
          "b_2 = 0, q_6 = 1", quick={"n": 1 << 12}, full={"n": 100_000})
def auto_convention(n):
    fig1, fig3 = fixture("fig1"), fixture("fig3")
    if dfao_eval(fig1, 2) != baum_sweet(2) or dfao_eval(fig3, 6) != q_seq(6):
        return {"convention": "lsb"}
    if dfao_eval_msb(fig1, 2) == baum_sweet(2) or dfao_eval_msb(fig3, 6) == q_seq(6):
        return {"convention": "msb"}
    return first_mismatch([dfao_eval(fig1, i) for i in range(n)], [baum_sweet(i) for i in range(n)])


@register("auto.fig1_b", "el autómata de tres estados genera b", "b_n = salida(fig1, n)",
          quick={"n": 10_000}, full={"n": 1_000_000})
def auto_fig1(n):
    return first_mismatch(dfao_prefix(fixture("fig1"), n), baum_sweet_bits(n))


@register("auto.fig2_q", "el autómata de cinco estados en base 2 genera q", "q_n = salida(fig2, n)",
          quick={"n": 10_000}, full={"n": 1_000_000})
def auto_fig2(n):
    return first_mismatch(dfao_prefix(fixture("fig2"), n), q_seq_bits(n))


@register("auto.fig3_q", "el autómata de tres estados en base 4 genera q", "q_n = salida(fig3, n)",
          quick={"n": 10_000}, full={"n": 1_000_000})
def auto_fig3(n):
    return first_mismatch(dfao_prefix(fixture("fig3"), n), q_seq_bits(n))


@register("auto.fig4_qr", "el autómata en base 2^r genera q^(r)", "q_n^(r) = salida(fig4(r), n)",
          quick={"n": 10_000, "rs": (2, 3, 4)}, full={"n": 100_000})
def auto_fig4(n, rs):
    return first_failure(
        first_mismatch(dfao_prefix(fixture("fig4", r), n), q_seq_r_bits(r, n), r=r) for r in rs)


@register("auto.rebase_fig2", "fig2 reescrito en base 4 coincide con fig3; fig1 en base 4 con fig1",
          "salida(rebase(fig2, 2), n) = salida(fig3, n)", quick={"n": 10_000}, full={"n": 100_000})
def auto_rebase(n):
    fig1 = fixture("fig1")
    return first_mismatch(dfao_prefix(dfao_rebase(fixture("fig2"), 2), n), dfao_prefix(fixture("fig3"), n),
                          automaton="fig2") \
        or first_mismatch(dfao_prefix(dfao_rebase(fig1, 2), n), dfao_prefix(fig1, n), automaton="fig1")


@register("auto.fig4_2_is_fig3", "fig4 en r = 2 es fig3 como grafo etiquetado", "fig4(2) = fig3")
def auto_fig4_is_fig3():
    a, b = fixture("fig4", 2), fixture("fig3")
    for field in ("base", "names", "init", "delta", "out"):
        if getattr(a, field) != getattr(b, field):
            return {"field": field}
    return None


def _digit_scan(base: int, n: int) -> int:
    """1 sii el último dígito está en {1, 2} y los demás en {0, 1}."""
    if n == 0 or n % base not in (1, 2):
        return 0
    n //= base
    while n:
        if n % base > 1:
            return 0
        n //= base
    return 1


@register("auto.base4_digits", "q^(r)_n = 1 sii los dígitos en base 2^r son 0/1 salvo el último, en {1, 2}",
          "la expansión en base 2^r contiene sólo 0 y 1 salvo el último dígito",
          quick={"n": 10_000, "rs": (2, 3)}, full={"n": 100_000, "rs": (2, 3, 4)})
def auto_base_digits(n, rs):
    def case(r):
        a = fixture("fig4", r)
        return first_mismatch(dfao_prefix(a, n), [_digit_scan(a.base, i) for i in range(n)], r=r)
    return first_failure(case(r) for r in rs)


@register("auto.minimize", "minimización: tamaños 3 y 5, idempotente y sin cambiar la salida",
          "|fig1| = 3, |fig2| = 5", quick={"n": 10_000}, full={"n": 100_000})
def auto_minimize(n):
    for name, size in (("fig1", 3), ("fig2", 5), ("fig3", 3)):
        a = fixture(name)
        m = dfao_minimize(a)
        if m.num_states != size:
            return {"automaton": name, "states": m.num_states}
        again = dfao_minimize(m)
        if (again.delta, again.out, again.init) != (m.delta, m.out, m.init):
            return {"automaton": name, "idempotent": False}
        mismatch = first_mismatch(dfao_prefix(m, n), dfao_prefix(a, n), automaton=name)
        if mismatch:
            return mismatch
    # fig1 con un clon del estado inicial
    twin = Dfao(2, ["c1", "c2", "c3", "c1b"], 0, [[1, 3], [3, 2], [2, 2], [1, 0]], [1, 1, 0, 1])
    merged = dfao_minimize(twin)
    if merged.num_states != 3:
        return {"automaton": "twin", "states": merged.num_states}
    return None


@register("kernel.fig1", "el 2-núcleo de b tiene 3 elementos", "|K_2(b)| = 3")
def kernel_fig1():
    size = kernel_exact(fixture("fig1")).size
    return None if size == 3 else {"size": size}


@register("kernel.fig2", "el 2-núcleo de q tiene 5 elementos", "|K_2(q)| = 5")
def kernel_fig2():
    size = kernel_exact(fixture("fig2")).size
    return None if size == 5 else {"size": size}


@register("kernel.br", "el 2-núcleo de b^(r) tiene r + 1 elementos y su autómata genera b^(r)",
          "|K_2(b^(r))| = r + 1", quick={"n": 10_000, "rs": (2, 3, 4, 5)}, full={"n": 100_000})
def kernel_br(n, rs):
    for r in rs:
        a = baum_sweet_r_automaton(r)
        size = kernel_exact(a).size
        if size != r + 1:
            return {"r": r, "size": size}
        mismatch = first_mismatch(dfao_prefix(a, n), baum_sweet_r_bits(r, n), r=r)
        if mismatch:
            return mismatch
    return None


@register("kernel.empirical", "el núcleo empírico de los prefijos coincide con el exacto",
          "|K_2| empírico = |K_2| exacto", quick={"depth": 4, "bound": 256})
def kernel_empirical_check(depth, bound):
    need = 2 ** depth * bound
    for name, values in (("fig1", baum_sweet_bits(need)), ("fig2", q_seq_bits(need))):
        exact = kernel_exact(fixture(name)).size
        found = kernel_empirical(values, 2, depth, bound).size
        if found != exact:
            return {"automaton": name, "empirical": found, "exact": exact}
    return None
