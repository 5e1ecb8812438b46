"""Identidades de series: ecuaciones algebraicas sobre F_2, ecuaciones funcionales sobre Q y reversiones."""

from fractions import Fraction

from baumsweet.models.fps import (
    RelationTerm,
    Series,
    rational_series,
    series_compose,
    series_mul,
    series_reversion,
)
from baumsweet.models.seq import baum_sweet_r_series as b_series
from baumsweet.models.seq import p_seq, p_seq_r, q_seq, q_seq_r, q_seq_r_unshifted, thue_morse_series
from baumsweet.verify.helpers import (
    b_bar,
    c_series,
    d_series,
    first_failure,
    first_mismatch,
    monomial,
    p_series,
    q_bar,
    q_series,
    relation_counterexample,
)
from baumsweet.verify.registry import register

QUICK = {"n": 1 << 12}
FULL = {"n": 1 << 16}
QUICK_R = {"n": 1 << 12, "rs": (2, 3, 4)}
FULL_R = {"n": 1 << 16, "rs": (2, 3, 4, 5)}


def _two_sided(u: Series, v: Series, **context):
    x = Series.x(min(u.trunc, v.trunc))
    if series_compose(u, v) != x:
        return {**context, "side": "u(v)"}
    if series_compose(v, u) != x:
        return {**context, "side": "v(u)"}
    return None


@register("trivial.identity", "X compuesta con X es X", "X(X) = X", quick={"n": 64})
def trivial_identity(n):
    x = Series.x(n)
    return None if series_compose(x, x) == x else {"n": n}


# ---------------------------------------------------------------------------
# Ecuaciones algebraicas sobre F_2
# ---------------------------------------------------------------------------

@register("eq.b_eq", "B es raíz de Y^4 + XY^2 + Y", "B^4 + XB^2 + B = 0", quick=QUICK, full=FULL)
def eq_b(n):
    b = b_series(2, n)
    return relation_counterexample([
        RelationTerm(b, 4, mode="pow"),
        RelationTerm(b, 2, (0, 1), mode="pow"),
        RelationTerm(b),
    ], n)


@register("eq.c_eq", "C = B + 1 satisface su ecuación", "X(C^2 + 1) + (C^4 + C) = 0", quick=QUICK, full=FULL)
def eq_c(n):
    c = c_series(2, n)
    return relation_counterexample([
        RelationTerm(c, 2, (0, 1), mode="pow"),
        RelationTerm(Series.one(n), 1, (0, 1)),
        RelationTerm(c, 4, mode="pow"),
        RelationTerm(c),
    ], n)


@register("eq.d_eq", "D = XB satisface su ecuación", "X^3(D^2 + D) + D^4 = 0", quick=QUICK, full=FULL)
def eq_d(n):
    d = d_series(2, n)
    return relation_counterexample([
        RelationTerm(d, 2, monomial(3), mode="pow"),
        RelationTerm(d, 1, monomial(3)),
        RelationTerm(d, 4, mode="pow"),
    ], n)


@register("eq.p_eq", "P = reversión de C es racional", "(X + 1)P + X^3 + X^2 + X = 0", quick=QUICK, full=FULL)
def eq_p(n):
    return relation_counterexample([
        RelationTerm(p_series(2, n), 1, (1, 1)),
        RelationTerm(Series.one(n), 1, (0, 1, 1, 1)),
    ], n)


@register("eq.q_eq", "Q = reversión de D satisface su ecuación", "(X + 1)Q^4 + X^3Q = 0", quick=QUICK, full=FULL)
def eq_q(n):
    q = q_series(2, n)
    return relation_counterexample([
        RelationTerm(q, 4, (1, 1), mode="pow"),
        RelationTerm(q, 1, monomial(3)),
    ], n)


@register("eq.br_eq", "B_r es raíz de Y^{2^r} + XY^2 + Y", "B_r^{2^r} + XB_r^2 + B_r = 0",
          quick=QUICK_R, full=FULL_R)
def eq_br(n, rs):
    def case(r):
        b = b_series(r, n)
        return relation_counterexample([
            RelationTerm(b, 1 << r, mode="pow"),
            RelationTerm(b, 2, (0, 1), mode="pow"),
            RelationTerm(b),
        ], n, r=r)
    return first_failure(case(r) for r in rs)


@register("eq.cr_eq", "C_r = B_r + 1 satisface su ecuación", "C_r^{2^r} + XC_r^2 + C_r + X = 0",
          quick=QUICK_R, full=FULL_R)
def eq_cr(n, rs):
    def case(r):
        c = c_series(r, n)
        return relation_counterexample([
            RelationTerm(c, 1 << r, mode="pow"),
            RelationTerm(c, 2, (0, 1), mode="pow"),
            RelationTerm(c),
            RelationTerm(Series.one(n), 1, (0, 1)),
        ], n, r=r)
    return first_failure(case(r) for r in rs)


@register("eq.dr_eq", "D_r = XB_r satisface su ecuación", "XD_r^{2^r} + X^{2^r}D_r^2 + X^{2^r}D_r = 0",
          quick=QUICK_R, full=FULL_R)
def eq_dr(n, rs):
    def case(r):
        d = d_series(r, n)
        return relation_counterexample([
            RelationTerm(d, 1 << r, (0, 1), mode="pow"),
            RelationTerm(d, 2, monomial(1 << r), mode="pow"),
            RelationTerm(d, 1, monomial(1 << r)),
        ], n, r=r)
    return first_failure(case(r) for r in rs)


@register("eq.qr_eq", "Q_r = reversión de D_r satisface su ecuación", "(X + 1)Q_r^{2^r} + X^{2^r-1}Q_r = 0",
          quick=QUICK_R, full=FULL_R)
def eq_qr(n, rs):
    def case(r):
        q = q_series(r, n)
        return relation_counterexample([
            RelationTerm(q, 1 << r, (1, 1), mode="pow"),
            RelationTerm(q, 1, monomial((1 << r) - 1)),
        ], n, r=r)
    return first_failure(case(r) for r in rs)


@register("eq.pr_eq", "P_r = reversión de C_r es racional", "(X^2 + 1)P_r + X^{2^r} + X = 0",
          quick=QUICK_R, full=FULL_R)
def eq_pr(n, rs):
    def case(r):
        numerator = [0] * ((1 << r) + 1)
        numerator[1] = numerator[1 << r] = 1
        return relation_counterexample([
            RelationTerm(p_series(r, n), 1, (1, 0, 1)),
            RelationTerm(Series.one(n), 1, numerator),
        ], n, r=r)
    return first_failure(case(r) for r in rs)


@register("eq.pr_eq.factor", "en r = 2 la ecuación de P_r es (X + 1) por la de P",
          "(X^2 + 1)P + X^4 + X = (X + 1)((X + 1)P + X^3 + X^2 + X)", quick=QUICK, full=FULL)
def eq_pr_factor(n):
    p = p_series(2, n)
    one = Series.one(n)
    general = RelationTerm(p, 1, (1, 0, 1)).value(n) + RelationTerm(one, 1, (0, 1, 0, 0, 1)).value(n)
    specific = RelationTerm(p, 1, (1, 1)).value(n) + RelationTerm(one, 1, (0, 1, 1, 1)).value(n)
    factored = series_mul(Series.from_coeffs([1, 1], trunc=n), specific)
    return first_mismatch(general.coeffs, factored.coeffs)


# ---------------------------------------------------------------------------
# Ecuaciones funcionales sobre los racionales
# ---------------------------------------------------------------------------

@register("eq.b_complex_eq", "B con coeficientes racionales satisface la ecuación de Mahler",
          "B(X^4) + XB(X^2) - B(X) = 0", quick=QUICK, full={"n": 1 << 14})
def eq_b_complex(n):
    b = b_bar(2, n)
    return relation_counterexample([
        RelationTerm(b, 4),
        RelationTerm(b, 2, (0, 1)),
        RelationTerm(b, 1, (-1,)),
    ], n)


@register("eq.br_complex_eq", "B_r con coeficientes racionales satisface la ecuación de Mahler",
          "B_r(X^{2^r}) + XB_r(X^2) - B_r(X) = 0", quick=QUICK_R, full={"n": 1 << 14})
def eq_br_complex(n, rs):
    def case(r):
        b = b_bar(r, n)
        return relation_counterexample([
            RelationTerm(b, 1 << r),
            RelationTerm(b, 2, (0, 1)),
            RelationTerm(b, 1, (-1,)),
        ], n, r=r)
    return first_failure(case(r) for r in rs)


@register("eq.q_complex_eq", "Q con coeficientes racionales satisface la ecuación funcional",
          "Q(X) = ((1 + X)/X^3) Q(X^4)", quick=QUICK, full={"n": 1 << 14})
def eq_q_complex(n):
    q = q_bar(2, n)
    return relation_counterexample([
        RelationTerm(q, 1, monomial(3)),
        RelationTerm(q, 4, (-1, -1)),
    ], n)


def _qr_complex(n, rs, shift):
    def case(r):
        q = q_bar(r, n)
        return relation_counterexample([
            RelationTerm(q, 1, monomial((1 << r) - shift)),
            RelationTerm(q, 1 << r, (-1, -1)),
        ], n, r=r)
    return first_failure(case(r) for r in rs)


@register("eq.qr_complex_eq.corrected", "ecuación funcional de Q_r con exponente 2^r - 1",
          "Q_r(X) = ((1 + X)/X^{2^r-1}) Q_r(X^{2^r})", quick=QUICK_R, full={"n": 1 << 14})
def eq_qr_complex_corrected(n, rs):
    return _qr_complex(n, rs, 1)


@register("typo.qr_complex_eq.paper_form", "ecuación funcional de Q_r tal como está impresa (exponente 2^r - 2)",
          "Q_r(X) = ((1 + X)/X^{2^r-2}) Q_r(X^{2^r})", expected="fail", quick=QUICK_R, full={"n": 1 << 14})
def eq_qr_complex_printed(n, rs):
    return _qr_complex(n, rs, 2)


# ---------------------------------------------------------------------------
# Reversiones y formas cerradas
# ---------------------------------------------------------------------------

@register("inv.cp_roundtrip", "C y P son inversas composicionales a ambos lados", "C(P) = P(C) = X",
          quick=QUICK, full={"n": 1 << 14})
def inv_cp(n):
    c = c_series(2, n)
    p = series_reversion(c)
    return _two_sided(c, p) or first_mismatch(p.coeffs, [p_seq(i) for i in range(n)])


@register("inv.dq_roundtrip", "D y Q son inversas composicionales a ambos lados", "D(Q) = Q(D) = X",
          quick=QUICK, full={"n": 1 << 14})
def inv_dq(n):
    d = d_series(2, n)
    return _two_sided(d, series_reversion(d))


@register("inv.thue_morse_roundtrip", "T y su inversa c componen a la identidad", "T(C_T) = C_T(T) = X",
          quick=QUICK, full={"n": 1 << 14})
def inv_thue_morse(n):
    t = thue_morse_series(n)
    return _two_sided(t, series_reversion(t))


@register("inv.cr_pr_roundtrip", "C_r y P_r son inversas; P_r coincide con la forma cerrada",
          "p_n = 0 si 2 | n y n < 2^r, 1 en otro caso", quick=QUICK_R, full={"n": 1 << 14})
def inv_cr_pr(n, rs):
    def case(r):
        c = c_series(r, n)
        p = series_reversion(c)
        return _two_sided(c, p, r=r) or first_mismatch(p.coeffs, [p_seq_r(r, i) for i in range(n)], r=r)
    return first_failure(case(r) for r in rs)


@register("inv.dr_qr_roundtrip", "D_r y Q_r son inversas composicionales", "D_r(Q_r) = Q_r(D_r) = X",
          quick=QUICK_R, full={"n": 1 << 14})
def inv_dr_qr(n, rs):
    def case(r):
        d = d_series(r, n)
        return _two_sided(d, series_reversion(d), r=r)
    return first_failure(case(r) for r in rs)


@register("inv.reversion_methods", "reversión incremental y de Newton coinciden", "U(V) = X",
          quick={"n": 512}, full={"n": 2048})
def inv_methods(n):
    for name, u in (("C", c_series(2, n)), ("D", d_series(2, n)), ("T", thue_morse_series(n))):
        if series_reversion(u, "incremental") != series_reversion(u, "newton"):
            return {"series": name}
    return None


@register("closed.p_seq", "p_n por forma cerrada frente a la reversión de C",
          "p_n = 0 si n = 0 o n = 2, 1 en otro caso", quick=QUICK, full=FULL)
def closed_p(n):
    return first_mismatch([p_seq(i) for i in range(n)], p_series(2, n).coeffs)


@register("closed.p_seq_r", "p_n^(r) por forma cerrada frente a la reversión de C_r",
          "p_n^(r) = 0 si 2 | n y n < 2^r, 1 en otro caso", quick=QUICK_R, full=FULL_R)
def closed_p_r(n, rs):
    return first_failure(
        first_mismatch([p_seq_r(r, i) for i in range(n)], p_series(r, n).coeffs, r=r) for r in rs)


@register("closed.p_bar", "desarrollo racional de P sobre Q", "P = (X^3 - X^2 + X)/(1 - X)",
          quick=QUICK, full={"n": 1 << 14})
def closed_p_bar(n):
    expanded = rational_series([0, 1, -1, 1], [1, -1], n)
    return first_mismatch(expanded.coeffs, [Fraction(p_seq(i)) for i in range(n)])


def p_bar_r(r: int, n: int) -> Series:
    numerator = [0] + [(-1) ** (k - 1) for k in range(1, 1 << r)]
    return rational_series(numerator, [1, -1], n)


@register("closed.p_bar_r", "desarrollo racional de P_r; en r = 2 coincide con el de P",
          "P_r = (1/(1 - X)) sum_{k=1}^{2^r-1} (-1)^{k-1} X^k", quick=QUICK_R, full={"n": 1 << 14})
def closed_p_bar_r(n, rs):
    same = first_mismatch(p_bar_r(2, n).coeffs, rational_series([0, 1, -1, 1], [1, -1], n).coeffs, r=2)
    if same is not None:
        return same
    return first_failure(
        first_mismatch(p_bar_r(r, n).coeffs, [Fraction(p_seq_r(r, i)) for i in range(n)], r=r) for r in rs)


# ---------------------------------------------------------------------------
# Recurrencias de q frente a la reversión
# ---------------------------------------------------------------------------

@register("rec.q_seq.reversion", "recurrencia de q frente a los coeficientes de la reversión de D",
          "q_{4n} = q_{4n+3} = 0, q_{4n+1} = q_{4n+2} = q_{n+1}", quick=QUICK, full=FULL)
def rec_q(n):
    return first_mismatch([q_seq(i) for i in range(n)], q_series(2, n).coeffs)


@register("rec.q_seq_r.corrected", "recurrencia corregida de q^(r) frente a la reversión de D_r",
          "q_{2^r n+1} = q_{2^r n+2} = q_{n+1}", quick=QUICK_R, full=FULL_R)
def rec_q_r(n, rs):
    return first_failure(
        first_mismatch([q_seq_r(r, i) for i in range(n)], q_series(r, n).coeffs, r=r) for r in rs)


@register("typo.q_recur_r.paper_form", "recurrencia de q^(r) tal como está impresa (q_n en lugar de q_{n+1})",
          "q_{2^r n+1} = q_{2^r n+2} = q_n", expected="fail", quick=QUICK_R, full=FULL_R)
def rec_q_r_printed(n, rs):
    return first_failure(
        first_mismatch([q_seq_r_unshifted(r, i) for i in range(n)], q_series(r, n).coeffs, r=r)
        for r in rs)

