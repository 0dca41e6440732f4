"""Coefficient-level checks of the smallest-part identities.

Each generating-function expression in the analytic derivation of
``a(n) = 2p(n) - p(n+1)`` is built as a truncated series and compared
coefficientwise against its neighbours, against enumeration, and against the
closed form. Nothing here raises on a failed check: mismatches are collected
into the returned reports.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .bijections import FamilyTag, Kind, psi_forward
from .fps import (
    LaurentSeries,
    coeff,
    monomial_shift,
    pochhammer_fin,
    pochhammer_inf,
    series_invert,
)
from .partitions import (
    count_no_ones,
    count_smallest_at_least,
    count_smallest_exactly_once,
    p_fixed_diff,
    p_fixed_diff_dp,
    partition_numbers,
)


class UnknownStage(KeyError):
    pass


class Stage(str, enum.Enum):
    S1 = "S1"  # sum_{k>=1} q^{2k} / (q^k)_inf
    S2 = "S2"  # q^2/(q)_inf * sum_{k>=0} (q)_k q^{2k}
    S3 = "S3"  # q^2 (q^3)_inf/(q^2)_inf * sum_{k>=0} (q^2)_k q^k / ((q)_k (q^3)_k)
    S4 = "S4"  # sum_{k>=0} q^{k+2} / ((q)_k (1 - q^{k+2}))
    S5 = "S5"  # sum q^{k+2}/(q)_{k+2} - sum q^{2k+3}/(q)_{k+2}
    S6 = "S6"  # 2/(q)_inf - 1/(q (q)_inf) + 1/q - 1
    HEINE_SPEC = "HEINE_SPEC"  # sum_{k>=0} (q^2)_k q^k / ((q)_k (q^3)_k) on its own
    CAUCHY_T1 = "CAUCHY_T1"  # 1/(q)_inf - 1/(1-q)
    CAUCHY_T2 = "CAUCHY_T2"  # (1/q) (1/(q^2)_inf - (1-q+q^2)/(1-q))


CHAIN = (Stage.S1, Stage.S2, Stage.S3, Stage.S4, Stage.S5, Stage.S6)


# -- building blocks -------------------------------------------------------


def _recip_poch_inf(k: int, order: int) -> LaurentSeries:
    return series_invert(pochhammer_inf(k, order))


def _recip_poch_fin(k: int, n: int, order: int) -> LaurentSeries:
    return series_invert(pochhammer_fin(k, n, order))


def _one_minus_q(order: int) -> LaurentSeries:
    return LaurentSeries.from_coeffs([1, -1], order)


def _shifted(f_builder, shift: int, order: int) -> LaurentSeries:
    """``q**shift * f`` exact to ``order``, with ``f`` built only as far as needed."""
    return monomial_shift(f_builder(order - shift), shift)


def smallest_part_gf(m: int, order: int) -> LaurentSeries:
    """``sum_{k>=1} q^{mk} / (q^k)_inf``: partitions whose smallest part repeats >= m times."""
    if m < 1:
        raise ValueError("m must be >= 1")
    total = LaurentSeries.zero(order)
    k = 1
    while m * k <= order:
        total = total + _shifted(lambda o, k=k: _recip_poch_inf(k, o), m * k, order)
        k += 1
    return total


def heine_sum(order: int) -> LaurentSeries:
    total = LaurentSeries.zero(order)
    for k in range(order + 1):
        def term(o: int, k: int = k) -> LaurentSeries:
            num = pochhammer_fin(2, k, o)
            den = pochhammer_fin(1, k, o) * pochhammer_fin(3, k, o)
            return num / den
        total = total + _shifted(term, k, order)
    return total


def _stage_s1(order: int) -> LaurentSeries:
    return smallest_part_gf(2, order)


def _stage_s2(order: int) -> LaurentSeries:
    def inner(o: int) -> LaurentSeries:
        total = LaurentSeries.zero(o)
        k = 0
        while 2 * k <= o:
            total = total + _shifted(lambda oo, k=k: pochhammer_fin(1, k, oo), 2 * k, o)
            k += 1
        return _recip_poch_inf(1, o) * total

    return _shifted(inner, 2, order)


def _stage_s3(order: int) -> LaurentSeries:
    def inner(o: int) -> LaurentSeries:
        prefactor = pochhammer_inf(3, o) / pochhammer_inf(2, o)
        return prefactor * heine_sum(o)

    return _shifted(inner, 2, order)


def _stage_s4(order: int) -> LaurentSeries:
    total = LaurentSeries.zero(order)
    k = 0
    while k + 2 <= order:
        def term(o: int, k: int = k) -> LaurentSeries:
            den = pochhammer_fin(1, k, o) * pochhammer_fin(k + 2, 1, o)
            return series_invert(den)
        total = total + _shifted(term, k + 2, order)
        k += 1
    return total


def _stage_s5(order: int) -> LaurentSeries:
    first = LaurentSeries.zero(order)
    second = LaurentSeries.zero(order)
    k = 0
    while k + 2 <= order:
        first = first + _shifted(lambda o, k=k: _recip_poch_fin(1, k + 2, o), k + 2, order)
        if 2 * k + 3 <= order:
            second = second + _shifted(
                lambda o, k=k: _recip_poch_fin(1, k + 2, o), 2 * k + 3, order
            )
        k += 1
    return first - second


def _stage_s6(order: int) -> LaurentSeries:
    # 1/(q)_inf is needed one step past `order` because of the 1/q factor
    part = _recip_poch_inf(1, order + 1)
    q_inv = LaurentSeries.monomial(-1, order)
    return (2 * part.truncate(order) - monomial_shift(part, -1) + q_inv - 1).truncate(order)


def _cauchy_t1(order: int) -> LaurentSeries:
    return _recip_poch_inf(1, order) - series_invert(_one_minus_q(order))


def _cauchy_t2(order: int) -> LaurentSeries:
    def bracket(o: int) -> LaurentSeries:
        num = LaurentSeries.from_coeffs([1, -1, 1], o)
        return _recip_poch_inf(2, o) - num / _one_minus_q(o)

    return _shifted(bracket, -1, order)


_BUILDERS = {
    Stage.S1: _stage_s1,
    Stage.S2: _stage_s2,
    Stage.S3: _stage_s3,
    Stage.S4: _stage_s4,
    Stage.S5: _stage_s5,
    Stage.S6: _stage_s6,
    Stage.HEINE_SPEC: heine_sum,
    Stage.CAUCHY_T1: _cauchy_t1,
    Stage.CAUCHY_T2: _cauchy_t2,
}


def build_stage(stage_id: Stage | str, order: int) -> LaurentSeries:
    """The named expression as a series exact through ``q**order``."""
    try:
        stage = Stage(stage_id)
    except ValueError:
        raise UnknownStage(stage_id) from None
    if order < 2:
        raise ValueError("order must be >= 2")
    return _BUILDERS[stage](order)


# -- reports ---------------------------------------------------------------


class Mismatch(NamedTuple):
    n: int
    lhs: int
    rhs: int
    check: str = ""


@dataclass
class StageReport:
    stage_id: Stage
    lowest_exp: int
    coeffs: list[int]
    equal_to_next: bool | None  # None for the final stage
    first_mismatch: int | None = None


@dataclass
class VerificationSummary:
    identity: str
    n_range: tuple[int, int]
    mismatches: list[Mismatch] = field(default_factory=list)
    checks: int = 0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def compare(self, n: int, lhs: int, rhs: int, check: str = "") -> None:
        self.checks += 1
        if lhs != rhs:
            self.mismatches.append(Mismatch(n, lhs, rhs, check))

    def compare_series(self, f: LaurentSeries, g: LaurentSeries, start: int, stop: int, check: str = "") -> None:
        for e in range(start, stop + 1):
            self.compare(e, coeff(f, e), coeff(g, e), check)

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        lo, hi = self.n_range
        text = f"{verdict} {self.identity} [{lo}..{hi}] ({self.checks} comparisons)"
        for m in self.mismatches[:5]:
            text += f"\n    n={m.n}: {m.lhs} != {m.rhs} {m.check}".rstrip()
        if len(self.mismatches) > 5:
            text += f"\n    ... {len(self.mismatches) - 5} more"
        return text


def verify_chain(order: int = 100) -> list[StageReport]:
    """Build every stage and compare each with the next on exponents ``1..order``.

    Stage S6 additionally has its ``q**-1`` and ``q**0`` coefficients recorded
    in its report window, since those must cancel.
    """
    series = [build_stage(s, order) for s in CHAIN]
    reports = []
    for i, (stage, f) in enumerate(zip(CHAIN, series)):
        lo = min(f.lowest_exp, 1)
        equal = None
        first = None
        if i + 1 < len(series):
            g = series[i + 1]
            first = next(
                (e for e in range(1, order + 1) if coeff(f, e) != coeff(g, e)), None
            )
            equal = first is None
        reports.append(StageReport(stage, lo, f.window(lo, order), equal, first))
    return reports


def chain_summary(order: int = 100) -> VerificationSummary:
    """``verify_chain`` folded into a single pass/fail, plus the S6 cancellations."""
    summary = VerificationSummary("chain S1..S6", (1, order))
    reports = verify_chain(order)
    for a, b in zip(reports, reports[1:]):
        wa = dict(zip(range(a.lowest_exp, order + 1), a.coeffs))
        wb = dict(zip(range(b.lowest_exp, order + 1), b.coeffs))
        for e in range(1, order + 1):
            summary.compare(e, wa[e], wb[e], f"{a.stage_id.value} vs {b.stage_id.value}")
    s6 = reports[-1]
    w6 = dict(zip(range(s6.lowest_exp, order + 1), s6.coeffs))
    summary.compare(-1, w6[-1], 0, "S6 coefficient of q^-1")
    summary.compare(0, w6[0], 0, "S6 coefficient of q^0")
    return summary


def verify_cauchy_specializations(order: int = 100) -> VerificationSummary:
    """The two Cauchy sums (t = q and t = q^2, a = 0) and their shifted forms."""
    summary = VerificationSummary("cauchy", (0, order))
    lhs1 = LaurentSeries.zero(order)
    lhs2 = LaurentSeries.zero(order)
    for n in range(order + 1):
        lhs1 = lhs1 + _shifted(lambda o, n=n: _recip_poch_fin(1, n, o), n, order)
        if 2 * n <= order:
            lhs2 = lhs2 + _shifted(lambda o, n=n: _recip_poch_fin(1, n, o), 2 * n, order)
    summary.compare_series(lhs1, _recip_poch_inf(1, order), 0, order, "sum q^n/(q)_n = 1/(q)_inf")
    summary.compare_series(lhs2, _recip_poch_inf(2, order), 0, order, "sum q^2n/(q)_n = 1/(q^2)_inf")

    shifted1 = LaurentSeries.zero(order)
    shifted2 = LaurentSeries.zero(order)
    k = 0
    while k + 2 <= order:
        shifted1 = shifted1 + _shifted(lambda o, k=k: _recip_poch_fin(1, k + 2, o), k + 2, order)
        if 2 * (k + 2) <= order:
            shifted2 = shifted2 + _shifted(
                lambda o, k=k: _recip_poch_fin(1, k + 2, o), 2 * (k + 2), order
            )
        k += 1
    closed2 = _recip_poch_inf(2, order) - LaurentSeries.from_coeffs([1, -1, 1], order) / _one_minus_q(order)
    summary.compare_series(shifted1, build_stage(Stage.CAUCHY_T1, max(order, 2)), 0, order,
                           "sum_{k>=0} q^{k+2}/(q)_{k+2} = 1/(q)_inf - 1/(1-q)")
    summary.compare_series(shifted2, closed2, 0, order,
                           "sum_{k>=0} q^{2(k+2)}/(q)_{k+2} = 1/(q^2)_inf - (1-q+q^2)/(1-q)")
    return summary


def verify_heine_specialization(order: int = 100) -> VerificationSummary:
    summary = VerificationSummary("heine S2 = S3", (1, order))
    summary.compare_series(build_stage(Stage.S2, order), build_stage(Stage.S3, order), 1, order)
    return summary


FORMULA1_MODES = ("enumeration", "series", "closed_form")


def verify_formula1(n_max: int, mode: str = "enumeration") -> VerificationSummary:
    """``a(n) == 2p(n) - p(n+1)`` and ``c(n) == d(n)`` for ``1 <= n <= n_max``.

    ``mode`` picks where ``a(n)`` comes from: filtering enumerated partitions,
    the S1 series, or the S6 closed form. ``p`` always comes from the
    pentagonal recurrence.
    """
    if mode not in FORMULA1_MODES:
        raise ValueError(f"mode must be one of {FORMULA1_MODES}")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    pn = partition_numbers(n_max + 1)
    summary = VerificationSummary(f"formula1[{mode}]", (1, n_max))
    if mode == "enumeration":
        a = {n: count_smallest_at_least(n, 2) for n in range(1, n_max + 1)}
    else:
        f = build_stage(Stage.S1 if mode == "series" else Stage.S6, max(n_max, 2))
        a = {n: coeff(f, n) for n in range(1, n_max + 1)}
    for n in range(1, n_max + 1):
        summary.compare(n, a[n], 2 * pn[n] - pn[n + 1], "a(n) = 2p(n) - p(n+1)")
        d = pn[n + 1] - pn[n]
        if mode == "enumeration":
            summary.compare(n, count_smallest_exactly_once(n), count_no_ones(n), "c(n) = d(n)")
            summary.compare(n, count_no_ones(n), d, "d(n) = p(n+1) - p(n)")
        else:
            summary.compare(n, pn[n] - a[n], d, "p(n) - a(n) = p(n+1) - p(n)")
    return summary


def verify_formula2(n_max: int, fast: bool = False) -> VerificationSummary:
    """``a(n) == p(2n, n)`` for ``1 <= n <= n_max``.

    With ``fast`` the fixed-difference count uses the bounded-parts DP and the
    family-level image check is skipped, which allows much larger ``n``.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    summary = VerificationSummary("formula2" + ("[dp]" if fast else ""), (1, n_max))
    for n in range(1, n_max + 1):
        a_n = count_smallest_at_least(n, 2)
        if fast:
            summary.compare(n, a_n, p_fixed_diff_dp(2 * n, n), "a(n) = p(2n,n) [dp]")
            continue
        summary.compare(n, a_n, p_fixed_diff(2 * n, n), "a(n) = p(2n,n)")
        images = {psi_forward(pi) for pi in FamilyTag(Kind.A, n).members()}
        summary.compare(n, len(images), p_fixed_diff(2 * n, n), "|psi(A(n))| = |F(n)|")
    return summary


def verify_gm(m_max: int = 5, n_max: int = 30, order: int | None = None) -> VerificationSummary:
    """Coefficients of ``sum_k q^{mk}/(q^k)_inf`` against enumeration for each ``m``."""
    order = n_max if order is None else order
    if m_max < 1 or n_max < 1:
        raise ValueError("m_max and n_max must be >= 1")
    if n_max > order:
        raise ValueError("n_max must not exceed order")
    order = max(order, 2)
    summary = VerificationSummary(f"G_m for m<={m_max}", (1, n_max))
    pn = partition_numbers(n_max)
    s1 = build_stage(Stage.S1, order)
    for m in range(1, m_max + 1):
        g = smallest_part_gf(m, order)
        for n in range(1, n_max + 1):
            summary.compare(n, coeff(g, n), count_smallest_at_least(n, m), f"G_{m}")
            if m == 1:
                summary.compare(n, coeff(g, n), pn[n], "G_1 = p(n)")
            if m == 2:
                summary.compare(n, coeff(g, n), coeff(s1, n), "G_2 = S1")
    return summary
