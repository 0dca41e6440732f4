import pytest

from oracles import brute_partitions
from partition_identities.fps import (
    LaurentSeries,
    coeff,
    monomial_shift,
    pochhammer_fin,
    pochhammer_inf,
    series_invert,
)
from partition_identities.identities import (
    CHAIN,
    Stage,
    UnknownStage,
    build_stage,
    chain_summary,
    smallest_part_gf,
    verify_cauchy_specializations,
    verify_chain,
    verify_formula1,
    verify_formula2,
    verify_gm,
    verify_heine_specialization,
)
from partition_identities.partitions import partition_numbers


def a_brute(n, m=2):
    return sum(1 for b in brute_partitions(n) if b.count(b[-1]) >= m)


class TestBuildStage:
    def test_s1_at_6(self):
        assert coeff(build_stage(Stage.S1, 10), 6) == 7

    def test_s6_at_6(self):
        assert coeff(build_stage(Stage.S6, 10), 6) == 2 * 11 - 15

    def test_s6_laurent_cancellation(self):
        s6 = build_stage(Stage.S6, 10)
        assert s6.lowest_exp == -1
        assert coeff(s6, -1) == 0 and coeff(s6, 0) == 0

    @pytest.mark.parametrize("stage", CHAIN)
    def test_every_stage_matches_enumeration(self, stage):
        f = build_stage(stage, 16)
        assert f.order == 16
        assert f.lowest_exp >= (-1 if stage is Stage.S6 else 0)
        assert [coeff(f, n) for n in range(1, 17)] == [a_brute(n) for n in range(1, 17)]

    def test_accepts_string(self):
        assert build_stage("S4", 8) == build_stage(Stage.S4, 8)

    def test_unknown(self):
        with pytest.raises(UnknownStage):
            build_stage("S7", 10)

    def test_order_too_small(self):
        with pytest.raises(ValueError):
            build_stage(Stage.S1, 1)

    def test_cauchy_pieces_combine_to_s5_and_s6(self):
        # the two closed-form pieces differ by exactly the S5 sums
        order = 30
        combined = build_stage(Stage.CAUCHY_T1, order) - build_stage(Stage.CAUCHY_T2, order)
        assert combined == build_stage(Stage.S5, order)
        assert combined == build_stage(Stage.S6, order)

    def test_heine_sum_prefactor(self):
        order = 25
        rebuilt = monomial_shift(
            pochhammer_inf(3, order - 2) / pochhammer_inf(2, order - 2)
            * build_stage(Stage.HEINE_SPEC, order - 2),
            2,
        )
        assert rebuilt == build_stage(Stage.S3, order)


class TestChain:
    def test_order_50(self):
        reports = verify_chain(50)
        assert [r.stage_id for r in reports] == list(CHAIN)
        assert all(r.equal_to_next for r in reports[:-1])
        assert reports[-1].equal_to_next is None

    def test_degenerate_order_2(self):
        reports = verify_chain(2)
        assert all(r.equal_to_next for r in reports[:-1])
        assert chain_summary(2).passed

    def test_coefficient_1_vanishes(self):
        for r in verify_chain(10):
            assert r.coeffs[1 - r.lowest_exp] == 0

    def test_s6_window_includes_negative_exponent(self):
        s6 = verify_chain(5)[-1]
        assert s6.lowest_exp == -1 and s6.coeffs[:2] == [0, 0]

    def test_detects_a_mismatch(self, monkeypatch):
        import partition_identities.identities as ids

        original = ids._BUILDERS[Stage.S4]
        monkeypatch.setitem(ids._BUILDERS, Stage.S4, lambda o: original(o) + LaurentSeries.monomial(7, o))
        reports = ids.verify_chain(20)
        assert reports[2].equal_to_next is False and reports[2].first_mismatch == 7
        assert reports[3].first_mismatch == 7
        assert not ids.chain_summary(20).passed


class TestCauchy:
    def test_passes(self):
        assert verify_cauchy_specializations(40).passed

    def test_order_1(self):
        assert verify_cauchy_specializations(1).passed

    def test_partition_generating_function_at_5(self):
        assert coeff(_cauchy_lhs(1, 10), 5) == 7

    def test_t_equals_q_squared_coefficient(self):
        # partitions of 6 with no part 1: 6, 4+2, 3+3, 2+2+2
        assert sum(1 for b in brute_partitions(6) if 1 not in b) == 4
        assert coeff(_cauchy_lhs(2, 10), 6) == 4

    def test_order_1_both_sides(self):
        one_plus_q = LaurentSeries.from_coeffs([1, 1], 1)
        assert _cauchy_lhs(1, 1) == one_plus_q
        assert series_invert(pochhammer_inf(1, 1)) == one_plus_q


def _cauchy_lhs(step, order):
    """sum_{n>=0} q^(step*n) / (q)_n built directly from the series primitives."""
    total = LaurentSeries.zero(order)
    for n in range(order // step + 1):
        term = series_invert(pochhammer_fin(1, n, order - step * n))
        total = total + monomial_shift(term, step * n)
    return total


class TestHeine:
    def test_order_50(self):
        assert verify_heine_specialization(50).passed

    def test_low_coefficients(self):
        s2, s3 = build_stage(Stage.S2, 10), build_stage(Stage.S3, 10)
        assert coeff(s2, 2) == coeff(s3, 2) == 1
        assert coeff(s2, 1) == coeff(s3, 1) == 0


class TestFormula1:
    @pytest.mark.parametrize("mode", ["enumeration", "series", "closed_form"])
    def test_modes(self, mode):
        s = verify_formula1(25, mode)
        assert s.passed and s.checks > 0

    def test_n6(self):
        pn = partition_numbers(7)
        assert (pn[6], pn[7], 2 * pn[6] - pn[7]) == (11, 15, 7)
        assert verify_formula1(6).passed

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            verify_formula1(5, "guess")


class TestFormula2:
    def test_small(self):
        s = verify_formula2(6)
        assert s.passed
        assert verify_formula2(1).passed

    def test_fast(self):
        assert verify_formula2(25, fast=True).passed


class TestGm:
    def test_m3_n6(self):
        # 3+1+1+1, 2+2+2, 2+1+1+1+1, 1+1+1+1+1+1
        assert a_brute(6, 3) == 4
        assert coeff(smallest_part_gf(3, 10), 6) == 4

    def test_m2_n6(self):
        assert coeff(smallest_part_gf(2, 10), 6) == 7

    def test_m1_n5(self):
        assert coeff(smallest_part_gf(1, 10), 5) == 7

    def test_summary(self):
        assert verify_gm(4, 15, 20).passed

    def test_n_above_order(self):
        with pytest.raises(ValueError):
            verify_gm(2, 30, 10)
