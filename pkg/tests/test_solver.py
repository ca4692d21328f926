import math

import numpy as np
import pytest

from bohrcc.catalog import expblend, janowski, lemniscate, sakaguchi, strongly, wang
from bohrcc.errors import InconsistencyError, ParameterError
from bohrcc.extremal import build_extremal, h_at
from bohrcc.solver import (
    ClassId,
    build_problem,
    lhs_at,
    sharpness_witness,
    solve_corollary_closed_form,
    solve_radius,
    solve_radius_rotated,
    target_constant,
    threshold_scan,
)

CANONICAL = [
    janowski(1.0, -1.0),
    sakaguchi(0.25),
    lemniscate(0.5),
    expblend(0.03),
    strongly(0.5),
    wang(0.5, 1.0),
]


class TestAnchors:
    def test_ks_base_case(self):
        want = math.log(2.0) / (2.0 + math.log(2.0))
        assert solve_radius(ClassId.KS, sakaguchi(0.0)).r_f == pytest.approx(want, abs=1e-9)
        closed = solve_corollary_closed_form("ks-sakaguchi", {"gamma": 0.0})
        assert closed.r_f == pytest.approx(want, abs=1e-9)

    def test_sc_full_range_janowski(self):
        want = 3.0 - 2.0 * math.sqrt(2.0)
        res = solve_radius(ClassId.SC, janowski(1, -1))
        assert res.r_f == pytest.approx(want, abs=1e-10)
        assert res.sharp and res.capped == res.r_f

    def test_sc_lemniscate_table_value(self):
        assert solve_radius(ClassId.SC, lemniscate(0.5)).r_f == pytest.approx(
            0.3040402, abs=1e-6
        )

    def test_sc_capped_case(self):
        res = solve_radius(ClassId.SC, janowski(0.5, -0.3))
        assert res.r_f == pytest.approx(0.364714, abs=1e-4)
        assert res.capped == pytest.approx(1.0 / 3.0)
        assert not res.sharp
        assert "1/3" in res.notes

    def test_cc_full_range_janowski_is_exactly_one_third(self):
        # T(1/3) = 1/2 = -k(-1) for the widest Janowski spec
        res = solve_radius(ClassId.CC, janowski(1, -1))
        assert res.r_f == pytest.approx(1.0 / 3.0, abs=1e-9)

    @pytest.mark.parametrize("spec", CANONICAL, ids=lambda s: s.label())
    @pytest.mark.parametrize("class_id", list(ClassId), ids=lambda c: c.value)
    def test_residual_and_bracketing(self, class_id, spec):
        res = solve_radius(class_id, spec)
        assert res.residual <= 1e-8
        assert res.bracket[0] < res.r_f < res.bracket[1] or res.bracket[0] <= res.r_f <= res.bracket[1]
        assert res.capped <= 1.0 / 3.0 + 1e-15
        target = target_constant(class_id, spec)
        assert lhs_at(class_id, spec, res.r_f - 1e-4) < target < lhs_at(class_id, spec, res.r_f + 1e-4)

    @pytest.mark.parametrize("spec", CANONICAL, ids=lambda s: s.label())
    def test_problem_invariant(self, spec):
        for class_id in ClassId:
            prob = build_problem(class_id, spec)
            assert prob.target > 0.0
            assert prob.lhs(1e-9) < prob.target


class TestSharpness:
    @pytest.mark.parametrize("spec", CANONICAL, ids=lambda s: s.label())
    def test_sc_sharp_for_canonical(self, spec):
        res = solve_radius(ClassId.SC, spec)
        assert res.sharp  # every canonical spec has r_f < 1/3 under Sc

    @pytest.mark.parametrize("class_id", [ClassId.KS, ClassId.CC, ClassId.CS])
    def test_other_classes_never_sharp(self, class_id):
        res = solve_radius(class_id, lemniscate(0.5))
        assert not res.sharp
        assert "lower bound" in res.notes

    def test_witness_attains_bound(self):
        spec = sakaguchi(0.0)
        res = solve_radius(ClassId.SC, spec)
        report = sharpness_witness(ClassId.SC, spec, res, delta=0.01)
        assert report.ok
        assert report.value_at_radius == pytest.approx(0.25, abs=1e-7)
        assert report.bound == pytest.approx(0.25, abs=1e-12)
        assert report.exceeds_beyond is True

    def test_witness_zero_delta(self):
        spec = lemniscate(0.5)
        res = solve_radius(ClassId.SC, spec)
        report = sharpness_witness(ClassId.SC, spec, res, delta=0.0)
        assert report.ok and report.value_beyond is None

    def test_witness_requires_sharp_sc(self):
        res = solve_radius(ClassId.KS, sakaguchi(0.0))
        with pytest.raises(ParameterError):
            sharpness_witness(ClassId.KS, sakaguchi(0.0), res)


class TestSeriesVsQuadratureLhs:
    @pytest.mark.parametrize("spec", CANONICAL, ids=lambda s: s.label())
    def test_sc_lhs_equals_growth_function_for_positive(self, spec):
        # positive coefficients collapse the Sc lhs to the extremal growth h(r)
        es = build_extremal(spec)
        for r in (0.1, 0.25, 1 / 3):
            assert lhs_at(ClassId.SC, spec, r) == pytest.approx(h_at(es, r), abs=1e-9)


class TestRotationInvariance:
    @pytest.mark.parametrize("spec", CANONICAL, ids=lambda s: s.label())
    @pytest.mark.parametrize("class_id", list(ClassId), ids=lambda c: c.value)
    def test_sign_flip_leaves_radius(self, class_id, spec):
        plain = solve_radius(class_id, spec).r_f
        flipped = solve_radius_rotated(class_id, spec).r_f
        assert abs(plain - flipped) <= 1e-12


class TestClosedForms:
    def test_sc_sakaguchi_base_case_is_algebraic(self):
        # r + 2 sqrt(r) - 1 = 0 -> r = 3 - 2 sqrt(2)
        res = solve_corollary_closed_form("sc-sakaguchi", {"gamma": 0.0})
        assert res.r_f == pytest.approx(3.0 - 2.0 * math.sqrt(2.0), abs=1e-10)

    def test_sc_lemniscate_row(self):
        res = solve_corollary_closed_form("sc-lemniscate", {"s": 0.6})
        assert res.r_f == pytest.approx(0.2605657, abs=1e-6)

    def test_sc_janowski_row(self):
        res = solve_corollary_closed_form("sc-janowski", {"A": 0.5, "B": -0.5})
        assert res.r_f == pytest.approx(0.31534, abs=1e-4)

    def test_janowski_b0_window(self):
        a = 0.9  # above (3/4) ln 3 ~ 0.8239: root below 1/3
        res = solve_corollary_closed_form("sc-janowski-b0", {"A": a})
        assert res.sharp and res.r_f < 1 / 3
        res2 = solve_corollary_closed_form("sc-janowski-b0", {"A": 0.5})
        assert not res2.sharp and res2.r_f > 1 / 3
        assert "capped" in res2.notes

    @pytest.mark.parametrize(
        "eid,params,class_id,spec",
        [
            ("ks-sakaguchi", {"gamma": 0.0}, ClassId.KS, sakaguchi(0.0)),
            ("ks-sakaguchi", {"gamma": 0.2}, ClassId.KS, sakaguchi(0.2)),
            ("ks-wang", {"alpha": 0.5, "beta": 1.0}, ClassId.KS, wang(0.5, 1.0)),
            ("sc-lemniscate", {"s": 0.5}, ClassId.SC, lemniscate(0.5)),
            ("sc-sakaguchi", {"gamma": 0.25}, ClassId.SC, sakaguchi(0.25)),
            ("sc-janowski", {"A": 1.0, "B": -1.0}, ClassId.SC, janowski(1.0, -1.0)),
            ("sc-janowski-b0", {"A": 1.0}, ClassId.SC, janowski(1.0, 0.0)),
        ],
    )
    def test_closed_form_agrees_with_general_solver(self, eid, params, class_id, spec):
        closed = solve_corollary_closed_form(eid, params).r_f
        general = solve_radius(class_id, spec).r_f
        assert abs(closed - general) <= 1e-7

    def test_parameter_errors(self):
        with pytest.raises(ParameterError):
            solve_corollary_closed_form("no-such-equation", {})
        with pytest.raises(ParameterError):
            solve_corollary_closed_form("sc-lemniscate", {})
        with pytest.raises(ParameterError):
            solve_corollary_closed_form("sc-janowski", {"A": 0.5, "B": 0.0})
        with pytest.raises(ParameterError):
            solve_corollary_closed_form("sc-lemniscate", {"s": 0.9})


class TestThresholdScan:
    def test_lemniscate_threshold(self):
        scan = threshold_scan("sc-lemniscate", np.arange(0.40, 0.501, 1e-3))
        assert scan.bracket is not None
        assert 0.4449 < scan.threshold < 0.4450
        # windows flip exactly once along the grid
        flags = [row.in_sharp_window for row in scan.rows]
        assert flags.count(True) > 0 and flags.count(False) > 0
        assert flags == sorted(flags)  # False..False True..True

    def test_expblend_threshold(self):
        scan = threshold_scan("sc-expblend", np.arange(0.0, 0.081, 1e-3))
        assert 0.0528 < scan.threshold < 0.0529
        flags = [row.in_sharp_window for row in scan.rows]
        assert flags == sorted(flags, reverse=True)  # True..True False..False

    def test_ks_sakaguchi_threshold(self):
        scan = threshold_scan("ks-sakaguchi", np.arange(0.25, 0.271, 1e-3))
        assert 0.2590 < scan.threshold < 0.2591

    def test_no_crossing_in_grid(self):
        scan = threshold_scan("sc-lemniscate", [0.5, 0.6, 0.7])
        assert scan.bracket is None and scan.threshold is None
        assert all(row.in_sharp_window for row in scan.rows)

    def test_rows_match_closed_form(self):
        scan = threshold_scan("sc-lemniscate", [0.5, 0.6])
        assert scan.rows[0].r_f == pytest.approx(0.3040402, abs=1e-6)
        assert scan.rows[1].r_f == pytest.approx(0.2605657, abs=1e-6)

    def test_expblend_rows_agree_with_general_solver(self):
        scan = threshold_scan("sc-expblend", [0.02, 0.03])
        for row, a in zip(scan.rows, (0.02, 0.03)):
            assert row.r_f == pytest.approx(
                solve_radius(ClassId.SC, expblend(a)).r_f, abs=1e-7
            )

    def test_bad_grid(self):
        with pytest.raises(ParameterError):
            threshold_scan("sc-lemniscate", [0.5])
        with pytest.raises(ParameterError):
            threshold_scan("sc-lemniscate", [0.5, 0.4])
        with pytest.raises(ParameterError):
            threshold_scan("unknown", [0.1, 0.2])
