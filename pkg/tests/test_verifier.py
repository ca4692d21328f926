import numpy as np
import pytest

from bohrcc import power_series as ps
from bohrcc.catalog import janowski, lemniscate, sakaguchi
from bohrcc.errors import ParameterError, PrecisionError
from bohrcc.extremal import build_extremal
from bohrcc.solver import ClassId, solve_radius
from bohrcc.verifier import (
    IDENTITY_MAP,
    SelfMap,
    check_bohr,
    check_subordination_lemma,
    run_campaign,
    sample_member,
)


class TestSelfMap:
    def test_validation(self):
        with pytest.raises(ParameterError):
            SelfMap(1.5, 1)
        with pytest.raises(ParameterError):
            SelfMap(0.5, 0)

    def test_series(self):
        w = SelfMap(0.25, 3).to_series(8)
        want = np.zeros(8)
        want[3] = 0.25
        assert np.array_equal(w.coeffs, want)

    def test_identity(self):
        assert IDENTITY_MAP.epsilon == 1.0 and IDENTITY_MAP.power == 1


class TestSampleMember:
    def test_sc_identity_reproduces_extremal(self):
        spec = lemniscate(0.5)
        es = build_extremal(spec)
        sf = sample_member(ClassId.SC, spec, IDENTITY_MAP)
        assert ps.allclose(sf.series, es.h, 1e-12)

    def test_ks_identity_base_case_is_geometric(self):
        # zf' = G(z) phi(z) with G = z/(1-z^2), phi = (1+z)/(1-z)
        # collapses to f = z/(1-z): every coefficient 1
        sf = sample_member(ClassId.KS, sakaguchi(0.0), IDENTITY_MAP, order=16)
        assert np.allclose(sf.series.coeffs[1:], np.ones(15), atol=1e-12)

    def test_zero_map_divides_coefficients(self):
        # phi(0 * z) == 1, so the Sc construction gives a_n = h_n / n
        spec = janowski(1, -1)
        es = build_extremal(spec)
        sf = sample_member(ClassId.SC, spec, SelfMap(0.0, 1))
        n = np.arange(1, 64)
        assert np.allclose(sf.series.coeffs[1:64], es.h.coeffs[1:] / n, atol=1e-13)

    @pytest.mark.parametrize("class_id", list(ClassId), ids=lambda c: c.value)
    def test_normalization_and_bound(self, class_id):
        sf = sample_member(class_id, lemniscate(0.5), SelfMap(0.7, 2))
        assert sf.series.coeffs[0] == 0.0
        assert sf.series.coeffs[1] == pytest.approx(1.0, abs=1e-12)
        assert sf.distance_bound > 0.0

    @pytest.mark.parametrize("class_id", list(ClassId), ids=lambda c: c.value)
    def test_majorant_series_monotone_from_zero(self, class_id):
        sf = sample_member(class_id, lemniscate(0.5), SelfMap(0.5, 3))
        maj = ps.majorant(sf.series)
        vals = [ps.eval_at(maj, r) for r in np.linspace(0.0, 1 / 3, 9)]
        assert vals[0] == 0.0
        assert all(b >= a for a, b in zip(vals, vals[1:]))


class TestCheckBohr:
    def test_holds_at_capped_radius(self):
        spec = lemniscate(0.5)
        capped = solve_radius(ClassId.SC, spec).capped
        sf = sample_member(ClassId.SC, spec, SelfMap(0.3, 2))
        holds, margin = check_bohr(sf, capped)
        assert holds and margin > 0.0

    def test_extremal_margin_vanishes_at_sharp_radius(self):
        spec = lemniscate(0.5)
        r_f = solve_radius(ClassId.SC, spec).r_f
        sf = sample_member(ClassId.SC, spec, IDENTITY_MAP)
        holds, margin = check_bohr(sf, r_f)
        assert holds and abs(margin) <= 1e-7

    def test_extremal_fails_beyond_sharp_radius(self):
        spec = lemniscate(0.5)
        r_f = solve_radius(ClassId.SC, spec).r_f
        sf = sample_member(ClassId.SC, spec, IDENTITY_MAP)
        holds, margin = check_bohr(sf, r_f + 0.01)
        assert not holds and margin < 0.0

    def test_tail_guard(self):
        sf = sample_member(ClassId.SC, janowski(1, -1), IDENTITY_MAP, order=24)
        with pytest.raises(PrecisionError):
            check_bohr(sf, 0.95)
        with pytest.raises(ParameterError):
            check_bohr(sf, 1.2)


class TestSubordination:
    def test_identity_is_equality(self):
        f = ps.make([0, 1, 2, 3] + [0.1] * 12)
        assert check_subordination_lemma(f, IDENTITY_MAP, [0.1, 1 / 3])

    def test_geometric_square_map(self):
        # f = sum z^n, w = z^2: 1/(1 - r^2) <= 1/(1 - r) termwise in majorants
        f = ps.make([1.0] * 40)
        assert check_subordination_lemma(f, SelfMap(1.0, 2), [1 / 3])

    def test_randomized_batch(self):
        rng = np.random.default_rng(99)
        grid = [0.05, 0.15, 0.25, 1 / 3]
        for _ in range(100):
            f = ps.make(rng.normal(size=20))
            w = SelfMap(float(rng.uniform(0, 1)), int(rng.integers(1, 6)))
            assert check_subordination_lemma(f, w, grid)

    def test_grid_validation(self):
        f = ps.make([0, 1])
        with pytest.raises(ParameterError):
            check_subordination_lemma(f, IDENTITY_MAP, [0.5])
        with pytest.raises(ParameterError):
            check_subordination_lemma(f, IDENTITY_MAP, [])


class TestCampaign:
    def test_all_hold_at_computed_radius(self):
        rep = run_campaign(ClassId.SC, lemniscate(0.5), 100, seed=42)
        assert rep.ok and not rep.failures
        assert rep.min_margin >= -1e-9

    def test_ks_campaign_at_capped_radius(self):
        rep = run_campaign(ClassId.KS, sakaguchi(0.0), 100, seed=7, r=0.2573)
        assert rep.ok
        assert rep.min_margin > 0.0

    def test_single_sample_is_extremal_check(self):
        rep = run_campaign(ClassId.SC, lemniscate(0.5), 1, seed=0)
        assert rep.n == 1 and rep.ok
        assert abs(rep.min_margin) <= 1e-7  # the identity sample sits on the bound

    def test_deterministic_bytes(self):
        a = run_campaign(ClassId.CC, lemniscate(0.5), 25, seed=5).to_json()
        b = run_campaign(ClassId.CC, lemniscate(0.5), 25, seed=5).to_json()
        assert a == b
        c = run_campaign(ClassId.CC, lemniscate(0.5), 25, seed=6).to_json()
        assert a != c

    def test_failure_report_beyond_radius(self):
        rep = run_campaign(ClassId.SC, lemniscate(0.5), 5, seed=3, r=0.34)
        assert not rep.ok
        assert rep.failures[0]["index"] == 0  # the extremal sample violates first
        assert rep.failures[0]["margin"] < 0.0

    def test_witness_included_for_sharp_cases(self):
        rep = run_campaign(ClassId.SC, lemniscate(0.5), 2, seed=1)
        assert rep.witness is not None
        assert rep.witness["exceeds_beyond"] is True
        rep2 = run_campaign(ClassId.KS, lemniscate(0.5), 2, seed=1)
        assert rep2.witness is None

    def test_json_fields(self):
        rep = run_campaign(ClassId.CS, lemniscate(0.5), 3, seed=11)
        payload = rep.to_json_dict()
        for key in ("class", "spec", "seed", "n", "r_checked", "min_margin", "failures"):
            assert key in payload
        assert payload["class"] == "Cs"
        assert payload["spec"] == {"family": "lemniscate", "params": {"s": 0.5}}

    def test_sample_count_validation(self):
        with pytest.raises(ParameterError):
            run_campaign(ClassId.SC, lemniscate(0.5), 0, seed=1)
