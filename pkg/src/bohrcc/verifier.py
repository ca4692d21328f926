"""Build explicit class members and verify the coefficient bound on them.

Members are constructed directly from the defining identities with a
sampled disk self-map w(z) = eps * z^m (0 <= eps <= 1, m >= 1): writing
p = phi o w,

  Ks:  f = integral_0^z G(x) p(x) / x dx     with G(z) = z/(1-z^2)
  Sc:  f = integral_0^z h(x) p(x) / x dx
  Cc:  f = integral_0^z (1/x) integral_0^x k'(y) p(y) dy dx
  Cs:  f = integral_0^z (1/x) integral_0^x K'(y) p(y) dy dx

Monomial self-maps keep the series composition exact while still sweeping
the subordination family; with the identity map the Sc construction
reproduces the extremal h itself.  A campaign checks, for every sample,
that the coefficient-modulus sum at the computed radius stays below the
class's distance bound.  The radius theorems guarantee this, so any
failure is an implementation bug and is reported loudly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import power_series as ps
from .catalog import PhiSpec, phi_series
from .errors import InconsistencyError, ParameterError
from .extremal import build_extremal
from .quadrature import DEFAULT_TOL
from .solver import (
    ClassId,
    RadiusResult,
    nested_series_transform,
    sharpness_witness,
    solve_radius,
    target_constant,
)

_MARGIN_SLACK = 1e-9
_TAIL_GUARD = 1e-10


@dataclass(frozen=True)
class SelfMap:
    """Monomial disk self-map w(z) = epsilon * z^power fixing 0."""

    epsilon: float
    power: int = 1

    def __post_init__(self):
        if not (0.0 <= self.epsilon <= 1.0):
            raise ParameterError(f"self-map needs 0 <= epsilon <= 1, got {self.epsilon}")
        if self.power < 1:
            raise ParameterError(f"self-map needs power >= 1, got {self.power}")

    def to_series(self, order: int) -> ps.TruncatedSeries:
        return ps.monomial(self.epsilon, self.power, order)


IDENTITY_MAP = SelfMap(1.0, 1)


@dataclass(frozen=True)
class SampledFunction:
    """A constructed class member with its class distance bound."""

    class_id: ClassId
    spec: PhiSpec
    omega: SelfMap
    series: ps.TruncatedSeries
    distance_bound: float


def _odd_geometric(order: int) -> ps.TruncatedSeries:
    """z/(1-z^2): the odd starlike envelope used by the Ks construction."""
    out = np.zeros(order)
    out[1::2] = 1.0
    return ps.TruncatedSeries(out)


def sample_member(
    class_id: ClassId,
    spec: PhiSpec,
    omega: SelfMap,
    order: int = ps.DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
) -> SampledFunction:
    """Build one class member from the defining identity."""
    es = build_extremal(spec, order)
    composed = ps.compose_with_selfmap(phi_series(spec, order), omega.to_series(order))
    if class_id is ClassId.KS:
        integrand = ps.mul(_odd_geometric(order), composed)
        series = ps.integrate_from_zero(ps.divide_by_z(integrand))
    elif class_id is ClassId.SC:
        series = ps.integrate_from_zero(ps.mul(es.k_prime, composed))
    elif class_id is ClassId.CC:
        series = nested_series_transform(ps.mul(es.k_prime, composed))
    else:
        series = nested_series_transform(ps.mul(es.K_prime, composed))
    if abs(series.coeffs[0]) > 1e-14 or abs(series.coeffs[1] - 1.0) > 1e-12:
        raise InconsistencyError(
            f"sampled member is not normalized: f(0)={series.coeffs[0]}, f'(0)={series.coeffs[1]}"
        )
    bound = target_constant(class_id, spec, order, tol)
    return SampledFunction(class_id, spec, omega, series, bound)


def check_bohr(sf: SampledFunction, r: float) -> tuple[bool, float]:
    """Margin of the coefficient bound at radius r.

    Returns (holds, margin) with margin = bound - sum |a_n| r^n; raises
    PrecisionError when the truncation tail at r is above 1e-10.
    """
    if not (0.0 < r < 1.0):
        raise ParameterError(f"check_bohr needs 0 < r < 1, got {r}")
    total = ps.eval_at(ps.majorant(sf.series), r, tail_tol=_TAIL_GUARD)
    margin = sf.distance_bound - total
    return (margin >= -_MARGIN_SLACK, float(margin))


def check_subordination_lemma(
    f: ps.TruncatedSeries, omega: SelfMap, r_grid: Sequence[float]
) -> bool:
    """Majorant comparison for q = f o omega: sum |q_n| r^n stays below
    sum |f_n| r^n on a grid of radii at or below 1/3."""
    grid = [float(r) for r in r_grid]
    if not grid or any(not (0.0 < r <= 1.0 / 3.0) for r in grid):
        raise ParameterError("r_grid must lie in (0, 1/3]")
    q = ps.compose_with_selfmap(f, omega.to_series(f.order))
    mf, mq = ps.majorant(f), ps.majorant(q)
    return all(ps.eval_at(mq, r) <= ps.eval_at(mf, r) + 1e-10 for r in grid)


@dataclass(frozen=True)
class VerificationReport:
    """Campaign outcome; identical seeds produce identical JSON bytes."""

    class_id: ClassId
    spec: PhiSpec
    seed: int
    n: int
    r_checked: float
    min_margin: float
    failures: tuple[dict, ...]
    witness: dict | None
    radius: RadiusResult

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "class": self.class_id.value,
            "spec": {"family": self.spec.family, "params": self.spec.param_dict()},
            "seed": self.seed,
            "n": self.n,
            "r_checked": self.r_checked,
            "min_margin": self.min_margin,
            "failures": list(self.failures),
            "witness": self.witness,
            "radius": self.radius.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _draw_map(seed: int, index: int) -> SelfMap:
    rng = np.random.default_rng((seed, index))
    return SelfMap(float(rng.uniform(0.0, 1.0)), int(rng.integers(1, 9)))


def run_campaign(
    class_id: ClassId,
    spec: PhiSpec,
    n_samples: int,
    seed: int,
    r: float | None = None,
    order: int = ps.DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """Check the coefficient bound on n sampled members at the computed
    (or overridden) radius.

    Sample 0 is always the identity self-map, which for Sc reproduces the
    extremal member; samples 1.. are seeded monomial maps with per-sample
    substreams, so reports are deterministic given the seed.
    """
    if n_samples < 1:
        raise ParameterError("need at least one sample")
    result = solve_radius(class_id, spec, order, tol)
    r_checked = float(r) if r is not None else result.capped
    margins = []
    failures = []
    for i in range(n_samples):
        omega = IDENTITY_MAP if i == 0 else _draw_map(seed, i)
        sf = sample_member(class_id, spec, omega, order, tol)
        holds, margin = check_bohr(sf, r_checked)
        margins.append(margin)
        if not holds:
            failures.append(
                {"index": i, "epsilon": omega.epsilon, "power": omega.power, "margin": margin}
            )
    witness = None
    if result.sharp:
        report = sharpness_witness(class_id, spec, result, delta=0.01, order=order)
        witness = {
            "radius": report.radius,
            "value_at_radius": report.value_at_radius,
            "bound": report.bound,
            "delta": report.delta,
            "value_beyond": report.value_beyond,
            "exceeds_beyond": report.exceeds_beyond,
        }
    return VerificationReport(
        class_id=class_id,
        spec=spec,
        seed=int(seed),
        n=int(n_samples),
        r_checked=r_checked,
        min_margin=float(min(margins)),
        failures=tuple(failures),
        witness=witness,
        radius=result,
    )
