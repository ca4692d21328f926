"""Radius equations for the four function classes and their solvers.

Each class pairs a nondecreasing left-hand side (a coefficient-majorant
growth integral in r) with a constant target (the distance from the
origin's image to the image boundary, through the class's extremal
member).  The class radius is the smallest positive root of lhs = target
in (0, 1); the usable radius is capped at 1/3.

  Ks  close-to-convex w.r.t. the odd starlike factor:
        lhs = integral_0^r M_phi(t)/(1-t^2) dt
        target = integral_0^1 phi(-t)/(1+t^2) dt
  Sc  starlike w.r.t. conjugate points:
        lhs = integral_0^r M_h(t) M_phi(t)/t dt        target = -h(-1)
  Cc  convex w.r.t. conjugate points:
        lhs = integral_0^r (1/s) integral_0^s M_{k'} M_phi dt ds
        target = -k(-1)
  Cs  convex w.r.t. symmetric points:
        lhs = integral_0^r (1/s) integral_0^s M_{K'} M_phi dt ds
        target = integral_0^1 (1/s) integral_0^s (k'(-t^2))^{1/2} phi(-t) dt ds

(M_f is the coefficient-modulus series of f; note M_h(t)/t = M_{k'}(t)
coefficientwise, so the Sc integrand is evaluated without the removable
singularity.)

Every integral has two independent evaluation routes: adaptive quadrature
over pointwise evaluators, and exact termwise integration of the majorant
series.  The two serve as each other's oracle in the test suite.  Root
finding is a uniform scan at step 1e-3 (the lhs is monotone, so the first
sign change brackets the smallest root) followed by bisection.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, Sequence

import numpy as np
from numpy.polynomial.chebyshev import Chebyshev
from scipy.integrate import quad

from . import power_series as ps
from .catalog import (
    PhiSpec,
    expblend,
    has_positive_coeffs,
    janowski,
    lemniscate,
    majorant_phi_at,
    phi_at,
    phi_series,
    sakaguchi,
    wang,
)
from .errors import InconsistencyError, NoRootError, ParameterError
from .extremal import ExtremalSet, build_extremal, growth_exponent, h_at, k_prime_at
from .quadrature import DEFAULT_TOL, Integrand1D, integrate_1d, integrate_nested

_SCAN_STEP = 1e-3
_SCAN_LIMIT = 0.999
_BISECT_WIDTH = 1e-11
_SERIES_EVAL_TAIL = 1e-11
_ONE_THIRD = 1.0 / 3.0


class ClassId(enum.Enum):
    """The four function classes with a proved radius equation."""

    KS = "Ks"
    SC = "Sc"
    CC = "Cc"
    CS = "Cs"

    @classmethod
    def parse(cls, name: str) -> "ClassId":
        for member in cls:
            if member.value.lower() == str(name).lower():
                return member
        raise ParameterError(f"unknown class {name!r}; expected one of Ks, Sc, Cc, Cs")


_NESTED = (ClassId.CC, ClassId.CS)


# ---------------------------------------------------------------------------
# pointwise evaluators (quadrature route)
# ---------------------------------------------------------------------------


def _majorant_kprime_evaluator(spec: PhiSpec, es: ExtremalSet) -> Callable[[float], float]:
    """Pointwise M_{k'}(t).

    Positive-coefficient specs make the majorant equal k' itself, which
    has a closed or tabulated form; only mixed-sign Janowski parameters
    fall back to evaluating the majorant coefficient series.
    """
    if has_positive_coeffs(spec):
        return lambda t: k_prime_at(spec, t)
    maj = ps.majorant(es.k_prime)
    return lambda t: ps.eval_at(maj, t, tail_tol=_SERIES_EVAL_TAIL)


def _majorant_Kprime_evaluator(es: ExtremalSet) -> Callable[[float], float]:
    """Pointwise M_{K'}(t); the square-root series has mixed signs for
    every family, so this is always a coefficient-series evaluation."""
    maj = ps.majorant(es.K_prime)
    return lambda t: ps.eval_at(maj, t, tail_tol=_SERIES_EVAL_TAIL)


def lhs_integrand(class_id: ClassId, spec: PhiSpec, order: int = ps.DEFAULT_ORDER) -> Integrand1D:
    """The pointwise integrand of the class lhs.

    For Ks and Sc this is the full 1-D integrand; for Cc and Cs it is the
    inner integrand of the nested double integral.  All four tend to 1 at
    t = 0.
    """
    es = build_extremal(spec, order)
    if class_id is ClassId.KS:
        return Integrand1D(lambda t: majorant_phi_at(spec, t) / (1.0 - t * t), 1.0)
    if class_id in (ClassId.SC, ClassId.CC):
        mk = _majorant_kprime_evaluator(spec, es)
        return Integrand1D(lambda t: mk(t) * majorant_phi_at(spec, t), 1.0)
    mK = _majorant_Kprime_evaluator(es)
    return Integrand1D(lambda t: mK(t) * majorant_phi_at(spec, t), 1.0)


def distance_integrand(class_id: ClassId, spec: PhiSpec) -> Integrand1D:
    """Pointwise integrand of the distance bound for the classes whose
    target is itself an integral (Ks directly, Cs nested)."""
    if class_id is ClassId.KS:
        return Integrand1D(lambda t: phi_at(spec, -t) / (1.0 + t * t), 1.0)
    if class_id is ClassId.CS:

        def inner(t: float) -> float:
            return math.exp(0.5 * growth_exponent(spec, -t * t)) * phi_at(spec, -t)

        return Integrand1D(inner, 1.0)
    raise ParameterError(f"{class_id.value} has a boundary-value target, not an integral")


# ---------------------------------------------------------------------------
# series route (termwise integration of majorant series)
# ---------------------------------------------------------------------------


def _geometric_even(order: int, ratio: float = 1.0) -> ps.TruncatedSeries:
    """sum ratio^n z^{2n}: 1/(1 - ratio z^2)."""
    out = np.zeros(order)
    out[0::2] = ratio ** np.arange(out[0::2].size)
    return ps.TruncatedSeries(out)


def nested_series_transform(c: ps.TruncatedSeries) -> ps.TruncatedSeries:
    """Termwise image of c under f -> integral_0^r (1/s) integral_0^s f:
    coefficient c_n lands on z^{n+1} with weight 1/(n+1)^2."""
    return ps.integrate_from_zero(ps.divide_by_z(ps.integrate_from_zero(c)))


@lru_cache(maxsize=None)
def _series_lhs_curve(
    class_id: ClassId, spec: PhiSpec, order: int, rotated: bool
) -> ps.TruncatedSeries:
    phi = phi_series(spec, order)
    if rotated:
        phi = ps.reflect(phi)
    m_phi = ps.majorant(phi)
    if class_id is ClassId.KS:
        return ps.integrate_from_zero(ps.mul(m_phi, _geometric_even(order)))
    log_h = np.zeros(order)
    log_h[1:] = phi.coeffs[1:] / np.arange(1, order)
    k_prime = ps.exp_series(ps.TruncatedSeries(log_h))
    if class_id is ClassId.SC:
        return ps.integrate_from_zero(ps.mul(ps.majorant(k_prime), m_phi))
    if class_id is ClassId.CC:
        return nested_series_transform(ps.mul(ps.majorant(k_prime), m_phi))
    K_prime = ps.sqrt_series(ps.compose_with_selfmap(k_prime, ps.monomial(1.0, 2, order)))
    return nested_series_transform(ps.mul(ps.majorant(K_prime), m_phi))


@lru_cache(maxsize=None)
def _series_distance_curve(class_id: ClassId, spec: PhiSpec, order: int) -> ps.TruncatedSeries:
    phi_neg = ps.reflect(phi_series(spec, order))
    if class_id is ClassId.KS:
        return ps.integrate_from_zero(ps.mul(phi_neg, _geometric_even(order, -1.0)))
    if class_id is ClassId.CS:
        es = build_extremal(spec, order)
        kp_neg_sq = ps.compose_with_selfmap(es.k_prime, ps.monomial(-1.0, 2, order))
        return nested_series_transform(ps.mul(ps.sqrt_series(kp_neg_sq), phi_neg))
    raise ParameterError(f"{class_id.value} has a boundary-value target, not an integral")


def lhs_at(
    class_id: ClassId,
    spec: PhiSpec,
    r: float,
    method: str = "quadrature",
    order: int = ps.DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
) -> float:
    """The class lhs at radius r by either evaluation route."""
    if method == "series":
        return ps.eval_at(_series_lhs_curve(class_id, spec, order, False), r)
    if method != "quadrature":
        raise ParameterError(f"unknown method {method!r}")
    if class_id in _NESTED:
        return integrate_nested(lhs_integrand(class_id, spec, order), r, tol).value
    return integrate_1d(lhs_integrand(class_id, spec, order), 0.0, r, tol).value


def distance_integral_at(
    class_id: ClassId,
    spec: PhiSpec,
    r: float,
    method: str = "quadrature",
    order: int = ps.DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
) -> float:
    """The distance-bound integral at radius r (Ks and Cs only)."""
    if method == "series":
        return ps.eval_at(_series_distance_curve(class_id, spec, order), r)
    if method != "quadrature":
        raise ParameterError(f"unknown method {method!r}")
    if class_id is ClassId.CS:
        return integrate_nested(distance_integrand(class_id, spec), r, tol).value
    return integrate_1d(distance_integrand(class_id, spec), 0.0, r, tol).value


@lru_cache(maxsize=None)
def target_constant(
    class_id: ClassId,
    spec: PhiSpec,
    order: int = ps.DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
) -> float:
    """The class's lower bound on the distance from f(0) to the image
    boundary: an integral to 1 for Ks/Cs, a boundary value for Sc/Cc."""
    es = build_extremal(spec, order)
    if class_id is ClassId.KS:
        return distance_integral_at(class_id, spec, 1.0, tol=tol)
    if class_id is ClassId.SC:
        return -es.h_at_minus_one
    if class_id is ClassId.CC:
        return -es.k_at_minus_one
    return distance_integral_at(class_id, spec, 1.0, tol=tol)


# ---------------------------------------------------------------------------
# radius problems and the scan + bisection solver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadiusProblem:
    """One radius equation instance: a monotone lhs and its target."""

    class_id: ClassId
    spec: PhiSpec
    lhs: Callable[[float], float]
    target: float
    order: int
    tol: float

    def __post_init__(self):
        if not (self.target > 0.0):
            raise InconsistencyError(f"target must be positive, got {self.target}")


@dataclass(frozen=True)
class RadiusResult:
    """Solved radius with the 1/3 cap and the sharpness verdict."""

    r_f: float
    capped: float
    sharp: bool
    residual: float
    bracket: tuple[float, float]
    notes: str

    def __post_init__(self):
        if not (0.0 < self.r_f < 1.0):
            raise InconsistencyError(f"radius {self.r_f} outside (0, 1)")
        if self.residual > 1e-8:
            raise InconsistencyError(f"radius residual {self.residual:.3g} exceeds 1e-8")

    def to_dict(self) -> dict:
        return {
            "r_f": self.r_f,
            "capped": self.capped,
            "sharp": self.sharp,
            "residual": self.residual,
            "bracket": list(self.bracket),
            "notes": self.notes,
        }


def build_problem(
    class_id: ClassId,
    spec: PhiSpec,
    order: int = ps.DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
) -> RadiusProblem:
    target = target_constant(class_id, spec, order, tol)
    lhs = lambda r: lhs_at(class_id, spec, r, "quadrature", order, tol)
    return RadiusProblem(class_id, spec, lhs, target, order, tol)


def _scan_first_crossing(
    class_id: ClassId, spec: PhiSpec, target: float, order: int, tol: float
) -> tuple[float, float]:
    """Walk the lhs cumulatively in 1e-3 steps until it passes the target.

    Pieces are integrated independently and summed, so each grid value
    costs one short quadrature; the returned bracket is re-verified with
    full-accuracy evaluations before bisection.
    """
    integrand = lhs_integrand(class_id, spec, order)
    piece_tol = max(tol * _SCAN_STEP, 1e-15)
    acc = 0.0
    lo = 0.0
    if class_id in _NESTED:
        inner_cum = 0.0
        while lo < _SCAN_LIMIT:
            hi = min(lo + _SCAN_STEP, _SCAN_LIMIT)
            interp = Chebyshev.interpolate(
                lambda xs: np.array([integrand(float(x)) for x in np.atleast_1d(xs)]),
                12,
                domain=[lo, hi],
            )
            anti = interp.integ()
            base, a0 = inner_cum, float(anti(lo))

            def outer(s: float) -> float:
                if s < 1e-8:
                    return integrand.left_limit
                return (base + float(anti(s)) - a0) / s

            acc += quad(outer, lo, hi, epsabs=piece_tol, epsrel=1e-12)[0]
            inner_cum = base + float(anti(hi)) - a0
            if acc >= target:
                return (lo, hi)
            lo = hi
    else:
        while lo < _SCAN_LIMIT:
            hi = min(lo + _SCAN_STEP, _SCAN_LIMIT)
            acc += quad(integrand.evaluator, lo, hi, epsabs=piece_tol, epsrel=1e-12)[0]
            if acc >= target:
                return (lo, hi)
            lo = hi
    raise NoRootError(
        f"radius >= 1: {class_id.value} lhs never reaches its target {target:.6g} on "
        f"(0, {_SCAN_LIMIT}); the defining inequalities guarantee a root below 1, so "
        f"this is an integrand bug ({spec.label()})"
    )


def solve_radius(
    class_id: ClassId,
    spec: PhiSpec,
    order: int = ps.DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
) -> RadiusResult:
    """Smallest positive root of the class radius equation, capped at 1/3.

    Sharpness is only claimed where it is proved: the Sc class with a
    nonnegative coefficient spec and a root at or below 1/3, where the
    extremal member itself attains the bound.  Other results are lower
    bounds on the class Bohr radius.
    """
    return _solve_cached(class_id, spec, int(order), float(tol), False)


def solve_radius_rotated(
    class_id: ClassId,
    spec: PhiSpec,
    order: int = ps.DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
) -> RadiusResult:
    """Solve the radius problem for phi(-z) in place of phi(z).

    Replacing z by -z only flips coefficient signs, so every majorant
    integrand and the distance target are unchanged and the radius must
    agree with :func:`solve_radius` to full precision.  This route
    rebuilds everything from the sign-flipped series and exists to assert
    that equality.
    """
    return _solve_cached(class_id, spec, int(order), float(tol), True)


@lru_cache(maxsize=None)
def _solve_cached(
    class_id: ClassId, spec: PhiSpec, order: int, tol: float, rotated: bool
) -> RadiusResult:
    target = target_constant(class_id, spec, order, tol)
    if rotated:
        curve = _series_lhs_curve(class_id, spec, order, True)
        full_lhs = lambda r: ps.eval_at(curve, r, tail_tol=_SERIES_EVAL_TAIL)
        lo, hi = 0.0, None
        r = _SCAN_STEP
        while r < _SCAN_LIMIT:
            if full_lhs(r) >= target:
                hi = r
                break
            lo = r
            r += _SCAN_STEP
        if hi is None:
            raise NoRootError("rotated lhs never reaches the target")
    else:
        full_lhs = build_problem(class_id, spec, order, tol).lhs
        lo, hi = _scan_first_crossing(class_id, spec, target, order, tol)
    # re-verify the bracket at full accuracy (the scan accumulates pieces)
    step = _SCAN_STEP
    while lo > 0.0 and full_lhs(lo) - target > 0.0:
        lo = max(lo - step, 0.0)
    while hi < _SCAN_LIMIT and full_lhs(hi) - target < 0.0:
        hi = min(hi + step, _SCAN_LIMIT)
    f_lo = (full_lhs(lo) - target) if lo > 0.0 else -target
    if f_lo > 0.0 or full_lhs(hi) < target:
        raise NoRootError(f"could not bracket the {class_id.value} radius near ({lo}, {hi})")
    while hi - lo > _BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        if full_lhs(mid) - target >= 0.0:
            hi = mid
        else:
            lo = mid
    r_f = 0.5 * (lo + hi)
    residual = abs(full_lhs(r_f) - target)
    sharp = bool(
        class_id is ClassId.SC and has_positive_coeffs(spec) and r_f <= _ONE_THIRD + 1e-12
    )
    if sharp:
        notes = "sharp: the extremal member attains the coefficient bound at r_f"
    elif class_id is ClassId.SC and r_f > _ONE_THIRD:
        notes = "root exceeds 1/3; the coefficient inequality holds for r <= 1/3"
    elif r_f > _ONE_THIRD:
        notes = (
            "lower bound on the class Bohr radius (no sharpness claim); "
            "the coefficient inequality holds for r <= 1/3"
        )
    else:
        notes = "lower bound on the class Bohr radius (no sharpness claim)"
    return RadiusResult(
        r_f=float(r_f),
        capped=min(_ONE_THIRD, float(r_f)),
        sharp=sharp,
        residual=float(residual),
        bracket=(float(lo), float(hi)),
        notes=notes,
    )


# ---------------------------------------------------------------------------
# closed-form corollary equations
# ---------------------------------------------------------------------------


def _ks_sakaguchi_parts(gamma: float):
    lhs = lambda r: gamma / 2.0 * math.log((1.0 + r) / (1.0 - r)) + (1.0 - gamma) * r / (1.0 - r)
    rhs = (1.0 - gamma) / 2.0 * math.log(2.0) + gamma * math.pi / 4.0
    return lhs, rhs


def _ks_wang_parts(alpha: float, beta: float):
    def lhs(r: float) -> float:
        f = lambda t: (1.0 + beta * t) / ((1.0 - alpha * beta * t) * (1.0 - t * t))
        return quad(f, 0.0, r, epsabs=1e-13, epsrel=1e-13, limit=300)[0]

    g = lambda t: (1.0 - beta * t) / ((1.0 + alpha * beta * t) * (1.0 + t * t))
    rhs = quad(g, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13)[0]
    return lhs, rhs


def _sc_lemniscate_parts(s: float):
    lhs = lambda r: r * math.exp(s * (2.0 * r + s * r * r / 2.0))
    rhs = math.exp(s * (-2.0 + s / 2.0))
    return lhs, rhs


def _sc_sakaguchi_parts(gamma: float):
    e = 1.0 / (2.0 * (1.0 - gamma))
    lhs = lambda r: r + 2.0 * r**e
    return lhs, 1.0


def _sc_janowski_b0_parts(a: float):
    return (lambda r: r * math.exp(a * r)), math.exp(-a)


def _sc_janowski_parts(a: float, b: float):
    c = (a - b) / b
    return (lambda r: r * (1.0 + b * r) ** c), (1.0 - b) ** c


#: equation id -> (class, spec builder, parts builder, parameter names)
CLOSED_FORM_EQUATIONS: Mapping[str, tuple] = {
    "ks-sakaguchi": (ClassId.KS, lambda p: sakaguchi(p["gamma"]), _ks_sakaguchi_parts, ("gamma",)),
    "ks-wang": (
        ClassId.KS,
        lambda p: wang(p["alpha"], p["beta"]),
        _ks_wang_parts,
        ("alpha", "beta"),
    ),
    "sc-lemniscate": (ClassId.SC, lambda p: lemniscate(p["s"]), _sc_lemniscate_parts, ("s",)),
    "sc-sakaguchi": (ClassId.SC, lambda p: sakaguchi(p["gamma"]), _sc_sakaguchi_parts, ("gamma",)),
    "sc-janowski-b0": (
        ClassId.SC,
        lambda p: janowski(p["A"], 0.0),
        _sc_janowski_b0_parts,
        ("A",),
    ),
    "sc-janowski": (
        ClassId.SC,
        lambda p: janowski(p["A"], p["B"]),
        _sc_janowski_parts,
        ("A", "B"),
    ),
}


def solve_corollary_closed_form(equation_id: str, params: Mapping[str, float]) -> RadiusResult:
    """Solve one of the catalog's closed-form radius equations.

    These are independent fast paths: they must agree with the general
    solver on the corresponding (class, spec) pair to 1e-7.  When the
    root exceeds 1/3 the result notes that the capped radius governs.
    """
    if equation_id not in CLOSED_FORM_EQUATIONS:
        raise ParameterError(
            f"unknown equation {equation_id!r}; expected one of {sorted(CLOSED_FORM_EQUATIONS)}"
        )
    class_id, spec_builder, parts_builder, names = CLOSED_FORM_EQUATIONS[equation_id]
    missing = [n for n in names if n not in params]
    if missing:
        raise ParameterError(f"{equation_id} needs parameters {names}, missing {missing}")
    spec = spec_builder(params)  # validates ranges
    if equation_id == "sc-janowski" and params["B"] == 0.0:
        raise ParameterError("sc-janowski requires B != 0; use sc-janowski-b0")
    lhs, rhs = parts_builder(*(params[n] for n in names))
    # walk the upper end toward 1 only as far as needed; several lhs have
    # a pole at 1 that the quadrature-backed variants should not probe
    lo, hi = 0.0, 0.9
    while lhs(hi) - rhs < 0.0:
        if 1.0 - hi < 1e-9:
            raise NoRootError(f"{equation_id} equation shows no root in (0, 1)")
        hi = 1.0 - 0.25 * (1.0 - hi)
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if lhs(mid) - rhs >= 0.0:
            hi = mid
        else:
            lo = mid
    r_f = 0.5 * (lo + hi)
    residual = abs(lhs(r_f) - rhs)
    sharp = bool(class_id is ClassId.SC and r_f <= _ONE_THIRD + 1e-12)
    if r_f > _ONE_THIRD:
        notes = "root exceeds 1/3; the coefficient inequality holds for r <= 1/3 (capped radius governs)"
    elif sharp:
        notes = "sharp: the extremal member attains the coefficient bound at r_f"
    else:
        notes = "lower bound on the class Bohr radius (no sharpness claim)"
    return RadiusResult(
        r_f=float(r_f),
        capped=min(_ONE_THIRD, float(r_f)),
        sharp=sharp,
        residual=float(residual),
        bracket=(float(lo), float(hi)),
        notes=notes,
    )


# ---------------------------------------------------------------------------
# sharpness witness and threshold scans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    """Evidence that a sharp radius cannot be enlarged."""

    radius: float
    value_at_radius: float
    bound: float
    delta: float
    value_beyond: float | None
    exceeds_beyond: bool | None

    @property
    def ok(self) -> bool:
        attained = abs(self.value_at_radius - self.bound) <= 1e-7
        return attained and (self.exceeds_beyond is not False)


def sharpness_witness(
    class_id: ClassId,
    spec: PhiSpec,
    result: RadiusResult,
    delta: float = 0.01,
    order: int = ps.DEFAULT_ORDER,
) -> WitnessReport:
    """Check that the extremal member attains the bound at r_f and
    strictly exceeds it at r_f + delta."""
    if class_id is not ClassId.SC or not result.sharp:
        raise ParameterError("sharpness witness applies to sharp Sc results only")
    if delta < 0.0:
        raise ParameterError("delta must be nonnegative")
    es = build_extremal(spec, order)
    bound = -es.h_at_minus_one
    value = h_at(es, result.r_f)  # positive coefficients: M_h(r) == h(r)
    if abs(value - bound) > 1e-7:
        raise InconsistencyError(
            f"extremal value {value!r} misses the bound {bound!r} at r_f={result.r_f!r}; "
            "solver or extremal-function bug"
        )
    value_beyond = None
    exceeds = None
    if delta > 0.0 and result.r_f + delta < 1.0:
        value_beyond = h_at(es, result.r_f + delta)
        exceeds = bool(value_beyond > bound)
    return WitnessReport(result.r_f, value, bound, delta, value_beyond, exceeds)


@dataclass(frozen=True)
class ThresholdRow:
    param: float
    r_f: float
    in_sharp_window: bool


@dataclass(frozen=True)
class ThresholdScan:
    equation_id: str
    rows: tuple[ThresholdRow, ...]
    bracket: tuple[float, float] | None  # grid pair where the 1/3 crossing sits
    threshold: float | None  # refined crossing parameter


def _window_indicator(equation_id: str) -> Callable[[float], float]:
    """Signed indicator g(p) with g(p) > 0 iff r_f(p) < 1/3 (lhs is
    increasing in r, so the sign of lhs(1/3) - rhs decides)."""
    if equation_id == "sc-expblend":

        def g(p: float) -> float:
            spec = expblend(p)
            es = build_extremal(spec)
            return h_at(es, _ONE_THIRD) + es.h_at_minus_one

        return g
    class_id, spec_builder, parts_builder, names = CLOSED_FORM_EQUATIONS[equation_id]
    if len(names) != 1:
        raise ParameterError(f"{equation_id} is not a single-parameter family")

    def g(p: float) -> float:
        lhs, rhs = parts_builder(p)
        return lhs(_ONE_THIRD) - rhs

    return g


def _radius_for_param(equation_id: str, p: float) -> float:
    if equation_id == "sc-expblend":
        spec = expblend(p)
        es = build_extremal(spec)
        bound = -es.h_at_minus_one
        lo, hi = 0.0, 1.0 - 1e-9
        while hi - lo > 1e-12:
            mid = 0.5 * (lo + hi)
            if h_at(es, mid) >= bound:
                hi = mid
            else:
                lo = mid
        return 0.5 * (lo + hi)
    return solve_corollary_closed_form(
        equation_id, dict(zip(CLOSED_FORM_EQUATIONS[equation_id][3], (p,)))
    ).r_f


def threshold_scan(equation_id: str, params: Sequence[float]) -> ThresholdScan:
    """Sweep a monotone parameter grid, reporting the radius and whether
    it falls in the sharp window (0, 1/3), then bracket and refine the
    parameter where the radius crosses 1/3."""
    known = set(CLOSED_FORM_EQUATIONS) | {"sc-expblend"}
    if equation_id not in known:
        raise ParameterError(f"unknown equation {equation_id!r}; expected one of {sorted(known)}")
    grid = [float(p) for p in params]
    if len(grid) < 2 or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ParameterError("parameter grid must be increasing with at least two points")
    rows = tuple(
        ThresholdRow(p, (rf := _radius_for_param(equation_id, p)), rf < _ONE_THIRD) for p in grid
    )
    bracket = None
    for a, b in zip(rows, rows[1:]):
        if a.in_sharp_window != b.in_sharp_window:
            bracket = (a.param, b.param)
            break
    threshold = None
    if bracket is not None:
        g = _window_indicator(equation_id)
        lo, hi = bracket
        g_lo = g(lo)
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if g(mid) * g_lo > 0.0:
                lo = mid
                g_lo = g(lo)
            else:
                hi = mid
            if hi - lo < 1e-9:
                break
        threshold = 0.5 * (lo + hi)
    return ThresholdScan(equation_id, rows, bracket, threshold)
