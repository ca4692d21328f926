"""Bohr radii for close-to-convex function classes.

A function class satisfies the Bohr phenomenon at radius r when, for
every member f(z) = z + a_2 z^2 + ..., the coefficient-modulus sum
``r + sum |a_n| r^n`` stays below the Euclidean distance from f(0) to
the boundary of the image domain.  This package computes the largest
such radius (capped at the universal 1/3) for four classes defined by
subordination to a catalog of shape functions, and empirically verifies
the resulting inequality on explicitly constructed class members.

Main entry points:

* :func:`bohrcc.solver.solve_radius` -- radius for a (class, spec) pair
* :func:`bohrcc.verifier.run_campaign` -- seeded verification campaign
* ``python -m bohrcc`` / the ``bohrcc`` script -- CLI over both
"""

from .catalog import (
    PhiSpec,
    expblend,
    janowski,
    lemniscate,
    sakaguchi,
    strongly,
    wang,
)
from .extremal import ExtremalSet, build_extremal
from .solver import (
    ClassId,
    RadiusResult,
    solve_corollary_closed_form,
    solve_radius,
    threshold_scan,
)
from .verifier import SelfMap, run_campaign, sample_member

__version__ = "0.1.0"

__all__ = [
    "PhiSpec",
    "janowski",
    "sakaguchi",
    "lemniscate",
    "expblend",
    "strongly",
    "wang",
    "ExtremalSet",
    "build_extremal",
    "ClassId",
    "RadiusResult",
    "solve_radius",
    "solve_corollary_closed_form",
    "threshold_scan",
    "SelfMap",
    "sample_member",
    "run_campaign",
    "__version__",
]
