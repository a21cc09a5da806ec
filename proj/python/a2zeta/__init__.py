"""Exact L-functions of rank-2 quotient complexes.

Complexes, presentations and reports travel as JSON strings; see the
repository README for the schemas.
"""

try:
    # wheel layout: the compiled module sits inside the package
    from ._a2zeta import (
        build_complex,
        build_cover,
        euler_characteristic,
        geodesic_tallies,
        lattice_oracle,
        lfun_report,
        presentation_q2,
        run_checks,
        validate_complex,
    )
except ImportError:
    # in-tree builds put the module next to the build directory
    from _a2zeta import (
        build_complex,
        build_cover,
        euler_characteristic,
        geodesic_tallies,
        lattice_oracle,
        lfun_report,
        presentation_q2,
        run_checks,
        validate_complex,
    )

__all__ = [
    "build_complex",
    "build_cover",
    "euler_characteristic",
    "geodesic_tallies",
    "lattice_oracle",
    "lfun_report",
    "presentation_q2",
    "run_checks",
    "validate_complex",
]
