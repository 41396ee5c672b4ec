"""Star configurations of linear forms and the equations of their Rees algebras."""

from ._starrees import (
    StarConfig,
    StarreesError,
    power_generators,
    run_suite,
    suites,
    taylor_equations,
)

__all__ = [
    "StarConfig",
    "StarreesError",
    "power_generators",
    "run_suite",
    "suites",
    "taylor_equations",
]
