"""Verification suite for light-cone spinor bundles and Fock-space white noise.

The package machine-checks the algebra along one construction path: the
Poincare group and its SL(2,C) cover, the stabilizer of a light-like
momentum, spinor fibers on the forward cone, unitarily induced
representations with their cocycles, Weyl operators on a truncated Fock
space, the Gaussian chaos isomorphism, and a parity-dressed fermionic
toy model.  Every claimed identity is exercised numerically with an
explicit tolerance; the `verify` command runs the whole suite and emits
a machine-readable report.
"""

from .config import ConfigError, SuiteConfig, load_config_file, merge_config
from .minkowski import FourVector, minkowski_form
from .spin import SL2CElement, SL2CLieElement, LittleGroupElement, covering_map
from .poincare import PoincareElement, poincare_multiply
from .clifford import build_gamma, canonical_fiber, fiber_kernel
from .quadrature import GridParams, OrbitGrid, build_grid, SpinorSection
from .induced import apply_induced, borel_section_c, build_cocycle_pair
from .fock import FockSpace, WeylData, weyl_operator, chaos_map, fermionize
from .report import SuiteReport, run_suites, report_to_dict, emit_report

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "SuiteConfig",
    "load_config_file",
    "merge_config",
    "FourVector",
    "minkowski_form",
    "SL2CElement",
    "SL2CLieElement",
    "LittleGroupElement",
    "covering_map",
    "PoincareElement",
    "poincare_multiply",
    "build_gamma",
    "canonical_fiber",
    "fiber_kernel",
    "GridParams",
    "OrbitGrid",
    "build_grid",
    "SpinorSection",
    "apply_induced",
    "borel_section_c",
    "build_cocycle_pair",
    "FockSpace",
    "WeylData",
    "weyl_operator",
    "chaos_map",
    "fermionize",
    "SuiteReport",
    "run_suites",
    "report_to_dict",
    "emit_report",
    "__version__",
]
