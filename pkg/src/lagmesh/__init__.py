"""lagmesh: two-body bound states in momentum space on a Gauss-Laguerre mesh.

The eigenproblem [T(p^2) + V(r^2)] |psi> = E |psi> is discretized on the
roots of a Laguerre polynomial with regularized Lagrange basis functions.
Kinetic terms are diagonal at the Gauss-quadrature level; potentials enter
through the spectral decomposition of the squared-radius matrix, which
handles Coulomb and linear shapes that the direct Fourier-kernel route
cannot.
"""

from ._backend import BACKEND
from .basis import LagrangeBasis
from .densities import (
    DensityCurve,
    Variable,
    analytic_coulomb_reference,
    default_momentum_grid,
    default_radius_grid,
    momentum_density,
    radial_density,
)
from .errors import (
    ConfigError,
    ConvergenceError,
    DegeneracyError,
    DomainError,
    LagmeshError,
    ModelDomainError,
    SingularityError,
)
from .fourier_direct import (
    PartialWaveKernel,
    coulomb_kernel,
    coulomb_partial_wave,
    direct_potential_matrix,
    gaussian_kernel,
    gaussian_vft,
    partial_wave,
    yukawa_kernel,
    yukawa_vft,
)
from .models import (
    BUILTIN_MODELS,
    analytic_coulomb_energy,
    coulomb_test_model,
    fulcher_model,
    gaussian_comparison_model,
)
from .operators import (
    OperatorMatrix,
    Role,
    SpectralDecomposition,
    kinetic_matrix,
    observable_matrix,
    potential_matrix,
    r_squared_matrix,
    spectral_decompose,
)
from .quadrature import Mesh, build_mesh, quadrature_sum
from .solver import (
    ModelSpec,
    ScanPoint,
    SolveResult,
    assemble_hamiltonian,
    matrix_expectation,
    momentum_expectation,
    scan_h,
    solve,
)
from .specfun import (
    SignedLogReal,
    laguerre,
    legendre_p,
    legendre_q,
    log_gamma,
    spherical_bessel_j,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BUILTIN_MODELS",
    "ConfigError",
    "ConvergenceError",
    "DegeneracyError",
    "DensityCurve",
    "DomainError",
    "LagmeshError",
    "LagrangeBasis",
    "Mesh",
    "ModelDomainError",
    "ModelSpec",
    "OperatorMatrix",
    "PartialWaveKernel",
    "Role",
    "ScanPoint",
    "SignedLogReal",
    "SingularityError",
    "SolveResult",
    "SpectralDecomposition",
    "Variable",
    "analytic_coulomb_energy",
    "analytic_coulomb_reference",
    "assemble_hamiltonian",
    "build_mesh",
    "coulomb_kernel",
    "coulomb_partial_wave",
    "coulomb_test_model",
    "default_momentum_grid",
    "default_radius_grid",
    "direct_potential_matrix",
    "fulcher_model",
    "gaussian_comparison_model",
    "gaussian_kernel",
    "gaussian_vft",
    "kinetic_matrix",
    "laguerre",
    "legendre_p",
    "legendre_q",
    "log_gamma",
    "matrix_expectation",
    "momentum_density",
    "momentum_expectation",
    "observable_matrix",
    "partial_wave",
    "potential_matrix",
    "quadrature_sum",
    "r_squared_matrix",
    "radial_density",
    "scan_h",
    "solve",
    "spectral_decompose",
    "spherical_bessel_j",
    "yukawa_kernel",
    "yukawa_vft",
]
