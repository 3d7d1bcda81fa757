"""Central numerical tolerance configuration.

Every comparison threshold used by the library lives in one frozen record so
that tests, library code and documentation agree on the defaults.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    #: accepted asymmetry max|A - A^T| before an input is rejected
    symmetry: float = 1e-10
    #: Jacobi convergence: off-diagonal Frobenius mass <= jacobi_off * ||A||_F
    jacobi_off: float = 1e-12
    #: hard sweep cap for the Jacobi eigensolver
    jacobi_max_sweeps: int = 100
    #: orthonormality / eigen-residual budget for decomposition outputs
    eigen_residual: float = 1e-8
    #: eigenvalues below this count as zero (disconnection threshold)
    zero_eigenvalue: float = 1e-8
    #: absolute tolerance on the certificate half-inequality comparison
    certificate_comparison: float = 1e-12
    #: generic absolute slack for inequality checks (bounds, margins)
    inequality_slack: float = 1e-9
    #: pivot threshold of the dense simplex solver
    lp_pivot: float = 1e-9
    #: feasibility threshold for the simplex phase-1 objective
    lp_feasibility: float = 1e-7


DEFAULT = Tolerances()
