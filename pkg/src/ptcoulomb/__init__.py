"""PT-symmetric harmonic oscillator and regularized Coulomb problem.

The two are linked by a complexified Kustaanheimo-Stiefel map.  Closed-form
spectra and wavefunctions live in :mod:`ptcoulomb.models`, the change of
variables in :mod:`ptcoulomb.liouville`, and an independent contour shooting
solver in :mod:`ptcoulomb.solver`.
"""

from .contour import Contour, ContourKind, check_pt_symmetry
from .models import (
    CoulombParams,
    OscillatorParams,
    QuantumState,
    alpha,
    big_a,
    coulomb_energy,
    coulomb_wavefunction,
    ho_energy,
    ho_wavefunction,
    kappa_sq,
)
from .solver import EigenResult, ShootingProblem, match_function, scan_eigenvalues

__version__ = "0.1.0"
