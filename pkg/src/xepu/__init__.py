"""Two-qubit X states of the same spectrum and concurrence as any state,
plus the entanglement-preserving unitary (EPU) connecting them.

Core entry points: ``build_x_state`` maps a (spectrum, concurrence) pair to
its X-family representative, ``build_epu`` returns the unitary carrying an
arbitrary state onto that representative, and ``parameterize`` generates
guaranteed-physical members from a spectrum plus a fraction of its
concurrence ceiling. The ``xepu`` console script drives the Monte Carlo
verification campaigns and the scatter/landscape data sweeps.
"""

from .ansatz import AnsatzParams, Ordering, alpha_star, assemble_rho_x, c_surface, x_eigenvectors
from .concurrence import (
    ConcurrenceValue,
    concurrence_general,
    concurrence_x,
    mems_concurrence,
    preconcurrence,
    spin_flip,
)
from .linalg import HermEig, backend_name, hermitian_eig, is_unitary, psd_sqrt
from .states import (
    DensityMatrix,
    Spectrum,
    SweepFamily,
    SweepRecord,
    bell_projector,
    purity,
    sample_random,
    spectrum_from_hyperspherical,
    spectrum_of,
    validate,
    werner,
    werner_concurrence,
)
from .xfamily import (
    EpuResult,
    XConstruction,
    build_epu,
    build_mems,
    build_x_state,
    build_x_state_cases,
    parameterize,
    q_value,
    swap_variant,
)

__version__ = "0.1.0"

__all__ = [
    "AnsatzParams",
    "ConcurrenceValue",
    "DensityMatrix",
    "EpuResult",
    "HermEig",
    "Ordering",
    "Spectrum",
    "SweepFamily",
    "SweepRecord",
    "XConstruction",
    "alpha_star",
    "assemble_rho_x",
    "backend_name",
    "bell_projector",
    "build_epu",
    "build_mems",
    "build_x_state",
    "build_x_state_cases",
    "c_surface",
    "concurrence_general",
    "concurrence_x",
    "hermitian_eig",
    "is_unitary",
    "mems_concurrence",
    "parameterize",
    "preconcurrence",
    "psd_sqrt",
    "purity",
    "q_value",
    "sample_random",
    "spectrum_from_hyperspherical",
    "spectrum_of",
    "spin_flip",
    "swap_variant",
    "validate",
    "werner",
    "werner_concurrence",
    "x_eigenvectors",
    "__version__",
]
