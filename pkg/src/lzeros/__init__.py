"""Non-trivial zeros of zeta, Dirichlet and modular L-functions.

Each family's zeros on the critical line are characterized as the solutions
of an exact transcendental equation whose n-th solution is seeded by a
Lambert-W closed form and polished at increasing precision.
"""

from .numerics import (
    GUARD_DIGITS,
    DomainError,
    NoSignChangeError,
    NonConvergenceError,
    PrecisionPolicy,
    find_root,
    lambert_w0,
)
from .specialfn import ThetaKind, theta, theta_asymptotic
from .characters import (
    CharacterError,
    DirichletCharacter,
    build_character,
    build_character_from_values,
    gauss_sum,
    parse_character_file,
)
from .lfunctions import (
    CutoffInsufficientError,
    LFunctionFamily,
    TauTable,
    dh_family,
    dirichlet_family,
    eval_davenport_heilbronn,
    eval_dirichlet_l,
    eval_modular_l,
    eval_zeta,
    modular_family,
    ramanujan_family,
    ramanujan_tau,
    zeta_family,
)
from .solver import (
    CountingPoint,
    GapDetected,
    GapReport,
    ZeroRecord,
    count_critical,
    count_strip,
    counting_point,
    scan_gaps,
    seed,
    solve_bulk_asymptotic,
    solve_zero,
)
from .analysis import (
    ArithmeticTables,
    PairCorrelationBin,
    gue_kernel,
    j_from_zeros,
    pair_correlation,
    pi_from_zeros,
    psi_from_zeros,
    uniform_bins,
)
from .cache import CachedZero, ZeroCache

__version__ = "0.1.0"
