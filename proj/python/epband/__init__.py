"""Band structure, exceptional points, and half-integer winding numbers for a
gain/loss dimerized lattice.

Thin wrapper over the compiled extension; everything public lives in
``epband._core``.
"""

from ._core import (  # noqa: F401
    BandPoint,
    BiorthPair,
    BoundaryY,
    CoalescentError,
    CrosscheckReport,
    DegenerateParamsError,
    EigenConvergenceError,
    EpbandError,
    EPDomain,
    EPRecord,
    FieldSample,
    InternalCheckError,
    KinkReport,
    KLoop,
    LoopThroughEPError,
    MinGapResult,
    ModelParams,
    Momentum,
    NonQuantizedError,
    PhaseRegion,
    PointClass,
    SizeGuardError,
    VariantKind,
    auxiliary_b,
    band_pair,
    biorthogonal_pair,
    classify_phase,
    classify_point,
    crosscheck_spectra,
    energy_scale,
    ep_domain_perturbed,
    eps_squared,
    field_f,
    fill_charges,
    kink_profile,
    locate_eps,
    min_gap_scan,
    momentum_grid,
    near_ep_asymptote,
    qx_expectation,
    symmetry_defect,
    winding_number,
    wrap_to_bz,
)

__version__ = "0.1.0"
