"""Canonical double covers of P2 and Hirzebruch surfaces: cohomology,
invariants, hypothesis audit, geography and invariant collisions."""

from ._dcover import (  # noqa: F401
    AuditRefusal,
    CohomologyTable,
    CoverInvariants,
    DivisorClass,
    DomainError,
    InvariantViolation,
    Polarization,
    SurfaceBase,
    __version__,
    audit,
    bpf_exception_locus,
    canonical_class,
    cohomology,
    enumerate_points,
    figure_svg,
    h0_lattice_oracle,
    has_smooth_member,
    intersect,
    invariants,
    is_base_point_free,
    is_very_ample,
    line_intersection,
    moduli_dimension,
    normal_sheaf_h0,
    p2_solutions,
    pushforward_twists,
    serre_dual,
    tangent_chi_constant,
    verify_moduli_examples,
    xi_candidates,
)
