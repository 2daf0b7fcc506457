from ._symtrop import (
    Partition,
    binomial_inequality_holds,
    binomial_violation_witness,
    covers,
    dominates,
    fuse,
    hasse,
    hasse_dot,
    partitions,
    pencil_json,
    pencil_pretty,
    run_acceptance,
    stabilization_tau,
    star,
    superdominates,
    t_k_cone,
    trop_bp_dual,
    trop_of_sos,
    trop_vandermonde,
    verify_decic,
    verify_quartic,
    verify_sos4_extreme_rays,
)

__all__ = [
    "Partition",
    "binomial_inequality_holds",
    "binomial_violation_witness",
    "covers",
    "dominates",
    "fuse",
    "hasse",
    "hasse_dot",
    "partitions",
    "pencil_json",
    "pencil_pretty",
    "run_acceptance",
    "stabilization_tau",
    "star",
    "superdominates",
    "t_k_cone",
    "trop_bp_dual",
    "trop_of_sos",
    "trop_vandermonde",
    "verify_decic",
    "verify_quartic",
    "verify_sos4_extreme_rays",
]
