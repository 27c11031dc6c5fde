from ._core import (
    DomainMismatch,
    Domain,
    NotAUnit,
    ResourceLimitError,
    Series,
    a_t_direct,
    acore_series,
    crank,
    dilate,
    dissect,
    dissection_identity_check,
    euler_product,
    hook_lengths,
    mex,
    p_direct,
    partitions,
    ptt_mod2_series,
    ptt_series,
    rank,
    reduce_mod2,
    run_suite,
    scan_congruences,
    series_mul,
    series_recip,
    suite_names,
)

__version__ = "0.1.0"
