"""Combinatorial information measures, information width and function-class properties."""

from ._core import (
    DomainError,
    InfeasibleError,
    PreconditionError,
    RangeError,
    UndefinedValueError,
    UnsupportedError,
    brute_force_width,
    complement_complexity,
    expdecay_info,
    figure,
    figure_csv,
    figure_ids,
    identity_report,
    info_width,
    l_dimension,
    ld_info,
    mc_property_prob,
    measure,
    property_report,
    vc_dimension,
    vd_complexity,
    vd_info,
    vdc_complexity,
    vdc_info,
    vdsm_info,
)

__all__ = [name for name in dir() if not name.startswith("_")]
