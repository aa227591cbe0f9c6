"""Glued module categories realized as modules over a gluing algebra."""

from .algebra import DEFAULT_GAMMA_CAP, FDAlgebra, GluingAlgebra, Module, assemble
from .datum import (
    Bimodule,
    GluingDatum,
    SiteAlgebra,
    datum_from_dict,
    load_datum,
    load_shipped,
    shipped_data,
    w_gluing_datum,
)
from .functors import (
    adjunction_check,
    canonical_map,
    cokernel_module,
    extend_shriek,
    extend_star,
    is_module_map,
    kernel_module,
    middle_extension,
    restrict,
    site_dims,
    support,
)
from .k0 import K0Report, flatness_check, k0_verify
from .meataxe import SimpleList, class_vector, composition_factors, simple_modules, split
from .supports import SupportReport, support_scan, translated_half_sets, w_gluing_check

__all__ = [name for name in dir() if not name.startswith("_")]
