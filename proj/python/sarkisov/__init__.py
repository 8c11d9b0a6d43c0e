"""Exact-arithmetic Sarkisov link classifier for curve blowups of rank-1 Fano threefolds.

The heavy lifting happens in the compiled ``_core`` module; this package adds
a couple of conveniences (JSON decoding, keyword-friendly wrappers).
"""

import json as _json

from ._core import (
    __version__,
    anticanonical_cube,
    anticanonical_form,
    classify_json,
    flop_defect,
    intersection_table,
    isotropic_over_rationals,
    k3_is_free,
    k3_is_nef,
    k3_self_intersection,
    no_rational_curves_obstruction,
    quadrisecant_count,
    represents,
    scan_csv,
    strict_transform_cube,
    triple_product,
)

__all__ = [
    "__version__",
    "anticanonical_cube",
    "anticanonical_form",
    "classify",
    "classify_json",
    "flop_defect",
    "intersection_table",
    "isotropic_over_rationals",
    "k3_is_free",
    "k3_is_nef",
    "k3_self_intersection",
    "no_rational_curves_obstruction",
    "quadrisecant_count",
    "represents",
    "scan_csv",
    "strict_transform_cube",
    "triple_product",
]


def classify(d, g, ambient="P3", **kwargs):
    """Classify one blowup and return the record as a dict.

    Keyword arguments mirror ``classify_json``: ``k3_hypothesis``,
    ``genericity``, ``modulus_max``, ``box``, ``partner_box``,
    ``partner_d_max``, ``partner_g_max``.
    """
    return _json.loads(classify_json(d, g, ambient, **kwargs))
