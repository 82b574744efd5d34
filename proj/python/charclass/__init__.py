"""Exact characteristic classes of singular projective hypersurfaces.

Thin re-export of the compiled extension. All arithmetic is exact rational
arithmetic; class coefficients in reports are decimal strings.
"""

import importlib

try:
    # installed wheel layout: extension lives inside the package
    _impl = importlib.import_module("._charclass", __name__)
except ImportError:
    # build-tree layout: extension importable from PYTHONPATH
    _impl = importlib.import_module("_charclass")

__all__ = [
    "ConsistencyError",
    "InputParseError",
    "NonIsolatedError",
    "PreconditionError",
    "canonical_poly",
    "chi_complement",
    "chow_eval",
    "csm_report",
    "gradient",
    "milnor_number",
    "total_milnor",
    "verify_aluffi_nc",
    "verify_cor13",
    "verify_lemma52",
    "verify_multilog",
    "verify_thm12_identity",
    "verify_thm12_point_blowup",
]

for _name in __all__:
    globals()[_name] = getattr(_impl, _name)
del _impl, _name, importlib
