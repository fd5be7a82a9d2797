"""Exact heights, slopes and multinomial-lcm computations.

The heavy lifting lives in the compiled extension ``_adelic``; bundles and
exact values cross the boundary as JSON strings (see the README for the
wire formats).
"""

import importlib

try:
    _impl = importlib.import_module("._adelic", __name__)
except ImportError:  # build-tree layout: extension next to the package
    _impl = importlib.import_module("_adelic")

chain_qrs = _impl.chain_qrs
check_groups = _impl.check_groups
compare = _impl.compare
counterexample_eq = _impl.counterexample_eq
dual = _impl.dual
ext_power = _impl.ext_power
height = _impl.height
lcm_upto = _impl.lcm_upto
max_slope = _impl.max_slope
mh_construct = _impl.mh_construct
min_search = _impl.min_search
pnl = _impl.pnl
root_lattice_an = _impl.root_lattice_an
slope = _impl.slope
standard = _impl.standard
subspace_slope = _impl.subspace_slope
sym_power = _impl.sym_power
tensor = _impl.tensor
to_float = _impl.to_float
verify = _impl.verify

__all__ = [
    "chain_qrs",
    "check_groups",
    "compare",
    "counterexample_eq",
    "dual",
    "ext_power",
    "height",
    "lcm_upto",
    "max_slope",
    "mh_construct",
    "min_search",
    "pnl",
    "root_lattice_an",
    "slope",
    "standard",
    "subspace_slope",
    "sym_power",
    "tensor",
    "to_float",
    "verify",
]
