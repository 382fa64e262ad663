# SPDX-License-Identifier: Apache-2.0
"""Exact fibers over torus-fixed points.

Thin re-export of the compiled module: transformed Macdonald polynomials,
cores and quotients, cyclic and binary dihedral induction checks, and affine
root-lattice censuses.  Partitions are passed as text like ``"[2,2,1]"``;
every returned number is an exact Python int, never a float.
"""

from _procesi import (
    character_value,
    components,
    core_quotient,
    dimension,
    fake_degree,
    macdonald_fiber,
    mod_components,
    partitions_of,
    root_vector,
    set_cache_dir,
    type_d_decomposition,
    verify_type_a,
    verify_type_d,
)

__all__ = [
    "character_value",
    "components",
    "core_quotient",
    "dimension",
    "fake_degree",
    "macdonald_fiber",
    "mod_components",
    "partitions_of",
    "root_vector",
    "set_cache_dir",
    "type_d_decomposition",
    "verify_type_a",
    "verify_type_d",
]

__version__ = "0.1.0"
