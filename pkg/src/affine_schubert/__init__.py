"""
Exact computer algebra for the affine symmetric group, the affine
nilHecke/nilCoxeter rings, and k-Schur / affine Stanley symmetric
functions.  Everything is integer arithmetic; there are no floats.
"""

from .cartan import (
    CartanData,
    ScalarPoly,
    cartan_matrix,
    divided_difference,
    pairing,
    pairing_coroot,
    phi0_scalar,
    reflect,
    simple_root,
    weyl_action,
)
from .kschur import KEnv, cyclically_decreasing_word
from .nilhecke import (
    NilCoxeterElement,
    NilHeckeElement,
    TensorElement,
    centralizes_scalars,
    chevalley_multiply,
    coproduct,
    equivariant_structure_constants,
    group_element,
    is_central_nilcoxeter,
    tensor_phi0,
)
from .symfunc import (
    SymFunc,
    antipode,
    coproduct_sym,
    hall_pairing,
    multiply,
    omega,
    partitions,
    project_quotient_n,
    to_homogeneous,
    to_monomial,
)
from .weyl import (
    AffinePermutation,
    bruhat_covers_down,
    elements_by_length,
    from_word,
    grassmannian_to_partition,
    grassmannians_by_length,
    identity,
    partition_to_grassmannian,
    reduced_word,
    simple_reflection,
    translation,
)

__all__ = [
    "AffinePermutation",
    "CartanData",
    "KEnv",
    "NilCoxeterElement",
    "NilHeckeElement",
    "ScalarPoly",
    "SymFunc",
    "TensorElement",
    "antipode",
    "bruhat_covers_down",
    "cartan_matrix",
    "centralizes_scalars",
    "chevalley_multiply",
    "coproduct",
    "coproduct_sym",
    "cyclically_decreasing_word",
    "divided_difference",
    "elements_by_length",
    "equivariant_structure_constants",
    "from_word",
    "grassmannian_to_partition",
    "grassmannians_by_length",
    "group_element",
    "hall_pairing",
    "identity",
    "is_central_nilcoxeter",
    "multiply",
    "omega",
    "pairing",
    "pairing_coroot",
    "partition_to_grassmannian",
    "partitions",
    "phi0_scalar",
    "project_quotient_n",
    "reduced_word",
    "reflect",
    "simple_reflection",
    "simple_root",
    "tensor_phi0",
    "to_homogeneous",
    "to_monomial",
    "translation",
    "weyl_action",
]
