"""Exact verification toolkit for three-bracket multilinear components.

The package computes, over the rationals and with no floating point in
any mathematical result, the constituents of the quotients of
D(n,n-1,n-1) by the images of three equivariant maps, and matches them
against the word presentations of the corresponding symmetric-group
module on 3n-2 letters.
"""

from .combinatorics import (
    CycleType,
    Partition,
    PieriConstituent,
    Tableau,
    class_size,
    conjugate,
    enumerate_sst,
    enumerate_syt,
    gl_dim,
    kostka,
    mn_character,
    normalize_partition,
    parse_partition,
    partition_text,
    partitions,
    pieri_constituents,
    specht_dim,
    superstandard,
)
from .decomposition import (
    HomSpace,
    check_image_inclusion,
    cokernel_multiplicity,
    decompose_cokernel,
    decomposition_report,
    hom_space,
    restriction_rank,
)
from .gamma_maps import (
    GammaMap,
    defining_tableaux,
    g_image,
    gamma1,
    gamma2,
    gamma3,
    gamma_by_name,
    gamma_generator_image,
    gamma_image,
    gamma_omega_image,
    omega_gamma1,
    omega_gamma2,
    omega_gamma3,
    omega_sign,
)
from .lanke import (
    expected_lie_dim,
    lie2_dim,
    lie_character,
    lie_dim,
    normalize,
    quotient_context,
    relation_rows,
    schur_bridge,
    specht_multiplicities,
    word_from_text,
    word_to_text,
)
from .tensor_algebra import (
    DividedMonomial,
    DividedTensor,
    ExteriorMonomial,
    ExteriorTensor,
    LinComb,
    dp_comultiply,
    dp_comultiply3,
    dp_product,
    e_tensor,
    ext_comultiply,
    ext_product,
    mono_text,
    parse_mono,
    parse_tensor,
    tensor_text,
)
from .weyl import (
    WeylVector,
    coschur_image,
    oracle_coords,
    phi_S,
    pi_U,
    psi_S,
    raise_in_rows,
    sst_basis_vectors,
    straighten,
    straighten_pair,
)

__version__ = "1.0.0"
