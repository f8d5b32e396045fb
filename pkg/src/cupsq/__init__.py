"""Cup-i products and fast Steenrod squares on simplicial complexes over F2."""

from .cupi import cup_i_product, delta_i_chain, delta_i_simplex, evaluate_pairing, subset_partition
from .f2linear import (
    CohomologySpace,
    F2Matrix,
    betti_numbers,
    class_coordinates,
    cohomology_basis,
    is_coboundary,
    is_cocycle,
    rank,
    solve,
)
from .simplicial import Chain, Cochain, SimplicialComplex, VertexMap, face, face_composite
from .steenrod import sq_class, sq_cochain, sq_direct_oracle, sq_matrix, sq_support

__version__ = "0.1.0"
