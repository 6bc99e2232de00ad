"""Separability and generalized concurrence of multipartite pure states.

Pure states are dense :class:`StateTensor` objects. A state is a product
state exactly when every 2x2 minor of the minor system vanishes; the
generalized concurrence is the square root of the summed squared minors.
Mixed states get a convex-roof estimate, and multilinear maps can be
checked against the tensor-product universal property.
"""
from .errors import (
    ArgumentError,
    CapacityError,
    DimensionError,
    FormatError,
    KetSemanticError,
    KetSyntaxError,
    MultisepError,
    NormalizationError,
    TensorIndexError,
    ValidationError,
)
from .tensor_core import (
    StateTensor,
    basis_state,
    block_decompose,
    flatten_index,
    make_state,
    matricize,
    norm,
    normalize,
    tensor_product,
    unflatten_index,
)
from .multilinear import (
    MultilinearMap,
    canonical_map,
    check_multilinearity,
    evaluate,
    induced_linear,
    map_add,
    map_scale,
    operator_tensor,
    tensor_product_criteria,
)
from .separability import (
    MinorId,
    SeparabilityReport,
    enumerate_minors,
    eval_minor,
    is_separable,
    rank_one_oracle,
)
from .concurrence import (
    ConcurrenceConfig,
    concurrence_pure,
    concurrence_two_qubit,
    linear_entropy_concurrence,
)
from .decomposition import Decomposition, minimal_decomposition, rank_oracle, reconstruct
from .mixed_roof import (
    DensityMatrix,
    Ensemble,
    RoofConfig,
    convex_roof_concurrence,
    pure_decomposition,
    wootters_concurrence,
)
from .ket import format_ket, parse_ket
from .formats import read_density, read_map, read_state, write_density, write_map, write_state

__version__ = "0.1.0"
