"""Exact Brauer-class arithmetic over number fields, embedding tests for
division algebras, and reduction obstructions for abelian varieties."""

from .brauer import (
    BrauerClass,
    combine,
    make_class,
    negate,
    restrict,
    scale_class,
    schur_index,
    trivial,
)
from .csa import (
    CentralSimpleAlgebra,
    EmbeddingVerdict,
    capacity_and_dim,
    embed_decision,
    embeds,
    find_prime_subalgebra,
    tensor_capacity,
    tensor_capacity_cases,
    yu_embedding_test,
)
from .errors import BrauerKitError
from .hondatate import (
    IsogenyClassInvariants,
    PrimePower,
    WeilNumber,
    enumerate_weil_polys,
    is_weil_number,
    isogeny_invariants,
    qm_surface_check,
    read_weil_csv,
    reduction_obstruction,
    tate_invariants,
)
from .numfield import (
    DEFAULT_DEGREE_LIMIT,
    RATIONALS,
    IntegerPolynomial,
    LocalDegreeProfile,
    NumberField,
    Place,
    SubfieldMap,
    archimedean_places,
    compositum_candidates,
    count_real_roots,
    factor_mod_p,
    infinite_places,
    newton_polygon,
    place_below,
    places_above,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
