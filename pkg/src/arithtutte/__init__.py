"""Exact arithmetic Tutte polynomials of ranked sets with multiplicities."""
from .abelian import (
    FGGroup,
    SNFResult,
    VectorList,
    build_arithmetic_matroid,
    contract_list,
    gcd_minors,
    multiplicity,
    multiplicity_via_bases,
    quotient,
    rank_of,
    restrict_list,
    snf,
)
from .axioms import (
    AxiomReport,
    Molecule,
    Violation,
    check_A1,
    check_A2,
    check_matroid,
    check_P,
    check_polymatroid,
    classify,
    find_molecule,
    molecule_partition,
    rho,
)
from .builders import (
    DeltaMatroid,
    Edge,
    LabeledGraph,
    bollobas_riordan,
    check_symmetric_exchange,
    delta_rank,
    delta_ranked_set,
    graph_multiplicity_formula,
    graph_to_vectorlist,
    is_even,
)
from .convolution import convolve, functional, verify_theorem1, verify_theorem2
from .errors import (
    ArgumentError,
    ArithTutteError,
    DomainError,
    PreconditionError,
    ResourceError,
    UnsupportedError,
)
from .oracles import (
    count_colorings,
    count_flows,
    count_lattice_points,
    ehrhart,
    qsets,
    verify_corollary7,
    verify_corollary8,
    verify_face_decomposition,
    verify_theorem6,
    zonotope_hrep,
)
from .poly import BiLaurent, HalfInt, poly_add, poly_eval, poly_mul
from .ranked import (
    RankedSet,
    aritutte,
    contract,
    dualize,
    product_mult,
    restrict,
    set_max_ground,
    tutte,
)

__version__ = "0.1.0"
