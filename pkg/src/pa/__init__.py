"""Exact arithmetic for 2-bridge link slopes, Heckoid and dihedral
orbifolds as weighted graphs, quaternionic isometry groups of the
3-sphere, rigid-cusp translation lattices and triangle-group coset
enumeration.

Everything is integer / Fraction exact; no floating point enters any
computation.
"""

from .cosetenum import (
    CosetTable,
    Presentation,
    enumerate_cosets,
    image_order,
    parse_word,
    spherical_triangle_order,
    triangle_group,
    triangle_presentation,
)
from .cusplattice import (
    EucIsometry,
    EucLattice,
    LatticeVector,
    PointGroupOrbit,
    T236,
    T244,
    brenner_candidates,
    evaluate_word,
    spectrum,
)
from .dihedral import (
    DihedralParams,
    exceptional_isom,
    gamma,
    isom_plus,
    isom_quotient,
    normalizer,
    params_for,
    same_oriented,
    solve_k,
)
from .orbigraph import (
    Edge,
    H1Z2Report,
    INF,
    ParedOrbifoldDescriptor,
    WeightedGraphOrbifold,
    canonical_key,
    check_sc,
    h1_z2,
    make_dihedral,
    make_exterior,
    make_heckoid,
    surger,
    templates,
    vertex_geometry,
)
from .quat import (
    DSElem,
    FinGroup,
    GroupOverflow,
    Isom3,
    J,
    J1,
    J2,
    L,
    QuatExt,
    binary_octahedral,
    close,
    dihedral_degree,
    recognize,
)
from .slopes import (
    EquivalenceVerdict,
    INF_SLOPE,
    Slope,
    canonical,
    components,
    continued_fraction,
    equivalence,
    eval_continued_fraction,
    hat,
    is_hyperbolic,
    parse_slope,
    reduce,
    slope,
)
from .verify import CheckResult, run_checks

__version__ = "1.0.0"

__all__ = [
    "CheckResult",
    "CosetTable",
    "DSElem",
    "DihedralParams",
    "Edge",
    "EquivalenceVerdict",
    "EucIsometry",
    "EucLattice",
    "FinGroup",
    "GroupOverflow",
    "H1Z2Report",
    "INF",
    "INF_SLOPE",
    "Isom3",
    "J",
    "J1",
    "J2",
    "L",
    "LatticeVector",
    "ParedOrbifoldDescriptor",
    "PointGroupOrbit",
    "Presentation",
    "QuatExt",
    "Slope",
    "T236",
    "T244",
    "WeightedGraphOrbifold",
    "binary_octahedral",
    "brenner_candidates",
    "canonical",
    "canonical_key",
    "check_sc",
    "close",
    "components",
    "continued_fraction",
    "dihedral_degree",
    "enumerate_cosets",
    "equivalence",
    "eval_continued_fraction",
    "evaluate_word",
    "exceptional_isom",
    "gamma",
    "h1_z2",
    "hat",
    "image_order",
    "is_hyperbolic",
    "isom_plus",
    "isom_quotient",
    "make_dihedral",
    "make_exterior",
    "make_heckoid",
    "normalizer",
    "params_for",
    "parse_slope",
    "parse_word",
    "recognize",
    "reduce",
    "run_checks",
    "same_oriented",
    "slope",
    "solve_k",
    "spectrum",
    "spherical_triangle_order",
    "surger",
    "templates",
    "triangle_group",
    "triangle_presentation",
    "vertex_geometry",
]
