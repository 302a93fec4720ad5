"""Exact combinatorics of nilpotent orbits in classical Lie algebras.

The package computes, over the rationals and with no floating point,
nilpotent orbit posets, Lusztig-Spaltenstein and birational induction,
birationally rigid orbits and the unique birational datum of each orbit,
Namikawa spaces and their finite Weyl groups, sheets and birational
sheets with their quotients, and an injective orbit-method label for
arbitrary adjoint orbits.  Families A, B, C and D only, adjoint type.
"""

__version__ = "0.1.0"

from .errors import (
    ConsistencyError,
    InputError,
    NilporbError,
    RankCapError,
    TableGapError,
    XiError,
)
from .roots import (
    ClassicalType,
    FiniteLinearGroup,
    LeviLabel,
    RootSystem,
    build_root_system,
    enumerate_levis,
    normalizer_action,
    orbit_stabilizer_group,
    parse_type,
)
from .orbits import (
    CentralizerType,
    ComponentGroup,
    OrbitLabel,
    closure_leq,
    component_group,
    enumerate_orbits,
    h2_dim,
    orbit_dim,
    reductive_centralizer,
    validate_label,
)
from .induction import (
    CentralParameter,
    InductionDatum,
    TailOrbit,
    birational_datum,
    collapse,
    dim_nilradical,
    induce,
    induce_with_degree,
    induction_degree,
    is_birational_induction,
    is_birationally_rigid,
    is_rigid,
    zero_datum,
)
from .namikawa import (
    KleinianLeaf,
    NamikawaData,
    check_weyl_match,
    codim2_leaves,
    namikawa_space,
)
from .sheets import (
    BirationalSheet,
    SheetRecord,
    SubspaceArrangement,
    birational_sheets,
    enumerate_sheets,
    regular_locus,
    verify_disjoint_cover,
)
from .orbitmethod import (
    AdjointOrbitLabel,
    OrbitMethodLabel,
    label_to_orbit,
    labels_equal,
    orbit_to_label,
    verify_injectivity,
)


def clear_caches() -> None:
    """Drop every in-process memo that depends on the criterion table.

    Needed when NILPORB_TABLE_PATH changes inside a running process;
    the CLI never needs this (one table per invocation), tests do.
    """
    from . import induction as _ind
    from . import namikawa as _nam
    from . import sheets as _sh
    from . import tables as _tab

    for fn in (
        _ind._staged_cached,
        _ind._tail_induce,
        _ind._birigid_tails,
        _ind.tail_birational_datum,
        _ind.rigid_tail_orbits,
        _ind.is_birationally_rigid,
        _ind.birational_datum,
        _nam.codim2_leaves,
        _nam.namikawa_space,
        _sh.birational_sheets,
    ):
        fn.cache_clear()
    _tab._cache.clear()

__all__ = [
    "__version__",
    "NilporbError",
    "InputError",
    "RankCapError",
    "XiError",
    "ConsistencyError",
    "TableGapError",
    "ClassicalType",
    "RootSystem",
    "LeviLabel",
    "FiniteLinearGroup",
    "parse_type",
    "build_root_system",
    "enumerate_levis",
    "normalizer_action",
    "orbit_stabilizer_group",
    "OrbitLabel",
    "CentralizerType",
    "ComponentGroup",
    "enumerate_orbits",
    "validate_label",
    "orbit_dim",
    "closure_leq",
    "reductive_centralizer",
    "h2_dim",
    "component_group",
    "TailOrbit",
    "CentralParameter",
    "InductionDatum",
    "zero_datum",
    "collapse",
    "induce",
    "induce_with_degree",
    "induction_degree",
    "dim_nilradical",
    "is_rigid",
    "is_birational_induction",
    "is_birationally_rigid",
    "birational_datum",
    "KleinianLeaf",
    "NamikawaData",
    "codim2_leaves",
    "namikawa_space",
    "check_weyl_match",
    "SheetRecord",
    "SubspaceArrangement",
    "BirationalSheet",
    "enumerate_sheets",
    "birational_sheets",
    "regular_locus",
    "verify_disjoint_cover",
    "AdjointOrbitLabel",
    "OrbitMethodLabel",
    "orbit_to_label",
    "label_to_orbit",
    "labels_equal",
    "verify_injectivity",
    "clear_caches",
]
