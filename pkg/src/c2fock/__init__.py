"""Young walls, the q-deformed Fock space and global bases for U_q(C_2^(1))."""

from .algebra import (
    CARTAN,
    DELTA,
    INDICES,
    ONE,
    Q,
    ZERO,
    LaurentPoly,
    NonDivisibleError,
    Weight,
    bar_symmetrize,
    format_poly,
    pairing,
    parse_poly,
    quantum_binomial,
    quantum_factorial,
    quantum_int,
)
from .crystal import (
    CrystalGraph,
    E_tilde,
    F_tilde,
    Signature,
    WallPart,
    crystal_graph,
    eps,
    is_maximal,
    maximal_vectors,
    phi,
    signature,
    wall_of_partition,
    wt,
)
from .fock import (
    FockVector,
    act_e,
    act_f,
    act_qh,
    check_ef_relation,
    check_serre,
    divided_power_e,
    divided_power_f,
    vacuum,
)
from .globalbasis import (
    A_basis,
    BasisExpansion,
    G_basis,
    G_table,
    NoChainError,
    PeelSequence,
    QContext,
    Q_closed_form,
    peel_sequence,
)
from .youngwall import (
    GroundState,
    InadmissibleError,
    NotReducedError,
    NotRemovableError,
    Partition,
    WallError,
    YoungWall,
    add_block,
    associated_partition,
    dominance,
    enumerate_walls,
    enumerate_weight_space,
    ground_wall,
    is_proper,
    is_reduced,
    parse_wall,
    peel,
    reduced_form,
    remove_block,
    remove_delta,
    sort_walls_desc,
    wall_total_order,
)

__version__ = "0.1.0"
