"""Binary Steinhaus triangles, Steinhaus graphs and the universal embedding.

Every simple graph on ``n`` vertices is the subgraph induced on
``W_n = {t_i + 1}`` of exactly one Steinhaus graph of order ``t_{n-1} + 1``;
``embed`` finds it by solving a block lower-triangular system over GF(2).
"""

from .binomial import (
    binom,
    binom_parity,
    binomial_submatrix,
    minor_bareiss,
    minor_vandermonde,
    triangular_minor_closed_form,
)
from .errors import SteinhausError
from .gensets import (
    DelahanIndexSet,
    IndexSet,
    build_MA,
    d3_orbits,
    delahan_index_set,
    enumerate_generating,
    is_generating,
    matroid_independent,
    reconstruct,
    verify_block_structure,
)
from .gf2 import BitMatrix, BitRow, BlockPartition, invert, rank, solve, solve_block_lower
from .graph import (
    SimpleGraph,
    SteinhausGraph,
    embed,
    extract,
    graph_from_seq,
    induced_subgraph,
    w_set,
    xor_graphs,
    xor_simple,
)
from .triangle import (
    SteinhausTriangle,
    TrianglePos,
    entry_via_left,
    entry_via_right,
    entry_via_top,
    from_left_side,
    from_right_side,
    from_top_row,
    triangular_number,
)

__version__ = "0.1.0"
