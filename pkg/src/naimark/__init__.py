"""Naimark extensions of Weyl-Heisenberg covariant rank-one measurements.

The package constructs the d^2 x d^2 interaction unitary for any rank-one
WH covariant POVM from a single d x d completion matrix, via two provably
identical routes (a block-circulant layout and a generalized Bell-basis
rotation), decomposes it into qubit gates when d = 2**n, and simulates and
verifies the resulting measurements against direct Born-rule oracles.
"""

__version__ = "0.1.0"

from .bell import (
    build_bell_naimark,
    clock_decomposition,
    controlled_clock,
    controlled_shift,
    fiducial_for_embedding,
    matrix_element,
    shift_decomposition,
)
from .block import (
    NaimarkExtension,
    block_constraint_violation,
    blocks_of,
    build_block_naimark,
    catalog_m,
    complete_unitary,
    diagonal_blocks,
    extract_blocks,
    rank_one_block,
    reassemble_from_blocks,
    structure_report,
)
from .circuits import (
    Gate,
    GateList,
    cx_qudit_circuit,
    cz_qudit_circuit,
    expand,
    full_naimark_circuit,
    qcz_circuit,
    qudit_fourier_circuit,
    qudit_z_circuit,
)
from .errors import (
    CatalogMissError,
    InvalidCircuitError,
    InvalidDimensionError,
    InvalidInputError,
    NaimarkError,
    NumericalFailureError,
    ParseError,
    RankDeficientFrameError,
    UnsupportedDimensionError,
)
from .fiducials import (
    Fiducial,
    ICResult,
    WHFrame,
    builtin_fiducial,
    compound_sic_report,
    is_informationally_complete,
    sic_report,
    wh_orbit,
)
from .simulate import (
    DensityMatrix,
    OutcomeDistribution,
    direct_probabilities,
    embed,
    frame_gram,
    measure_probabilities,
    sample,
    tomography_reconstruct,
)
from .wh import (
    DEFAULT_TOL,
    PHYSICAL_TOL,
    bell_change_of_basis,
    bell_vector,
    clock_op,
    displacement,
    fourier,
    root_of_unity,
    shift_op,
)

__all__ = [
    "DEFAULT_TOL",
    "PHYSICAL_TOL",
    "CatalogMissError",
    "DensityMatrix",
    "Fiducial",
    "Gate",
    "GateList",
    "ICResult",
    "InvalidCircuitError",
    "InvalidDimensionError",
    "InvalidInputError",
    "NaimarkError",
    "NaimarkExtension",
    "NumericalFailureError",
    "OutcomeDistribution",
    "ParseError",
    "RankDeficientFrameError",
    "UnsupportedDimensionError",
    "WHFrame",
    "bell_change_of_basis",
    "bell_vector",
    "block_constraint_violation",
    "blocks_of",
    "build_bell_naimark",
    "build_block_naimark",
    "builtin_fiducial",
    "catalog_m",
    "clock_decomposition",
    "clock_op",
    "complete_unitary",
    "compound_sic_report",
    "controlled_clock",
    "controlled_shift",
    "cx_qudit_circuit",
    "cz_qudit_circuit",
    "diagonal_blocks",
    "direct_probabilities",
    "displacement",
    "embed",
    "expand",
    "extract_blocks",
    "fiducial_for_embedding",
    "fourier",
    "frame_gram",
    "full_naimark_circuit",
    "is_informationally_complete",
    "matrix_element",
    "measure_probabilities",
    "qcz_circuit",
    "qudit_fourier_circuit",
    "qudit_z_circuit",
    "rank_one_block",
    "reassemble_from_blocks",
    "root_of_unity",
    "sample",
    "shift_decomposition",
    "shift_op",
    "sic_report",
    "structure_report",
    "tomography_reconstruct",
    "wh_orbit",
]
