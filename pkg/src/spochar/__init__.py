"""Exact universal symplectic/orthogonal character toolkit.

Two independent engines compute the same family of characters: determinants
over truncated complete-homogeneous series (`characters`) and a bosonic
Fock-space operator calculus (`fock`).  The `verify` module turns every
identity relating them into a bounded exact check.
"""

from .characters import (
    CharSpec,
    DivisionWitnessFailed,
    LastPartNonzero,
    ReductionMismatch,
    compute,
    o_even_bialternant,
    o_intermediate_reduce,
    o_odd_closed,
    o_skew,
    o_universal,
    schur,
    sp_bialternant,
    sp_odd_bialternant,
    sp_odd_jt,
    sp_skew,
    sp_universal,
)
from .fock import (
    FockVector,
    StraighteningDiverged,
    ZeroModeRequested,
    apply_mode,
    gamma_plus,
    heisenberg,
    ket,
    matrix_element,
    pairing,
    straighten,
    vacuum,
    vacuum_coefficient,
)
from .partitions import (
    EMPTY,
    GTChain,
    Partition,
    PartitionTooLong,
    contains,
    enumerate_partitions,
    gt_chains,
    interlaces,
    partitions_of,
    subpartitions,
)
from .ring import (
    DimensionCapExceeded,
    LaurentPoly,
    MissingAssignment,
    NonIntegerCoefficient,
    NonSquareMatrix,
    PolyMatrix,
    VarName,
    ZeroAssignedToLaurentVariable,
    var,
    xvar,
    yvar,
    zvar,
)
from .series import HSpec, check_newton, e_seq, h_seq
from .verify import CheckReport, Grid, SUITE_NAMES, run_all, run_suite

__version__ = "0.1.0"
