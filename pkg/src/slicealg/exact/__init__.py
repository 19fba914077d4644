from .scalars import TwoLocalScalar, v2
from .snf import (
    SNFResult,
    smith_normal_form,
    kernel_basis,
    lattice_basis,
    solve_lattice,
    solve_many,
)
from .groups import (
    AbelianGroup,
    cokernel,
    homology,
    subquotient_homology,
    BoundariesNotCycles,
)

__all__ = [
    "TwoLocalScalar",
    "v2",
    "SNFResult",
    "smith_normal_form",
    "kernel_basis",
    "lattice_basis",
    "solve_lattice",
    "solve_many",
    "AbelianGroup",
    "cokernel",
    "homology",
    "subquotient_homology",
    "BoundariesNotCycles",
]
