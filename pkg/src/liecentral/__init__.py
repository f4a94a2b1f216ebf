"""Second Lie-algebra cohomology, central extensions, and the quadratic
realization of sp(2n) in the Weyl algebra (symbolic and truncated Fock space)."""

__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    AlgebraElement,
    JacobiError,
    LieAlgebra,
    bracket,
    change_basis,
    jacobi_residual,
)
from .cohomology import (  # noqa: E402
    CentralExtension,
    CohomologyResult,
    TwoCochain,
    central_extension,
    coboundary_space,
    cocycle_space,
    is_central,
    second_cohomology,
)
from .linalg import nullspace_basis, rref  # noqa: E402
