"""Certified instability index of periodic fourth-order operators.

    A[h] = -h'''' - (a h)'' + (b h)' - c h   on [0, 2 pi)

The heavy lifting lives in the compiled ``_sik`` extension.
"""

from ._sik import (
    OperatorSpec,
    assemble_A,
    certified_index,
    constant_M,
    dispersion_index,
    inertia_hermitian,
    instability_index,
    kronecker_lyapunov,
    leibnitz_constant,
    solve_lyapunov,
    spectrum,
    triple_norm_U0,
    validate,
)

__all__ = [
    "OperatorSpec",
    "assemble_A",
    "certified_index",
    "constant_M",
    "dispersion_index",
    "inertia_hermitian",
    "instability_index",
    "kronecker_lyapunov",
    "leibnitz_constant",
    "solve_lyapunov",
    "spectrum",
    "triple_norm_U0",
    "validate",
]
