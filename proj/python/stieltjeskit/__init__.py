"""Laurent-Stieltjes constants, explicit bounds, and zero-free disk certificates.

High-precision values cross the boundary as decimal strings; parse them with
`decimal.Decimal` or `mpmath.mpf` as needed.
"""

from ._core import (
    StieltjesError,
    __version__,
    application_a_bound,
    characters,
    crossover,
    gamma_chi,
    gamma_hurwitz,
    gamma_over_factorial,
    gamma_zeta,
    hurwitz_zeta,
    l_eval,
    matsuoka_bound,
    minorant_at,
    taylor_certificate,
    theorem1_bound,
    verify_proof_constants,
    zerofree,
    zeta_laurent,
)

__all__ = [
    "StieltjesError",
    "__version__",
    "application_a_bound",
    "characters",
    "crossover",
    "gamma_chi",
    "gamma_hurwitz",
    "gamma_over_factorial",
    "gamma_zeta",
    "hurwitz_zeta",
    "l_eval",
    "matsuoka_bound",
    "minorant_at",
    "taylor_certificate",
    "theorem1_bound",
    "verify_proof_constants",
    "zerofree",
    "zeta_laurent",
]
