"""Division-free minimal period and (x-1)-multiplicity over GF(q).

Everything is computed by (x-1)^{N'}-adic digit folding: no polynomial
divisions, no field inversions, at most log_q N levels.  The *_oracle
functions are the slow gcd-based ground truth the fast routines are verified
against; ``paper_literal_min_period`` reproduces a published recurrence that
is wrong for some blocks when q > 2 (see ``discrepancy_search``).
"""

from ._core import (
    Error,
    Field,
    binomial_mod_p,
    discrepancy_search,
    min_period,
    min_period_binary,
    min_period_trace,
    minimal_polynomial,
    mp_oracle,
    multiplicity,
    multiplicity_binary,
    multiplicity_oracle,
    multiplicity_trace,
    paper_literal_min_period,
    planted_instance,
)

__all__ = [
    "Error",
    "Field",
    "binomial_mod_p",
    "discrepancy_search",
    "min_period",
    "min_period_binary",
    "min_period_trace",
    "minimal_polynomial",
    "mp_oracle",
    "multiplicity",
    "multiplicity_binary",
    "multiplicity_oracle",
    "multiplicity_trace",
    "paper_literal_min_period",
    "planted_instance",
]

__version__ = "1.0.0"
