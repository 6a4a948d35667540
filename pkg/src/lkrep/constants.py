"""Numerical tolerances and default parameters, collected in one place."""

# Relative singular-value cutoff for numerical nullspaces (invariant-form
# solver, commutant dimension).
NULLSPACE_RTOL = 1e-8

# A Hermitian form normalized to unit norm counts as positive definite when
# its smallest eigenvalue exceeds this.
DEFINITE_MIN_EIG = 1e-10

# The invariant-form solver reports failure when even the best candidate
# violates invariance by more than this.
FORM_RESIDUAL_FAIL = 1e-6

# Residual a returned form is expected to satisfy at definite points.
FORM_RESIDUAL_OK = 1e-8

# Default tolerance for eigenvalue multiset clustering and comparison.
EIG_TOL = 1e-9

# Tolerance for the eigenvalue recursion cross-checks.
RECURSION_TOL = 1e-8

# Singular values of unitarized matrices must sit within this of 1.
UNITARY_TOL = 1e-8

# Stabilized traces closer than this count as equal.
TRACE_TOL = 1e-9

# |det - 1| bound after SU-normalization.
SU_DET_TOL = 1e-10

# Default scan parameters: t = -exp(i * theta), q = exp(i * ratio * theta).
# The ratio is kept well inside the regime where the form is definite.
SCAN_THETA_T = 0.1
SCAN_RATIO = 0.02
