"""Fractional calculus for radial functions on non-Archimedean local fields.

Radial functions live on the shell lattice q**Z.  The package evaluates
the fractional derivative and its regularized right inverse through exact
shell series (with independent hypersingular-integral oracles), and solves
the nonlinear Cauchy problem D^a u = f(|t|, u), u(0) = u0 by Picard
iteration with shell-by-shell continuation and strict-residual
verification.
"""

from .errors import (
    ConfigError,
    ContractionFailure,
    DivergentTail,
    DomainViolation,
    ExpressionError,
    ExprEvalError,
    ExprNameError,
    ExprSyntaxError,
    FrontierTooLow,
    MarginTooSmall,
    MissingBeta,
    NoContraction,
    ScalingViolation,
    ToleranceNotReached,
    UltrafracError,
)
from .expr import FUNCTIONS, RhsExpr, make_callable, parse_expression
from .fracint import (
    IalphaParams,
    KernelConstant,
    apply_ialpha,
    bound_constant,
    front_coeff,
    ialpha_oracle,
    is_log_branch,
    kernel_constant,
)
from .grid import (
    ConditionEntry,
    ConditionReport,
    GrowthKind,
    RadialFunction,
    RadialGrid,
    TailKind,
    TailSpec,
    ball_power_integral,
    check_growth_conditions,
    qpow,
    shell_measure,
    weighted_tail_sum,
)
from .solver import (
    MildSolution,
    ResidualReport,
    RhsSpec,
    check_rhs_conditions,
    continue_solution,
    mild_residuals,
    picard_solve,
    v0_constant,
    verify_strict,
)
from .vladimirov import (
    DalphaParams,
    apply_dalpha,
    dalpha_oracle,
    diag_coeff,
    fit_power_tails,
    theta,
)

__version__ = "0.1.0"
