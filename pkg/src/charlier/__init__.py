"""Charlier polynomials: extended-precision evaluation, region-wise
asymptotic approximations, and zero tables."""

from .errors import (BracketError, CharlierError, ConvergenceError, DomainError,
                     PairingError, SingularityError, ZeroCountError)
from .oracle import (BigReal, KrawtchoukScaling, Params, charlier_recurrence,
                     charlier_sum, krawtchouk, limit_error, orthogonality_defect,
                     scaled_krawtchouk)
from .specfun import (DEFAULT_CONFIG, SpecFunConfig, airy_ai, airy_ai_deriv,
                      airy_bi, airy_bi_deriv, hermite, log_gamma, pcf_d)
from .asym import (ClassifierConfig, Discriminant, Region, RegionDecision,
                   ScaledCoordinate, TurningPoints, classify, discriminant,
                   evaluate_auto, evaluate_formula, f1, f2, f3, f3_complex, f4,
                   f4_complex, f5, f6, f7, f8, f9, f10, f11, formula_for_region,
                   turning_points)
from .largen import ComplexValue, g3, g4, g7, g9, g10, g11
from .zeros import (ThetaSolution, ZeroKind, ZeroRecord, admissible_l_max,
                    approximate_zeros, exact_zeros, first_zero_approx,
                    first_zero_asymptotic, near_integer_zeros, solve_theta,
                    theta_equation, zero_table)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
