"""sincmat: spectra of kernel random matrices A(i,j) = f(X_i, X_j) built from
the sinc kernel, their low-rank Galerkin estimator H T_M H^T, prolate
(bandlimited) eigenvalue computation, and closed-form error and concentration
bounds, with a reproducible experiment CLI on top.

Hot numerical kernels run through a compiled extension when it is available
and fall back to pure numpy otherwise; see sincmat.backend_name().
"""

from ._backend import backend_name
from ._version import __version__
from .basis import (HERMITE, LEGENDRE, BasisId, eval_matrix, hermite_basis,
                    hermite_scaled_eval, legendre_basis, legendre_norm_eval)
from .bounds import (BoundReport, bound_expected_R, bound_rM, chernoff_bounds,
                     hermite_L2_err, hermite_sup_bound, hermite_tail_R,
                     landau_widom_M, mcdiarmid_probability)
from .errors import (ConfigError, DomainError, NumericalError,
                     ResolutionError, SincmatError)
from .experiments import (EXPERIMENTS, ExperimentConfig, config_from_file,
                          make_config, resolve_M, run_experiment)
from .kernelop import (KernelSpec, PswfSet, QuadratureRule, TMatrix, TailNorm,
                       assemble_T, assemble_T_sinc_oracle, custom_kernel,
                       default_rule, gauss_legendre_rule, min_rule_order,
                       nystrom_lambdas, pswf_eval, pswf_solve,
                       residual_tail_norm, sinc_eval, sinc_kernel)
from .randmat import (UNIFORM, DesignMatrix, EstimatorMatrix, KernelMatrix,
                      SampleSet, build_A, build_estimator, build_H,
                      draw_samples, estimator_spectrum, export_matrix_csv,
                      gram_truncated, hs_residual, trial_seed)
from .spectra import (AT_LEAST, NEAR, SpectralHistogram, Spectrum,
                      count_threshold, histogram, histogram_to_csv,
                      spectrum_to_csv, sym_eigvals, weyl_check)

__all__ = [
    "AT_LEAST", "BasisId", "BoundReport", "ConfigError", "DesignMatrix",
    "DomainError", "EXPERIMENTS", "EstimatorMatrix", "ExperimentConfig",
    "HERMITE", "KernelMatrix", "KernelSpec", "LEGENDRE", "NEAR",
    "NumericalError", "PswfSet", "QuadratureRule", "ResolutionError",
    "SampleSet", "SincmatError", "SpectralHistogram", "Spectrum", "TMatrix",
    "TailNorm", "UNIFORM", "__version__", "assemble_T",
    "assemble_T_sinc_oracle", "backend_name", "bound_expected_R", "bound_rM",
    "build_A", "build_H", "build_estimator", "chernoff_bounds",
    "config_from_file", "count_threshold", "custom_kernel", "default_rule",
    "draw_samples", "estimator_spectrum", "eval_matrix", "export_matrix_csv",
    "gauss_legendre_rule", "gram_truncated", "hermite_L2_err", "hermite_basis",
    "hermite_scaled_eval", "hermite_sup_bound", "hermite_tail_R", "histogram",
    "histogram_to_csv", "hs_residual", "landau_widom_M", "legendre_basis",
    "legendre_norm_eval", "make_config", "mcdiarmid_probability",
    "min_rule_order", "nystrom_lambdas", "pswf_eval", "pswf_solve",
    "resolve_M", "residual_tail_norm", "run_experiment", "sinc_eval",
    "sinc_kernel", "spectrum_to_csv", "sym_eigvals", "trial_seed",
    "weyl_check",
]
