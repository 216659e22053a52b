"""Evolution group of the discrete Laguerre operator.

Closed-form propagator kernel in Jacobi-polynomial form, independent
oracle routes (exact moments, finite sections, quadrature, convolution,
hypergeometric), dispersive-bound scans, and splitting dynamics for the
associated lattice Schroedinger equations.
"""

from lagevol.polynomials import (
    PolyIndex,
    ExactPoly,
    GValue,
    laguerre_eval,
    laguerre_exact,
    jacobi_eval,
    jacobi_exact_sum,
    legendre_eval,
    g_eval,
    hyp2f1_terminating,
)
from lagevol.spectral import (
    TruncatedOperator,
    WeylValue,
    SecondKindSeq,
    BranchCutError,
    build_h0,
    apply_tau,
    factorization_apply,
    exp_integral_e1,
    weyl_m0,
    second_kind_q,
    weyl_solution,
    resolvent_kernel,
)
from lagevol.kernel import (
    KernelQuery,
    KernelEntry,
    KernelMatrix,
    kernel_value,
    kernel_closed_form,
    kernel_special,
    kernel_block,
    kernel_matrix,
)
from lagevol.oracles import (
    ComplexRational,
    FSample,
    ConvergenceError,
    kernel_moment_exact,
    kernel_closed_form_exact,
    kernel_quadrature,
    kernel_expm,
    f_n,
    kernel_convolution,
    kernel_2f1,
)
from lagevol.estimates import (
    ScanReport,
    WeightedNormSpec,
    weighted_norm,
    sup_norm_scan,
    decay_bound_check,
    band_bound_check,
    diagonal_bernstein_check,
    weighted_decay_scan,
)
from lagevol.dynamics import (
    EvolutionState,
    NlsConfig,
    TailToleranceError,
    BlowupError,
    delta_state,
    state_from_amplitudes,
    apply_kernel,
    evolve_linear,
    nonlinear_substep,
    evolve_nls,
    dispersion_experiment,
)

__version__ = "0.1.0"
