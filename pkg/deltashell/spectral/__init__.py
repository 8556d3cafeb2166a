from .special import phi_l, psi_l, green_kernel, fundamental_pair
from .inertia import inertia, sturm_count
from .jacobi import (
    build_jacobi,
    truncation_inertia,
    check_self_adjoint,
    check_semibounded,
    check_discrete,
    check_continuous_spectrum,
)
from .negcount import (
    weyl_matrix,
    kappa_matrix,
    kappa_tolerance,
    bound_state_report,
    count_bound_states,
    negative_part_bound,
    two_shell_count,
)
from .certificates import (
    bargmann_bound,
    bargmann_check,
    birman_schwinger_trace,
    birman_schwinger_count,
    necessary_conditions,
    full_count_condition,
    gershgorin_classify,
    gershgorin_positivity,
    epsilon_two_state_check,
    matrix_bargmann,
    kac_krein_check,
)
from .multidim import (
    channel_multiplicity,
    total_bound_states,
    aggregate_bounds,
    multidim_verdicts,
)
from .oracle import (
    zero_energy_solution,
    oscillation_report,
    oscillation_count,
    fd_count,
    fd_converged_count,
)
