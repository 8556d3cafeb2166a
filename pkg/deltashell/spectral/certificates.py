"""
Bounds on the bound state count and certificates fixing it without computing the
inertia of the kappa matrix.

Every certificate returns a :class:`Verdict`. A Holds verdict carries the count it
implies in ``value``; a Fails verdict only says that the hypotheses of the test are not
met, never that the implied count is wrong.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple

import numpy

from deltashell import log
from deltashell.api.channel import CRITICAL_L, check_l
from deltashell.api.data_structures import KacKrein, MatrixBargmann
from deltashell.api.errors import DomainError, MixedSigns, ShellConfigError
from deltashell.api.measure import AtomicMeasure
from deltashell.api.shell_config import ShellConfig
from deltashell.api.verdict import Verdict, fails, holds, inconclusive
from .inertia import inertia
from .negcount import zero_energy_kernel, kernel_matrix
from .special import green_kernel

NORM_SLACK = 1e-12
KAC_KREIN_SUFFICIENT = 0.25
KAC_KREIN_NECESSARY = 1.0


def _require_attractive(config: ShellConfig, name: str):
    if not config.is_attractive and config.size:
        raise MixedSigns(f"{name} needs every strength to be negative")


def bargmann_bound(measure: AtomicMeasure, l: float) -> float:
    """
    The Bargmann value of an attractive measure: sum w_k r_k / (2l + 1), or
    sum w_k r_k |log r_k| in the channel l = -1/2.

    For l > -1/2 the bound state count of any configuration whose attractive part is
    ``measure`` is strictly below this value.
    """
    l = check_l(l)
    if not measure.size:
        return 0.0
    positions, weights = measure.positions, measure.weights
    if l == CRITICAL_L:
        return float(numpy.sum(weights * positions * numpy.abs(numpy.log(positions))))
    return float(numpy.sum(weights * positions)) / (2.0 * l + 1.0)


def birman_schwinger_trace(measure: AtomicMeasure, l: float, lam: float = 0.0) -> float:
    """
    Trace of the Birman-Schwinger operator, sum w_k K_l(r_k, r_k; lambda). It equals the
    Bargmann value at lambda = 0 and decreases as lambda decreases.
    """
    l = check_l(l)
    if lam > 0:
        raise DomainError(f"Spectral parameter {lam} is positive")
    return float(
        sum(weight * green_kernel(l, lam, r, r) for r, weight in measure)
    )


def birman_schwinger_count(measure: AtomicMeasure, l: float, lam: float = 0.0) -> int:
    """
    The number of eigenvalues above 1 of w^(1/2) K_l(lambda) w^(1/2), which is the number
    of eigenvalues below lambda of the channel operator with strengths -w.

    :param measure: The attractive measure
    :param l: Channel index; l = -1/2 only for lambda < 0
    :param lam: Spectral parameter, not positive
    """
    l = check_l(l)
    if lam > 0:
        raise DomainError(f"Spectral parameter {lam} is positive")
    if l == CRITICAL_L and lam == 0:
        raise DomainError("The channel l = -1/2 has no Green kernel at lambda = 0")
    if not measure.size:
        return 0
    root = numpy.sqrt(measure.weights)
    matrix = root[:, None] * kernel_matrix(measure.positions, l, lam) * root[None, :]
    return inertia(matrix - numpy.eye(measure.size)).kappa_plus


def necessary_conditions(config: ShellConfig, l: float) -> Tuple[Verdict, Verdict]:
    """
    Necessary conditions on the diagonal of the kappa matrix for the two extreme counts.

    :return: Whether kappa_- = N is still possible, and whether kappa_- = 0 is still
        possible. Fails means the count is excluded.
    """
    l = check_l(l, allow_critical=False)
    critical = 2.0 * l + 1.0
    products = numpy.abs(config.strengths) * config.radii

    if not config.is_attractive:
        positive = numpy.flatnonzero(config.strengths > 0).tolist()
        max_count = fails(
            "necessary.max_count",
            f"shells {positive} are repulsive, kappa_- = N needs every strength negative",
        )
    else:
        weak = numpy.flatnonzero(products <= critical).tolist()
        if weak:
            max_count = fails(
                "necessary.max_count",
                f"|alpha_k| r_k <= {critical:g} at shells {weak}",
            )
        else:
            max_count = holds(
                "necessary.max_count", f"|alpha_k| r_k > {critical:g} at every shell"
            )

    if not config.is_attractive:
        positivity = inconclusive(
            "necessary.positivity",
            "the condition is only necessary for purely attractive configurations",
        )
    else:
        strong = numpy.flatnonzero(products > critical).tolist()
        if strong:
            positivity = fails(
                "necessary.positivity",
                f"|alpha_k| r_k > {critical:g} at shells {strong}, so kappa_- >= 1",
            )
        else:
            positivity = holds(
                "necessary.positivity", f"|alpha_k| r_k <= {critical:g} at every shell"
            )
    return max_count, positivity


def bargmann_check(config: ShellConfig, l: float) -> Verdict:
    """
    sum |alpha_k^-| r_k <= 2l + 1 certifies that the channel has no bound state.

    The count is strictly below the Bargmann value of the attractive part, so a value of
    at most 1 leaves only 0. Holds carries the count 0; the margin
    2l + 1 - sum |alpha_k^-| r_k is in the evidence.
    """
    l = check_l(l, allow_critical=False)
    critical = 2.0 * l + 1.0
    attractive = config.strengths < 0
    total = float(numpy.sum(-config.strengths[attractive] * config.radii[attractive]))
    margin = critical - total
    evidence = f"sum |alpha_k^-| r_k = {total:.12g}, 2l+1 = {critical:g}, margin {margin:.6g}"
    if margin >= 0:
        return holds("bargmann.no_binding", f"{evidence}, so kappa_- = 0", 0)
    return fails("bargmann.no_binding", evidence)


def full_count_condition(config: ShellConfig, l: float) -> Verdict:
    """
    Necessary condition for every shell to bind: sum |alpha_k| r_k > N (2l + 1).

    Holds means kappa_- = N is still possible and carries the margin
    sum |alpha_k| r_k - N (2l + 1); Fails means kappa_- < N.
    """
    l = check_l(l, allow_critical=False)
    size = config.size
    required = size * (2.0 * l + 1.0)
    if not config.is_attractive:
        positive = numpy.flatnonzero(config.strengths > 0).tolist()
        return fails(
            "necessary.full_count",
            f"shells {positive} are repulsive, kappa_- = N needs every strength negative",
        )
    total = float(numpy.sum(numpy.abs(config.strengths) * config.radii))
    margin = total - required
    evidence = f"sum |alpha_k| r_k = {total:.12g}, N(2l+1) = {required:g}, margin {margin:.6g}"
    if margin > 0:
        return holds("necessary.full_count", evidence, margin)
    return fails("necessary.full_count", f"{evidence}, so kappa_- < {size}")


def _disk_ratios(config: ShellConfig, l: float, weights: numpy.ndarray) -> numpy.ndarray:
    # S_k = sum_(j != k) (b_j / b_k) r_min^(l+1) r_max^-l / r_k
    kernel = zero_energy_kernel(config.radii, l)
    numpy.fill_diagonal(kernel, 0.0)
    return (weights[None, :] * kernel).sum(axis=1) / (weights * config.radii)


def gershgorin_classify(
    config: ShellConfig,
    l: float,
    weights: Optional[Sequence[float]] = None,
    omega_plus: Iterable[int] = (),
) -> Verdict:
    """
    Locate the eigenvalues of the weighted kappa matrix with Gershgorin disks.

    With S_k = sum_(j<k) (b_j/b_k)(r_j/r_k)^(l+1) + sum_(j>k) (b_j/b_k)(r_k/r_j)^l the
    count is |omega_plus| when

        (2l+1)/|alpha_k| <  r_k (1 - S_k)   for k in omega_plus,
        (2l+1)/|alpha_k| >= r_k (1 + S_k)   for every other k.

    :param config: A purely attractive configuration
    :param l: Channel index, above -1/2
    :param weights: Positive weights b_k, all 1 when not given
    :param omega_plus: Zero based indices of the shells expected to bind
    :raises MixedSigns: if a strength is positive
    """
    l = check_l(l, allow_critical=False)
    _require_attractive(config, "The Gershgorin classification")
    size = config.size
    weights = (
        numpy.ones(size) if weights is None else numpy.asarray(weights, dtype=numpy.float64)
    )
    if weights.shape != (size,) or numpy.any(weights <= 0):
        raise ShellConfigError(f"Gershgorin weights must be {size} positive numbers")
    omega_plus = sorted(set(int(k) for k in omega_plus))
    if any(k < 0 or k >= size for k in omega_plus):
        raise ShellConfigError(f"Shell indices {omega_plus} are outside 0..{size - 1}")
    if not size:
        return holds("gershgorin.classify", "no shells", 0)

    ratios = _disk_ratios(config, l, weights)
    lhs = (2.0 * l + 1.0) / numpy.abs(config.strengths)
    binding = numpy.zeros(size, dtype=bool)
    binding[omega_plus] = True
    ok = numpy.where(
        binding, lhs < config.radii * (1.0 - ratios), lhs >= config.radii * (1.0 + ratios)
    )
    if numpy.all(ok):
        return holds(
            "gershgorin.classify",
            f"disks of shells {omega_plus} lie in (0, inf), the rest in (-inf, 0]",
            len(omega_plus),
        )
    broken = numpy.flatnonzero(~ok).tolist()
    return fails(
        "gershgorin.classify",
        f"disk inequalities fail at shells {broken} (S = {numpy.round(ratios, 6).tolist()})",
    )


def gershgorin_positivity(config: ShellConfig, l: float) -> Verdict:
    """
    Sufficient test for kappa_- = 0: every unit weight disk of the kappa matrix lies in
    (-inf, 0], that is

        1/|alpha_k| >= (sum_(j<k) r_j^(l+1) r_k^-l + r_k sum_(j>=k) (r_k/r_j)^l) / (2l+1).
    """
    verdict = gershgorin_classify(config, l)
    if verdict.holds:
        return holds("gershgorin.positivity", "every disk lies in (-inf, 0]", 0)
    return fails("gershgorin.positivity", verdict.evidence)


def epsilon_weights(size: int, epsilon: float) -> numpy.ndarray:
    """Disk weights (1, eps(2-eps)/2, eps^2/(2(N-2)), ..., eps^2/(2(N-2)))."""
    weights = numpy.full(size, epsilon ** 2 / (2.0 * max(size - 2, 1)))
    weights[0] = 1.0
    if size > 1:
        weights[1] = epsilon * (2.0 - epsilon) / 2.0
    return weights


def epsilon_two_state_check(config: ShellConfig, l: float, epsilon: float) -> Verdict:
    """
    Certify exactly two bound states for a strongly separated attractive configuration
    whose two inner shells bind and whose outer shells are weak.

    The radii must satisfy

        (r_1/r_2)^(l+1) < eps^2 (1-eps)/2,
        (r_1/r_3)^(l+1) < eps^3/(6N),    (r_2/r_3)^(l+1) < eps^2/(6N),
        (r_k/r_(k+1))^l <= eps/(3N)      for 3 <= k <= N-1,

    and the strengths

        (2l+1)/|alpha_k| <  r_k (1 - eps)   for k = 1, 2,
        (2l+1)/|alpha_k| >= r_k (1 + eps)   for k >= 3.
    """
    l = check_l(l, allow_critical=False)
    _require_attractive(config, "The two state certificate")
    if not 0 < epsilon < 1:
        raise DomainError(f"epsilon={epsilon} is outside (0, 1)")
    size = config.size
    if size < 3:
        return fails("epsilon.two_state", f"needs at least three shells, got {size}")
    r = config.radii
    lhs = (2.0 * l + 1.0) / numpy.abs(config.strengths)
    broken = []
    if not (r[0] / r[1]) ** (l + 1.0) < epsilon ** 2 * (1.0 - epsilon) / 2.0:
        broken.append("(r_1/r_2)^(l+1)")
    if not (r[0] / r[2]) ** (l + 1.0) < epsilon ** 3 / (6.0 * size):
        broken.append("(r_1/r_3)^(l+1)")
    if not (r[1] / r[2]) ** (l + 1.0) < epsilon ** 2 / (6.0 * size):
        broken.append("(r_2/r_3)^(l+1)")
    for k in range(2, size - 1):
        if not (r[k] / r[k + 1]) ** l <= epsilon / (3.0 * size):
            broken.append(f"(r_{k + 1}/r_{k + 2})^l")
    for k in range(2):
        if not lhs[k] < r[k] * (1.0 - epsilon):
            broken.append(f"strength of shell {k}")
    for k in range(2, size):
        if not lhs[k] >= r[k] * (1.0 + epsilon):
            broken.append(f"strength of shell {k}")
    if broken:
        return fails("epsilon.two_state", f"eps={epsilon:g} fails at: {', '.join(broken)}")

    disks = gershgorin_classify(config, l, epsilon_weights(size, epsilon), (0, 1))
    log.debug(f"Two state certificate at eps={epsilon}: weighted disks {disks.status}")
    return holds(
        "epsilon.two_state",
        f"separation and strength conditions hold for eps={epsilon:g}; "
        f"weighted disks: {disks.status}",
        2,
    )


def matrix_bargmann(config: ShellConfig, l: float) -> MatrixBargmann:
    """
    The norm certificate for an attractive configuration. The matrix

        M_jk = r_min^(l+1) r_max^-l sqrt(|alpha_j| |alpha_k|)

    has norm at most 2l+1 exactly when there is no bound state. The Bargmann value
    trace(M) / (2l+1) and the Gershgorin positivity test are reported with it.
    """
    l = check_l(l, allow_critical=False)
    _require_attractive(config, "The matrix Bargmann certificate")
    critical = 2.0 * l + 1.0
    bound = bargmann_bound(config.negative_measure(), l)
    if not config.size:
        norm = 0.0
    else:
        root = numpy.sqrt(numpy.abs(config.strengths))
        matrix = root[:, None] * zero_energy_kernel(config.radii, l) * root[None, :]
        norm = float(numpy.linalg.eigvalsh(matrix)[-1])
    if norm <= critical * (1.0 + NORM_SLACK):
        norm_check = holds(
            "matrix_bargmann.norm", f"||M|| = {norm:.12g} <= 2l+1 = {critical:g}", 0
        )
    else:
        norm_check = fails(
            "matrix_bargmann.norm", f"||M|| = {norm:.12g} > 2l+1 = {critical:g}"
        )
    return MatrixBargmann(norm_check, bound, norm, gershgorin_positivity(config, l))


def kac_krein_check(measure: AtomicMeasure) -> KacKrein:
    """
    The l = 0 tests on S = sup_r r mu((r, inf)) = max_k r_k sum_(j>=k) w_j:
    S <= 1/4 excludes bound states, S > 1 forces at least one.
    """
    if measure.size:
        tails = numpy.cumsum(measure.weights[::-1])[::-1]
        sup_value = float(numpy.max(measure.positions * tails))
    else:
        sup_value = 0.0
    text = f"sup r mu((r, inf)) = {sup_value:.12g}"
    if sup_value <= KAC_KREIN_SUFFICIENT:
        sufficient = holds("kac_krein.sufficient", f"{text} <= 1/4", 0)
        necessary = holds("kac_krein.necessary", f"{text} <= 1")
    else:
        sufficient = inconclusive("kac_krein.sufficient", f"{text} > 1/4")
        if sup_value > KAC_KREIN_NECESSARY:
            necessary = fails(
                "kac_krein.necessary", f"{text} > 1, so kappa_- >= 1"
            )
        else:
            necessary = inconclusive("kac_krein.necessary", f"{text} in (1/4, 1]")
    return KacKrein(sufficient, necessary, sup_value)
