from deltashell.api.channel import CRITICAL_L
from deltashell.api.operation import Operation, register
from deltashell.api.report import Report, collect_warnings
from deltashell.spectral.certificates import (
    bargmann_bound,
    bargmann_check,
    birman_schwinger_trace,
    epsilon_two_state_check,
    full_count_condition,
    gershgorin_classify,
    kac_krein_check,
    matrix_bargmann,
    necessary_conditions,
)
from deltashell.spectral.negcount import count_bound_states, negative_part_bound


@register("bounds")
class Bounds(Operation):
    """
    Every bound and certificate that applies to the problem, next to the exact count.
    A certificate contradicting the exact count is reported as an error.
    """

    def run_operation(self) -> Report:
        problem = self.problem
        problem.require_finite()
        channel = problem.require_channel()
        options = problem.options
        config = problem.config
        l = channel.l
        report = Report("bounds", problem.to_dict())
        with collect_warnings(report):
            exact = count_bound_states(config, channel, options.tolerance)
            measure = config.negative_measure()
            if l == CRITICAL_L:
                report.add(
                    "bargmann",
                    bargmann_bound(measure, l),
                    "logarithmic value, not a bound in this channel",
                )
            else:
                report.add("bargmann", bargmann_bound(measure, l))
            report.add("kappa_minus", exact)
            if config.kappa_minus_alpha == 0:
                report.add("certified_kappa_minus", 0, "no attractive shell")
                return report

            if l != CRITICAL_L:
                report.add("negative_part_bound", negative_part_bound(config, l))
                report.add("birman_schwinger_trace", birman_schwinger_trace(measure, l))
                report.add_verdict(bargmann_check(config, l))
                for verdict in necessary_conditions(config, l):
                    report.add_verdict(verdict)
                report.add_verdict(full_count_condition(config, l))
                if config.is_attractive:
                    self._attractive_certificates(report, l)
                else:
                    report.warn(
                        "norm and Gershgorin certificates need every strength negative"
                    )
            if l == 0:
                kac_krein = kac_krein_check(measure)
                report.add("kac_krein_sup", kac_krein.sup_value)
                report.add_verdict(kac_krein.sufficient)
                report.add_verdict(kac_krein.necessary)

            certified = sorted(
                {
                    verdict.value
                    for verdict in report.verdicts
                    if verdict.holds and isinstance(verdict.value, int)
                }
            )
            if certified:
                report.add("certified_kappa_minus", certified[0])
            for value in certified:
                if value != exact:
                    report.error(f"a certificate implies {value} bound states, not {exact}")
            for verdict in report.verdicts:
                if verdict.criterion_id == "necessary.positivity" and verdict.fails and exact == 0:
                    report.error("positivity was excluded but no bound state was found")
                if (
                    verdict.criterion_id == "necessary.full_count"
                    and verdict.fails
                    and exact == config.size
                ):
                    report.error("every shell binds although the full count was excluded")
            if l != CRITICAL_L and not exact < report.result("bargmann"):
                report.error(f"{exact} bound states reach the Bargmann value")
        return report

    def _attractive_certificates(self, report: Report, l: float):
        config = self.problem.config
        options = self.problem.options
        norm = matrix_bargmann(config, l)
        report.add("matrix_norm", norm.norm)
        report.add_verdict(norm.norm_check)
        report.add_verdict(norm.gershgorin)
        if options.weights is not None or options.omega_plus:
            report.add_verdict(
                gershgorin_classify(config, l, options.weights, options.omega_plus)
            )
        if options.epsilon is not None:
            report.add_verdict(epsilon_two_state_check(config, l, options.epsilon))
