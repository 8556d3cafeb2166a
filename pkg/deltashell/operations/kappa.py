from deltashell.api.errors import DegenerateSignature
from deltashell.api.operation import Operation, register
from deltashell.api.report import Report, collect_warnings
from deltashell.spectral.negcount import bound_state_report, kappa_matrix, two_shell_count
from deltashell.spectral.oracle import oscillation_count


@register("kappa")
class Kappa(Operation):
    """Bound states of one channel from the inertia of the kappa matrix."""

    def run_operation(self) -> Report:
        problem = self.problem
        problem.require_finite()
        channel = problem.require_channel()
        options = problem.options
        config = problem.config
        report = Report("kappa", problem.to_dict())
        with collect_warnings(report):
            result = bound_state_report(config, channel, options.tolerance)
            if options.strict and result.degenerate:
                tolerance = 0.0 if result.inertia is None else result.inertia.tolerance
                raise DegenerateSignature(
                    min(result.candidates), max(result.candidates), tolerance
                )
            report.add("l", channel.l)
            report.add("kappa_minus", result.kappa_minus)
            report.add("kappa_plus_alpha", result.kappa_plus_alpha)
            report.add("method", result.method)
            if result.inertia is not None:
                report.add("inertia", result.inertia.to_dict())
            if result.degenerate:
                report.add(
                    "candidates",
                    list(result.candidates),
                    "zero eigenvalue: the kappa matrix is singular, a threshold resonance",
                )
            if config.size == 2 and not channel.is_critical:
                matrix = kappa_matrix(config, channel.l).entries
                report.add(
                    "determinant",
                    float(matrix[0, 0] * matrix[1, 1] - matrix[0, 1] ** 2),
                )
                report.add("two_shell_case", two_shell_count(config, channel.l)[1])

            if options.oracle:
                oscillation = oscillation_count(config, channel.l)
                report.add("oscillation_count", oscillation)
                if oscillation not in result.candidates:
                    report.error(
                        f"oscillation count {oscillation} disagrees with {result.kappa_minus}"
                    )
        return report
