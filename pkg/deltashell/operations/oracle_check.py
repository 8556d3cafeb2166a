from deltashell.api.operation import Operation, register
from deltashell.api.report import Report, collect_warnings
from deltashell.spectral.negcount import bound_state_report
from deltashell.spectral.oracle import fd_converged_count, oscillation_report


@register("oracle-check")
class OracleCheck(Operation):
    """
    Compare the kappa matrix count with the oscillation count and, when the oracle
    option is set, with the converged finite difference count.
    """

    def run_operation(self) -> Report:
        problem = self.problem
        problem.require_finite()
        channel = problem.require_channel()
        options = problem.options
        config = problem.config
        report = Report("oracle-check", problem.to_dict())
        with collect_warnings(report):
            exact = bound_state_report(config, channel, options.tolerance)
            oscillation = oscillation_report(config, channel.l)
            report.add("kappa_minus", exact.kappa_minus, exact.method)
            report.add("oscillation_count", oscillation.count)
            counts = {exact.kappa_minus, oscillation.count}
            agree = bool(set(exact.candidates) & set(oscillation.candidates))
            if options.oracle:
                fd = fd_converged_count(config, channel.l, options.length, options.mesh)
                report.add("fd_count", fd)
                counts.add(fd)
                agree = agree and fd in exact.candidates
            report.add("agree", agree)
            if not agree:
                report.error(f"bound state counts disagree: {sorted(counts)}")
        return report
