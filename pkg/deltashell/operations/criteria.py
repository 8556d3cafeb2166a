from deltashell.api.errors import InsufficientShells
from deltashell.api.operation import Operation, register
from deltashell.api.report import Report, collect_warnings
from deltashell.api.tail_model import SampledTail
from deltashell.spectral.jacobi import truncation_inertia
from deltashell.spectral.multidim import multidim_verdicts

DEFAULT_DIMENSION = 3
MAX_TRUNCATION = 200


@register("criteria")
class Criteria(Operation):
    """
    Self-adjointness, semiboundedness, discreteness and continuous spectrum verdicts for
    the channel operator of an infinite family and for the operator in n dimensions.
    """

    def run_operation(self) -> Report:
        problem = self.problem
        n = problem.space
        if n is None:
            if problem.channel is not None and problem.channel.n is not None:
                n = problem.channel.n
            else:
                n = DEFAULT_DIMENSION
        report = Report("criteria", problem.to_dict())
        with collect_warnings(report):
            verdicts = multidim_verdicts(problem.config, problem.tail, n)
            report.add("n", n)
            report.add("family", problem.tail.kind)
            for verdict in verdicts.verdicts():
                report.add_verdict(verdict)
            report.add("n_pm", verdicts.n_pm)
            report.add("essential_spectrum", verdicts.essential_spectrum)
            if isinstance(problem.tail, SampledTail):
                size = min(int(problem.tail.horizon(problem.config.size)) - 1, MAX_TRUNCATION)
                try:
                    evidence = truncation_inertia(problem.config, problem.tail, size)
                except (InsufficientShells, ValueError):
                    report.warn("too few sampled shells for a Jacobi truncation")
                else:
                    report.add(
                        "truncation_inertia",
                        evidence.to_dict(),
                        f"{size}x{size} Jacobi truncation",
                    )
        return report
