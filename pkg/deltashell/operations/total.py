from deltashell.api.operation import Operation, register
from deltashell.api.report import Report, collect_warnings
from deltashell.spectral.multidim import aggregate_bounds, total_bound_states

LEDGER_HEADER = ("l", "l_eff", "mult", "kappa")


@register("total")
class Total(Operation):
    """The bound states of the n dimensional operator summed over angular channels."""

    def run_operation(self) -> Report:
        problem = self.problem
        problem.require_finite()
        n = problem.require_space()
        options = problem.options
        report = Report("total", problem.to_dict())
        with collect_warnings(report):
            total, ledger = total_bound_states(
                problem.config, n, options.lmax, options.tolerance
            )
            report.add("total", total)
            report.add("truncation_l", ledger.truncation_l, ledger.truncation_reason)
            report.set_table(
                LEDGER_HEADER,
                [
                    (entry.ell, entry.l_eff, entry.multiplicity, entry.kappa)
                    for entry in ledger.entries
                ],
            )
            if n in (2, 3):
                bound = aggregate_bounds(problem.config, n)
                report.add("i_zero", bound.i_zero)
                if bound.i_log is not None:
                    report.add("i_log", bound.i_log)
                if n == 3:
                    report.add("aggregate_upper", bound.upper, bound.formula_id)
                    report.add("aggregate_closed_form", bound.closed_form)
                    if total > bound.upper:
                        report.error(f"total {total} exceeds the aggregate bound {bound.upper}")
                else:
                    note = "logarithmic channel value, not a bound"
                    report.add("aggregate_upper", bound.upper, note)
                    report.add("aggregate_closed_form", bound.closed_form, note)
        return report
