from concurrent.futures import ThreadPoolExecutor
import itertools
from typing import Optional, Sequence

from deltashell import log
from deltashell.api.errors import ProblemFileError, ShellConfigError
from deltashell.api.operation import Operation, register
from deltashell.api.problem import SweepAxis
from deltashell.api.report import Report, collect_warnings
from deltashell.api.shell_config import normalize_config
from deltashell.spectral.negcount import count_bound_states


@register("sweep")
class Sweep(Operation):
    """
    Bound state counts over a grid of one or two shell parameters, one CSV row per
    cell in grid order.
    """

    def run_operation(self) -> Report:
        problem = self.problem
        problem.require_finite()
        channel = problem.require_channel()
        options = problem.options
        axes = options.sweep
        if not axes:
            raise ProblemFileError("A sweep needs at least one axis", "options.sweep")
        for position, axis in enumerate(axes):
            if axis.index >= problem.config.size:
                raise ProblemFileError(
                    f"There is no shell {axis.index}", f"options.sweep[{position}].parameter"
                )
        cells = list(itertools.product(*(axis.values for axis in axes)))
        report = Report("sweep", problem.to_dict())
        with collect_warnings(report):

            def count(cell: Sequence[float]) -> Optional[int]:
                try:
                    config = self._cell_config(axes, cell)
                    return count_bound_states(config, channel, options.tolerance)
                except ShellConfigError as e:
                    log.warning(f"Sweep cell {tuple(cell)} skipped: {e}")
                    return None

            with ThreadPoolExecutor() as executor:
                counts = list(executor.map(count, cells))
            # cells finish in any order
            report.warnings.sort()
            report.add("cells", len(cells))
            report.set_table(
                [axis.label for axis in axes] + ["kappa_minus"],
                [list(cell) + ["" if c is None else c] for cell, c in zip(cells, counts)],
            )
        return report

    def _cell_config(self, axes: Sequence[SweepAxis], cell: Sequence[float]):
        shells = [list(shell) for shell in self.problem.config]
        for axis, value in zip(axes, cell):
            shells[axis.index][0 if axis.parameter == "radius" else 1] = value
        return normalize_config(shells)
