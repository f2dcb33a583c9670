"""# stratagem.commands.report.main

Report process: read run records, aggregate and write the CSV tables.
"""

__all__ = ["report_entry_point"]

from pathlib                                import Path
from typing                                 import List, Optional, override

from stratagem.benchmark                    import BenchmarkError, compute_aggregates, emit_reports, records_from_jsonl, RunRecord
from stratagem.commands.__base__            import CommandProcess
from stratagem.commands.report.__args__     import register_report_parser
from stratagem.registration                 import register_command

class ReportProcess(CommandProcess):
    """# Report Process."""

    def __init__(self,
        runs:   str,
        out:    Optional[str] = None,
        **kwargs
    ):
        """# Configure Report Process.

        ## Args:
            * runs  (str):  Run records file.
            * out   (str):  Report directory. Defaults to "reports" next to the runs file.
        """
        # Initialize process.
        super(ReportProcess, self).__init__(name = "report-process")

        # Define properties.
        self._runs_:    Path =  Path(runs)
        self._out_:     Path =  Path(out) if out else self._runs_.parent / "reports"

    # METHODS ======================================================================================

    @override
    def execute(self) -> int:
        """# Aggregate and Write."""
        # Records.
        records:    List[RunRecord] =   records_from_jsonl(self._runs_)

        if not records: raise BenchmarkError(f"{self._runs_}: no run records")

        # Tables.
        for path in emit_reports(compute_aggregates(records), self._out_): print(path)

        # Reported.
        return 0


@register_command(
    name =          "report",
    parser =        register_report_parser,
    section =       "Benchmark",
    description =   "Write CSV reports from run records"
)
def report_entry_point(**kwargs) -> int:
    """# Execute Report Process.

    ## Returns:
        * int:  0 once the reports are written, 1 on unreadable records.
    """
    return ReportProcess(**kwargs).run()
