"""# stratagem.benchmark

Benchmark harness: suite manifests, the (system x algorithm x problem) matrix, run records,
aggregates and CSV reports. The bundled mini-suites live under `suites/`.
"""

__all__ =   [
                # Suites.
                "load_manifest",
                "MANIFEST_NAME",
                "SUITES_PATH",
                "SuiteManifest",

                # Records.
                "append_records",
                "GROUND_FAILED",
                "records_from_jsonl",
                "RunRecord",

                # Matrix.
                "Cell",
                "Limits",
                "matrix_cells",
                "run_cell",
                "run_matrix",
                "system_label",

                # Aggregates & reports.
                "Aggregates",
                "algorithm_coverage",
                "cactus",
                "compute_aggregates",
                "emit_reports",
                "HeadToHead",
                "head_to_head",
                "lower_median",
                "plan_length_intersection",
                "scatter",
                "virtual_best",
                "VirtualBest",
                "VirtualBestEntry",

                # Errors.
                "BenchmarkError",
                "ManifestError",
                "RecordFormatError"
            ]

from pathlib                            import Path

from stratagem.benchmark.aggregates     import *
from stratagem.benchmark.exceptions     import *
from stratagem.benchmark.manifest       import load_manifest, MANIFEST_NAME, SuiteManifest
from stratagem.benchmark.matrix         import Cell, Limits, matrix_cells, run_cell, run_matrix, system_label
from stratagem.benchmark.records        import append_records, GROUND_FAILED, records_from_jsonl, RunRecord
from stratagem.benchmark.reports        import emit_reports

# Bundled mini-suites.
SUITES_PATH:    Path =  Path(__file__).parent / "suites"
