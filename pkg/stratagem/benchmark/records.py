"""# stratagem.benchmark.records

Run records and their JSON Lines persistence (`runs.jsonl`, one record per line, append-only).
"""

__all__ =   [
                "append_records",
                "GROUND_FAILED",
                "records_from_jsonl",
                "RunRecord"
            ]

from dataclasses                        import asdict, dataclass, fields
from json                               import dumps, JSONDecodeError, loads
from pathlib                            import Path
from typing                             import Iterable, List, Union

from stratagem.benchmark.exceptions     import RecordFormatError
from stratagem.search                   import SearchStatus

# Status of a cell whose problem did not parse or ground.
GROUND_FAILED:  str =   "ground-failed"

@dataclass(frozen = True)
class RunRecord():
    r"""# :class:`RunRecord`

    ## Properties:
    * :param:`domain`               (str):      Domain (suite) name.
    * :param:`problem`              (str):      Problem file stem.
    * :param:`system`               (str):      Heuristic or baseline label.
    * :param:`algorithm`            (str):      "astar", "gbfs" or "wastar".
    * :param:`status`               (str):      Search status value, or "ground-failed".
    * :param:`expanded`             (int):      Expanded nodes.
    * :param:`plan_length`          (int):      Plan length (0 unless solved).
    * :param:`wall_time`            (float):    Seconds.
    * :param:`memory_enforcement`   (str):      "os" (resource limit), "advisory" (search
                                                counter) or "none".
    """
    domain:             str
    problem:            str
    system:             str
    algorithm:          str
    status:             str
    expanded:           int =   0
    plan_length:        int =   0
    wall_time:          float = 0.0
    memory_enforcement: str =   "none"

    @property
    def solved(self) -> bool:
        """# Cell Solved?"""
        return self.status == SearchStatus.SOLVED.value

    @property
    def key(self) -> tuple:
        """# Matrix Cell Key (system, algorithm, domain, problem)."""
        return self.system, self.algorithm, self.domain, self.problem

    def to_json(self) -> str:
        """# One JSON Line."""
        return dumps(asdict(self), sort_keys = True)


def append_records(
    path:       Union[str, Path],
    records:    Iterable[RunRecord]
) -> int:
    """# Append Records.

    ## Args:
        * path      (str | Path):           JSON Lines file, created if missing.
        * records   (Iterable[RunRecord]):  Records appended.

    ## Returns:
        * int:  Number of records appended.
    """
    # Ensure parent exists.
    path:   Path =  Path(path)
    path.parent.mkdir(parents = True, exist_ok = True)

    # Append lines.
    count:  int =   0

    with path.open("a", encoding = "utf-8") as file:

        for record in records:
            file.write(record.to_json() + "\n")
            count += 1

    # Provide count.
    return count

def records_from_jsonl(
    path:   Union[str, Path]
) -> List[RunRecord]:
    """# Read Records.

    ## Args:
        * path  (str | Path):   JSON Lines file; blank lines are skipped.

    ## Raises:
        * RecordFormatError:    If a line is not a valid record.

    ## Returns:
        * List[RunRecord]:  Records in file order.
    """
    # Known fields.
    names:      set =               {field.name for field in fields(RunRecord)}
    records:    List[RunRecord] =   []

    # Read line by line.
    for number, line in enumerate(Path(path).read_text(encoding = "utf-8").splitlines(), start = 1):

        # Skip blanks.
        if not line.strip(): continue

        try:# Decode.
            document:   dict =  loads(line)

        # Relay decoding failures.
        except JSONDecodeError as e: raise RecordFormatError(str(path), number, f"invalid JSON ({e.msg})") from e

        # Check fields.
        if not isinstance(document, dict) or not {"domain", "problem", "system", "algorithm", "status"} <= set(document):
            raise RecordFormatError(str(path), number, "record misses domain, problem, system, algorithm or status")

        # Collect record.
        records.append(RunRecord(**{key: value for key, value in document.items() if key in names}))

    # Provide records.
    return records
