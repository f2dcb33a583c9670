"""# stratagem.pipeline.candidates

Candidate records: extraction of the program from a raw response, static classification, status
accounting and the on-disk candidate store.

A store directory holds, per ordinal, `cand_<NN>.hel` (the extracted program, or the raw response
when nothing could be extracted) and `cand_<NN>.meta.json` (the record), plus `selection.json`
once selection ran.
"""

__all__ =   [
                "CandidateId",
                "CandidateRecord",
                "CandidateStatus",
                "CandidateStore",
                "classify_response",
                "extract_response",
                "status_counts"
            ]

from dataclasses                    import dataclass, replace
from enum                           import Enum
from json                           import dumps, JSONDecodeError, loads
from logging                        import Logger
from pathlib                        import Path
from re                             import compile as compile_pattern, DOTALL, MULTILINE, Pattern
from threading                      import Lock
from typing                         import Any, Dict, Iterable, List, Optional, Tuple, Union

from stratagem.hel                  import hel_parse, HelProgram, HelStaticError, HelSyntaxError
from stratagem.pipeline.exceptions  import CandidateStoreError
from stratagem.pipeline.provider    import ProviderResponse
from stratagem.utilities            import get_child

# Fenced program blocks and the name line of a response.
BLOCK:  Pattern =   compile_pattern(r"```hel[ \t]*\r?\n(.*?)```", DOTALL)
NAME:   Pattern =   compile_pattern(r"^[ \t]*Name:[ \t]*(.+?)[ \t]*$", MULTILINE)

class CandidateStatus(str, Enum):
    """# Candidate Status.

    `parsed` is transient: every parsed candidate ends as `ok`, `runtime-failed` or `timed-out`
    once evaluated.
    """

    PARSED =            "parsed"
    PARSE_FAILED =      "parse-failed"
    STATIC_FAILED =     "static-failed"
    RUNTIME_FAILED =    "runtime-failed"
    TIMED_OUT =         "timed-out"
    OK =                "ok"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen = True, order = True)
class CandidateId():
    r"""# :class:`CandidateId`

    ## Properties:
    * :param:`model`    (str):  Model that produced the candidate.
    * :param:`domain`   (str):  Domain it was generated for.
    * :param:`ordinal`  (int):  Request ordinal, 0..N-1.
    """
    model:      str
    domain:     str
    ordinal:    int

    @property
    def stem(self) -> str:
        """# Store File Stem (`cand_<NN>`)."""
        return f"cand_{self.ordinal:02d}"

    def __str__(self) -> str:
        return f"{self.model}/{self.domain}/{self.ordinal:02d}"


@dataclass(frozen = True)
class CandidateRecord():
    r"""# :class:`CandidateRecord`

    ## Properties:
    * :param:`id`                   (CandidateId):      Candidate id.
    * :param:`status`               (CandidateStatus):  Current status.
    * :param:`raw_response`         (str):              Response body verbatim, None after a
                                                        transport failure.
    * :param:`name`                 (str):              Name line of the response, if any.
    * :param:`program_text`         (str):              Extracted program, if any.
    * :param:`program`              (HelProgram):       Checked program, for parsed candidates.
    * :param:`diagnostic`           (str):              Failure diagnostic, if any.
    * :param:`training_expanded`    (int):              Expansions on the training problem.
    * :param:`training_plan_length` (int):              Plan length on the training problem.
    * :param:`training_time`        (float):            Seconds searched on the training problem.
    * :param:`requested`            (str):              Request timestamp.
    * :param:`received`             (str):              Response timestamp.
    """
    id:                     CandidateId
    status:                 CandidateStatus
    raw_response:           Optional[str] =         None
    name:                   Optional[str] =         None
    program_text:           Optional[str] =         None
    program:                Optional[HelProgram] =  None
    diagnostic:             Optional[str] =         None
    training_expanded:      Optional[int] =         None
    training_plan_length:   Optional[int] =         None
    training_time:          Optional[float] =       None
    requested:              Optional[str] =         None
    received:               Optional[str] =         None

    def __post_init__(self) -> None:
        """# Check Record Consistency."""
        assert self.status is not CandidateStatus.OK or self.training_expanded is not None, \
            f"{self.id}: ok candidates carry their training expansions"
        assert self.status is not CandidateStatus.PARSED or self.program is not None, \
            f"{self.id}: parsed candidates carry their program"

    # METHODS ======================================================================================

    def to_dict(self,
        timing: bool =  True
    ) -> Dict[str, Any]:
        """# Serializable Form.

        ## Args:
            * timing    (bool): Include wall time and timestamps. Defaults to True.

        ## Returns:
            * Dict[str, Any]:   JSON-ready record (the program itself is stored separately).
        """
        # Deterministic fields.
        document:   Dict[str, Any] =    {
                                            "model":                self.id.model,
                                            "domain":               self.id.domain,
                                            "ordinal":              self.id.ordinal,
                                            "status":               self.status.value,
                                            "name":                 self.name,
                                            "diagnostic":           self.diagnostic,
                                            "training_expanded":    self.training_expanded,
                                            "training_plan_length": self.training_plan_length,
                                        }

        # Run-dependent fields.
        if timing: document.update(training_time = self.training_time, requested = self.requested, received = self.received)

        # Provide document.
        return document

    @classmethod
    def from_dict(cls,
        document:       Dict[str, Any],
        raw_response:   Optional[str] =         None,
        program_text:   Optional[str] =         None,
        program:        Optional[HelProgram] =  None
    ) -> "CandidateRecord":
        """# Record from Serialized Form."""
        return  cls(
                    id =                    CandidateId(document["model"], document["domain"], int(document["ordinal"])),
                    status =                CandidateStatus(document["status"]),
                    raw_response =          raw_response,
                    name =                  document.get("name"),
                    program_text =          program_text,
                    program =               program,
                    diagnostic =            document.get("diagnostic"),
                    training_expanded =     document.get("training_expanded"),
                    training_plan_length =  document.get("training_plan_length"),
                    training_time =         document.get("training_time"),
                    requested =             document.get("requested"),
                    received =              document.get("received"),
                )


class CandidateStore():
    """# Candidate Store.

    Directory of candidate programs and records. Writes are serialized, so the store can be shared
    by concurrent producers.
    """

    def __init__(self,
        directory:  Union[str, Path]
    ):
        """# Instantiate Candidate Store.

        ## Args:
            * directory (str | Path):   Store directory, created on first write.
        """
        # Initialize logger.
        self.__logger__:    Logger =    get_child("candidate-store")

        # Define properties.
        self._directory_:   Path =      Path(directory)
        self._lock_:        Lock =      Lock()

    # PROPERTIES ===================================================================================

    @property
    def directory(self) -> Path:
        """# Store Directory."""
        return self._directory_

    # METHODS ======================================================================================

    def write(self,
        record: CandidateRecord
    ) -> None:
        """# Write Candidate Program and Record.

        ## Args:
            * record    (CandidateRecord):  Record written (replaces an earlier one of the same
                                            ordinal).
        """
        with self._lock_:

            # Ensure directory.
            self._directory_.mkdir(parents = True, exist_ok = True)

            # Program, or whatever the response held.
            (self._directory_ / f"{record.id.stem}.hel").write_text(
                record.program_text if record.program_text is not None else (record.raw_response or ""),
                encoding = "utf-8"
            )

            # Record.
            (self._directory_ / f"{record.id.stem}.meta.json").write_text(
                dumps({**record.to_dict(), "raw_response": record.raw_response, "extracted": record.program_text is not None},
                      indent = 2, sort_keys = True) + "\n",
                encoding = "utf-8"
            )

        # Debug write.
        self.__logger__.debug(f"Stored {record.id} ({record.status})")

    def write_json(self,
        name:       str,
        document:   Dict[str, Any]
    ) -> Path:
        """# Write an Auxiliary JSON Document (e.g. `selection.json`).

        ## Returns:
            * Path: File written.
        """
        with self._lock_:

            # Ensure directory.
            self._directory_.mkdir(parents = True, exist_ok = True)

            # Write sorted, indented document.
            path:   Path =  self._directory_ / name
            path.write_text(dumps(document, indent = 2, sort_keys = True) + "\n", encoding = "utf-8")

        # Provide path.
        return path

    def records(self) -> List[CandidateRecord]:
        """# Read Every Record, in Ordinal Order.

        Programs of candidates that passed the static check are parsed again from their `.hel`
        file.

        ## Raises:
            * CandidateStoreError:  If a record is unreadable or its program no longer checks.
        """
        return [self._read_(path) for path in sorted(self._directory_.glob("cand_*.meta.json"))]

    # HELPERS ======================================================================================

    def _read_(self, path: Path) -> CandidateRecord:
        """# Read One Record."""
        try:# Read record.
            document:   Dict[str, Any] =    loads(path.read_text(encoding = "utf-8"))

        # Relay decoding failures.
        except (OSError, JSONDecodeError) as e: raise CandidateStoreError(str(path), f"unreadable record ({e})") from e

        # Locate program.
        program_path:   Path =          path.with_name(path.name.replace(".meta.json", ".hel"))
        program_text:   Optional[str] = program_path.read_text(encoding = "utf-8") \
                                        if document.get("extracted") and program_path.is_file() else None
        program:        Optional[HelProgram] =  None

        # Statically valid programs parse again.
        if program_text is not None and document["status"] not in (CandidateStatus.PARSE_FAILED, CandidateStatus.STATIC_FAILED):

            try:                                            program = hel_parse(program_text, source = program_path.name)
            except (HelSyntaxError, HelStaticError) as e:   raise CandidateStoreError(str(program_path), e.diagnostic()) from e

        try:# Provide record.
            return CandidateRecord.from_dict(document, document.get("raw_response"), program_text, program)

        # Missing fields.
        except (KeyError, ValueError, AssertionError) as e: raise CandidateStoreError(str(path), f"inconsistent record ({e})") from e


def extract_response(
    text:   str
) -> Tuple[Optional[str], List[str]]:
    """# Extract Name Line and Program Blocks.

    ## Args:
        * text  (str):  Raw response.

    ## Returns:
        * Tuple[Optional[str], List[str]]:  Name from the first `Name:` line, and the bodies of
                                            every fenced `hel` block.
    """
    # Name line.
    name:   Optional[str] = (match := NAME.search(text)) and match.group(1)

    # Provide name and blocks.
    return name, BLOCK.findall(text)

def classify_response(
    response:   ProviderResponse,
    model:      str,
    domain:     str
) -> CandidateRecord:
    """# Classify Raw Response.

    Transport failures and responses without exactly one program block or with a syntax error are
    `parse-failed`; programs failing a static check are `static-failed`; the rest are `parsed`.

    ## Args:
        * response  (ProviderResponse): Raw response.
        * model     (str):              Model name.
        * domain    (str):              Domain name.

    ## Returns:
        * CandidateRecord:  Classified record.
    """
    # Base record.
    record: CandidateRecord =   CandidateRecord(
                                    id =            CandidateId(model, domain, response.ordinal),
                                    status =        CandidateStatus.PARSE_FAILED,
                                    raw_response =  response.text,
                                    requested =     response.requested,
                                    received =      response.received
                                )

    # Transport failure.
    if response.failed: return replace(record, diagnostic = response.error)

    # Extract program.
    name, blocks =              extract_response(response.text)
    record =                    replace(record, name = name)

    if len(blocks) != 1:
        return replace(record, diagnostic = f"expected exactly one fenced hel block, found {len(blocks)}")

    # Check program.
    record =                    replace(record, program_text = blocks[0])

    try:                        program: HelProgram = hel_parse(blocks[0], source = f"{record.id.stem}.hel")
    except HelSyntaxError as e: return replace(record, diagnostic = e.diagnostic())
    except HelStaticError as e: return replace(record, status = CandidateStatus.STATIC_FAILED, diagnostic = e.diagnostic())

    # Parsed.
    return replace(record, status = CandidateStatus.PARSED, program = program)

def status_counts(
    records:    Iterable[CandidateRecord]
) -> Dict[str, int]:
    """# Count Records per Status.

    ## Returns:
        * Dict[str, int]:   Count of every status, zeros included; the counts sum to the number of
                            records.
    """
    # Zero every status.
    counts: Dict[str, int] =    {status.value: 0 for status in CandidateStatus}

    # Tally.
    for record in records: counts[record.status.value] += 1

    # Provide counts.
    return counts
