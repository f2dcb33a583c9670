"""# stratagem.commands.generate.main

Generate process: write the prompt, request candidates, classify and store them.
"""

__all__ = ["generate_entry_point"]

from pathlib                                import Path
from typing                                 import List, Optional, override

from stratagem.benchmark                    import SuiteManifest
from stratagem.commands.__base__            import CommandProcess, resolve_suite, suite_prompt_spec
from stratagem.commands.generate.__args__   import register_generate_parser
from stratagem.pipeline                     import *
from stratagem.registration                 import register_command
from stratagem.utilities                    import default_output

class GenerateProcess(CommandProcess):
    """# Generate Process."""

    def __init__(self,
        suite:          str,
        provider:       str,
        n:              int =           20,
        out:            Optional[str] = None,
        worked_example: str =           "goal_distance",
        **kwargs
    ):
        """# Configure Generate Process.

        ## Args:
            * suite             (str):  Suite directory, manifest or bundled name.
            * provider          (str):  Provider configuration file or "mock:<directory>".
            * n                 (int):  Candidates requested. Defaults to 20.
            * out               (str):  Store directory. Defaults to a timestamped directory under
                                        "output/".
            * worked_example    (str):  Worked example program. Defaults to "goal_distance".
        """
        # Initialize process.
        super(GenerateProcess, self).__init__(name = "generate-process")

        # Define properties.
        self._suite_:       str =           suite
        self._provider_:    str =           provider
        self._n_:           int =           n
        self._example_:     str =           worked_example
        self._out_:         Optional[str] = out

    # METHODS ======================================================================================

    @override
    def execute(self) -> int:
        """# Prompt, Request, Classify, Store."""
        # Candidate count.
        if self._n_ < 1: raise PipelineError("--n must request at least one candidate")

        # Suite and provider.
        manifest:   SuiteManifest =         resolve_suite(self._suite_)
        provider:   Provider =              parse_provider(self._provider_)
        out:        Path =                  Path(self._out_) if self._out_ else default_output("generate", manifest.name)

        # Prompt, stored next to the candidates.
        prompt:     str =                   build_prompt(suite_prompt_spec(manifest, self._example_))
        out.mkdir(parents = True, exist_ok = True)
        (out / "prompt.md").write_text(prompt, encoding = "utf-8")

        # Request and classify.
        self.__logger__.info(f"Requesting {self._n_} candidate(s) for {manifest.name} from {provider.config.model}")

        records:    List[CandidateRecord] = [
                                                classify_response(response, provider.config.model, manifest.name)
                                                for response in request_candidates(prompt, provider, self._n_)
                                            ]

        # Store.
        store:      CandidateStore =        CandidateStore(out)
        for record in records: store.write(record)

        # Counts line.
        print(" ".join(f"{status}={count}" for status, count in status_counts(records).items()), f"out={out}")

        # Generated.
        return 0


@register_command(
    name =          "generate",
    parser =        register_generate_parser,
    section =       "Pipeline",
    description =   "Request candidate heuristic programs"
)
def generate_entry_point(**kwargs) -> int:
    """# Execute Generate Process.

    ## Returns:
        * int:  0 once every candidate is stored, 1 on input or configuration errors.
    """
    return GenerateProcess(**kwargs).run()
