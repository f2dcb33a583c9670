"""# stratagem.commands.ground.main

Ground process: ground one problem, print its statistics line and optionally dump it.
"""

__all__ = ["ground_entry_point"]

from pathlib                                import Path
from typing                                 import Optional, override

from stratagem.commands.__base__            import CommandProcess, load_model
from stratagem.commands.ground.__args__     import register_ground_parser
from stratagem.grounding                    import dump_model, GroundedModel, GroundingOptions
from stratagem.registration                 import register_command

class GroundProcess(CommandProcess):
    """# Ground Process."""

    def __init__(self,
        domain:             str,
        problem:            str,
        prune_relaxed:      bool =          True,
        instantiation_cap:  int =           5_000_000,
        dump:               Optional[str] = None,
        **kwargs
    ):
        """# Configure Ground Process.

        ## Args:
            * domain            (str):  HDDL domain file.
            * problem           (str):  HDDL problem file.
            * prune_relaxed     (bool): Prune by delete-relaxed reachability. Defaults to True.
            * instantiation_cap (int):  Grounding size cap. Defaults to 5,000,000.
            * dump              (str):  Dump destination, "-" for standard output.
        """
        # Initialize process.
        super(GroundProcess, self).__init__(name = "ground-process")

        # Define properties.
        self._domain_:      str =               domain
        self._problem_:     str =               problem
        self._dump_:        Optional[str] =     dump
        self._options_:     GroundingOptions =  GroundingOptions(
                                                    prune_relaxed =     prune_relaxed,
                                                    instantiation_cap = instantiation_cap
                                                )

    # METHODS ======================================================================================

    @override
    def execute(self) -> int:
        """# Ground, Report and Dump."""
        # Ground.
        model:  GroundedModel = load_model(self._domain_, self._problem_, self._options_)

        # Dump to standard output replaces the statistics line.
        if self._dump_ == "-":
            print(dump_model(model), end = "")
            return 0

        # Dump to file.
        if self._dump_ is not None:
            Path(self._dump_).parent.mkdir(parents = True, exist_ok = True)
            Path(self._dump_).write_text(dump_model(model), encoding = "utf-8")
            self.__logger__.info(f"Wrote grounded model to {self._dump_}")

        # Statistics line.
        print(" ".join(f"{key}={value}" for key, value in model.statistics().items()))

        # Grounded.
        return 0


@register_command(
    name =          "ground",
    parser =        register_ground_parser,
    section =       "Planning",
    description =   "Ground a problem and report its size"
)
def ground_entry_point(**kwargs) -> int:
    """# Execute Ground Process.

    ## Returns:
        * int:  0 if grounding succeeds, 1 otherwise.
    """
    return GroundProcess(**kwargs).run()
