"""# stratagem.commands.parse.main

Parse process: read a domain and an optional problem, print summary counts.
"""

__all__ = ["parse_entry_point"]

from typing                                 import Optional, override

from stratagem.commands.__base__            import CommandProcess
from stratagem.commands.parse.__args__      import register_parse_parser
from stratagem.hddl                         import LiftedDomain, LiftedProblem, print_domain, print_problem, read_domain, read_problem
from stratagem.registration                 import register_command

class ParseProcess(CommandProcess):
    """# Parse Process."""

    def __init__(self,
        domain:         str,
        problem:        Optional[str] = None,
        print_model:    bool =          False,
        **kwargs
    ):
        """# Configure Parse Process.

        ## Args:
            * domain        (str):  HDDL domain file.
            * problem       (str):  HDDL problem file, if any.
            * print_model   (bool): Print the files back in canonical HDDL. Defaults to False.
        """
        # Initialize process.
        super(ParseProcess, self).__init__(name = "parse-process")

        # Define properties.
        self._domain_:      str =           domain
        self._problem_:     Optional[str] = problem
        self._print_:       bool =          print_model

    # METHODS ======================================================================================

    @override
    def execute(self) -> int:
        """# Parse and Summarize."""
        # Parse domain.
        domain:     LiftedDomain =  read_domain(self._domain_)

        print(
            f"domain {domain.name}: {len(domain.types)} types, {len(domain.predicates)} predicates, "
            f"{len(domain.tasks)} tasks, {len(domain.methods)} methods, {len(domain.actions)} actions"
        )
        if self._print_: print(print_domain(domain))

        # Without a problem, done.
        if self._problem_ is None: return 0

        # Parse problem.
        problem:    LiftedProblem = read_problem(self._problem_, domain)

        print(
            f"problem {problem.name}: {len(problem.objects)} objects, {len(problem.init)} init atoms, "
            f"{len(problem.goal)} goals, {len(problem.initial_network)} initial tasks"
        )
        if self._print_: print(print_problem(problem))

        # Parsed.
        return 0


@register_command(
    name =          "parse",
    parser =        register_parse_parser,
    section =       "Planning",
    description =   "Parse HDDL files and summarize them"
)
def parse_entry_point(**kwargs) -> int:
    """# Execute Parse Process.

    ## Returns:
        * int:  0 if the files parse, 1 otherwise.
    """
    return ParseProcess(**kwargs).run()
