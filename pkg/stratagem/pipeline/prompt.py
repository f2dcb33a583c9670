"""# stratagem.pipeline.prompt

Assembly of the domain-specific prompt that asks a language model for one HEL heuristic.

The prompt is a fixed sequence of thirteen sections. Sections 1 to 4 carry the domain (name, domain
file, smallest and largest training problems, optional hint block); sections 5 to 13 are the same
for every domain and document fact naming, state and network access, the program form, the
builtin table, a worked example, admissibility, known patterns and the design procedure.
"""

__all__ =   [
                "build_prompt",
                "HINTS_INTRODUCTION",
                "PromptSpec"
            ]

from dataclasses                import dataclass
from typing                     import Callable, List, Optional

from stratagem.hel.builtins     import BUILTINS, builtin_names
from stratagem.pipeline.hints   import HintBlock

# Fixed opening of the hint section.
HINTS_INTRODUCTION: str =   "These insights were discovered through extensive experimentation on this domain. Use them."

@dataclass(frozen = True)
class PromptSpec():
    r"""# :class:`PromptSpec`

    ## Properties:
    * :param:`domain_name`              (str):          Domain name.
    * :param:`domain_text`              (str):          Full HDDL domain file.
    * :param:`smallest_problem_text`    (str):          Smallest training problem.
    * :param:`largest_problem_text`     (str):          Largest training problem.
    * :param:`worked_example`           (str):          A complete, correct HEL program.
    * :param:`hints`                    (HintBlock):    Per-domain hints, None to omit the section.
    """
    domain_name:            str
    domain_text:            str
    smallest_problem_text:  str
    largest_problem_text:   str
    worked_example:         str
    hints:                  Optional[HintBlock] =   None


def build_prompt(
    spec:   PromptSpec
) -> str:
    """# Build Prompt.

    ## Args:
        * spec  (PromptSpec):   Domain-specific inputs.

    ## Returns:
        * str:  Prompt text; identical specs yield identical text.
    """
    assert spec.domain_text.strip() and spec.smallest_problem_text.strip() and spec.largest_problem_text.strip(), \
        "domain and problem texts must be nonempty"

    # Render sections in order, skipping absent ones.
    sections:   List[str] = [text for text in (section(spec) for section in SECTIONS) if text]

    # Join with blank lines.
    return "\n\n".join(sections) + "\n"

# SECTIONS =========================================================================================

def _preamble_(spec: PromptSpec) -> str:
    return  (
                f"# 1. Task\n\n"
                f"Write a heuristic for the total-order HTN planning domain `{spec.domain_name}`. The planner "
                f"runs progression search over pairs of a state and a pending task network: the first "
                f"pending task is either a primitive action, which is applied to the state, or a compound "
                f"task, which is replaced by the subtasks of one of its methods. A problem is solved when "
                f"the network is empty and every goal fact holds.\n\n"
                f"Your heuristic estimates, for a search node, how much work remains. It is written in HEL, "
                f"a small expression language documented below. Your heuristic is selected by the number "
                f"of nodes it makes the search expand on a training problem, so lower is better; a program "
                f"that fails to parse, faults at run time or is too slow is discarded."
            )

def _domain_(spec: PromptSpec) -> str:
    return f"# 2. Domain file\n\n```hddl\n{spec.domain_text.strip()}\n```"

def _problems_(spec: PromptSpec) -> str:
    return  (
                f"# 3. Training problems\n\n"
                f"Smallest problem:\n\n```hddl\n{spec.smallest_problem_text.strip()}\n```\n\n"
                f"Largest problem:\n\n```hddl\n{spec.largest_problem_text.strip()}\n```"
            )

def _hints_(spec: PromptSpec) -> str:
    # Omitted without hints.
    if spec.hints is None: return ""

    return  (
                f"# 4. Domain-specific hints\n\n"
                f"{HINTS_INTRODUCTION}\n\n"
                f"Representation caveats:\n{spec.hints.representation_caveats.strip()}\n\n"
                f"Search bottleneck:\n{spec.hints.bottleneck.strip()}\n\n"
                f"Heuristic construction:\n{spec.hints.construction_guidance.strip()}"
            )

def _fact_format_(spec: PromptSpec) -> str:
    return  (
                "# 5. Fact naming\n\n"
                "Grounded facts are named `predicate[arg1,arg2]` and rendered with a sign: `+at[rover1,waypoint2]` "
                "is the atom, `-at[rover1,waypoint2]` is the complement compiled from a negative precondition. "
                "HEL selects facts by predicate name only, exactly as the predicate is spelled in the domain "
                "file, and only positive facts are selected. Predicates that no action changes are removed "
                "by grounding, so selecting them yields an empty set.\n\n"
                "Wrong:\n\n"
                "    (def positions (facts \"(at ?r ?w)\"))        ; a pattern, not a predicate name\n"
                "    (def positions (facts \"+at[rover1,w2]\"))    ; a fact name, not a predicate name\n"
                "    (def delivered (goal-facts \"communicated_soil_data\"))  ; wrong spelling\n\n"
                "Right:\n\n"
                "    (def positions (facts \"at\"))\n"
                "    (def delivered (goal-facts \"communicated-soil-data\"))"
            )

def _goal_access_(spec: PromptSpec) -> str:
    return  (
                "# 6. Goals and state checks\n\n"
                "`(goal-facts \"pred\")` binds the goal facts of one predicate, `(goal-facts)` binds all goal "
                "facts. The state is read only through fact-sets bound in init:\n\n"
                "* `(count-unsatisfied s)`: facts of `s` that do not hold in the current state;\n"
                "* `(count-true s)`: facts of `s` that hold;\n"
                "* `(any-true s)`: 1 if some fact of `s` holds, else 0.\n\n"
                "The pending task network is read through `(network-cost table)` and `(pending-count pattern)`."
            )

def _program_form_(spec: PromptSpec) -> str:
    return  (
                "# 7. Program form\n\n"
                "A program is exactly one form:\n\n"
                "    (heuristic \"name\"\n"
                "      (init (def symbol (init-builtin literal ...)) ...)\n"
                "      (eval expression))\n\n"
                "`init` runs once on the grounded problem. Every directive applies one init builtin to "
                "literal arguments (numbers and double-quoted strings) and binds the result to a fresh "
                "symbol. `eval` runs at every search node. It may use eval builtins, numbers and symbols "
                "bound in init; it cannot call init builtins. All loops over facts and tasks happen in "
                "init: eval only scans the pending network and the fact-sets you bound."
            )

def _builtins_(spec: PromptSpec) -> str:
    # One row per builtin, init builtins first.
    rows:   List[str] = [
                            f"| `{name}` | {BUILTINS[name].phase} | {BUILTINS[name].arity} | "
                            f"`{BUILTINS[name].signature}` | {BUILTINS[name].description} |"
                            for phase in ("init", "eval")
                            for name in builtin_names(phase)
                        ]

    return  (
                "# 8. Builtins\n\n"
                "This table is closed: any other name is rejected.\n\n"
                "| builtin | phase | arguments | kinds | meaning |\n"
                "|---|---|---|---|---|\n"
                + "\n".join(rows)
            )

def _worked_example_(spec: PromptSpec) -> str:
    return  (
                "# 9. Worked example\n\n"
                "A complete program that parses, checks and runs:\n\n"
                f"```hel\n{spec.worked_example.strip()}\n```"
            )

def _value_kinds_(spec: PromptSpec) -> str:
    return  (
                "# 10. Values\n\n"
                "Numbers are exact rationals: `3`, `2.5` and `3/4` are literals, `(/ 1 3)` is exact. Init "
                "builtins produce tables, fact-sets and task patterns; these may only be passed to the "
                "builtin that expects them. Passing a fact-set to arithmetic is a run-time fault and "
                "discards the program. A negative result is clamped to 0. An infinite table entry counts "
                "as a large penalty in `network-cost`."
            )

def _admissibility_(spec: PromptSpec) -> str:
    return  (
                "# 11. Lower bounds and guidance\n\n"
                "A lower bound never overestimates the remaining cost. The maximum of lower bounds is a "
                "lower bound. Tie-breaking penalties add to a lower bound; a penalty smaller than one "
                "action (for example `(* 1/1000 (count-unsatisfied goals))`) keeps the bound while "
                "separating otherwise equal nodes. Penalties that are too small never change the order in "
                "which nodes are expanded, so scale them to the differences you want to break."
            )

def _patterns_(spec: PromptSpec) -> str:
    return  (
                "# 12. Patterns\n\n"
                "Winning patterns:\n\n"
                "* P1: start from the decomposition cost of the whole pending network, `(network-cost (tdg-table))`.\n"
                "* P2: read the state: count unsatisfied goal facts, `(count-unsatisfied goals)`.\n"
                "* P3: combine independent lower bounds with `max`.\n"
                "* P4: penalize pending tasks that expand into long action sequences, `(pending-count pattern)`.\n"
                "* P5: bind every fact-set and pattern in init; keep eval to a few scans.\n"
                "* P6: break ties between symmetric nodes with a small weighted term.\n\n"
                "Anti-patterns:\n\n"
                "* A1: ignoring the state; a heuristic built only from the network cannot see progress on goals.\n"
                "* A2: ignoring the network; goal counting alone loses the hierarchy.\n"
                "* A3: heavy work per node; expensive structure belongs in init.\n"
                "* A4: tiny constant penalties on methods instead of estimates of the remaining work."
            )

def _procedure_(spec: PromptSpec) -> str:
    return  (
                "# 13. Procedure and response format\n\n"
                "Follow these steps and write your reasoning as `;` comments at the top of the program:\n\n"
                "1. Name the bottleneck: which compound tasks expand into many actions.\n"
                "2. List two or three independent lower bounds.\n"
                "3. Bind the tables, fact-sets and patterns they need in `init`.\n"
                "4. Write `eval` as `(max term1 term2 ...)`.\n"
                "5. Add a tie-breaking penalty if the domain has interchangeable objects.\n\n"
                "Respond with one line `Name: <heuristic name>` followed by exactly one fenced code block "
                "tagged `hel` holding the whole program, and nothing else."
            )

# Section order.
SECTIONS:   List[Callable[[PromptSpec], str]] = [
                                                    _preamble_,
                                                    _domain_,
                                                    _problems_,
                                                    _hints_,
                                                    _fact_format_,
                                                    _goal_access_,
                                                    _program_form_,
                                                    _builtins_,
                                                    _worked_example_,
                                                    _value_kinds_,
                                                    _admissibility_,
                                                    _patterns_,
                                                    _procedure_,
                                                ]
