"""# stratagem.hddl.tests.printer_test

HDDL printer test suite.
"""

from typing         import Callable, Tuple

from pytest         import mark

from stratagem.hddl import *

@mark.parametrize("suite", ["towers", "jobs", "rover"])
def test_domain_parse_print_parse(
    suite:      str,
    instance:   Callable[..., Tuple[LiftedDomain, LiftedProblem]]
) -> None:
    """# Test Domain Printing Fixpoint."""
    # Load domain.
    domain, _ =                     instance(suite)

    # Reparse printed form.
    reparsed:   LiftedDomain =      parse_domain(print_domain(domain))

    assert reparsed == domain,  f"Reparsed {suite} domain differs from the original"

@mark.parametrize("suite", ["towers", "jobs", "rover"])
def test_problem_parse_print_parse(
    suite:      str,
    instance:   Callable[..., Tuple[LiftedDomain, LiftedProblem]]
) -> None:
    """# Test Problem Printing Fixpoint."""
    # Load instance.
    domain, problem =               instance(suite, "p02")

    # Reparse printed form.
    reparsed:   LiftedProblem =     parse_problem(print_problem(problem), domain)

    assert reparsed == problem, f"Reparsed {suite} problem differs from the original"

def test_costs_survive_printing() -> None:
    """# Test Action Cost Printing."""
    # Parse costed domain.
    domain: LiftedDomain =  parse_domain("""
        (define (domain d)
          (:predicates (p))
          (:action a :parameters () :precondition (and (not (p))) :effect (and (p) (increase (total-cost) 3))))
    """)

    # Render domain.
    text:   str =           print_domain(domain)

    assert "(:functions (total-cost) - number)" in text,    "Costed domain should declare total-cost"
    assert parse_domain(text).actions[0].cost == 3,         "Cost lost in printing"
