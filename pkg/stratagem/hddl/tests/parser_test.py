"""# stratagem.hddl.tests.parser_test

HDDL parser test suite.
"""

from pathlib            import Path
from random             import Random
from typing             import Callable, Tuple

from pytest             import mark, raises

from stratagem.hddl     import *

NOOP_DOMAIN:    str =   """
(define (domain minimal)
  (:action noop :parameters () :precondition () :effect ()))
"""

ROBOT_DOMAIN:   str =   """
(define (domain robot)
  (:requirements :typing :hierarchy :negative-preconditions)
  (:types robot room - object)
  (:predicates (at ?r - robot ?x - room))
  (:task go :parameters (?r - robot ?x - room))
  (:method m-go
    :parameters (?r - robot ?from ?to - room)
    :task (go ?r ?to)
    :precondition (and (at ?r ?from) (not (at ?r ?to)))
    :ordered-subtasks (and (move ?r ?from ?to)))
  (:action move
    :parameters (?r - robot ?from ?to - room)
    :precondition (and (at ?r ?from))
    :effect (and (at ?r ?to) (not (at ?r ?from)))))
"""

def _robot_problem_(goal: str = "(:goal (and (at r1 kitchen)))", objects: str = "r1 - robot hall kitchen - room") -> str:
    """# Render Robot Problem."""
    return  f"""
            (define (problem p)
              (:domain robot)
              (:objects {objects})
              (:htn :parameters () :ordered-subtasks (and (go r1 kitchen)))
              (:init (at r1 hall))
              {goal})
            """

# DOMAINS ==========================================================================================

def test_minimal_domain() -> None:
    """# Test Smallest Well-Formed Domain."""
    # Parse domain.
    domain: LiftedDomain =  parse_domain(NOOP_DOMAIN)

    assert len(domain.actions) == 1,    f"Expected 1 action, got {len(domain.actions)}"
    assert len(domain.methods) == 0,    f"Expected 0 methods, got {len(domain.methods)}"
    assert domain.actions[0] == Action("noop"),     \
        f"No-op action expected to be empty, got {domain.actions[0]}"

def test_towers_domain_counts(towers: Tuple[LiftedDomain, LiftedProblem]) -> None:
    """# Test Declarations of the Towers Domain."""
    # Unpack domain.
    domain, _ = towers

    assert [t.name for t in domain.tasks] == ["shift-tower", "move-ring"],  \
        f"Expected compound tasks shift-tower and move-ring, got {[t.name for t in domain.tasks]}"
    assert len(domain.methods) == 3,                            f"Expected 3 methods, got {len(domain.methods)}"
    assert len(domain.actions) == 1,                            f"Expected 1 action, got {len(domain.actions)}"
    assert len(domain.predicates) == 5,                         f"Expected 5 predicates, got {len(domain.predicates)}"
    assert dict(domain.types) == {"ring": "object", "tower": "object"},     \
        f"Unexpected type hierarchy {domain.types}"

    # The recursive method mentions its own task, linearized from its ordering constraints.
    recursive:  Method =    domain.methods[1]
    assert [s.name for s in recursive.subtasks] == ["shift-tower", "move-ring", "shift-tower"],  \
        f"Recursive method subtasks unexpected: {recursive.subtasks}"
    assert [s.arguments for s in recursive.subtasks][::2] == [("?s", "?from", "?via", "?to"), ("?s", "?via", "?to", "?from")], \
        f"Recursive calls out of order: {recursive.subtasks}"

    # Rings rest on rings or tower bases.
    assert domain.predicate("on").parameters[1].type == "(either ring tower)",  \
        f"Unexpected union type {domain.predicate('on').parameters[1]}"

def test_either_type_admits_every_member() -> None:
    """# Test Union Types in the Hierarchy."""
    # Domain with a two-level hierarchy.
    domain: LiftedDomain =  parse_domain(
                                "(define (domain d) (:types crate - thing pallet place - object)"
                                " (:predicates (on ?x - thing ?y - (either thing pallet))))"
                            )

    assert domain.is_subtype("crate", "(either thing pallet)"),     "Subtype of a member should be admitted"
    assert domain.is_subtype("pallet", "(either thing pallet)"),    "Member should be admitted"
    assert not domain.is_subtype("place", "(either thing pallet)"), "Non-member should be rejected"
    assert type_members("(either thing pallet)") == ("thing", "pallet"),    "Members expected in written order"

@mark.parametrize(
    "declaration, error",
    [
        ("(:predicates (p ?x - (either gizmo)))",   UndeclaredTypeError),
        ("(:predicates (p ?x - (oneof a)))",        HDDLSyntaxError),
        ("(:constants c - (either object))",        UnsupportedFeatureError),
    ]
)
def test_either_type_errors(declaration: str, error: type) -> None:
    """# Test Union Type Rejections."""
    with raises(error): parse_domain(f"(define (domain d) {declaration})")

ORDERING_DOMAIN:    str =   """
(define (domain ordering)
  (:constants x y z)
  (:predicates (done ?x))
  (:task all :parameters ())
  (:action work :parameters (?x) :effect (and (done ?x)))
  (:method m-all
    :parameters ()
    :task (all)
    :subtasks (and (a (work x)) (b (work y)) (c (work z)))
    :ordering (and {constraints})))
"""

@mark.parametrize(
    "constraints, expected",
    [
        ("(< a b) (< b c)",             ["x", "y", "z"]),
        ("(< c a) (< a b)",             ["z", "x", "y"]),
        ("(< b a) (< c b) (< c a)",     ["z", "y", "x"]),
    ]
)
def test_total_ordering_is_linearized(constraints: str, expected: list) -> None:
    """# Test Subtasks Follow Their Ordering Constraints."""
    # Parse.
    domain: LiftedDomain =  parse_domain(ORDERING_DOMAIN.format(constraints = constraints))

    assert [s.arguments[0] for s in domain.methods[0].subtasks] == expected,    \
        f"Expected {expected}, got {domain.methods[0].subtasks}"

@mark.parametrize(
    "constraints, error",
    [
        ("(< a b)",                     UnsupportedFeatureError),
        ("(< a b) (< b c) (< c a)",     HDDLSemanticError),
        ("(< a d)",                     HDDLSyntaxError),
        ("(before a b)",                HDDLSyntaxError),
    ]
)
def test_ordering_errors(constraints: str, error: type) -> None:
    """# Test Partial, Cyclic and Malformed Orderings."""
    with raises(error): parse_domain(ORDERING_DOMAIN.format(constraints = constraints))

def test_equality_literal() -> None:
    """# Test Negated Equality in Preconditions."""
    # Parse Towers-style action.
    domain: LiftedDomain =  parse_domain("""
        (define (domain d)
          (:predicates (p ?x))
          (:action a :parameters (?x ?y) :precondition (and (p ?x) (not (= ?x ?y))) :effect (and (not (p ?x)))))
    """)

    assert domain.actions[0].precondition[1] == Literal(Atom("=", ("?x", "?y")), False),    \
        f"Equality literal unexpected: {domain.actions[0].precondition}"
    assert domain.actions[0].delete_effects == (Atom("p", ("?x",)),),   \
        f"Delete effects unexpected: {domain.actions[0].delete_effects}"

def test_action_cost_effect() -> None:
    """# Test Total-Cost Increase."""
    # Parse costed action.
    domain: LiftedDomain =  parse_domain("""
        (define (domain d)
          (:requirements :action-costs)
          (:functions (total-cost) - number)
          (:action a :parameters () :effect (and (increase (total-cost) 4))))
    """)

    assert domain.actions[0].cost == 4, f"Expected cost 4, got {domain.actions[0].cost}"

def test_undeclared_parent_type_is_implicit() -> None:
    """# Test Parent Types Declared Only by Use."""
    # Parse domain.
    domain: LiftedDomain =  parse_domain("(define (domain d) (:types truck - vehicle))")

    assert domain.is_subtype("truck", "vehicle"),   "truck expected to descend from vehicle"
    assert domain.is_subtype("vehicle", "object"),  "vehicle expected to descend from object"

def test_unordered_single_subtask_and_alias() -> None:
    """# Test Subtask Section Variants."""
    # Parse variants.
    domain: LiftedDomain =  parse_domain("""
        (define (domain d)
          (:task t :parameters ())
          (:method m1 :parameters () :task (t) :subtasks (and (a)))
          (:method m2 :parameters () :task (t) :ordered-tasks (and (a) (a)))
          (:action a :parameters ()))
    """)

    assert [len(m.subtasks) for m in domain.methods] == [1, 2],    \
        f"Subtask counts unexpected: {[m.subtasks for m in domain.methods]}"

# DOMAIN ERRORS ====================================================================================

def test_undeclared_subtask() -> None:
    """# Test Method Referencing an Undeclared Task."""
    with raises(UndeclaredTaskError) as exc_info:
        parse_domain("""
            (define (domain d)
              (:task t :parameters ())
              (:method m :parameters () :task (t) :ordered-subtasks (and (ghost))))
        """)

    assert "undeclared task" in str(exc_info.value),    f"Unexpected message: {exc_info.value}"
    assert exc_info.value.line == 4,                    f"Error expected on line 4, got {exc_info.value.line}"

def test_method_must_decompose_compound_task() -> None:
    """# Test Method Decomposing a Primitive."""
    with raises(UndeclaredTaskError):
        parse_domain("""
            (define (domain d)
              (:method m :parameters () :task (a) :ordered-subtasks ())
              (:action a :parameters ()))
        """)

@mark.parametrize(
    "body, error",
    [
        ("(:requirements :strips :teleportation)",                                  UnknownRequirementError),
        ("(:predicates (p ?x - gizmo))",                                            UndeclaredTypeError),
        ("(:action a :parameters () :precondition (and (q)))",                      UndeclaredPredicateError),
        ("(:predicates (p ?x)) (:action a :parameters () :precondition (p))",       ArityError),
        ("(:predicates (p ?x)) (:action a :parameters () :precondition (p ?y))",    UndeclaredObjectError),
        ("(:predicates (p ?x)) (:action a :parameters (?x) :effect (forall (?y) (p ?y)))",  UnsupportedFeatureError),
        ("(:predicates (p ?x)) (:action a :parameters (?x) :precondition (or (p ?x)))",     UnsupportedFeatureError),
        ("(:task t :parameters ()) (:method m :parameters () :task (t) :subtasks (and (t) (t)))",   UnsupportedFeatureError),
        ("(:widgets)",                                                              HDDLSyntaxError),
    ]
)
def test_domain_errors(body: str, error: type) -> None:
    """# Test Domain Rejections."""
    with raises(error): parse_domain(f"(define (domain d) {body})")

def test_syntax_error_position() -> None:
    """# Test Position of Unbalanced Input."""
    with raises(HDDLSyntaxError) as exc_info: parse_domain("(define (domain d)\n  (:predicates (p))\n  )\n)", source = "d.hddl")

def test_missing_close_parenthesis_points_at_opener(suites_path: Path) -> None:
    """# Test Unclosed Domain Reports its Opening Parenthesis."""
    # Drop the parenthesis closing the predicate section.
    text:   str =   (suites_path / "towers" / "domain.hddl").read_text(encoding = "utf-8")
    text =          text.replace("(smallest ?r - ring))", "(smallest ?r - ring)", 1)

    with raises(HDDLSyntaxError) as exc_info: parse_domain(text, source = "domain.hddl")

    # Position of the unmatched opener.
    opener: int =   text.index("(define")

    assert exc_info.value.message == "unbalanced parentheses: expected ')'",    \
        f"Unexpected message {exc_info.value.message}"
    assert (exc_info.value.line, exc_info.value.column) == (text[:opener].count("\n") + 1, 1),  \
        f"Expected the define form, got {exc_info.value.line}:{exc_info.value.column}"

def test_unterminated_string_in_problem(towers: Tuple[LiftedDomain, LiftedProblem]) -> None:
    """# Test Unterminated String Reports the Enclosing List."""
    with raises(HDDLSyntaxError) as exc_info: parse_problem('(define (problem p)\n  (:domain "towers))', towers[0])

    assert exc_info.value.diagnostic() == "<input>:1:1: unbalanced parentheses: expected ')'",  \
        f"Unexpected diagnostic {exc_info.value.diagnostic()}"

    assert exc_info.value.diagnostic() == "d.hddl:4:1: unbalanced parentheses: unexpected ')'",  \
        f"Unexpected diagnostic {exc_info.value.diagnostic()}"

# PROBLEMS =========================================================================================

def test_towers_problem(towers: Tuple[LiftedDomain, LiftedProblem]) -> None:
    """# Test Towers 3-Ring Problem."""
    # Unpack problem.
    _, problem =    towers

    assert problem.initial_network == (TaskReference("shift-tower", ("r3", "t1", "t3", "t2")),),   \
        f"Initial network unexpected: {problem.initial_network}"
    assert len(problem.objects) == 6,   f"Expected 6 objects, got {len(problem.objects)}"
    assert len(problem.goal) == 3,      f"Expected 3 goal atoms, got {len(problem.goal)}"

def test_ordered_initial_network(instance: Callable) -> None:
    """# Test `:htn` Subtasks Follow the Ordering Section."""
    # Parse the relay problem.
    _, problem =    instance("towers", "p02")

    assert problem.initial_network == (
        TaskReference("shift-tower", ("r4", "t1", "t2", "t3")),
        TaskReference("shift-tower", ("r4", "t2", "t3", "t1")),
    ), f"Initial network unexpected: {problem.initial_network}"

def test_empty_goal_is_legal() -> None:
    """# Test Problem Without Goal."""
    # Parse problem.
    problem:    LiftedProblem = parse_problem(_robot_problem_(goal = ""), parse_domain(ROBOT_DOMAIN))

    assert problem.goal == (),  f"Goal expected to be empty, got {problem.goal}"

def test_undeclared_object() -> None:
    """# Test Problem Referencing an Undeclared Object."""
    with raises(UndeclaredObjectError) as exc_info:
        parse_problem(_robot_problem_(objects = "r1 - robot hall - room"), parse_domain(ROBOT_DOMAIN))

    assert "kitchen" in str(exc_info.value),    f"Unexpected message: {exc_info.value}"

def test_object_of_undeclared_type() -> None:
    """# Test Object Typed Outside the Hierarchy."""
    with raises(UndeclaredTypeError):
        parse_problem(_robot_problem_(objects = "r1 - robot hall kitchen - garage"), parse_domain(ROBOT_DOMAIN))

def test_domain_name_mismatch() -> None:
    """# Test Problem Targeting Another Domain."""
    with raises(HDDLSemanticError):
        parse_problem(_robot_problem_().replace("(:domain robot)", "(:domain rover)"), parse_domain(ROBOT_DOMAIN))

def test_init_arity() -> None:
    """# Test Init Atom With Wrong Arity."""
    with raises(ArityError):
        parse_problem(_robot_problem_().replace("(at r1 hall)", "(at r1)"), parse_domain(ROBOT_DOMAIN))

# ROBUSTNESS =======================================================================================

def test_mutated_input_yields_value_or_positioned_error(towers: Tuple[LiftedDomain, LiftedProblem]) -> None:
    """# Test Parser on Randomly Mutated Domain Text."""
    # Render a valid domain as the mutation seed.
    seed_text:  str =       print_domain(towers[0])

    # Seed generator.
    rng:        Random =    Random(11)

    # For a batch of mutants...
    for _ in range(200):

        # Mutate a handful of characters.
        chars:  list =  list(seed_text)
        for _ in range(rng.randint(1, 6)):

            # Pick position.
            index:  int =   rng.randrange(len(chars))

            # Delete, duplicate, or replace.
            match rng.randrange(3):
                case 0: del chars[index]
                case 1: chars.insert(index, chars[index])
                case 2: chars[index] = rng.choice("()?-; \n\"abz:")

        # Re-join mutant.
        text:   str =   "".join(chars)

        try:# Parse mutant.
            parse_domain(text)

        # Structured errors carry in-bounds positions.
        except HDDLError as e:

            assert 1 <= e.line <= text.count("\n") + 1,  f"Line {e.line} out of bounds"
            assert e.column >= 1,                        f"Column {e.column} out of bounds"
