"""# stratagem.hddl.parser

HDDL domain and problem parsing.

The supported subset is total-order HDDL with STRIPS-style preconditions: conjunctions of positive
and negative literals (equality included), typed parameters (`either` unions for variables), domain
constants, add/delete effects with an optional `(increase (total-cost) N)` cost, and methods whose
subtasks are given by `:ordered-subtasks` (or its alias `:ordered-tasks`), or by `:subtasks` with
`:ordering` constraints that admit a single order. Quantifiers, disjunction, implication,
conditional effects, numeric fluents, and partially ordered methods are rejected.
"""

__all__ =   [
                "KNOWN_REQUIREMENTS",
                "parse_domain",
                "parse_problem",
                "read_domain",
                "read_problem"
            ]

from dataclasses                import dataclass, field, replace
from graphlib                   import CycleError, TopologicalSorter
from logging                    import Logger
from pathlib                    import Path
from typing                     import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

from stratagem.hddl.exceptions  import *
from stratagem.hddl.model       import *
from stratagem.hddl.model       import ROOT_TYPE
from stratagem.utilities        import get_child
from stratagem.utilities.sexpr  import Form, read_sexprs, SExpr, SExprSyntaxError, Token

# Initialize logger.
__logger__:         Logger =            get_child("hddl-parser")

KNOWN_REQUIREMENTS: FrozenSet[str] =    frozenset({
                                            ":action-costs",
                                            ":adl",
                                            ":conditional-effects",
                                            ":disjunctive-preconditions",
                                            ":equality",
                                            ":existential-preconditions",
                                            ":hierarchy",
                                            ":method-preconditions",
                                            ":negative-preconditions",
                                            ":quantified-preconditions",
                                            ":strips",
                                            ":typing",
                                            ":universal-preconditions",
                                        })

# Connectives outside the supported subset and how they are reported.
UNSUPPORTED_CONNECTIVES:    Dict[str, str] =    {
                                                    "forall":   "universally quantified formula",
                                                    "exists":   "existentially quantified formula",
                                                    "or":       "disjunctive formula",
                                                    "imply":    "implication",
                                                    "when":     "conditional effect",
                                                }

ORDERED_SUBTASK_KEYS:       Tuple[str, ...] =   (":ordered-subtasks", ":ordered-tasks")
UNORDERED_SUBTASK_KEYS:     Tuple[str, ...] =   (":subtasks", ":tasks")

# API ==============================================================================================

def parse_domain(
    text:   Union[str, bytes],
    source: Optional[str] = None
) -> LiftedDomain:
    """# Parse Domain.

    ## Args:
        * text      (str | bytes):  HDDL domain text.
        * source    (str):          File name recorded on errors.

    ## Raises:
        * HDDLError:    Syntax or semantic error, with position.

    ## Returns:
        * LiftedDomain: Parsed domain.
    """
    try:# Read domain.
        domain: LiftedDomain =  _DomainReader().read(define = _define_(text = text, kind = "domain"))

    # Attach source to errors.
    except HDDLError as e:

        # Record file.
        e.source = source
        raise

    # Log summary.
    __logger__.debug(
        f"Parsed domain {domain.name}: {len(domain.actions)} actions, {len(domain.tasks)} tasks, "
        f"{len(domain.methods)} methods"
    )

    # Provide domain.
    return domain

def parse_problem(
    text:   Union[str, bytes],
    domain: LiftedDomain,
    source: Optional[str] = None
) -> LiftedProblem:
    """# Parse Problem.

    ## Args:
        * text      (str | bytes):  HDDL problem text.
        * domain    (LiftedDomain): Domain the problem is validated against.
        * source    (str):          File name recorded on errors.

    ## Raises:
        * HDDLError:    Syntax or semantic error, with position.

    ## Returns:
        * LiftedProblem:    Parsed problem; the `:htn` subtasks form the initial network in
                            declaration order.
    """
    try:# Read problem.
        problem: LiftedProblem =    _ProblemReader(domain = domain).read(
                                        define = _define_(text = text, kind = "problem")
                                    )

    # Attach source to errors.
    except HDDLError as e:

        # Record file.
        e.source = source
        raise

    # Log summary.
    __logger__.debug(
        f"Parsed problem {problem.name}: {len(problem.objects)} objects, {len(problem.init)} init "
        f"atoms, {len(problem.goal)} goals, {len(problem.initial_network)} initial tasks"
    )

    # Provide problem.
    return problem

def read_domain(
    path:   Union[str, Path]
) -> LiftedDomain:
    """# Read Domain File."""
    return parse_domain(text = Path(path).read_bytes(), source = str(path))

def read_problem(
    path:   Union[str, Path],
    domain: LiftedDomain
) -> LiftedProblem:
    """# Read Problem File."""
    return parse_problem(text = Path(path).read_bytes(), domain = domain, source = str(path))

# SHARED HELPERS ===================================================================================

def _define_(
    text:   Union[str, bytes],
    kind:   str
) -> Form:
    """# Read the Single `(define ...)` Form."""
    try:# Read s-expressions.
        expressions:    Tuple[SExpr, ...] = read_sexprs(text = text)

    # Relay syntax errors.
    except SExprSyntaxError as e:

        # Report error.
        raise HDDLSyntaxError(e.message, e.line, e.column) from None

    # An HDDL file holds exactly one definition.
    if len(expressions) != 1 or not isinstance(expressions[0], Form) or expressions[0].head() != "define":

        # Locate the offending expression.
        where:  SExpr = expressions[1] if len(expressions) > 1 else (expressions[0] if expressions else Token(""))

        # Report error.
        raise HDDLSyntaxError(f"expected a single '(define ({kind} <name>) ...)' form", where.line, where.column)

    # Extract header.
    define: Form =  expressions[0]
    header: SExpr = define.items[1] if len(define.items) > 1 else define

    # Validate header.
    if not isinstance(header, Form) or header.head() != kind or len(header.items) != 2:
        raise HDDLSyntaxError(f"expected '({kind} <name>)'", header.line, header.column)

    # Provide definition.
    return define

def _form_(
    expr:   SExpr,
    what:   str
) -> Form:
    """# Expect Form."""
    if not isinstance(expr, Form): raise HDDLSyntaxError(f"expected {what}", expr.line, expr.column)
    return expr

def _symbol_(
    expr:   SExpr,
    what:   str
) -> Token:
    """# Expect Unquoted Symbol."""
    if not isinstance(expr, Token) or expr.quoted: raise HDDLSyntaxError(f"expected {what}", expr.line, expr.column)
    return expr

def _keywords_(
    form:       Form,
    start:      int,
    allowed:    Sequence[str]
) -> Dict[str, SExpr]:
    """# Read `:keyword value` Pairs.

    ## Args:
        * form      (Form):             Enclosing form.
        * start     (int):              Index of the first keyword.
        * allowed   (Sequence[str]):    Accepted keywords.

    ## Returns:
        * Dict[str, SExpr]: Value per keyword present.
    """
    # Initialize map.
    values: Dict[str, SExpr] =  {}

    # Walk pairs.
    index:  int =               start
    while index < len(form.items):

        # Read keyword.
        keyword:    Token = _symbol_(form.items[index], "keyword")

        # Validate keyword.
        if keyword.text not in allowed:
            raise HDDLSyntaxError(f"unexpected keyword '{keyword.text}'", keyword.line, keyword.column)

        # Keyword requires a value.
        if index + 1 >= len(form.items):
            raise HDDLSyntaxError(f"missing value after '{keyword.text}'", keyword.line, keyword.column)

        # Record value.
        values[keyword.text] =  form.items[index + 1]
        index +=                2

    # Provide values.
    return values

def _typed_list_(
    items:      Sequence[SExpr],
    variables:  bool
) -> List[Tuple[Token, Token]]:
    """# Read Typed List.

    Reads `a b - t c` into (name, type) token pairs; untyped names default to `object`.

    ## Args:
        * items     (Sequence[SExpr]):  List items.
        * variables (bool):             Names must be `?variables`.

    ## Returns:
        * List[Tuple[Token, Token]]:    Name and type tokens.
    """
    # Initialize lists.
    pending:    List[Token] =               []
    result:     List[Tuple[Token, Token]] = []

    # Walk items.
    index:      int =                       0
    while index < len(items):

        # Type marker.
        if isinstance(items[index], Token) and items[index].text == "-" and not items[index].quoted:

            # Type must follow.
            if index + 1 >= len(items): raise HDDLSyntaxError("missing type after '-'", items[index].line, items[index].column)

            # Union types apply to variables only.
            if isinstance(items[index + 1], Form):
                if not variables: raise UnsupportedFeatureError("'either' types", items[index + 1].line, items[index + 1].column)

                type_token: Token = _union_(items[index + 1])

            else:
                type_token: Token = _symbol_(items[index + 1], "type name")

            # Attach type to pending names.
            result.extend((name, type_token) for name in pending)
            pending =           []
            index +=            2
            continue

        # Name.
        name:   Token = _symbol_(items[index], "variable" if variables else "name")

        # Variables carry the question mark.
        if variables and not name.text.startswith("?"):
            raise HDDLSyntaxError(f"expected variable, got '{name.text}'", name.line, name.column)

        # Queue name.
        pending.append(name)
        index += 1

    # Untyped names are objects.
    result.extend((name, Token(ROOT_TYPE, name.line, name.column)) for name in pending)

    # Provide pairs.
    return result

def _union_(
    form:   Form
) -> Token:
    """# Read `(either t1 t2 ...)`.

    ## Returns:
        * Token:    Union in its written form at the position of the form; a single member
                    collapses to that member.
    """
    # Head and members.
    if form.head() != "either" or len(form.items) < 2:
        raise HDDLSyntaxError("expected (either <type> ...)", form.line, form.column)

    members:    List[str] = list(dict.fromkeys(_symbol_(item, "type name").text for item in form.items[1:]))

    # Provide union.
    return Token(members[0] if len(members) == 1 else f"(either {' '.join(members)})", form.line, form.column)

def _requirements_(
    form:   Form
) -> Tuple[str, ...]:
    """# Read Requirements Section."""
    # Initialize flags.
    flags:  List[str] = []

    # Validate every flag.
    for item in form.items[1:]:

        # Read flag.
        flag:   Token = _symbol_(item, "requirement flag")

        # Unknown flags are errors.
        if flag.text not in KNOWN_REQUIREMENTS: raise UnknownRequirementError(flag.text, flag.line, flag.column)

        # Record flag.
        flags.append(flag.text)

    # Provide flags.
    return tuple(flags)


@dataclass
class _Scope():
    """# Name Scope.

    Variables and objects visible while reading one schema or problem section.
    """
    domain:     LiftedDomain
    objects:    Set[str] =          field(default_factory = set)
    variables:  Dict[str, str] =    field(default_factory = dict)

    def argument(self, token: Token) -> str:
        """# Resolve Argument."""
        # Token must be a symbol.
        name:   Token = _symbol_(token, "argument")

        # Variables must be declared in the schema, objects in the domain/problem.
        if name.text not in (self.variables if name.text.startswith("?") else self.objects):
            raise UndeclaredObjectError(name.text, name.line, name.column)

        # Provide argument.
        return name.text

    def atom(self, form: Form) -> Atom:
        """# Resolve Atom."""
        # Read predicate.
        predicate:  Token =             _symbol_(form.items[0], "predicate") if form.items else _symbol_(form, "predicate")

        # Resolve arguments.
        arguments:  Tuple[str, ...] =   tuple(self.argument(item) for item in form.items[1:])

        # Equality is binary and built in.
        if predicate.text == "=":

            # Validate arity.
            if len(arguments) != 2: raise ArityError("=", 2, len(arguments), form.line, form.column)

            # Provide atom.
            return Atom("=", arguments)

        # Look up declaration.
        declaration:    Optional[Predicate] =   self.domain.predicate(predicate.text)

        # Validate declaration.
        if declaration is None: raise UndeclaredPredicateError(predicate.text, predicate.line, predicate.column)

        # Validate arity.
        if len(arguments) != len(declaration.parameters):
            raise ArityError(predicate.text, len(declaration.parameters), len(arguments), form.line, form.column)

        # Provide atom.
        return Atom(predicate.text, arguments)

    def literals(self, expr: SExpr) -> Tuple[Literal, ...]:
        """# Resolve Conjunction of Literals."""
        # Formulas are forms.
        form:       Form =  _form_(expr, "formula")

        # Empty formula.
        if not form.items:                              return ()

        # Dispatch on connective.
        connective: str =   form.head()

        # Unsupported connectives.
        if connective in UNSUPPORTED_CONNECTIVES:
            raise UnsupportedFeatureError(UNSUPPORTED_CONNECTIVES[connective], form.line, form.column)

        # Conjunction.
        if connective == "and":
            return tuple(literal for item in form.items[1:] for literal in self.literals(item))

        # Negation.
        if connective == "not":

            # Negation wraps exactly one atom.
            if len(form.items) != 2: raise HDDLSyntaxError("expected '(not <atom>)'", form.line, form.column)

            # Read atom.
            inner:  Form =  _form_(form.items[1], "atom")

            # Only atoms may be negated.
            if inner.head() in ("and", "not", *UNSUPPORTED_CONNECTIVES):
                raise UnsupportedFeatureError("negated compound formula", inner.line, inner.column)

            # Provide literal.
            return (Literal(self.atom(inner), False),)

        # Atom.
        return (Literal(self.atom(form), True),)

    def task(self, expr: SExpr, compound_only: bool = False) -> TaskReference:
        """# Resolve Task Reference.

        ## Args:
            * expr          (SExpr):    `(name args...)` form.
            * compound_only (bool):     Reject primitive actions.
        """
        # Read form.
        form:       Form =              _form_(expr, "task")
        name:       Token =             _symbol_(form.items[0] if form.items else form, "task name")

        # Resolve declaration.
        declared:   Union[Action, CompoundTask, None] = self.domain.task(name.text) or (
                                                            None if compound_only else self.domain.action(name.text)
                                                        )

        # Validate declaration.
        if declared is None: raise UndeclaredTaskError(name.text, name.line, name.column)

        # Resolve arguments.
        arguments:  Tuple[str, ...] =   tuple(self.argument(item) for item in form.items[1:])

        # Validate arity.
        if len(arguments) != len(declared.parameters):
            raise ArityError(name.text, len(declared.parameters), len(arguments), form.line, form.column)

        # Provide reference.
        return TaskReference(name.text, arguments)

    def task_list(self, expr: SExpr) -> Tuple[TaskReference, ...]:
        """# Resolve Ordered Task List."""
        # Lists are forms.
        form:   Form =  _form_(expr, "task list")

        # Empty list.
        if not form.items:          return ()

        # Conjunction of (possibly labelled) tasks, or a single task.
        entries:    Sequence[SExpr] =   form.items[1:] if form.head() == "and" else (form,)

        # Resolve entries, unwrapping `(label (task ...))`.
        return  tuple(
                    self.task(
                        entry.items[1]
                        if isinstance(entry, Form) and len(entry.items) == 2 and isinstance(entry.items[1], Form)
                        else entry
                    )
                    for entry in entries
                )

    def bind(self, parameters: List[Tuple[Token, Token]]) -> Tuple[Parameter, ...]:
        """# Bind Schema Parameters."""
        # Reset variables.
        self.variables =    {}

        # Declare each parameter.
        for name, type_token in parameters:

            # Validate type.
            _check_type_(domain = self.domain, token = type_token)

            # Declare variable.
            self.variables[name.text] = type_token.text

        # Provide parameters.
        return tuple(Parameter(name.text, type_token.text) for name, type_token in parameters)


def _check_type_(
    domain: LiftedDomain,
    token:  Token
) -> None:
    """# Validate Type Reference."""
    for member in type_members(token.text):
        if member not in domain.type_parents(): raise UndeclaredTypeError(member, token.line, token.column)

def _ordering_is_empty_(
    expr:   Optional[SExpr]
) -> bool:
    """# Ordering Section is Empty (absent, `()` or `(and)`)?"""
    return expr is None or (isinstance(expr, Form) and (not expr.items or (expr.head() == "and" and len(expr.items) == 1)))

def _total_order_(
    section:    Form,
    ordering:   Optional[SExpr]
) -> List[int]:
    """# Linearize Labelled Subtasks.

    `:ordering` constraints `(< a b)` over subtask labels are accepted when they admit exactly one
    linear order.

    ## Args:
        * section   (Form):             `:subtasks` section.
        * ordering  (SExpr | None):     `:ordering` section, if any.

    ## Raises:
        * HDDLSyntaxError:          On a malformed constraint or an unknown label.
        * HDDLSemanticError:        On cyclic constraints.
        * UnsupportedFeatureError:  If more than one order is admitted.

    ## Returns:
        * List[int]:    Entry indices in execution order.
    """
    # Entries and their labels.
    entries:    Sequence[SExpr] =   section.items[1:] if section.head() == "and" else ((section,) if section.items else ())
    labels:     Dict[str, int] =    {
                                        entry.items[0].text: index for index, entry in enumerate(entries)
                                        if isinstance(entry, Form) and len(entry.items) == 2 and isinstance(entry.items[0], Token)
                                    }

    # Nothing to order.
    if _ordering_is_empty_(ordering):
        if len(entries) > 1:
            raise UnsupportedFeatureError("partially ordered subtasks (use :ordered-subtasks)", section.line, section.column)
        return list(range(len(entries)))

    # Collect predecessors.
    form:           Form =                  _form_(ordering, "ordering constraints")
    predecessors:   Dict[int, Set[int]] =   {index: set() for index in range(len(entries))}

    for constraint in (form.items[1:] if form.head() == "and" else (form,)):

        # Precedence pair.
        pair:   Form =  _form_(constraint, "ordering constraint (< a b)")
        if pair.head() != "<" or len(pair.items) != 3:
            raise HDDLSyntaxError("expected ordering constraint (< a b)", pair.line, pair.column)

        # Resolve labels.
        before, after = (_symbol_(item, "subtask label") for item in pair.items[1:])
        for label in (before, after):
            if label.text not in labels: raise HDDLSyntaxError(f"unknown subtask label '{label.text}'", label.line, label.column)

        predecessors[labels[after.text]].add(labels[before.text])

    # Walk the order, which must be forced at every step.
    sorter: TopologicalSorter = TopologicalSorter(predecessors)

    try:# Detect cycles.
        sorter.prepare()

    except CycleError:
        raise HDDLSemanticError("cyclic ordering constraints", form.line, form.column) from None

    order:  List[int] = []
    while sorter.is_active():

        # Exactly one subtask may come next.
        ready:  Tuple[int, ...] =   sorter.get_ready()
        if len(ready) != 1:
            raise UnsupportedFeatureError("partially ordered subtasks", form.line, form.column)

        order.append(ready[0])
        sorter.done(ready[0])

    # Provide order.
    return order

def _subtasks_(
    scope:  _Scope,
    values: Dict[str, SExpr]
) -> Tuple[TaskReference, ...]:
    """# Resolve Subtasks of a Method or `:htn` Block."""
    # Ordered subtasks.
    for key in ORDERED_SUBTASK_KEYS:
        if key in values: return scope.task_list(values[key])

    # Unordered subtasks are accepted when their ordering is total.
    for key in UNORDERED_SUBTASK_KEYS:

        # Section absent.
        if key not in values:   continue

        # Resolve subtasks.
        subtasks:   Tuple[TaskReference, ...] = scope.task_list(values[key])

        # Provide subtasks in execution order.
        return tuple(subtasks[index] for index in _total_order_(_form_(values[key], "task list"), values.get(":ordering")))

    # No subtasks.
    return ()

# DOMAIN ===========================================================================================

class _DomainReader():
    """# Domain Reader."""

    def read(self,
        define: Form
    ) -> LiftedDomain:
        """# Read Domain Definition."""
        # Extract name.
        name:       str =           _symbol_(define.items[1].items[1], "domain name").text

        # Partition sections.
        sections:   List[Form] =    [_form_(item, "domain section") for item in define.items[2:]]

        # Initialize declarations.
        domain:     LiftedDomain =  LiftedDomain(name = name)

        # First pass: declarations.
        for section in sections:

            # Dispatch on keyword.
            match section.head():

                case ":requirements":   domain = _replace_(domain, requirements = domain.requirements + _requirements_(section))
                case ":types":          domain = _replace_(domain, types = self._types_(section, domain.types))
                case ":constants":      domain = _replace_(domain, constants = domain.constants + self._constants_(section, domain))
                case ":predicates":     domain = _replace_(domain, predicates = domain.predicates + self._predicates_(section, domain))
                case ":functions":      self._functions_(section)
                case ":task":           domain = _replace_(domain, tasks = domain.tasks + (self._task_(section, domain),))
                case ":action" | ":method": pass
                case _:                 raise HDDLSyntaxError(
                                            f"unknown domain section '{section.head() or '?'}'", section.line, section.column
                                        )

        # Second pass: actions (methods reference them).
        actions:    Tuple[Action, ...] =    tuple(
                                                self._action_(section, domain)
                                                for section in sections if section.head() == ":action"
                                            )
        domain =                            _replace_(domain, actions = actions)

        # Third pass: methods.
        methods:    Tuple[Method, ...] =    tuple(
                                                self._method_(section, domain)
                                                for section in sections if section.head() == ":method"
                                            )

        # Provide domain.
        return _replace_(domain, methods = methods)

    def _types_(self,
        section:    Form,
        declared:   Tuple[Tuple[str, str], ...]
    ) -> Tuple[Tuple[str, str], ...]:
        """# Read Type Hierarchy."""
        # Initialize hierarchy with prior declarations.
        hierarchy:  Dict[str, str] =    dict(declared)

        # Record explicit declarations.
        for child, parent in _typed_list_(section.items[1:], variables = False):

            # The root is implicit.
            if child.text == ROOT_TYPE: continue

            # First declaration wins.
            hierarchy.setdefault(child.text, parent.text)

        # Parents used but never declared descend from the root.
        for parent in list(hierarchy.values()):
            if parent != ROOT_TYPE and parent not in hierarchy: hierarchy[parent] = ROOT_TYPE

        # Provide pairs in declaration order.
        return tuple(hierarchy.items())

    def _constants_(self,
        section:    Form,
        domain:     LiftedDomain
    ) -> Tuple[Parameter, ...]:
        """# Read Constants."""
        # Read typed names.
        pairs:  List[Tuple[Token, Token]] = _typed_list_(section.items[1:], variables = False)

        # Validate types.
        for _, type_token in pairs: _check_type_(domain = domain, token = type_token)

        # Provide constants.
        return tuple(Parameter(name.text, type_token.text) for name, type_token in pairs)

    def _predicates_(self,
        section:    Form,
        domain:     LiftedDomain
    ) -> Tuple[Predicate, ...]:
        """# Read Predicate Declarations."""
        # Initialize scope.
        scope:      _Scope =            _Scope(domain = domain)
        predicates: List[Predicate] =   []

        # Read each declaration.
        for item in section.items[1:]:

            # Declarations are forms.
            form:   Form =  _form_(item, "predicate declaration")
            name:   Token = _symbol_(form.items[0] if form.items else form, "predicate name")

            # Record predicate.
            predicates.append(Predicate(name.text, scope.bind(_typed_list_(form.items[1:], variables = True))))

        # Provide predicates.
        return tuple(predicates)

    def _functions_(self,
        section:    Form
    ) -> None:
        """# Validate Functions Section (only `total-cost`)."""
        for item in section.items[1:]:

            # Type annotations are fine.
            if isinstance(item, Token) and item.text in ("-", "number"):    continue

            # Only the total-cost function is supported.
            if not (isinstance(item, Form) and item.head() == "total-cost" and len(item.items) == 1):
                raise UnsupportedFeatureError("numeric fluents", item.line, item.column)

    def _task_(self,
        section:    Form,
        domain:     LiftedDomain
    ) -> CompoundTask:
        """# Read Compound Task Declaration."""
        # Read name and keywords.
        name:       Token =             _symbol_(section.items[1] if len(section.items) > 1 else section, "task name")
        values:     Dict[str, SExpr] =  _keywords_(section, 2, (":parameters",))

        # Provide task.
        return  CompoundTask(
                    name.text,
                    _Scope(domain = domain).bind(
                        _typed_list_(_form_(values.get(":parameters", Form(())), "parameter list").items, variables = True)
                    )
                )

    def _action_(self,
        section:    Form,
        domain:     LiftedDomain
    ) -> Action:
        """# Read Action."""
        # Read name and keywords.
        name:       Token =             _symbol_(section.items[1] if len(section.items) > 1 else section, "action name")
        values:     Dict[str, SExpr] =  _keywords_(section, 2, (":parameters", ":precondition", ":effect"))

        # Bind parameters.
        scope:      _Scope =            _Scope(domain = domain, objects = {c.name for c in domain.constants})
        parameters: Tuple[Parameter, ...] = scope.bind(
                                                _typed_list_(
                                                    _form_(values.get(":parameters", Form(())), "parameter list").items,
                                                    variables = True
                                                )
                                            )

        # Read effects.
        adds, deletes, cost =           self._effects_(values.get(":effect", Form(())), scope)

        # Provide action.
        return  Action(
                    name =              name.text,
                    parameters =        parameters,
                    precondition =      scope.literals(values.get(":precondition", Form(()))),
                    add_effects =       adds,
                    delete_effects =    deletes,
                    cost =              cost
                )

    def _effects_(self,
        expr:   SExpr,
        scope:  _Scope
    ) -> Tuple[Tuple[Atom, ...], Tuple[Atom, ...], int]:
        """# Read Effects.

        ## Returns:
            * Tuple:    Add atoms, delete atoms, operator cost.
        """
        # Initialize accumulators.
        adds:       List[Atom] =    []
        deletes:    List[Atom] =    []
        cost:       int =           1

        # Worklist over nested conjunctions.
        pending:    List[SExpr] =   [expr]
        while pending:

            # Effects are forms.
            form:       Form =  _form_(pending.pop(0), "effect")

            # Dispatch on connective.
            connective: str =   form.head()

            # Empty effect.
            if not form.items:                                  continue

            # Unsupported connectives.
            if connective in UNSUPPORTED_CONNECTIVES:
                raise UnsupportedFeatureError(UNSUPPORTED_CONNECTIVES[connective], form.line, form.column)

            # Conjunction (kept in source order).
            if connective == "and":                             pending[0:0] = list(form.items[1:]); continue

            # Action cost.
            if connective == "increase":                        cost = self._cost_(form); continue

            # Delete effect.
            if connective == "not":

                # Negation wraps one atom.
                if len(form.items) != 2: raise HDDLSyntaxError("expected '(not <atom>)'", form.line, form.column)

                # Record delete.
                deletes.append(scope.atom(_form_(form.items[1], "atom")))
                continue

            # Add effect.
            adds.append(scope.atom(form))

        # Provide effects.
        return tuple(adds), tuple(deletes), cost

    def _cost_(self,
        form:   Form
    ) -> int:
        """# Read `(increase (total-cost) N)`."""
        # Validate shape.
        if (
            len(form.items) != 3
            or not isinstance(form.items[1], Form)
            or form.items[1].head() != "total-cost"
            or not isinstance(form.items[2], Token)
            or not form.items[2].text.isdecimal()
        ):
            raise UnsupportedFeatureError("numeric effect other than (increase (total-cost) <n>)", form.line, form.column)

        # Provide cost.
        return int(form.items[2].text)

    def _method_(self,
        section:    Form,
        domain:     LiftedDomain
    ) -> Method:
        """# Read Method."""
        # Read name and keywords.
        name:       Token =             _symbol_(section.items[1] if len(section.items) > 1 else section, "method name")
        values:     Dict[str, SExpr] =  _keywords_(
                                            section, 2,
                                            (
                                                ":parameters", ":task", ":precondition", ":ordering", ":constraints",
                                                *ORDERED_SUBTASK_KEYS, *UNORDERED_SUBTASK_KEYS
                                            )
                                        )

        # The decomposed task is mandatory.
        if ":task" not in values: raise HDDLSyntaxError(f"method '{name.text}' has no :task", section.line, section.column)

        # Bind parameters.
        scope:      _Scope =            _Scope(domain = domain, objects = {c.name for c in domain.constants})
        parameters: Tuple[Parameter, ...] = scope.bind(
                                                _typed_list_(
                                                    _form_(values.get(":parameters", Form(())), "parameter list").items,
                                                    variables = True
                                                )
                                            )

        # Constraints are outside the subset.
        if not _ordering_is_empty_(values.get(":constraints")):
            raise UnsupportedFeatureError("method constraints", values[":constraints"].line, values[":constraints"].column)

        # Ordering over ordered subtasks is redundant only when empty.
        if any(key in values for key in ORDERED_SUBTASK_KEYS) and not _ordering_is_empty_(values.get(":ordering")):
            raise UnsupportedFeatureError("explicit ordering constraints", values[":ordering"].line, values[":ordering"].column)

        # Provide method.
        return  Method(
                    name =          name.text,
                    parameters =    parameters,
                    task =          scope.task(values[":task"], compound_only = True),
                    precondition =  scope.literals(values.get(":precondition", Form(()))),
                    subtasks =      _subtasks_(scope = scope, values = values)
                )

# PROBLEM ==========================================================================================

class _ProblemReader():
    """# Problem Reader."""

    def __init__(self,
        domain: LiftedDomain
    ):
        """# Instantiate Problem Reader.

        ## Args:
            * domain    (LiftedDomain): Domain problems are validated against.
        """
        self._domain_:  LiftedDomain =  domain

    def read(self,
        define: Form
    ) -> LiftedProblem:
        """# Read Problem Definition."""
        # Extract name.
        name:       str =               _symbol_(define.items[1].items[1], "problem name").text

        # Initialize scope over domain constants.
        scope:      _Scope =            _Scope(domain = self._domain_, objects = {c.name for c in self._domain_.constants})

        # Initialize fields.
        fields:     Dict[str, object] = {"name": name, "domain_name": self._domain_.name}

        # Read sections in order (objects precede their use).
        for item in define.items[2:]:

            # Sections are forms.
            section:    Form =  _form_(item, "problem section")

            # Dispatch on keyword.
            match section.head():

                case ":domain":         fields["domain_name"] = self._domain_name_(section)
                case ":requirements":   fields["requirements"] = _requirements_(section)
                case ":objects":        fields["objects"] = self._objects_(section, scope)
                case ":htn":            fields.update(self._htn_(section, scope))
                case ":init":           fields["init"] = self._init_(section, scope)
                case ":goal":           fields["goal"] = self._goal_(section, scope)
                case ":metric":         pass
                case _:                 raise HDDLSyntaxError(
                                            f"unknown problem section '{section.head() or '?'}'", section.line, section.column
                                        )

        # Provide problem.
        return LiftedProblem(**fields)

    def _domain_name_(self,
        section:    Form
    ) -> str:
        """# Validate Referenced Domain."""
        # Read name.
        name:   Token = _symbol_(section.items[1] if len(section.items) > 1 else section, "domain name")

        # Problem must target the parsed domain.
        if name.text != self._domain_.name:
            raise HDDLSemanticError(
                f"problem targets domain '{name.text}' but domain '{self._domain_.name}' was given", name.line, name.column
            )

        # Provide name.
        return name.text

    def _objects_(self,
        section:    Form,
        scope:      _Scope
    ) -> Tuple[Parameter, ...]:
        """# Read Objects."""
        # Initialize objects.
        objects:    List[Parameter] =   []

        # Declare each object.
        for name, type_token in _typed_list_(section.items[1:], variables = False):

            # Validate type.
            _check_type_(domain = self._domain_, token = type_token)

            # Skip duplicates.
            if name.text in scope.objects: continue

            # Declare object.
            scope.objects.add(name.text)
            objects.append(Parameter(name.text, type_token.text))

        # Provide objects.
        return tuple(objects)

    def _htn_(self,
        section:    Form,
        scope:      _Scope
    ) -> Dict[str, object]:
        """# Read Initial Task Network."""
        # Read keywords.
        values:     Dict[str, SExpr] =      _keywords_(
                                                section, 1,
                                                (":parameters", ":ordering", ":constraints", *ORDERED_SUBTASK_KEYS, *UNORDERED_SUBTASK_KEYS)
                                            )

        # Bind network variables.
        parameters: Tuple[Parameter, ...] = scope.bind(
                                                _typed_list_(
                                                    _form_(values.get(":parameters", Form(())), "parameter list").items,
                                                    variables = True
                                                )
                                            )

        # Constraints are outside the subset.
        if not _ordering_is_empty_(values.get(":constraints")):
            raise UnsupportedFeatureError("task network constraints", values[":constraints"].line, values[":constraints"].column)

        # Provide network.
        return  {
                    "initial_network":      _subtasks_(scope = scope, values = values),
                    "network_parameters":   parameters
                }

    def _init_(self,
        section:    Form,
        scope:      _Scope
    ) -> Tuple[Atom, ...]:
        """# Read Initial State."""
        # Initialize atoms.
        atoms:  List[Atom] =    []

        # Read each atom.
        for item in section.items[1:]:

            # Atoms are forms.
            form:   Form =  _form_(item, "initial atom")

            # Numeric initialization of total-cost is accepted and ignored.
            if form.head() == "=" and len(form.items) == 3 and isinstance(form.items[1], Form): continue

            # Negative literals are implicit.
            if form.head() == "not": raise UnsupportedFeatureError("negative initial atom", form.line, form.column)

            # Record atom (duplicates collapse).
            atom:   Atom =  scope.atom(form)
            if atom not in atoms: atoms.append(atom)

        # Provide atoms.
        return tuple(atoms)

    def _goal_(self,
        section:    Form,
        scope:      _Scope
    ) -> Tuple[Atom, ...]:
        """# Read Goal."""
        # Empty goal section.
        if len(section.items) < 2: return ()

        # Read literals.
        literals:   Tuple[Literal, ...] =   scope.literals(section.items[1])

        # Goals are positive atoms.
        for literal in literals:
            if not literal.positive or literal.atom.predicate == "=":
                raise UnsupportedFeatureError("negative or equality goal", section.line, section.column)

        # Provide atoms.
        return tuple(dict.fromkeys(literal.atom for literal in literals))


def _replace_(
    domain: LiftedDomain,
    **changes
) -> LiftedDomain:
    """# Replace Domain Fields."""
    return replace(domain, **changes)
