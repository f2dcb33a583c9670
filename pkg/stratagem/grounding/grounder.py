"""# stratagem.grounding.grounder

Instantiates a lifted HDDL problem into a :class:`GroundedModel`.

Grounding proceeds in phases:
    1. Typed instantiation of actions and methods by backtracking over parameter bindings; equality
       literals and literals over static predicates are checked as soon as their variables are
       bound.
    2. Negative preconditions are compiled into complement facts (rendered `-name`), maintained by
       the effects of every operator that touches the underlying atom.
    3. Delete-relaxed reachability from the initial state prunes operators and methods whose
       preconditions can never hold.
    4. Fact-level static stripping: facts true initially and never deleted are removed from
       preconditions, facts false initially and never added make their users inapplicable.
    5. Method preconditions that survive become zero-cost `__mprec_<method>` operators prepended
       to the method's subtasks.
    6. Compound tasks without any finite decomposition are pruned bottom-up, then everything not
       reachable from the initial task network is pruned top-down.
    7. Ids are assigned in canonical-name order so that output is reproducible.
"""

__all__ =   [
                "ground",
                "Grounder",
                "GroundingOptions"
            ]

from collections                    import defaultdict, deque
from dataclasses                    import dataclass, field, replace
from logging                        import Logger
from typing                         import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from stratagem.grounding.exceptions import GroundingLimitError, TriviallyUnsolvableError
from stratagem.grounding.model      import *
from stratagem.hddl                 import *
from stratagem.utilities            import get_child

# A fact key is the canonical atom name plus its polarity (False for complement facts).
Key =           Tuple[str, bool]

# Synthetic compound task wrapping an `:htn` block that carries parameters.
TOP_TASK:   str =   "__top"

@dataclass(frozen = True)
class GroundingOptions():
    r"""# :class:`GroundingOptions`

    ## Properties:
    * :param:`strip_static`         (bool): Strip statically true/false facts. Defaults to True.
    * :param:`prune_relaxed`        (bool): Prune by delete-relaxed reachability. Defaults to True.
    * :param:`instantiation_cap`    (int):  Maximum instantiated atoms plus operators and methods.
                                            Defaults to 5,000,000.
    """
    strip_static:       bool =  True
    prune_relaxed:      bool =  True
    instantiation_cap:  int =   5_000_000


@dataclass
class _Primitive():
    """# Operator Under Construction."""
    name:       str
    schema:     str
    arguments:  Tuple[str, ...]
    cost:       int
    pre:        Set[Key]
    add:        Set[Key] =  field(default_factory = set)
    delete:     Set[Key] =  field(default_factory = set)


@dataclass
class _Decomposition():
    """# Method Under Construction."""
    name:       str
    schema:     str
    arguments:  Tuple[str, ...]
    task:       str
    subtasks:   List[str]
    pre:        Set[Key]


class Grounder():
    """# HDDL Grounder."""

    def __init__(self,
        domain:     LiftedDomain,
        problem:    LiftedProblem,
        options:    GroundingOptions =  GroundingOptions()
    ):
        """# Instantiate Grounder.

        ## Args:
            * domain    (LiftedDomain):     Parsed domain.
            * problem   (LiftedProblem):    Parsed problem, validated against the domain.
            * options   (GroundingOptions): Pruning switches and instantiation cap.
        """
        # Initialize logger.
        self.__logger__:    Logger =            get_child("grounder")

        # Wrap a parameterized initial network in a synthetic task.
        domain, problem =                       self._wrap_network_(domain = domain, problem = problem)

        # Define properties.
        self._domain_:      LiftedDomain =      domain
        self._problem_:     LiftedProblem =     problem
        self._options_:     GroundingOptions =  options
        self._count_:       int =               0

        # Universe of objects, constants first.
        self._objects_:     Dict[str, str] =    {}
        for obj in (*domain.constants, *problem.objects): self._objects_.setdefault(obj.name, obj.type)

        # Initial atoms by canonical name.
        self._init_:        Set[str] =          {fact_name(a.predicate, a.arguments) for a in problem.init}

        # Predicates no action changes.
        self._static_:      Set[str] =          {p.name for p in domain.predicates} - {
                                                    atom.predicate
                                                    for action in domain.actions
                                                    for atom in (*action.add_effects, *action.delete_effects)
                                                }

        # Objects per type, memoized.
        self._typed_:       Dict[str, Tuple[str, ...]] =    {}

        # Log configuration.
        self.__logger__.debug(f"Initialized grounder for {problem.name} ({options})")

    # METHODS ======================================================================================

    def ground(self) -> GroundedModel:
        """# Ground Problem.

        ## Raises:
            * TriviallyUnsolvableError: Initial network references a pruned task.
            * GroundingLimitError:      Instantiation cap exceeded.

        ## Returns:
            * GroundedModel:    Grounded model.
        """
        # Instantiate schemas.
        primitives:     List[_Primitive] =      self._instantiate_actions_()
        decompositions: List[_Decomposition] =  self._instantiate_methods_()

        # Compile negative preconditions.
        init_keys:      Set[Key] =              self._compile_negations_(primitives = primitives, decompositions = decompositions)
        goal_keys:      Set[Key] =              {(fact_name(a.predicate, a.arguments), True) for a in self._problem_.goal}

        # Relaxed reachability.
        if self._options_.prune_relaxed:
            primitives, decompositions =        self._prune_relaxed_(primitives, decompositions, init_keys)

        # Static stripping.
        if self._options_.strip_static:
            primitives, decompositions, goal_keys = self._strip_static_(primitives, decompositions, init_keys, goal_keys)

        # Compile remaining method preconditions.
        primitives =                            primitives + self._compile_method_preconditions_(decompositions)

        # Prune hierarchy.
        operators, tasks, methods, network =    self._prune_hierarchy_(primitives, decompositions)

        # Assign ids and assemble.
        model:          GroundedModel =         self._assemble_(operators, tasks, methods, network, init_keys, goal_keys)

        # Log summary.
        self.__logger__.info(
            f"Grounded {model.name}: " + ", ".join(f"{k}={v}" for k, v in model.statistics().items())
        )

        # Provide model.
        return model

    # HELPERS ======================================================================================

    def _tick_(self, amount: int = 1) -> None:
        """# Count Instantiations Against the Cap."""
        # Accumulate.
        self._count_ += amount

        # Enforce cap.
        if self._count_ > self._options_.instantiation_cap:
            raise GroundingLimitError(count = self._count_, cap = self._options_.instantiation_cap)

    def _wrap_network_(self,
        domain:     LiftedDomain,
        problem:    LiftedProblem
    ) -> Tuple[LiftedDomain, LiftedProblem]:
        """# Wrap Parameterized Initial Network.

        An `:htn` block with variables becomes the single method of a synthetic top task, so that
        the variables are bound like method parameters.
        """
        # Ground networks need no wrapping.
        if not problem.network_parameters: return domain, problem

        # Declare top task and its method.
        top:    TaskReference = TaskReference(TOP_TASK)
        domain =                replace(
                                    domain,
                                    tasks =     domain.tasks + (CompoundTask(TOP_TASK),),
                                    methods =   domain.methods + (
                                                    Method(
                                                        name =          TOP_TASK,
                                                        parameters =    problem.network_parameters,
                                                        task =          top,
                                                        subtasks =      problem.initial_network
                                                    ),
                                                )
                                )

        # Replace network.
        return domain, replace(problem, initial_network = (top,), network_parameters = ())

    def _objects_of_(self, type_name: str) -> Tuple[str, ...]:
        """# Objects of a Type (subtypes included), in declaration order."""
        # Compute once per type.
        if type_name not in self._typed_:
            self._typed_[type_name] =   tuple(
                                            name for name, declared in self._objects_.items()
                                            if self._domain_.is_subtype(declared, type_name)
                                        )

        # Provide objects.
        return self._typed_[type_name]

    def _bindings_(self,
        parameters: Sequence[Parameter],
        literals:   Sequence[Literal]
    ) -> Iterator[Dict[str, str]]:
        """# Enumerate Parameter Bindings.

        Equality literals and literals over static predicates are checked as soon as their last
        variable is bound.

        ## Args:
            * parameters    (Sequence[Parameter]):  Schema parameters.
            * literals      (Sequence[Literal]):    Schema precondition.

        ## Yields:
            * Dict[str, str]:   Variable to object.
        """
        # Index parameters.
        position:   Dict[str, int] =            {p.name: i for i, p in enumerate(parameters)}

        # Schedule checkable literals after their last variable.
        checks:     List[List[Literal]] =       [[] for _ in range(len(parameters) + 1)]
        for literal in literals:

            # Only equality and static predicates can be decided now.
            if literal.atom.predicate != "=" and literal.atom.predicate not in self._static_: continue

            # Schedule after the last bound variable (slot 0 holds variable-free literals).
            checks[max((position[a] + 1 for a in literal.atom.arguments if a in position), default = 0)].append(literal)

        # Variable-free literals.
        if not all(self._holds_(literal, {}) for literal in checks[0]): return

        # Backtrack.
        yield from self._extend_(parameters, checks, {}, 0)

    def _extend_(self,
        parameters: Sequence[Parameter],
        checks:     List[List[Literal]],
        binding:    Dict[str, str],
        index:      int
    ) -> Iterator[Dict[str, str]]:
        """# Extend Partial Binding."""
        # Complete binding.
        if index == len(parameters):
            yield dict(binding)
            return

        # Try each object of the parameter type.
        for obj in self._objects_of_(parameters[index].type):

            # Bind.
            binding[parameters[index].name] =   obj

            # Recurse when the newly decidable literals hold.
            if all(self._holds_(literal, binding) for literal in checks[index + 1]):
                yield from self._extend_(parameters, checks, binding, index + 1)

        # Unbind.
        binding.pop(parameters[index].name, None)

    def _holds_(self, literal: Literal, binding: Dict[str, str]) -> bool:
        """# Decide Equality or Static Literal Under Binding."""
        # Substitute arguments.
        arguments:  Tuple[str, ...] =   tuple(binding.get(a, a) for a in literal.atom.arguments)

        # Equality or initial-state membership.
        truth:      bool =              (
                                            arguments[0] == arguments[1]
                                            if literal.atom.predicate == "="
                                            else fact_name(literal.atom.predicate, arguments) in self._init_
                                        )

        # Apply polarity.
        return truth == literal.positive

    def _keys_(self, literals: Sequence[Literal], binding: Dict[str, str]) -> Set[Key]:
        """# Ground Precondition Keys (equality excluded)."""
        return  {
                    (fact_name(l.atom.predicate, tuple(binding.get(a, a) for a in l.atom.arguments)), l.positive)
                    for l in literals if l.atom.predicate != "="
                }

    def _instantiate_actions_(self) -> List[_Primitive]:
        """# Instantiate Actions."""
        # Initialize operators.
        primitives: List[_Primitive] =  []

        # For each schema and binding...
        for action in self._domain_.actions:
            for binding in self._bindings_(action.parameters, action.precondition):

                # Count instantiation.
                self._tick_()

                # Ground arguments and effects.
                arguments:  Tuple[str, ...] =   tuple(binding[p.name] for p in action.parameters)
                adds:       Set[str] =          {fact_name(a.predicate, tuple(binding.get(x, x) for x in a.arguments)) for a in action.add_effects}
                deletes:    Set[str] =          {fact_name(a.predicate, tuple(binding.get(x, x) for x in a.arguments)) for a in action.delete_effects}

                # Record operator; an atom both added and deleted ends up true.
                primitives.append(
                    _Primitive(
                        name =      fact_name(action.name, arguments),
                        schema =    action.name,
                        arguments = arguments,
                        cost =      action.cost,
                        pre =       self._keys_(action.precondition, binding),
                        add =       {(a, True) for a in adds},
                        delete =    {(d, True) for d in deletes - adds}
                    )
                )

        # Log count.
        self.__logger__.debug(f"Instantiated {len(primitives)} operators")

        # Provide operators.
        return primitives

    def _instantiate_methods_(self) -> List[_Decomposition]:
        """# Instantiate Methods."""
        # Initialize methods.
        decompositions: List[_Decomposition] =  []

        # For each schema and binding...
        for method in self._domain_.methods:
            for binding in self._bindings_(method.parameters, method.precondition):

                # Count instantiation.
                self._tick_()

                # Substitute references.
                def name_of(reference: TaskReference) -> str:
                    return fact_name(reference.name, tuple(binding.get(a, a) for a in reference.arguments))

                # Record method.
                decompositions.append(
                    _Decomposition(
                        name =      fact_name(method.name, tuple(binding[p.name] for p in method.parameters)),
                        schema =    method.name,
                        arguments = tuple(binding[p.name] for p in method.parameters),
                        task =      name_of(method.task),
                        subtasks =  [name_of(subtask) for subtask in method.subtasks],
                        pre =       self._keys_(method.precondition, binding)
                    )
                )

        # Log count.
        self.__logger__.debug(f"Instantiated {len(decompositions)} methods")

        # Provide methods.
        return decompositions

    def _compile_negations_(self,
        primitives:     List[_Primitive],
        decompositions: List[_Decomposition]
    ) -> Set[Key]:
        """# Compile Negative Preconditions Into Complement Facts.

        ## Returns:
            * Set[Key]: Initial state over positive and complement keys.
        """
        # Atoms required false somewhere.
        negated:    Set[str] =  {
                                    name
                                    for item in (*primitives, *decompositions)
                                    for name, positive in item.pre if not positive
                                }

        # Complements follow their atoms.
        for primitive in primitives:

            # Atoms added or deleted by this operator.
            added:      Set[str] =  {name for name, _ in primitive.add}
            deleted:    Set[str] =  {name for name, _ in primitive.delete}

            # Maintain complements.
            primitive.delete |=     {(name, False) for name in added & negated}
            primitive.add |=        {(name, False) for name in deleted & negated}

        # Initial state over both polarities.
        init_keys:  Set[Key] =  {(name, True) for name in self._init_} | {(name, False) for name in negated - self._init_}

        # Count atoms.
        self._tick_(len(self._init_) + len(negated))

        # Provide initial state.
        return init_keys

    def _prune_relaxed_(self,
        primitives:     List[_Primitive],
        decompositions: List[_Decomposition],
        init_keys:      Set[Key]
    ) -> Tuple[List[_Primitive], List[_Decomposition]]:
        """# Delete-Relaxed Reachability Pruning."""
        # Index operators by precondition key.
        watchers:   Dict[Key, List[int]] =  defaultdict(list)
        missing:    List[int] =             []
        for i, primitive in enumerate(primitives):

            # Count unmet preconditions.
            missing.append(len(primitive.pre))
            for key in primitive.pre: watchers[key].append(i)

        # Seed with the initial state and precondition-free operators.
        reached:    Set[Key] =              set(init_keys)
        queue:      deque =                 deque(init_keys)
        fired:      Set[int] =              set()

        # Fire operator.
        def fire(i: int) -> None:
            fired.add(i)
            for key in primitives[i].add:
                if key not in reached: reached.add(key); queue.append(key)

        # Precondition-free operators fire immediately.
        for i, count in enumerate(missing):
            if count == 0: fire(i)

        # Propagate.
        while queue:
            for i in watchers.get(queue.popleft(), ()):

                # One precondition fewer.
                missing[i] -= 1
                if missing[i] == 0: fire(i)

        # Log pruning.
        self.__logger__.debug(f"Relaxed reachability kept {len(fired)}/{len(primitives)} operators")

        # Keep reachable items.
        return  (
                    [p for i, p in enumerate(primitives) if i in fired],
                    [d for d in decompositions if d.pre <= reached]
                )

    def _strip_static_(self,
        primitives:     List[_Primitive],
        decompositions: List[_Decomposition],
        init_keys:      Set[Key],
        goal_keys:      Set[Key]
    ) -> Tuple[List[_Primitive], List[_Decomposition], Set[Key]]:
        """# Strip Statically True and False Facts."""
        # Iterate until no operator is dropped.
        while True:

            # Effects of surviving operators.
            added:      Set[Key] =          {key for p in primitives for key in p.add}
            deleted:    Set[Key] =          {key for p in primitives for key in p.delete}

            # Classify.
            always:     Set[Key] =          {key for key in init_keys if key not in deleted}
            def never(key: Key) -> bool:    return key not in init_keys and key not in added

            # Simplify operators.
            kept:       List[_Primitive] =  [
                                                replace(p, pre = p.pre - always, add = p.add - always, delete = {k for k in p.delete if not never(k)})
                                                for p in primitives if not any(never(key) for key in p.pre)
                                            ]

            # Stable.
            if len(kept) == len(primitives):    primitives = kept; break

            # Repeat with fewer operators.
            primitives =                    kept

        # Simplify methods.
        decompositions =    [
                                replace(d, pre = d.pre - always)
                                for d in decompositions if not any(never(key) for key in d.pre)
                            ]

        # Always-true goals are satisfied everywhere.
        goal_keys =         goal_keys - always

        # Log stripping.
        self.__logger__.debug(f"Static stripping removed {len(always)} always-true facts")

        # Provide simplified items.
        return primitives, decompositions, goal_keys

    def _compile_method_preconditions_(self,
        decompositions: List[_Decomposition]
    ) -> List[_Primitive]:
        """# Compile Method Preconditions Into Check Operators.

        Each method with a remaining precondition gets a zero-cost `__mprec_<method>` operator
        without effects, prepended to its subtasks.
        """
        # Initialize checks.
        checks: List[_Primitive] =  []

        # For each method with a precondition...
        for decomposition in decompositions:

            # Nothing to check.
            if not decomposition.pre: continue

            # Declare check operator.
            check:  _Primitive =    _Primitive(
                                        name =      f"{PRECONDITION_PREFIX}{decomposition.name}",
                                        schema =    f"{PRECONDITION_PREFIX}{decomposition.schema}",
                                        arguments = decomposition.arguments,
                                        cost =      0,
                                        pre =       set(decomposition.pre)
                                    )

            # Prepend.
            decomposition.subtasks =    [check.name, *decomposition.subtasks]
            checks.append(check)

        # Provide checks.
        return checks

    def _prune_hierarchy_(self,
        primitives:     List[_Primitive],
        decompositions: List[_Decomposition]
    ) -> Tuple[List[_Primitive], List[str], List[_Decomposition], List[str]]:
        """# Productivity and Top-Down Reachability Pruning.

        ## Returns:
            * Tuple:    Operators, compound task names, methods, initial network names.
        """
        # Initial network by canonical name.
        network:    List[str] =                     [
                                                        fact_name(t.name, t.arguments)
                                                        for t in self._problem_.initial_network
                                                    ]

        # Primitives are productive.
        operators:  Dict[str, _Primitive] =         {p.name: p for p in primitives}
        productive: Set[str] =                      set(operators)

        # Bottom-up: a task is productive once a method has only productive subtasks.
        missing:    List[int] =                     []
        watchers:   Dict[str, List[int]] =          defaultdict(list)
        queue:      deque =                         deque()
        for i, decomposition in enumerate(decompositions):

            # Count unproductive subtasks.
            pending:    Set[str] =  set(decomposition.subtasks) - productive
            missing.append(len(pending))
            for name in pending: watchers[name].append(i)

            # Immediately usable.
            if not pending: queue.append(i)

        # Propagate.
        while queue:

            # Method became usable.
            task:   str =   decompositions[queue.popleft()].task
            if task in productive: continue

            # Task becomes productive.
            productive.add(task)
            for i in watchers.get(task, ()):
                missing[i] -= 1
                if missing[i] == 0: queue.append(i)

        # Usable methods by task.
        usable:     Dict[str, List[_Decomposition]] =   defaultdict(list)
        for i, decomposition in enumerate(decompositions):
            if missing[i] == 0: usable[decomposition.task].append(decomposition)

        # Every initial task must be productive.
        for name in network:
            if name not in productive: raise TriviallyUnsolvableError(task = name)

        # Top-down reachability.
        reachable:  Set[str] =                      set(network)
        frontier:   deque =                         deque(network)
        while frontier:
            for decomposition in usable.get(frontier.popleft(), ()):
                for name in decomposition.subtasks:
                    if name not in reachable: reachable.add(name); frontier.append(name)

        # Provide pruned hierarchy.
        return  (
                    [operators[name] for name in reachable if name in operators],
                    [name for name in reachable if name not in operators],
                    [d for name in reachable for d in usable.get(name, ())],
                    network
                )

    def _assemble_(self,
        primitives:     List[_Primitive],
        tasks:          List[str],
        decompositions: List[_Decomposition],
        network:        List[str],
        init_keys:      Set[Key],
        goal_keys:      Set[Key]
    ) -> GroundedModel:
        """# Assign Ids and Build Model."""
        # Facts referenced by operators and goals; without stripping, every initial atom too.
        keys:           Set[Key] =          {key for p in primitives for key in (*p.pre, *p.add, *p.delete)} | goal_keys
        if not self._options_.strip_static: keys |= {key for key in init_keys if key[1]}

        # Canonical order: name, then positive before complement.
        ordered:        List[Key] =         sorted(keys, key = lambda key: (key[0], not key[1]))
        fact_ids:       Dict[Key, int] =    {key: i for i, key in enumerate(ordered)}
        self._tick_(len(ordered))

        # Bitset of keys.
        def bitset(items: Set[Key]) -> int: return bits_of(fact_ids[key] for key in items)

        # Operators in name order, compound tasks after them.
        primitives =                        sorted(primitives, key = lambda p: p.name)
        tasks =                             sorted(tasks)
        refs:           Dict[str, int] =    {p.name: i for i, p in enumerate(primitives)}
        refs.update({name: len(primitives) + i for i, name in enumerate(tasks)})

        # Methods in name order.
        decompositions =                    sorted(decompositions, key = lambda d: d.name)
        methods:        Tuple[GroundMethod, ...] =  tuple(
                                                        GroundMethod(
                                                            id =            i,
                                                            name =          d.name,
                                                            task_id =       refs[d.task],
                                                            subtask_ids =   tuple(refs[s] for s in d.subtasks)
                                                        )
                                                        for i, d in enumerate(decompositions)
                                                    )

        # Methods per task.
        by_task:        Dict[int, List[int]] =  defaultdict(list)
        for method in methods: by_task[method.task_id].append(method.id)

        # Provide model.
        return  GroundedModel(
                    facts =             tuple(Fact(i, name, positive) for i, (name, positive) in enumerate(ordered)),
                    operators =         tuple(
                                            GroundOperator(
                                                id =        i,
                                                name =      p.name,
                                                cost =      p.cost,
                                                pre =       bitset(p.pre),
                                                add =       bitset(p.add),
                                                delete =    bitset(p.delete),
                                                schema =    p.schema,
                                                arguments = p.arguments
                                            )
                                            for i, p in enumerate(primitives)
                                        ),
                    compound_tasks =    tuple(
                                            GroundCompoundTask(refs[name], name, tuple(by_task[refs[name]]))
                                            for name in tasks
                                        ),
                    methods =           methods,
                    initial_state =     bitset(init_keys & keys),
                    goals =             bitset(goal_keys),
                    initial_network =   tuple(refs[name] for name in network),
                    name =              self._problem_.name
                )


def ground(
    domain:     LiftedDomain,
    problem:    LiftedProblem,
    options:    Optional[GroundingOptions] =    None
) -> GroundedModel:
    """# Ground Problem.

    ## Args:
        * domain    (LiftedDomain):     Parsed domain.
        * problem   (LiftedProblem):    Parsed problem.
        * options   (GroundingOptions): Grounding switches. Defaults to :class:`GroundingOptions`.

    ## Raises:
        * TriviallyUnsolvableError: Initial network references a pruned task.
        * GroundingLimitError:      Instantiation cap exceeded.

    ## Returns:
        * GroundedModel:    Grounded model.
    """
    return Grounder(domain = domain, problem = problem, options = options or GroundingOptions()).ground()
