"""# stratagem.grounding

Grounder and grounded, bitset-indexed model.
"""

__all__ =   [
                # Model.
                "bits_of",
                "Fact",
                "fact_holds",
                "fact_name",
                "GroundCompoundTask",
                "GroundedModel",
                "GroundMethod",
                "GroundOperator",
                "ids_of",
                "parse_fact_name",
                "PRECONDITION_PREFIX",
                "state_explicit_repr",

                # Grounding.
                "dump_model",
                "ground",
                "Grounder",
                "GroundingOptions",

                # Errors.
                "GroundingError",
                "GroundingLimitError",
                "TriviallyUnsolvableError"
            ]

from stratagem.grounding.dump       import dump_model
from stratagem.grounding.exceptions import *
from stratagem.grounding.grounder   import ground, Grounder, GroundingOptions
from stratagem.grounding.model      import *
