"""# stratagem.pipeline

Heuristic generation pipeline: prompt assembly, provider clients, candidate classification and
storage, selection on the training problem, and the refinement prompt.
"""

__all__ =   [
                # Prompts.
                "build_prompt",
                "build_refinement_prompt",
                "HintBlock",
                "HINTS_INTRODUCTION",
                "load_hints",
                "PromptSpec",

                # Providers.
                "HttpProvider",
                "load_provider_config",
                "MockProvider",
                "parse_provider",
                "Provider",
                "ProviderConfig",
                "ProviderResponse",
                "request_candidates",

                # Candidates.
                "CandidateId",
                "CandidateRecord",
                "CandidateStatus",
                "CandidateStore",
                "classify_response",
                "extract_response",
                "status_counts",

                # Selection.
                "CRITERION",
                "evaluate_candidate",
                "evaluate_candidates",
                "select",
                "SelectionConfig",
                "SelectionRecord",

                # Errors.
                "CandidateStoreError",
                "PipelineError",
                "ProviderConfigError",
                "TransportError"
            ]

from stratagem.pipeline.candidates  import *
from stratagem.pipeline.exceptions  import *
from stratagem.pipeline.hints       import HintBlock, load_hints
from stratagem.pipeline.prompt      import build_prompt, HINTS_INTRODUCTION, PromptSpec
from stratagem.pipeline.provider    import *
from stratagem.pipeline.refinement  import build_refinement_prompt
from stratagem.pipeline.selection   import *
