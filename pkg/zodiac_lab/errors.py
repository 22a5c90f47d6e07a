"""Exception hierarchy for ZodiacLab.

The CLI maps these onto its exit-code contract:
ConfigError -> 2, OSError -> 3, TrainingDivergenceError -> 4.
"""


class ZodiacLabError(Exception):
    """Base class for all errors raised by the zodiac_lab package."""


class ConfigError(ZodiacLabError, ValueError):
    """Invalid or unparsable experiment configuration.

    Args:
        field: Dotted path of the offending field (e.g. 'generation.seed'),
            or a 'file:line:column' anchor for syntax errors
        message: Human-readable description of the problem
    """

    def __init__(self, field: str, message: str):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")


class LexiconError(ZodiacLabError, ValueError):
    """The trait lexicon or assignment table is corrupted."""


class GenerationError(ZodiacLabError, ValueError):
    """The synthetic population cannot be generated or parsed."""


class FeatureSchemaError(ZodiacLabError, ValueError):
    """Feature matrix width or schema does not match what was expected."""


class EvaluationError(ZodiacLabError, ValueError):
    """Invalid inputs to an evaluation routine."""


class TrainingDivergenceError(ZodiacLabError, ArithmeticError):
    """Training produced a non-finite loss.

    Args:
        model_kind: Which model family diverged ('logreg' or 'mlp')
        epoch: Epoch at which the non-finite loss was observed
    """

    def __init__(self, model_kind: str, epoch: int):
        self.model_kind = model_kind
        self.epoch = epoch
        super().__init__(
            f"{model_kind} training diverged at epoch {epoch} "
            f"(non-finite loss; try a smaller learning_rate)"
        )

    def __reduce__(self):
        return type(self), (self.model_kind, self.epoch)
