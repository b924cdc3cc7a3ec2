class WorkbenchError(Exception):
    """Base class of every error raised by the workbench."""


class DimensionError(WorkbenchError, ValueError):
    pass


class HypothesisViolationError(WorkbenchError, ValueError):
    pass


class InconsistentRecordError(WorkbenchError, ValueError):
    pass


class RuleNotCoveredError(WorkbenchError, ValueError):
    pass


class PreconditionError(WorkbenchError, ValueError):
    pass


class StateError(WorkbenchError, ValueError):
    pass


class AdjunctionError(WorkbenchError, ValueError):
    pass


class NonIntegralGenusError(WorkbenchError, ValueError):
    pass


class UnsupportedArityError(WorkbenchError, ValueError):
    pass


class NotCloseableError(WorkbenchError, ValueError):
    pass


class AdjacencyError(WorkbenchError, ValueError):
    pass


class ManifestError(WorkbenchError, ValueError):
    pass


class CannotCertifyError(WorkbenchError, RuntimeError):
    pass


class ScheduleError(WorkbenchError, RuntimeError):
    pass


class AssemblyError(WorkbenchError, RuntimeError):
    pass


class ChainError(WorkbenchError, RuntimeError):
    def __init__(self, step: int, reason: str) -> None:
        self.step = step
        super().__init__(f"Surgery chain aborted at step {step}: {reason}")
