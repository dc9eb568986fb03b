"""Exception hierarchy shared by the primtree modules."""


class PrimtreeError(Exception):
    """Base class for all library errors."""


class LensError(PrimtreeError, ValueError):
    pass


class CorridorError(PrimtreeError, ValueError):
    pass


class AdjacentEndpoints(CorridorError):
    pass


class NoPath(CorridorError):
    pass


class NotUnique(CorridorError):
    pass


class StructureMismatch(PrimtreeError, ValueError):
    def __init__(self, message, report=()):
        super().__init__(message)
        self.report = list(report)


class AutomorphismError(PrimtreeError, ValueError):
    pass


class NotBijective(AutomorphismError):
    pass


class NotAdjacencyPreserving(AutomorphismError):
    pass


class LabelViolation(AutomorphismError):
    pass


class ImpossibleInput(PrimtreeError, ValueError):
    pass


class SurgeryError(PrimtreeError, ValueError):
    pass


class PreconditionLoops(SurgeryError):
    pass


class EmptyPattern(SurgeryError):
    pass
