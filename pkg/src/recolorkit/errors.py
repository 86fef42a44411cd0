"""Exception hierarchy.

Every error raised on purpose by the package derives from ``RecolorError`` so
callers (the CLI in particular) can map families of failures to exit codes.
"""


class RecolorError(Exception):
    pass


class ParameterError(RecolorError, ValueError):
    pass


class FormatError(RecolorError, ValueError):
    pass


class SizeLimit(RecolorError):
    pass


class NotInClass(RecolorError):
    """The input graph is not (P2+P3, C4)-free, or violates a class definition."""


class NotConnected(RecolorError):
    pass


class InternalError(RecolorError, AssertionError):
    """An invariant of the class that should always hold was violated."""


class PropertyViolation(InternalError):
    def __init__(self, name, detail=""):
        self.name = name
        super().__init__(f"{name}: {detail}" if detail else name)


class DecompositionFailure(InternalError):
    pass


class BudgetExceeded(InternalError):
    pass


class ComparablePairPresent(RecolorError):
    pass


class ClassMismatch(RecolorError):
    pass


class NoSpareColor(RecolorError):
    pass


class ThresholdTooLow(RecolorError):
    pass


class NotP3Free(RecolorError):
    pass


class NotChordal(RecolorError):
    pass


class NotThreeK1Free(RecolorError):
    pass


class NotComparable(RecolorError):
    pass


class PaletteClash(RecolorError):
    pass


class NotEmbeddable(RecolorError):
    pass


class NotExceptional(RecolorError):
    pass


class NotMixingAtEll(RecolorError):
    """The graph is not recolorable and ell is below the degeneracy threshold."""
