"""Exception hierarchy shared by every module.

Each class carries a short ``code`` so the command line can print a single
machine-parsable reason and pick an exit status.
"""


class LpmError(Exception):
    code = "error"


class InvalidPresentation(LpmError, ValueError):
    code = "invalid-presentation"


class NotPartConstant(LpmError, ValueError):
    """Two columns of one part have different neighbourhoods."""

    code = "not-part-constant"

    def __init__(self, x: int, y: int):
        super().__init__(f"columns {x} and {y} lie in one part but have different neighbours")
        self.columns = (x, y)


class NotLatticePath(LpmError):
    """The matroid has no interval presentation in the given ground-set order.

    ``witness`` is an r-subset that is a basis of exactly one of the matroid
    and the candidate interval presentation.
    """

    code = "not-lattice-path"

    def __init__(self, witness: tuple[int, ...], message: str = ""):
        super().__init__(message or f"basis families differ at {list(witness)}")
        self.witness = witness


class ScaleLimitError(LpmError):
    code = "scale-limit"


class FieldError(LpmError, ValueError):
    code = "field-error"


class PrimeRangeError(FieldError):
    code = "prime-range"


class DimensionMismatch(LpmError, ValueError):
    code = "dimension-mismatch"


class SharingError(LpmError, ValueError):
    code = "sharing-error"


class UnqualifiedSet(SharingError):
    code = "unqualified"


class QualifiedSet(SharingError):
    code = "qualified"
