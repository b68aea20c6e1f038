"""Exception hierarchy shared by all modules."""


class StrataError(ValueError):
    """Base class for every validation failure raised by this package."""


class SizeMismatchError(StrataError):
    pass


class DegenerateError(StrataError):
    """Raised when a direction is requested for a vector with all coordinates equal."""


class NonStrictError(StrataError):
    """Raised when a permutation is requested for a barcode with tied births or deaths."""


class EnumerationCapError(StrataError):
    pass


class BarcodeFormatError(StrataError):
    """Malformed or invalid barcode input.

    ``index`` is the 0-based bar index and ``line`` the 1-based source line
    of the offending record, when known.
    """

    def __init__(self, message, *, index=None, line=None):
        super().__init__(message)
        self.index = index
        self.line = line
