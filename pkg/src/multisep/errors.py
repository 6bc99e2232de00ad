"""Exception hierarchy shared by all modules."""


class MultisepError(Exception):
    """Base class for every error raised by this package."""


class ArgumentError(MultisepError, ValueError):
    pass


class DimensionError(ArgumentError):
    pass


class TensorIndexError(MultisepError, IndexError):
    pass


class NormalizationError(ArgumentError):
    pass


class CapacityError(MultisepError):
    """Input exceeds the dense-representation size limits."""


class KetSyntaxError(MultisepError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class KetSemanticError(MultisepError, ValueError):
    def __init__(self, message, offset, factor=None):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset
        self.factor = factor


class FormatError(MultisepError, ValueError):
    def __init__(self, message, field=""):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


class ValidationError(MultisepError, ValueError):
    pass
