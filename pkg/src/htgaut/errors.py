"""Exception hierarchy shared by all modules."""


class HtgError(ValueError):
    """Base class for every validation error raised by htgaut."""


# graph construction
class SelfLoopError(HtgError):
    pass


class DuplicateEdgeError(HtgError):
    pass


class IndexOutOfRangeError(HtgError):
    pass


class NotAnEdgeError(HtgError):
    pass


# HTG parameter validation
class ParamError(HtgError):
    pass


class NOddError(ParamError):
    pass


class NTooSmallError(ParamError):
    pass


class EllRangeError(ParamError):
    pass


class ParityMismatchError(ParamError):
    pass


class DegenerateMultigraphError(ParamError):
    pass


class NotNormalFormError(ParamError):
    pass


# named graphs / engine
class BadParameterError(HtgError):
    pass


class TooLargeError(HtgError):
    pass


class NotCubicError(HtgError):
    pass
