"""Exception hierarchy. The CLI maps every BiquotientError to exit status 2."""


class BiquotientError(ValueError):
    """Base class for all input and consistency errors raised by the engine."""


class AlgebraError(BiquotientError):
    pass


class InconsistentPresentation(BiquotientError):
    def __init__(self, detail: str = ""):
        msg = "inconsistent presentation"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class ActionDoesNotDescend(BiquotientError):
    def __init__(self, detail: str = ""):
        msg = "action does not descend"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class InvalidModel(BiquotientError):
    pass


class UnsupportedGroup(BiquotientError):
    pass


class NotExpressible(BiquotientError):
    def __init__(self, detail: str = ""):
        msg = "not Weyl-invariant / not expressible"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class UnsupportedCase(BiquotientError):
    pass


class FormatError(BiquotientError):
    pass
