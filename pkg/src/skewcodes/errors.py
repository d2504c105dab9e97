"""Exception hierarchy shared by all modules."""


class SkewCodesError(Exception):
    """Base class for all library errors."""


class NonPrime(SkewCodesError):
    pass


class ReducibleModulus(SkewCodesError):
    pass


class ContextMismatch(SkewCodesError):
    pass


class NonUnit(SkewCodesError):
    pass


class NonInvertibleLeadingCoefficient(SkewCodesError):
    pass


class NonMonic(SkewCodesError):
    pass


class DeltaNotZero(SkewCodesError):
    pass


class DegreeMismatch(SkewCodesError):
    pass


class DegreeTooHigh(SkewCodesError):
    pass


class NotARightDivisor(SkewCodesError):
    pass


class NotConstacyclic(SkewCodesError):
    pass


class InvalidK(SkewCodesError):
    pass


class WitnessInvalid(SkewCodesError):
    pass


class EnumerationCapExceeded(SkewCodesError):
    pass


class InvalidConfig(SkewCodesError):
    pass
