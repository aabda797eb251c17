"""Exception hierarchy shared by every module."""


class HadarankError(Exception):
    """Base class for all library errors."""


class ParseError(HadarankError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class RingMismatch(HadarankError, ValueError):
    pass


class ZeroGenerator(HadarankError, ValueError):
    pass


class NotHomogeneous(HadarankError, ValueError):
    pass


class AllZeroProduct(HadarankError, ArithmeticError):
    """Every coordinate of a Hadamard product vanished."""


class ZeroCoordinate(HadarankError, ArithmeticError):
    pass


class IncompatibleExtension(HadarankError, ArithmeticError):
    """Arithmetic between numbers living in different algebraic extensions."""


class BudgetExceeded(HadarankError):
    def __init__(self, message="step budget exceeded", spent=None):
        self.spent = spent
        super().__init__(message)


class EmptyVariety(HadarankError):
    pass


class NotZeroDimensional(HadarankError):
    pass


class WitnessNotFound(HadarankError):
    pass


class NotStronglyConcise(HadarankError):
    pass


class IrrationalWitnessesOnly(HadarankError):
    pass


class AllSamplesDegenerate(HadarankError):
    pass


class NotACurveParam(HadarankError, ValueError):
    pass
