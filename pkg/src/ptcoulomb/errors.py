"""Exception types shared across the package."""


class PTCoulombError(Exception):
    """Base class for all errors raised by this package."""


class NonPositiveAlphaSquared(PTCoulombError, ValueError):
    pass


class NonPositiveASquared(PTCoulombError, ValueError):
    pass


class OriginEvaluation(PTCoulombError, ValueError):
    pass


class DivergentState(PTCoulombError, ArithmeticError):
    """The Coulomb denominator 2n+1-2qA vanishes: the level has flown away."""


class NonNormalizable(PTCoulombError, ValueError):
    """The state exists formally but has kappa^2 <= 0."""


class OnCutOrOrigin(PTCoulombError, ValueError):
    pass


class ZeroJacobian(PTCoulombError, ArithmeticError):
    pass


class ZeroEnergy(PTCoulombError, ArithmeticError):
    pass


class OverflowUnrecoverable(PTCoulombError, ArithmeticError):
    pass


class StepUnderflow(PTCoulombError, ArithmeticError):
    pass


class NonPositiveCritical(PTCoulombError, ValueError):
    pass


class EqualIndices(PTCoulombError, ValueError):
    pass
