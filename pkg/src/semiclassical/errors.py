"""Exception types raised by the algebra routines."""


class NonExactDivision(ArithmeticError):
    """A division that must be exact left a nonzero remainder."""


class DivideByZero(ZeroDivisionError):
    """Specialising L to zero met a negative power of L."""


class AdamsOnCuspSymbol(ValueError):
    """An Adams operation psi_m (m > 1) was applied to a cusp-form symbol."""


class NonzeroConstantTerm(ValueError):
    """A series argument that must vanish at zero has a constant term."""


class NonUnitLinearTerm(ValueError):
    """Compositional inversion needs a series of the form x + O(x^2)."""


class WrongLeadingTerm(ValueError):
    """A scalar Legendre transform needs a series of the form x^2/2 + O(x^3)."""


class NotInLambdaStar(ValueError):
    """A symmetric Legendre transform needs rk(f) = x^2/2 + O(x^3)."""


class WindowOverflow(OverflowError):
    """An omega-expansion left its declared exponent window."""
