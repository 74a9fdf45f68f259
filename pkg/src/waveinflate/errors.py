"""Exception types shared across the package."""


class CutoffViolation(Exception):
    """A frequency-space product would escape the lattice cutoff.

    Raised instead of aliasing: wrapped-around coefficients would silently
    corrupt every norm and resonance computation downstream.
    """


class BudgetExceeded(Exception):
    """A combinatorial enumeration exceeds its configured budget."""


class TimeTooLarge(Exception):
    """Requested evolution time violates the contraction window."""


class NoContraction(Exception):
    """Fixed-point iteration failed to contract (diverging iterates)."""


class WindowViolation(Exception):
    """Evaluation time lies outside the resonance-analysis time window."""


class BadDelta(ValueError):
    """The small exponent delta violates its per-case constraint."""
