"""Exception types raised by the library."""


class CrystalError(Exception):
    """Base class for all library errors."""


class RankMismatchError(CrystalError, ValueError):
    """Two objects living over different ranks were combined."""


class MonomialParseError(CrystalError, ValueError):
    """Malformed monomial text; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class NodeBudgetExceeded(CrystalError):
    """Component generation visited more nodes than allowed."""


class NotClosedError(CrystalError):
    """A Kashiwara operator took an element of the universe outside of it."""

    def __init__(self, source, color: int, target, operator: str):
        super().__init__(
            f"{operator}_{color}({source}) = {target} is not in the universe"
        )
        self.source = source
        self.color = color
        self.target = target
        self.operator = operator


class UncoveredError(CrystalError):
    """An element of the universe lies in no highest-weight component."""


class UnsupportedWeight(CrystalError, ValueError):
    """The requested weight matches none of the closed-form patterns."""


class TheoremViolation(CrystalError, AssertionError):
    """A brute-force computation contradicts a closed-form prediction."""
