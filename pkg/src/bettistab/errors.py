"""Exception hierarchy shared by the library and the CLI."""


class BettiStabError(Exception):
    """Base class for all errors raised by bettistab."""


class ContextError(BettiStabError, ValueError):
    """Monomials from different rings were combined."""


class DomainError(BettiStabError, ValueError):
    """A value lies outside the domain of an operation (e.g. negative exponent)."""


class CapacityError(BettiStabError):
    """A computation would exceed a configured size cap."""


class ParseError(BettiStabError, ValueError):
    """Malformed monomial, ideal or family expression.

    ``position`` is the 0-based character offset of the offending token,
    or ``None`` when the error is not tied to one spot.
    """

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.message = message
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f" in {text!r}"
        super().__init__(message)
