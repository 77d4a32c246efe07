"""Exception types shared by the whole package."""


class BFOrderError(Exception):
    """Base class for every error raised by :mod:`bforder`."""


class UsageError(BFOrderError, ValueError):
    """Arguments violate an operation's preconditions (ranks, indices, ...)."""


class DomainError(BFOrderError, ValueError):
    """The input is outside the domain of an order or decomposition,
    e.g. a non-pure braid handed to the combing."""


class ParseError(BFOrderError, ValueError):
    """Malformed textual input."""


class DeviationCeilingError(BFOrderError, RuntimeError):
    """The adaptive Magnus truncation exceeded its hard ceiling."""
