"""Exception types shared across the toolkit.

Every error raised by the library derives from :class:`LeagueError` so the
CLI can map any library failure to a usage/input exit code.
"""


class LeagueError(Exception):
    """Base class for all leaguelab errors."""


class InvalidValueError(LeagueError, ValueError):
    """A numeric input was out of domain (negative, non-finite, ...)."""


class CountsRequiredError(LeagueError):
    """Continuous scheme asked to run on an averages-only aggregate."""


class EmptyPairError(LeagueError):
    """A pair aggregate with zero games where games are required."""


class DomainMismatchError(LeagueError):
    """Two rankings (or a ranking and a reference) cover different team sets."""


class IncompleteMatrixError(LeagueError):
    """A score matrix is missing one or more team pairs."""


class IncompleteModelError(LeagueError):
    """A round-robin simulation is missing the model for some pair."""


class ParseError(LeagueError):
    """Malformed input text; carries a human-readable location."""

    def __init__(self, message, *, line=None, position=None):
        loc = ""
        if line is not None:
            loc = f"line {line}: "
        elif position is not None:
            loc = f"position {position}: "
        super().__init__(f"{loc}{message}")
        self.line = line
        self.position = position


class DuplicateParamError(LeagueError):
    """The same parameter name appears twice in one override list."""


class EmptyCommandError(LeagueError):
    """A change command with no parameter pairs."""
