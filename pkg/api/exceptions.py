class StrategicLabError(Exception):
    """Base exception for all lab errors."""

    def __init__(self, message: str, user_message: str | None = None) -> None:
        super().__init__(message)
        self.user_message = user_message or message


class BusinessError(StrategicLabError):
    """Exception for domain rule violations (e.g. invalid operation)."""

    pass


class ValidationError(BusinessError):
    """Invalid parameters, mismatched universes or malformed weights."""

    pass


class TieBreakError(BusinessError):
    """A scripted tie-break ran out or pointed outside the tie set."""

    pass


class ProtocolError(BusinessError):
    """Feedback arrived out of order or without a field the learner needs."""

    pass


class RealizabilityViolationError(BusinessError):
    """A version space, graph set or expert set was emptied."""

    pass


class ResourceBudgetError(BusinessError):
    """An enumeration exceeded its configured budget."""

    def __init__(
        self, message: str, reached: int, user_message: str | None = None
    ) -> None:
        super().__init__(message, user_message)
        self.reached = reached


class BoundViolationError(BusinessError):
    """An asserted ceiling or floor did not hold."""

    pass


class InfrastructureError(StrategicLabError):
    """Exception for infrastructure failures (e.g. unreadable output dir)."""

    pass


class DataAccessError(InfrastructureError):
    """Exception for data retrieval/persistence errors."""

    pass


class FixtureFormatError(DataAccessError):
    """A graph, class or sample file does not follow its format."""

    pass
