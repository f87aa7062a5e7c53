from typing import Optional


class SimulacraException(Exception):
    pass


class InvalidInput(SimulacraException):
    pass


class NotCanonical(InvalidInput):
    pass


class CanonicalizationError(InvalidInput):
    pass


class ConeParseError(InvalidInput):

    def __init__(self, message: str, expression: str, position: int) -> None:
        super(ConeParseError, self).__init__(f"{message} at position {position}: {expression!r}")
        self.expression = expression
        self.position = position


class UnknownClaim(InvalidInput):
    pass


class FixtureError(SimulacraException):

    def __init__(self, message: str, path: str, line_no: Optional[int] = None) -> None:
        location = path if line_no is None else f"{path}:{line_no}"
        super(FixtureError, self).__init__(f"{location}: {message}")
        self.path = path
        self.line_no = line_no
