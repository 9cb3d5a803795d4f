"""Exception hierarchy shared by all modules."""


class Superlie2Error(Exception):
    """Base class for library errors."""


class ReducibleModulus(Superlie2Error):
    pass


class DegreeOutOfRange(Superlie2Error):
    pass


class DivisionByZero(Superlie2Error, ZeroDivisionError):
    pass


class FieldMismatch(Superlie2Error):
    pass


class AmbientMismatch(Superlie2Error):
    pass


class NotASubspace(Superlie2Error):
    pass


class DimensionMismatch(Superlie2Error):
    pass


class DimensionTooLarge(Superlie2Error):
    pass


class NotOdd(Superlie2Error):
    pass


class NotHomogeneous(Superlie2Error):
    pass


class NotAnIdeal(Superlie2Error):
    pass


class InvalidRepresentation(Superlie2Error):
    pass


class NotRestricted(Superlie2Error):
    pass


class QuasiFrobeniusViolation(Superlie2Error):
    pass


class NotLeftSymmetric(Superlie2Error):
    pass


class NotADerivation(Superlie2Error):
    pass


class NotInvertible(Superlie2Error):
    pass


class NotRotaBaxter(Superlie2Error):
    pass


class NotLeftAlternative(Superlie2Error):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotCompatible(Superlie2Error):
    pass


class NotPostLie(Superlie2Error):
    pass


class NotFlatParallel(Superlie2Error):
    pass


class NotFlat(Superlie2Error):
    pass


class NotLagrangianCocycle(Superlie2Error):
    def __init__(self, message: str, condition: str = "", where=None):
        super().__init__(message)
        self.condition = condition
        self.where = where


class BaseMismatch(Superlie2Error):
    pass


class ConstraintViolation(Superlie2Error):
    pass


class UnknownEntry(Superlie2Error, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class ParseError(Superlie2Error):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = f"line {line}" if line is not None else "input"
        if column is not None:
            loc += f", column {column}"
        super().__init__(f"{loc}: {message}")
        self.line = line
        self.column = column


class VerificationFailure(Superlie2Error):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
