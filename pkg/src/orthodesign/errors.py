"""Exception hierarchy shared by every module."""


class DesignError(Exception):
    """Base class for all errors raised by orthodesign."""


class ParseError(DesignError, ValueError):
    pass


class NotBcod(DesignError):
    pass


class NotCod(NotBcod):
    """Orthogonality fails, so the design cannot be balanced either."""


class NotBjCompatible(DesignError):
    pass


class NotStandardForm(DesignError):
    pass


class UnreachableVariable(DesignError):
    pass


class PreconditionViolated(DesignError, ValueError):
    pass


class SearchFailed(DesignError):
    pass


class NoComplement(DesignError):
    pass


class MultipleComplements(DesignError):
    pass


class NotConjugationSeparated(DesignError):
    pass


class ConfigError(DesignError, ValueError):
    pass


class SearchLimitExceeded(DesignError):
    """The node budget ran out before the search space was exhausted.

    This never means "no design exists".
    """
