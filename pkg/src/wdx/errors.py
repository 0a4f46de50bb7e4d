class InputError(ValueError):
    """Arguments violate an operation's precondition."""


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured size limit."""


class ConsistencyError(ArithmeticError):
    """Two independent computations disagree, or a closed form left the integers."""
