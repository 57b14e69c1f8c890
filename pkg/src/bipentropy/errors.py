"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class InconsistencyError(ValueError):
    """Inputs disagree with each other (degree sums, adjacency vs. degrees)."""


class InfeasibleError(ValueError):
    """No object with the requested parameters exists."""


class SizeGuardError(RuntimeError):
    """An exhaustive search was refused because the instance is too large."""


class ContractError(ValueError):
    """An index function lacks the properties an operation relies on."""


class TableauParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
