"""Shared exception types."""


class BudgetExhausted(RuntimeError):
    """A bounded search ran out of its node or time budget."""


class NoConstructionPath(ValueError):
    """No known construction produces the requested design."""


class NotSrg(ValueError):
    """The matrix is not the adjacency matrix of a strongly regular graph."""


class NotEligible(ValueError):
    """The strongly regular graph does not give rise to a design."""


class NotPgds(ValueError):
    """The subset is not a partial geometric difference set."""


class NotPgdf(ValueError):
    """The family is not a partial geometric difference family."""


class UnsupportedScale(ValueError):
    """The construction is only implemented at desk scale."""
