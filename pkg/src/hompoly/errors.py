"""Exception types shared across the package."""


class SizeGuardError(ValueError):
    """An input exceeds a documented size guard."""


class UnboundedPolytopeError(ValueError):
    """An inequality system describes an unbounded feasible set."""
