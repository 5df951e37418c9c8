"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid sizes, indices, names, or option combinations."""


class NumericalContractError(ValueError):
    """Numerical input violates a documented tolerance contract."""
