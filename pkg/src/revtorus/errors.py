"""Exception hierarchy shared by all modules."""


class RevtorusError(Exception):
    """Base class for all library errors."""


class ConfigError(RevtorusError):
    """Malformed or inconsistent configuration input."""


class ValidationError(RevtorusError):
    """A structural check (reversibility, area, involution, support) failed."""


class SpecificationError(ValidationError):
    """A declared closed-form object does not satisfy its own contract."""


class FreenessError(ValidationError):
    """A point set violates the f(x) != R(y) freeness hypothesis."""

    def __init__(self, message, witness=None, margin=None):
        super().__init__(message)
        self.witness = witness
        self.margin = margin


class SupportOverlapError(ValidationError):
    """Bump supports (or their twin images) overlap where they must not."""


class BudgetError(RevtorusError):
    """A search or perturbation budget was exhausted."""


class RecurrenceError(BudgetError):
    """No usable near-return was found within the iteration budget."""

    def __init__(self, message, best_return=None, best_distance=None):
        super().__init__(message)
        self.best_return = best_return
        self.best_distance = best_distance


class CapacityError(BudgetError):
    """A lift chain step exceeds the C1 capacity of its support."""

    def __init__(self, message, advised_steps=None):
        super().__init__(message)
        self.advised_steps = advised_steps


class BracketError(RevtorusError):
    """A one-parameter solve could not bracket its target."""


class IntegrationError(RevtorusError):
    """An implicit flow step failed to converge."""

    def __init__(self, message, bump_index=None):
        super().__init__(message)
        self.bump_index = bump_index
