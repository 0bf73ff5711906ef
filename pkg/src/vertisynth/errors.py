"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes (see ``vertisynth.cli``):
configuration -> 2, budget -> 3, scalability -> 4, I/O -> 5.
"""


class VertisynthError(Exception):
    """Base class for all package errors."""


class SchemaError(VertisynthError):
    """A clique, value, or dataset does not match its schema."""


class VisibilityError(SchemaError):
    """A public-only operation was asked to touch a private column."""


class WorkloadError(VertisynthError):
    """An invalid workload request (e.g. k larger than the column count)."""


class ConfigurationError(VertisynthError):
    """A run or grid configuration is malformed or inconsistent."""


class BudgetError(VertisynthError):
    """A privacy charge would exceed the remaining zCDP budget."""


class ScalabilityError(VertisynthError):
    """A model or domain exceeds its configured size cap."""


class StructureError(VertisynthError):
    """A measurement clique is not covered by the model structure."""


class EmptyDataError(VertisynthError):
    """No rows survive preprocessing."""
