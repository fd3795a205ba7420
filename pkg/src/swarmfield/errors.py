"""Exception types shared across the simulator."""


class SwarmError(Exception):
    """Base class for all simulator errors."""


class DegenerateVectorError(SwarmError, ValueError):
    """A vector shorter than the length guard was used where a direction is needed."""


class CoincidentPositionError(SwarmError, ValueError):
    """Two agents (or an agent and an obstacle) occupy effectively the same point."""


class DegenerateScenarioError(SwarmError, ValueError):
    """Scenario geometry makes a required quantity undefined (e.g. start == target)."""


class NanPropagationError(SwarmError, ArithmeticError):
    """A non-finite value appeared during the integration loop."""


class ScenarioParseError(SwarmError, ValueError):
    """Scenario file is not syntactically valid. Carries a location string."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ScenarioValidationError(SwarmError, ValueError):
    """Scenario content violates an invariant. Carries the offending field path."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ScenarioMismatchError(SwarmError, ValueError):
    """Metric comparison was attempted across runs of different scenarios."""
