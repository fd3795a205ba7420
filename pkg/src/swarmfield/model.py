"""Core value types: tuning parameters, obstacles, agent state, planner variants."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from enum import Enum

from .errors import ScenarioValidationError
from .geometry import Vec2

FAN_HALF_ANGLE = math.pi / 4  # forward sensing sector is 90 degrees wide


class Variant(str, Enum):
    """Planner selection for a run."""

    TAPF = "tapf"  # plain attraction + repulsion + lattice force
    IAPF = "iapf"  # adds risk-triggered sub-goals, keeps plain attraction
    OAPF = "oapf"  # adds the enhanced / sub-goal attraction switch on top

    @property
    def label(self) -> str:
        return {"tapf": "T-APF", "iapf": "I-APF", "oapf": "O-APF"}[self.value]


@dataclass(frozen=True)
class SwarmParams:
    """All tunables of the simulator.

    The first block mirrors the experiment constants; the second block fills
    the gaps a desk-scale simulator needs (step size, risk geometry, guards).
    Angles are radians.
    """

    r: float = 6.0              # communication / neighbor radius
    d: float = 4.0              # ideal inter-agent spacing
    phi: float = 0.7            # allowed spacing deviation
    alpha: float = 0.1          # lattice attraction gain (spacing > d)
    beta: float = 10.0          # lattice repulsion gain (spacing < d)
    k_att: float = 1.0          # target attraction gain
    k_rep: float = 500.0        # obstacle repulsion gain
    d_pre: float = 6.0          # forward sensing radius
    gamma: float = 1.2          # enhanced-attraction exponent shaping
    delta: float = 16.0         # sub-goal attraction distance scale
    dis_threshold: float = 6.0  # detection distance filter

    step_len: float = 0.2                       # displacement per step
    theta_inner: float = math.radians(15.0)     # risk stays 1 below this offset
    theta_bound: float = math.radians(45.0)     # risk reaches 0 at this offset
    risk_threshold: float = 0.5                 # sub-goal trigger level
    d_safe: float = 3.0                         # sub-goal standoff from obstacle center
    goal_eps: float = 0.5                       # arrival / sub-goal release band
    max_steps: int = 5000                       # watchdog
    eps_len: float = 1e-9                       # degenerate-length guard
    f_cap: float = 1e3                          # per-term force magnitude cap
    k_max: int | None = None                    # optional nearest-neighbor cap

    def validate(self, location: str = "params") -> None:
        """Raise ScenarioValidationError naming the first violated invariant."""
        positive = (
            "r", "d", "phi", "alpha", "beta", "k_att", "k_rep", "d_pre",
            "gamma", "delta", "dis_threshold", "step_len", "theta_inner",
            "d_safe", "goal_eps", "eps_len", "f_cap",
        )
        for name in positive:
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ScenarioValidationError(
                    f"must be a finite positive number (got {value!r})",
                    f"{location}.{name}",
                )
        if self.phi >= self.d:
            raise ScenarioValidationError(
                f"must be smaller than d={self.d} (got {self.phi})", f"{location}.phi"
            )
        if self.theta_inner >= self.theta_bound:
            raise ScenarioValidationError(
                f"must be smaller than theta_bound={self.theta_bound} (got {self.theta_inner})",
                f"{location}.theta_inner",
            )
        if self.theta_bound > FAN_HALF_ANGLE:
            raise ScenarioValidationError(
                f"must not exceed the sensing fan half-angle pi/4 (got {self.theta_bound})",
                f"{location}.theta_bound",
            )
        if not 0.0 <= self.risk_threshold <= 1.0:
            raise ScenarioValidationError(
                f"must lie in [0, 1] (got {self.risk_threshold})",
                f"{location}.risk_threshold",
            )
        if not (isinstance(self.max_steps, int) and self.max_steps >= 1):
            raise ScenarioValidationError(
                f"must be a positive integer (got {self.max_steps!r})",
                f"{location}.max_steps",
            )
        if self.k_max is not None and not (isinstance(self.k_max, int) and self.k_max >= 1):
            raise ScenarioValidationError(
                f"must be a positive integer or null (got {self.k_max!r})",
                f"{location}.k_max",
            )

    def with_overrides(self, **kwargs) -> "SwarmParams":
        unknown = set(kwargs) - {f.name for f in fields(self)}
        if unknown:
            raise ScenarioValidationError(
                f"unknown parameter name(s): {', '.join(sorted(unknown))}", "params"
            )
        return replace(self, **kwargs)


@dataclass(frozen=True)
class Obstacle:
    """Circular static obstacle; repulsion acts inside the influence radius."""

    center: Vec2
    radius: float
    influence: float


@dataclass(frozen=True)
class SubGoal:
    """Temporary waypoint placed beside an obstacle; replaces the true target."""

    pos: Vec2
    source: Obstacle
    created_step: int


@dataclass
class UavState:
    """One agent. `heading` is the direction of the most recent displacement
    (initialized to the bearing toward the target); `start` never changes."""

    id: int
    pos: Vec2
    heading: float
    target: Vec2
    start: Vec2
    active_subgoal: SubGoal | None = None
    arrived: bool = False

    @property
    def goal_pos(self) -> Vec2:
        return self.active_subgoal.pos if self.active_subgoal is not None else self.target

    @property
    def goal_kind(self) -> str:
        return "subgoal" if self.active_subgoal is not None else "target"
