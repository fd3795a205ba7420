"""Planar vector type and angle helpers used by every other module.

All angles are radians, standard math convention (counter-clockwise positive,
0 along +x). Distances are meters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateVectorError

#: Default guard below which a vector is considered directionless.
EPS_LEN = 1e-9


@dataclass(frozen=True)
class Vec2:
    x: float
    y: float

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def norm_sq(self) -> float:
        return self.x * self.x + self.y * self.y

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def unit(self, eps: float = EPS_LEN) -> "Vec2":
        """Unit vector in the same direction. Raises on near-zero length."""
        n = self.norm()
        if n <= eps:
            raise DegenerateVectorError(f"cannot normalize vector of length {n!r}")
        return Vec2(self.x / n, self.y / n)

    def perp(self) -> "Vec2":
        """Left-hand perpendicular (rotate +90 degrees)."""
        return Vec2(-self.y, self.x)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)

    def angle(self) -> float:
        """Direction of the vector in (-pi, pi]."""
        return math.atan2(self.y, self.x)


ZERO = Vec2(0.0, 0.0)


def cross_z(a: Vec2, b: Vec2) -> float:
    """z component of the 3-D cross product of two planar vectors."""
    return a.x * b.y - a.y * b.x


def angle_between(a: Vec2, b: Vec2, eps: float = EPS_LEN) -> float:
    """Unsigned angle between two vectors, in [0, pi].

    Raises DegenerateVectorError if either vector is shorter than eps.
    """
    na = a.norm()
    nb = b.norm()
    if na <= eps or nb <= eps:
        raise DegenerateVectorError("angle of a near-zero vector is undefined")
    c = a.dot(b) / (na * nb)
    return math.acos(max(-1.0, min(1.0, c)))


def wrap_angle(x: float) -> float:
    """Wrap an angle to (-pi, pi], congruent to x modulo 2*pi."""
    r = math.remainder(x, math.tau)
    if r <= -math.pi:
        r += math.tau
    return r


def unit_from_angle(heading: float) -> Vec2:
    return Vec2(math.cos(heading), math.sin(heading))
