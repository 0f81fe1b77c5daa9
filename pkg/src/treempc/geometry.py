"""Configuration-space primitives: configurations, weight matrices, and the
weighted kinematic metric used by both the planner and the controllers."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

TWO_PI = 2.0 * math.pi
PI = math.pi


def wrap_angle(theta):
    """Wrap an angle (scalar or array) to [-pi, pi).

    Uses round-to-nearest so that wrap(-t) == -wrap(t) bit-exactly, except at
    the interval ends where both +pi and -pi map to -pi (squares still agree,
    which is what the metric needs).
    """
    t = np.asarray(theta, dtype=np.float64)
    w = t - TWO_PI * np.round(t / TWO_PI)
    w = np.where(w >= PI, w - TWO_PI, w)
    w = np.where(w < -PI, w + TWO_PI, w)
    if np.isscalar(theta) or getattr(theta, "ndim", 0) == 0:
        return float(w)
    return w


@dataclass(frozen=True)
class Configuration:
    """A point in configuration space: planar position plus, for the stick
    robot, a heading angle. theta is wrapped to [-pi, pi) on construction."""

    x: float
    y: float
    theta: Optional[float] = None

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite configuration ({self.x}, {self.y})")
        if self.theta is not None:
            if not math.isfinite(self.theta):
                raise ValueError(f"non-finite heading {self.theta}")
            object.__setattr__(self, "theta", wrap_angle(self.theta))

    @property
    def dim(self) -> int:
        return 2 if self.theta is None else 3

    def as_array(self) -> np.ndarray:
        if self.theta is None:
            return np.array([self.x, self.y], dtype=np.float64)
        return np.array([self.x, self.y, self.theta], dtype=np.float64)

    @staticmethod
    def from_array(arr) -> "Configuration":
        arr = np.asarray(arr, dtype=np.float64)
        if arr.shape[0] == 2:
            return Configuration(float(arr[0]), float(arr[1]))
        return Configuration(float(arr[0]), float(arr[1]), float(arr[2]))


@dataclass(frozen=True)
class WeightMatrix:
    """Diagonal positive weight matrix for the metric and action norms.
    w_theta is only used for 3-dof (stick) configurations."""

    w_x: float = 1.0
    w_y: float = 1.0
    w_theta: Optional[float] = None

    def __post_init__(self):
        if self.w_x <= 0 or self.w_y <= 0:
            raise ValueError("weight matrix entries must be positive")
        if self.w_theta is not None and self.w_theta <= 0:
            raise ValueError("weight matrix entries must be positive")

    def diagonal(self, dim: int) -> np.ndarray:
        if dim == 2:
            return np.array([self.w_x, self.w_y], dtype=np.float64)
        if self.w_theta is None:
            raise ValueError("w_theta required for 3-dof configurations")
        return np.array([self.w_x, self.w_y, self.w_theta], dtype=np.float64)

    @staticmethod
    def from_list(values) -> "WeightMatrix":
        values = list(values)
        if len(values) == 2:
            return WeightMatrix(values[0], values[1])
        return WeightMatrix(values[0], values[1], values[2])

    def as_list(self, dim: int) -> list:
        return [float(v) for v in self.diagonal(dim)]


def weighted_sqnorm(d: np.ndarray, w: np.ndarray) -> np.ndarray:
    """(d^T W d) with a fixed left-to-right summation order over components.

    d has shape (..., dim); w is the diagonal of W, shape (dim,). The fixed
    expression keeps scalar and batch call sites bit-identical.
    """
    if w.shape[0] == 2:
        return w[0] * d[..., 0] ** 2 + w[1] * d[..., 1] ** 2
    return (w[0] * d[..., 0] ** 2 + w[1] * d[..., 1] ** 2) + w[2] * d[..., 2] ** 2


def weighted_norm(d: np.ndarray, w: np.ndarray) -> np.ndarray:
    return np.sqrt(weighted_sqnorm(d, w))


def config_diff(to_arr: np.ndarray, from_arr: np.ndarray) -> np.ndarray:
    """Componentwise difference with the angular component wrapped."""
    d = to_arr - from_arr
    if d.shape[-1] == 3:
        d = d.copy() if d.base is not None or d is to_arr else d
        d[..., 2] = wrap_angle(d[..., 2])
    return d


def plan_metric(q1: Configuration, q2: Configuration, weights: WeightMatrix) -> float:
    """Kinematic planning metric: weighted Euclidean distance with the
    heading difference wrapped to [-pi, pi)."""
    if q1.dim != q2.dim:
        raise ValueError("configurations have different dimensionality")
    d = config_diff(q2.as_array(), q1.as_array())
    return float(weighted_norm(d, weights.diagonal(q1.dim)))


def metric_to_points(q_arr: np.ndarray, points: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Metric from each row of q_arr (..., dim) to each row of points (N, dim).

    Returns shape (..., N). Broadcasting keeps the per-element expression
    identical to plan_metric.
    """
    d = points[np.newaxis, ...] - q_arr[..., np.newaxis, :] if q_arr.ndim > 1 else points - q_arr
    if points.shape[-1] == 3:
        d[..., 2] = wrap_angle(d[..., 2])
    return weighted_norm(d, w)
