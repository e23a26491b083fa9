"""Monotone piecewise-cubic Hermite interpolation and log-log helpers.

The cubic interpolant uses Fritsch-Carlson derivative limiting, so monotone
knot data produces a monotone, continuously differentiable curve with no
overshoot. Knot values are reproduced exactly. A log-log wrapper is provided
because the heat-integral and conductivity data handled here span several
decades and must stay positive; in log-log coordinates a pure power law is a
straight line and is reproduced exactly, including under end-slope
extrapolation.
"""

from __future__ import annotations

import numpy as np


class MonotoneCubic:
    """Shape-preserving cubic Hermite interpolant on strictly increasing x.

    Node derivatives start from arithmetic secant means and are pulled back
    into the Fritsch-Carlson monotonicity region (alpha^2 + beta^2 <= 9).
    Outside the knot range the curve continues linearly with the end-node
    derivative.
    """

    def __init__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.ndim != 1 or x.shape != y.shape:
            raise ValueError("x and y must be 1-d arrays of equal length")
        if len(x) < 2:
            raise ValueError("need at least two knots")
        if np.any(np.diff(x) <= 0):
            raise ValueError("x must be strictly increasing")
        self.x = x
        self.y = y
        self.m = self._fritsch_carlson_slopes(x, y)

    @staticmethod
    def _fritsch_carlson_slopes(x, y):
        h = np.diff(x)
        delta = np.diff(y) / h
        n = len(x)
        m = np.empty(n)
        # one-sided three-point end estimates, clipped to preserve shape
        m[0] = ((2 * h[0] + h[1]) * delta[0] - h[0] * delta[1]) / (h[0] + h[1]) if n > 2 else delta[0]
        m[-1] = ((2 * h[-1] + h[-2]) * delta[-1] - h[-1] * delta[-2]) / (h[-1] + h[-2]) if n > 2 else delta[-1]
        for end, d_end in ((0, delta[0]), (-1, delta[-1])):
            if m[end] * d_end <= 0:
                m[end] = 0.0
            elif abs(m[end]) > 3 * abs(d_end):
                m[end] = 3 * d_end
        for i in range(1, n - 1):
            if delta[i - 1] * delta[i] <= 0:
                m[i] = 0.0
            else:
                m[i] = 0.5 * (delta[i - 1] + delta[i])
        # limit (alpha, beta) to the circle of radius 3 per interval
        for i in range(n - 1):
            if delta[i] == 0.0:
                m[i] = 0.0
                m[i + 1] = 0.0
                continue
            alpha = m[i] / delta[i]
            beta = m[i + 1] / delta[i]
            r2 = alpha * alpha + beta * beta
            if r2 > 9.0:
                tau = 3.0 / np.sqrt(r2)
                m[i] = tau * alpha * delta[i]
                m[i + 1] = tau * beta * delta[i]
        return m

    def _segments(self, xq):
        idx = np.clip(np.searchsorted(self.x, xq, side="right") - 1, 0, len(self.x) - 2)
        return idx

    def __call__(self, xq):
        xq = np.asarray(xq, dtype=float)
        scalar = xq.ndim == 0
        xq1 = np.atleast_1d(xq)
        out = np.empty_like(xq1)
        below = xq1 < self.x[0]
        above = xq1 > self.x[-1]
        inside = ~(below | above)
        out[below] = self.y[0] + self.m[0] * (xq1[below] - self.x[0])
        out[above] = self.y[-1] + self.m[-1] * (xq1[above] - self.x[-1])
        if np.any(inside):
            xi = xq1[inside]
            i = self._segments(xi)
            h = self.x[i + 1] - self.x[i]
            t = (xi - self.x[i]) / h
            h00 = (1 + 2 * t) * (1 - t) ** 2
            h10 = t * (1 - t) ** 2
            h01 = t * t * (3 - 2 * t)
            h11 = t * t * (t - 1)
            out[inside] = (h00 * self.y[i] + h10 * h * self.m[i]
                           + h01 * self.y[i + 1] + h11 * h * self.m[i + 1])
        return out[0] if scalar else out

    def derivative(self, xq):
        xq = np.asarray(xq, dtype=float)
        scalar = xq.ndim == 0
        xq1 = np.atleast_1d(xq)
        out = np.empty_like(xq1)
        below = xq1 < self.x[0]
        above = xq1 > self.x[-1]
        inside = ~(below | above)
        out[below] = self.m[0]
        out[above] = self.m[-1]
        if np.any(inside):
            xi = xq1[inside]
            i = self._segments(xi)
            h = self.x[i + 1] - self.x[i]
            t = (xi - self.x[i]) / h
            d00 = 6 * t * (t - 1) / h
            d10 = (3 * t * t - 4 * t + 1)
            d01 = -6 * t * (t - 1) / h
            d11 = (3 * t * t - 2 * t)
            out[inside] = (d00 * self.y[i] + d10 * self.m[i]
                           + d01 * self.y[i + 1] + d11 * self.m[i + 1])
        return out[0] if scalar else out


class LogLogMonotoneCubic:
    """Monotone cubic interpolant of positive, increasing data in log-log space.

    ``allow_above`` controls whether queries beyond the last knot extrapolate
    with the end slope or raise; queries below the first knot always
    extrapolate (end-slope straight line in log-log coordinates).
    """

    def __init__(self, x, y, allow_above=False):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if np.any(x <= 0) or np.any(y <= 0):
            raise ValueError("log-log interpolation requires positive data")
        self.x = x
        self.y = y
        self.allow_above = allow_above
        self._core = MonotoneCubic(np.log(x), np.log(y))

    def __call__(self, xq):
        xq_arr = np.asarray(xq, dtype=float)
        if np.any(xq_arr <= 0):
            raise ValueError("query points must be positive")
        if not self.allow_above and np.any(xq_arr > self.x[-1] * (1 + 1e-12)):
            raise ValueError(f"query above the last knot {self.x[-1]!r} not permitted")
        return np.exp(self._core(np.log(xq_arr)))

    def derivative(self, xq):
        """dy/dx via the chain rule: (y/x) * dlny/dlnx."""
        val = self(xq)
        logslope = self._core.derivative(np.log(np.asarray(xq, dtype=float)))
        return val / np.asarray(xq, dtype=float) * logslope


def loglog_line_eval(x_knots, y_knots, xq, extrapolate=True):
    """Piecewise-linear interpolation in log-log space.

    Knots must be positive with strictly increasing x. Beyond either end the
    end-segment slope continues when ``extrapolate`` is true; otherwise the
    caller is expected to have range-checked.
    """
    x_knots = np.asarray(x_knots, dtype=float)
    y_knots = np.asarray(y_knots, dtype=float)
    lx = np.log(x_knots)
    ly = np.log(y_knots)
    xq_arr = np.asarray(xq, dtype=float)
    scalar = xq_arr.ndim == 0
    lq = np.log(np.atleast_1d(xq_arr))
    idx = np.clip(np.searchsorted(lx, lq, side="right") - 1, 0, len(lx) - 2)
    slope = (ly[idx + 1] - ly[idx]) / (lx[idx + 1] - lx[idx])
    out = np.exp(ly[idx] + slope * (lq - lx[idx]))
    if not extrapolate:
        out = np.where((lq < lx[0]) | (lq > lx[-1]), np.nan, out)
    return float(out[0]) if scalar else out
