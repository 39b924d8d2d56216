"""Fourth-order central finite differences on uniform grids.

Both helpers return arrays of the input length with NaN in the two border
cells at each end, so downstream masks can simply drop non-finite entries.
"""

from __future__ import annotations

import numpy as np

__all__ = ["fd4_first", "fd4_second"]


def fd4_first(y: np.ndarray, h: float) -> np.ndarray:
    """(y[i-2] - 8 y[i-1] + 8 y[i+1] - y[i+2]) / (12 h), O(h^4)."""
    y = np.asarray(y, dtype=float)
    out = np.full_like(y, np.nan)
    out[2:-2] = (y[:-4] - 8 * y[1:-3] + 8 * y[3:-1] - y[4:]) / (12 * h)
    return out


def fd4_second(y: np.ndarray, h: float) -> np.ndarray:
    """(-y[i-2] + 16 y[i-1] - 30 y[i] + 16 y[i+1] - y[i+2]) / (12 h^2), O(h^4)."""
    y = np.asarray(y, dtype=float)
    out = np.full_like(y, np.nan)
    out[2:-2] = (
        -y[:-4] + 16 * y[1:-3] - 30 * y[2:-2] + 16 * y[3:-1] - y[4:]
    ) / (12 * h * h)
    return out
