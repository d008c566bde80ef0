"""Input coercion shared by the estimator and the public helpers."""

from __future__ import annotations

import numbers
from typing import Any

import numpy as np


def as_int(value: Any, name: str = "value") -> int:
    """Exact Python int from an int-like scalar; floats must be integral."""
    if isinstance(value, (bool, np.bool_)):
        raise TypeError(f"{name} must be an integer, got a boolean")
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real) and float(value).is_integer():
        return int(value)
    raise TypeError(f"{name} must be an integer, got {value!r}")


def check_positive_int(value: Any, name: str) -> int:
    n = as_int(value, name)
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")
    return n


def check_coefficients(X: Any) -> tuple[int, int, int, int]:
    """Four generator coefficients from a flat sequence or a 1x4 array."""
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 2 and arr.shape[0] == 1:
        arr = arr[0]
    if arr.shape != (4,):
        raise ValueError(f"expected 4 coefficients a1..a4, got shape {arr.shape}")
    return tuple(as_int(c, f"a{i + 1}") for i, c in enumerate(arr))


def check_triples(X: Any) -> list[tuple[int, int, int]]:
    """Rows (x, y, z) from an (n, 3) array-like; a single triple is accepted."""
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 1 and arr.shape == (3,):
        arr = arr.reshape(1, 3)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"expected triples of shape (n, 3), got {arr.shape}")
    return [tuple(as_int(c, "coordinate") for c in row) for row in arr]
