"""Input validation shared by the estimators and the CLI."""

import numpy as np
from sklearn.utils import check_array, check_random_state
from sklearn.utils.validation import check_non_negative

from .vs import VsInstance


def check_vectors(X, n_partitions):
    """Validate ``X`` and wrap it as a :class:`VsInstance`.

    ``X`` is ``(n, d)`` for identical partitions or ``(n, n_partitions, d)``
    for per-partition costs.
    """
    X = check_array(X, allow_nd=True, dtype=np.float64, ensure_min_samples=1, ensure_min_features=1)
    check_non_negative(X, "vector costs")
    if X.ndim == 2:
        return VsInstance(X, n_partitions)
    if X.ndim == 3 and X.shape[1] == n_partitions:
        if X.shape[2] < 1:
            raise ValueError("vectors need at least one dimension")
        return VsInstance(None, n_partitions, hetero_costs=X)
    raise ValueError(f"X must have shape (n, d) or (n, {n_partitions}, d), got {X.shape}")


def arrival_order(n, shuffle, random_state):
    if not shuffle:
        return np.arange(n)
    return check_random_state(random_state).permutation(n)
