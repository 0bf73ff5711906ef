"""Pure-numpy fallback for the compiled kernels in ``_kernels.pyx``."""

import numpy as np


def marginal_counts(rows: np.ndarray, cols: np.ndarray, cards: np.ndarray) -> np.ndarray:
    """Count rows per cell of the product domain of the given columns."""
    size = int(np.prod(cards)) if len(cards) else 1
    if len(cols) == 0:
        return np.array([float(rows.shape[0])])
    flat = rows[:, cols[0]].astype(np.int64)
    for j in range(1, len(cols)):
        flat = flat * cards[j] + rows[:, cols[j]]
    return np.bincount(flat, minlength=size).astype(np.float64)


def sample_categorical_rows(probs: np.ndarray, uniforms: np.ndarray) -> np.ndarray:
    """Draw one category per row by inverse CDF over that row's weights."""
    cdf = np.cumsum(probs, axis=1)
    targets = uniforms * cdf[:, -1]
    picks = (cdf <= targets[:, None]).sum(axis=1)
    return np.minimum(picks, probs.shape[1] - 1).astype(np.int64)
