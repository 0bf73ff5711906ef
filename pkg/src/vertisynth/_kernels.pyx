# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: marginal counting and per-row categorical sampling.

Signatures mirror ``vertisynth._kernels_py`` exactly; the backend module
selects whichever import succeeds.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def marginal_counts(cnp.int64_t[:, ::1] rows, cnp.int64_t[::1] cols,
                    cnp.int64_t[::1] cards):
    """Count rows per cell of the product domain of the given columns.

    Cells are laid out row-major over the columns in the order given
    (first column varies slowest).
    """
    cdef Py_ssize_t n = rows.shape[0]
    cdef Py_ssize_t k = cols.shape[0]
    cdef Py_ssize_t size = 1
    cdef Py_ssize_t i, j
    cdef cnp.int64_t idx
    for j in range(k):
        size *= cards[j]
    out = np.zeros(size, dtype=np.float64)
    cdef cnp.float64_t[::1] out_v = out
    for i in range(n):
        idx = 0
        for j in range(k):
            idx = idx * cards[j] + rows[i, cols[j]]
        out_v[idx] += 1.0
    return out


def sample_categorical_rows(cnp.float64_t[:, ::1] probs,
                            cnp.float64_t[::1] uniforms):
    """Draw one category per row by inverse CDF over that row's weights.

    Rows need not be normalized; each row's total is used as the scale.
    """
    cdef Py_ssize_t n = probs.shape[0]
    cdef Py_ssize_t k = probs.shape[1]
    cdef Py_ssize_t i, j
    cdef double total, target, acc
    out = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] out_v = out
    for i in range(n):
        total = 0.0
        for j in range(k):
            total += probs[i, j]
        target = uniforms[i] * total
        acc = 0.0
        out_v[i] = k - 1
        for j in range(k):
            acc += probs[i, j]
            if target < acc:
                out_v[i] = j
                break
    return out
