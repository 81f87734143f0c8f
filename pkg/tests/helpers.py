"""Shared reference constructions for the test suite.

Everything here is built from explicit index arithmetic so it stays
independent of the library's vectorized implementations.
"""

import numpy as np


def flat_index(i, j, k, w):
    # row-major with channel minor, matching ndarray.reshape(-1)
    return (i * w + j) * 3 + k


def dense_diff_matrix(h, w, axis):
    """Periodic forward-difference operator as an explicit dense matrix."""
    n = h * w * 3
    m = np.zeros((n, n))
    for i in range(h):
        for j in range(w):
            for k in range(3):
                r = flat_index(i, j, k, w)
                if axis == "y":
                    nxt = flat_index((i + 1) % h, j, k, w)
                elif axis == "x":
                    nxt = flat_index(i, (j + 1) % w, k, w)
                elif axis == "c":
                    nxt = flat_index(i, j, (k + 1) % 3, w)
                else:
                    raise ValueError(axis)
                m[r, nxt] += 1.0
                m[r, r] -= 1.0
    return m


def dense_stacked_matrix(h, w, wx, wy, wc):
    """The weighted stacked operator as a (3n, n) dense matrix.

    Row blocks are ordered x, y, c to match the gradient stack layout.
    """
    return np.vstack([
        wx * dense_diff_matrix(h, w, "x"),
        wy * dense_diff_matrix(h, w, "y"),
        wc * dense_diff_matrix(h, w, "c"),
    ])


def stack_to_vec(g):
    # (3, H, W, 3) stack flattened in x, y, c block order
    return np.concatenate([g[0].reshape(-1), g[1].reshape(-1), g[2].reshape(-1)])


def vec_to_stack(v, h, w):
    n = h * w * 3
    return np.stack([v[i * n:(i + 1) * n].reshape(h, w, 3) for i in range(3)])


def random_image(rng, h, w):
    return rng.random((h, w, 3))
