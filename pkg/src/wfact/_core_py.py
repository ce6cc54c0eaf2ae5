"""Pure-Python (numpy-backed) kernels for the exhaustive-verification tables.

Same interface as the optional compiled extension ``_core``:

* ``build_mult_table`` — full index-level multiplication table of a group
  whose elements are given as 0-based permutation image rows plus color rows;
* ``subgroup_closure`` — members of the subgroup generated by a set of
  element indices, by breadth-first saturation from the identity.

Selection between the two implementations happens in ``_kernels``.
"""

from __future__ import annotations

import numpy as np

__all__ = ["build_mult_table", "subgroup_closure"]


def _keys(perms: np.ndarray, colors: np.ndarray, m: int) -> np.ndarray:
    """Injective int64 key per element row (mixed-radix over n digits)."""
    n = perms.shape[1]
    radix = np.int64(n * m)
    weights = radix ** np.arange(n, dtype=np.int64)
    return ((perms.astype(np.int64) * m + colors.astype(np.int64)) * weights).sum(axis=1)


def build_mult_table(perms: np.ndarray, colors: np.ndarray, m: int) -> np.ndarray:
    """mult[i, j] = index of element_i * element_j.

    ``perms``: int32 (W, n), 0-based image tables; ``colors``: int32 (W, n)
    in [0, m).  The product convention is perm_out[t] = x.perm[y.perm[t]],
    colors_out[t] = x.colors[y.perm[t]] + y.colors[t] mod m.
    """
    perms = np.ascontiguousarray(perms, dtype=np.int32)
    colors = np.ascontiguousarray(colors, dtype=np.int32)
    count = perms.shape[0]
    keys = _keys(perms, colors, m)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    mult = np.empty((count, count), dtype=np.int32)
    for j in range(count):
        yp = perms[j]
        yc = colors[j]
        out_perms = perms[:, yp]
        out_colors = (colors[:, yp] + yc[np.newaxis, :]) % m
        out_keys = _keys(out_perms, out_colors, m)
        pos = np.searchsorted(sorted_keys, out_keys)
        if not np.array_equal(sorted_keys[pos], out_keys):
            raise AssertionError("product fell outside the element set")
        mult[:, j] = order[pos]
    return mult


def subgroup_closure(mult: np.ndarray, gens, identity_index: int) -> np.ndarray:
    """Sorted member indices of the subgroup generated by ``gens``."""
    count = mult.shape[0]
    member = np.zeros(count, dtype=bool)
    member[identity_index] = True
    frontier = [int(identity_index)]
    gen_list = sorted({int(g) for g in gens})
    while frontier:
        fresh = []
        for x in frontier:
            row = mult[x]
            for g in gen_list:
                y = int(row[g])
                if not member[y]:
                    member[y] = True
                    fresh.append(y)
        frontier = fresh
    return np.flatnonzero(member).astype(np.int32)
