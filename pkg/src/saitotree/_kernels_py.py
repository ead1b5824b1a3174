"""Vectorised numpy version of the dicriticity enumeration kernel."""
import numpy as np

_CHUNK_BITS = 16


def enumerate_admissible(par0, par1, nbr_ptr, nbr_idx, nu, n):
    """Same contract as the compiled kernel."""
    par0 = np.asarray(par0, dtype=np.int64)
    par1 = np.asarray(par1, dtype=np.int64)
    nu = np.asarray(nu, dtype=np.int64)
    n = np.asarray(n, dtype=np.int64)
    N = len(n)
    nbr_ptr = np.asarray(nbr_ptr, dtype=np.int64)
    nbr_idx = np.asarray(nbr_idx, dtype=np.int64)
    # neighbour incidence matrix, N x N
    adj = np.zeros((N, N), dtype=np.int64)
    for c in range(N):
        adj[c, nbr_idx[nbr_ptr[c]:nbr_ptr[c + 1]]] = 1
    shifts = np.arange(N, dtype=np.uint64)
    admissible = []
    nonintegral = 0
    total = 1 << N
    step = 1 << min(N, _CHUNK_BITS)
    for start in range(0, total, step):
        masks = np.arange(start, min(start + step, total), dtype=np.uint64)
        D = ((masks[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.int64)
        Dpad = np.concatenate([D, np.zeros((len(masks), 1), dtype=np.int64)], axis=1)
        delta = Dpad[:, par0] + Dpad[:, par1]  # index -1 hits the zero column
        even = (nu[None, :] - delta) % 2 == 0
        sq2 = np.where(even, delta - 2 * D, delta - 1)
        eps2 = n[None, :] - sq2
        for p in (par0, par1):
            has = p >= 0
            np.add.at(eps2.T, p[has], sq2[:, has].T)
        odd = (eps2 % 2 != 0).any(axis=1)
        nonintegral += int(odd.sum())
        white_nb = D @ adj.T
        bound2 = np.where(D == 1, 2 * n[None, :], 2 * (2 - white_nb))
        ok = (~odd) & (eps2 >= bound2).all(axis=1)
        admissible.extend(int(m) for m in masks[ok])
    return admissible, nonintegral
