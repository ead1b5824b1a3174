# Compiled enumeration of all dicriticities of a small tree.
import numpy as np


def enumerate_admissible(long[:] par0, long[:] par1, long[:] nbr_ptr,
                         long[:] nbr_idx, long[:] nu, long[:] n):
    """Return (admissible bitmasks, number of non-integral configurations).

    Bit ``c`` of a mask is the value of the dicriticity at vertex ``c``.
    ``par0``/``par1`` hold parent ids or -1.
    """
    cdef Py_ssize_t N = n.shape[0]
    cdef unsigned long long mask, total = 1ULL << N
    cdef Py_ssize_t c, k
    cdef long d, sq, e2, white_nb, p
    cdef long[:] sq2 = np.zeros(N, dtype=np.int64)
    cdef long[:] eps2 = np.zeros(N, dtype=np.int64)
    cdef long nonintegral = 0
    cdef bint ok
    admissible = []
    for mask in range(total):
        for c in range(N):
            d = 0
            p = par0[c]
            if p >= 0 and (mask >> p) & 1:
                d += 1
            p = par1[c]
            if p >= 0 and (mask >> p) & 1:
                d += 1
            if (nu[c] - d) % 2 == 0:
                sq2[c] = d - 2 * <long>((mask >> c) & 1)
            else:
                sq2[c] = d - 1
            eps2[c] = n[c] - sq2[c]
        for c in range(N):
            p = par0[c]
            if p >= 0:
                eps2[p] += sq2[c]
            p = par1[c]
            if p >= 0:
                eps2[p] += sq2[c]
        ok = True
        for c in range(N):
            e2 = eps2[c]
            if e2 % 2 != 0:
                nonintegral += 1
                ok = False
                break
            if (mask >> c) & 1:
                if e2 < 2 * n[c]:
                    ok = False
                    break
            else:
                white_nb = 0
                for k in range(nbr_ptr[c], nbr_ptr[c + 1]):
                    white_nb += (mask >> nbr_idx[k]) & 1
                if e2 < 2 * (2 - white_nb):
                    ok = False
                    break
        if ok:
            admissible.append(mask)
    return admissible, nonintegral
