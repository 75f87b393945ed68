# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.  Same contract as :mod:`weylmaj._fallback`."""

from libc.stdint cimport int64_t
from libc.string cimport memset
from libc.stdlib cimport calloc, free

cdef enum:
    MAXN = 16

cdef enum:
    FAM_S = 0
    FAM_B = 1
    FAM_D = 2
    FAM_DELTA = 3

cdef enum:
    ST_INV = 0
    ST_MAJ = 1
    ST_FMAJ = 2
    ST_DMAJ = 3
    ST_LEN_S = 4
    ST_LEN_B = 5
    ST_LEN_D = 6

cdef enum:
    CH_TRIVIAL = 0
    CH_SIGN = 1
    CH_NEGPARITY = 2
    CH_ABSSIGN = 3


cdef struct Ctx:
    int n
    int family
    int stat
    int chr
    int sign_len
    int parity
    int parity_stat
    int first
    int val[MAXN]
    int used[MAXN + 1]
    int64_t *coeffs


cdef inline int bkey(int x, int n) nogil:
    if x >= 0:
        return x
    return -(n + 1) - x


cdef inline int pick(int kind, int inv, int majn, int fmaj, int dmaj,
                     int n1, int n2) nogil:
    if kind == ST_INV or kind == ST_LEN_S:
        return inv
    if kind == ST_MAJ:
        return majn
    if kind == ST_FMAJ:
        return fmaj
    if kind == ST_DMAJ:
        return dmaj
    if kind == ST_LEN_B:
        return inv + n1 + n2
    return inv + n2


cdef void leaf(Ctx *c, int inv, int majn, int majb, int majb_abs,
               int n1, int n1_prefix, int n2, int absinv) nogil:
    cdef int fmaj = 2 * majb + n1
    cdef int dmaj = 2 * majb_abs + n1_prefix
    cdef int e = pick(c.stat, inv, majn, fmaj, dmaj, n1, n2)
    cdef int p, sgn
    if c.parity != 0:
        p = pick(c.parity_stat, inv, majn, fmaj, dmaj, n1, n2) & 1
        if (c.parity == 1 and p != 0) or (c.parity == 2 and p != 1):
            return
    sgn = 0
    if c.chr == CH_SIGN:
        sgn = pick(c.sign_len, inv, majn, fmaj, dmaj, n1, n2) & 1
    elif c.chr == CH_NEGPARITY:
        sgn = n1 & 1
    elif c.chr == CH_ABSSIGN:
        sgn = absinv & 1
    if sgn:
        c.coeffs[e] -= 1
    else:
        c.coeffs[e] += 1


cdef void dfs(Ctx *c, int k, int inv, int majn, int majb, int n1, int n2,
              int absinv) nogil:
    cdef int n = c.n
    cdef int a, s, v, j, u, di, dn2, dai, dmn, dmb, dmb_abs, last
    last = (k == n - 1)
    for a in range(1, n + 1):
        if c.used[a]:
            continue
        for s in range(2):
            v = -a if s == 0 else a
            if k == 0 and c.first != 0 and v != c.first:
                continue
            if v < 0:
                if c.family == FAM_S:
                    continue
                if last and c.family == FAM_DELTA:
                    continue
            if last and c.family == FAM_D and ((n1 + (v < 0)) & 1):
                continue
            di = 0
            dn2 = 0
            dai = 0
            for j in range(k):
                u = c.val[j]
                if u > v:
                    di += 1
                if u + v < 0:
                    dn2 += 1
                if (u if u > 0 else -u) > a:
                    dai += 1
            dmn = 0
            dmb = 0
            dmb_abs = 0
            if k > 0:
                u = c.val[k - 1]
                if u > v:
                    dmn = k
                if bkey(u, n) > bkey(v, n):
                    dmb = k
                if bkey(u, n) > a:
                    dmb_abs = k
            if last:
                leaf(c, inv + di, majn + dmn, majb + dmb, majb + dmb_abs,
                     n1 + (v < 0), n1, n2 + dn2, absinv + dai)
            else:
                c.val[k] = v
                c.used[a] = 1
                dfs(c, k + 1, inv + di, majn + dmn, majb + dmb, n1 + (v < 0),
                    n2 + dn2, absinv + dai)
                c.used[a] = 0


def accumulate(int n, int family, int stat, int chr, int sign_len,
               int parity, int parity_stat, int first=0):
    """Signed histogram ``{stat: sum of character values}`` as a dense list."""
    if n < 0 or n > MAXN:
        raise ValueError(f"rank {n} outside the kernel range 0..{MAXN}")
    cdef int size = n * n + 1
    cdef Ctx c
    cdef int64_t *buf
    if n == 0:
        return [1 if first == 0 and parity != 2 else 0]
    buf = <int64_t *> calloc(size, sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    memset(&c, 0, sizeof(Ctx))
    c.n = n
    c.family = family
    c.stat = stat
    c.chr = chr
    c.sign_len = sign_len
    c.parity = parity
    c.parity_stat = parity_stat
    c.first = first
    c.coeffs = buf
    try:
        with nogil:
            dfs(&c, 0, 0, 0, 0, 0, 0, 0)
        return [buf[i] for i in range(size)]
    finally:
        free(buf)


cdef struct Census:
    int n
    int val[MAXN]
    int used[MAXN + 1]
    int64_t counts[7]


cdef int first_bad_pair(int *w, int n) nogil:
    cdef int pos[MAXN + 1]
    cdef int p, i, pa, pb
    for p in range(n):
        pos[w[p] if w[p] > 0 else -w[p]] = p
    for i in range(1, n // 2 + 1):
        pa = pos[2 * i - 1]
        pb = pos[2 * i]
        if (pa - pb != 1 and pb - pa != 1) or ((w[pa] > 0) != (w[pb] > 0)):
            return i
    return 0


cdef void b_profile(int *w, int n, int *desmask, int *n1, int *lenb) nogil:
    cdef int i, j, inv = 0, neg = 0, n2 = 0, mask = 0
    for i in range(n):
        if w[i] < 0:
            neg += 1
        for j in range(i + 1, n):
            if w[i] > w[j]:
                inv += 1
            if w[i] + w[j] < 0:
                n2 += 1
        if i + 1 < n and bkey(w[i], n) > bkey(w[i + 1], n):
            mask |= 1 << (i + 1)
    desmask[0] = mask
    n1[0] = neg
    lenb[0] = inv + neg + n2


cdef void census_leaf(Census *c) nogil:
    cdef int n = c.n
    cdef int v[MAXN]
    cdef int i, p, a, lo, m1, m2, neg1, neg2, l1, l2
    c.counts[0] += 1
    i = first_bad_pair(c.val, n)
    if i == 0:
        c.counts[1] += 1
        if n % 2 == 1:
            for p in range(n):
                if c.val[p] == n or c.val[p] == -n:
                    if p % 2 == 1:
                        c.counts[5] += 1
        b_profile(c.val, n, &m1, &neg1, &l1)
        if neg1 % 2 == 1 and n % 2 == 0:
            c.counts[6] += 1
        return
    lo = 2 * i - 1
    for p in range(n):
        a = c.val[p] if c.val[p] > 0 else -c.val[p]
        if a == lo:
            v[p] = c.val[p] + (1 if c.val[p] > 0 else -1)
        elif a == lo + 1:
            v[p] = c.val[p] - (1 if c.val[p] > 0 else -1)
        else:
            v[p] = c.val[p]
    if first_bad_pair(v, n) != i:
        c.counts[2] += 1
    b_profile(c.val, n, &m1, &neg1, &l1)
    b_profile(v, n, &m2, &neg2, &l2)
    if m1 != m2 or neg1 != neg2:
        c.counts[3] += 1
    if (l1 - l2) % 2 == 0:
        c.counts[4] += 1


cdef void census_dfs(Census *c, int k) nogil:
    cdef int a, s
    if k == c.n:
        census_leaf(c)
        return
    for a in range(1, c.n + 1):
        if c.used[a]:
            continue
        c.used[a] = 1
        for s in range(2):
            c.val[k] = -a if s == 0 else a
            census_dfs(c, k + 1)
        c.used[a] = 0


def involution_census(int n):
    """Exhaustive check of the pairing involution on B_n.

    Returns a dict with ``elements``, ``fixed`` and violation counts
    ``not_involutive``, ``not_preserving`` (descent set or negative count
    changed), ``parity_kept`` (B_n length parity unchanged),
    ``fixed_even_position`` (odd rank: letter n off an odd position) and
    ``fixed_odd_neg`` (even rank: fixed point with an odd negative count).
    """
    if n < 0 or n > MAXN:
        raise ValueError(f"rank {n} outside the kernel range 0..{MAXN}")
    cdef Census c
    memset(&c, 0, sizeof(Census))
    c.n = n
    with nogil:
        census_dfs(&c, 0)
    keys = ("elements", "fixed", "not_involutive", "not_preserving",
            "parity_kept", "fixed_even_position", "fixed_odd_neg")
    return {k: int(c.counts[j]) for j, k in enumerate(keys)}
