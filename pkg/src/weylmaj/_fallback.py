"""Pure-Python enumeration kernels, used when the compiled extension is absent.

Mirrors ``_kernels.pyx`` line for line: a depth-first walk over window
prefixes that keeps every statistic up to date incrementally, then adds the
character value at the leaf's statistic.
"""

FAM_S, FAM_B, FAM_D, FAM_DELTA = range(4)
ST_INV, ST_MAJ, ST_FMAJ, ST_DMAJ, ST_LEN_S, ST_LEN_B, ST_LEN_D = range(7)
CH_TRIVIAL, CH_SIGN, CH_NEGPARITY, CH_ABSSIGN = range(4)
MAXN = 16


def _pick(kind, inv, majn, fmaj, dmaj, n1, n2):
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


def accumulate(n, family, stat, chr, sign_len, parity, parity_stat, first=0):
    if n < 0 or n > MAXN:
        raise ValueError(f"rank {n} outside the kernel range 0..{MAXN}")
    if n == 0:
        return [1 if first == 0 and parity != 2 else 0]
    coeffs = [0] * (n * n + 1)
    val = [0] * n
    used = [False] * (n + 1)

    def bkey(x):
        return x if x >= 0 else -(n + 1) - x

    def leaf(inv, majn, majb, majb_abs, n1, n1_prefix, n2, absinv):
        fmaj = 2 * majb + n1
        dmaj = 2 * majb_abs + n1_prefix
        if parity:
            p = _pick(parity_stat, inv, majn, fmaj, dmaj, n1, n2) & 1
            if p != parity - 1:
                return
        e = _pick(stat, inv, majn, fmaj, dmaj, n1, n2)
        if chr == CH_SIGN:
            sgn = _pick(sign_len, inv, majn, fmaj, dmaj, n1, n2) & 1
        elif chr == CH_NEGPARITY:
            sgn = n1 & 1
        elif chr == CH_ABSSIGN:
            sgn = absinv & 1
        else:
            sgn = 0
        coeffs[e] += -1 if sgn else 1

    def dfs(k, inv, majn, majb, n1, n2, absinv):
        last = k == n - 1
        for a in range(1, n + 1):
            if used[a]:
                continue
            for v in (-a, a):
                if k == 0 and first and v != first:
                    continue
                if v < 0 and (family == FAM_S or (last and family == FAM_DELTA)):
                    continue
                neg = v < 0
                if last and family == FAM_D and (n1 + neg) & 1:
                    continue
                di = dn2 = dai = 0
                for j in range(k):
                    u = val[j]
                    if u > v:
                        di += 1
                    if u + v < 0:
                        dn2 += 1
                    if abs(u) > a:
                        dai += 1
                dmn = dmb = dmb_abs = 0
                if k:
                    u = val[k - 1]
                    if u > v:
                        dmn = k
                    if bkey(u) > bkey(v):
                        dmb = k
                    if bkey(u) > a:
                        dmb_abs = k
                if last:
                    leaf(inv + di, majn + dmn, majb + dmb, majb + dmb_abs,
                         n1 + neg, n1, n2 + dn2, absinv + dai)
                else:
                    val[k] = v
                    used[a] = True
                    dfs(k + 1, inv + di, majn + dmn, majb + dmb, n1 + neg,
                        n2 + dn2, absinv + dai)
                    used[a] = False

    dfs(0, 0, 0, 0, 0, 0, 0)
    return coeffs


def _first_bad_pair(w):
    pos = [0] * (len(w) + 1)
    for p, x in enumerate(w):
        pos[abs(x)] = p
    for i in range(1, len(w) // 2 + 1):
        pa, pb = pos[2 * i - 1], pos[2 * i]
        if abs(pa - pb) != 1 or (w[pa] > 0) != (w[pb] > 0):
            return i
    return 0


def _b_profile(w):
    n = len(w)
    inv = n2 = mask = 0
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                inv += 1
            if w[i] + w[j] < 0:
                n2 += 1
        if i + 1 < n and _bkey(w[i], n) > _bkey(w[i + 1], n):
            mask |= 1 << (i + 1)
    neg = sum(1 for x in w if x < 0)
    return mask, neg, inv + neg + n2


def _bkey(x, n):
    return x if x >= 0 else -(n + 1) - x


def involution_census(n):
    if n < 0 or n > MAXN:
        raise ValueError(f"rank {n} outside the kernel range 0..{MAXN}")
    keys = ("elements", "fixed", "not_involutive", "not_preserving",
            "parity_kept", "fixed_even_position", "fixed_odd_neg")
    counts = dict.fromkeys(keys, 0)
    val = [0] * n
    used = [False] * (n + 1)

    def leaf():
        counts["elements"] += 1
        i = _first_bad_pair(val)
        if i == 0:
            counts["fixed"] += 1
            if n % 2 and val.index(n if n in val else -n) % 2:
                counts["fixed_even_position"] += 1
            if n % 2 == 0 and sum(1 for x in val if x < 0) % 2:
                counts["fixed_odd_neg"] += 1
            return
        lo = 2 * i - 1
        v = []
        for x in val:
            a = abs(x)
            s = 1 if x > 0 else -1
            v.append(s * (a + 1) if a == lo else s * (a - 1) if a == lo + 1 else x)
        if _first_bad_pair(v) != i:
            counts["not_involutive"] += 1
        m1, neg1, l1 = _b_profile(val)
        m2, neg2, l2 = _b_profile(v)
        if m1 != m2 or neg1 != neg2:
            counts["not_preserving"] += 1
        if (l1 - l2) % 2 == 0:
            counts["parity_kept"] += 1

    def dfs(k):
        if k == n:
            leaf()
            return
        for a in range(1, n + 1):
            if used[a]:
                continue
            used[a] = True
            for v in (-a, a):
                val[k] = v
                dfs(k + 1)
            used[a] = False

    dfs(0)
    return counts
