"""Pure Python integer kernels for the volume-set search.

Both kernels work in a scaled-integer encoding.  With L the least common
multiple of the fiber orders a_i and w_i = L / a_i, every candidate value
of the quantity (sum n_i / a_i - n) equals T / L for the integer

    T = sum n_i * w_i - n * L,

so enumeration, admissibility filtering and deduplication all happen on
plain integers.  The compiled module `_speedups` mirrors these functions
exactly; `_backend` decides which one runs.  This version uses Python
integers throughout and therefore has no overflow limits.
"""

import itertools


def enumerate_classes(a, w, L, g):
    """Search residue/shift classes; map each |T| to its first witness.

    Classes are pairs (r, m) with 0 <= r_i < a_i and
    2 - 2g - |{i : r_i != 0}| <= m <= 2g - 2, visited with r in ascending
    lexicographic order and m ascending, so the stored witness for a given
    |T| is the lexicographically smallest one.  Returns a dict
    {abs(T): (r, m)}.
    """
    out = {}
    for r in itertools.product(*(range(ai) for ai in a)):
        base = sum(ri * wi for ri, wi in zip(r, w))
        nonzero = sum(1 for ri in r if ri)
        for m in range(2 - 2 * g - nonzero, 2 * g - 1):
            key = abs(base + m * L)
            if key not in out:
                out[key] = (r, m)
    return out


def brute_force_classes(a, w, L, g, span):
    """Raw tuple search used as an oracle; returns the set of |T| values.

    Iterates every tuple with n_i in [-span * a_i, span * a_i] and n over
    the window [sum floor(n_i/a_i) - (2g-2), sum ceil(n_i/a_i) + (2g-2)],
    which is exactly the range the floor/ceiling admissibility conditions
    allow; the conditions are still re-checked literally for each tuple.
    """
    s = len(a)
    spread = 2 * g - 2
    seen = set()

    def descend(i, sumw, sumfl, sumce):
        if i == s:
            T = sumw - (sumfl - spread) * L
            for n in range(sumfl - spread, sumce + spread + 1):
                if sumfl - n <= spread and sumce - n >= -spread:
                    seen.add(abs(T))
                T -= L
            return
        ai = a[i]
        wi = w[i]
        for ni in range(-span * ai, span * ai + 1):
            fl = ni // ai
            ce = fl + (1 if ni - fl * ai else 0)
            descend(i + 1, sumw + wi * ni, sumfl + fl, sumce + ce)

    descend(0, 0, 0, 0)
    return seen
