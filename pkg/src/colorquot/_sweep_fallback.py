"""Pure-Python subset-OR sweep, the fallback when the compiled core is absent."""

from __future__ import annotations


def sweep(cover_masks, target_size):
    """Minimum cover size per subset cardinality, by dynamic programming.

    cover_masks[p] is the bitmask (over a target piece of target_size bits)
    covered by source element p.  Walking subset masks in counting order,
    each OR extends the mask with its lowest set bit, so the table costs one
    OR per subset.  Returns (best, arg): for each k in 0..P, the minimum
    popcount of the union over k-element subsets and the numerically smallest
    subset mask attaining it.
    """
    P = len(cover_masks)
    table = [0] * (1 << P)
    best = [target_size + 1] * (P + 1)
    arg = [0] * (P + 1)
    best[0] = 0
    for m in range(1, 1 << P):
        prev = m & (m - 1)
        word = table[prev] | cover_masks[(m & -m).bit_length() - 1]
        table[m] = word
        k = m.bit_count()
        cov = word.bit_count()
        if cov < best[k]:
            best[k] = cov
            arg[k] = m
    return best, arg
