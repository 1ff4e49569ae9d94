"""Kernel dispatch: compiled sweep when the extension built, pure Python otherwise."""

from __future__ import annotations

try:
    from . import _sweepcore
    HAVE_COMPILED = True
except ImportError:
    _sweepcore = None
    HAVE_COMPILED = False

from . import _sweep_fallback

# A P-element sweep tables 2^P word rows; keep an absolute ceiling so a bad
# budget upstream turns into a clean error instead of an allocation storm.
_MAX_TABLE_BYTES = 2_000_000_000


def sweep_min_cover(cover_masks, target_size: int, force: str | None = None):
    """Minimum union size over k-subsets of cover_masks, for every k at once.

    Returns (best, arg) as tuples indexed by cardinality k = 0..P: the least
    popcount of an OR over any k of the masks, and the numerically smallest
    subset mask attaining it.  force picks "compiled" or "python" explicitly;
    the default takes the compiled core when it imported.
    """
    P = len(cover_masks)
    words = max(1, (target_size + 63) // 64)
    if (1 << P) * words * 8 > _MAX_TABLE_BYTES:
        raise MemoryError("sweep over %d elements would exceed the table ceiling" % P)
    if force not in (None, "compiled", "python"):
        raise ValueError("force must be 'compiled' or 'python'")
    if force == "compiled" and not HAVE_COMPILED:
        raise RuntimeError("compiled sweep core is not available")
    use_compiled = HAVE_COMPILED if force is None else force == "compiled"
    if not use_compiled:
        best, arg = _sweep_fallback.sweep(tuple(cover_masks), target_size)
        return tuple(best), tuple(arg)
    import numpy as np

    packed = np.zeros((P, words), dtype=np.uint64)
    for p, mask in enumerate(cover_masks):
        for w in range(words):
            packed[p, w] = (mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    best, arg = _sweepcore.sweep(packed, target_size)
    return tuple(int(x) for x in best), tuple(int(x) for x in arg)
