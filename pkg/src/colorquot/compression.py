"""Color compression: fibers over one color, the sweep to a quasi-compressed space.

Compressing along color t splits a space into fibers by color-t part q and
replaces each fiber, read in the ring with color t deleted, by the revlex
segment of its size.  For a full graded piece the fiber over q is exactly the
deleted ring's piece of the complementary degree, and parent revlex order on
the fiber agrees with deleted-ring revlex order of the quotients, so each
replacement is a prefix of the fiber's index list.  No deleted-ring
enumeration is needed to compress; fibers are materialized only on request.
"""

from __future__ import annotations

from functools import lru_cache

from .rings import Monomial, RingSpec, Variable
from .spaces import MonomialSpace, iter_bits, norm, piece, space_from


@lru_cache(maxsize=None)
def del_spec(spec: RingSpec, t: int) -> RingSpec:
    """The ring with color t deleted, remaining colors relabeled in order."""
    if spec.n < 2:
        raise ValueError("deleting a color needs at least two colors")
    if not 1 <= t <= spec.n:
        raise ValueError("color %d out of range 1..%d" % (t, spec.n))
    keep = [i for i in range(spec.n) if i != t - 1]
    phi = None
    if spec.phi is not None:
        blocks = []
        offset = 0
        for i, li in enumerate(spec.lam):
            if i != t - 1:
                blocks.extend(spec.phi[offset : offset + li])
            offset += li
        phi = tuple(blocks)
    return RingSpec(
        a=tuple(spec.a[i] for i in keep),
        lam=tuple(spec.lam[i] for i in keep),
        phi=phi,
    )


def _to_child(m: Monomial, t: int) -> Monomial:
    """Relabel a monomial with no color-t variables into the deleted ring."""
    return Monomial.make(
        (Variable(v.color - 1 if v.color > t else v.color, v.index), e)
        for v, e in m.exps
    )


def _fiber_degree(space: MonomialSpace, t: int, q: Monomial) -> int:
    if any(v.color != t for v in q.support()):
        raise ValueError("%s is not supported on the color-%d variables" % (q, t))
    if q.degree > space.degree:
        raise ValueError("fiber degree would be negative")
    return space.degree - q.degree


def fiber(space: MonomialSpace, t: int, q: Monomial) -> MonomialSpace:
    """The members of the space with color-t part q, moved to the deleted ring."""
    child = del_spec(space.spec, t)
    child_degree = _fiber_degree(space, t, q)
    quotients = [
        _to_child(m.over(q), t) for m in space.members if m.part(t) == q
    ]
    return space_from(child, child_degree, quotients)


@lru_cache(maxsize=None)
def _fiber_table(spec: RingSpec, degree: int, t: int):
    """Per color-t part q: the fiber's index mask and its prefix masks.

    Fiber indices ascend with deleted-ring revlex rank of the quotients, so
    prefix s of the index list is the size-s revlex segment of the fiber.
    """
    pc = piece(spec, degree)
    fibers = {}
    for idx, m in enumerate(pc.members):
        fibers.setdefault(m.part(t), []).append(idx)
    table = {}
    for q, indices in fibers.items():
        prefixes = [0]
        for idx in indices:
            prefixes.append(prefixes[-1] | (1 << idx))
        table[q] = (prefixes[-1], tuple(prefixes))
    return table


def compress(space: MonomialSpace, t: int) -> MonomialSpace:
    """Replace each color-t fiber by the revlex segment of its size."""
    spec = space.spec
    if not 1 <= t <= spec.n:
        raise ValueError("color %d out of range 1..%d" % (t, spec.n))
    if spec.n == 1:
        return space
    out = 0
    for fiber_mask, prefixes in _fiber_table(spec, space.degree, t).values():
        out |= prefixes[(space.mask & fiber_mask).bit_count()]
    return MonomialSpace(space.piece, out)


def is_quasi_compressed(space: MonomialSpace) -> bool:
    """Fixed under compression along every color."""
    return all(
        compress(space, t).mask == space.mask for t in range(1, space.spec.n + 1)
    )


def quasi_compress(space: MonomialSpace):
    """Compress along the first norm-dropping color until no color moves.

    Returns (space, trace) with one (t, norm after the step) entry per applied
    compression.  Each step strictly drops the norm, which bounds the loop.
    """
    trace = []
    current = space
    moved = True
    while moved:
        moved = False
        for t in range(1, space.spec.n + 1):
            compressed = compress(current, t)
            if compressed.mask != current.mask:
                current = compressed
                trace.append((t, norm(current)))
                moved = True
                break
    return current, trace
