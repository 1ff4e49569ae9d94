"""Graded pieces, lex/revlex segments, shadows, and the segment norm.

The degree-d piece of a ring is listed in descending revlex order, so rank 1
is the revlex-largest member.  Within one piece, descending revlex coincides
with ascending lex, which makes the listing double as the lex order read
backwards: a lex segment is a suffix of the listing, a revlex segment a
prefix.  Subsets of a piece are bitmasks over the listing (bit b = rank b+1),
which keeps shadows and the compression sweeps cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .rings import INF, Monomial, ONE, RingSpec, Variable


def iter_bits(mask: int):
    """Indices of the set bits of mask, ascending."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


@dataclass(frozen=True)
class GradedPiece:
    """One degree's monomials, descending revlex; rank r lives at members[r-1]."""

    spec: RingSpec
    degree: int
    members: tuple

    @property
    def size(self) -> int:
        return len(self.members)

    @cached_property
    def _index(self):
        return {m: b for b, m in enumerate(self.members)}

    def index_of(self, m: Monomial) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise ValueError("%s is not in the degree-%d piece" % (m, self.degree))

    def rank(self, m: Monomial) -> int:
        """1-based rank; rank 1 is the revlex-largest monomial."""
        return self.index_of(m) + 1

    def by_rank(self, r: int) -> Monomial:
        if not 1 <= r <= self.size:
            raise ValueError("rank %d out of range 1..%d" % (r, self.size))
        return self.members[r - 1]

    def mask_of(self, monomials) -> int:
        mask = 0
        for m in monomials:
            mask |= 1 << self.index_of(m)
        return mask


@dataclass(frozen=True)
class MonomialSpace:
    """A subset of one graded piece, held as a bitmask over its listing."""

    piece: GradedPiece
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.piece.size):
            raise ValueError("mask does not fit the piece")

    @property
    def spec(self) -> RingSpec:
        return self.piece.spec

    @property
    def degree(self) -> int:
        return self.piece.degree

    @property
    def members(self) -> tuple:
        """Selected monomials, descending revlex."""
        return tuple(self.piece.members[b] for b in iter_bits(self.mask))

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return self.size

    def __contains__(self, m):
        return isinstance(m, Monomial) and bool(self.mask >> self.piece._index.get(m, self.piece.size) & 1)


def _bounded_compositions(total, bounds):
    """All tuples t with sum(t) == total and 0 <= t[k] <= bounds[k]."""
    if not bounds:
        if total == 0:
            yield ()
        return
    for e in range(min(bounds[0], total), -1, -1):
        for rest in _bounded_compositions(total - e, bounds[1:]):
            yield (e,) + rest


@lru_cache(maxsize=None)
def _color_parts(spec: RingSpec, i: int, e: int) -> tuple:
    """Degree-e monomials supported on the color-i variables, caps respected."""
    variables = [Variable(i, j) for j in range(1, spec.lam[i - 1] + 1)]
    bounds = [int(min(spec.cap(v), e)) for v in variables]
    parts = []
    for exps in _bounded_compositions(e, bounds):
        parts.append(Monomial.make(zip(variables, exps)))
    return tuple(parts)


@lru_cache(maxsize=None)
def piece(spec: RingSpec, degree: int) -> GradedPiece:
    """The degree-d graded piece, listed in descending revlex order."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    options = []
    for i in range(1, spec.n + 1):
        color_cap = int(min(spec.a[i - 1], degree))
        opts = []
        for e in range(color_cap + 1):
            opts.extend((e, p) for p in _color_parts(spec, i, e))
        options.append(opts)
    members = []

    def rec(idx, remaining, acc):
        if idx == spec.n:
            if remaining == 0:
                members.append(acc)
            return
        for e, part in options[idx]:
            if e <= remaining:
                rec(idx + 1, remaining - e, acc.times(part))

    rec(0, degree, ONE)
    order = spec.variables_descending()
    members.sort(key=lambda m: tuple(m.exponent(v) for v in order))
    return GradedPiece(spec, degree, tuple(members))


def enumerate_piece(spec: RingSpec, degree: int) -> MonomialSpace:
    """The full degree-d piece as a space (empty once the degree outruns the ring)."""
    pc = piece(spec, degree)
    return MonomialSpace(pc, (1 << pc.size) - 1)


def space_from(spec: RingSpec, degree: int, monomials) -> MonomialSpace:
    """Wrap an explicit monomial collection as a space; rejects non-members."""
    pc = piece(spec, degree)
    return MonomialSpace(pc, pc.mask_of(monomials))


def revlex_segment(spec: RingSpec, degree: int, k: int) -> MonomialSpace:
    """The k revlex-largest monomials of the piece."""
    pc = piece(spec, degree)
    if not 0 <= k <= pc.size:
        raise ValueError("segment size %d out of range 0..%d" % (k, pc.size))
    return MonomialSpace(pc, (1 << k) - 1)


def lex_segment(spec: RingSpec, degree: int, k: int) -> MonomialSpace:
    """The k lex-largest monomials of the piece (a suffix of the listing)."""
    pc = piece(spec, degree)
    if not 0 <= k <= pc.size:
        raise ValueError("segment size %d out of range 0..%d" % (k, pc.size))
    return MonomialSpace(pc, ((1 << k) - 1) << (pc.size - k))


@lru_cache(maxsize=None)
def divisor_masks(spec: RingSpec, degree: int) -> tuple:
    """Per member of the degree-d piece, the mask of its divisors one degree down."""
    if degree < 1:
        raise ValueError("no divisor table below degree 1")
    pc, below = piece(spec, degree), piece(spec, degree - 1)
    out = []
    for m in pc.members:
        mask = 0
        for q in m.lower_neighbors():
            mask |= 1 << below.index_of(q)
        out.append(mask)
    return tuple(out)


@lru_cache(maxsize=None)
def up_masks(spec: RingSpec, degree: int) -> tuple:
    """Per member of the degree-d piece, the mask of its live variable multiples."""
    pc, above = piece(spec, degree), piece(spec, degree + 1)
    out = []
    for m in pc.members:
        mask = 0
        for v in spec.variables:
            cand = m.times_var(v)
            if spec.admits(cand):
                mask |= 1 << above.index_of(cand)
        out.append(mask)
    return tuple(out)


def lower_shadow(space: MonomialSpace) -> MonomialSpace:
    """All degree-(d-1) divisors of the space's members."""
    if space.degree == 0:
        raise ValueError("the degree-0 piece has no lower shadow")
    table = divisor_masks(space.spec, space.degree)
    mask = 0
    for b in iter_bits(space.mask):
        mask |= table[b]
    return MonomialSpace(piece(space.spec, space.degree - 1), mask)


def upper_shadow(space: MonomialSpace) -> MonomialSpace:
    """All live variable multiples of the space's members, one degree up."""
    table = up_masks(space.spec, space.degree)
    mask = 0
    for b in iter_bits(space.mask):
        mask |= table[b]
    return MonomialSpace(piece(space.spec, space.degree + 1), mask)


def norm(space: MonomialSpace) -> int:
    """Sum of the 1-based ranks of the members; revlex segments minimize it."""
    return sum(b + 1 for b in iter_bits(space.mask))


def is_revlex_segment(space: MonomialSpace) -> bool:
    return space.mask & (space.mask + 1) == 0


def is_lex_segment(space: MonomialSpace) -> bool:
    k = space.mask.bit_count()
    return space.mask == ((1 << k) - 1) << (space.piece.size - k)
