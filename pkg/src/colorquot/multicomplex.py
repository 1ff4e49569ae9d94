"""Colored multicomplexes, f-vectors, and revlex realizability.

A colored multicomplex is a finite divisibility-closed set of monomials,
containing 1, inside an ambient ring with finite type; its f-vector counts
members by degree.  The compressed candidate for an f-vector takes the
revlex-largest monomials of each degree; build_compressed reports the first
closure violation when that candidate fails.  search_realizable decides
realizability outright by exhaustive layered search, which is what exposes
ambients where the compressed candidate is not universal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rings import INF, Monomial, ONE, RingSpec, Variable
from .spaces import (
    MonomialSpace,
    enumerate_piece,
    is_revlex_segment,
    iter_bits,
    piece,
    revlex_segment,
    space_from,
)
from .verify import BudgetExceeded, HypothesisViolation, truncated_univariate_predicate


def _check_finite(ambient: RingSpec):
    if any(ai == INF for ai in ambient.a):
        raise ValueError("multicomplex ambients need a finite type")


@dataclass(frozen=True)
class FVector:
    """Member counts by degree, starting at f_0 = 1 for the empty monomial."""

    entries: tuple

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("an f-vector starts with f_0 = 1")
        if any(not isinstance(e, int) or e < 0 for e in self.entries):
            raise ValueError("f-vector entries are nonnegative integers")
        # trailing zero layers say nothing; store the canonical form
        trimmed = self.entries
        while len(trimmed) > 1 and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        object.__setattr__(self, "entries", trimmed)

    @property
    def top_degree(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, d):
        return self.entries[d] if d < len(self.entries) else 0

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class ColoredMulticomplex:
    """A divisibility-closed monomial set in a finite ambient; checked on build."""

    ambient: RingSpec
    members: frozenset

    def __post_init__(self):
        _check_finite(self.ambient)
        if ONE not in self.members:
            raise ValueError("a multicomplex contains the empty monomial")
        for m in self.members:
            if not self.ambient.admits(m):
                raise ValueError("%s is not in the ambient" % (m,))
            for q in m.lower_neighbors():
                if q not in self.members:
                    raise ValueError(
                        "not divisibility-closed: %s is in, its divisor %s is not"
                        % (m, q)
                    )

    @classmethod
    def from_monomials(cls, ambient: RingSpec, monomials) -> "ColoredMulticomplex":
        return cls(ambient, frozenset(monomials) | {ONE})

    @classmethod
    def full(cls, ambient: RingSpec) -> "ColoredMulticomplex":
        """Every admissible monomial of the ambient."""
        _check_finite(ambient)
        members = []
        for d in range(int(ambient.total_degree_bound()) + 1):
            members.extend(enumerate_piece(ambient, d).members)
        return cls(ambient, frozenset(members))

    @property
    def top_degree(self) -> int:
        return max(m.degree for m in self.members)

    def layer(self, d: int) -> MonomialSpace:
        """The degree-d members as a space in the ambient piece."""
        return space_from(self.ambient, d, (m for m in self.members if m.degree == d))

    def is_compressed(self) -> bool:
        """Every degree slice is a revlex segment of its ambient piece."""
        return all(
            is_revlex_segment(self.layer(d)) for d in range(self.top_degree + 1)
        )


def f_vector(mc: ColoredMulticomplex) -> FVector:
    counts = [0] * (mc.top_degree + 1)
    for m in mc.members:
        counts[m.degree] += 1
    return FVector(tuple(counts))


@dataclass(frozen=True)
class BuildOutcome:
    """Result of build_compressed: the multicomplex, or the first closure break."""

    multicomplex: ColoredMulticomplex | None
    offender: tuple | None  # (member, its missing divisor)

    @property
    def ok(self) -> bool:
        return self.multicomplex is not None


def build_compressed(ambient: RingSpec, f: FVector) -> BuildOutcome:
    """Try the revlex-segment candidate for f; report the first broken divisor.

    Degrees are scanned upward, a degree's members in listing order, and each
    member's divisors largest-first, so the reported offense is deterministic.
    """
    _check_finite(ambient)
    if not isinstance(f, FVector):
        f = FVector(tuple(f))
    segments = []
    for d in range(len(f)):
        size = piece(ambient, d).size
        if f[d] > size:
            raise ValueError(
                "f_%d = %d exceeds the degree-%d piece size %d" % (d, f[d], d, size)
            )
        segments.append(revlex_segment(ambient, d, f[d]))
    for d in range(1, len(f)):
        below = segments[d - 1]
        below_piece = piece(ambient, d - 1)
        for m in segments[d].members:
            divisors = sorted(m.lower_neighbors(), key=below_piece.index_of)
            for q in divisors:
                if q not in below:
                    return BuildOutcome(None, (m, q))
    members = frozenset(m for seg in segments for m in seg.members)
    return BuildOutcome(ColoredMulticomplex(ambient, members), None)


def _search(ambient, f, budget, counter):
    """Layered search core; counter[0] accumulates candidate layer sets tried."""
    from .spaces import divisor_masks

    top = f.top_degree
    pieces = [piece(ambient, d) for d in range(top + 1)]
    if any(f[d] > pieces[d].size for d in range(top + 1)):
        return None
    masks = [0] * (top + 1)
    masks[0] = 1

    def rec(d):
        if d > top:
            members = []
            for dd in range(top + 1):
                members.extend(pieces[dd].members[b] for b in iter_bits(masks[dd]))
            return ColoredMulticomplex(ambient, frozenset(members))
        table = divisor_masks(ambient, d)
        prev = masks[d - 1]
        allowed = [b for b in range(pieces[d].size) if table[b] & ~prev == 0]
        if len(allowed) < f[d]:
            return None
        for combo in itertools.combinations(allowed, f[d]):
            counter[0] += 1
            if counter[0] > budget:
                raise BudgetExceeded(
                    "realizability search passed %d candidate layers" % budget
                )
            masks[d] = 0
            for b in combo:
                masks[d] |= 1 << b
            found = rec(d + 1)
            if found is not None:
                return found
        return None

    if top == 0:
        return ColoredMulticomplex(ambient, frozenset({ONE}))
    return rec(1)


def search_realizable(
    ambient: RingSpec, f: FVector, budget: int = 10**6
) -> ColoredMulticomplex | None:
    """Find any multicomplex with f-vector f, or certify none exists.

    Layers are filled degree by degree; a monomial is allowed once all its
    divisors were chosen below.  Candidate layer sets are tried in the
    lexicographic order of their listing positions, so the first witness is
    deterministic.  Each candidate set costs one unit of budget.
    """
    _check_finite(ambient)
    if not isinstance(f, FVector):
        f = FVector(tuple(f))
    return _search(ambient, f, budget, [0])


def ideal_complement(mc: ColoredMulticomplex, max_degree: int) -> tuple:
    """Per degree up to max_degree, the ambient monomials missing from M."""
    out = []
    for d in range(max_degree + 1):
        pc = piece(mc.ambient, d)
        member_mask = mc.layer(d).mask
        out.append(MonomialSpace(pc, ((1 << pc.size) - 1) & ~member_mask))
    return tuple(out)


def multicomplex_from_complement(ambient: RingSpec, complements) -> ColoredMulticomplex:
    """Inverse of ideal_complement: take what the ideal leaves out, per degree."""
    members = []
    for space in complements:
        pc = piece(ambient, space.degree)
        for b in iter_bits(((1 << pc.size) - 1) & ~space.mask):
            members.append(pc.members[b])
    return ColoredMulticomplex(ambient, frozenset(members) | {ONE})


@dataclass(frozen=True)
class HuntResult:
    """A realizable f-vector the compressed candidate cannot realize."""

    fvector: FVector
    multicomplex: ColoredMulticomplex
    offender: tuple  # (member, missing divisor) from the failed compressed build


def hunt_uncompressible(ambient: RingSpec, budget: int = 10**6) -> HuntResult | None:
    """First realizable f-vector whose compressed candidate breaks closure.

    Candidate f-vectors run in lexicographic order over the ambient's layer
    size ranges; for each one the compressed candidate is built, and only the
    failures are handed to the exhaustive search.  The budget is shared
    across all searches, counted in candidate layer sets.
    """
    _check_finite(ambient)
    top = int(ambient.total_degree_bound())
    sizes = [piece(ambient, d).size for d in range(top + 1)]
    counter = [0]
    for tail in itertools.product(*(range(sizes[d] + 1) for d in range(1, top + 1))):
        f = FVector((1,) + tail)
        outcome = build_compressed(ambient, f)
        if outcome.ok:
            continue
        witness = _search(ambient, f, budget, counter)
        if witness is not None:
            return HuntResult(f, witness, outcome.offender)
    return None


def revlex_characterizes(ambient: RingSpec) -> bool:
    """Whether compressed candidates realize every f-vector of this ambient.

    Requires the ambient to satisfy the working hypotheses: partition sizes
    at least (2,..,2,3), and each color's caps away from x[t,1] summing to
    at least a_t.  True exactly when a is all ones, or n = 1 with the
    min(a, cap) sequence nonincreasing along ascending variables.
    """
    _check_finite(ambient)
    n = ambient.n
    for t in range(1, n + 1):
        need = 3 if t == n else 2
        if ambient.lam[t - 1] < need:
            raise HypothesisViolation(
                "color %d needs at least %d variables" % (t, need)
            )
        others = sum(
            ambient.cap(Variable(t, j)) for j in range(2, ambient.lam[t - 1] + 1)
        )
        if others < ambient.a[t - 1]:
            raise HypothesisViolation(
                "caps on color %d away from x[%d,1] must sum to at least %d"
                % (t, t, ambient.a[t - 1])
            )
    if all(ai == 1 for ai in ambient.a):
        return True
    if n == 1:
        caps = [ambient.cap(Variable(1, j)) for j in range(1, ambient.lam[0] + 1)]
        return truncated_univariate_predicate(ambient.a[0], tuple(reversed(caps)))
    return False
