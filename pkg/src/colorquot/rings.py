"""Ring specifications, variables, monomials, and the lex/revlex comparators.

A colored quotient ring has its variables split into n ordered color classes,
with lambda_i variables of color i.  A monomial survives the quotient when its
color-i degree stays at most a_i for every color (a_i = inf puts no bound).
An optional cap phi(x) on each variable's exponent truncates the ring further.
The coefficient field never materializes; everything here is the combinatorics
of the surviving monomials.

Variables are ordered by x[i,j] > x[i',j'] iff j > j', or j = j' and i < i'.
Lex compares same-degree monomials at the largest variable where exponents
differ (the smaller exponent there loses); revlex is the exact reversal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

INF = math.inf


class Variable(NamedTuple):
    color: int
    index: int

    def __str__(self):
        return "x[%d,%d]" % (self.color, self.index)

    def order_key(self):
        """Sort key realizing the variable order: ascending key = ascending variable."""
        return (self.index, -self.color)


def compare_variables(x: Variable, y: Variable) -> int:
    """Total order on variables: positive if x > y, negative if x < y, 0 if equal."""
    kx, ky = x.order_key(), y.order_key()
    return (kx > ky) - (kx < ky)


@dataclass(frozen=True)
class RingSpec:
    """Type a, composition lam, optional per-variable caps phi.

    phi, when present, lists one cap per variable grouped by color:
    x[1,1]..x[1,lam_1], then x[2,1]..x[2,lam_2], and so on.
    """

    a: tuple
    lam: tuple
    phi: tuple | None = None

    def __post_init__(self):
        if len(self.a) != len(self.lam) or not self.a:
            raise ValueError("a and lam must be nonempty tuples of equal length")
        for ai in self.a:
            if ai != INF and (not isinstance(ai, int) or ai < 1):
                raise ValueError("entries of a must be positive integers or INF")
        for li in self.lam:
            if not isinstance(li, int) or li < 1:
                raise ValueError("entries of lam must be positive integers")
        if self.phi is not None:
            if len(self.phi) != sum(self.lam):
                raise ValueError("phi must list one cap per variable")
            for c in self.phi:
                if c != INF and (not isinstance(c, int) or c < 1):
                    raise ValueError("phi caps must be positive integers or INF")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def variables(self) -> tuple:
        """All variables, grouped by color, index ascending (phi's listing order)."""
        return tuple(
            Variable(i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.lam[i - 1] + 1)
        )

    def variables_ascending(self) -> list:
        """All variables sorted ascending in the variable order (smallest first)."""
        return sorted(self.variables, key=Variable.order_key)

    def variables_descending(self) -> list:
        return sorted(self.variables, key=Variable.order_key, reverse=True)

    def check_variable(self, v: Variable):
        if not (1 <= v.color <= self.n and 1 <= v.index <= self.lam[v.color - 1]):
            raise ValueError("%s is not a variable of this ring" % (v,))

    def cap(self, v: Variable):
        """Exponent cap on v: phi(v) when truncated, INF otherwise."""
        self.check_variable(v)
        if self.phi is None:
            return INF
        offset = sum(self.lam[: v.color - 1]) + v.index - 1
        return self.phi[offset]

    @property
    def is_truncated(self) -> bool:
        return self.phi is not None

    def admits(self, m: "Monomial") -> bool:
        """Whether m survives the quotient: color degrees within a, exponents within phi."""
        for i in m.colors():
            if m.color_degree(i) > self.a[i - 1]:
                return False
        if self.phi is not None:
            for v, e in m.exps:
                if e > self.cap(v):
                    return False
        return True

    def total_degree_bound(self):
        """Largest degree with a nonempty graded piece (INF when unbounded)."""
        bound = 0
        for i in range(1, self.n + 1):
            color_total = 0
            for j in range(1, self.lam[i - 1] + 1):
                color_total += self.cap(Variable(i, j))
            bound += min(self.a[i - 1], color_total)
        return bound


@dataclass(frozen=True)
class Monomial:
    """A monomial as its nonzero exponents, largest variable first."""

    exps: tuple
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        keys = [v.order_key() for v, _ in self.exps]
        if sorted(keys, reverse=True) != keys or len(set(keys)) != len(keys):
            raise ValueError("exponents must be sorted by descending variable, no repeats")
        if any(e < 1 for _, e in self.exps):
            raise ValueError("exponents must be positive")
        object.__setattr__(self, "degree", sum(e for _, e in self.exps))

    @classmethod
    def make(cls, items: Iterable) -> "Monomial":
        """Build from (variable, exponent) pairs or a dict; zero exponents dropped."""
        if hasattr(items, "items"):
            items = items.items()
        pairs = [(v, e) for v, e in items if e != 0]
        pairs.sort(key=lambda ve: ve[0].order_key(), reverse=True)
        return cls(tuple(pairs))

    def exponent(self, v: Variable) -> int:
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    def support(self) -> tuple:
        return tuple(v for v, _ in self.exps)

    def colors(self) -> set:
        """The set of colors appearing in this monomial."""
        return {v.color for v, _ in self.exps}

    def color_degree(self, i: int) -> int:
        return sum(e for v, e in self.exps if v.color == i)

    def part(self, i: int) -> "Monomial":
        """The restriction of this monomial to the color-i variables."""
        return Monomial(tuple((v, e) for v, e in self.exps if v.color == i))

    def times_var(self, v: Variable) -> "Monomial":
        return Monomial.make({**dict(self.exps), v: self.exponent(v) + 1})

    def over_var(self, v: Variable) -> "Monomial":
        e = self.exponent(v)
        if e == 0:
            raise ValueError("%s does not divide %s" % (v, self))
        return Monomial.make({**dict(self.exps), v: e - 1})

    def times(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exps)
        for v, e in other.exps:
            merged[v] = merged.get(v, 0) + e
        return Monomial.make(merged)

    def divides(self, other: "Monomial") -> bool:
        return all(other.exponent(v) >= e for v, e in self.exps)

    def over(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError("%s does not divide %s" % (other, self))
        merged = dict(self.exps)
        for v, e in other.exps:
            merged[v] -= e
        return Monomial.make(merged)

    def lower_neighbors(self):
        """All degree-(deg-1) divisors, one per support variable."""
        return [self.over_var(v) for v in self.support()]

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join("%s^%d" % (v, e) for v, e in self.exps)

    def __repr__(self):
        return "Monomial(%s)" % self

ONE = Monomial(())


def compare_lex(m: Monomial, m2: Monomial) -> int:
    """Lex order on same-degree monomials; positive if m > m2."""
    if m.degree != m2.degree:
        raise ValueError("lex compares monomials of equal degree only")
    merged = {v for v, _ in m.exps} | {v for v, _ in m2.exps}
    for v in sorted(merged, key=Variable.order_key, reverse=True):
        e1, e2 = m.exponent(v), m2.exponent(v)
        if e1 != e2:
            return 1 if e1 > e2 else -1
    return 0


def compare_revlex(m: Monomial, m2: Monomial) -> int:
    """Revlex order: the exact reversal of lex. Positive if m > m2 in revlex."""
    return -compare_lex(m, m2)


@dataclass(frozen=True)
class ClassificationVerdict:
    kind: str  # "Mixed" | "Hinged" | "Neither"
    r: int | None = None
    witness: str | None = None


def _nondecreasing(seq) -> bool:
    return all(seq[i] <= seq[i + 1] for i in range(len(seq) - 1))


def classify(spec: RingSpec) -> ClassificationVerdict:
    """Decide the mixed / hinged shape of an untruncated ring.

    Mixed with split r: a_i = 1 for i <= r, lam_i = 1 for i > r, and the tail
    a_{r+1} <= ... <= a_n.  Hinged: a nondecreasing and lam_i = 1 for i != 1.
    Returns Mixed with the smallest valid r, else Hinged, else Neither.
    """
    if spec.is_truncated:
        raise ValueError("classification covers untruncated rings only")
    a, lam, n = spec.a, spec.lam, spec.n
    for r in range(n + 1):
        if (
            all(a[i] == 1 for i in range(r))
            and all(lam[i] == 1 for i in range(r, n))
            and _nondecreasing(a[r:])
        ):
            return ClassificationVerdict("Mixed", r=r)
    if _nondecreasing(a) and all(lam[i] == 1 for i in range(1, n)):
        return ClassificationVerdict("Hinged")
    reasons = []
    if not _nondecreasing(a):
        reasons.append("a is not nondecreasing")
    multi = [i + 1 for i in range(1, n) if lam[i] > 1]
    if multi:
        reasons.append("lam_%d > 1 outside color 1" % multi[0])
    if not reasons:
        reasons.append("no split r fits the mixed shape")
    return ClassificationVerdict("Neither", witness="; ".join(reasons))
