"""Macaulay-Lex verification by exhaustive sweep, and an explicit refutation builder.

An untruncated ring is Macaulay-Lex exactly when every revlex segment
minimizes the lower shadow among subsets of its size, so the verifier sweeps
all subsets per degree and compares against the segment.  For truncations the
working criterion moves up a degree: the lex segment must minimize the upper
shadow.  Both sweeps run on the subset-OR kernel; budgets stop the scan with
an explicit truncation record rather than silently dropping degrees.

build_counterexample follows an explicit recipe that, for any type with an
entry below the target degree and enough room in the caps, produces a space
whose lower shadow beats the revlex segment of its size.  Every intermediate
claim of the recipe is re-checked here, and the final shadow comparison is
recomputed from scratch, so a returned artifact is always a genuine witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .kernel import sweep_min_cover
from .rings import INF, Monomial, ONE, RingSpec, Variable, compare_revlex
from .spaces import (
    MonomialSpace,
    divisor_masks,
    iter_bits,
    lex_segment,
    lower_shadow,
    piece,
    revlex_segment,
    space_from,
    up_masks,
    upper_shadow,
)


class BudgetExceeded(RuntimeError):
    """An exhaustive sweep was requested beyond the configured budget."""


class HypothesisViolation(ValueError):
    """The refutation recipe's hypotheses do not hold for these inputs."""


class ConstructionError(RuntimeError):
    """An internal step of the refutation recipe failed its own check."""


@dataclass(frozen=True)
class Budget:
    """Limits for exhaustive subset sweeps: 2^piece evaluations per degree."""

    piece_limit: int = 20
    max_evals: int = 1 << 22


@dataclass(frozen=True)
class BudgetTruncation:
    degree: int
    reason: str


@dataclass(frozen=True)
class RefutationWitness:
    """A subset whose shadow beats the segment of its size.

    For the lower route min_shadow = |lower shadow of space| and
    segment_shadow = |lower shadow of the size-k revlex segment|; for the
    upper route the shadows are upper and the segment is the lex segment.
    Either way min_shadow < segment_shadow is the refutation.
    """

    degree: int
    size: int
    space: MonomialSpace
    min_shadow: int
    segment_shadow: int


@dataclass(frozen=True)
class VerificationReport:
    spec: RingSpec
    max_degree: int
    degree_range: tuple
    budget: Budget
    verdict: str  # "Refuted" | "Verified-up-to-budget"
    route: str  # "lower-revlex" | "upper-lex"
    witness: RefutationWitness | None = None
    truncation: BudgetTruncation | None = None
    evals: int = 0


def min_shadow_oracle(spec: RingSpec, degree: int, k: int, budget: Budget | None = None) -> int:
    """Minimum lower-shadow size over all k-subsets of the degree-d piece."""
    budget = budget or Budget()
    if degree < 1:
        raise ValueError("lower shadows start at degree 1")
    P = piece(spec, degree).size
    if not 0 <= k <= P:
        raise ValueError("subset size %d out of range 0..%d" % (k, P))
    if P > budget.piece_limit:
        raise BudgetExceeded(
            "piece size %d exceeds the sweep limit %d" % (P, budget.piece_limit)
        )
    if (1 << P) > budget.max_evals:
        raise BudgetExceeded(
            "sweep needs %d evaluations, budget allows %d" % (1 << P, budget.max_evals)
        )
    best, _ = sweep_min_cover(divisor_masks(spec, degree), piece(spec, degree - 1).size)
    return best[k]


def _checked_witness(spec, degree, k, subset_mask, upper_route) -> RefutationWitness:
    """Rebuild a sweep's claimed violation from scratch before reporting it."""
    space = MonomialSpace(piece(spec, degree), subset_mask)
    if upper_route:
        best = upper_shadow(space).size
        seg = upper_shadow(lex_segment(spec, degree, k)).size
    else:
        best = lower_shadow(space).size
        seg = lower_shadow(revlex_segment(spec, degree, k)).size
    if not best < seg:
        raise ConstructionError(
            "sweep reported a violation at degree %d size %d that does not replay"
            % (degree, k)
        )
    return RefutationWitness(degree, k, space, best, seg)


def verify_macaulay_lex(
    spec: RingSpec, max_degree: int, budget: Budget | None = None
) -> VerificationReport:
    """Sweep all subsets degree by degree, refuting on the first segment beaten.

    Untruncated rings use the lower-shadow/revlex criterion on degrees
    1..max_degree; truncated rings use the upper-shadow/lex criterion on
    degrees 0..max_degree-1, so no piece above max_degree is touched.  The
    scan stops early with a truncation record when a piece outruns the
    budget, and a refutation witness is re-verified from scratch.
    """
    budget = budget or Budget()
    upper_route = spec.is_truncated
    route = "upper-lex" if upper_route else "lower-revlex"
    degrees = range(0, max_degree) if upper_route else range(1, max_degree + 1)
    evals = 0
    truncation = None
    scanned_hi = degrees.start - 1
    for d in degrees:
        P = piece(spec, d).size
        if P == 0:
            break
        if P > budget.piece_limit:
            truncation = BudgetTruncation(
                d, "piece size %d exceeds the sweep limit %d" % (P, budget.piece_limit)
            )
            break
        if evals + (1 << P) > budget.max_evals:
            truncation = BudgetTruncation(
                d,
                "sweep needs %d evaluations, %d remain in budget"
                % (1 << P, budget.max_evals - evals),
            )
            break
        if upper_route:
            cover = up_masks(spec, d)
            target = piece(spec, d + 1).size
        else:
            cover = divisor_masks(spec, d)
            target = piece(spec, d - 1).size
        best, arg = sweep_min_cover(cover, target)
        evals += 1 << P
        seg_or = 0
        for k in range(1, P + 1):
            seg_or |= cover[P - k] if upper_route else cover[k - 1]
            if best[k] < seg_or.bit_count():
                witness = _checked_witness(spec, d, k, arg[k], upper_route)
                return VerificationReport(
                    spec=spec,
                    max_degree=max_degree,
                    degree_range=(degrees.start, d),
                    budget=budget,
                    verdict="Refuted",
                    route=route,
                    witness=witness,
                    evals=evals,
                )
        scanned_hi = d
    return VerificationReport(
        spec=spec,
        max_degree=max_degree,
        degree_range=(degrees.start, scanned_hi),
        budget=budget,
        verdict="Verified-up-to-budget",
        route=route,
        truncation=truncation,
        evals=evals,
    )


def truncated_univariate_predicate(a, alpha) -> bool:
    """One-color test: caps read from the largest variable down, min(a, cap)
    must be nondecreasing for the truncation to be Macaulay-Lex."""
    if a != INF and (not isinstance(a, int) or a < 1):
        raise ValueError("a must be a positive integer or INF")
    if not alpha:
        raise ValueError("alpha must list at least one cap")
    capped = [min(a, c) for c in alpha]
    return all(capped[i] <= capped[i + 1] for i in range(len(capped) - 1))


# --- explicit refutation construction ---------------------------------------


@dataclass(frozen=True)
class CounterexampleArtifact:
    """Every intermediate of the refutation recipe, for replay and audit."""

    n: int
    d: int
    a: tuple
    lam: tuple
    phi: tuple | None
    weak_lambda: bool
    capped_a: tuple
    s: int
    mhat: tuple  # mhat[t-1] is the chosen top monomial for color t
    phat: Monomial
    mtilde: Monomial
    mprime: Monomial
    q: Monomial
    qtilde: Monomial
    xtilde: Variable
    x0: Variable
    anchor_space: MonomialSpace  # all monomials down to the anchor, by revlex
    q_multiples: MonomialSpace
    qtilde_multiples: MonomialSpace
    space: MonomialSpace  # the refuting space A
    shadow_sizes: tuple  # (|lower shadow of A|, |lower shadow of the segment|)


def _revlex_max(monomials) -> Monomial:
    return max(monomials, key=cmp_to_key(compare_revlex))


def _revlex_min(monomials) -> Monomial:
    return min(monomials, key=cmp_to_key(compare_revlex))


def _color_monomials(spec, t, degree, forbidden=(), strict_caps=()):
    """Degree-d monomials on the color-t variables: phi-capped, zero exponent
    on forbidden variables, exponent strictly below cap for strict_caps."""
    strict = dict(strict_caps)
    variables = [
        Variable(t, j)
        for j in range(1, spec.lam[t - 1] + 1)
        if Variable(t, j) not in forbidden
    ]
    bounds = []
    for v in variables:
        b = min(spec.cap(v), degree)
        if v in strict:
            b = min(b, strict[v] - 1)
        bounds.append(int(b))

    def rec(i, remaining, acc):
        if i == len(variables):
            if remaining == 0:
                yield Monomial.make(acc)
            return
        for e in range(min(bounds[i], remaining), -1, -1):
            yield from rec(i + 1, remaining - e, acc + [(variables[i], e)])

    return list(rec(0, degree, []))


def _divisors_of_degree(m: Monomial, degree: int):
    """All degree-d monomials dividing m."""
    variables = list(m.support())
    bounds = [m.exponent(v) for v in variables]

    def rec(i, remaining, acc):
        if i == len(variables):
            if remaining == 0:
                yield Monomial.make(acc)
            return
        for e in range(min(bounds[i], remaining), -1, -1):
            yield from rec(i + 1, remaining - e, acc + [(variables[i], e)])

    return list(rec(0, degree, []))


def _successor_variable(spec: RingSpec, v: Variable) -> Variable:
    """The next variable up in the variable order (the revlex cover)."""
    ascending = spec.variables_ascending()
    pos = ascending.index(v)
    if pos + 1 == len(ascending):
        raise ConstructionError("%s has no successor variable" % (v,))
    return ascending[pos + 1]


def _require(condition, message):
    if not condition:
        raise HypothesisViolation(message)


def build_counterexample(
    n: int,
    d: int,
    a: tuple,
    lam: tuple,
    phi: tuple | None = None,
    weak_lambda: bool = False,
) -> CounterexampleArtifact:
    """Construct a space whose lower shadow beats its revlex segment's.

    Hypotheses: n, d > 1; every lam_t >= 2 with lam_n >= 3 (weak_lambda
    drops the lam_n >= 3 requirement when the recipe can pivot at s > 1);
    a is not >= d everywhere, a is not all ones, and |a| > d; the caps of
    each color's variables other than x[t,1] must sum to at least a_t.
    Entries a_i = INF are first capped at d+1, which changes no piece at
    degree <= d+1.  The result is checked end to end before it is returned.
    """
    _require(n > 1, "n must be at least 2")
    _require(d > 1, "d must be at least 2")
    _require(len(a) == n and len(lam) == n, "a and lam must have length n")
    _require(all(l >= 2 for l in lam), "every color needs at least two variables")
    if not weak_lambda:
        _require(lam[n - 1] >= 3, "the last color needs at least three variables")
    _require(any(ai <= d - 1 for ai in a), "some a_t must be at most d-1")
    _require(any(ai != 1 for ai in a), "a must not be all ones")
    _require(sum(d + 1 if ai == INF else ai for ai in a) > d, "|a| must exceed d")

    b = tuple(min(ai, d + 1) for ai in a)
    spec = RingSpec(b, lam, phi)
    for t in range(1, n + 1):
        others = sum(
            spec.cap(Variable(t, j)) for j in range(2, lam[t - 1] + 1)
        )
        _require(
            others >= b[t - 1],
            "caps on color %d away from x[%d,1] must sum to at least %s"
            % (t, t, b[t - 1]),
        )

    def wrap(k):
        return ((k - 1) % n) + 1

    candidates = [
        s
        for s in range(1, n + 1)
        if b[s - 1] <= d - 1 and b[wrap(s - 1) - 1] >= 2
    ]
    if weak_lambda and lam[n - 1] < 3:
        candidates = [s for s in candidates if s > 1]
        _require(
            candidates,
            "weak_lambda needs a pivot s > 1: some a_t <= d-1 with a_{t-1} >= 2",
        )
    if not candidates:
        raise ConstructionError("no pivot index s exists despite the hypotheses")
    s = candidates[0]
    prev = wrap(s - 1)

    mhat = []
    for t in range(1, n + 1):
        options = _color_monomials(spec, t, b[t - 1], forbidden=(Variable(t, 1),))
        if not options:
            raise ConstructionError("no admissible top monomial for color %d" % t)
        mhat.append(_revlex_max(options))

    if s > 1:
        v2 = Variable(prev, 2)
        strict = ((v2, int(min(spec.cap(v2), b[prev - 1]))),)
    else:
        strict = tuple(
            (Variable(prev, j), int(min(spec.cap(Variable(prev, j)), b[prev - 1])))
            for j in (2, 3)
        )
    pool = _color_monomials(
        spec, prev, b[prev - 1] - 2, forbidden=(Variable(prev, 1),), strict_caps=strict
    )
    if not pool:
        raise ConstructionError("no admissible pivot monomial on color %d" % prev)
    phat = _revlex_max(pool)

    mtilde = phat
    for t in range(1, n + 1):
        if t not in (s, prev):
            mtilde = mtilde.times(mhat[t - 1])
    if mtilde.degree < d - 1 - b[s - 1]:
        raise ConstructionError("the pivot product is too small to divide from")
    mprime = _revlex_min(_divisors_of_degree(mtilde, d - 1 - b[s - 1]))
    q = mprime.times(mhat[s - 1])
    xs2 = Variable(s, 2)
    qtilde = q.over_var(xs2).times_var(_successor_variable(spec, xs2))
    if q.degree != d - 1 or not spec.admits(q) or not spec.admits(qtilde):
        raise ConstructionError("the pivot monomials fell outside the ring")

    xtilde = None
    for x in spec.variables_descending():
        if x.order_key() < xs2.order_key() and spec.admits(qtilde.times_var(x)):
            xtilde = x
            break
    if xtilde is None:
        raise ConstructionError("no admissible anchor variable below x[%d,2]" % s)

    pc = piece(spec, d)
    anchor_rank = pc.rank(qtilde.times_var(xtilde))
    anchor_space = MonomialSpace(pc, (1 << anchor_rank) - 1)
    q_multiples = space_from(
        spec, d, [m for m in anchor_space.members if q.divides(m)]
    )
    qtilde_multiples = space_from(
        spec, d, [m for m in anchor_space.members if qtilde.divides(m)]
    )
    if q_multiples.mask & qtilde_multiples.mask:
        raise ConstructionError("pivot multiples overlap inside the anchor segment")
    if q_multiples.size != qtilde_multiples.size - 1:
        raise ConstructionError("pivot multiple counts are off balance")
    space = MonomialSpace(pc, anchor_space.mask & ~q_multiples.mask)

    top = _revlex_max(qtilde_multiples.members)
    x0 = top.over(qtilde).support()[0]
    ideal_mask = (anchor_space.mask & ~qtilde_multiples.mask) | (
        1 << pc.index_of(top)
    )
    ideal = MonomialSpace(pc, ideal_mask)
    if ideal.mask & (ideal.mask + 1) or ideal.size != space.size:
        raise ConstructionError("the replacement segment is not a matching segment")

    shadow = lower_shadow(space)
    if q in shadow:
        raise ConstructionError("the removed pivot still appears in the shadow")
    segment_shadow = lower_shadow(revlex_segment(spec, d, space.size))
    if not shadow.size < segment_shadow.size:
        raise ConstructionError("the constructed space does not beat the segment")

    return CounterexampleArtifact(
        n=n,
        d=d,
        a=tuple(a),
        lam=tuple(lam),
        phi=phi,
        weak_lambda=weak_lambda,
        capped_a=b,
        s=s,
        mhat=tuple(mhat),
        phat=phat,
        mtilde=mtilde,
        mprime=mprime,
        q=q,
        qtilde=qtilde,
        xtilde=xtilde,
        x0=x0,
        anchor_space=anchor_space,
        q_multiples=q_multiples,
        qtilde_multiples=qtilde_multiples,
        space=space,
        shadow_sizes=(shadow.size, segment_shadow.size),
    )
