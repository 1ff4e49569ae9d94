"""Text and JSON forms for specs, monomials, spaces, f-vectors, and reports.

The JSON side is canonical: keys sorted, two-space indent, "inf" as the
token for unbounded entries, monomials always in their text form.  Every
artifact carries the schema tag and enough of its inputs to be recomputed.
"""

from __future__ import annotations

import json
import re

from .multicomplex import BuildOutcome, ColoredMulticomplex, FVector, HuntResult
from .rings import INF, ClassificationVerdict, Monomial, ONE, RingSpec, Variable
from .spaces import MonomialSpace
from .verify import (
    Budget,
    BudgetTruncation,
    CounterexampleArtifact,
    RefutationWitness,
    VerificationReport,
)

SCHEMA = "colorquot/v1"

_FACTOR = re.compile(r"^x\[(\d+),(\d+)\](?:\^(\d+))?$")
_VERTEX = re.compile(r"^(\d+):(\d+)$")


def cap_to_token(c):
    return "inf" if c == INF else c


def token_to_cap(tok):
    if tok == "inf":
        return INF
    if isinstance(tok, int) and not isinstance(tok, bool):
        return tok
    raise ValueError("expected a positive integer or \"inf\", got %r" % (tok,))


def spec_to_obj(spec: RingSpec) -> dict:
    obj = {
        "n": spec.n,
        "a": [cap_to_token(ai) for ai in spec.a],
        "lambda": list(spec.lam),
    }
    if spec.phi is not None:
        obj["phi"] = [cap_to_token(c) for c in spec.phi]
    return obj


def spec_from_obj(obj) -> RingSpec:
    if not isinstance(obj, dict):
        raise ValueError("a ring spec is a JSON object")
    for key in ("n", "a", "lambda"):
        if key not in obj:
            raise ValueError("ring spec needs the field %r" % key)
    a = tuple(token_to_cap(t) for t in obj["a"])
    lam = tuple(obj["lambda"])
    if obj["n"] != len(a):
        raise ValueError("field n does not match the length of a")
    phi = None
    if obj.get("phi") is not None:
        phi = tuple(token_to_cap(t) for t in obj["phi"])
    return RingSpec(a, lam, phi)


def load_spec(path: str) -> RingSpec:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError("could not parse %s: %s" % (path, e))
    return spec_from_obj(obj)


def monomial_to_text(m: Monomial) -> str:
    return str(m)


def monomial_from_text(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return ONE
    pairs = []
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError("bad monomial factor %r" % factor)
        color, index, exp = int(match[1]), int(match[2]), int(match[3] or 1)
        if exp < 1:
            raise ValueError("exponents must be positive in %r" % text)
        pairs.append((Variable(color, index), exp))
    return Monomial.make(pairs)


def monomials_to_lines(monomials) -> str:
    return "".join(monomial_to_text(m) + "\n" for m in monomials)


def monomials_from_lines(text: str):
    return [
        monomial_from_text(line) for line in text.splitlines() if line.strip()
    ]


def fvector_to_text(f: FVector) -> str:
    return ",".join(str(e) for e in f)


def fvector_from_text(text: str) -> FVector:
    try:
        entries = tuple(int(tok) for tok in text.strip().split(","))
    except ValueError:
        raise ValueError("an f-vector is comma-separated integers, got %r" % text)
    return FVector(entries)


def faces_to_monomials(text: str):
    """Face-list lines ("i:j" vertex tokens) as squarefree monomials.

    A face of dimension k becomes a degree-(k+1) monomial, which is the
    usual shift between complex and multicomplex f-vectors.
    """
    monomials = []
    for line in text.splitlines():
        tokens = line.split()
        if not tokens:
            continue
        variables = []
        for tok in tokens:
            match = _VERTEX.match(tok)
            if not match:
                raise ValueError("bad vertex token %r" % tok)
            variables.append(Variable(int(match[1]), int(match[2])))
        if len(set(variables)) != len(variables):
            raise ValueError("repeated vertex in face %r" % line.strip())
        monomials.append(Monomial.make((v, 1) for v in variables))
    return monomials


def classification_to_obj(verdict: ClassificationVerdict) -> dict:
    obj = {"kind": verdict.kind}
    if verdict.r is not None:
        obj["r"] = verdict.r
    if verdict.witness is not None:
        obj["witness"] = verdict.witness
    return obj


def budget_to_obj(budget: Budget) -> dict:
    return {"piece_limit": budget.piece_limit, "max_evals": budget.max_evals}


def budget_from_obj(obj) -> Budget:
    return Budget(piece_limit=obj["piece_limit"], max_evals=obj["max_evals"])


def _members(space: MonomialSpace):
    return [monomial_to_text(m) for m in space.members]


def report_to_obj(report: VerificationReport) -> dict:
    witness = None
    if report.witness is not None:
        witness = {
            "degree": report.witness.degree,
            "size": report.witness.size,
            "members": _members(report.witness.space),
            "min_shadow": report.witness.min_shadow,
            "segment_shadow": report.witness.segment_shadow,
        }
    truncation = None
    if report.truncation is not None:
        truncation = {
            "degree": report.truncation.degree,
            "reason": report.truncation.reason,
        }
    return {
        "schema": SCHEMA,
        "kind": "verify-report",
        "spec": spec_to_obj(report.spec),
        "max_degree": report.max_degree,
        "degree_range": list(report.degree_range),
        "budget": budget_to_obj(report.budget),
        "route": report.route,
        "verdict": report.verdict,
        "evals": report.evals,
        "witness": witness,
        "truncation": truncation,
    }


def artifact_to_obj(art: CounterexampleArtifact) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "counterexample",
        "n": art.n,
        "d": art.d,
        "a": [cap_to_token(ai) for ai in art.a],
        "lambda": list(art.lam),
        "phi": None if art.phi is None else [cap_to_token(c) for c in art.phi],
        "weak_lambda": art.weak_lambda,
        "capped_a": list(art.capped_a),
        "s": art.s,
        "mhat": [monomial_to_text(m) for m in art.mhat],
        "phat": monomial_to_text(art.phat),
        "mtilde": monomial_to_text(art.mtilde),
        "mprime": monomial_to_text(art.mprime),
        "q": monomial_to_text(art.q),
        "qtilde": monomial_to_text(art.qtilde),
        "xtilde": str(art.xtilde),
        "x0": str(art.x0),
        "anchor": _members(art.anchor_space),
        "q_multiples": _members(art.q_multiples),
        "qtilde_multiples": _members(art.qtilde_multiples),
        "space": _members(art.space),
        "shadow_sizes": list(art.shadow_sizes),
    }


def build_outcome_to_obj(ambient: RingSpec, f: FVector, outcome: BuildOutcome) -> dict:
    obj = {
        "schema": SCHEMA,
        "kind": "fvector-compress",
        "spec": spec_to_obj(ambient),
        "f": list(f),
        "ok": outcome.ok,
        "members": None,
        "offender": None,
    }
    if outcome.ok:
        obj["members"] = sorted(
            monomial_to_text(m) for m in outcome.multicomplex.members
        )
    else:
        member, missing = outcome.offender
        obj["offender"] = {
            "member": monomial_to_text(member),
            "missing_divisor": monomial_to_text(missing),
        }
    return obj


def search_to_obj(ambient, f, budget, found, exhausted=False) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "fvector-search",
        "spec": spec_to_obj(ambient),
        "f": list(f),
        "budget": budget,
        "exhausted": exhausted,
        "found": None if found is None else sorted(
            monomial_to_text(m) for m in found.members
        ),
    }


def hunt_to_obj(ambient, budget, result: HuntResult | None, exhausted=False) -> dict:
    obj = {
        "schema": SCHEMA,
        "kind": "fvector-hunt",
        "spec": spec_to_obj(ambient),
        "budget": budget,
        "exhausted": exhausted,
        "f": None,
        "witness": None,
        "offender": None,
    }
    if result is not None:
        member, missing = result.offender
        obj["f"] = list(result.fvector)
        obj["witness"] = sorted(
            monomial_to_text(m) for m in result.multicomplex.members
        )
        obj["offender"] = {
            "member": monomial_to_text(member),
            "missing_divisor": monomial_to_text(missing),
        }
    return obj


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
