"""Command-line front-end: spec files in, deterministic text or JSON out.

Exit codes: 0 success, 1 bad input or a failed --check replay, 2 a verify
run refuted the ring, 3 a budget stopped the run early (a partial report is
still emitted).  Identical invocations produce byte-identical output; seed
and worker count are accepted for orchestration but never change output
bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import formats
from .compression import compress, quasi_compress
from .multicomplex import (
    ColoredMulticomplex,
    FVector,
    build_compressed,
    f_vector,
    hunt_uncompressible,
    revlex_characterizes,
    search_realizable,
)
from .rings import classify
from .spaces import (
    enumerate_piece,
    lex_segment,
    lower_shadow,
    norm,
    revlex_segment,
    space_from,
    upper_shadow,
)
from .verify import (
    Budget,
    BudgetExceeded,
    ConstructionError,
    HypothesisViolation,
    build_counterexample,
    verify_macaulay_lex,
)

OK, BAD_INPUT, REFUTED, EXHAUSTED = 0, 1, 2, 3

_JSON_DEFAULT = {
    "classify",
    "verify",
    "counterexample",
    "fvector.compress",
    "fvector.search",
    "fvector.characterizes",
}


@dataclass
class RunConfig:
    """One CLI invocation; equal configs must produce identical bytes."""

    command: str
    spec_path: str | None = None
    degree: int | None = None
    max_degree: int | None = None
    size: int | None = None
    segment_kind: str = "revlex"
    direction: str = "lower"
    color: int | None = None
    quasi: bool = False
    input_path: str | None = None
    members_path: str | None = None
    faces_path: str | None = None
    f_text: str | None = None
    weak_lambda: bool = False
    hunt: bool = False
    piece_limit: int = 20
    max_evals: int = 1 << 22
    nodes: int = 10**6
    format: str | None = None
    seed: int = 0
    workers: int = 1
    out_path: str | None = None
    check_path: str | None = None

    def __post_init__(self):
        if self.piece_limit < 1 or self.max_evals < 1 or self.nodes < 1:
            raise ValueError("budgets must be positive")
        if self.workers < 1:
            raise ValueError("worker count must be positive")
        if self.format is None:
            self.format = "json" if self.command in _JSON_DEFAULT else "text"
        if self.format not in ("json", "text"):
            raise ValueError("format must be json or text")

    @property
    def budget(self) -> Budget:
        return Budget(piece_limit=self.piece_limit, max_evals=self.max_evals)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(config: RunConfig, text: str):
    if config.out_path:
        with open(config.out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_spec(config: RunConfig):
    if not config.spec_path:
        raise ValueError("this command needs --spec")
    if config.spec_path == "-":
        try:
            obj = json.loads(_read("-"))
        except json.JSONDecodeError as e:
            raise ValueError("could not parse stdin: %s" % e)
        return formats.spec_from_obj(obj)
    return formats.load_spec(config.spec_path)


def _space_output(config, space, extra=None) -> str:
    if config.format == "text":
        return formats.monomials_to_lines(space.members)
    obj = {
        "schema": formats.SCHEMA,
        "kind": "space",
        "spec": formats.spec_to_obj(space.spec),
        "degree": space.degree,
        "members": [formats.monomial_to_text(m) for m in space.members],
    }
    if extra:
        obj.update(extra)
    return formats.dumps(obj)


def _need(config, field, flag):
    value = getattr(config, field)
    if value is None:
        raise ValueError("this command needs %s" % flag)
    return value


def _run_classify(config):
    verdict = classify(_load_spec(config))
    if config.format == "json":
        obj = {"schema": formats.SCHEMA}
        obj.update(formats.classification_to_obj(verdict))
        return OK, formats.dumps(obj)
    if verdict.kind == "Mixed":
        return OK, "Mixed(%d)\n" % verdict.r
    if verdict.kind == "Hinged":
        return OK, "Hinged\n"
    return OK, "Neither: %s\n" % verdict.witness


def _run_enumerate(config):
    spec = _load_spec(config)
    space = enumerate_piece(spec, _need(config, "degree", "--degree"))
    return OK, _space_output(config, space)


def _run_shadow(config):
    spec = _load_spec(config)
    degree = _need(config, "degree", "--degree")
    members = formats.monomials_from_lines(_read(_need(config, "input_path", "--input")))
    space = space_from(spec, degree, members)
    out = upper_shadow(space) if config.direction == "upper" else lower_shadow(space)
    return OK, _space_output(config, out, {"direction": config.direction})


def _run_segment(config):
    spec = _load_spec(config)
    degree = _need(config, "degree", "--degree")
    size = _need(config, "size", "--size")
    build = lex_segment if config.segment_kind == "lex" else revlex_segment
    return OK, _space_output(config, build(spec, degree, size), {"segment": config.segment_kind})


def _run_compress(config):
    spec = _load_spec(config)
    degree = _need(config, "degree", "--degree")
    members = formats.monomials_from_lines(_read(_need(config, "input_path", "--input")))
    space = space_from(spec, degree, members)
    if config.quasi == (config.color is not None):
        raise ValueError("compress needs exactly one of --color and --quasi")
    if config.quasi:
        result, trace = quasi_compress(space)
    else:
        result, trace = compress(space, config.color), None
    if config.format == "text":
        return OK, formats.monomials_to_lines(result.members)
    obj = {
        "schema": formats.SCHEMA,
        "kind": "compress",
        "spec": formats.spec_to_obj(spec),
        "degree": degree,
        "color": config.color,
        "quasi": config.quasi,
        "input": [formats.monomial_to_text(m) for m in space.members],
        "result": [formats.monomial_to_text(m) for m in result.members],
        "norm": norm(result),
        "trace": None if trace is None else [list(step) for step in trace],
    }
    return OK, formats.dumps(obj)


def _verify_status(report) -> int:
    if report.verdict == "Refuted":
        return REFUTED
    if report.truncation is not None:
        return EXHAUSTED
    return OK


def _run_verify(config):
    spec = _load_spec(config)
    report = verify_macaulay_lex(
        spec, _need(config, "max_degree", "--max-degree"), config.budget
    )
    if config.format == "json":
        return _verify_status(report), formats.dumps(formats.report_to_obj(report))
    if report.verdict == "Refuted":
        w = report.witness
        text = (
            "Refuted at degree %d: a %d-subset has shadow %d, its segment has %d\n"
            % (w.degree, w.size, w.min_shadow, w.segment_shadow)
        )
    else:
        text = "Verified-up-to-budget on degrees %d..%d (%d evaluations)\n" % (
            report.degree_range[0],
            report.degree_range[1],
            report.evals,
        )
        if report.truncation is not None:
            text += "stopped at degree %d: %s\n" % (
                report.truncation.degree,
                report.truncation.reason,
            )
    return _verify_status(report), text


def _run_counterexample(config):
    spec = _load_spec(config)
    art = build_counterexample(
        spec.n,
        _need(config, "degree", "--degree"),
        spec.a,
        spec.lam,
        spec.phi,
        weak_lambda=config.weak_lambda,
    )
    if config.format == "json":
        return OK, formats.dumps(formats.artifact_to_obj(art))
    lines = [
        "s = %d" % art.s,
        "q = %s" % formats.monomial_to_text(art.q),
        "qtilde = %s" % formats.monomial_to_text(art.qtilde),
        "|A| = %d, shadow %d, segment shadow %d"
        % (art.space.size, art.shadow_sizes[0], art.shadow_sizes[1]),
    ]
    lines.extend(formats.monomial_to_text(m) for m in art.space.members)
    return OK, "".join(line + "\n" for line in lines)


def _load_multicomplex(config, ambient) -> ColoredMulticomplex:
    if (config.members_path is None) == (config.faces_path is None):
        raise ValueError("fvector of needs exactly one of --members and --faces")
    if config.members_path is not None:
        monomials = formats.monomials_from_lines(_read(config.members_path))
    else:
        monomials = formats.faces_to_monomials(_read(config.faces_path))
    return ColoredMulticomplex.from_monomials(ambient, monomials)


def _run_fvector_of(config):
    ambient = _load_spec(config)
    f = f_vector(_load_multicomplex(config, ambient))
    if config.format == "text":
        return OK, formats.fvector_to_text(f) + "\n"
    obj = {
        "schema": formats.SCHEMA,
        "kind": "fvector",
        "spec": formats.spec_to_obj(ambient),
        "f": list(f),
    }
    return OK, formats.dumps(obj)


def _run_fvector_compress(config):
    ambient = _load_spec(config)
    f = formats.fvector_from_text(_need(config, "f_text", "--f"))
    outcome = build_compressed(ambient, f)
    if config.format == "json":
        return OK, formats.dumps(formats.build_outcome_to_obj(ambient, f, outcome))
    if outcome.ok:
        return OK, formats.monomials_to_lines(sorted(
            outcome.multicomplex.members, key=lambda m: (m.degree, str(m))
        ))
    member, missing = outcome.offender
    return OK, "failure: %s lacks %s\n" % (
        formats.monomial_to_text(member),
        formats.monomial_to_text(missing),
    )


def _run_fvector_search(config):
    ambient = _load_spec(config)
    if config.hunt:
        try:
            result = hunt_uncompressible(ambient, config.nodes)
        except BudgetExceeded:
            return EXHAUSTED, formats.dumps(
                formats.hunt_to_obj(ambient, config.nodes, None, exhausted=True)
            )
        obj = formats.hunt_to_obj(ambient, config.nodes, result)
        if config.format == "text":
            if result is None:
                return OK, "none\n"
            return OK, formats.fvector_to_text(result.fvector) + "\n"
        return OK, formats.dumps(obj)
    f = formats.fvector_from_text(_need(config, "f_text", "--f"))
    try:
        found = search_realizable(ambient, f, config.nodes)
    except BudgetExceeded:
        return EXHAUSTED, formats.dumps(
            formats.search_to_obj(ambient, f, config.nodes, None, exhausted=True)
        )
    if config.format == "text":
        if found is None:
            return OK, "none\n"
        return OK, formats.monomials_to_lines(sorted(
            found.members, key=lambda m: (m.degree, str(m))
        ))
    return OK, formats.dumps(formats.search_to_obj(ambient, f, config.nodes, found))


def _run_fvector_characterizes(config):
    ambient = _load_spec(config)
    answer = revlex_characterizes(ambient)
    if config.format == "text":
        return OK, ("true\n" if answer else "false\n")
    obj = {
        "schema": formats.SCHEMA,
        "kind": "fvector-characterizes",
        "spec": formats.spec_to_obj(ambient),
        "characterizes": answer,
    }
    return OK, formats.dumps(obj)


_RUNNERS = {
    "classify": _run_classify,
    "enumerate": _run_enumerate,
    "shadow": _run_shadow,
    "segment": _run_segment,
    "compress": _run_compress,
    "verify": _run_verify,
    "counterexample": _run_counterexample,
    "fvector.of": _run_fvector_of,
    "fvector.compress": _run_fvector_compress,
    "fvector.search": _run_fvector_search,
    "fvector.characterizes": _run_fvector_characterizes,
}

_CHECK_KINDS = {
    "verify": ("verify-report",),
    "counterexample": ("counterexample",),
    "fvector.search": ("fvector-search", "fvector-hunt"),
}


def _replay(config: RunConfig):
    """Recompute a stored artifact from its recorded inputs and byte-compare."""
    try:
        stored = json.loads(_read(config.check_path))
    except json.JSONDecodeError as e:
        raise ValueError("could not parse %s: %s" % (config.check_path, e))
    kinds = _CHECK_KINDS.get(config.command)
    if kinds is None:
        raise ValueError("--check is not available for %s" % config.command)
    kind = stored.get("kind")
    if kind not in kinds:
        raise ValueError("artifact kind %r does not match this command" % (kind,))
    if kind == "verify-report":
        spec = formats.spec_from_obj(stored["spec"])
        report = verify_macaulay_lex(
            spec, stored["max_degree"], formats.budget_from_obj(stored["budget"])
        )
        fresh = formats.report_to_obj(report)
    elif kind == "counterexample":
        phi = stored["phi"]
        art = build_counterexample(
            stored["n"],
            stored["d"],
            tuple(formats.token_to_cap(t) for t in stored["a"]),
            tuple(stored["lambda"]),
            None if phi is None else tuple(formats.token_to_cap(t) for t in phi),
            weak_lambda=bool(stored.get("weak_lambda")),
        )
        fresh = formats.artifact_to_obj(art)
    elif kind == "fvector-search":
        ambient = formats.spec_from_obj(stored["spec"])
        f = FVector(tuple(stored["f"]))
        try:
            found = search_realizable(ambient, f, stored["budget"])
            fresh = formats.search_to_obj(ambient, f, stored["budget"], found)
        except BudgetExceeded:
            fresh = formats.search_to_obj(
                ambient, f, stored["budget"], None, exhausted=True
            )
    else:  # fvector-hunt
        ambient = formats.spec_from_obj(stored["spec"])
        try:
            result = hunt_uncompressible(ambient, stored["budget"])
            fresh = formats.hunt_to_obj(ambient, stored["budget"], result)
        except BudgetExceeded:
            fresh = formats.hunt_to_obj(
                ambient, stored["budget"], None, exhausted=True
            )
    if formats.dumps(fresh) == formats.dumps(stored):
        return OK, "check passed: %s\n" % kind
    sys.stderr.write("recomputed artifact differs from %s\n" % config.check_path)
    return BAD_INPUT, ""


def run(config: RunConfig) -> int:
    """Dispatch one configured invocation; returns the process exit status."""
    try:
        if config.check_path is not None:
            status, text = _replay(config)
        else:
            runner = _RUNNERS.get(config.command)
            if runner is None:
                raise ValueError("unknown command %r" % config.command)
            status, text = runner(config)
    except (ValueError, OSError, HypothesisViolation) as e:
        sys.stderr.write("error: %s\n" % e)
        return BAD_INPUT
    except ConstructionError as e:
        sys.stderr.write("internal construction failure: %s\n" % e)
        return BAD_INPUT
    except BudgetExceeded as e:
        sys.stderr.write("budget exhausted: %s\n" % e)
        return EXHAUSTED
    _emit(config, text)
    return status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(BAD_INPUT, "%s: error: %s\n" % (self.prog, message))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None)
    common.add_argument("--out", dest="out_path", default=None, metavar="FILE")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)

    parser = _Parser(prog="colorquot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.add_argument("--spec", dest="spec_path", metavar="FILE")
        return p

    add("classify", help="mixed/hinged classification of an untruncated ring")

    p = add("enumerate", help="list one graded piece in descending revlex")
    p.add_argument("--degree", type=int, required=True)

    p = add("shadow", help="lower or upper shadow of a space file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--input", dest="input_path", required=True, metavar="FILE")
    p.add_argument("--direction", choices=("lower", "upper"), default="lower")

    p = add("segment", help="revlex or lex segment of a piece")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--kind", dest="segment_kind", choices=("revlex", "lex"), default="revlex")

    p = add("compress", help="one color compression step, or the full sweep")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--input", dest="input_path", required=True, metavar="FILE")
    p.add_argument("--color", type=int, default=None)
    p.add_argument("--quasi", action="store_true")

    p = add("verify", help="sweep-based Macaulay-Lex verification")
    p.add_argument("--max-degree", dest="max_degree", type=int)
    p.add_argument("--piece-limit", dest="piece_limit", type=int, default=20)
    p.add_argument("--max-evals", dest="max_evals", type=int, default=1 << 22)
    p.add_argument("--check", dest="check_path", metavar="FILE")

    p = add("counterexample", help="build an explicit refutation artifact")
    p.add_argument("--degree", type=int)
    p.add_argument("--weak-lambda", dest="weak_lambda", action="store_true")
    p.add_argument("--check", dest="check_path", metavar="FILE")

    fv = sub.add_parser("fvector", parents=[], help="multicomplex f-vector tools")
    fvsub = fv.add_subparsers(dest="fv_command", required=True, parser_class=_Parser)

    def add_fv(name, **kwargs):
        p = fvsub.add_parser(name, parents=[common], **kwargs)
        p.add_argument("--spec", dest="spec_path", metavar="FILE")
        return p

    p = add_fv("of", help="f-vector of a multicomplex given by members or faces")
    p.add_argument("--members", dest="members_path", metavar="FILE")
    p.add_argument("--faces", dest="faces_path", metavar="FILE")

    p = add_fv("compress", help="build the compressed candidate for an f-vector")
    p.add_argument("--f", dest="f_text", required=True)

    p = add_fv("search", help="exhaustive realizability search (or --hunt)")
    p.add_argument("--f", dest="f_text")
    p.add_argument("--budget", dest="nodes", type=int, default=10**6)
    p.add_argument("--hunt", action="store_true")
    p.add_argument("--check", dest="check_path", metavar="FILE")

    add_fv("characterizes", help="does the compressed candidate cover every f-vector")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = vars(args).copy()
    fv_command = fields.pop("fv_command", None)
    command = fields.pop("command")
    if command == "fvector":
        command = "fvector.%s" % fv_command
    allowed = {f for f in RunConfig.__dataclass_fields__}
    kwargs = {k: v for k, v in fields.items() if k in allowed and v is not None}
    kwargs.pop("command", None)
    return RunConfig(command=command, **kwargs)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as e:
        sys.stderr.write("error: %s\n" % e)
        return BAD_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
