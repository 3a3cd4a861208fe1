"""Command-line frontend.

Subcommands: `artinian` and `semigroup` run single operations or suites on one
ring; `catalog` sweeps the built-in verification catalog.  Exit codes: 0 when
everything asked for passed, 1 when a check failed (the report is still
emitted), 2 on usage or ring-spec errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .errors import SpecError, TraceLabError
from .finalg import FinAlgebra, algebra_from_presentation
from .numsgp import (
    dual,
    endo_semigroup,
    enumerate_normalized_ideals,
    ideal_colon,
    ideal_from_gens,
    is_translate,
    semigroup_new,
    trace,
)
from .verify import (
    default_caps,
    emit_reports,
    reports_have_failures,
    run_artinian_lp_suite,
    run_catalog,
    run_identity_suite,
    run_semigroup_lp_suite,
)


@dataclass
class RingSpec:
    """Validated ring specification (see the JSON schema in the README)."""

    kind: str
    p: int | None = None
    variables: tuple = ()
    relations: tuple = ()
    generators: tuple = ()

    def to_json_dict(self) -> dict:
        if self.kind == "artinian":
            return {
                "kind": "artinian",
                "field": self.p,
                "vars": list(self.variables),
                "relations": list(self.relations),
            }
        return {"kind": "semigroup", "generators": list(self.generators)}

    def serialize(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))


def parse_ring_spec(document: str) -> RingSpec:
    """Parse and validate a ring-spec JSON document.

    Distinct error codes: malformed-json, bad-schema, unknown-kind,
    non-prime-field, gcd-not-one.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SpecError("malformed-json", f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "kind" not in data:
        raise SpecError("bad-schema", "ring spec must be an object with a 'kind' key")
    kind = data["kind"]
    if kind == "artinian":
        try:
            p = int(data["field"])
            variables = tuple(str(v) for v in data.get("vars", []))
            relations = tuple(str(r) for r in data.get("relations", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError("bad-schema", f"bad artinian spec: {exc}") from exc
        if not _is_prime(p):
            raise SpecError("non-prime-field", f"field characteristic {p} is not prime")
        return RingSpec(kind="artinian", p=p, variables=variables, relations=relations)
    if kind == "semigroup":
        try:
            gens = tuple(int(g) for g in data["generators"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError("bad-schema", f"bad semigroup spec: {exc}") from exc
        from math import gcd

        g = 0
        for x in gens:
            g = gcd(g, x)
        if not gens or any(x <= 0 for x in gens) or g != 1:
            raise SpecError("gcd-not-one", f"generators {list(gens)} do not have gcd 1")
        return RingSpec(kind="semigroup", generators=gens)
    raise SpecError("unknown-kind", f"unknown ring kind {kind!r}")


def _caps_from_env() -> dict:
    caps = default_caps()
    raw = os.environ.get("TRACE_LAB_CAPS", "")
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            key, value = part.split("=")
            key = key.strip()
            if key not in caps:
                raise ValueError(key)
            caps[key] = int(value)
        except ValueError as exc:
            raise SpecError("bad-caps", f"bad TRACE_LAB_CAPS entry {part!r}") from exc
    return caps


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trace-lab",
        description="Exact trace-ideal calculus and verification suites for "
        "artinian local algebras over F_p and numerical semigroup rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--suite", choices=("lp", "identities", "all"), help="run a verification suite")
        sp.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
        sp.add_argument("--out", help="write the report to this file instead of stdout")
        sp.add_argument("--cap-dim", type=int, dest="cap_dim", help="subspace enumeration dimension cap")
        sp.add_argument("--cap-gaps", type=int, dest="cap_gaps", help="semigroup gap-count cap")
        sp.add_argument("--cap-hom", type=int, dest="cap_hom", help="isomorphism search budget exponent")

    art = sub.add_parser("artinian", help="finite-dimensional local F_p-algebra operations")
    art.add_argument("--spec", required=True, help="ring-spec JSON file (or inline JSON document)")
    art.add_argument(
        "--op",
        choices=("trace", "colon", "ann", "iso", "enumerate"),
        help="single operation; ideals are given with --ideal-gens",
    )
    art.add_argument(
        "--ideal-gens",
        action="append",
        default=[],
        dest="ideal_gens",
        help="comma-separated polynomial generators of an ideal; repeat for binary operations",
    )
    add_common(art)

    sgp = sub.add_parser("semigroup", help="numerical semigroup ring operations")
    sgp.add_argument("--spec", help="ring-spec JSON file (or inline JSON document)")
    sgp.add_argument("--gens", help="comma-separated semigroup generators, e.g. 3,4")
    sgp.add_argument(
        "--op",
        choices=("trace", "colon", "dual", "endo", "iso", "enumerate"),
        help="single operation; ideals are given with --ideal",
    )
    sgp.add_argument(
        "--ideal",
        action="append",
        default=[],
        dest="ideals",
        help="comma-separated ideal offsets; repeat for binary operations",
    )
    add_common(sgp)

    cat = sub.add_parser("catalog", help="run suites over the built-in catalog")
    add_common(cat)
    return parser


def _load_spec_argument(text: str) -> RingSpec:
    stripped = text.strip()
    if stripped.startswith("{"):
        return parse_ring_spec(stripped)
    try:
        with open(text, "r", encoding="utf-8") as handle:
            return parse_ring_spec(handle.read())
    except OSError as exc:
        raise SpecError("bad-schema", f"cannot read spec file {text!r}: {exc}") from exc


def _caps_from_args(args) -> dict:
    caps = _caps_from_env()
    if args.cap_dim is not None:
        caps["dim"] = args.cap_dim
    if args.cap_gaps is not None:
        caps["gaps"] = args.cap_gaps
    if args.cap_hom is not None:
        caps["hom"] = args.cap_hom
    return caps


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _artinian_ideal(algebra: FinAlgebra, gens_text: str):
    gens = [algebra.element(g) for g in gens_text.split(",") if g.strip()]
    return algebra.ideal_generate(gens)


def _run_artinian_op(algebra: FinAlgebra, args, caps) -> tuple[int, str]:
    takes = {"trace": 1, "ann": 1, "colon": 2, "iso": 2, "enumerate": 0}[args.op]
    if len(args.ideal_gens) != takes:
        raise SpecError(
            "bad-schema", f"op {args.op!r} needs {takes} --ideal-gens argument(s), got {len(args.ideal_gens)}"
        )
    ideals = [_artinian_ideal(algebra, g) for g in args.ideal_gens]
    if args.op == "trace":
        result = algebra.format_ideal(algebra.trace_ideal(ideals[0]))
    elif args.op == "ann":
        result = algebra.format_ideal(algebra.annihilator(ideals[0]))
    elif args.op == "colon":
        result = algebra.format_ideal(algebra.colon_in_ring(ideals[0], ideals[1]))
    elif args.op == "iso":
        result = "true" if algebra.is_isomorphic(ideals[0], ideals[1], caps["hom"]) else "false"
    else:
        listed = [algebra.format_ideal(i) for i in algebra.enumerate_ideals(caps["dim"])]
        result = "\n".join(listed)
    if args.fmt == "json":
        return 0, json.dumps({"result": result.split("\n") if args.op == "enumerate" else result}) + "\n"
    return 0, result + "\n"


def _run_semigroup_op(sgp, args, caps) -> tuple[int, str]:
    takes = {"trace": 1, "dual": 1, "endo": 1, "colon": 2, "iso": 2, "enumerate": 0}[args.op]
    if len(args.ideals) != takes:
        raise SpecError(
            "bad-schema", f"op {args.op!r} needs {takes} --ideal argument(s), got {len(args.ideals)}"
        )
    def parse_offsets(text):
        try:
            return [int(z) for z in text.split(",") if z.strip()]
        except ValueError as exc:
            raise SpecError("bad-schema", f"bad ideal offsets {text!r}") from exc

    ideals = [ideal_from_gens(sgp, parse_offsets(t)) for t in args.ideals]
    if args.op == "trace":
        result = trace(ideals[0]).format()
    elif args.op == "dual":
        result = dual(ideals[0]).format()
    elif args.op == "endo":
        result = ",".join(map(str, endo_semigroup(ideals[0].normalized()).generators))
    elif args.op == "colon":
        result = ideal_colon(ideals[0], ideals[1]).format()
    elif args.op == "iso":
        witness = is_translate(ideals[0], ideals[1])
        result = str(witness.offset) if witness else "none"
    else:
        result = "\n".join(e.format() for e in enumerate_normalized_ideals(sgp, caps["gaps"]))
    if args.fmt == "json":
        return 0, json.dumps({"result": result.split("\n") if args.op == "enumerate" else result}) + "\n"
    return 0, result + "\n"


def _run_suites(target, suite: str, caps) -> list:
    if suite == "lp":
        runner = run_artinian_lp_suite if isinstance(target, FinAlgebra) else run_semigroup_lp_suite
        return [runner(target, caps)]
    if suite == "identities":
        return [run_identity_suite(target, caps)]
    lp = run_artinian_lp_suite(target, caps) if isinstance(target, FinAlgebra) else run_semigroup_lp_suite(target, caps)
    return [lp, run_identity_suite(target, caps)]


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        caps = _caps_from_args(args)
        if args.command == "catalog":
            reports = run_catalog(args.suite or "all", caps)
            _emit(emit_reports(reports, args.fmt), args.out)
            return 1 if reports_have_failures(reports) else 0

        if args.command == "artinian":
            spec = _load_spec_argument(args.spec)
            if spec.kind != "artinian":
                raise SpecError("bad-schema", "artinian subcommand needs an artinian ring spec")
            algebra = algebra_from_presentation(spec.p, spec.variables, spec.relations)
            if args.op and args.suite:
                raise SpecError("bad-schema", "choose either --op or --suite, not both")
            if args.op:
                code, text = _run_artinian_op(algebra, args, caps)
                _emit(text, args.out)
                return code
            if not args.suite:
                raise SpecError("bad-schema", "nothing to do: pass --op or --suite")
            reports = _run_suites(algebra, args.suite, caps)
            _emit(emit_reports(reports, args.fmt), args.out)
            return 1 if reports_have_failures(reports) else 0

        # semigroup
        if args.gens and args.spec:
            raise SpecError("bad-schema", "pass either --gens or --spec, not both")
        if args.gens:
            spec = parse_ring_spec(json.dumps({"kind": "semigroup", "generators": [g for g in args.gens.split(",") if g.strip()]}))
        elif args.spec:
            spec = _load_spec_argument(args.spec)
        else:
            raise SpecError("bad-schema", "semigroup subcommand needs --gens or --spec")
        if spec.kind != "semigroup":
            raise SpecError("bad-schema", "semigroup subcommand needs a semigroup ring spec")
        sgp = semigroup_new(spec.generators)
        if args.op and args.suite:
            raise SpecError("bad-schema", "choose either --op or --suite, not both")
        if args.op:
            code, text = _run_semigroup_op(sgp, args, caps)
            _emit(text, args.out)
            return code
        if not args.suite:
            raise SpecError("bad-schema", "nothing to do: pass --op or --suite")
        reports = _run_suites(sgp, args.suite, caps)
        _emit(emit_reports(reports, args.fmt), args.out)
        return 1 if reports_have_failures(reports) else 0
    except SpecError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except TraceLabError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
