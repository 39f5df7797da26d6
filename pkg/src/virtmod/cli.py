"""Command-line front end: ``virtmod <command> [options]``.

Commands:
  analyze FILE         structure, predicate verdicts and decomposition
  snf FILE             Smith form with certificates
  embeds FILE_A FILE_B embedding test in both directions
  ks FILE_A FILE_B     Krull-Schmidt pairing of two summand lists
  ring FILE            analysis of a product of matrix rings
  validate PRED [N]    fast predicate vs brute-force oracle up to order N

Exit status: 0 on success, 1 for malformed input or usage, 2 when the
mathematics refuses (unsupported ring, not decomposable, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from virtmod import __version__
from virtmod.errors import (
    DomainError,
    NotDecomposable,
    NotSubisomorphic,
    ParseError,
    UnknownPredicate,
    UnsupportedRing,
    VirtmodError,
)
from virtmod.matring import MatModPresentation, ProductRingSpec, ring_analyze, transport_to_base
from virtmod.modpid import (
    Presentation,
    StructureDescriptor,
    embeds,
    krull_dimension,
    structure,
    subisomorphic,
    uniform_dimension,
)
from virtmod.smith import Matrix, smith_normal_form, verify_snf
from virtmod.virtual import CITATIONS, all_verdicts, decompose_virtually_simple, ks_certify

VALIDATE_DEFAULT_BOUND = 64


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; ours is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def load_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.lineno, exc.colno) from None


def parse_module(data, ring=None):
    """``(kind, canonical input, descriptor)`` for a presentation, a
    matrix-ring presentation or a descriptor."""
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object describing a module")
    if "spec" in data:
        mp = MatModPresentation.from_json(data)
        base = transport_to_base(mp)
        return "matrix_module", {"input": mp.to_json(), "transported": base.to_json()}, structure(base)
    if "generators" in data or "relations" in data:
        p = Presentation.from_json(data, ring)
        return "presentation", {"input": p.to_json()}, structure(p)
    if "free_rank" in data or "invariant_factors" in data:
        s = StructureDescriptor.from_json(data, ring)
        return "descriptor", {"input": s.to_json()}, s
    raise ParseError("module needs 'generators'/'relations', 'spec' or 'free_rank'")


def analyze(data, ring=None) -> dict:
    kind, echo, s = parse_module(data, ring)
    report = {"kind": kind, **echo, "descriptor": s.to_json(), "summary": str(s)}
    report["torsion_split"] = {
        "torsion": {**s.to_json(), "free_rank": 0},
        "free_rank": s.free_rank,
        "citation": CITATIONS["torsion_split"],
    }
    try:
        report["uniform_dimension"] = uniform_dimension(s)
    except UnsupportedRing as exc:
        report["uniform_dimension"] = {"unsupported": str(exc)}
    report["krull_dimension"] = krull_dimension(s) if not s.is_zero() else None
    verdicts = [v.to_json() for v in all_verdicts(s)]
    report["verdicts"] = verdicts
    try:
        report["decomposition"] = decompose_virtually_simple(s).to_json()
    except NotDecomposable as exc:
        report["decomposition"] = {
            "not_decomposable": {
                "prime": exc.prime.to_json(),
                "factor": exc.factor.to_json(),
                "message": str(exc),
            },
            "citation": CITATIONS["decomposition"],
        }
    except UnsupportedRing as exc:
        report["decomposition"] = {"unsupported": str(exc)}
    cites = {v["citation"] for v in verdicts}
    cites.update((CITATIONS["decomposition"], CITATIONS["torsion_split"], CITATIONS["uniform_dimension"]))
    report["citations"] = sorted(cites)
    return report


def snf_report(data, ring=None) -> dict:
    A = Matrix.from_json(data, ring)
    r = smith_normal_form(A)
    R = A.ring
    diag = r.diagonal()
    return {
        "input": A.to_json(),
        "U": r.U.to_json(),
        "S": r.S.to_json(),
        "V": r.V.to_json(),
        "diagonal": [d.to_json() for d in diag],
        "invariant_factors": [d.to_json() for d in diag if not d.is_zero() and not R.is_unit(d.value)],
        "verified": verify_snf(A, r),
    }


def embeds_report(a_data, b_data, ring=None) -> dict:
    a = parse_module(a_data, ring)[2]
    b = parse_module(b_data, ring)[2]
    return {
        "a": a.to_json(),
        "b": b.to_json(),
        "a_embeds_in_b": embeds(a, b),
        "b_embeds_in_a": embeds(b, a),
        "subisomorphic": subisomorphic(a, b),
        "citation": "Lemma 2.14; Thm 2.15",
    }


def _summands(data, ring=None) -> list:
    if isinstance(data, dict):
        data = data.get("summands")
    if not isinstance(data, list):
        raise ParseError("expected a list of modules (or an object with 'summands')")
    return [parse_module(d, ring)[2] for d in data]


def ks_report(a_data, b_data, ring=None) -> dict:
    a = _summands(a_data, ring)
    b = _summands(b_data, ring)
    cert = ks_certify(a, b)
    return {"a": [s.to_json() for s in a], "b": [s.to_json() for s in b],
            "certificate": cert.to_json(a, b), "valid": cert.check(a, b)}


def ring_report(data) -> dict:
    return ring_analyze(ProductRingSpec.from_json(data)).to_json()


def validate_report(predicate: str, bound: int) -> dict:
    from virtmod.oracle import validate

    return validate(predicate, bound).to_json()


# -- text rendering --------------------------------------------------------------------


def _render_analyze(r: dict) -> str:
    lines = [f"module: {r['summary']}  ({r['kind']})"]
    lines.append(f"uniform dimension: {r['uniform_dimension']}")
    lines.append(f"krull dimension: {r['krull_dimension']}")
    for v in r["verdicts"]:
        w = f"  witness={json.dumps(v['witness'])}" if v["witness"] is not None else ""
        lines.append(f"  {v['predicate']}: {v['value']}{w}  [{v['citation']}]")
    dec = r["decomposition"]
    if "summands" in dec:
        parts = [f"{StructureDescriptor.from_json(s['descriptor'])} ({s['tag']})" for s in dec["summands"]]
        lines.append("decomposition: " + (", ".join(parts) if parts else "(zero module)"))
    elif "not_decomposable" in dec:
        lines.append(f"decomposition: none; {dec['not_decomposable']['message']}")
    else:
        lines.append(f"decomposition: unsupported; {dec['unsupported']}")
    return "\n".join(lines)


def _render_matrix(m: dict) -> str:
    return "\n".join("  [" + ", ".join(json.dumps(x) for x in row) + "]" for row in m["entries"])


def _render_snf(r: dict) -> str:
    return "\n".join([
        "U =", _render_matrix(r["U"]),
        "S =", _render_matrix(r["S"]),
        "V =", _render_matrix(r["V"]),
        f"invariant factors: {json.dumps(r['invariant_factors'])}",
        f"certificate verified: {r['verified']}",
    ])


def _render_embeds(r: dict) -> str:
    return "\n".join([
        f"a embeds in b: {r['a_embeds_in_b']}",
        f"b embeds in a: {r['b_embeds_in_a']}",
        f"subisomorphic: {r['subisomorphic']}  [{r['citation']}]",
    ])


def _render_ks(r: dict) -> str:
    pairs = ", ".join(f"{i}<->{j}" for i, j in r["certificate"]["pairing"])
    return f"pairing: {pairs or '(empty)'}  [{r['certificate']['citation']}]\nvalid: {r['valid']}"


def _render_ring(r: dict) -> str:
    comps = ", ".join(
        f"M_{c['n']}({c['base']['ring']}{':' + str(c['base']['p']) if 'p' in c['base'] else ''})"
        for c in r["wedderburn_data"]["components"]
    )
    lines = [
        f"wedderburn data: {comps}",
        f"semisimple: {r['is_semisimple']}",
        f"left completely virtually semisimple: {r['is_left_completely_vss']}",
        f"V-domain status: {', '.join(r['v_domain_status'])}",
    ]
    for c in r["components"]:
        n = len(c["regular_decomposition"])
        lines.append(f"  component n={c['component']['n']}: regular module = {n} column module(s),"
                     f" uniform dimension {c['regular_uniform_dimension']}")
    lines.extend(f"note: {x}" for x in r["notes"])
    return "\n".join(lines)


def _render_validate(r: dict) -> str:
    status = "ok" if not r["mismatches"] else f"{len(r['mismatches'])} MISMATCHES"
    lines = [f"{r['predicate']} up to {r['bound']}: {r['checked']} checked, {status}"]
    lines.extend(f"  {json.dumps(m)}" for m in r["mismatches"][:20])
    return "\n".join(lines)


# -- driver ------------------------------------------------------------------------------


def _flags(parser, default):
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="emit the JSON report")
    parser.add_argument("--ring", default=default("int"),
                        help="ring tag for inputs without one: int (default), qx, fp:<p>")


def build_parser() -> argparse.ArgumentParser:
    # the flags work before or after the command; subcommand copies must not
    # reset values given before it, hence SUPPRESS there
    common = argparse.ArgumentParser(add_help=False)
    _flags(common, lambda v: argparse.SUPPRESS)

    parser = _Parser(prog="virtmod", description=__doc__.split("\n")[0])
    _flags(parser, lambda v: v)
    parser.add_argument("--version", action="version", version=f"virtmod {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="analyze a module")
    p.add_argument("file")
    p = sub.add_parser("snf", parents=[common], help="Smith normal form with certificates")
    p.add_argument("file")
    for name, text in (("embeds", "embedding test"), ("ks", "Krull-Schmidt certificate")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file_a")
        p.add_argument("file_b")
    p = sub.add_parser("ring", parents=[common], help="analyze a product of matrix rings")
    p.add_argument("file")
    p = sub.add_parser("validate", parents=[common], help="oracle validation of a predicate")
    p.add_argument("predicate")
    p.add_argument("bound", nargs="?", type=int, default=None)
    p.add_argument("--bound", dest="bound_opt", type=int, default=None,
                   help="largest group order (default: $VIRTMOD_ORACLE_BOUND or 64)")
    return parser


def run(args) -> tuple:
    """``(report, renderer)`` for parsed arguments."""
    cmd = args.command
    if cmd == "analyze":
        return analyze(load_json(args.file), args.ring), _render_analyze
    if cmd == "snf":
        return snf_report(load_json(args.file), args.ring), _render_snf
    if cmd == "embeds":
        return embeds_report(load_json(args.file_a), load_json(args.file_b), args.ring), _render_embeds
    if cmd == "ks":
        return ks_report(load_json(args.file_a), load_json(args.file_b), args.ring), _render_ks
    if cmd == "ring":
        return ring_report(load_json(args.file)), _render_ring
    bound = args.bound if args.bound is not None else args.bound_opt
    if bound is None:
        env = os.environ.get("VIRTMOD_ORACLE_BOUND")
        bound = int(env) if env and env.strip().isdigit() else VALIDATE_DEFAULT_BOUND
    return validate_report(args.predicate, bound), _render_validate


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, render = run(args)
    except ParseError as exc:
        print(f"virtmod: parse error: {exc}", file=sys.stderr)
        return 1
    except UnknownPredicate as exc:
        print(f"virtmod: usage error: {exc}", file=sys.stderr)
        return 1
    except NotSubisomorphic as exc:
        print(f"virtmod: not subisomorphic ({exc.direction} fails): {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"virtmod: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except VirtmodError as exc:
        print(f"virtmod: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(render(report))
    if args.command == "validate" and report["mismatches"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
