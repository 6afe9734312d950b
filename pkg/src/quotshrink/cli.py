"""Command-line interface.

Exit status: 0 on success, 1 for bad input or a failed certificate, 2 when
an internal invariant check fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Sequence

from .blocks import minimal_block
from .certificate import ProblemInput, dumps, emit_certificate, parse_input, verify_certificate
from .errors import CertificateError, InvariantViolation, NotSemisimple, PreconditionError
from .group import PermGroup, centralizer_of_classes, is_normal
from .mindeg import min_faithful_rep
from .perm import format_cycles
from .quotient import embed_quotient, embed_quotient_radical
from .socle import decompose, is_minimal_normal

__all__ = ["main", "analyze"]

log = logging.getLogger("quotshrink")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc.strerror}") from None


def analyze(G: PermGroup, N: PermGroup | None = None) -> dict[str, Any]:
    """Orbits, blocks and, given N, its socle-type structure."""
    out: dict[str, Any] = {
        "degree": G.degree,
        "order": G.order,
        "orbits": G.orbits(),
        "transitive": G.is_transitive(),
    }
    if out["transitive"] and G.degree > 1:
        systems = []
        for b in range(2, G.degree + 1):
            B = minimal_block(G, 1, b)
            if 1 < len(B) and [list(x) for x in B.blocks] not in systems:
                systems.append([list(x) for x in B.blocks])
        out["primitive"] = not systems
        out["minimal_block_systems"] = systems
    if N is not None:
        info: dict[str, Any] = {"order": N.order, "normal": N.is_subgroup_of(G) and is_normal(G, N)}
        if info["normal"] and not N.is_trivial():
            info["transitive"] = N.is_transitive()
            info["minimal_normal"] = is_minimal_normal(G, N)
            try:
                dec = decompose(G, N)
                info["k"] = dec.k
                info["factor_orders"] = [S.order for S in dec.factors]
                info["centralizer_trivial"] = centralizer_of_classes(G, N.nontrivial_generators()).is_trivial()
            except NotSemisimple as exc:
                info["semisimple"] = False
                info["reason"] = str(exc)
        out["N"] = info
    return out


def _reduce(problem: ProblemInput, radical: bool) -> dict:
    G, N = problem.group(), problem.normal()
    rep = (embed_quotient_radical if radical else embed_quotient)(G, N)
    return emit_certificate(rep, problem)


def _report_reduce(cert: dict, args) -> str:
    lines = [
        f"n = {cert['n']}, m = {cert['m']} ({'transitive' if cert['transitive'] else 'intransitive'}, bound ok: {cert['bound_ok']})",
        f"kernel order {cert['kernel_order']}",
        "images:",
        *(f"  {s}" for s in cert["images"]),
    ]
    if args.trace:
        lines.append("trace:")
        for st in cert["trace"]:
            lines.append(f"  {'  ' * st['depth']}{st['branch']}: {st['degree_in']} -> {st['degree_out']}")
    return "\n".join(lines)


def _solve(args, problem: ProblemInput) -> tuple[dict, str]:
    cmd = args.command
    if cmd in ("reduce", "reduce-radical"):
        cert = _reduce(problem, cmd == "reduce-radical")
        return cert, _report_reduce(cert, args)
    if cmd == "min-degree":
        res = min_faithful_rep(problem.group())
        doc = {
            "schema": 1,
            "degree": res.degree,
            "images": [format_cycles(x) for x in res.witness.gen_images],
            "subgroup_orders": [H.order for H in res.subgroup_family],
        }
        return doc, f"P = {res.degree}"
    if cmd == "analyze":
        G = problem.group()
        N = problem.normal() if problem.normal_generators else None
        doc = analyze(G, N)
        text = "\n".join(f"{k}: {v}" for k, v in doc.items())
        return doc, text
    raise AssertionError(cmd)


def _run(args) -> int:
    if args.command == "selftest":
        from .selftest import run_all

        results = run_all()
        ok = all(r[1] for r in results)
        if args.json:
            print(dumps({"passed": ok, "checks": [{"name": n, "passed": p, "detail": d} for n, p, d in results]}))
        else:
            for name, passed, detail in results:
                print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
        return 0 if ok else 2
    if args.command == "verify":
        try:
            doc = json.loads(_read(args.input))
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"invalid JSON: {exc}") from None
        v = verify_certificate(doc)
        if args.json:
            print(dumps({"valid": True, "m": v.m, "n": v.n, "kernel_order": v.kernel_order}))
        else:
            print(f"certificate valid: m = {v.m}, n = {v.n}, kernel order {v.kernel_order}")
        return 0
    if args.batch:
        raw = _read(args.batch)
        try:
            docs = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"invalid JSON: {exc}") from None
        if not isinstance(docs, list):
            raise PreconditionError("a batch file holds a JSON list of problems")
        results = []
        status = 0
        for i, d in enumerate(docs):
            try:
                doc, _ = _solve(args, ProblemInput.from_dict(d))
                results.append({"ok": True, "result": doc})
            except PreconditionError as exc:
                results.append({"ok": False, "error": type(exc).__name__, "message": str(exc)})
                status = max(status, 1)
            except InvariantViolation as exc:
                results.append({"ok": False, "error": type(exc).__name__, "message": str(exc)})
                status = 2
            log.info("batch item %d done", i)
        print(dumps({"results": results}))
        return status
    if args.input is None:
        raise PreconditionError("an input file (or '-') is required")
    problem = parse_input(_read(args.input), args.format)
    doc, text = _solve(args, problem)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dumps(doc) + "\n")
    print(dumps(doc) if args.json else text)
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quotshrink", description="Small faithful permutation representations of G/N.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)
    help_ = {
        "reduce": "embed G/N for a nonabelian minimal normal N",
        "reduce-radical": "embed G/N for N without abelian composition factors",
        "min-degree": "minimal faithful degree of G",
        "analyze": "orbits, blocks and socle structure",
    }
    for name, h in help_.items():
        sp = sub.add_parser(name, help=h)
        sp.add_argument("input", nargs="?", help="problem file, '-' for stdin")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--format", choices=("json", "txt"), default="json", help="input format")
        sp.add_argument("--batch", metavar="FILE", help="JSON list of problems")
        sp.add_argument("--trace", action="store_true", help="show the derivation steps")
        sp.add_argument("-o", "--output", metavar="FILE", help="also write the JSON result here")
    sv = sub.add_parser("verify", help="re-check a certificate")
    sv.add_argument("input", help="certificate file, '-' for stdin")
    sv.add_argument("--json", action="store_true")
    st = sub.add_parser("selftest", help="run the built-in structural checks")
    st.add_argument("--json", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return _run(args)
    except (PreconditionError, CertificateError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
