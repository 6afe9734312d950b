"""Problem inputs and self-contained certificates, with independent re-verification.

Input documents (``schema: 1``)::

    {"schema": 1, "degree": 5, "generators": ["(1 2 3 4 5)", "(1 2)"],
     "normal_generators": ["(1 2 3)", "(3 4 5)"]}

The plain-text form is the degree on the first line, one generator per line,
then a line ``--`` followed by the normal generators. Lines starting with
``#`` are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import (
    BoundMismatch,
    CertificateError,
    KernelMismatch,
    MalformedCycles,
    NotAHomomorphism,
    PreconditionError,
    PreconditionFailed,
    QuotShrinkError,
    TraceMismatch,
)
from .group import GroupHom, PermGroup
from .perm import format_cycles, parse_cycles
from .quotient import QuotientRep, TraceStep, bound_ok, replay_trace

__all__ = [
    "SCHEMA",
    "ProblemInput",
    "parse_input",
    "emit_certificate",
    "verify_certificate",
    "dumps",
]

SCHEMA = 1
MODES = ("reduce", "reduce-radical", "min-degree", "analyze", "verify")


@dataclass
class ProblemInput:
    degree: int
    generators: list[str]
    normal_generators: list[str] = field(default_factory=list)
    mode: str | None = None

    def __post_init__(self):
        if not isinstance(self.degree, int) or self.degree < 1:
            raise PreconditionFailed(f"degree must be a positive integer, got {self.degree!r}")
        if self.mode is not None and self.mode not in MODES:
            raise PreconditionFailed(f"unknown mode {self.mode!r}")
        # canonical cycle form; parsing also validates every string
        self.generators = [format_cycles(parse_cycles(s, self.degree)) for s in self.generators]
        self.normal_generators = [format_cycles(parse_cycles(s, self.degree)) for s in self.normal_generators]

    def group(self) -> PermGroup:
        return PermGroup(self.degree, self.generators)

    def normal(self) -> PermGroup:
        if not self.normal_generators:
            raise PreconditionFailed("this mode needs normal_generators")
        return PermGroup(self.degree, self.normal_generators)

    def to_dict(self) -> dict:
        d: dict[str, Any] = {
            "schema": SCHEMA,
            "degree": self.degree,
            "generators": list(self.generators),
            "normal_generators": list(self.normal_generators),
        }
        if self.mode is not None:
            d["mode"] = self.mode
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ProblemInput":
        if not isinstance(d, dict):
            raise PreconditionFailed("input document must be a JSON object")
        if d.get("schema", SCHEMA) != SCHEMA:
            raise PreconditionFailed(f"unsupported schema {d.get('schema')!r}")
        try:
            degree = d["degree"]
            gens = d["generators"]
        except KeyError as exc:
            raise PreconditionFailed(f"missing field {exc.args[0]!r}") from None
        if not isinstance(gens, list) or not all(isinstance(s, str) for s in gens):
            raise PreconditionFailed("generators must be a list of strings")
        normal = d.get("normal_generators", [])
        if not isinstance(normal, list) or not all(isinstance(s, str) for s in normal):
            raise PreconditionFailed("normal_generators must be a list of strings")
        return cls(degree, gens, normal, d.get("mode"))

    @classmethod
    def from_text(cls, text: str) -> "ProblemInput":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise PreconditionFailed("empty input")
        try:
            degree = int(lines[0])
        except ValueError:
            raise PreconditionFailed(f"first line must be the degree, got {lines[0]!r}") from None
        gens: list[str] = []
        normal: list[str] = []
        target = gens
        for ln in lines[1:]:
            if ln == "--":
                if target is normal:
                    raise MalformedCycles("more than one '--' separator")
                target = normal
                continue
            target.append(ln)
        return cls(degree, gens, normal)

    def to_text(self) -> str:
        out = [str(self.degree), *self.generators]
        if self.normal_generators:
            out += ["--", *self.normal_generators]
        return "\n".join(out) + "\n"


def parse_input(text: str, fmt: str = "json") -> ProblemInput:
    if fmt == "txt":
        return ProblemInput.from_text(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionFailed(f"invalid JSON: {exc}") from None
    return ProblemInput.from_dict(doc)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def emit_certificate(rep: QuotientRep, problem: ProblemInput | None = None) -> dict:
    """A document from which ``verify_certificate`` re-derives kernel and bound."""
    G = rep.G
    if problem is None:
        problem = ProblemInput(
            G.degree,
            [format_cycles(g) for g in G.generators],
            [format_cycles(x) for x in rep.N.generators],
        )
    return {
        "schema": SCHEMA,
        "input": problem.to_dict(),
        "images": [format_cycles(x) for x in rep.rho.gen_images],
        "m": rep.m,
        "n": rep.n,
        "transitive": rep.bound_certificate.transitive,
        "bound_ok": rep.bound_certificate.satisfied,
        "kernel_order": rep.kernel_certificate.kernel_order,
        "kernel_generators": [format_cycles(x) for x in rep.rho.kernel.generators],
        "trace": [s.to_dict() for s in rep.trace],
    }


@dataclass
class Verification:
    m: int
    n: int
    transitive: bool
    kernel_order: int


def verify_certificate(doc: dict) -> Verification:
    """Re-check a certificate from its own contents.

    Raises KernelMismatch (or TraceMismatch) when the images do not define a
    homomorphism with kernel N, and BoundMismatch when the claimed degree or
    bound data are wrong.
    """
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise CertificateError("not a schema-1 certificate")
    try:
        problem = ProblemInput.from_dict(doc["input"])
        m, n = doc["m"], doc["n"]
        image_strs = doc["images"]
        trace = [TraceStep.from_dict(s) for s in doc["trace"]]
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"certificate is missing data: {exc}") from None
    except PreconditionError as exc:
        raise CertificateError(f"certificate input is invalid: {exc}") from None
    G, N = problem.group(), problem.normal()
    if not isinstance(m, int) or m < 1:
        raise BoundMismatch(f"claimed degree {m!r} is not a positive integer")
    if n != G.degree:
        raise BoundMismatch(f"claimed n = {n} but the input has degree {G.degree}")
    try:
        images = [parse_cycles(s, m) for s in image_strs]
    except PreconditionError as exc:
        raise BoundMismatch(f"images do not live on {m} points: {exc}") from None
    if len(images) != len(G.generators):
        raise KernelMismatch(f"{len(images)} images for {len(G.generators)} generators")
    try:
        rho = GroupHom(G, m, images)
    except NotAHomomorphism as exc:
        raise KernelMismatch(str(exc)) from None
    K = rho.kernel
    if K.order != N.order or not all(K.contains(x) for x in N.generators) or not all(N.contains(x) for x in K.generators):
        raise KernelMismatch(f"kernel has order {K.order}, N has order {N.order}")
    if doc.get("kernel_order", K.order) != K.order:
        raise KernelMismatch(f"claimed kernel order {doc.get('kernel_order')} but found {K.order}")
    moved = {x for g in images for x in g.support()}
    if m != max(len(moved), 1):
        raise BoundMismatch(f"claimed m = {m} but the images move {len(moved)} points")
    transitive = G.is_transitive()
    if doc.get("transitive", transitive) != transitive:
        raise BoundMismatch("transitivity flag is wrong")
    if not bound_ok(m, n, transitive) or doc.get("bound_ok") is False:
        raise BoundMismatch(f"m = {m} does not satisfy the bound for n = {n}")
    stages = [s for s in trace if s.images is not None]
    if not stages:
        raise TraceMismatch("trace has no stages")
    try:
        replayed = replay_trace(G, stages)
    except (QuotShrinkError, ValueError, TypeError) as exc:
        raise TraceMismatch(f"trace does not replay: {exc}") from None
    if [x.images for x in replayed] != [x.images for x in images]:
        raise TraceMismatch("replaying the trace does not reproduce the images")
    return Verification(m, n, transitive, K.order)
