"""Faithful actions of G/N of small degree for nonabelian minimal normal N.

For G <= Sym(n) the construction recurses on the shape of the action:

* G intransitive: handle an orbit where N acts nontrivially, then the rest;
* G transitive, N intransitive: the N-orbits form blocks, so solve the block
  stabilizer on one block and induce along the blocks;
* N transitive: realize G/N regularly and minimize its degree exactly, or
  when C_G(N) = 1 use the action on k copies of T/S, where T is the
  automorphism group induced on a simple factor S of N.

The result always satisfies m < n, and 5m <= 2n when G is transitive. Both
the kernel and the bound are verified before anything is returned.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from .blocks import orbits_block_system
from .errors import (
    AbelianFactor,
    BoundViolation,
    LemmaViolated,
    NotMinimalNormal,
    NotNormal,
    NotSemisimple,
    OrderCapExceeded,
    PreconditionFailed,
)
from .group import (
    GroupHom,
    PermGroup,
    centralizer_of_classes,
    coset_action,
    direct_sum,
    is_normal,
    restriction,
)
from .mindeg import min_degree, min_faithful_rep, order_cap
from .perm import Permutation, format_cycles, parse_cycles
from .socle import decompose, is_minimal_normal, minimal_normal_subgroup
from .wreath import cameron_data

__all__ = [
    "TraceStep",
    "KernelCertificate",
    "BoundCertificate",
    "QuotientRep",
    "LemmaReport",
    "embed_quotient",
    "embed_quotient_radical",
    "check_minprimdeg",
    "check_minwpquot",
    "bound_ok",
    "replay_trace",
]

log = logging.getLogger(__name__)


@dataclass
class TraceStep:
    """One derivation step.

    Steps carrying ``images`` are stages: the images of the previous stage's
    generators (of G's generators for the first stage). Composing the stages
    in order reproduces rho. Steps without images record nested recursion.
    """

    branch: str
    depth: int
    degree_in: int
    degree_out: int
    images: list[str] | None = None
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "branch": self.branch,
            "depth": self.depth,
            "degree_in": self.degree_in,
            "degree_out": self.degree_out,
            "detail": self.detail,
        }
        if self.images is not None:
            d["images"] = self.images
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TraceStep":
        return cls(d["branch"], d["depth"], d["degree_in"], d["degree_out"], d.get("images"), d.get("detail", {}))


@dataclass(frozen=True)
class KernelCertificate:
    kernel_order: int
    equals_N: bool


@dataclass(frozen=True)
class BoundCertificate:
    transitive: bool
    bound: str  # "2n/5" or "n-1"
    satisfied: bool


@dataclass
class QuotientRep:
    rho: GroupHom
    m: int
    n: int
    N: PermGroup
    kernel_certificate: KernelCertificate
    bound_certificate: BoundCertificate
    trace: list[TraceStep]

    @property
    def G(self) -> PermGroup:
        return self.rho.domain

    @property
    def stages(self) -> list[TraceStep]:
        return [s for s in self.trace if s.images is not None]


@dataclass
class LemmaReport:
    name: str
    holds: bool
    values: dict[str, Any]


def bound_ok(m: int, n: int, transitive: bool) -> bool:
    return 5 * m <= 2 * n if transitive else m < n


# ---------------------------------------------------------------------------
# helpers


def _trivial_hom(G: PermGroup) -> GroupHom:
    one = Permutation._raw((0,))
    return GroupHom(G, 1, [one] * len(G.generators), check=False)


def _compress(hom: GroupHom) -> GroupHom:
    """The same map on the moved points of its image, relabelled in order."""
    moved = sorted({x for g in hom.gen_images for x in g.support()})
    if not moved:
        return _trivial_hom(hom.domain)
    if len(moved) == hom.codomain_degree:
        return hom
    pos = {p - 1: i for i, p in enumerate(moved)}
    imgs = [Permutation._raw(tuple(pos[g._p[p - 1]] for p in moved)) for g in hom.gen_images]
    return GroupHom(hom.domain, len(moved), imgs, check=False)


def _same_group(A: PermGroup, B: PermGroup) -> bool:
    if A.order != B.order:
        return False
    return all(A.contains(b) for b in B.generators) and all(B.contains(a) for a in A.generators)


def _then(first: GroupHom, second: GroupHom) -> GroupHom:
    """first followed by second, where second is defined on first's image."""
    return GroupHom(first.domain, second.codomain_degree, [second(x) for x in first.gen_images], check=False)


def _check_kernel(rho: GroupHom, N: PermGroup) -> None:
    K = rho.kernel
    if not _same_group(K, N):
        raise LemmaViolated(f"kernel of order {K.order} differs from N of order {N.order}")


def _check_bound(m: int, n: int, transitive: bool) -> None:
    if not bound_ok(m, n, transitive):
        raise BoundViolation(f"degree {m} breaks the bound for n = {n} ({'transitive' if transitive else 'intransitive'})")


# ---------------------------------------------------------------------------
# the recursion


def _embed(G: PermGroup, N: PermGroup, depth: int, steps: list[TraceStep]) -> GroupHom:
    """Hom from G with kernel exactly N; N minimal normal and nonabelian."""
    n = G.degree
    if N.order == G.order:
        rho = _trivial_hom(G)
        branch = "trivial"
        detail: dict[str, Any] = {}
    elif not G.is_transitive():
        rho, detail = _case_intransitive(G, N, depth, steps)
        branch = "a"
    elif not N.is_transitive():
        rho, detail = _case_blocks(G, N, depth, steps)
        branch = "b"
    else:
        rho, detail = _case_transitive_N(G, N)
        branch = "c"
    rho = _compress(rho)
    _check_kernel(rho, N)
    _check_bound(rho.codomain_degree, n, G.is_transitive())
    steps.append(TraceStep(branch, depth, n, rho.codomain_degree, None, detail))
    log.debug("depth %d branch %s: %d -> %d", depth, branch, n, rho.codomain_degree)
    return rho


def _require_minimal(G: PermGroup, N: PermGroup) -> None:
    if not is_minimal_normal(G, N):
        raise LemmaViolated("reduced pair lost minimal normality")


def _case_intransitive(G: PermGroup, N: PermGroup, depth: int, steps: list[TraceStep]):
    orbits = G.orbits()
    nontrivial = [o for o in orbits if any(g(x) != x for g in N.generators for x in o)]
    delta = min(nontrivial, key=lambda o: (-len(o), o[0]))
    rest = sorted(x for o in orbits if o is not delta for x in o)
    rD = restriction(G, delta)
    GD, ND = rD.image, rD.image_of_group(N)
    _require_minimal(GD, ND)
    parts = [_then(rD, _embed(GD, ND, depth + 1, steps))]
    detail: dict[str, Any] = {"orbit": list(delta), "rest": len(rest)}
    if rest:
        rG = restriction(G, rest)
        NG = rG.image_of_group(N)
        if NG.is_trivial():
            parts.append(rG)
            detail["rest_branch"] = "restriction"
        else:
            GG = rG.image
            _require_minimal(GG, NG)
            parts.append(_then(rG, _embed(GG, NG, depth + 1, steps)))
            detail["rest_branch"] = "recursion"
    return direct_sum(parts), detail


def _case_blocks(G: PermGroup, N: PermGroup, depth: int, steps: list[TraceStep]):
    B = orbits_block_system(G, N)
    data = cameron_data(G, B)
    local = data.local
    GD = local.image
    ND = local.image_of_group(N)
    inner = _embed_radical(GD, ND, depth + 1, steps)
    d2 = inner.codomain_degree
    k = len(B.blocks)
    images = []
    for g in G.generators:
        img = [0] * (d2 * k)
        for i in range(k):
            j = B.block_of[g(B.blocks[i][0])]
            f = inner(data.local_component(g, i))._p
            for x in range(d2):
                img[i * d2 + x] = j * d2 + f[x]
        images.append(Permutation._raw(tuple(img)))
    return GroupHom(G, d2 * k, images, check=False), {"blocks": k, "block_size": len(B.blocks[0]), "inner_degree": d2}


def _wreath_route(G: PermGroup, N: PermGroup) -> GroupHom | None:
    """G -> (T/S) wr Sym(k), or None when C_G(N) is nontrivial."""
    if not centralizer_of_classes(G, N.nontrivial_generators()).is_trivial():
        return None
    dec = decompose(G, N)
    k = dec.k
    fa, trans, T_hom = dec.factor_action, dec.transversal, dec.T_hom
    outer = coset_action(dec.T_rep, dec.T_socle_image)
    c = outer.codomain_degree
    tinv = [~t for t in trans]
    images = []
    for g, sigma in zip(G.generators, fa.gen_images):
        img = [0] * (c * k)
        for i in range(k):
            j = sigma._p[i]
            h = trans[i] * g * tinv[j]
            pi = outer(T_hom(h))._p
            for x in range(c):
                img[i * c + x] = j * c + pi[x]
        images.append(Permutation._raw(tuple(img)))
    return GroupHom(G, c * k, images, check=False)


def _regular_quotient(G: PermGroup, N: PermGroup) -> GroupHom:
    # refuse before building |G:N| cosets
    index = G.order // N.order
    if index > order_cap():
        raise OrderCapExceeded(f"|G:N| = {index} exceeds the order cap {order_cap()}")
    return coset_action(G, N)


def _case_transitive_N(G: PermGroup, N: PermGroup):
    detail: dict[str, Any] = {}
    routes: list[tuple[int, int, str, GroupHom]] = []
    try:
        reg = _regular_quotient(G, N)
        res = min_faithful_rep(reg.image)
        routes.append((res.degree, 0, "mindeg", _then(reg, res.witness)))
        detail["mindeg_degree"] = res.degree
    except OrderCapExceeded as exc:
        detail["mindeg_degree"] = None
        log.info("mindeg route skipped: %s", exc)
    wr = _wreath_route(G, N)
    if wr is not None:
        wr = _compress(wr)
        _check_kernel(wr, N)
        routes.append((wr.codomain_degree, 1, "wreath", wr))
        detail["wreath_degree"] = wr.codomain_degree
    if not routes:
        raise OrderCapExceeded("|G:N| exceeds the order cap and C_G(N) is nontrivial")
    degree, _, name, rho = min(routes, key=lambda r: r[:2])
    detail["route"] = name
    return rho, detail


def _embed_radical(G: PermGroup, N: PermGroup, depth: int, steps: list[TraceStep], stages: list[GroupHom] | None = None) -> GroupHom:
    """Hom from G with kernel N, for N normal without abelian composition factors."""
    current = GroupHom(G, G.degree, G.generators, check=False)
    H, M = G, N
    while not M.is_trivial():
        K = minimal_normal_subgroup(H, M)
        if K.is_abelian():
            raise AbelianFactor(f"N has an abelian chief factor of order {K.order}")
        rho = _embed(H, K, depth, steps)
        if stages is not None:
            stages.append(rho)
        current = _then(current, rho)
        H = rho.image
        M = rho.image_of_group(M)
    return _compress(current)


# ---------------------------------------------------------------------------
# public operations


def _check_normal(G: PermGroup, N: PermGroup) -> None:
    if N.degree != G.degree or not N.is_subgroup_of(G) or not is_normal(G, N):
        raise NotNormal("N is not a normal subgroup of G")


def _finish(G: PermGroup, N: PermGroup, rho: GroupHom, steps: list[TraceStep], stages: list[GroupHom]) -> QuotientRep:
    rho = _compress(rho)
    K = rho.kernel
    equal = _same_group(K, N)
    if not equal:
        raise LemmaViolated(f"kernel of order {K.order} differs from N of order {N.order}")
    n, m = G.degree, rho.codomain_degree
    transitive = G.is_transitive()
    _check_bound(m, n, transitive)
    # each stage is written on the previous stage's generators
    stage_steps = []
    prev_in = n
    for i, st in enumerate(stages):
        imgs = [format_cycles(x) for x in st.gen_images]
        stage_steps.append(TraceStep(f"stage{i + 1}", 0, prev_in, st.codomain_degree, imgs, {}))
        prev_in = st.codomain_degree
    trace = stage_steps + steps
    return QuotientRep(
        rho,
        m,
        n,
        N,
        KernelCertificate(K.order, equal),
        BoundCertificate(transitive, "2n/5" if transitive else "n-1", True),
        trace,
    )


def embed_quotient(G: PermGroup, N: PermGroup) -> QuotientRep:
    """A faithful action of G/N of degree m < n (5m <= 2n if G is transitive)."""
    _check_normal(G, N)
    if N.is_trivial():
        raise NotMinimalNormal("N is trivial")
    if N.is_abelian():
        raise AbelianFactor("N is abelian")
    if not is_minimal_normal(G, N):
        raise NotMinimalNormal("N is not a minimal normal subgroup of G")
    steps: list[TraceStep] = []
    rho = _embed(G, N, 1, steps)
    return _finish(G, N, rho, steps, [rho])


def embed_quotient_radical(G: PermGroup, N: PermGroup) -> QuotientRep:
    """As embed_quotient for any nontrivial normal N without abelian composition factors."""
    _check_normal(G, N)
    if N.is_trivial():
        raise PreconditionFailed("N is trivial")
    steps: list[TraceStep] = []
    stages: list[GroupHom] = []
    try:
        rho = _embed_radical(G, N, 1, steps, stages)
    except NotSemisimple as exc:
        raise AbelianFactor(str(exc)) from exc
    return _finish(G, N, rho, steps, stages)


def replay_trace(G: PermGroup, stages: list[TraceStep]) -> list[Permutation]:
    """Compose the stage maps; returns the images of G's generators.

    Each stage must define a homomorphism on the group generated by the
    previous stage's images (NotAHomomorphism otherwise).
    """
    group = G
    current = list(G.generators)
    for st in stages:
        if st.degree_in != group.degree:
            raise LemmaViolated(f"stage expects degree {st.degree_in}, previous stage gave {group.degree}")
        imgs = [parse_cycles(s, st.degree_out) for s in st.images]
        hom = GroupHom(group, st.degree_out, imgs)
        current = [hom(x) for x in current]
        group = PermGroup(st.degree_out, imgs)
    return current


# ---------------------------------------------------------------------------
# numeric checks of the degree inequalities


def _transitive_N_without_centralizer(G: PermGroup, N: PermGroup):
    _check_normal(G, N)
    if not N.is_transitive():
        raise PreconditionFailed("N must be transitive")
    if not centralizer_of_classes(G, N.nontrivial_generators()).is_trivial():
        raise PreconditionFailed("C_G(N) must be trivial")
    try:
        return decompose(G, N)
    except NotSemisimple as exc:
        raise PreconditionFailed(str(exc)) from exc


def check_minprimdeg(G: PermGroup, N: PermGroup) -> LemmaReport:
    """n >= P(T)^k for transitive N = S^k with trivial centralizer."""
    dec = _transitive_N_without_centralizer(G, N)
    PT = min_degree(dec.T_rep)
    n, k = G.degree, dec.k
    holds = n >= PT**k
    if not holds:
        raise LemmaViolated(f"n = {n} < P(T)^k = {PT}^{k}")
    return LemmaReport("minprimdeg", holds, {"n": n, "P(T)": PT, "k": k, "P(T)^k": PT**k})


def check_minwpquot(G: PermGroup, N: PermGroup, dec=None) -> LemmaReport:
    """P(G/N) <= k|T/S| <= 2kP(T)/5 when C_G(N) = 1."""
    if dec is None:
        _check_normal(G, N)
        if not centralizer_of_classes(G, N.nontrivial_generators()).is_trivial():
            raise PreconditionFailed("C_G(N) must be trivial")
        try:
            dec = decompose(G, N)
        except NotSemisimple as exc:
            raise PreconditionFailed(str(exc)) from exc
    PQ = min_degree(_regular_quotient(G, N).image)
    k, out = dec.k, dec.out_order
    PT = min_degree(dec.T_rep)
    first = PQ <= k * out
    second = 5 * k * out <= 2 * k * PT
    if not (first and second):
        raise LemmaViolated(f"P(G/N) = {PQ}, k|T/S| = {k * out}, 2kP(T)/5 = {2 * k * PT / 5}")
    return LemmaReport("minwpquot", True, {"P(G/N)": PQ, "k": k, "|T/S|": out, "k|T/S|": k * out, "P(T)": PT})
