"""Decomposition of a semisimple normal subgroup N = S_1 x ... x S_k.

Factors are found as minimal normal subgroups of N: the normal closure of
one element is cut down until it is simple, then the next factor is sought
inside the centralizer of the factors found so far. Factors are numbered
1..k by smallest moved point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from ._backend import kernels as _k
from .errors import (
    LemmaViolated,
    NotInGroup,
    NotNormal,
    NotSemisimple,
    PreconditionFailed,
)
from .group import (
    GroupHom,
    PermGroup,
    centralizer_of_classes,
    is_normal,
    normal_closure,
)
from .perm import Permutation

__all__ = [
    "SocleDecomposition",
    "simple_factors",
    "decompose",
    "is_minimal_normal",
    "projection_onto_factor",
    "is_subdirect",
    "induced_T",
    "check_ntproj",
    "is_simple",
    "minimal_normal_subgroup",
]

# |M| above which simplicity is not certified by class enumeration
SIMPLE_CHECK_CAP = 500_000


def _conjugacy_classes(M: PermGroup) -> Iterable[tuple[tuple, int]]:
    """Yield (representative, class size) in chain order of representatives."""
    mul, inv = _k.mul, _k.inv
    conj = [(g._p, inv(g._p)) for g in M.generators]
    covered: set[tuple] = set()
    for x in M._raw_elements():
        if x in covered:
            continue
        cls = {x}
        queue = [x]
        for y in queue:
            for g, gi in conj:
                c = mul(mul(gi, y), g)
                if c not in cls:
                    cls.add(c)
                    queue.append(c)
        covered |= cls
        yield x, len(cls)
        if len(covered) == M.order:
            return


def _proper_normal_witness(M: PermGroup, ambient: PermGroup | None = None) -> Permutation | None:
    """A nontrivial y in M whose normal closure (in ``ambient``, default M) is
    smaller than M, or None if there is none."""
    A = M if ambient is None else ambient
    seen = 0
    for x, size in _conjugacy_classes(M):
        seen += size
        if _k.is_identity(x):
            continue
        y = Permutation._raw(x)
        if normal_closure(A, [y]).order < M.order:
            return y
        if seen > SIMPLE_CHECK_CAP:
            raise PreconditionFailed(f"group of order {M.order} too large to certify simplicity")
    return None


def is_simple(M: PermGroup) -> bool:
    if M.is_trivial():
        return False
    return _proper_normal_witness(M) is None


def _minimal_normal_from(N: PermGroup, x: Permutation) -> PermGroup:
    """A minimal normal subgroup of N inside ncl_N(x), required to be simple."""
    M = normal_closure(N, [x])
    while True:
        if M.is_abelian():
            raise NotSemisimple(f"N has an abelian normal subgroup of order {M.order}")
        y = _proper_normal_witness(M)
        if y is None:
            return M
        smaller = normal_closure(N, [y])
        if smaller.order < M.order:
            M = smaller
            continue
        # the proper normal subgroups of M found so far are not normal in N
        z = _proper_normal_witness(M, N)
        if z is None:
            raise NotSemisimple("a minimal normal subgroup of N is not simple")
        M = normal_closure(N, [z])


def minimal_normal_subgroup(H: PermGroup, M: PermGroup) -> PermGroup:
    """A minimal normal subgroup of H inside the nontrivial normal subgroup M.

    Starts from the normal closure of the first nontrivial generator of M
    and descends; a semisimple candidate is minimal once H permutes its
    simple factors transitively. An abelian result is returned as is.
    """
    x = next((g for g in M.generators if not g.is_identity()), None)
    if x is None:
        raise PreconditionFailed("M is trivial")
    K = normal_closure(H, [x])
    while True:
        if K.is_abelian():
            # descend to a minimal one, all of which are elementary abelian here
            z = _proper_normal_witness(K, H)
            if z is None:
                return K
            K = normal_closure(H, [z])
            continue
        try:
            fs = simple_factors(K)
        except NotSemisimple:
            z = _proper_normal_witness(K, H)
            if z is None:
                raise LemmaViolated("a minimal normal subgroup is neither abelian nor semisimple") from None
            K = normal_closure(H, [z])
            continue
        K2 = normal_closure(H, fs[0].nontrivial_generators()[:1])
        if K2.order == K.order:
            return K
        K = K2


def _first_moved(G: PermGroup) -> int:
    pts = G.moved_points()
    return pts[0] if pts else G.degree + 1


def simple_factors(N: PermGroup) -> list[PermGroup]:
    """Simple direct factors of a semisimple N, sorted by smallest moved point."""
    if N.is_trivial():
        raise NotSemisimple("the trivial group has no simple factors")
    found: list[PermGroup] = []
    product_order = 1
    seeds: list[Permutation] = []
    while product_order < N.order:
        C = centralizer_of_classes(N, seeds) if seeds else N
        x = next((g for g in C.generators if not g.is_identity()), None)
        if x is None or any(P.contains(x) for P in found):
            raise NotSemisimple("factors found so far have a nontrivial centralizer overlap")
        M = _minimal_normal_from(N, x)
        found.append(M)
        seeds.extend(M.nontrivial_generators())
        product_order *= M.order
    if product_order != N.order:
        raise NotSemisimple("orders of the simple factors do not multiply to |N|")
    mul = _k.mul
    for i, A in enumerate(found):
        for B in found[i + 1:]:
            for a in A.generators:
                for b in B.generators:
                    if mul(a._p, b._p) != mul(b._p, a._p):
                        raise NotSemisimple("simple factors do not commute")
    order = sorted(range(len(found)), key=lambda i: (_first_moved(found[i]), i))
    return [found[i] for i in order]


def _factor_index(factors: list[PermGroup], x: Permutation) -> int:
    for j, S in enumerate(factors):
        if S.contains(x):
            return j
    return -1


@dataclass
class SocleDecomposition:
    """N as a product of simple factors, with the action of G on them.

    ``factor_action`` maps G to Sym(k) (factor i is point i). ``T_hom``
    realizes T = N_G(S_1)/C_G(S_1) faithfully as ``T_rep``; the image of
    S_1 is ``T_socle_image``. Fields tied to G are None when no ambient
    group was given.
    """

    N: PermGroup
    factors: list[PermGroup]
    G: PermGroup | None = None
    factor_action: GroupHom | None = None
    transversal: list[Permutation] | None = None
    _T: tuple | None = field(default=None, repr=False)

    @property
    def k(self) -> int:
        return len(self.factors)

    def _T_data(self):
        if self._T is None:
            if self.G is None:
                raise PreconditionFailed("T needs the ambient group")
            self._T = _build_T(self.G, self)
        return self._T

    @property
    def normalizer_S1(self) -> PermGroup:
        return self._T_data()[0]

    @property
    def centralizer_S1(self) -> PermGroup:
        return self._T_data()[1]

    @property
    def T_hom(self) -> GroupHom:
        return self._T_data()[2]

    @property
    def T_rep(self) -> PermGroup:
        return self.T_hom.image

    @property
    def T_socle_image(self) -> PermGroup:
        return self._T_data()[3]

    @property
    def out_order(self) -> int:
        """|T/S|, the number of outer automorphism classes induced on S_1."""
        return self.T_rep.order // self.T_socle_image.order

    def is_inner(self, t: Permutation) -> bool:
        """Whether an element of T_rep induces an inner automorphism of S_1."""
        return self.T_socle_image.contains(t)

    @cached_property
    def _projectors(self) -> list[tuple[GroupHom, GroupHom]]:
        return [_projector(self.N, S) for S in self.factors]


def decompose(G: PermGroup | None, N: PermGroup) -> SocleDecomposition:
    if G is not None and not is_normal(G, N):
        raise NotNormal("N is not normalized by G")
    factors = simple_factors(N)
    dec = SocleDecomposition(N, factors, G)
    if G is not None:
        images = []
        for g in G.generators:
            gi = ~g
            img = []
            for S in factors:
                reps = [gi * s * g for s in S.nontrivial_generators()]
                j = _factor_index(factors, reps[0])
                if j < 0 or not all(factors[j].contains(r) for r in reps[1:]):
                    raise NotNormal("G does not permute the simple factors of N")
                img.append(j)
            images.append(Permutation._raw(tuple(img)))
        dec.factor_action = GroupHom(G, len(factors), images, check=False)
        dec.transversal = _factor_transversal(G, dec.factor_action)
    return dec


def _factor_transversal(G: PermGroup, fa: GroupHom) -> list[Permutation | None]:
    """t_i in G with S_1^t_i = S_i along shortest generator words; None off the orbit of 1."""
    k = fa.codomain_degree
    trans: list[Permutation | None] = [None] * k
    trans[0] = G.identity()
    queue = [0]
    for i in queue:
        for g, img in zip(G.generators, fa.gen_images):
            j = img._p[i]
            if trans[j] is None:
                trans[j] = trans[i] * g
                queue.append(j)
    return trans


def is_minimal_normal(G: PermGroup, N: PermGroup) -> bool:
    if not is_normal(G, N) or not N.is_subgroup_of(G):
        raise NotNormal("N is not a normal subgroup of G")
    if N.is_trivial():
        return False
    try:
        dec = decompose(G, N)
    except NotSemisimple:
        return False
    if len(dec.factor_action.image.orbits()) != 1:
        return False
    s = dec.factors[0].nontrivial_generators()[0]
    return normal_closure(G, [s]).order == N.order


def _projector(N: PermGroup, S: PermGroup) -> tuple[GroupHom, GroupHom]:
    """Conjugation of N and of S on the S-classes of S's generators.

    The action of N has kernel C_N(S), and its restriction to S is faithful,
    so x in N projects to the element of S acting the same way.
    """
    mul, inv = _k.mul, _k.inv
    sconj = [(g._p, inv(g._p)) for g in S.generators]
    points: dict[tuple, int] = {}
    for s in S.nontrivial_generators():
        if s._p in points:
            continue
        points[s._p] = len(points)
        queue = [s._p]
        for y in queue:
            for g, gi in sconj:
                c = mul(mul(gi, y), g)
                if c not in points:
                    points[c] = len(points)
                    queue.append(c)
    elems = list(points)

    def action(gens):
        out = []
        for g in gens:
            gi = inv(g._p)
            out.append(Permutation._raw(tuple(points[mul(mul(gi, y), g._p)] for y in elems)))
        return out

    m = len(elems)
    return GroupHom(N, m, action(N.generators), check=False), GroupHom(S, m, action(S.generators), check=False)


def projection_onto_factor(dec: SocleDecomposition, x: Permutation, i: int) -> Permutation:
    """Component of x in the factor S_i (1-based i)."""
    if not dec.N.contains(x):
        raise NotInGroup(f"{x} is not in N")
    if not 1 <= i <= dec.k:
        raise IndexError(f"factor index {i} outside 1..{dec.k}")
    onN, onS = dec._projectors[i - 1]
    return onS.preimage(onN(x))


def is_subdirect(dec: SocleDecomposition, H: PermGroup) -> bool:
    for h in H.generators:
        if not dec.N.contains(h):
            raise NotInGroup(f"{h} is not in N")
    for i, S in enumerate(dec.factors, 1):
        proj = PermGroup(dec.N.degree, [projection_onto_factor(dec, h, i) for h in H.generators])
        if proj.order != S.order:
            return False
    return True


def _build_T(G: PermGroup, dec: SocleDecomposition):
    fa = dec.factor_action
    NS = fa.preimage_group(fa.image.stabilizer(1))
    S1 = dec.factors[0]
    CS = centralizer_of_classes(NS, S1.nontrivial_generators())
    target = NS.order // CS.order
    mul, inv = _k.mul, _k.inv
    elems = [e for e in S1._raw_elements() if not _k.is_identity(e)]
    index = {e: i for i, e in enumerate(elems)}
    conj = [(g._p, inv(g._p)) for g in NS.generators]
    # N_G(S_1)-classes in S_1 \ {1}
    seen: set[int] = set()
    orbits: list[list[int]] = []
    for i, e in enumerate(elems):
        if i in seen:
            continue
        orb = [i]
        seen.add(i)
        for j in orb:
            y = elems[j]
            for g, gi in conj:
                c = index[mul(mul(gi, y), g)]
                if c not in seen:
                    seen.add(c)
                    orb.append(c)
        orbits.append(sorted(orb))
    orbits.sort(key=lambda o: (len(o), o[0]))

    def hom_on(points: list[int], group: PermGroup) -> GroupHom:
        pos = {p: i for i, p in enumerate(points)}
        imgs = []
        for g in group.generators:
            gi = inv(g._p)
            imgs.append(Permutation._raw(tuple(pos[index[mul(mul(gi, elems[p]), g._p)]] for p in points)))
        return GroupHom(group, len(points), imgs, check=False)

    chosen: list[int] = []
    current = 1
    for orb in orbits:
        trial = chosen + orb
        order = hom_on(trial, NS).image.order
        if order > current:
            chosen, current = trial, order
        if current == target:
            break
    if current != target:
        raise LemmaViolated("conjugation on S_1 does not realize N_G(S_1)/C_G(S_1)")
    T_hom = hom_on(chosen, NS)
    socle_image = T_hom.image_of_group(S1)
    return NS, CS, T_hom, socle_image


def induced_T(G: PermGroup, dec: SocleDecomposition) -> PermGroup:
    """A faithful permutation group isomorphic to N_G(S_1)/C_G(S_1)."""
    if dec.G is None or dec.G is not G:
        dec = decompose(G, dec.N)
    return dec.T_rep


def check_ntproj(K: PermGroup, N: PermGroup, L: PermGroup, G: PermGroup | None = None) -> set[int]:
    """Factors of N onto which L projects nontrivially, each verified to lie in L.

    Hypotheses: K and N normal (in G when given) with K n N = 1, L normal
    and L <= KN.
    """
    if G is not None:
        for X, name in ((K, "K"), (N, "N"), (L, "L")):
            if not X.is_subgroup_of(G) or not is_normal(G, X):
                raise PreconditionFailed(f"{name} is not a normal subgroup of G")
    KN = PermGroup(N.degree, list(K.generators) + list(N.generators))
    if KN.order != K.order * N.order:
        raise PreconditionFailed("K and N intersect nontrivially")
    mul = _k.mul
    for a in K.generators:
        for b in N.generators:
            if mul(a._p, b._p) != mul(b._p, a._p):
                raise PreconditionFailed("K does not centralize N")
    for x in L.generators:
        if not KN.contains(x):
            raise PreconditionFailed("L is not contained in KN")
    dec = decompose(None, N)
    # conjugation on N sees only the N-component of an element of KN = K x N
    seeds = [s for S in dec.factors for s in S.nontrivial_generators()]
    onKN, onN = _projector_pair(KN, N, seeds)
    hit: set[int] = set()
    for x in L.generators:
        n = onN.preimage(onKN(x))
        for i in range(1, dec.k + 1):
            if not projection_onto_factor(dec, n, i).is_identity():
                hit.add(i)
    for i in sorted(hit):
        for s in dec.factors[i - 1].generators:
            if not L.contains(s):
                raise LemmaViolated(f"L projects onto factor {i} but does not contain it")
    return hit


def _projector_pair(A: PermGroup, N: PermGroup, seeds: list[Permutation]) -> tuple[GroupHom, GroupHom]:
    """Conjugation actions of A and N on the N-classes of ``seeds``."""
    mul, inv = _k.mul, _k.inv
    nconj = [(g._p, inv(g._p)) for g in N.generators]
    points: dict[tuple, int] = {}
    for s in seeds:
        if s._p in points:
            continue
        points[s._p] = len(points)
        queue = [s._p]
        for y in queue:
            for g, gi in nconj:
                c = mul(mul(gi, y), g)
                if c not in points:
                    points[c] = len(points)
                    queue.append(c)
    elems = list(points)

    def action(gens):
        out = []
        for g in gens:
            gi = inv(g._p)
            out.append(Permutation._raw(tuple(points[mul(mul(gi, y), g._p)] for y in elems)))
        return out

    m = len(elems)
    return GroupHom(A, m, action(A.generators), check=False), GroupHom(N, m, action(N.generators), check=False)
