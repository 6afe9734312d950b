"""Wreath products in imprimitive and product action, and embeddings into them.

Product action follows the right-action rule

    phi^(f, v)(gamma) = phi(gamma^(v^-1)) ^ f(gamma^(v^-1))

for phi: Gamma -> Delta, f: Gamma -> U and v in V. Functions are encoded as
mixed-radix integers over (phi(1), ..., phi(k)), first coordinate most
significant, so point 1 is the constant function 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .blocks import BlockSystem, block_action
from .errors import BadPoints, DegenerateBase, LemmaViolated, NotASubgroup, NotInjective, NotInvariant, NotTransitive
from .group import GroupHom, PermGroup, coset_action, direct_sum, restriction
from .perm import Permutation

__all__ = [
    "WreathLabeling",
    "WreathProduct",
    "wreath_imprimitive",
    "wreath_product_action",
    "product_action_image",
    "cameron_embedding",
    "CameronData",
    "cameron_data",
    "subembed",
    "prodact_v_orbit",
]


@dataclass(frozen=True)
class WreathLabeling:
    """Bijection between wreath-product points and {1..degree}.

    imprimitive: (delta, gamma) -> (gamma - 1) * d + delta
    product:     phi -> 1 + sum((phi[i] - 1) * d**(k - 1 - i))
    """

    kind: str
    base_degree: int
    top_degree: int

    @property
    def degree(self) -> int:
        d, k = self.base_degree, self.top_degree
        return d * k if self.kind == "imprimitive" else d**k

    def point(self, *args) -> int:
        d, k = self.base_degree, self.top_degree
        if self.kind == "imprimitive":
            delta, gamma = args
            return (gamma - 1) * d + delta
        (phi,) = args
        if len(phi) != k:
            raise ValueError(f"function needs {k} values")
        x = 0
        for v in phi:
            x = x * d + (v - 1)
        return x + 1

    def decode(self, point: int):
        d, k = self.base_degree, self.top_degree
        if self.kind == "imprimitive":
            gamma, delta = divmod(point - 1, d)
            return delta + 1, gamma + 1
        x = point - 1
        vals = []
        for _ in range(k):
            x, r = divmod(x, d)
            vals.append(r + 1)
        return tuple(reversed(vals))


def product_action_image(phi: Sequence[int], f: Sequence[Permutation], v: Permutation) -> tuple[int, ...]:
    """phi^(f, v) as a tuple over Gamma = 1..k (all 1-based)."""
    vi = ~v
    out = []
    for gamma in range(1, len(phi) + 1):
        src = vi(gamma)
        out.append(f[src - 1](phi[src - 1]))
    return tuple(out)


@dataclass(frozen=True)
class WreathProduct:
    group: PermGroup
    base: PermGroup
    top: PermGroup
    labeling: WreathLabeling

    @property
    def kind(self) -> str:
        return self.labeling.kind

    def element(self, f: Sequence[Permutation], v: Permutation) -> Permutation:
        """The permutation induced by (f, v)."""
        lab = self.labeling
        k = lab.top_degree
        if len(f) != k:
            raise ValueError(f"f needs {k} components")
        img = [0] * lab.degree
        if lab.kind == "imprimitive":
            for x in range(1, lab.degree + 1):
                delta, gamma = lab.decode(x)
                img[x - 1] = lab.point(f[gamma - 1](delta), v(gamma))
        else:
            for x in range(1, lab.degree + 1):
                img[x - 1] = lab.point(product_action_image(lab.decode(x), f, v))
        return Permutation(img)

    def top_element(self, v: Permutation) -> Permutation:
        one = self.base.identity()
        return self.element([one] * self.labeling.top_degree, v)

    def base_element(self, f: Sequence[Permutation]) -> Permutation:
        return self.element(f, self.top.identity())


def _build(U: PermGroup, V: PermGroup, kind: str) -> WreathProduct:
    lab = WreathLabeling(kind, U.degree, V.degree)
    k = V.degree
    proto = WreathProduct(PermGroup.trivial(lab.degree), U, V, lab)
    one = U.identity()
    gens = []
    # U in one coordinate per V-orbit; conjugation by V fills in the rest
    for orb in V.orbits():
        c = orb[0]
        for u in U.generators:
            f = [one] * k
            f[c - 1] = u
            gens.append(proto.base_element(f))
    for v in V.generators:
        gens.append(proto.top_element(v))
    return WreathProduct(PermGroup(lab.degree, gens), U, V, lab)


def wreath_imprimitive(U: PermGroup, V: PermGroup) -> WreathProduct:
    """U wr V on Delta x Gamma, |U|^|Gamma| * |V| elements."""
    return _build(U, V, "imprimitive")


def wreath_product_action(U: PermGroup, V: PermGroup) -> WreathProduct:
    """U wr V on Fun(Gamma, Delta) in product action."""
    if U.degree == 1:
        raise DegenerateBase("product action needs |Delta| > 1")
    return _build(U, V, "product")


def prodact_v_orbit(W: WreathProduct, a: int, b: int) -> tuple[int, ...]:
    """Points phi_gamma (a at gamma, b elsewhere), listed in gamma order.

    The set is invariant under the top group V, which permutes it exactly as
    it permutes Gamma; both facts are checked generator by generator.
    """
    if W.kind != "product":
        raise ValueError("needs a product-action wreath product")
    lab = W.labeling
    d, k = lab.base_degree, lab.top_degree
    if a == b or not (1 <= a <= d and 1 <= b <= d):
        raise BadPoints(f"need distinct points of 1..{d}, got {a}, {b}")
    pts = tuple(lab.point(tuple(a if i == g else b for i in range(k))) for g in range(k))
    where = {p: i + 1 for i, p in enumerate(pts)}
    for v in W.top.generators:
        t = W.top_element(v)
        for gamma, p in enumerate(pts, 1):
            q = t(p)
            if where.get(q) != v(gamma):
                raise LemmaViolated(f"top element {v} does not act on the V-orbit like on Gamma")
    return pts


# ---------------------------------------------------------------------------
# embedding a transitive imprimitive group into the blocks wreath product


@dataclass(frozen=True)
class CameronData:
    blocks: BlockSystem
    transversal: tuple[Permutation, ...]  # t_i maps block 0 onto block i
    block_hom: GroupHom  # G -> G^Gamma
    stabilizer: PermGroup  # G_Delta, setwise stabilizer of block 0
    local: GroupHom  # G_Delta -> G_Delta^Delta on 1..|Delta|

    def local_component(self, g: Permutation, i: int) -> Permutation:
        """f(i) = t_i g t_j^-1 restricted to block 0, where block i goes to j."""
        j = self.blocks.block_of[g(self.blocks.blocks[i][0])]
        h = self.transversal[i] * g * ~self.transversal[j]
        return self.local(h)

    def label(self, x: int) -> int:
        """The wreath point (delta, block) for a point of the domain."""
        blocks = self.blocks
        i = blocks.block_of[x]
        y = (~self.transversal[i])(x)
        d = len(blocks.blocks[0])
        return i * d + blocks.blocks[0].index(y) + 1


def cameron_data(G: PermGroup, B: BlockSystem) -> CameronData:
    if not G.is_transitive():
        raise NotTransitive("the blocks embedding needs a transitive group")
    if not B.is_invariant(G):
        raise NotInvariant("block system is not G-invariant")
    bh = block_action(G, B)
    t = len(B.blocks)
    trans: list[Permutation | None] = [None] * t
    trans[0] = G.identity()
    queue = [0]
    # shortest words, generator order breaks ties
    for i in queue:
        for s in G.generators:
            j = B.block_of[s(B.blocks[i][0])]
            if trans[j] is None:
                trans[j] = trans[i] * s
                queue.append(j)
    stab = bh.preimage_group(bh.image.stabilizer(1))
    local = restriction(stab, B.blocks[0])
    return CameronData(B, tuple(trans), bh, stab, local)  # type: ignore[arg-type]


def cameron_embedding(G: PermGroup, B: BlockSystem) -> GroupHom:
    """Injective G -> G_Delta^Delta wr G^Gamma, as a relabelling of points.

    Point x of block i becomes (x^(t_i^-1), i); the resulting permutation of
    g is (f, g^Gamma) with f(i) = t_i g t_(i^g)^-1 restricted to block 0.
    """
    data = cameron_data(G, B)
    n = G.degree
    lab = [data.label(x) for x in range(1, n + 1)]
    images = []
    for g in G.generators:
        img = [0] * n
        for x in range(1, n + 1):
            img[lab[x - 1] - 1] = lab[g(x) - 1]
        images.append(Permutation(img))
    return GroupHom(G, n, images, check=False)


# ---------------------------------------------------------------------------


def subembed(G: PermGroup, H: PermGroup, hom_H: GroupHom) -> GroupHom:
    """Faithful G-action of degree |G:H| * n' from a faithful H-action of degree n'.

    One coset action of G per orbit of hom_H's image, on the cosets of the
    preimage in H of that orbit's point stabilizer.
    """
    for h in H.generators:
        if not G.contains(h):
            raise NotASubgroup(f"{h} lies in H but not in G")
    if hom_H.domain is not H and hom_H.domain != H:
        raise ValueError("hom_H must be defined on H")
    if not hom_H.is_injective():
        raise NotInjective("the action of H is not faithful")
    img = hom_H.image
    parts = []
    for orb in img.orbits():
        Hi = hom_H.preimage_group(img.stabilizer(orb[0]))
        parts.append(coset_action(G, Hi))
    return direct_sum(parts)
