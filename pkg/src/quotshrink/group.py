"""Permutation groups backed by a deterministic stabilizer chain.

The chain is built with the incremental Schreier-Sims algorithm. Base points
are the caller's prefix (if any) followed by the smallest point moved by the
first generator that fixes the base so far, so chains and everything derived
from them are reproducible.

Homomorphisms between permutation groups are handled with the usual trick of
the group of pairs ``(g, phi(g))`` acting on the disjoint union of the two
domains: with a base on the domain side it evaluates ``phi``; with a base on
the codomain side its deeper levels give the kernel.
"""

from __future__ import annotations

import random
from math import prod
from typing import Callable, Iterable, Iterator, Sequence

from ._backend import kernels as _k
from .errors import (
    DegreeMismatch,
    NotAHomomorphism,
    NotASubgroup,
    NotInGroup,
    NotInvariant,
    PointOutOfRange,
)
from .perm import Permutation, parse_cycles

__all__ = [
    "PermGroup",
    "GroupHom",
    "make_group",
    "contains",
    "orbit",
    "stabilizer",
    "coset_action",
    "normal_closure",
    "centralizer",
    "normalizer",
    "kernel_of",
    "is_normal",
    "restriction",
    "direct_sum",
    "core",
]


# ---------------------------------------------------------------------------
# stabilizer chain


class _Chain:
    """Mutable chain used while building; frozen inside a PermGroup."""

    __slots__ = ("n", "base", "gens", "trans", "itrans", "checked")

    def __init__(self, n: int):
        self.n = n
        self.base: list[int] = []
        self.gens: list[list[tuple]] = []
        self.trans: list[dict] = []
        self.itrans: list[dict] = []
        # per level: (orbit point, generator index) pairs already verified
        self.checked: list[set] = []

    def _add_level(self, b: int) -> None:
        ident = tuple(range(self.n))
        self.base.append(b)
        self.gens.append([])
        self.trans.append({b: ident})
        self.itrans.append({b: ident})
        self.checked.append(set())

    def _extend_orbit(self, i: int) -> None:
        trans, itrans, gens = self.trans[i], self.itrans[i], self.gens[i]
        queue = list(trans)
        mul, inv = _k.mul, _k.inv
        for x in queue:
            ux = trans[x]
            for g in gens:
                y = g[x]
                if y not in trans:
                    u = mul(ux, g)
                    trans[y] = u
                    itrans[y] = inv(u)
                    queue.append(y)

    def sift(self, g: tuple, start: int = 0):
        return _k.sift(g, self.base, self.itrans, start)

    def _first_moved(self, g: tuple) -> int:
        for i, x in enumerate(g):
            if i != x:
                return i
        raise AssertionError("identity has no moved point")

    def _insert(self, h: tuple, start: int) -> int:
        """Put a non-identity residue into levels start..; return deepest level."""
        j = start
        while j < len(self.base) and h[self.base[j]] == self.base[j]:
            j += 1
        if j == len(self.base):
            self._add_level(self._first_moved(h))
        for level in range(start, j + 1):
            self.gens[level].append(h)
            self._extend_orbit(level)
        return j

    def complete(self, start_level: int) -> None:
        """Holt's SCHREIERSIMS loop, from ``start_level`` downwards."""
        mul, is_id = _k.mul, _k.is_identity
        i = start_level
        while i >= 0:
            restart = False
            trans, itrans, gens, checked = self.trans[i], self.itrans[i], self.gens[i], self.checked[i]
            for beta in list(trans):
                u = trans[beta]
                for si, s in enumerate(gens):
                    key = (beta, si)
                    if key in checked:
                        continue
                    h = mul(mul(u, s), itrans[s[beta]])
                    if not is_id(h):
                        res, _lvl = self.sift(h, i + 1)
                        if not is_id(res):
                            i = self._insert(res, i + 1)
                            restart = True
                            break
                    checked.add(key)
                if restart:
                    break
            if not restart:
                i -= 1

    def add_generator(self, g: tuple) -> bool:
        """Add ``g``; return False if it was already a member."""
        res, _ = self.sift(g)
        if _k.is_identity(res):
            return False
        # g itself goes in at level 0 so level-0 generators generate the group
        if not self.base:
            self._add_level(self._first_moved(g))
        j = 0
        while j < len(self.base) and g[self.base[j]] == self.base[j]:
            j += 1
        if j == len(self.base):
            self._add_level(self._first_moved(g))
        for level in range(0, j + 1):
            self.gens[level].append(g)
            self._extend_orbit(level)
        self.complete(j)
        return True

    @classmethod
    def build(cls, n: int, gens: Iterable[tuple], base: Sequence[int] = ()) -> "_Chain":
        ch = cls(n)
        gens = [g for g in dict.fromkeys(gens) if not _k.is_identity(g)]
        for b in base:
            ch._add_level(b)
        for g in gens:
            if all(g[b] == b for b in ch.base):
                ch._add_level(ch._first_moved(g))
        for i, b in enumerate(ch.base):
            prefix = ch.base[:i]
            ch.gens[i] = [g for g in gens if all(g[p] == p for p in prefix)]
            ch._extend_orbit(i)
        if ch.base:
            ch.complete(len(ch.base) - 1)
        return ch

    def order(self) -> int:
        return prod(len(t) for t in self.trans)

    def tail(self, start: int) -> "_Chain":
        """The chain of the stabilizer of base[:start] (shares dicts)."""
        ch = _Chain(self.n)
        ch.base = self.base[start:]
        ch.gens = self.gens[start:]
        ch.trans = self.trans[start:]
        ch.itrans = self.itrans[start:]
        ch.checked = self.checked[start:]
        return ch


# ---------------------------------------------------------------------------
# groups


def _as_perm(x, degree: int) -> Permutation:
    if isinstance(x, Permutation):
        return x
    if isinstance(x, str):
        return parse_cycles(x, degree)
    return Permutation(x)


class PermGroup:
    """A subgroup of Sym(degree) given by generators.

    ``generators`` are kept exactly as given (order matters to GroupHom).
    ``base`` optionally fixes a prefix of the chain's base (1-based points).
    """

    def __init__(self, degree: int, generators: Iterable = (), *, base: Sequence[int] = (), _chain: _Chain | None = None):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        gens = tuple(_as_perm(g, degree) for g in generators)
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a group of degree {degree}")
        for b in base:
            if not 1 <= b <= degree:
                raise PointOutOfRange(f"base point {b} outside 1..{degree}")
        self.degree = degree
        self.generators = gens
        if _chain is None:
            _chain = _Chain.build(degree, [g._p for g in gens], [b - 1 for b in base])
        self._chain = _chain
        self._order = _chain.order()

    @classmethod
    def _from_chain(cls, degree: int, chain: _Chain) -> "PermGroup":
        gens = [Permutation._raw(g) for g in chain.gens[0]] if chain.base else []
        return cls(degree, gens, _chain=chain)

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, ())

    # -- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    def __len__(self) -> int:
        return self._order

    @property
    def base(self) -> list[int]:
        return [b + 1 for b in self._chain.base]

    def strong_generators(self) -> list[Permutation]:
        seen = dict.fromkeys(g for level in self._chain.gens for g in level)
        return [Permutation._raw(g) for g in seen]

    def is_trivial(self) -> bool:
        return self._order == 1

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def nontrivial_generators(self) -> list[Permutation]:
        return [g for g in self.generators if not g.is_identity()]

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"permutation of degree {p.degree} tested against degree {self.degree}")
        res, _ = self._chain.sift(p._p)
        return _k.is_identity(res)

    __contains__ = contains

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if other.degree != self.degree:
            raise DegreeMismatch("groups of different degree")
        return self._order <= other._order and other._order % self._order == 0 and all(
            other.contains(g) for g in self.generators
        )

    def __le__(self, other: "PermGroup") -> bool:
        return self.is_subgroup_of(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self._order == other._order and self.is_subgroup_of(other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self._order}, gens={[str(g) for g in self.generators]})"

    def is_abelian(self) -> bool:
        gens = [g._p for g in self.generators]
        mul = _k.mul
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    # -- orbits ------------------------------------------------------------

    def _check_point(self, x: int) -> None:
        if not 1 <= x <= self.degree:
            raise PointOutOfRange(f"point {x} outside 1..{self.degree}")

    def orbit(self, x: int) -> list[int]:
        self._check_point(x)
        gens = [g._p for g in self.generators]
        return sorted(y + 1 for y in _k.orbit(gens, x - 1))

    def orbits(self) -> list[list[int]]:
        gens = [g._p for g in self.generators]
        seen = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = _k.orbit(gens, x)
                seen.update(orb)
                out.append(sorted(y + 1 for y in orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    def moved_points(self) -> list[int]:
        pts = set()
        for g in self.generators:
            pts.update(g.support())
        return sorted(pts)

    def stabilizer(self, x: int) -> "PermGroup":
        self._check_point(x)
        ch = self._chain
        if not ch.base or ch.base[0] != x - 1:
            ch = _Chain.build(self.degree, [g._p for g in self.generators], [x - 1])
        return PermGroup._from_chain(self.degree, ch.tail(1))

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        for x in points:
            self._check_point(x)
        ch = _Chain.build(self.degree, [g._p for g in self.generators], [x - 1 for x in points])
        return PermGroup._from_chain(self.degree, ch.tail(len(points)))

    def with_base(self, prefix: Sequence[int]) -> "PermGroup":
        """Same group and generators, chain rebuilt over the given base prefix."""
        return PermGroup(self.degree, self.generators, base=prefix)

    # -- elements ----------------------------------------------------------

    def elements(self) -> Iterator[Permutation]:
        """All elements in chain order (lexicographic in transversal keys)."""
        for p in self._raw_elements():
            yield Permutation._raw(p)

    def _raw_elements(self) -> Iterator[tuple]:
        ch = self._chain
        m = len(ch.base)
        ident = tuple(range(self.degree))
        if m == 0:
            yield ident
            return
        keys = [sorted(t) for t in ch.trans]
        mul = _k.mul

        # g = u_{m-1} ... u_1 u_0, u_0 applied last; level-0 keys vary slowest
        def outer(level: int, prefix: tuple):
            if level == m:
                yield prefix
                return
            t = ch.trans[level]
            for y in keys[level]:
                yield from outer(level + 1, mul(t[y], prefix))

        yield from outer(0, ident)

    def random_element(self, rng: random.Random) -> Permutation:
        g = tuple(range(self.degree))
        for t in self._chain.trans:
            keys = sorted(t)
            g = _k.mul(t[keys[rng.randrange(len(keys))]], g)
        return Permutation._raw(g)

    def conjugate(self, g: Permutation) -> "PermGroup":
        """H^g = {g^-1 h g}."""
        gi = ~g
        return PermGroup(self.degree, [gi * h * g for h in self.generators])

    def sift(self, p: Permutation) -> tuple[Permutation, int]:
        res, lvl = self._chain.sift(p._p)
        return Permutation._raw(res), lvl


# ---------------------------------------------------------------------------
# homomorphisms


def _pair(g: tuple, h: tuple, n: int) -> tuple:
    return g + tuple(n + x for x in h)


class GroupHom:
    """Homomorphism from ``domain`` given by images of its generators.

    Well-definedness is checked when the map is first evaluated or its kernel
    is requested (``NotAHomomorphism`` otherwise).
    """

    def __init__(self, domain: PermGroup, codomain_degree: int, gen_images: Sequence, *, check: bool = True):
        imgs = tuple(_as_perm(x, codomain_degree) for x in gen_images)
        if len(imgs) != len(domain.generators):
            raise ValueError(f"{len(imgs)} images for {len(domain.generators)} generators")
        for x in imgs:
            if x.degree != codomain_degree:
                raise DegreeMismatch(f"image of degree {x.degree}, codomain degree {codomain_degree}")
        self.domain = domain
        self.codomain_degree = codomain_degree
        self.gen_images = imgs
        self._image: PermGroup | None = None
        self._kernel: PermGroup | None = None
        self._eval_chain: _Chain | None = None
        self._kern_chain: _Chain | None = None
        self._nbase: int | None = None
        self._mbase: int | None = None
        if check:
            self._build_eval()

    def __repr__(self) -> str:
        return (
            f"GroupHom(domain order {self.domain.order}, degree {self.domain.degree} "
            f"-> Sym({self.codomain_degree}))"
        )

    def _pairs(self) -> list[tuple]:
        n = self.domain.degree
        return [_pair(g._p, h._p, n) for g, h in zip(self.domain.generators, self.gen_images)]

    def _build_eval(self) -> _Chain:
        if self._eval_chain is None:
            n = self.domain.degree
            prefix = list(self.domain._chain.base)
            ch = _Chain.build(n + self.codomain_degree, self._pairs(), prefix)
            if len(ch.base) > len(prefix) or ch.order() != self.domain.order:
                raise NotAHomomorphism("generator images do not define a homomorphism")
            self._eval_chain = ch
            self._nbase = len(prefix)
        return self._eval_chain

    def _build_kernel_chain(self) -> _Chain:
        if self._kern_chain is None:
            n = self.domain.degree
            prefix = [n + b for b in self.image._chain.base]
            ch = _Chain.build(n + self.codomain_degree, self._pairs(), prefix)
            self._kern_chain = ch
            self._mbase = len(prefix)
        return self._kern_chain

    @property
    def image(self) -> PermGroup:
        if self._image is None:
            self._image = PermGroup(self.codomain_degree, self.gen_images)
        return self._image

    @property
    def kernel(self) -> PermGroup:
        if self._kernel is None:
            self._build_eval()
            ch = self._build_kernel_chain()
            n = self.domain.degree
            tail = ch.tail(self._mbase)
            gens = dict.fromkeys(g[:n] for level in tail.gens for g in level)
            self._kernel = PermGroup(n, [Permutation._raw(g) for g in gens])
        return self._kernel

    def __call__(self, g: Permutation) -> Permutation:
        ch = self._build_eval()
        n = self.domain.degree
        if g.degree != n:
            raise DegreeMismatch(f"element of degree {g.degree}, domain degree {n}")
        h = g._p
        w = tuple(range(self.codomain_degree))
        mul = _k.mul
        for i in range(self._nbase):
            y = h[ch.base[i]]
            t = ch.itrans[i].get(y)
            if t is None:
                raise NotInGroup(f"{g} is not in the domain")
            h = mul(h, t[:n])
            w = mul(tuple(x - n for x in ch.trans[i][y][n:]), w)
        if not _k.is_identity(h):
            raise NotInGroup(f"{g} is not in the domain")
        return Permutation._raw(w)

    def preimage(self, y: Permutation) -> Permutation:
        """Some element of the domain mapping to ``y``."""
        self._build_eval()
        ch = self._build_kernel_chain()
        n, m = self.domain.degree, self.codomain_degree
        if y.degree != m:
            raise DegreeMismatch(f"element of degree {y.degree}, codomain degree {m}")
        h = y._p
        w = tuple(range(n))
        mul = _k.mul
        for i in range(self._mbase):
            z = h[ch.base[i] - n] + n
            t = ch.itrans[i].get(z)
            if t is None:
                raise NotInGroup(f"{y} is not in the image")
            h = mul(h, tuple(x - n for x in t[n:]))
            w = mul(ch.trans[i][z][:n], w)
        if not _k.is_identity(h):
            raise NotInGroup(f"{y} is not in the image")
        return Permutation._raw(w)

    def preimage_group(self, H: PermGroup) -> PermGroup:
        gens = list(self.kernel.generators) + [self.preimage(h) for h in H.generators]
        return PermGroup(self.domain.degree, gens)

    def image_of_group(self, H: PermGroup) -> PermGroup:
        return PermGroup(self.codomain_degree, [self(h) for h in H.generators])

    def compose(self, other: "GroupHom") -> "GroupHom":
        """``self`` followed by ``other``; other's domain must contain self's image."""
        return GroupHom(self.domain, other.codomain_degree, [other(x) for x in self.gen_images])

    def restrict(self, H: PermGroup) -> "GroupHom":
        return GroupHom(H, self.codomain_degree, [self(h) for h in H.generators])

    def is_injective(self) -> bool:
        return self.kernel.is_trivial()


# ---------------------------------------------------------------------------
# module-level operations


def make_group(degree: int, generators: Iterable = ()) -> PermGroup:
    return PermGroup(degree, generators)


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def orbit(G: PermGroup, x: int) -> list[int]:
    return G.orbit(x)


def stabilizer(G: PermGroup, x: int) -> PermGroup:
    return G.stabilizer(x)


def kernel_of(hom: GroupHom) -> PermGroup:
    return hom.kernel


def _check_same_degree(G: PermGroup, H: PermGroup) -> None:
    if G.degree != H.degree:
        raise DegreeMismatch(f"groups of degree {G.degree} and {H.degree}")


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    """True iff G normalizes N (N need not lie in G)."""
    _check_same_degree(G, N)
    for g in G.generators:
        gi = ~g
        for x in N.generators:
            if not N.contains(gi * x * g):
                return False
    return True


def _check_subgroup(G: PermGroup, H: PermGroup) -> None:
    _check_same_degree(G, H)
    for h in H.generators:
        if not G.contains(h):
            raise NotASubgroup(f"{h} lies in H but not in G")


def _coset_canonizer(H: PermGroup) -> Callable[[tuple], tuple]:
    """Map g to the element of Hg with lexicographically least base images."""
    ch = H._chain
    levels = [(ch.trans[i], sorted(ch.trans[i])) for i in range(len(ch.base))]
    mul = _k.mul

    def canon(g: tuple) -> tuple:
        c = g
        for trans, keys in levels:
            best = min(keys, key=c.__getitem__)
            c = mul(trans[best], c)
        return c

    return canon


def coset_action(G: PermGroup, H: PermGroup) -> GroupHom:
    """Action of G on the right cosets of H; coset 1 is H itself."""
    _check_subgroup(G, H)
    canon = _coset_canonizer(H)
    gens = [g._p for g in G.generators]
    start = canon(tuple(range(G.degree)))
    index = {start: 0}
    reps = [start]
    images: list[list[int]] = [[] for _ in gens]
    mul = _k.mul
    for rep in reps:
        for gi, g in enumerate(gens):
            c = canon(mul(rep, g))
            j = index.get(c)
            if j is None:
                j = len(reps)
                index[c] = j
                reps.append(c)
            images[gi].append(j)
    m = len(reps)
    if m * H.order != G.order:
        raise NotASubgroup("coset enumeration disagrees with |G:H|")
    return GroupHom(G, m, [Permutation._raw(tuple(im)) for im in images], check=False)


def core(G: PermGroup, H: PermGroup) -> PermGroup:
    """Largest normal subgroup of G inside H."""
    return coset_action(G, H).kernel


def normal_closure(G: PermGroup, seeds: Iterable) -> PermGroup:
    seeds = [_as_perm(s, G.degree) for s in seeds]
    for s in seeds:
        if s.degree != G.degree:
            raise DegreeMismatch("seed of wrong degree")
        if not G.contains(s):
            raise NotInGroup(f"seed {s} is not in G")
    mul, inv = _k.mul, _k.inv
    ch: _Chain | None = None
    gens: list[tuple] = []

    def add(p: tuple) -> bool:
        nonlocal ch
        if _k.is_identity(p):
            return False
        if ch is None:
            ch = _Chain.build(G.degree, [p])
            return True
        return ch.add_generator(p)

    for s in seeds:
        if add(s._p):
            gens.append(s._p)
    queue = list(gens)
    conj = [(g._p, inv(g._p)) for g in G.generators]
    for x in queue:
        for g, gi in conj:
            c = mul(mul(gi, x), g)
            if add(c):
                gens.append(c)
                queue.append(c)
    return PermGroup(G.degree, [Permutation._raw(g) for g in gens], _chain=ch)


def restriction(G: PermGroup, points: Sequence[int]) -> GroupHom:
    """Restriction of G to an invariant point set, relabelled 1..len(points) in sorted order."""
    pts = sorted(points)
    pos = {p - 1: i for i, p in enumerate(pts)}
    images = []
    for g in G.generators:
        try:
            images.append(Permutation._raw(tuple(pos[g._p[p - 1]] for p in pts)))
        except KeyError:
            raise NotInvariant(f"{g} does not preserve the point set") from None
    return GroupHom(G, len(pts), images, check=False)


def direct_sum(homs: Sequence[GroupHom]) -> GroupHom:
    """Homs with a common domain, acting side by side on disjoint point sets."""
    if not homs:
        raise ValueError("need at least one homomorphism")
    G = homs[0].domain
    total = sum(h.codomain_degree for h in homs)
    images = []
    for gi in range(len(G.generators)):
        img: list[int] = []
        off = 0
        for h in homs:
            img.extend(off + x for x in h.gen_images[gi]._p)
            off += h.codomain_degree
        images.append(Permutation._raw(tuple(img)))
    return GroupHom(G, total, images, check=False)


# ---------------------------------------------------------------------------
# backtrack search


def subgroup_search(
    G: PermGroup,
    prop: Callable[[tuple], bool],
    prune: Callable[[list[tuple[int, int]]], bool] | None = None,
    known: PermGroup | None = None,
) -> PermGroup:
    """Subgroup {g in G : prop(g)}; ``prop`` must define a subgroup.

    Levels are processed bottom-up; at each level only base images outside
    the orbit of the part of the answer found so far are searched.
    ``prune(pairs)`` receives (base point, image) pairs, 0-based, and returns
    False to cut the branch. ``known`` is a subgroup already known to satisfy
    ``prop``.
    """
    ch = G._chain
    m = len(ch.base)
    n = G.degree
    mul = _k.mul
    found: list[tuple] = []
    if known is not None:
        kch = _Chain.build(n, [g._p for g in known.generators], ch.base)
        found.extend(dict.fromkeys(g for level in kch.gens for g in level))
    keys = [sorted(t) for t in ch.trans]

    def subtree(level: int, gamma: int):
        pairs = [(ch.base[level], gamma)]
        if prune is not None and not prune(pairs):
            return None

        def rec(d: int, c: tuple):
            if d == m:
                return c if prop(c) else None
            t = ch.trans[d]
            for delta in keys[d]:
                pairs.append((ch.base[d], c[delta]))
                if prune is None or prune(pairs):
                    r = rec(d + 1, mul(t[delta], c))
                    if r is not None:
                        pairs.pop()
                        return r
                pairs.pop()
            return None

        return rec(level + 1, ch.trans[level][gamma])

    for level in reversed(range(m)):
        prefix = ch.base[:level]
        beta = ch.base[level]

        def level_orbit():
            gens = [g for g in found if all(g[p] == p for p in prefix)]
            return set(_k.orbit(gens, beta)) if gens else {beta}

        orb = level_orbit()
        for gamma in keys[level]:
            if gamma in orb:
                continue
            g = subtree(level, gamma)
            if g is not None:
                found.append(g)
                orb = level_orbit()
    return PermGroup(n, [Permutation._raw(g) for g in found])


def _propagation_prune(gens: list[tuple]):
    """Pruner for elements commuting with every element of ``gens``."""

    def prune(pairs):
        fwd: dict[int, int] = {}
        back: dict[int, int] = {}
        queue = []
        for x, y in pairs:
            if fwd.get(x, y) != y or back.get(y, x) != x:
                return False
            if x not in fwd:
                fwd[x] = y
                back[y] = x
                queue.append(x)
        for x in queue:
            y = fwd[x]
            for g in gens:
                a, b = g[x], g[y]
                if a in fwd:
                    if fwd[a] != b:
                        return False
                elif b in back:
                    return False
                else:
                    fwd[a] = b
                    back[b] = a
                    queue.append(a)
        return True

    return prune


def centralizer(G: PermGroup, N: PermGroup) -> PermGroup:
    """C_G(N) by backtrack search with orbit propagation."""
    _check_same_degree(G, N)
    gens = [g._p for g in N.generators if not g.is_identity()]
    if not gens:
        return G
    mul = _k.mul

    def prop(c):
        return all(mul(c, x) == mul(x, c) for x in gens)

    known = None
    if all(N.contains(g) for g in G.generators) and N.is_abelian():
        known = G
    return subgroup_search(G, prop, _propagation_prune(gens), known=known)


def centralizer_of_classes(G: PermGroup, seeds: Sequence[Permutation]) -> PermGroup:
    """C_G(<seeds^G>) as the kernel of G conjugating the classes of ``seeds``.

    Cheap when the G-classes of the seeds are small.
    """
    mul, inv = _k.mul, _k.inv
    conj = [(g._p, inv(g._p)) for g in G.generators]
    points: dict[tuple, int] = {}
    for s in seeds:
        if s._p in points or s.is_identity():
            continue
        points[s._p] = len(points)
        queue = [s._p]
        for x in queue:
            for g, gi in conj:
                c = mul(mul(gi, x), g)
                if c not in points:
                    points[c] = len(points)
                    queue.append(c)
    if not points:
        return G
    elems = list(points)
    images = []
    for g, gi in conj:
        images.append(Permutation._raw(tuple(points[mul(mul(gi, x), g)] for x in elems)))
    return GroupHom(G, len(elems), images, check=False).kernel


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """N_G(H) by backtrack search, pruning on the orbit structure of H."""
    _check_same_degree(G, H)
    if H.is_trivial():
        return G
    hgens = [h._p for h in H.generators]
    orbit_id = [0] * G.degree
    orbit_len = [0] * G.degree
    for i, orb in enumerate(H.orbits()):
        for x in orb:
            orbit_id[x - 1] = i
            orbit_len[x - 1] = len(orb)
    mul, inv = _k.mul, _k.inv
    hch = H._chain

    def prop(c):
        ci = inv(c)
        for h in hgens:
            res, _ = hch.sift(mul(mul(ci, h), c))
            if not _k.is_identity(res):
                return False
        return True

    def prune(pairs):
        link: dict[int, int] = {}
        for x, y in pairs:
            if orbit_len[x] != orbit_len[y]:
                return False
            a, b = orbit_id[x], orbit_id[y]
            if link.setdefault(a, b) != b:
                return False
        return len(set(link.values())) == len(link)

    known = H if H.is_subgroup_of(G) else None
    return subgroup_search(G, prop, prune, known=known)
