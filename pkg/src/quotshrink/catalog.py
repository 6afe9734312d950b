"""Constructors for standard permutation groups used in tests and examples."""

from __future__ import annotations

from functools import cached_property
from itertools import product

from .group import PermGroup, coset_action
from .perm import Permutation

__all__ = [
    "symmetric",
    "alternating",
    "cyclic",
    "dihedral",
    "klein_four",
    "quaternion",
    "direct_product",
    "regular",
    "GF",
    "psl2",
    "pgl2",
    "psigmal2",
    "pgammal2",
    "diagonal_action",
    "diagonal_subgroup",
]


def _perm(images0: list[int]) -> Permutation:
    return Permutation._raw(tuple(images0))


def _cycle(n: int, pts: list[int]) -> Permutation:
    img = list(range(n))
    for a, b in zip(pts, pts[1:] + pts[:1]):
        img[a] = b
    return _perm(img)


def symmetric(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, [])
    if n == 2:
        return PermGroup(2, [_cycle(2, [0, 1])])
    return PermGroup(n, [_cycle(n, list(range(n))), _cycle(n, [0, 1])])


def alternating(n: int) -> PermGroup:
    """Alt(n) = <(1 2 3), (1 2 ... n)> for odd n, <(1 2 3), (2 3 ... n)> for even n."""
    if n < 3:
        return PermGroup(n, [])
    three = _cycle(n, [0, 1, 2])
    if n == 3:
        return PermGroup(3, [three])
    long = _cycle(n, list(range(n))) if n % 2 else _cycle(n, list(range(1, n)))
    return PermGroup(n, [long, three])


def cyclic(n: int) -> PermGroup:
    """C_n acting regularly on n points (C_1 on one point)."""
    if n == 1:
        return PermGroup(1, [])
    return PermGroup(n, [_cycle(n, list(range(n)))])


def dihedral(n: int) -> PermGroup:
    """Symmetries of an n-gon, order 2n, on n points (n >= 3)."""
    refl = _perm([(-i) % n for i in range(n)])
    return PermGroup(n, [_cycle(n, list(range(n))), refl])


def klein_four() -> PermGroup:
    return PermGroup(4, ["(1 2)(3 4)", "(1 3)(2 4)"])


def quaternion() -> PermGroup:
    """Q8 in its regular representation on 8 points."""
    return PermGroup(8, ["(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"])


def direct_product(*groups: PermGroup) -> PermGroup:
    """Groups acting side by side on consecutive point blocks."""
    total = sum(G.degree for G in groups)
    gens = []
    off = 0
    for G in groups:
        for g in G.generators:
            img = list(range(total))
            for i, x in enumerate(g._p):
                img[off + i] = off + x
            gens.append(_perm(img))
        off += G.degree
    return PermGroup(total, gens)


def regular(G: PermGroup) -> PermGroup:
    """Right regular representation of G (degree |G|)."""
    return coset_action(G, PermGroup.trivial(G.degree)).image


# ---------------------------------------------------------------------------
# finite fields and groups on the projective line


class GF:
    """The field with p**e elements; elements are ints 0..q-1 (base-p digits)."""

    def __init__(self, p: int, e: int = 1):
        self.p, self.e, self.q = p, e, p**e
        self.modulus = self._irreducible() if e > 1 else None

    def _irreducible(self) -> tuple[int, ...]:
        p, e = self.p, self.e
        for coeffs in product(range(p), repeat=e):
            poly = list(coeffs) + [1]  # monic, low degree first
            if all(self._peval(poly, x) != 0 for x in range(p)) and (e <= 3 or self._no_quadratic_factor(poly)):
                return tuple(poly)
        raise ValueError("no irreducible polynomial found")

    def _peval(self, poly, x) -> int:
        return sum(c * x**i for i, c in enumerate(poly)) % self.p

    def _no_quadratic_factor(self, poly) -> bool:  # pragma: no cover - only e >= 4
        raise NotImplementedError("fields of degree above 3 are not needed here")

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, d) -> int:
        return sum(c * self.p**i for i, c in enumerate(d))

    def add(self, a: int, b: int) -> int:
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def _mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        x, y = self._digits(a), self._digits(b)
        prod_ = [0] * (2 * self.e - 1)
        for i, c in enumerate(x):
            for j, d in enumerate(y):
                prod_[i + j] = (prod_[i + j] + c * d) % self.p
        mod = self.modulus
        for k in range(len(prod_) - 1, self.e - 1, -1):
            c = prod_[k]
            if c:
                for i in range(self.e + 1):
                    prod_[k - self.e + i] = (prod_[k - self.e + i] - c * mod[i]) % self.p
        return self._undigits(prod_[: self.e])

    @cached_property
    def _mul_table(self) -> list[list[int]]:
        return [[self._mul(a, b) for b in range(self.q)] for a in range(self.q)]

    def mul(self, a: int, b: int) -> int:
        return self._mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        row = self._mul_table[a]
        return row.index(1)

    def power(self, a: int, k: int) -> int:
        r = 1
        for _ in range(k):
            r = self.mul(r, a)
        return r

    @cached_property
    def primitive(self) -> int:
        for a in range(2, self.q) if self.q > 2 else [1]:
            x, order = a, 1
            while x != 1:
                x = self.mul(x, a)
                order += 1
            if order == self.q - 1:
                return a
        return 1

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)


def _projective_map(F: GF, f) -> Permutation:
    """Permutation of the projective line F u {inf}; inf is the last point."""
    inf = F.q
    return _perm([f(x) for x in range(F.q)] + [f(inf)])


def _mobius(F: GF, a: int, b: int, c: int, d: int):
    inf = F.q

    def f(x):
        if x == inf:
            return inf if c == 0 else F.mul(a, F.inv(c))
        num = F.add(F.mul(a, x), b)
        den = F.add(F.mul(c, x), d)
        if den == 0:
            return inf
        return F.mul(num, F.inv(den))

    return f


def _line_generators(F: GF, *, scale: int) -> list[Permutation]:
    one = 1
    t = _projective_map(F, _mobius(F, one, one, 0, one))
    m = _projective_map(F, _mobius(F, scale, 0, 0, one))
    s = _projective_map(F, _mobius(F, 0, F.neg(one), one, 0))
    return [t, m, s]


def _field(q: int) -> GF:
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        e, r = 0, q
        while r % p == 0:
            r //= p
            e += 1
        if r == 1 and e:
            return GF(p, e)
    raise ValueError(f"{q} is not a small prime power")


def psl2(q: int) -> PermGroup:
    """PSL(2,q) on the q+1 points of the projective line."""
    F = _field(q)
    w = F.primitive
    return PermGroup(q + 1, _line_generators(F, scale=F.mul(w, w)))


def pgl2(q: int) -> PermGroup:
    F = _field(q)
    return PermGroup(q + 1, _line_generators(F, scale=F.primitive))


def _frobenius_perm(F: GF) -> Permutation:
    inf = F.q
    return _projective_map(F, lambda x: inf if x == inf else F.frobenius(x))


def psigmal2(q: int) -> PermGroup:
    F = _field(q)
    w = F.primitive
    return PermGroup(q + 1, _line_generators(F, scale=F.mul(w, w)) + [_frobenius_perm(F)])


def pgammal2(q: int) -> PermGroup:
    """PGammaL(2,q): PGL(2,q) extended by the Frobenius automorphism."""
    F = _field(q)
    return PermGroup(q + 1, _line_generators(F, scale=F.primitive) + [_frobenius_perm(F)])


def diagonal_action(S: PermGroup) -> tuple[PermGroup, PermGroup, PermGroup]:
    """S x S acting on the elements of S by x -> a^-1 x b.

    Returns (G, left factor, right factor) on |S| points.
    """
    elems = [e._p for e in S.elements()]
    index = {e: i for i, e in enumerate(elems)}
    from ._backend import kernels as _k

    def left(a):
        ai = _k.inv(a)
        return _perm([index[_k.mul(ai, x)] for x in elems])

    def right(b):
        return _perm([index[_k.mul(x, b)] for x in elems])

    lgens = [left(g._p) for g in S.generators]
    rgens = [right(g._p) for g in S.generators]
    n = len(elems)
    return PermGroup(n, lgens + rgens), PermGroup(n, lgens), PermGroup(n, rgens)


def diagonal_subgroup(S: PermGroup, c: Permutation) -> tuple[PermGroup, PermGroup]:
    """{(s, s^c)} inside S x S on 2*deg(S) points, for c normalizing S.

    Returns (diagonal, S x S).
    """
    SS = direct_product(S, S)
    d = S.degree
    gens = []
    for g in S.generators:
        h = (~c) * g * c
        gens.append(_perm(list(g._p) + [d + x for x in h._p]))
    return PermGroup(2 * d, gens), SS
