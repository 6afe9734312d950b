"""Minimal faithful permutation degree P(Q) with a witnessing action.

A faithful action of Q is a sum of transitive actions on cosets of
subgroups H_1..H_t whose cores intersect trivially. Indices and cores are
constant on conjugacy classes of subgroups, so it suffices to know, for each
normal subgroup arising as a core, the smallest index of a subgroup with
that core, and then to choose a set of cores with trivial intersection and
least total index.

Subgroups are held as uint8 membership masks over an indexed element list.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._backend import kernels as _k
from .errors import OrderCapExceeded
from .group import GroupHom, PermGroup, coset_action, direct_sum
from .perm import Permutation

__all__ = [
    "DEFAULT_ORDER_CAP",
    "MinDegResult",
    "SubgroupLattice",
    "enumerate_subgroups",
    "min_faithful_rep",
    "min_degree",
    "verify_faithful",
    "order_cap",
]

DEFAULT_ORDER_CAP = 20000


def order_cap(cap: int | None = None) -> int:
    """The explicit cap, else QUOTSHRINK_ORDER_CAP, else the default."""
    if cap is not None:
        return cap
    env = os.environ.get("QUOTSHRINK_ORDER_CAP")
    return int(env) if env else DEFAULT_ORDER_CAP


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        return True  # n itself is prime
    while n % p == 0:
        n //= p
    return n == 1


class _Elements:
    """Indexed elements of Q with right-multiplication columns built on demand."""

    def __init__(self, Q: PermGroup):
        self.Q = Q
        self.elems = list(Q._raw_elements())
        self.index = {e: i for i, e in enumerate(self.elems)}
        self.identity = self.index[tuple(range(Q.degree))]
        self._cols: dict[int, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self.elems)

    def column(self, g: int) -> np.ndarray:
        """col[x] = index of x*g."""
        col = self._cols.get(g)
        if col is None:
            mul, index, ge = _k.mul, self.index, self.elems[g]
            col = np.fromiter((index[mul(x, ge)] for x in self.elems), dtype=np.int32, count=len(self.elems))
            self._cols[g] = col
        return col

    def conjugation(self, g: tuple) -> np.ndarray:
        """perm[x] = index of g^-1 x g."""
        mul, index, gi = _k.mul, self.index, _k.inv(g)
        return np.fromiter((index[mul(mul(gi, x), g)] for x in self.elems), dtype=np.intp, count=len(self.elems))

    def cyclic(self, g: int) -> list[int]:
        """Indices of the powers of element g, starting at g."""
        out = [g]
        col = self.column(g)
        x = g
        while True:
            x = int(col[x])
            if x == g:
                return out
            out.append(x)


@dataclass
class _Class:
    rep: np.ndarray  # mask of the representative
    gens: list[int]  # element indices generating the representative
    size: int  # subgroup order
    length: int  # number of conjugates
    core: np.ndarray


class SubgroupLattice:
    """Conjugacy classes of subgroups of Q, found by joining class
    representatives with cyclic subgroups of prime-power order."""

    def __init__(self, Q: PermGroup, cap: int | None = None):
        limit = order_cap(cap)
        if Q.order > limit:
            raise OrderCapExceeded(f"|Q| = {Q.order} exceeds the order cap {limit}")
        self.Q = Q
        self.E = E = _Elements(Q)
        self._conj = [E.conjugation(g._p) for g in Q.generators if not g.is_identity()]
        self.classes: list[_Class] = []
        self._seen: dict[bytes, int] = {}
        self._enumerate()

    def _mask(self, idx: Sequence[int]) -> np.ndarray:
        m = np.zeros(len(self.E), dtype=np.uint8)
        m[list(idx)] = 1
        return m

    def _register(self, mask: np.ndarray, gens: list[int]) -> bool:
        key = mask.tobytes()
        if key in self._seen:
            return False
        cid = len(self.classes)
        members = [mask]
        self._seen[key] = cid
        core = mask.copy()
        for m in members:
            idx = np.flatnonzero(m)
            for c in self._conj:
                img = np.zeros_like(m)
                img[c[idx]] = 1
                k = img.tobytes()
                if k not in self._seen:
                    self._seen[k] = cid
                    members.append(img)
                    core &= img
        self.classes.append(_Class(mask, gens, int(mask.sum()), len(members), core))
        return True

    def _enumerate(self) -> None:
        E = self.E
        n = len(E)
        cyclics: dict[bytes, tuple[int, np.ndarray]] = {}
        for g in range(n):
            if g == E.identity:
                continue
            pw = E.cyclic(g)
            if not _is_prime_power(len(pw)):
                continue
            m = self._mask(pw)
            cyclics.setdefault(m.tobytes(), (g, m))
        cyc = list(cyclics.values())
        self._register(self._mask([E.identity]), [])
        for cls in self.classes:  # grows while iterating
            for g, cm in cyc:
                if cls.rep[g]:
                    continue
                gens = cls.gens + [g]
                cols = np.stack([E.column(x) for x in gens]).astype(np.int32, copy=False)
                K = _k.closure_mask(cols, cls.rep)
                if K.tobytes() not in self._seen:
                    self._register(np.asarray(K, dtype=np.uint8), gens)

    def group(self, cls: _Class) -> PermGroup:
        gens = [Permutation._raw(self.E.elems[i]) for i in cls.gens]
        return PermGroup(self.Q.degree, gens)

    @property
    def total(self) -> int:
        """Number of subgroups, conjugates counted separately."""
        return sum(c.length for c in self.classes)


def enumerate_subgroups(Q: PermGroup, order_cap: int | None = None) -> list[PermGroup]:
    """Representatives of the conjugacy classes of subgroups of Q, trivial first."""
    lat = SubgroupLattice(Q, order_cap)
    return [lat.group(c) for c in lat.classes]


@dataclass
class MinDegResult:
    degree: int
    witness: GroupHom
    subgroup_family: list[PermGroup]


def _best_family(lat: SubgroupLattice) -> tuple[int, list[_Class]]:
    order = len(lat.E)
    best_by_core: dict[bytes, _Class] = {}
    for cls in lat.classes:
        key = cls.core.tobytes()
        cur = best_by_core.get(key)
        if cur is None or cls.size > cur.size:
            best_by_core[key] = cls
    cands = sorted(best_by_core.values(), key=lambda c: order // c.size)
    costs = [order // c.size for c in cands]
    best = [order + 1, []]

    def dfs(start: int, inter: np.ndarray, total: int, chosen: list[int]) -> None:
        for i in range(start, len(cands)):
            cost = total + costs[i]
            if cost >= best[0]:
                return  # costs ascend
            new = inter & cands[i].core
            s = int(new.sum())
            if s == int(inter.sum()):
                continue
            if s == 1:
                best[0], best[1] = cost, chosen + [i]
                return
            dfs(i + 1, new, cost, chosen + [i])

    full = np.ones(order, dtype=np.uint8)
    if order == 1:
        return 1, [lat.classes[0]]
    dfs(0, full, 0, [])
    return best[0], [cands[i] for i in best[1]]


def min_faithful_rep(Q: PermGroup, order_cap: int | None = None) -> MinDegResult:
    """Exact P(Q) with a witness summing coset actions; P(1) = 1."""
    lat = SubgroupLattice(Q, order_cap)
    degree, family = _best_family(lat)
    groups = [lat.group(c) for c in family]
    witness = direct_sum([coset_action(Q, H) for H in groups])
    return MinDegResult(degree, witness, groups)


def min_degree(Q: PermGroup, order_cap: int | None = None) -> int:
    return _best_family(SubgroupLattice(Q, order_cap))[0]


def verify_faithful(hom: GroupHom) -> bool:
    return hom.kernel.is_trivial()
