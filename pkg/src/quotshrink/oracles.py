"""Brute-force reference computations, independent of the stabilizer chain.

Everything here works on explicit element sets built by closure, so it is
only usable for small groups. Tests and the self-test compare the fast
algorithms against these.
"""

from __future__ import annotations

from typing import Iterable


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(b[x] for x in a)


def _inv(a: tuple) -> tuple:
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def closure(gens: Iterable[tuple], degree: int) -> frozenset:
    """All elements generated by 0-based image tuples."""
    gens = list(gens)
    one = tuple(range(degree))
    seen = {one}
    queue = [one]
    for x in queue:
        for g in gens:
            y = _mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def group_elements(G) -> frozenset:
    return closure((g._p for g in G.generators), G.degree)


def all_subgroups(elements: frozenset) -> list[frozenset]:
    """Every subgroup, as joins of cyclic subgroups until nothing new appears."""
    degree = len(next(iter(elements)))
    cyc = {}
    for g in elements:
        cyc.setdefault(closure([g], degree), g)
    gens = {C: [g] for C, g in cyc.items()}
    one = frozenset([tuple(range(degree))])
    gens[one] = []
    frontier = list(gens)
    while frontier:
        new = []
        for A in frontier:
            for C, g in cyc.items():
                if g in A:
                    continue
                J = closure(gens[A] + [g], degree)
                if J not in gens:
                    gens[J] = gens[A] + [g]
                    new.append(J)
        frontier = new
    return sorted(gens, key=lambda s: (len(s), sorted(s)))


def conjugates(H: frozenset, elements: frozenset) -> set[frozenset]:
    return {frozenset(_mul(_mul(_inv(g), h), g) for h in H) for g in elements}


def brute_core(H: frozenset, elements: frozenset) -> frozenset:
    out = set(H)
    for C in conjugates(H, elements):
        out &= C
    return frozenset(out)


def exhaustive_min_degree(G) -> int:
    """P(G) by searching families of all subgroups, with no conjugacy reduction."""
    elements = group_elements(G)
    order = len(elements)
    if order == 1:
        return 1
    subs = all_subgroups(elements)
    cores = [brute_core(H, elements) for H in subs]
    idx = [order // len(H) for H in subs]
    one = frozenset([tuple(range(G.degree))])
    best = order  # the regular action
    items = sorted(range(len(subs)), key=lambda i: idx[i])

    def dfs(pos: int, inter: frozenset, total: int) -> None:
        nonlocal best
        if inter == one:
            best = min(best, total)
            return
        for j in range(pos, len(items)):
            i = items[j]
            if total + idx[i] >= best:
                return
            new = inter & cores[i]
            if new != inter:
                dfs(j + 1, new, total + idx[i])

    dfs(0, elements, 0)
    return best


def brute_normalizer(H: frozenset, elements: Iterable[tuple]) -> frozenset:
    """{g : H^g = H} over the given elements."""
    out = set()
    for g in elements:
        gi = _inv(g)
        if all(_mul(_mul(gi, h), g) in H for h in H):
            out.add(g)
    return frozenset(out)


def brute_is_normal(N: frozenset, gens: Iterable[tuple]) -> bool:
    return all(_mul(_mul(_inv(g), x), g) in N for g in gens for x in N)
