"""Pure-Python hot kernels.

Same surface as the compiled ``_kernels`` extension; used when the extension
is missing or when ``QUOTSHRINK_PURE=1``. Permutations are 0-based tuples
acting on the right: ``mul(a, b)`` applies ``a`` first.
"""

import numpy as np


def mul(a, b):
    return tuple(map(b.__getitem__, a))


def inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def is_identity(a):
    for i, x in enumerate(a):
        if i != x:
            return False
    return True


def orbit_transversal(gens, point):
    """BFS orbit of ``point``; maps each orbit point y to u with point^u = y."""
    ident = tuple(range(len(gens[0]))) if gens else None
    trans = {point: ident}
    queue = [point]
    for x in queue:
        ux = trans[x]
        for g in gens:
            y = g[x]
            if y not in trans:
                trans[y] = tuple(map(g.__getitem__, ux))
                queue.append(y)
    return trans


def orbit(gens, point):
    seen = {point}
    queue = [point]
    for x in queue:
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return queue


def sift(g, bases, inv_transversals, start=0):
    """Strip ``g`` through levels ``start..``; return (residue, failing level).

    ``inv_transversals[i][y]`` is the inverse of the level-i transversal
    element mapping ``bases[i]`` to ``y``.
    """
    for i in range(start, len(bases)):
        y = g[bases[i]]
        t = inv_transversals[i].get(y)
        if t is None:
            return g, i
        g = tuple(map(t.__getitem__, g))
    return g, len(bases)


def closure_mask(cols, mask):
    """Close the element set ``mask`` under right multiplication.

    ``cols[k][x]`` is the index of x*g_k. Returns a new uint8 mask.
    """
    out = np.array(mask, dtype=np.uint8, copy=True)
    queue = [int(x) for x in np.flatnonzero(out)]
    rows = [list(map(int, c)) for c in cols]
    flags = out.tolist()
    for x in queue:
        for c in rows:
            y = c[x]
            if not flags[y]:
                flags[y] = 1
                queue.append(y)
    return np.array(flags, dtype=np.uint8)
