"""Block systems of imprimitivity and the action on blocks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotInvariant, NotNormal, NotTransitive, PointOutOfRange
from .group import GroupHom, PermGroup, is_normal
from .perm import Permutation

__all__ = [
    "BlockSystem",
    "orbits_block_system",
    "minimal_block",
    "block_action",
    "is_primitive",
]


@dataclass(frozen=True)
class BlockSystem:
    """A partition of {1..degree}.

    Blocks are sorted tuples, numbered by their smallest point ascending;
    ``block_of[x]`` is the 0-based index of the block containing point x.
    The action on blocks labels ``blocks[i]`` as point ``i + 1``.
    """

    degree: int
    blocks: tuple[tuple[int, ...], ...]
    block_of: dict[int, int] = field(compare=False, repr=False)

    @classmethod
    def from_blocks(cls, degree: int, blocks) -> "BlockSystem":
        ordered = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        block_of: dict[int, int] = {}
        for i, b in enumerate(ordered):
            for x in b:
                if not 1 <= x <= degree:
                    raise PointOutOfRange(f"point {x} outside 1..{degree}")
                if x in block_of:
                    raise ValueError(f"point {x} lies in two blocks")
                block_of[x] = i
        if len(block_of) != degree:
            raise ValueError("blocks do not cover the domain")
        return cls(degree, tuple(ordered), block_of)

    def __len__(self) -> int:
        return len(self.blocks)

    def is_trivial(self) -> bool:
        return len(self.blocks) in (1, self.degree)

    def is_invariant(self, G: PermGroup) -> bool:
        for g in G.generators:
            for b in self.blocks:
                target = self.block_of[g(b[0])]
                if sorted(g(x) for x in b) != list(self.blocks[target]):
                    return False
        return True


def orbits_block_system(G: PermGroup, N: PermGroup) -> BlockSystem:
    """The N-orbits, a G-invariant partition when N is normal in G."""
    if not is_normal(G, N):
        raise NotNormal("N is not normalized by G")
    return BlockSystem.from_blocks(N.degree, N.orbits())


class _UnionFind:
    """Union-find where the smaller root wins, so labels are reproducible."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> tuple[int, int] | None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return None
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return x, y


def minimal_block(G: PermGroup, a: int, b: int) -> BlockSystem:
    """Finest G-invariant partition with a and b in one block (Atkinson)."""
    n = G.degree
    for x in (a, b):
        if not 1 <= x <= n:
            raise PointOutOfRange(f"point {x} outside 1..{n}")
    if a == b:
        raise ValueError("a and b must differ")
    if not G.is_transitive():
        raise NotTransitive("minimal blocks need a transitive group")
    gens = [g._p for g in G.generators]
    uf = _UnionFind(n)
    queue = [uf.union(a - 1, b - 1)]
    for x, y in queue:
        for g in gens:
            merged = uf.union(g[x], g[y])
            if merged is not None:
                queue.append(merged)
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(uf.find(x), []).append(x + 1)
    return BlockSystem.from_blocks(n, classes.values())


def block_action(G: PermGroup, B: BlockSystem) -> GroupHom:
    """Induced action of G on the blocks of B."""
    if not B.is_invariant(G):
        raise NotInvariant("block system is not G-invariant")
    images = []
    for g in G.generators:
        images.append(Permutation._raw(tuple(B.block_of[g(blk[0])] for blk in B.blocks)))
    return GroupHom(G, len(B.blocks), images, check=False)


def is_primitive(G: PermGroup) -> bool:
    if not G.is_transitive():
        raise NotTransitive("primitivity is defined for transitive groups")
    n = G.degree
    for b in range(2, n + 1):
        if len(minimal_block(G, 1, b).blocks) > 1:
            return False
    return True


def setwise_stabilizer_of_block(G: PermGroup, B: BlockSystem, index: int = 0) -> PermGroup:
    """Stabilizer in G of the block ``B.blocks[index]``."""
    hom = block_action(G, B)
    return hom.preimage_group(hom.image.stabilizer(index + 1))
