"""Permutations of {1..degree} and cycle notation.

Right action throughout: ``x^(p*q) = (x^p)^q``, so ``compose(p, q)`` applies
``p`` first. Points are 1-based at every public boundary; the images are kept
0-based internally.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from ._backend import kernels as _k
from .errors import DegreeMismatch, MalformedCycles, PointOutOfRange

__all__ = [
    "Permutation",
    "identity",
    "compose",
    "inverse",
    "act",
    "parse_cycles",
    "format_cycles",
]


class Permutation:
    """An immutable bijection of {1..degree}."""

    __slots__ = ("_p", "_hash")

    def __init__(self, images: Iterable[int]):
        p = tuple(int(x) - 1 for x in images)
        if not p:
            raise ValueError("degree must be at least 1")
        if sorted(p) != list(range(len(p))):
            raise MalformedCycles(f"images {tuple(x + 1 for x in p)} are not a bijection")
        self._p = p
        self._hash = None

    @classmethod
    def _raw(cls, p: tuple) -> "Permutation":
        # trusted 0-based tuple, no validation
        obj = cls.__new__(cls)
        obj._p = p
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self._p)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based images: ``images[i-1]`` is the image of point i."""
        return tuple(x + 1 for x in self._p)

    def __call__(self, x: int) -> int:
        return act(self, x)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return inverse(self) ** (-k)
        result = tuple(range(len(self._p)))
        base = self._p
        while k:
            if k & 1:
                result = _k.mul(result, base)
            base = _k.mul(base, base)
            k >>= 1
        return Permutation._raw(result)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._p == other._p

    def __lt__(self, other: "Permutation") -> bool:
        return self._p < other._p

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._p)
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({format_cycles(self)!r}, {self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return _k.is_identity(self._p)

    def support(self) -> list[int]:
        """Moved points, ascending, 1-based."""
        return [i + 1 for i, x in enumerate(self._p) if i != x]

    def order(self) -> int:
        from math import lcm

        result = 1
        for c in self.cycles():
            result = lcm(result, len(c))
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles in canonical form (1-based)."""
        p = self._p
        seen = [False] * len(p)
        out = []
        for i in range(len(p)):
            if seen[i] or p[i] == i:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = p[j]
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def extend(self, degree: int) -> "Permutation":
        """The same permutation on a larger domain, fixing the new points."""
        if degree < self.degree:
            raise DegreeMismatch(f"cannot shrink degree {self.degree} to {degree}")
        return Permutation._raw(self._p + tuple(range(self.degree, degree)))


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` then ``q``."""
    if len(p._p) != len(q._p):
        raise DegreeMismatch(f"cannot compose degrees {p.degree} and {q.degree}")
    return Permutation._raw(_k.mul(p._p, q._p))


def inverse(p: Permutation) -> Permutation:
    return Permutation._raw(_k.inv(p._p))


def act(p: Permutation, x: int) -> int:
    if not 1 <= x <= len(p._p):
        raise PointOutOfRange(f"point {x} outside 1..{p.degree}")
    return p._p[x - 1] + 1


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4,5)"``.

    ``"()"``, ``"id"`` and the empty string denote the identity. Points may
    be separated by spaces or commas; a point repeated anywhere in the text
    is rejected.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    s = text.strip()
    if s in ("", "id", "()"):
        return Permutation.identity(degree)
    pos = 0
    img = list(range(degree))
    seen: set[int] = set()
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise MalformedCycles(f"unexpected text {s[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        if not body:
            continue
        try:
            pts = [int(tok) for tok in body]
        except ValueError:
            raise MalformedCycles(f"non-integer point in {text!r}") from None
        for x in pts:
            if not 1 <= x <= degree:
                raise PointOutOfRange(f"point {x} outside 1..{degree} in {text!r}")
            if x in seen:
                raise MalformedCycles(f"point {x} repeated in {text!r}")
            seen.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b - 1
    if s[pos:].strip():
        raise MalformedCycles(f"unexpected text {s[pos:]!r} in {text!r}")
    return Permutation._raw(tuple(img))


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def perm_from_map(mapping: dict[int, int] | Sequence[int], degree: int) -> Permutation:
    """Build from a 1-based point map; unmapped points are fixed."""
    img = list(range(1, degree + 1))
    items = mapping.items() if isinstance(mapping, dict) else enumerate(mapping, 1)
    for a, b in items:
        img[a - 1] = b
    return Permutation(img)
