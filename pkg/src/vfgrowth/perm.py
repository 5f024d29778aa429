"""Permutations of {0, ..., n-1}.

Internally everything is 0-based: a permutation is stored as the tuple of
images (p.images[i] is the image of point i).  Cycle notation at the text
boundary (parsing and printing) is 1-based, so "(1 2)(3 4)" swaps the first
two and the last two of four points, and "()" is the identity.
"""

from __future__ import annotations

import re
from math import lcm


class Perm:
    """An immutable permutation of fixed degree."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __le__(self, other: "Perm") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Perm({self.images!r})"

    def __str__(self) -> str:
        return format_perm(self)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def order(self) -> int:
        lengths = [len(c) for c in self.cycles()]
        return lcm(*lengths) if lengths else 1

    def sign(self) -> int:
        flips = sum(len(c) - 1 for c in self.cycles())
        return -1 if flips % 2 else 1

    def cycles(self) -> tuple:
        """Nontrivial cycles as tuples, each rotated to start at its minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = []
            p = start
            while not seen[p]:
                seen[p] = True
                cyc.append(p)
                p = self.images[p]
            out.append(tuple(cyc))
        return tuple(out)

    def fixed_points(self) -> int:
        return sum(1 for i, img in enumerate(self.images) if img == i)


def identity(degree: int) -> Perm:
    return Perm(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """The product p*q acting as q first, then p: (p*q)(x) = p(q(x))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Perm(tuple(p.images[i] for i in q.images))


def from_cycles(cycles, degree: int) -> Perm:
    """Build a permutation from disjoint 0-based cycles."""
    images = list(range(degree))
    seen = set()
    for cyc in cycles:
        for pt in cyc:
            if not 0 <= pt < degree:
                raise ValueError(f"point {pt} out of range for degree {degree}")
            if pt in seen:
                raise ValueError(f"point {pt} repeated; cycles must be disjoint")
            seen.add(pt)
        for i, pt in enumerate(cyc):
            images[pt] = cyc[(i + 1) % len(cyc)]
    return Perm(images)


_CYCLE_TOKEN = re.compile(r"\(|\)|\d+|\s+")


def parse_perm(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation like "(1 2)(3 4)"; "()" is the identity.

    Whitespace is free-form.  Cycles must be disjoint and every point must
    lie in 1..degree.
    """
    pos = 0
    cycles = []
    current = None
    for m in _CYCLE_TOKEN.finditer(text):
        if m.start() != pos:
            break
        pos = m.end()
        tok = m.group()
        if tok.isspace():
            continue
        if tok == "(":
            if current is not None:
                raise ValueError(f"nested '(' in cycle notation: {text!r}")
            current = []
        elif tok == ")":
            if current is None:
                raise ValueError(f"unmatched ')' in cycle notation: {text!r}")
            if current:
                cycles.append(tuple(pt - 1 for pt in current))
            current = None
        else:
            if current is None:
                raise ValueError(f"point outside parentheses in {text!r}")
            pt = int(tok)
            if not 1 <= pt <= degree:
                raise ValueError(f"point {pt} out of range 1..{degree} in {text!r}")
            current.append(pt)
    if pos != len(text) or current is not None:
        raise ValueError(f"malformed cycle notation: {text!r}")
    try:
        return from_cycles(cycles, degree)
    except ValueError as exc:
        raise ValueError(f"{exc} in {text!r}") from None


def format_perm(p: Perm) -> str:
    """1-based disjoint cycle form; fixed points are suppressed."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(pt + 1) for pt in cyc) + ")" for cyc in cycles)
