"""Exact permutations of {1..d}, the generator root permutations, and
brute-force closure of small permutation groups.

Conventions, fixed once and used everywhere in this package:

* points are 1-based;
* a permutation is stored as its image array, so ``p(i) = images[i-1]``;
* composition is left-to-right: ``(p * q)(i) = q(p(i))`` (apply ``p``
  first), matching the right action of automorphisms on tree vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations as _all_perms


class ClosureCapExceeded(Exception):
    """Brute-force closure grew past the configured cap."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..degree} stored as a tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        d = len(self.images)
        if sorted(self.images) != list(range(1, d + 1)):
            raise ValueError(f"not a permutation of 1..{d}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(1, degree + 1)))

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting from its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cycle))
        return out

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    def __str__(self) -> str:
        return format_cycles(self)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right composition: apply ``p`` first, then ``q``."""
    return p * q


def sigma(n: int, i: int) -> Permutation:
    """The (n-1)-cycle on {1..n} \\ {i}: 1 -> 2 -> ... (skipping i) ... -> n -> 1."""
    if n < 3:
        raise ValueError(f"alphabet size must be at least 3, got {n}")
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    support = [j for j in range(1, n + 1) if j != i]
    images = list(range(1, n + 1))
    for pos, j in enumerate(support):
        images[j - 1] = support[(pos + 1) % (n - 1)]
    return Permutation(tuple(images))


def omega(n: int) -> Permutation:
    """The full cycle (1 2 ... n)."""
    return Permutation(tuple(list(range(2, n + 1)) + [1]))


def closure_order_bfs(gens: list[Permutation], cap: int = 10**7) -> int:
    """Exact order of the group generated by ``gens`` via breadth-first
    enumeration of elements.

    Raises ClosureCapExceeded once more than ``cap`` elements are seen.
    """
    if not gens:
        return 1
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share one degree")
    gen_images = [g.images for g in gens]
    identity = tuple(range(1, degree + 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for p in frontier:
            for g in gen_images:
                q = tuple(g[i - 1] for i in p)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise ClosureCapExceeded(
                            f"closure exceeded cap of {cap} elements")
                    new_frontier.append(q)
        frontier = new_frontier
    return len(seen)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``"(2 3)(4 5)"`` into a Permutation.

    Commas or spaces separate points; ``"()"`` and the empty string both
    denote the identity.
    """
    text = text.strip()
    images = list(range(1, degree + 1))
    body = text.replace(",", " ")
    consumed = 0
    for match in _CYCLE_RE.finditer(body):
        consumed += len(match.group(0))
        points = [int(tok) for tok in match.group(1).split()]
        if not points:
            continue
        if any(not 1 <= pt <= degree for pt in points):
            raise ValueError(f"point out of range 1..{degree} in {text!r}")
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point in cycle {match.group(0)!r}")
        for pos, pt in enumerate(points):
            if images[pt - 1] != pt:
                raise ValueError(f"point {pt} appears in two cycles")
            images[pt - 1] = points[(pos + 1) % len(points)]
    if consumed != len(body.replace(" ", "")) and body.strip():
        stripped = re.sub(_CYCLE_RE, "", body).strip()
        if stripped:
            raise ValueError(f"unparsed cycle text {stripped!r}")
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def all_permutations(degree: int):
    """Iterate every permutation of {1..degree}; for tiny oracles only."""
    for images in _all_perms(range(1, degree + 1)):
        yield Permutation(images)
