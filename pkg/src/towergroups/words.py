"""Words in the tree-automorphism generators a_1..a_n, their wreath
decompositions, states at vertices, the vertex action, depth-limited
portraits, leaf actions, and the index-shift automorphism.

A word is a freely reduced sequence of syllables ``a_i^e``.  The group
element it represents is determined by the recursion

    a_i = (1, ..., 1, a_i, 1, ..., 1) sigma_i

with a_i in coordinate i, so products decompose by

    (u v)_k = u_k * v_{k^{root(u)}},   root(u v) = root(u) * root(v).

Vertices of the n-ary tree are tuples of letters in {1..n}; the root is
the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as _iproduct

from .perm import Permutation, sigma

Vertex = tuple[int, ...]

ROOT_VERTEX: Vertex = ()


def _free_reduce(syllables):
    out = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged != 0:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word in the generators a_1..a_n.

    Syllables are (generator index, nonzero exponent) pairs with adjacent
    syllables on distinct generators; the constructor reduces its input.
    """

    n: int
    syllables: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"alphabet size must be at least 3, got {self.n}")
        reduced = _free_reduce(self.syllables)
        for gen, _ in reduced:
            if not 1 <= gen <= self.n:
                raise ValueError(f"generator index {gen} out of range 1..{self.n}")
        object.__setattr__(self, "syllables", reduced)

    def __len__(self) -> int:
        """Syllable count."""
        return len(self.syllables)

    def is_empty(self) -> bool:
        return not self.syllables

    def __mul__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise ValueError("words over different alphabets")
        return Word(self.n, self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(self.n, tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        result = Word(self.n)
        for _ in range(k):
            result = result * self
        return result

    def conjugate_by(self, h: "Word") -> "Word":
        """h^-1 * self * h."""
        return h.inverse() * self * h

    def canonical(self) -> "Word":
        """Reduce every exponent into {1..n-2} modulo the generator order
        n-1, re-reducing freely until stable.

        Valid on the group element because each a_i has order n-1; the
        canonical form never lengthens the word.
        """
        modulus = self.n - 1
        syllables = self.syllables
        while True:
            normalized = tuple((g, e % modulus) for g, e in syllables)
            reduced = _free_reduce(normalized)
            if reduced == syllables and all(0 < e < modulus for _, e in reduced):
                return Word(self.n, reduced)
            syllables = reduced

    def exponent_sums(self) -> tuple[int, ...]:
        """Raw (unreduced) exponent sum per generator."""
        sums = [0] * self.n
        for gen, exp in self.syllables:
            sums[gen - 1] += exp
        return tuple(sums)

    def shift(self) -> "Word":
        """Apply the index-shift automorphism a_i -> a_{i+1} (a_n -> a_1)."""
        return Word(self.n, tuple((gen % self.n + 1, exp) for gen, exp in self.syllables))

    def __str__(self) -> str:
        return format_word(self)


def generator(n: int, i: int, exp: int = 1) -> Word:
    return Word(n, ((i, exp),))


def commutator(u: Word, v: Word) -> Word:
    return u.inverse() * v.inverse() * u * v


@dataclass(frozen=True)
class WreathDecomposition:
    """One level of the wreath recursion: g = (g_1, ..., g_n) root."""

    states: tuple[Word, ...]
    root: Permutation

    @property
    def n(self) -> int:
        return self.root.degree


def decompose(w: Word) -> WreathDecomposition:
    """First-level wreath decomposition of the element represented by ``w``."""
    n = w.n
    states = [Word(n)] * n
    root = Permutation.identity(n)
    for gen, exp in w.syllables:
        # (u * a_gen^exp)_k picks up a_gen^exp at k = root^-1(gen)
        k = root.inverse()(gen)
        states[k - 1] = states[k - 1] * generator(n, gen, exp)
        root = root * sigma(n, gen) ** exp
    return WreathDecomposition(tuple(states), root)


def state_at(w: Word, v: Vertex) -> Word:
    """The state (section) of ``w`` at vertex ``v``; the whole word at the root."""
    current = w
    for letter in v:
        if not 1 <= letter <= w.n:
            raise ValueError(f"letter {letter} out of range 1..{w.n}")
        current = decompose(current).states[letter - 1]
    return current


def act(w: Word, v: Vertex) -> Vertex:
    """Image of vertex ``v`` under the automorphism represented by ``w``."""
    out = []
    current = w
    for letter in v:
        if not 1 <= letter <= w.n:
            raise ValueError(f"letter {letter} out of range 1..{w.n}")
        dec = decompose(current)
        out.append(dec.root(letter))
        current = dec.states[letter - 1]
    return tuple(out)


@dataclass(frozen=True)
class Portrait:
    """Depth-m truncation of a tree automorphism: a root-permutation label
    for every vertex of length < m."""

    n: int
    depth: int
    labels: dict[Vertex, Permutation] = field(hash=False)

    def __post_init__(self):
        for m in range(self.depth):
            for v in _iproduct(range(1, self.n + 1), repeat=m):
                if v not in self.labels:
                    raise ValueError(f"missing label at vertex {v}")
        for v, p in self.labels.items():
            if p.degree != self.n:
                raise ValueError(f"label at {v} has degree {p.degree}, want {self.n}")

    def act(self, v: Vertex) -> Vertex:
        if len(v) > self.depth:
            raise ValueError(f"vertex longer than portrait depth {self.depth}")
        out = []
        prefix: Vertex = ()
        for letter in v:
            out.append(self.labels[prefix](letter))
            prefix = prefix + (letter,)
        return tuple(out)

    def leaf_action(self, m: int) -> Permutation:
        if not 1 <= m <= self.depth:
            raise ValueError(f"level {m} outside 1..{self.depth}")
        images = [vertex_index(self.act(v), self.n) for v in level_vertices(self.n, m)]
        return Permutation(tuple(images))


def portrait(w: Word, m: int) -> Portrait:
    """Portrait of ``w`` to depth ``m``: the root label of the state at
    every vertex of length < m."""
    if m < 1:
        raise ValueError("depth must be at least 1")
    n = w.n
    labels: dict[Vertex, Permutation] = {}

    def fill(v: Vertex, word: Word):
        dec = decompose(word)
        labels[v] = dec.root
        if len(v) + 1 < m:
            for letter in range(1, n + 1):
                fill(v + (letter,), dec.states[letter - 1])

    fill((), w)
    return Portrait(n, m, labels)


def constant_portrait(p: Permutation, m: int) -> Portrait:
    """The depth-m portrait labeling every vertex with the same permutation.

    With the full cycle label this truncates the recursively constant
    automorphism whose conjugation action shifts the generator indices.
    """
    if m < 1:
        raise ValueError("depth must be at least 1")
    n = p.degree
    labels = {
        v: p
        for depth in range(m)
        for v in _iproduct(range(1, n + 1), repeat=depth)
    }
    return Portrait(n, m, labels)


def level_vertices(n: int, m: int):
    """Level-m vertices in lexicographic order, letters 1 < 2 < ... < n."""
    return _iproduct(range(1, n + 1), repeat=m)


def vertex_index(v: Vertex, n: int) -> int:
    """1-based lexicographic position of a level-|v| vertex."""
    idx = 0
    for letter in v:
        idx = idx * n + (letter - 1)
    return idx + 1


def index_vertex(idx: int, n: int, m: int) -> Vertex:
    """Inverse of vertex_index on level m."""
    idx -= 1
    letters = []
    for _ in range(m):
        idx, rem = divmod(idx, n)
        letters.append(rem + 1)
    return tuple(reversed(letters))


@lru_cache(maxsize=65536)
def _leaf_action_cached(n: int, syllables: tuple, m: int) -> Permutation:
    word = Word(n, syllables)
    dec = decompose(word)
    if m == 1:
        return dec.root
    block = n ** (m - 1)
    images = [0] * (n * block)
    for x in range(1, n + 1):
        inner = leaf_action(dec.states[x - 1], m - 1)
        offset = (x - 1) * block
        target_offset = (dec.root(x) - 1) * block
        for j in range(1, block + 1):
            images[offset + j - 1] = target_offset + inner(j)
    return Permutation(tuple(images))


def leaf_action(w: Word, m: int) -> Permutation:
    """Permutation of the n^m level-m vertices (lexicographic order)
    induced by ``w``; a homomorphism in ``w``.

    Decompositions are memoized per canonical word, so deep levels on long
    words stay fast.
    """
    if m < 1:
        raise ValueError("level must be at least 1")
    return _leaf_action_cached(w.n, w.canonical().syllables, m)


# --- text syntax -----------------------------------------------------------
#
# Word grammar (CLI and fixtures):
#   expr   := term ('*' term)*
#   term   := atom ('^' (integer | atom))*      integer = power, atom = conjugation
#   atom   := 'a' digits | '[' expr ',' expr ']' | '(' expr ')'
# e.g. "a1*a2^-1*a3^2", "[a1,a2]", "(a1*a4^-1)^2", "a2^a1".


class WordSyntaxError(ValueError):
    pass


class _WordParser:
    def __init__(self, text: str, n: int):
        self.text = text.replace(" ", "")
        self.pos = 0
        self.n = n

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise WordSyntaxError(
                f"expected {ch!r} at position {self.pos} in {self.text!r}")
        self.pos += 1

    def parse(self) -> Word:
        w = self.expr()
        if self.pos != len(self.text):
            raise WordSyntaxError(
                f"trailing input at position {self.pos} in {self.text!r}")
        return w

    def expr(self) -> Word:
        w = self.term()
        while self.peek() == "*":
            self.pos += 1
            w = w * self.term()
        return w

    def term(self) -> Word:
        w = self.atom()
        while self.peek() == "^":
            self.pos += 1
            if self.peek() in "-0123456789":
                w = w ** self.integer()
            else:
                w = w.conjugate_by(self.atom())
        return w

    def atom(self) -> Word:
        ch = self.peek()
        if ch == "a":
            self.pos += 1
            index = self.integer()
            if not 1 <= index <= self.n:
                raise WordSyntaxError(
                    f"generator index {index} out of range 1..{self.n}")
            return generator(self.n, index)
        if ch == "1":
            self.pos += 1
            return Word(self.n)
        if ch == "[":
            self.pos += 1
            u = self.expr()
            self.expect(",")
            v = self.expr()
            self.expect("]")
            return commutator(u, v)
        if ch == "(":
            self.pos += 1
            w = self.expr()
            self.expect(")")
            return w
        raise WordSyntaxError(
            f"unexpected {ch!r} at position {self.pos} in {self.text!r}")

    def integer(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise WordSyntaxError(
                f"expected integer at position {start} in {self.text!r}")
        return int(self.text[start:self.pos])


def parse_word(text: str, n: int) -> Word:
    """Parse the word syntax described above; empty input is the identity."""
    if not text.strip():
        return Word(n)
    return _WordParser(text, n).parse()


def format_word(w: Word) -> str:
    if w.is_empty():
        return "1"
    parts = []
    for gen, exp in w.syllables:
        parts.append(f"a{gen}" if exp == 1 else f"a{gen}^{exp}")
    return "*".join(parts)


def parse_vertex(text: str, n: int) -> Vertex:
    """Parse a vertex: a digit string for n <= 9 or dot-separated letters
    (e.g. ``1.10.3``) for larger alphabets; empty input is the root."""
    text = text.strip()
    if not text:
        return ()
    letters = [int(tok) for tok in text.split(".")] if "." in text or n > 9 \
        else [int(ch) for ch in text]
    for letter in letters:
        if not 1 <= letter <= n:
            raise ValueError(f"letter {letter} out of range 1..{n}")
    return tuple(letters)


def format_vertex(v: Vertex, n: int) -> str:
    if n > 9:
        return ".".join(map(str, v))
    return "".join(map(str, v))
