"""Deterministic Schreier-Sims stabilizer chains with exact big-integer
orders and membership testing.

The chain is built incrementally: a candidate generator is sifted through
the existing chain and only a nontrivial residue is installed, at the
deepest level whose base prefix it fixes.  Levels are then swept to a
fixpoint: each level's orbit is closed under every strong generator valid
at that level, and each new Schreier generator is sifted into the deeper
chain.  Base points are always the smallest point moved by the residue
being installed, so identical generator lists produce identical chains
and orders across runs.

Internally permutations are 0-based image tuples for speed; the public
surface speaks :class:`towergroups.perm.Permutation`.
"""

from __future__ import annotations

from .perm import Permutation


def _mul(p, q):
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def _inv(p):
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def _is_id(p):
    return all(i == img for i, img in enumerate(p))


class StabilizerChain:
    """Base and strong generating set for a finite permutation group.

    A strong generator installed at level j fixes the base points of all
    earlier levels, so it acts on the orbits of every level i <= j.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.base: list[int] = []                      # 0-based base points
        self._installed: list[list[tuple]] = []        # residues by install level
        self._transversal: list[dict[int, tuple]] = []  # point -> coset rep
        self._processed: list[set] = []                # handled (point, gen) pairs

    # -- construction ------------------------------------------------------

    def extend(self, p: Permutation) -> None:
        """Grow the chain's group by one generator."""
        if p.degree != self.degree:
            raise ValueError(
                f"degree mismatch: chain has {self.degree}, got {p.degree}")
        self._extend_internal(_to_internal(p))

    def _extend_internal(self, g: tuple) -> None:
        drop = self._install(g, 0)
        if drop is None:
            return
        for level in range(drop, -1, -1):
            self._complete(level)

    def _install(self, g: tuple, from_level: int):
        """Sift from ``from_level`` and install a nontrivial residue at its
        drop level; returns the drop level, or None if nothing was needed."""
        residue, drop = self._sift_from(g, from_level)
        if _is_id(residue):
            return None
        if drop == len(self.base):
            point = min(i for i, img in enumerate(residue) if img != i)
            self.base.append(point)
            self._installed.append([])
            self._transversal.append({point: tuple(range(self.degree))})
            self._processed.append(set())
        self._installed[drop].append(residue)
        return drop

    def _gens_at(self, level: int) -> list[tuple]:
        """Strong generators fixing the base prefix before ``level``."""
        return [g for lvl in range(level, len(self.base))
                for g in self._installed[lvl]]

    def _complete(self, level: int) -> None:
        """Verify all Schreier generators at ``level``, assuming every
        deeper level is already consistent; restores that invariant after
        each install before continuing."""
        transversal = self._transversal[level]
        processed = self._processed[level]
        while True:
            gens = self._gens_at(level)
            # orbit closure; transversal entries are never overwritten, so
            # already-verified Schreier generators stay verified
            frontier = list(transversal)
            while frontier:
                new_points = []
                for p in frontier:
                    rep = transversal[p]
                    for s in gens:
                        q = s[p]
                        if q not in transversal:
                            transversal[q] = _mul(rep, s)
                            new_points.append(q)
                frontier = new_points
            installed = False
            for p in list(transversal):
                rep = transversal[p]
                for s in gens:
                    key = (p, s)
                    if key in processed:
                        continue
                    processed.add(key)
                    schreier = _mul(_mul(rep, s), _inv(transversal[s[p]]))
                    drop = self._install(schreier, level + 1)
                    if drop is not None:
                        for j in range(drop, level, -1):
                            self._complete(j)
                        installed = True
                        break
                if installed:
                    break
            if not installed:
                return

    # -- queries -----------------------------------------------------------

    def _sift_from(self, g: tuple, level: int):
        for i in range(level, len(self.base)):
            p = g[self.base[i]]
            rep = self._transversal[i].get(p)
            if rep is None:
                return g, i
            g = _mul(g, _inv(rep))
        return g, len(self.base)

    @property
    def order(self) -> int:
        total = 1
        for transversal in self._transversal:
            total *= len(transversal)
        return total

    def orbit_sizes(self) -> list[int]:
        return [len(t) for t in self._transversal]

    def strong_generators(self) -> list[Permutation]:
        return [Permutation(tuple(i + 1 for i in g))
                for gens in self._installed for g in gens]

    def sift(self, p: Permutation) -> Permutation:
        if p.degree != self.degree:
            raise ValueError(
                f"degree mismatch: chain has {self.degree}, got {p.degree}")
        residue, _ = self._sift_from(_to_internal(p), 0)
        return Permutation(tuple(i + 1 for i in residue))

    def contains(self, p: Permutation) -> bool:
        return self.sift(p).is_identity()


def _to_internal(p: Permutation) -> tuple:
    return tuple(i - 1 for i in p.images)


def build_chain(gens: list[Permutation]) -> StabilizerChain:
    """Stabilizer chain for the group generated by ``gens``.

    Empty input yields the trivial chain of degree 1.
    """
    if not gens:
        return StabilizerChain(1)
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share one degree")
    chain = StabilizerChain(degree)
    for g in gens:
        chain.extend(g)
    return chain


def contains(chain: StabilizerChain, p: Permutation) -> bool:
    return chain.contains(p)


def subgroup_order(parent: StabilizerChain, subgens: list[Permutation]) -> int:
    """Exact order of the subgroup generated by ``subgens``, which must all
    lie in the parent chain's group."""
    for g in subgens:
        if g.degree != parent.degree:
            raise ValueError("subgroup generator degree mismatch")
        if not parent.contains(g):
            raise ValueError(f"generator {g} is not in the parent group")
    if not subgens:
        return 1
    return build_chain(subgens).order


def derived_subgroup_chain(gens: list[Permutation]) -> StabilizerChain:
    """Chain for the derived subgroup of the group generated by ``gens``.

    Seeds with commutators of generator pairs, then closes under
    conjugation by the group generators; membership by sifting keeps the
    worklist finite.
    """
    if not gens:
        return StabilizerChain(1)
    degree = gens[0].degree
    chain = StabilizerChain(degree)
    worklist = []
    for g in gens:
        for h in gens:
            c = g.inverse() * h.inverse() * g * h
            if not c.is_identity():
                chain.extend(c)
                worklist.append(c)
    while worklist:
        c = worklist.pop()
        for g in gens:
            conj = g.inverse() * c * g
            if not chain.contains(conj):
                chain.extend(conj)
                worklist.append(conj)
    return chain
