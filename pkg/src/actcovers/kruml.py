"""The Kruml word monoid and its system of finite-subset acts.

Words are tuples of generator indices (empty tuple = identity) in the
monoid generated by a0, a1, a2, ... subject to ai*aj = a(j+1)*ai for
all i <= j.  Oriented right to left this is the rewrite rule

    a_m a_i  ->  a_i a_(m-1)      whenever m > i,

which strictly decreases the index sum, so rewriting terminates; the
only overlaps are confluent, so every word has a unique normal form:
the words with nondecreasing indices.  Multiplication is concatenate
then normalize.  Left multiplication is injective (cancellable); right
multiplication is not, e.g. a0*a0 = a1*a0 and a2*a1 = a1*a1.

FinXSystem models the directed system indexed by finite subsets Y of
an ordered label set X: each object is a copy of the monoid, and the
arrow for Y into Y + {z} is left multiplication by a_i where i counts
the members of Y below z.  Transitions along any insertion order of a
larger subset agree, so equality of colimit elements is decided by
pushing both into the union of their subsets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import AlreadyMemberError, NotSubsetError

KWord = tuple  # tuple of int generator indices


def knormalize(word: Sequence[int]) -> KWord:
    """Normal form via leftmost-redex rewriting."""
    w = list(word)
    if any(i < 0 for i in w):
        raise ValueError("generator indices must be nonnegative")
    while True:
        for pos in range(len(w) - 1):
            m, i = w[pos], w[pos + 1]
            if m > i:
                w[pos], w[pos + 1] = i, m - 1
                break
        else:
            return tuple(w)


def knormalize_random(word: Sequence[int], rng: random.Random) -> KWord:
    """Normal form via a random redex at each step.

    Confluence makes the outcome independent of the strategy; tests
    compare this against knormalize on sampled words.
    """
    w = list(word)
    while True:
        redexes = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not redexes:
            return tuple(w)
        p = rng.choice(redexes)
        w[p], w[p + 1] = w[p + 1], w[p] - 1


def is_normal(word: Sequence[int]) -> bool:
    return all(word[p] <= word[p + 1] for p in range(len(word) - 1))


def kmul(u: Sequence[int], v: Sequence[int]) -> KWord:
    return knormalize(tuple(u) + tuple(v))


def left_cancel_test(w: Sequence[int], u: Sequence[int], v: Sequence[int]) -> bool:
    """The implication  w*u = w*v  =>  u = v  for these words."""
    if kmul(w, u) != kmul(w, v):
        return True
    return knormalize(u) == knormalize(v)


def right_cancellation_counterexamples(max_index: int) -> list[tuple[int, int, int]]:
    """Single-letter triples (i, j, k), i < j, with a_i*a_k = a_j*a_k.

    The defining relation itself supplies them: (0, 1, 0) from
    a0*a0 = a1*a0, and (1, 2, 1) from a1*a1 = a2*a1.
    """
    out = []
    for i in range(max_index + 1):
        for j in range(i + 1, max_index + 1):
            for k in range(max_index + 1):
                if kmul((i,), (k,)) == kmul((j,), (k,)):
                    out.append((i, j, k))
    return out


def normal_words(max_len: int, max_index: int):
    """All normal-form words up to the given length and index bound, in
    depth-first prefix order: each word right before its extensions."""
    def rec(prefix: tuple, low: int, remaining: int):
        yield prefix
        if remaining == 0:
            return
        for i in range(low, max_index + 1):
            yield from rec(prefix + (i,), i, remaining - 1)

    yield from rec((), 0, max_len)


@dataclass(frozen=True)
class ColimitElement:
    """A representative (Y, w): the word w in the copy indexed by Y."""

    subset: tuple[str, ...]
    word: KWord


class FinXSystem:
    """Directed system of monoid copies indexed by finite subsets of a
    totally ordered ground list of labels (order = list order)."""

    def __init__(self, ground: Sequence[str]):
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground labels must be distinct")
        self._rank = {lab: i for i, lab in enumerate(self.ground)}

    def _check_subset(self, labels: Iterable[str]) -> tuple[str, ...]:
        labels = tuple(labels)
        for lab in labels:
            if lab not in self._rank:
                raise ValueError(f"label {lab!r} not in the ground set")
        if len(set(labels)) != len(labels):
            raise ValueError("subset labels must be distinct")
        return tuple(sorted(labels, key=self._rank.get))

    def element(self, labels: Iterable[str], word: Sequence[int]) -> ColimitElement:
        return ColimitElement(self._check_subset(labels), knormalize(word))

    def insertion_index(self, labels: Iterable[str], z: str) -> int:
        """How many members of the subset precede z in the ground order."""
        subset = self._check_subset(labels)
        if z not in self._rank:
            raise ValueError(f"label {z!r} not in the ground set")
        if z in subset:
            raise AlreadyMemberError(f"label {z!r} already in the subset")
        rz = self._rank[z]
        return sum(1 for y in subset if self._rank[y] < rz)

    def transition(self, small: Iterable[str], large: Iterable[str], word: Sequence[int]) -> KWord:
        """Push a word from the copy at the small subset into the copy
        at the large one: insert the missing labels in ascending order,
        each step prepending the corresponding generator.

        Path independence of the insertion order is a library invariant
        (exercised by the tests), so ascending order is just a fixed
        convention, not a semantic choice.
        """
        small = self._check_subset(small)
        large = self._check_subset(large)
        missing = [z for z in large if z not in small]
        if len(small) + len(missing) != len(large):
            raise NotSubsetError("first subset must be contained in the second")
        current = list(small)
        w = knormalize(word)
        for z in sorted(missing, key=self._rank.get):
            i = self.insertion_index(current, z)
            w = knormalize((i,) + w)
            current.append(z)
        return w

    def colimit_equal(self, e1: ColimitElement, e2: ColimitElement) -> bool:
        """Equality in the colimit, decided at the union of the subsets.

        Left multiplications are injective, so two representatives are
        identified iff they agree after transitioning into any common
        upper bound; the union is the least one.
        """
        union = tuple(sorted(set(e1.subset) | set(e2.subset), key=self._rank.get))
        w1 = self.transition(e1.subset, union, e1.word)
        w2 = self.transition(e2.subset, union, e2.word)
        return w1 == w2
