"""Finite monoids as validated multiplication tables.

A monoid is stored as a tuple of element labels plus an n x n table of
element indices.  The identity always sits at index 0; every constructor
checks the identity law, associativity, and index bounds before handing
the table out, so any Monoid in circulation is a genuine monoid.

Two families from the cover-theory scenarios are built here:

* ``right_zero_adjoin_one(n)``: a right-zero semigroup {z1..zn} with an
  identity adjoined (x * zj = zj for every x).
* ``qiao_wei_truncated(n, cap)``: the monoid with generators x0..xn and
  relations  x0*xk = xk*x0 = x0 (k>=1),  xk^k = xk^(k+1) (k>=1),
  xi*xj = xj^2 (i,j>=1),  cut down to a finite table by adding the
  relation x0^cap = x0^(cap+1).  Normal forms are computed from the
  relations; note that xj^3 = xj^2 already follows from them for every
  j >= 1 (derivation: xj^3 = (x1*xj)*xj = x1*(x1*xj) = (x1*x1)*xj =
  x1*xj = xj^2), so powers of xj stabilise at xj^2, and at x1 itself
  for j = 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (
    BadIndexError,
    EmptySemigroupError,
    NoIdentityError,
    NotAssociativeError,
    OrderTooLargeError,
)

ENUMERATION_BOUND = 4


@dataclass(frozen=True)
class Monoid:
    """Immutable finite monoid; identity at index 0."""

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise EmptySemigroupError("a monoid needs at least the identity")
        if len(set(self.elements)) != n:
            raise ValueError("element labels must be distinct")
        if len(self.table) != n:
            raise ValueError("table must have one row per element")
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise ValueError("table rows must have one entry per element")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise BadIndexError(i, j, v)
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise NoIdentityError(0)
        t = self.table
        for a in range(n):
            ta = t[a]
            for b in range(n):
                ab = ta[b]
                tb = t[b]
                tab = t[ab]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise NotAssociativeError(a, b, c)
        object.__setattr__(
            self, "_index", {lab: i for i, lab in enumerate(self.elements)}
        )

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        """a multiplied with itself k times; k = 0 gives the identity."""
        acc = 0
        for _ in range(k):
            acc = self.table[acc][a]
        return acc

    def index(self, label: str) -> int:
        return self._index[label]

    def label(self, i: int) -> str:
        return self.elements[i]

    def submonoid_closure(self, seed: tuple[int, ...]) -> tuple[int, ...]:
        """Indices of the submonoid generated by seed (identity included)."""
        seen = {0}
        seen.update(seed)
        frontier = list(seen)
        while frontier:
            a = frontier.pop()
            for b in tuple(seen):
                for c in (self.table[a][b], self.table[b][a]):
                    if c not in seen:
                        seen.add(c)
                        frontier.append(c)
        return tuple(sorted(seen))


def build_from_table(elements, table) -> Monoid:
    """Validate a raw labels/table pair and wrap it as a Monoid."""
    return Monoid(tuple(elements), tuple(tuple(row) for row in table))


@dataclass(frozen=True)
class Presentation:
    """Generator labels plus relations as pairs of words.

    A word is a tuple of generator indices; the empty tuple is the
    identity.  Presentations are only bookkeeping: builders and tests
    use them to confirm that a finished table satisfies every relation.
    """

    generators: tuple[str, ...]
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def __post_init__(self):
        g = len(self.generators)
        for lhs, rhs in self.relations:
            for word in (lhs, rhs):
                for sym in word:
                    if not 0 <= sym < g:
                        raise ValueError(f"relation uses undeclared generator {sym}")

    def holds_in(self, m: Monoid, assignment: tuple[int, ...]) -> Optional[tuple]:
        """First violated relation under generator -> element assignment,
        or None when every relation holds."""

        def evaluate(word: tuple[int, ...]) -> int:
            acc = 0
            for sym in word:
                acc = m.table[acc][assignment[sym]]
            return acc

        for lhs, rhs in self.relations:
            if evaluate(lhs) != evaluate(rhs):
                return (lhs, rhs)
        return None


def right_zero_adjoin_one(n: int) -> Monoid:
    """Right-zero semigroup {z1..zn} with a fresh identity adjoined."""
    if n < 1:
        raise EmptySemigroupError("need at least one right zero")
    labels = ("1",) + tuple(f"z{i}" for i in range(1, n + 1))
    size = n + 1
    table = [[0] * size for _ in range(size)]
    for j in range(size):
        table[0][j] = j
    for i in range(1, size):
        table[i][0] = i
        for j in range(1, size):
            table[i][j] = j
    return build_from_table(labels, table)


def qiao_wei_presentation(n: int, cap: int) -> Presentation:
    """Relations of the truncated monoid on generators x0..xn.

    Generator i of the presentation is xi.  The truncation relation
    x0^cap = x0^(cap+1) is included.
    """
    gens = tuple(f"x{k}" for k in range(n + 1))
    rels = []
    for k in range(1, n + 1):
        rels.append(((0, k), (0,)))
        rels.append(((k, 0), (0,)))
        rels.append(((k,) * k, (k,) * (k + 1)))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rels.append(((i, j), (j, j)))
    rels.append(((0,) * cap, (0,) * (cap + 1)))
    return Presentation(gens, tuple(rels))


def qiao_wei_truncated(n: int, cap: Optional[int] = None) -> Monoid:
    """Finite quotient of the x0..xn monoid described in the module doc.

    cap fixes where the free powers of x0 stabilise (default n + 1).
    Elements are the normal forms 1, x0^1..x0^cap, and xk^m for
    1 <= m <= min(k, 2); products follow the relations exactly.
    """
    if n < 1:
        raise EmptySemigroupError("need at least generators x0 and x1")
    if cap is None:
        cap = n + 1
    if cap < 1:
        raise ValueError("cap must be at least 1")

    def stable(k: int) -> int:
        if k == 0:
            return cap
        return 1 if k == 1 else 2

    # Elements as (generator, exponent) pairs; None stands for the identity.
    forms: list[Optional[tuple[int, int]]] = [None]
    forms += [(0, m) for m in range(1, cap + 1)]
    for k in range(1, n + 1):
        forms += [(k, m) for m in range(1, stable(k) + 1)]

    def name(form: Optional[tuple[int, int]]) -> str:
        if form is None:
            return "1"
        k, m = form
        return f"x{k}^{m}"

    def mul(a: Optional[tuple[int, int]], b) -> Optional[tuple[int, int]]:
        if a is None:
            return b
        if b is None:
            return a
        (i, p), (j, q) = a, b
        if i == 0 and j == 0:
            return (0, min(p + q, cap))
        if i == 0:
            return (0, p)
        if j == 0:
            return (0, q)
        return (j, min(p + q, stable(j)))

    index = {form: i for i, form in enumerate(forms)}
    size = len(forms)
    table = [[index[mul(forms[i], forms[j])] for j in range(size)] for i in range(size)]
    m = build_from_table([name(f) for f in forms], table)

    pres = qiao_wei_presentation(n, cap)
    assignment = tuple(index[(k, 1)] for k in range(n + 1))
    bad = pres.holds_in(m, assignment)
    if bad is not None:
        raise AssertionError(f"built table violates defining relation {bad}")
    return m


def is_cancellative(m: Monoid, side: str):
    """Whether multiplication on the given side can be cancelled.

    side = "right": u*s = v*s forces u = v; a failure is reported as the
    lexicographically least triple (u, v, s) with u < v and u*s = v*s.
    side = "left": s*u = s*v forces u = v; failure witness is the least
    (s, u, v) with u < v and s*u = s*v.  Returns (verdict, witness).
    """
    n = m.order
    t = m.table
    if side == "right":
        for u in range(n):
            for v in range(u + 1, n):
                for s in range(n):
                    if t[u][s] == t[v][s]:
                        return False, (u, v, s)
        return True, None
    if side == "left":
        for s in range(n):
            row = t[s]
            for u in range(n):
                for v in range(u + 1, n):
                    if row[u] == row[v]:
                        return False, (s, u, v)
        return True, None
    raise ValueError("side must be 'left' or 'right'")


def is_group(m: Monoid) -> bool:
    """True when every element has a two-sided inverse."""
    n = m.order
    for a in range(n):
        if not any(
            m.table[a][b] == 0 and m.table[b][a] == 0 for b in range(n)
        ):
            return False
    return True


def enumerate_monoids(order: int) -> Iterator[Monoid]:
    """All monoid tables of the given order with identity fixed at 0.

    The identity row and column are forced, the remaining (order-1)^2
    cells are filled depth-first in row-major order with associativity
    checked incrementally, so tables come out in lexicographic order.
    No isomorphism reduction is applied.
    """
    if order < 1:
        raise EmptySemigroupError("order must be positive")
    if order > ENUMERATION_BOUND:
        raise OrderTooLargeError(order, ENUMERATION_BOUND)
    labels = ("1", "e1", "e2", "e3")[:order]
    n = order
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    table: list[list[Optional[int]]] = [
        [j if i == 0 else (i if j == 0 else None) for j in range(n)]
        for i in range(n)
    ]

    def consistent() -> bool:
        # Checks every triple whose four lookups are already determined.
        for a in range(n):
            ta = table[a]
            for b in range(n):
                ab = ta[b]
                if ab is None:
                    continue
                tb = table[b]
                tab = table[ab]
                for c in range(n):
                    bc = tb[c]
                    if bc is None:
                        continue
                    left = tab[c]
                    right = ta[bc]
                    if left is not None and right is not None and left != right:
                        return False
        return True

    def fill(pos: int) -> Iterator[Monoid]:
        if pos == len(cells):
            yield build_from_table(labels, [tuple(row) for row in table])
            return
        i, j = cells[pos]
        for v in range(n):
            table[i][j] = v
            if consistent():
                yield from fill(pos + 1)
        table[i][j] = None

    yield from fill(0)
