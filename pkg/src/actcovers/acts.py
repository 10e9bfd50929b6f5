"""Right acts over a finite monoid, their maps, and right congruences.

An act is a finite set X with an action X x S -> X satisfying
x*1 = x and x*(s*t) = (x*s)*t.  Act maps are equivariant functions.
Right congruences are equivalence relations on the monoid itself that
are stable under right multiplication; their quotients are the cyclic
acts S/sigma, the main raw material for the cover scenarios.

Binary relations on S and right congruences are kept as distinct
types: several constructions (for instance the p*s = q*t relation
induced by a submonoid) produce relations that are not transitive, and
the failure itself is informative, so converting to a congruence is an
explicit, validated step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceededError, EmptySeedError
from .monoid import Monoid

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class Act:
    """Finite right act; action[x][s] is the index of x acted on by s."""

    monoid: Monoid
    elements: tuple[str, ...]
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        nx = len(self.elements)
        ns = self.monoid.order
        if nx == 0:
            raise ValueError("an act needs at least one element")
        if len(set(self.elements)) != nx:
            raise ValueError("act element labels must be distinct")
        if len(self.action) != nx or any(len(row) != ns for row in self.action):
            raise ValueError("action table shape must be |X| x |S|")
        for x, row in enumerate(self.action):
            for s, y in enumerate(row):
                if not isinstance(y, int) or not 0 <= y < nx:
                    raise ValueError(f"action[{x}][{s}] = {y!r} out of range")
        t = self.monoid.table
        for x in range(nx):
            if self.action[x][0] != x:
                raise ValueError(f"identity must fix element {x}")
            for s in range(ns):
                xs = self.action[x][s]
                for u in range(ns):
                    if self.action[x][t[s][u]] != self.action[xs][u]:
                        raise ValueError(
                            f"action law fails at x={x}, s={s}, u={u}"
                        )

    @property
    def size(self) -> int:
        return len(self.elements)

    def act(self, x: int, s: int) -> int:
        return self.action[x][s]


@dataclass(frozen=True)
class ActMap:
    """Equivariant map between two acts over the same monoid."""

    source: Act
    target: Act
    image: tuple[int, ...]

    def __post_init__(self):
        if self.source.monoid != self.target.monoid:
            raise ValueError("source and target must share the monoid")
        if len(self.image) != self.source.size:
            raise ValueError("image must list one target index per source element")
        for x, y in enumerate(self.image):
            if not 0 <= y < self.target.size:
                raise ValueError(f"image[{x}] = {y} out of range")
        for x in range(self.source.size):
            for s in range(self.source.monoid.order):
                if self.image[self.source.action[x][s]] != self.target.action[self.image[x]][s]:
                    raise ValueError(f"map is not equivariant at x={x}, s={s}")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def after(self, inner: "ActMap") -> "ActMap":
        """Composite self o inner."""
        if inner.target != self.source:
            raise ValueError("composition mismatch")
        return ActMap(inner.source, self.target,
                      tuple(self.image[y] for y in inner.image))

    @property
    def is_epimorphism(self) -> bool:
        return len(set(self.image)) == self.target.size

    @property
    def is_bijective(self) -> bool:
        return (self.source.size == self.target.size
                and len(set(self.image)) == self.target.size)

    def kernel_classes(self) -> tuple[tuple[int, ...], ...]:
        """Partition of the source elements by equal image."""
        fibers: dict[int, list[int]] = {}
        for x, y in enumerate(self.image):
            fibers.setdefault(y, []).append(x)
        return canonical_partition(fibers.values())


def identity_map(a: Act) -> ActMap:
    return ActMap(a, a, tuple(range(a.size)))


@dataclass(frozen=True)
class Relation:
    """Plain binary relation on the elements of a monoid."""

    monoid: Monoid
    pairs: frozenset

    def __post_init__(self):
        n = self.monoid.order
        for s, t in self.pairs:
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"relation pair {(s, t)} out of range")

    def holds(self, s: int, t: int) -> bool:
        return (s, t) in self.pairs


def all_pairs_relation(m: Monoid) -> Relation:
    n = m.order
    return Relation(m, frozenset((s, t) for s in range(n) for t in range(n)))


def canonical_partition(classes: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Members sorted within classes, classes sorted by least member."""
    normal = sorted(tuple(sorted(c)) for c in classes)
    return tuple(normal)


@dataclass(frozen=True)
class RightCongruence:
    """Partition of S stable under right multiplication.

    classes is canonical: members ascending, classes ordered by least
    member.  Construction validates both the partition property and
    right compatibility, so instances are trustworthy by construction.
    """

    monoid: Monoid
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.monoid.order
        seen: list[int] = []
        for c in self.classes:
            if not c:
                raise ValueError("empty congruence class")
            seen.extend(c)
        if sorted(seen) != list(range(n)):
            raise ValueError("classes must partition the monoid")
        if self.classes != canonical_partition(self.classes):
            raise ValueError("classes must be in canonical order")
        cls = [0] * n
        for ci, c in enumerate(self.classes):
            for x in c:
                cls[x] = ci
        t = self.monoid.table
        for c in self.classes:
            rep = c[0]
            for x in c[1:]:
                for u in range(n):
                    if cls[t[rep][u]] != cls[t[x][u]]:
                        raise ValueError(
                            f"not right compatible: pair ({rep},{x}) breaks at u={u}"
                        )
        object.__setattr__(self, "_class_of", tuple(cls))

    @property
    def class_of(self) -> tuple[int, ...]:
        return self._class_of

    def together(self, s: int, t: int) -> bool:
        return self._class_of[s] == self._class_of[t]

    def relation(self) -> Relation:
        pairs = set()
        for c in self.classes:
            for s in c:
                for t in c:
                    pairs.add((s, t))
        return Relation(self.monoid, frozenset(pairs))


def congruence_from_partition(m: Monoid, classes: Iterable[Iterable[int]]) -> RightCongruence:
    return RightCongruence(m, canonical_partition(classes))


def diagonal_congruence(m: Monoid) -> RightCongruence:
    return congruence_from_partition(m, [[i] for i in range(m.order)])


def full_congruence(m: Monoid) -> RightCongruence:
    return congruence_from_partition(m, [list(range(m.order))])


def relation_from_subset(m: Monoid, members: Sequence[int]) -> Relation:
    """Relation  s ~ t  iff  p*s = q*t  for some p, q in the given set.

    The set must contain the identity.  The result is always reflexive
    and symmetric but need not be transitive; validate with
    is_right_congruence before treating it as a congruence.
    """
    if 0 not in members:
        raise ValueError("the subset must contain the identity")
    n = m.order
    reach = [frozenset(m.table[p][s] for p in members) for s in range(n)]
    pairs = set()
    for s in range(n):
        for t in range(n):
            if reach[s] & reach[t]:
                pairs.add((s, t))
    return Relation(m, frozenset(pairs))


def is_right_congruence(m: Monoid, rel: Relation):
    """Check the four congruence laws; (verdict, witness).

    The witness names the first broken law under lexicographic scan:
    ("reflexivity", (s,)), ("symmetry", (s, t)),
    ("transitivity", (s, t, u)) with s~t, t~u but not s~u, or
    ("compatibility", (s, t, u)) with s~t but not s*u ~ t*u.
    """
    n = m.order
    holds = rel.holds
    for s in range(n):
        if not holds(s, s):
            return False, ("reflexivity", (s,))
    for s in range(n):
        for t in range(n):
            if holds(s, t) and not holds(t, s):
                return False, ("symmetry", (s, t))
    for s in range(n):
        for t in range(n):
            if not holds(s, t):
                continue
            for u in range(n):
                if holds(t, u) and not holds(s, u):
                    return False, ("transitivity", (s, t, u))
    t_ = m.table
    for s in range(n):
        for t in range(n):
            if not holds(s, t):
                continue
            for u in range(n):
                if not holds(t_[s][u], t_[t][u]):
                    return False, ("compatibility", (s, t, u))
    return True, None


def relation_to_congruence(m: Monoid, rel: Relation) -> RightCongruence:
    ok, witness = is_right_congruence(m, rel)
    if not ok:
        raise ValueError(f"relation is not a right congruence: {witness}")
    n = m.order
    unassigned = set(range(n))
    classes = []
    while unassigned:
        s = min(unassigned)
        c = sorted(t for t in range(n) if rel.holds(s, t))
        classes.append(c)
        unassigned.difference_update(c)
    return congruence_from_partition(m, classes)


def congruence_closure(m: Monoid, seed: Iterable[tuple[int, int]]) -> RightCongruence:
    """Least right congruence containing the seed pairs.

    Union-find with saturation: whenever two classes merge, the merged
    pair is propagated along right multiplication by every element.
    """
    seed = list(seed)
    if not seed:
        raise EmptySeedError("congruence closure needs at least one seed pair")
    n = m.order
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = list(seed)
    while work:
        s, t = work.pop()
        rs, rt = find(s), find(t)
        if rs == rt:
            continue
        if rt < rs:
            rs, rt = rt, rs
        parent[rt] = rs
        for u in range(n):
            work.append((m.table[s][u], m.table[t][u]))
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return congruence_from_partition(m, groups.values())


def pullback_relation(m: Monoid, tau, u: int) -> Relation:
    """Relation  s ~ t  iff  (u*s, u*t) lies in tau.

    tau may be a Relation or a RightCongruence.  Pulling a right
    congruence back along left multiplication always yields a right
    congruence again; the raw Relation is returned so callers can
    compare structurally.
    """
    holds = tau.together if isinstance(tau, RightCongruence) else tau.holds
    n = m.order
    t_ = m.table
    row = t_[u]
    pairs = frozenset(
        (s, t) for s in range(n) for t in range(n) if holds(row[s], row[t])
    )
    return Relation(m, pairs)


def regular_act(m: Monoid) -> Act:
    """The monoid acting on itself by right multiplication."""
    return Act(m, m.elements, m.table)


def one_element_act(m: Monoid) -> Act:
    return Act(m, ("theta",), (tuple(0 for _ in range(m.order)),))


def disjoint_union(acts: Sequence[Act], tags: Optional[Sequence[str]] = None) -> Act:
    if not acts:
        raise ValueError("disjoint union needs at least one act")
    monoid = acts[0].monoid
    if tags is None:
        tags = [str(i) for i in range(len(acts))]
    labels = []
    action = []
    offsets = []
    off = 0
    for a, tag in zip(acts, tags):
        if a.monoid != monoid:
            raise ValueError("all acts must share the monoid")
        offsets.append(off)
        labels += [f"{tag}:{lab}" for lab in a.elements]
        off += a.size
    for a, base in zip(acts, offsets):
        for row in a.action:
            action.append(tuple(base + y for y in row))
    return Act(monoid, tuple(labels), tuple(action))


def quotient_act(m: Monoid, sigma: RightCongruence) -> Act:
    """Cyclic act S/sigma; classes are labelled by their least member."""
    labels = tuple(f"[{m.label(c[0])}]" for c in sigma.classes)
    cls = sigma.class_of
    action = tuple(
        tuple(cls[m.table[c[0]][u]] for u in range(m.order))
        for c in sigma.classes
    )
    return Act(m, labels, action)


def quotient_map(m: Monoid, sigma: RightCongruence) -> ActMap:
    """Projection from the regular act onto S/sigma."""
    return ActMap(regular_act(m), quotient_act(m, sigma), sigma.class_of)


def canonical_projection(m: Monoid, sigma: RightCongruence, rho: RightCongruence) -> ActMap:
    """Projection S/sigma -> S/rho when sigma refines rho."""
    image = []
    for c in sigma.classes:
        targets = {rho.class_of[x] for x in c}
        if len(targets) != 1:
            raise ValueError("sigma does not refine rho")
        image.append(targets.pop())
    return ActMap(quotient_act(m, sigma), quotient_act(m, rho), tuple(image))


def projection_to_one(a: Act) -> ActMap:
    return ActMap(a, one_element_act(a.monoid), tuple(0 for _ in range(a.size)))


def subact_closure(a: Act, seed: Iterable[int]) -> tuple[int, ...]:
    """Indices of the least subact containing the seed elements."""
    seed = list(seed)
    if not seed:
        raise EmptySeedError("subact closure needs a nonempty seed")
    seen = set(seed)
    frontier = list(seed)
    while frontier:
        x = frontier.pop()
        for s in range(a.monoid.order):
            y = a.action[x][s]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return tuple(sorted(seen))


def generating_set(a: Act) -> tuple[int, ...]:
    """Small generating set, found by greedy removal in index order."""
    gens = list(range(a.size))
    for x in range(a.size):
        if len(gens) == 1:
            break
        rest = [g for g in gens if g != x]
        if x in gens and len(subact_closure(a, rest)) == a.size:
            gens = rest
    return tuple(gens)


def _extend(a: Act, b: Act, gens: tuple[int, ...], images: tuple[int, ...]):
    """Grow generator images to a full equivariant map, or None."""
    f: list[Optional[int]] = [None] * a.size
    for g, y in zip(gens, images):
        if f[g] is not None and f[g] != y:
            return None
        f[g] = y
    work = list(gens)
    while work:
        x = work.pop()
        fx = f[x]
        for s in range(a.monoid.order):
            y = a.action[x][s]
            fy = b.action[fx][s]
            if f[y] is None:
                f[y] = fy
                work.append(y)
            elif f[y] != fy:
                return None
    if any(v is None for v in f):
        return None
    return tuple(f)


def homs(a: Act, b: Act, budget: int = DEFAULT_BUDGET) -> list[ActMap]:
    """All equivariant maps a -> b, in deterministic order.

    Backtracks over images of a greedy generating set of a; candidates
    are enumerated lexicographically, so the list order is stable.
    """
    if a.monoid != b.monoid:
        raise ValueError("acts must share the monoid")
    gens = generating_set(a)
    needed = b.size ** len(gens)
    if needed > budget:
        raise BudgetExceededError(needed, budget)
    out = []
    for images in itertools.product(range(b.size), repeat=len(gens)):
        f = _extend(a, b, gens, images)
        if f is not None:
            out.append(ActMap(a, b, f))
    return out


def _translation_profile(a: Act):
    """Cheap isomorphism invariants, by monoid element."""
    profile = []
    for s in range(a.monoid.order):
        col = [a.action[x][s] for x in range(a.size)]
        fixed = sum(1 for x, y in enumerate(col) if x == y)
        profile.append((len(set(col)), fixed))
    return tuple(profile)


def are_isomorphic(a: Act, b: Act, budget: int = DEFAULT_BUDGET) -> Optional[ActMap]:
    """First bijective equivariant map a -> b, or None.

    Uses translation-image and fixed-point counts as a quick filter,
    then the same deterministic backtracking as homs.
    """
    if a.monoid != b.monoid:
        raise ValueError("acts must share the monoid")
    if a.size != b.size:
        return None
    if _translation_profile(a) != _translation_profile(b):
        return None
    gens = generating_set(a)
    needed = b.size ** len(gens)
    if needed > budget:
        raise BudgetExceededError(needed, budget)
    for images in itertools.product(range(b.size), repeat=len(gens)):
        if len(set(images)) != len(images):
            continue
        f = _extend(a, b, gens, images)
        if f is not None and len(set(f)) == a.size:
            return ActMap(a, b, f)
    return None


def cyclic_iso_witness(m: Monoid, sigma: RightCongruence, tau: RightCongruence) -> Optional[int]:
    """Least u certifying S/sigma isomorphic to S/tau, or None.

    The certificate is: pulling tau back along left multiplication by u
    gives exactly sigma, and the class of u generates S/tau.  The first
    condition makes [s] -> [u*s] well defined and injective, the second
    makes it onto, so existence of such a u is equivalent to the two
    cyclic acts being isomorphic.
    """
    sigma_pairs = sigma.relation().pairs
    qt = quotient_act(m, tau)
    for u in range(m.order):
        if pullback_relation(m, tau, u).pairs != sigma_pairs:
            continue
        if len(subact_closure(qt, [tau.class_of[u]])) == qt.size:
            return u
    return None


def all_right_congruences(m: Monoid) -> list[RightCongruence]:
    """Every right congruence, from set partitions in canonical order.

    Partitions are generated as restricted growth strings, so the
    output order is deterministic.  Intended for monoids of desk size.
    """
    n = m.order
    out = []
    for rgs in _restricted_growth_strings(n):
        groups: dict[int, list[int]] = {}
        for x, g in enumerate(rgs):
            groups.setdefault(g, []).append(x)
        classes = canonical_partition(groups.values())
        if _right_compatible(m, classes):
            out.append(RightCongruence(m, classes))
    return out


def _restricted_growth_strings(n: int):
    rgs = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(rgs)
            return
        for v in range(top + 2):
            rgs[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def _right_compatible(m: Monoid, classes) -> bool:
    n = m.order
    cls = [0] * n
    for ci, c in enumerate(classes):
        for x in c:
            cls[x] = ci
    t = m.table
    for c in classes:
        rep = c[0]
        for x in c[1:]:
            for u in range(n):
                if cls[t[rep][u]] != cls[t[x][u]]:
                    return False
    return True
