"""Coessential epimorphisms and covers relative to a finite family.

An epimorphism g: P -> A is coessential when no proper subact of P is
still mapped onto A.  Relative to a finite family F of acts (standing
in for a class of interest that is too big to quantify over):

* g is a precover wrt F when every map g': P' -> A with P' in F
  factors as g' = g o f for some f: P' -> P;
* g is a cover wrt F when it is a precover and every endomorphism f of
  P with g o f = g is bijective.

The search routine enumerates every right congruence sigma of the
monoid and keeps those whose cyclic quotient S/sigma is strongly flat
and admits a coessential epimorphism onto the target.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .acts import (
    Act,
    ActMap,
    RightCongruence,
    all_right_congruences,
    are_isomorphic,
    cyclic_iso_witness,
    homs,
    quotient_act,
    subact_closure,
)
from .errors import MonoidTooLargeError, NotEpimorphismError
from .flatness import is_strongly_flat
from .monoid import Monoid

SEARCH_ORDER_BOUND = 8


@dataclass(frozen=True)
class CoverReport:
    kind: str
    verdict: bool
    witness: Optional[object]


def is_coessential(g: ActMap) -> CoverReport:
    """Decide coessentiality of an epimorphism.

    Iterates over choice functions picking one preimage per target
    element; the subact generated by any such choice still maps onto
    the target, so g is coessential iff every one of these closures is
    the whole source.  The witness is the first proper subact found
    (fibers scanned in target order, preimages in source order).
    """
    src, tgt = g.source, g.target
    fibers = [[x for x in range(src.size) if g.image[x] == t] for t in range(tgt.size)]
    for t, fiber in enumerate(fibers):
        if not fiber:
            raise NotEpimorphismError(t)
    for choice in itertools.product(*fibers):
        closed = subact_closure(src, choice)
        if len(closed) < src.size:
            return CoverReport("coessential", False, closed)
    return CoverReport("coessential", True, None)


def is_precover_wrt(g: ActMap, family: Sequence[Act]) -> CoverReport:
    """Factorisation test against every map from the family into the
    target; witness is (family index, unfactorable map image)."""
    for idx, probe in enumerate(family):
        candidates = homs(probe, g.source)
        for gp in homs(probe, g.target):
            if not any(g.after(f) == gp for f in candidates):
                return CoverReport("precover", False, (idx, gp.image))
    return CoverReport("precover", True, None)


def is_cover_wrt(g: ActMap, family: Sequence[Act]) -> CoverReport:
    """Precover whose g-compatible endomorphisms are all bijective;
    witness is either the precover witness or a non-bijective image."""
    pre = is_precover_wrt(g, family)
    if not pre.verdict:
        return CoverReport("cover", False, pre.witness)
    for f in homs(g.source, g.source):
        if g.after(f) == g and not f.is_bijective:
            return CoverReport("cover", False, f.image)
    return CoverReport("cover", True, None)


def search_sf_coessential_covers(
    m: Monoid, target: Act, max_order: int = SEARCH_ORDER_BOUND
) -> list[tuple[RightCongruence, ActMap]]:
    """All right congruences sigma with S/sigma strongly flat and
    coessentially epimorphic onto the target (a cyclic act).

    Returns (sigma, g) pairs in congruence enumeration order, g being
    the first coessential epimorphism in hom order.  Bounded to small
    monoids because every set partition is inspected.
    """
    if m.order > max_order:
        raise MonoidTooLargeError(m.order, max_order)
    if len(subact_closure(target, [_least_generator(target)])) != target.size:
        raise ValueError("target must be cyclic")
    found = []
    for sigma in all_right_congruences(m):
        q = quotient_act(m, sigma)
        if not is_strongly_flat(q).strongly_flat:
            continue
        for g in homs(q, target):
            if g.is_epimorphism and is_coessential(g).verdict:
                found.append((sigma, g))
                break
    return found


def _least_generator(a: Act) -> int:
    for x in range(a.size):
        if len(subact_closure(a, [x])) == a.size:
            return x
    return 0


def unique_up_to_iso(m: Monoid, congruences: Sequence[RightCongruence]) -> bool:
    """Whether all the listed cyclic quotients are pairwise isomorphic,
    certified by cyclic_iso_witness and cross-checked structurally."""
    for s1, s2 in itertools.combinations(congruences, 2):
        witness = cyclic_iso_witness(m, s1, s2)
        structural = are_isomorphic(quotient_act(m, s1), quotient_act(m, s2))
        if (witness is None) != (structural is None):
            raise AssertionError(
                "witness search and structural search disagree"
            )
        if witness is None:
            return False
    return True
