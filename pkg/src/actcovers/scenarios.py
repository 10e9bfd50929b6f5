"""Named end-to-end scenarios, each a list of checked assertions.

Every scenario is deterministic given its parameters (kruml also takes
a sampling seed) and reports one (description, verdict, witness) entry
per assertion.  Witnesses are JSON-able structures built from element
labels so failures are auditable from the report alone.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from .acts import (
    RightCongruence,
    all_right_congruences,
    are_isomorphic,
    canonical_partition,
    canonical_projection,
    congruence_from_partition,
    cyclic_iso_witness,
    is_right_congruence,
    one_element_act,
    projection_to_one,
    pullback_relation,
    quotient_act,
    Relation,
    relation_from_subset,
    relation_to_congruence,
)
from .covers import is_coessential, search_sf_coessential_covers, unique_up_to_iso
from .errors import OrderTooLargeError, TooFewSamplesError
from .flatness import is_strongly_flat
from .kruml import (
    FinXSystem,
    is_normal,
    kmul,
    knormalize,
    knormalize_random,
    left_cancel_test,
    normal_words,
    right_cancellation_counterexamples,
)
from .monoid import (
    ENUMERATION_BOUND,
    enumerate_monoids,
    is_cancellative,
    is_group,
    qiao_wei_presentation,
    qiao_wei_truncated,
    right_zero_adjoin_one,
)

KRUML_SAMPLE_FLOOR = 100


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class Assertion:
    desc: str
    ok: bool
    witness: object = None


@dataclass(frozen=True)
class ScenarioReport:
    scenario: str
    assertions: tuple
    seed: Optional[int]
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return all(a.ok for a in self.assertions)

    def to_doc(self) -> dict:
        return {
            "scenario": self.scenario,
            "assertions": [
                {"desc": a.desc, "ok": a.ok, "witness": _jsonable(a.witness)}
                for a in self.assertions
            ],
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def canonical_bytes(self) -> bytes:
        """Report bytes with the timing field dropped; two runs with the
        same parameters must produce identical output here."""
        doc = self.to_doc()
        del doc["elapsed_ms"]
        return json.dumps(doc, sort_keys=True).encode()

    def render(self) -> str:
        lines = [f"scenario: {self.scenario}"]
        for a in self.assertions:
            mark = "ok " if a.ok else "FAIL"
            lines.append(f"  [{mark}] {a.desc}")
            if a.witness is not None:
                lines.append(f"         witness: {_jsonable(a.witness)!r}")
        good = sum(1 for a in self.assertions if a.ok)
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"result: {verdict} ({good}/{len(self.assertions)} assertions)")
        return "\n".join(lines)


def _finish(name: str, assertions, seed, started) -> ScenarioReport:
    elapsed = (time.perf_counter() - started) * 1000.0
    return ScenarioReport(name, tuple(assertions), seed, elapsed)


def run_rightzero(n: int) -> ScenarioReport:
    """Right-zero semigroup with an identity adjoined: the n translation
    congruences give n pairwise-isomorphic strongly flat coessential
    quotients over the one-element act, and nothing else does."""
    if not 1 <= n <= 5:
        raise ValueError("n must be between 1 and 5")
    started = time.perf_counter()
    out = []
    m = right_zero_adjoin_one(n)
    theta = one_element_act(m)

    sigmas = []
    cong_ok = True
    cong_witness = None
    for i in range(1, n + 1):
        rel = relation_from_subset(m, (0, i))
        ok, why = is_right_congruence(m, rel)
        if not ok:
            cong_ok = False
            cong_witness = (m.label(i), why)
            break
        sigmas.append(relation_to_congruence(m, rel))
    out.append(Assertion(
        "each subset-translation relation sigma_{z_i} is a right congruence",
        cong_ok, cong_witness))
    if not cong_ok:
        return _finish(f"rightzero(n={n})", out, None, started)

    distinct = all(
        s1.classes != s2.classes for s1, s2 in combinations(sigmas, 2)
    )
    out.append(Assertion(
        "the sigma_{z_i} are pairwise distinct as partitions",
        distinct,
        [[ [m.label(x) for x in k] for k in s.classes] for s in sigmas]))

    quotients = [quotient_act(m, s) for s in sigmas]
    flat_reports = [is_strongly_flat(q) for q in quotients]
    bad_flat = [
        (f"z{i + 1}", ("P", r.p_witness) if not r.condition_p else ("E", r.e_witness))
        for i, r in enumerate(flat_reports) if not r.strongly_flat
    ]
    out.append(Assertion(
        "every quotient S/sigma_{z_i} is strongly flat",
        not bad_flat, bad_flat or None))

    coess = [is_coessential(projection_to_one(q)) for q in quotients]
    bad_coess = [
        (f"z{i + 1}", r.witness) for i, r in enumerate(coess) if not r.verdict
    ]
    out.append(Assertion(
        "every projection S/sigma_{z_i} -> theta is coessential",
        not bad_coess, bad_coess or None))

    witnesses = []
    iso_ok = True
    for (i, s1), (j, s2) in combinations(enumerate(sigmas), 2):
        u = cyclic_iso_witness(m, s1, s2)
        structural = are_isomorphic(quotients[i], quotients[j])
        if u is None or structural is None:
            iso_ok = False
            witnesses.append((f"z{i + 1}", f"z{j + 1}", None))
        else:
            witnesses.append((f"z{i + 1}", f"z{j + 1}", m.label(u)))
    out.append(Assertion(
        "all quotients are pairwise isomorphic, each certified by a "
        "translation witness and by an explicit bijection",
        iso_ok, witnesses or None))

    found = search_sf_coessential_covers(m, theta)
    expected = {s.classes for s in sigmas}
    got = {s.classes for s, _ in found}
    out.append(Assertion(
        "searching every right congruence finds exactly the n translation "
        "congruences as strongly flat coessential quotients over theta",
        got == expected and len(found) == n,
        [[ [m.label(x) for x in k] for k in s.classes] for s, _ in found]))

    out.append(Assertion(
        "the found quotients are unique up to isomorphism",
        unique_up_to_iso(m, [s for s, _ in found]),
        None))
    return _finish(f"rightzero(n={n})", out, None, started)


def _qiao_sigma(m, n):
    """The subset-translation congruences sigma_0..sigma_n, sigma_i
    built from {1} together with the cyclic submonoid of x_i."""
    sigmas = []
    for i in range(n + 1):
        gen = m.index(f"x{i}^1")
        members = m.submonoid_closure((0, gen))
        rel = relation_from_subset(m, members)
        ok, why = is_right_congruence(m, rel)
        if not ok:
            return None, (i, why)
        sigmas.append(relation_to_congruence(m, rel))
    return sigmas, None


def run_qiao_wei(n: int, cap: Optional[int] = None) -> ScenarioReport:
    """Truncated model of the two-generator-family monoid: the cyclic
    quotients S/sigma_i (i >= 1) are strongly flat, coessential over
    S/rho, and pairwise isomorphic, so they never witness non-uniqueness.

    Two statements are checked in corrected form.  The power x_j^3
    collapses to x_j^2 in any model of the relations (derivation in the
    monoid module), which fixes the element count; and the pullback of
    sigma_j along x_0 is the kernel of left translation by x_0, which
    is strictly finer than the full relation once cap >= 2.
    """
    if not 1 <= n <= 4:
        raise ValueError("n must be between 1 and 4")
    if cap is None:
        cap = n + 1
    if not 1 <= cap <= 6:
        raise ValueError("cap must be between 1 and 6")
    started = time.perf_counter()
    out = []
    m = qiao_wei_truncated(n, cap)

    expected_order = 1 + cap + sum(min(k, 2) for k in range(1, n + 1))
    out.append(Assertion(
        "element count equals 1 + cap + sum(min(k,2)): one unit, the x_0 "
        "powers, and the stabilized powers of each x_k",
        m.order == expected_order, (m.order, expected_order)))

    pres = qiao_wei_presentation(n, cap)
    assignment = tuple(m.index(f"x{i}^1") for i in range(n + 1))
    violated = pres.holds_in(m, assignment)
    out.append(Assertion(
        "all defining relations hold in the multiplication table",
        violated is None, violated))

    zero = m.power(m.index("x0^1"), cap)
    two_sided = all(
        m.mul(s, zero) == zero and m.mul(zero, s) == zero
        for s in range(m.order)
    )
    out.append(Assertion(
        "x_0^cap is a two-sided zero", two_sided, m.label(zero)))

    sigmas, bad = _qiao_sigma(m, n)
    out.append(Assertion(
        "each sigma_i (0 <= i <= n) is a right congruence",
        sigmas is not None, bad))
    if sigmas is None:
        return _finish(f"qiao-wei(n={n},cap={cap})", out, None, started)

    out.append(Assertion(
        "the sigma_i are pairwise distinct",
        all(a.classes != b.classes for a, b in combinations(sigmas, 2)),
        None))

    out.append(Assertion(
        "sigma_0 is the full relation (x_0^cap reaches every pair)",
        len(sigmas[0].classes) == 1, None))

    pull_ok = True
    pull_bad = []
    for j in range(2, n + 1):
        for i in range(1, j):
            got = pullback_relation(m, sigmas[j], m.index(f"x{i}^1"))
            if got.pairs != sigmas[i].relation().pairs:
                pull_ok = False
                pull_bad.append((i, j))
    out.append(Assertion(
        "pullback of sigma_j along x_i equals sigma_i for 1 <= i < j",
        pull_ok, pull_bad or None))

    x0 = m.index("x0^1")
    kernel_classes = {}
    for s in range(m.order):
        kernel_classes.setdefault(m.table[x0][s], []).append(s)
    kernel = congruence_from_partition(
        m, canonical_partition(kernel_classes.values()))
    k_ok = True
    k_bad = []
    for j in range(1, n + 1):
        got = pullback_relation(m, sigmas[j], x0)
        if got.pairs != kernel.relation().pairs:
            k_ok = False
            k_bad.append(j)
    proper = cap < 2 or len(kernel.classes) > 1
    out.append(Assertion(
        "pullback of sigma_j along x_0 equals the kernel of left "
        "translation by x_0 (strictly finer than sigma_0 when cap >= 2)",
        k_ok and proper,
        k_bad or [[m.label(x) for x in k] for k in kernel.classes]))

    ones = [s for s in range(m.order)
            if not m.label(s).startswith("x0^")]
    zeros = [s for s in range(m.order) if m.label(s).startswith("x0^")]
    rho_rel = Relation(m, frozenset(
        [(s, t) for s in ones for t in ones]
        + [(s, t) for s in zeros for t in zeros]))
    rho_ok, rho_why = is_right_congruence(m, rho_rel)
    out.append(Assertion(
        "rho (x_0 powers in one class, everything else in the other) "
        "is a right congruence", rho_ok, rho_why))
    if not rho_ok:
        return _finish(f"qiao-wei(n={n},cap={cap})", out, None, started)
    rho = relation_to_congruence(m, rho_rel)

    rz_ok = True
    rz_wit = []
    for j in range(1, n + 1):
        z = m.power(m.index(f"x{j}^1"), j)
        if z not in ones or any(m.mul(s, z) != z for s in ones):
            rz_ok = False
        rz_wit.append((f"x{j}^{j}", m.label(z)))
    out.append(Assertion(
        "x_j^j is a right zero inside the class of 1", rz_ok, rz_wit))

    quotients = [quotient_act(m, s) for s in sigmas]
    flat_bad = []
    for i in range(1, n + 1):
        r = is_strongly_flat(quotients[i])
        if not r.strongly_flat:
            flat_bad.append((i, r.p_witness, r.e_witness))
    out.append(Assertion(
        "every S/sigma_i (i >= 1) is strongly flat",
        not flat_bad, flat_bad or None))

    coess_bad = []
    for i in range(1, n + 1):
        g = canonical_projection(m, sigmas[i], rho)
        r = is_coessential(g)
        if not r.verdict:
            coess_bad.append((i, r.witness))
    out.append(Assertion(
        "every projection S/sigma_i -> S/rho (i >= 1) is coessential",
        not coess_bad, coess_bad or None))

    iso_ok = True
    iso_wit = []
    for i, j in combinations(range(1, n + 1), 2):
        u = cyclic_iso_witness(m, sigmas[i], sigmas[j])
        structural = are_isomorphic(quotients[i], quotients[j])
        if u is None or structural is None:
            iso_ok = False
            iso_wit.append((f"sigma_{i}", f"sigma_{j}", None))
        else:
            iso_wit.append((f"sigma_{i}", f"sigma_{j}", m.label(u)))
    out.append(Assertion(
        "the S/sigma_i (i >= 1) are pairwise isomorphic with "
        "translation witnesses", iso_ok, iso_wit or None))

    out.append(Assertion(
        "S/sigma_0 is the one-element act and is not isomorphic to "
        "S/sigma_1",
        quotients[0].size == 1
        and are_isomorphic(quotients[0], quotients[1]) is None,
        None))
    return _finish(f"qiao-wei(n={n},cap={cap})", out, None, started)


def _random_word(rng: random.Random) -> tuple:
    return tuple(rng.randint(0, 8) for _ in range(rng.randint(0, 10)))


def run_kruml(seed: int, samples: int = 1000) -> ScenarioReport:
    """Rewriting monoid with a_m a_i -> a_i a_{m-1} for m > i: unique
    sorted normal forms, left cancellative, not right cancellative, and
    its subset-indexed directed system is path independent."""
    if samples < KRUML_SAMPLE_FLOOR:
        raise TooFewSamplesError(samples, KRUML_SAMPLE_FLOOR)
    started = time.perf_counter()
    out = []
    rng = random.Random(seed)

    mismatch = None
    for _ in range(samples):
        w = _random_word(rng)
        if knormalize(w) != knormalize_random(w, rng):
            mismatch = list(w)
            break
    out.append(Assertion(
        f"normal form is independent of reduction order ({samples} samples)",
        mismatch is None, mismatch))

    shape_bad = None
    for _ in range(samples):
        w = _random_word(rng)
        nf = knormalize(w)
        if not is_normal(nf) or knormalize(nf) != nf:
            shape_bad = list(w)
            break
    out.append(Assertion(
        "normal forms are nondecreasing and normalization is idempotent "
        f"({samples} samples)",
        shape_bad is None, shape_bad))

    cancel_bad = None
    for _ in range(samples):
        w, u, v = _random_word(rng), _random_word(rng), _random_word(rng)
        if not left_cancel_test(w, u, v):
            cancel_bad = (list(w), list(u), list(v))
            break
    out.append(Assertion(
        f"sampled left cancellation: w*u = w*v only when u = v "
        f"({samples} samples)",
        cancel_bad is None, cancel_bad))

    inj_bad = None
    for w in normal_words(6, 8):
        seen = {}
        for i in range(9):
            r = kmul(w, (i,))
            if r in seen:
                inj_bad = (list(w), seen[r], i)
                break
            seen[r] = i
        if inj_bad:
            break
    out.append(Assertion(
        "appending distinct letters to any normal word of length <= 6 "
        "gives distinct normal forms (exhaustive, letters a_0..a_8)",
        inj_bad is None, inj_bad))

    ctrex = right_cancellation_counterexamples(2)
    out.append(Assertion(
        "right cancellation fails: bounded search finds a_1*a_1 = a_2*a_1 "
        "and the least counterexample a_0*a_0 = a_1*a_0",
        (1, 2, 1) in ctrex and ctrex and ctrex[0] == (0, 1, 0),
        ctrex))

    fs = FinXSystem(("x", "y", "z", "t"))
    subsets = []
    for r in range(5):
        subsets += [tuple(c) for c in combinations(fs.ground, r)]
    words4 = list(normal_words(4, 4))
    path_bad = None
    for large in subsets:
        smalls = [s for s in subsets if set(s) <= set(large)]
        for small in smalls:
            missing = [z for z in large if z not in small]
            for w in words4:
                canonical = fs.transition(small, large, w)
                for order in permutations(missing):
                    cur, word = small, knormalize(w)
                    for z in order:
                        nxt = tuple(sorted(set(cur) | {z}, key=fs._rank.get))
                        word = fs.transition(cur, nxt, word)
                        cur = nxt
                    if word != canonical:
                        path_bad = (small, large, order, list(w))
                        break
                if path_bad:
                    break
            if path_bad:
                break
        if path_bad:
            break
    out.append(Assertion(
        "subset transitions are path independent: any insertion order "
        "gives the same map (exhaustive, |X| <= 4, words of length <= 4)",
        path_bad is None, path_bad))

    beta_bad = None
    for w in words4:
        e_x = fs.element(("x",), w)
        e_y = fs.element(("y",), w)
        if not fs.colimit_equal(e_x, fs.element(("x", "y"), kmul((1,), w))):
            beta_bad = ("x-side", list(w))
            break
        if not fs.colimit_equal(e_y, fs.element(("x", "y"), kmul((0,), w))):
            beta_bad = ("y-side", list(w))
            break
    out.append(Assertion(
        "cocone identities: ({x}, w) meets ({x,y}, a_1*w) and ({y}, w) "
        "meets ({x,y}, a_0*w) in the colimit (exhaustive, length <= 4)",
        beta_bad is None, beta_bad))

    distinct_inj = not fs.colimit_equal(
        fs.element(("x",), ()), fs.element(("y",), ()))
    out.append(Assertion(
        "the singleton injections at x and y differ at the empty word",
        distinct_inj,
        [list(fs.transition(("x",), ("x", "y"), ())),
         list(fs.transition(("y",), ("x", "y"), ()))]))

    eq_bad = None
    for w in normal_words(8, 8):
        if kmul(w, (0,)) == kmul(w, (1,)):
            eq_bad = list(w)
            break
    out.append(Assertion(
        "no word of length <= 8 equalizes the letter maps of a_0 and a_1",
        eq_bad is None, eq_bad))
    return _finish(f"kruml(samples={samples})", out, seed, started)


def run_lemma(max_order: int) -> ScenarioReport:
    """Every right-cancellative finite monoid is a group, exhaustively
    over all multiplication tables up to the given order."""
    if max_order > ENUMERATION_BOUND:
        raise OrderTooLargeError(max_order, ENUMERATION_BOUND)
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    started = time.perf_counter()
    out = []
    for k in range(1, max_order + 1):
        examined = 0
        cancellative = 0
        bad = None
        group_bad = None
        for m in enumerate_monoids(k):
            examined += 1
            right, _ = is_cancellative(m, "right")
            if right:
                cancellative += 1
                if not is_group(m):
                    bad = [list(row) for row in m.table]
                    break
            if is_group(m) and not (
                is_cancellative(m, "left")[0] and is_cancellative(m, "right")[0]
            ):
                group_bad = [list(row) for row in m.table]
                break
        out.append(Assertion(
            f"order {k}: every right-cancellative monoid is a group "
            f"({examined} examined, {cancellative} right-cancellative)",
            bad is None and group_bad is None,
            bad or group_bad))
    return _finish(f"lemma(max_order={max_order})", out, None, started)
