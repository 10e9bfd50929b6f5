"""Word monoid on a0, a1, ... with ai*aj = a(j+1)*ai (i <= j), and the
directed system of copies indexed by finite subsets of a label list.

knormalize is cross-checked against an inline rightmost-redex rewriter:
confluence means the strategies must agree on every input.
"""

import itertools
import random

import pytest

from actcovers import (
    AlreadyMemberError,
    ColimitElement,
    FinXSystem,
    NotSubsetError,
    is_normal,
    kmul,
    knormalize,
    knormalize_random,
    left_cancel_test,
    normal_words,
    right_cancellation_counterexamples,
)


def rightmost_normalize(word):
    w = list(word)
    while True:
        for pos in range(len(w) - 2, -1, -1):
            if w[pos] > w[pos + 1]:
                w[pos], w[pos + 1] = w[pos + 1], w[pos] - 1
                break
        else:
            return tuple(w)


class TestNormalize:
    def test_frozen_examples(self):
        assert knormalize((1, 0)) == (0, 0)
        assert knormalize((3, 1, 2)) == (1, 2, 2)
        assert knormalize((2, 2, 0)) == (0, 1, 1)
        assert knormalize(()) == ()
        assert knormalize((0, 1, 2)) == (0, 1, 2)

    def test_defining_relation(self):
        # ai*aj = a(j+1)*ai for i <= j
        for i in range(4):
            for j in range(i, 4):
                assert kmul((i,), (j,)) == knormalize((j + 1, i))

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            knormalize((1, -1))

    def test_output_is_normal(self):
        rng = random.Random(7)
        for _ in range(300):
            w = tuple(rng.randrange(6) for _ in range(rng.randrange(9)))
            assert is_normal(knormalize(w))

    def test_agrees_with_rightmost_strategy(self):
        rng = random.Random(3)
        for _ in range(500):
            w = tuple(rng.randrange(6) for _ in range(rng.randrange(9)))
            assert knormalize(w) == rightmost_normalize(w)

    def test_agrees_with_random_strategy(self):
        rng = random.Random(5)
        for _ in range(300):
            w = tuple(rng.randrange(5) for _ in range(rng.randrange(8)))
            assert knormalize(w) == knormalize_random(w, rng)

    def test_exhaustive_short_words(self):
        for n in range(5):
            for w in itertools.product(range(4), repeat=n):
                assert knormalize(w) == rightmost_normalize(w)


class TestMultiplication:
    def test_associative_on_samples(self):
        rng = random.Random(13)
        for _ in range(200):
            u, v, w = (
                tuple(rng.randrange(4) for _ in range(rng.randrange(5)))
                for _ in range(3)
            )
            assert kmul(kmul(u, v), w) == kmul(u, kmul(v, w))

    def test_identity(self):
        assert kmul((), (2, 1)) == knormalize((2, 1))
        assert kmul((2, 1), ()) == knormalize((2, 1))

    def test_left_cancellative_on_samples(self):
        rng = random.Random(17)
        for _ in range(300):
            w, u, v = (
                tuple(rng.randrange(4) for _ in range(rng.randrange(5)))
                for _ in range(3)
            )
            assert left_cancel_test(w, u, v)

    def test_not_right_cancellative(self):
        assert kmul((0,), (0,)) == kmul((1,), (0,)) == (0, 0)
        assert knormalize((0,)) != knormalize((1,))

    def test_counterexample_enumeration(self):
        assert right_cancellation_counterexamples(2) == [(0, 1, 0), (1, 2, 1)]


class TestNormalWords:
    # nondecreasing index tuples: counts are binomial C(max_index+1+L, L)
    COUNTS = [((6, 8), 5005), ((8, 8), 24310), ((4, 4), 126)]

    @pytest.mark.parametrize("args,count", COUNTS)
    def test_frozen_counts(self, args, count):
        assert sum(1 for _ in normal_words(*args)) == count

    def test_prefix_order_head(self):
        head = list(itertools.islice(normal_words(3, 2), 10))
        assert head == [
            (), (0,), (0, 0), (0, 0, 0), (0, 0, 1), (0, 0, 2),
            (0, 1), (0, 1, 1), (0, 1, 2), (0, 2),
        ]

    def test_all_normal_and_distinct(self):
        words = list(normal_words(5, 3))
        assert len(words) == len(set(words))
        assert all(is_normal(w) for w in words)


class TestFinXSystem:
    FS = FinXSystem(("x", "y", "z", "t"))

    def test_insertion_indices(self):
        assert self.FS.insertion_index(("x",), "y") == 1
        assert self.FS.insertion_index(("y",), "x") == 0
        assert self.FS.insertion_index(("x", "y", "z"), "t") == 3

    def test_transitions(self):
        fs = self.FS
        assert fs.transition(("x",), ("x", "y"), ()) == (1,)
        assert fs.transition(("y",), ("x", "y"), ()) == (0,)
        assert fs.transition(("x",), ("x", "y", "z", "t"), ()) == (1, 1, 1)
        assert fs.transition((), ("x", "y", "z", "t"), ()) == (0, 0, 0, 0)
        assert fs.transition(("x",), ("x", "y", "z", "t"), (2,)) == (1, 1, 1, 2)

    def test_transition_normalizes_input(self):
        assert self.FS.transition(("x",), ("x",), (1, 0)) == (0, 0)

    def test_insertion_path_independence_exhaustive(self):
        fs = self.FS
        for w in ((), (0,), (0, 1), (2, 0)):
            target = fs.transition(("x",), ("x", "y", "z", "t"), w)
            for perm in itertools.permutations(("y", "z", "t")):
                cur, word = ["x"], knormalize(w)
                for lab in perm:
                    i = fs.insertion_index(cur, lab)
                    word = knormalize((i,) + word)
                    cur.append(lab)
                assert word == target

    def test_beta_identities(self):
        # prepending a1 in the copy at {x,y} is the same colimit element
        # as the original word in the copy at {x}; prepending a0 matches
        # the copy at {y}
        fs = self.FS
        for w in ((), (0,), (1, 2), (0, 0, 3)):
            nw = knormalize(w)
            assert fs.colimit_equal(
                fs.element(("x", "y"), (1,) + nw), fs.element(("x",), nw))
            assert fs.colimit_equal(
                fs.element(("x", "y"), (0,) + nw), fs.element(("y",), nw))

    def test_colimit_equal_negative(self):
        fs = self.FS
        assert not fs.colimit_equal(
            fs.element(("x",), ()), fs.element(("y",), ()))

    def test_colimit_equal_reflexive_across_subsets(self):
        fs = self.FS
        e1 = fs.element(("x",), (0,))
        e2 = fs.element(("x", "y"), fs.transition(("x",), ("x", "y"), (0,)))
        assert fs.colimit_equal(e1, e2)

    def test_element_sorts_subset_and_normalizes(self):
        e = self.FS.element(("y", "x"), (1, 0))
        assert e == ColimitElement(("x", "y"), (0, 0))

    def test_errors(self):
        fs = self.FS
        with pytest.raises(ValueError):
            fs.element(("w",), ())
        with pytest.raises(ValueError):
            fs.insertion_index(("x",), "w")
        with pytest.raises(AlreadyMemberError):
            fs.insertion_index(("x", "y"), "x")
        with pytest.raises(NotSubsetError):
            fs.transition(("x", "z"), ("x", "y"), ())
        with pytest.raises(ValueError):
            FinXSystem(("x", "x"))
