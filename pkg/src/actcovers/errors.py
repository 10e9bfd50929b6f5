"""Exception types shared by the actcovers modules.

Every structural validation failure carries the offending indices so a
caller can point at the exact cell or triple that broke the contract.
"""

from __future__ import annotations


class ActcoversError(Exception):
    """Base class for all library-specific errors."""


class NotAssociativeError(ActcoversError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(
            f"table is not associative: (e{a}*e{b})*e{c} != e{a}*(e{b}*e{c})"
        )


class NoIdentityError(ActcoversError):
    def __init__(self, identity: int):
        self.identity = identity
        super().__init__(f"element {identity} is not a two-sided identity")


class BadIndexError(ActcoversError):
    def __init__(self, row: int, col: int, value: object):
        self.cell = (row, col, value)
        super().__init__(f"table entry [{row}][{col}] = {value!r} is out of range")


class EmptySemigroupError(ActcoversError):
    pass


class OrderTooLargeError(ActcoversError):
    def __init__(self, order: int, bound: int):
        self.order = order
        self.bound = bound
        super().__init__(f"order {order} exceeds supported bound {bound}")


class EmptySeedError(ActcoversError):
    pass


class BudgetExceededError(ActcoversError):
    """A backtracking search would exceed its candidate budget."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"search needs {needed} candidates, budget is {budget}")


class NotEpimorphismError(ActcoversError):
    def __init__(self, missing: int):
        self.missing = missing
        super().__init__(f"map is not onto: target element {missing} has no preimage")


class MonoidTooLargeError(ActcoversError):
    def __init__(self, order: int, bound: int):
        self.order = order
        self.bound = bound
        super().__init__(
            f"monoid of order {order} is beyond the search bound {bound}"
        )


class NotDirectedError(ActcoversError):
    def __init__(self, i: object, j: object):
        self.pair = (i, j)
        super().__init__(f"nodes {i!r} and {j!r} have no common upper bound")


class IncoherentArrowsError(ActcoversError):
    def __init__(self, i: object, j: object, k: object):
        self.triple = (i, j, k)
        super().__init__(
            f"arrow composition {i!r}->{j!r}->{k!r} disagrees with {i!r}->{k!r}"
        )


class AlreadyMemberError(ActcoversError):
    pass


class NotSubsetError(ActcoversError):
    pass


class TooFewSamplesError(ActcoversError):
    def __init__(self, samples: int, minimum: int):
        self.samples = samples
        self.minimum = minimum
        super().__init__(f"need at least {minimum} samples, got {samples}")
