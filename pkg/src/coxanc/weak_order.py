"""Prefixes in weak order, involution prefixes, ancestors, and decompositions.

u is a prefix of w when w = uv with additive lengths, i.e. some reduced word
for w starts with one for u.  The involution prefixes of maximal length are
the "ancestors" of w; when there is exactly one, stripping it and recursing
yields the ancestor decomposition w = a_1 a_2 ... a_k, whose factor count is
the involution length of w.

Having more than one maximal involution prefix is a first-class outcome
(Ambiguity), not an error: the verifier exists to hunt for exactly that, so
nothing here assumes uniqueness.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .engine import (
    GroupTable,
    canonical_reduced_word,
    is_involution,
    left_descents,
    left_multiply_generator,
    multiply,
)
from .errors import IdentityHasNoAncestor


@dataclass(frozen=True)
class PrefixSet:
    owner: int
    members: frozenset[int]
    involutions_only: bool = False


@dataclass(frozen=True)
class Ambiguity:
    """More than one maximal-length involution prefix; carries all witnesses."""

    owner: int
    witnesses: tuple[int, ...]


@dataclass(frozen=True)
class AncestorDecomposition:
    """Ordered involution factors with additive lengths; factor count is ilen.

    owner/factors are element ids for table-backed groups and reduced-word
    tuples for the universal group.
    """

    owner: object
    factors: tuple

    @property
    def ilen(self) -> int:
        return len(self.factors)


def is_prefix(table: GroupTable, u: int, w: int) -> bool:
    residual = multiply(table, int(table.inverse[u]), w)
    return int(table.length[u]) + int(table.length[residual]) == int(table.length[w])


def prefixes(table: GroupTable, w: int) -> PrefixSet:
    """All prefixes of w, by breadth-first expansion inside the interval [1, w].

    From a prefix u with residual v = u^-1 w, the successors are u*s for each
    left descent s of v.
    """
    found = {0}
    queue = deque([(0, w)])
    while queue:
        u, v = queue.popleft()
        for s in left_descents(table, v):
            u2 = int(table.gen_mul[u, s - 1])
            if u2 not in found:
                found.add(u2)
                queue.append((u2, left_multiply_generator(table, s, v)))
    return PrefixSet(owner=w, members=frozenset(found))


def involution_prefixes(table: GroupTable, w: int) -> PrefixSet:
    members = frozenset(
        u for u in prefixes(table, w).members if is_involution(table, u)
    )
    return PrefixSet(owner=w, members=members, involutions_only=True)


def ancestors(table: GroupTable, w: int) -> PrefixSet:
    """Maximal-length slice of the involution prefixes; nonempty for w != identity."""
    if w == table.id_of_identity:
        raise IdentityHasNoAncestor("the identity has no involution prefixes")
    candidates = involution_prefixes(table, w).members
    assert candidates, "non-identity elements always have involution prefixes"
    top = max(int(table.length[u]) for u in candidates)
    members = frozenset(u for u in candidates if int(table.length[u]) == top)
    return PrefixSet(owner=w, members=members, involutions_only=True)


def ancestor(table: GroupTable, w: int) -> int | Ambiguity:
    """The unique maximal involution prefix, or an Ambiguity carrying all of them."""
    found = ancestors(table, w).members
    if len(found) == 1:
        return next(iter(found))
    return Ambiguity(owner=w, witnesses=tuple(sorted(found)))


def ancestor_decomposition(table: GroupTable, w: int) -> AncestorDecomposition | Ambiguity:
    """Iteratively strip ancestors until the identity; each step shortens w."""
    if w == table.id_of_identity:
        raise IdentityHasNoAncestor("the identity has no ancestor decomposition")
    factors: list[int] = []
    cur = w
    while cur != 0:
        a = ancestor(table, cur)
        if isinstance(a, Ambiguity):
            return a
        factors.append(a)
        cur = multiply(table, a, cur)  # a^-1 = a, so this strips the factor
    return AncestorDecomposition(owner=w, factors=tuple(factors))


def involution_length(table: GroupTable, w: int) -> int | Ambiguity:
    if w == table.id_of_identity:
        return 0
    dec = ancestor_decomposition(table, w)
    if isinstance(dec, Ambiguity):
        return dec
    return dec.ilen


def suffix_ancestor_decomposition(table: GroupTable, w: int) -> AncestorDecomposition | Ambiguity:
    """Suffix mirror: decompose w^-1 and reverse the factor list.

    The involution suffixes of w are the involution prefixes of w^-1; factors
    are involutions, so reversing the list already makes the ordered product
    equal w.
    """
    if w == table.id_of_identity:
        raise IdentityHasNoAncestor("the identity has no ancestor decomposition")
    dec = ancestor_decomposition(table, int(table.inverse[w]))
    if isinstance(dec, Ambiguity):
        return dec
    return AncestorDecomposition(owner=w, factors=tuple(reversed(dec.factors)))


def format_factors(table: GroupTable, factors) -> str:
    """Render a factor list as parenthesized canonical words: '(r3 r6)(r2 r4)'."""
    return "".join(
        "(" + " ".join(f"r{letter}" for letter in canonical_reduced_word(table, f)) + ")"
        for f in factors
    )
