"""Exact word arithmetic in the rank-n universal group (every bond label infinite).

Every element has a unique reduced word: a letter sequence with no two equal
neighbours.  That makes everything total and exact -- an initial segment is
an involution exactly when it is a palindrome, and there is exactly one
prefix per length, so ancestors are always unique.
"""
from __future__ import annotations

from .errors import EmptyWord, InvalidWord
from .weak_order import AncestorDecomposition

WORD_GUARD = 10_000

FreeWord = tuple  # reduced word: tuple of 1-based letters, no equal neighbours


def check_word(word) -> FreeWord:
    w = tuple(int(x) for x in word)
    if len(w) > WORD_GUARD:
        raise InvalidWord(f"word has {len(w)} letters, guard is {WORD_GUARD}")
    for k, letter in enumerate(w):
        if letter < 1:
            raise InvalidWord(f"letter {letter} is not a positive generator index")
        if k > 0 and w[k - 1] == letter:
            raise InvalidWord(f"equal adjacent letters at position {k}: word is not reduced")
    return w


def reduce_word(letters) -> FreeWord:
    """Reduced form of an arbitrary letter sequence (iterated cancellation)."""
    out: list[int] = []
    for x in letters:
        x = int(x)
        if x < 1:
            raise InvalidWord(f"letter {x} is not a positive generator index")
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    if len(out) > WORD_GUARD:
        raise InvalidWord(f"word has {len(out)} letters, guard is {WORD_GUARD}")
    return tuple(out)


def ug_multiply(a, b) -> FreeWord:
    """Concatenate and cancel equal letters at the seam (cancellation cascades)."""
    a = check_word(a)
    b = check_word(b)
    out = list(a)
    for x in b:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def ug_involution_prefixes(w) -> list[FreeWord]:
    """Palindromic nonempty initial segments, in increasing length."""
    w = check_word(w)
    return [w[:i] for i in range(1, len(w) + 1) if w[:i] == w[i - 1 :: -1]]


def ug_ancestor_decomposition(w) -> AncestorDecomposition:
    """Repeatedly strip the longest palindromic initial segment.

    Prefixes are unique per length, so this is never ambiguous; factors
    concatenate back to w without cancellation.
    """
    w = check_word(w)
    if not w:
        raise EmptyWord("the identity has no ancestor decomposition")
    factors: list[FreeWord] = []
    cur = w
    while cur:
        for i in range(len(cur), 0, -1):
            if cur[:i] == cur[i - 1 :: -1]:
                factors.append(cur[:i])
                cur = cur[i:]
                break
    return AncestorDecomposition(owner=w, factors=tuple(factors))


def ug_involution_length(w) -> int:
    w = check_word(w)
    if not w:
        return 0
    return ug_ancestor_decomposition(w).ilen


def ug_power_word(n: int, k: int) -> FreeWord:
    """Reduced form of (r_1 ... r_n)^k."""
    if n < 1 or k < 1:
        raise InvalidWord("n and k must be positive")
    if n * k > WORD_GUARD:
        raise InvalidWord(f"word would have {n * k} letters, guard is {WORD_GUARD}")
    return reduce_word(list(range(1, n + 1)) * k)
