"""Catalan words, their enumeration, elevation sequences, and profiles."""

from __future__ import annotations

from math import comb

from .freealg import is_word, letter_sign


def is_catalan(word: str) -> bool:
    """True iff every proper partial sign sum is >= 0 and the total is 0."""
    if not is_word(word):
        raise ValueError(f"not a word over x,y: {word!r}")
    h = 0
    for ch in word[:-1]:
        h += letter_sign(ch)
        if h < 0:
            return False
    return h + (letter_sign(word[-1]) if word else 0) == 0


def catalan_number(n: int) -> int:
    """binomial(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"catalan_number requires n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


def enumerate_catalan(n: int) -> list[str]:
    """All Catalan words of length 2n, in canonical (lexicographic) order.

    Generated by prefix with partial-sum pruning, so only valid words are
    ever visited; emitting "x" before "y" yields lexicographic order.
    """
    if n < 0:
        raise ValueError(f"enumerate_catalan requires n >= 0, got {n}")
    out: list[str] = []

    def rec(prefix: str, ups: int, height: int) -> None:
        if len(prefix) == 2 * n:
            out.append(prefix)
            return
        if ups < n:
            rec(prefix + "x", ups + 1, height + 1)
        if height > 0:
            rec(prefix + "y", ups, height - 1)

    rec("", 0, 0)
    return out


def elevation(word: str) -> tuple[int, ...]:
    """Running partial sign sums (e_0, ..., e_n) with e_0 = 0."""
    if not is_word(word):
        raise ValueError(f"not a word over x,y: {word!r}")
    seq = [0]
    h = 0
    for ch in word:
        h += letter_sign(ch)
        seq.append(h)
    return tuple(seq)


def profile(word: str) -> tuple[int, ...]:
    """The end points and interior turning points of the elevation sequence."""
    e = elevation(word)
    n = len(e) - 1
    keep = [e[0]]
    for i in range(1, n):
        if e[i + 1] - e[i] != e[i] - e[i - 1]:
            keep.append(e[i])
    if n > 0:
        keep.append(e[n])
    return tuple(keep)


def is_catalan_profile(values: tuple[int, ...] | list[int]) -> bool:
    """Validate a sequence (l_0, h_1, l_1, ..., h_r, l_r) as the profile of
    some Catalan word: odd length, ends at 0, nonnegative, each peak strictly
    above its adjacent valleys."""
    p = tuple(values)
    if len(p) % 2 == 0 or not p:
        return False
    if any(not isinstance(v, int) for v in p):
        return False
    if p[0] != 0 or p[-1] != 0 or min(p) < 0:
        return False
    for i in range(1, len(p), 2):
        if p[i] <= p[i - 1] or p[i] <= p[i + 1]:
            return False
    return True


def profile_to_word(values: tuple[int, ...] | list[int]) -> str:
    """Rebuild the unique Catalan word with the given profile: for each peak,
    h_i - l_{i-1} ascents then h_i - l_i descents."""
    p = tuple(values)
    if not is_catalan_profile(p):
        raise ValueError(f"not a Catalan profile: {p!r}")
    parts = []
    for i in range(1, len(p), 2):
        parts.append("x" * (p[i] - p[i - 1]))
        parts.append("y" * (p[i] - p[i + 1]))
    return "".join(parts)


def render_profile(values: tuple[int, ...] | list[int]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"
