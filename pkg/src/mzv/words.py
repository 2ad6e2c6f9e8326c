"""Word and index combinatorics for multiple zeta values.

An index is a tuple (k_1, ..., k_l) of positive integers, admissible iff
k_l >= 2. A word is a tuple over {0, 1}, admissible iff it is nonempty,
starts with 1 and ends with 0. The bijection sends each k_i to the letter 1
followed by k_i - 1 zeros, so the first letter sits at the integration
variable closest to 0.

All functions are pure and all values are plain tuples, safe to share.
"""

import itertools
from fractions import Fraction
from functools import lru_cache


def weight(index):
    return sum(index)


def depth(index):
    return len(index)


def is_admissible_index(index):
    return (len(index) >= 1 and all(k >= 1 for k in index)
            and index[-1] >= 2)


def is_admissible_word(word):
    return len(word) >= 1 and word[0] == 1 and word[-1] == 0


def index_to_word(index):
    """Each part k contributes the letter 1 followed by k-1 zeros."""
    assert all(k >= 1 for k in index), index
    out = []
    for k in index:
        out.append(1)
        out.extend([0] * (k - 1))
    return tuple(out)


def word_to_index(word):
    """Inverse block decomposition; requires the word to start with 1."""
    if not word or word[0] != 1:
        raise ValueError("word %r has no block decomposition" % (word,))
    parts = []
    for b in word:
        if b == 1:
            parts.append(1)
        else:
            parts[-1] += 1
    return tuple(parts)


@lru_cache(maxsize=None)
def _shuffle_cached(u, v):
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}
    for w, c in _shuffle_cached(u[1:], v).items():
        key = (u[0],) + w
        out[key] = out.get(key, 0) + c
    for w, c in _shuffle_cached(u, v[1:]).items():
        key = (v[0],) + w
        out[key] = out.get(key, 0) + c
    return out


def shuffle(u, v):
    """Shuffle product of two words, as a dict word -> multiplicity."""
    return dict(_shuffle_cached(tuple(u), tuple(v)))


@lru_cache(maxsize=None)
def _stuffle_cached(a, b):
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out = {}
    # merge from the right: the largest summation variable carries the
    # last exponent of a, of b, or of both collided
    for idx, c in _stuffle_cached(a[:-1], b).items():
        key = idx + (a[-1],)
        out[key] = out.get(key, 0) + c
    for idx, c in _stuffle_cached(a, b[:-1]).items():
        key = idx + (b[-1],)
        out[key] = out.get(key, 0) + c
    for idx, c in _stuffle_cached(a[:-1], b[:-1]).items():
        key = idx + (a[-1] + b[-1],)
        out[key] = out.get(key, 0) + c
    return out


def stuffle(a, b):
    """Harmonic (quasi-shuffle) product of two indices."""
    assert all(k >= 1 for k in a) and all(k >= 1 for k in b)
    return dict(_stuffle_cached(tuple(a), tuple(b)))


def dual(index):
    """Reverse the word and flip every bit; an involution on admissibles."""
    if not is_admissible_index(index):
        raise ValueError("duality needs an admissible index, got %r"
                         % (index,))
    word = index_to_word(index)
    flipped = tuple(1 - b for b in reversed(word))
    return word_to_index(flipped)


def enumerate_admissible(n):
    """All admissible words of length n, lexicographically sorted."""
    assert n >= 0
    if n == 0:
        return [()]
    if n == 1:
        return []
    middles = itertools.product((0, 1), repeat=n - 2)
    return [(1,) + m + (0,) for m in middles]


def enumerate_admissible_indices(n):
    return [word_to_index(w) for w in enumerate_admissible(n)]


def combination_scale(comb, factor):
    """Scale a word/index combination dict by an exact factor."""
    factor = Fraction(factor)
    return {k: factor * v for k, v in comb.items() if v}


def combination_add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out
