"""Period types: words over a finite alphabet modulo rotation and relabeling.

A period type of length N over m letters is a word t = (t1, ..., tN).  Two
words are equivalent when one is reached from the other by cyclic rotations
(the generator moves the last letter to the front) together with a
permutation of the alphabet.  The default alphabet is the binary ('L', 'R').
"""

from __future__ import annotations

from itertools import permutations, product
from math import gcd

__all__ = [
    "BINARY_ALPHABET",
    "rotate",
    "rotations",
    "permute",
    "orbit",
    "canonical",
    "class_of",
    "enumerate_classes",
    "count_classes_binary",
    "is_univariate",
    "word_from_string",
    "word_to_string",
]

BINARY_ALPHABET = ("L", "R")


def word_from_string(s):
    """Parse "LLR" or "L,L,R" into a word tuple."""
    s = s.strip().upper()
    if "," in s:
        letters = tuple(part.strip() for part in s.split(","))
    else:
        letters = tuple(s)
    if not letters or any(ch not in BINARY_ALPHABET for ch in letters):
        raise ValueError(f"cannot parse binary word from {s!r}")
    return letters


def word_to_string(t):
    return "".join(str(ch) for ch in t)


def rotate(t):
    """One rotation step: the last letter moves to the front."""
    if not t:
        return t
    return (t[-1],) + t[:-1]


def rotations(t):
    """All cyclic rotations of t (as a list, starting from t itself)."""
    out = [t]
    cur = t
    for _ in range(len(t) - 1):
        cur = rotate(cur)
        out.append(cur)
    return out


def permute(t, perm):
    """Apply an alphabet permutation given as a dict letter -> letter."""
    return tuple(perm[ch] for ch in t)


def _alphabet_for(t, alphabet):
    if alphabet is not None:
        return tuple(alphabet)
    letters = set(t)
    if letters <= set(BINARY_ALPHABET):
        return BINARY_ALPHABET
    return tuple(sorted(letters))


def orbit(t, alphabet=None):
    """The full equivalence class of t as a set of words."""
    alpha = _alphabet_for(t, alphabet)
    out = set()
    for image in permutations(alpha):
        perm = dict(zip(alpha, image))
        relabeled = permute(t, perm)
        out.update(rotations(relabeled))
    return out


def canonical(t, alphabet=None):
    """Lexicographically least member of the class of t (alphabet order)."""
    alpha = _alphabet_for(t, alphabet)
    rank = {ch: i for i, ch in enumerate(alpha)}
    return min(orbit(t, alpha), key=lambda w: tuple(rank[ch] for ch in w))


def class_of(t, alphabet=None):
    """Sorted list of the words equivalent to t."""
    alpha = _alphabet_for(t, alphabet)
    rank = {ch: i for i, ch in enumerate(alpha)}
    return sorted(orbit(t, alpha), key=lambda w: tuple(rank[ch] for ch in w))


def enumerate_classes(N, m=2):
    """Canonical representatives of all length-N classes over m letters.

    For m == 2 the alphabet is ('L', 'R'); otherwise the letters are the
    integers 0..m-1.  Representatives are returned in lexicographic order.
    """
    if N < 1:
        raise ValueError("word length must be positive")
    if m < 1:
        raise ValueError("alphabet size must be positive")
    alpha = BINARY_ALPHABET if m == 2 else tuple(range(m))
    rank = {ch: i for i, ch in enumerate(alpha)}
    seen = set()
    reps = []
    for word in product(alpha, repeat=N):
        if word in seen:
            continue
        cls = orbit(word, alpha)
        seen.update(cls)
        reps.append(min(cls, key=lambda w: tuple(rank[ch] for ch in w)))
    reps.sort(key=lambda w: tuple(rank[ch] for ch in w))
    return reps


def _euler_phi(n):
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def count_classes_binary(N):
    """Number of binary length-N classes by the divisor-sum formula.

    count(N) = (1 / 2N) * sum over d | N of phi(2d) * 2^(N/d).
    """
    if N < 1:
        raise ValueError("word length must be positive")
    total = 0
    for dd in range(1, N + 1):
        if N % dd == 0:
            total += _euler_phi(2 * dd) * 2 ** (N // dd)
    q, r = divmod(total, 2 * N)
    if r:
        raise AssertionError(f"divisor sum not divisible by 2N for N={N}")
    return q


def is_univariate(t):
    """True when the class of t contains a word with all equal letters first.

    A binary class is univariate exactly when some member has the block form
    first-letter^a second-letter^b (at most one change of letter reading left
    to right); the induced one-variable iteration then drives the dynamics.
    """
    for w in orbit(t, BINARY_ALPHABET):
        changes = sum(1 for a, b in zip(w, w[1:]) if a != b)
        if changes <= 1:
            return True
    return False
