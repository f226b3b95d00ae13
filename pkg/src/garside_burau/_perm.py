"""Permutations of ``{1..n}`` as tuples of images, ``p[i-1] = p(i)``.

Products are read left to right like braid words: ``compose(a, b)`` first
applies ``a`` and then ``b``.
"""

from __future__ import annotations

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(a: Perm, b: Perm) -> Perm:
    return tuple(b[x - 1] for x in a)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a, 1):
        out[x - 1] = i
    return tuple(out)


def transposition(n: int, i: int, j: int) -> Perm:
    img = list(range(1, n + 1))
    img[i - 1], img[j - 1] = j, i
    return tuple(img)


def cycles(a: Perm) -> list[list[int]]:
    """Cycles of ``a`` (fixed points included), each started at its minimum."""
    seen = set()
    out = []
    for start in range(1, len(a) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = a[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = a[x - 1]
        out.append(cyc)
    return out


def inversions(a: Perm) -> int:
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


def reflection_length(a: Perm) -> int:
    """Minimal number of transpositions whose product is ``a``."""
    return len(a) - len(cycles(a))
