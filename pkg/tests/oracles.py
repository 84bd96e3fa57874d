"""Independent brute-force oracles used by the tests."""

import itertools

from basiclocus.affweyl import identity, simple_reflection


def ball(datum, radius):
    """All elements of the affine Weyl group of word length <= radius, with their BFS distance."""
    e = identity(datum)
    dist = {e: 0}
    frontier = [e]
    for r in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for i in datum.vertices:
                y = x * simple_reflection(datum, i)
                if y not in dist:
                    dist[y] = r
                    nxt.append(y)
        frontier = nxt
    return dist


def subword_set(datum, word):
    """Products of all subwords of a word (the Bruhat ideal of a reduced word)."""
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        x = identity(datum)
        for keep, i in zip(mask, word):
            if keep:
                x = x * simple_reflection(datum, i)
        out.add(x)
    return out
