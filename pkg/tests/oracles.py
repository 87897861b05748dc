"""Slow, definitional reference implementations used only by the tests.

Nothing here touches the package kernels: every answer comes from scanning
subsets or permutations directly on ``T.beats``.
"""

from __future__ import annotations

from itertools import combinations, permutations

from indecomp import Tournament


def bits_of(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def brute_is_interval(T: Tournament, mask: int, within: int | None = None) -> bool:
    within = T.full if within is None else within
    inside = bits_of(mask)
    for x in bits_of(within & ~mask):
        wins = [T.beats(x, v) for v in inside]
        if any(wins) and not all(wins):
            return False
    return True


def brute_nontrivial_interval(T: Tournament, within: int | None = None) -> int | None:
    """First nontrivial interval by increasing size, then increasing mask."""
    within = T.full if within is None else within
    verts = bits_of(within)
    for size in range(2, len(verts)):
        masks = sorted(sum(1 << v for v in combo) for combo in combinations(verts, size))
        for mask in masks:
            if brute_is_interval(T, mask, within):
                return mask
    return None


def brute_indecomposable(T: Tournament, within: int | None = None) -> bool:
    within = T.full if within is None else within
    return len(bits_of(within)) >= 3 and brute_nontrivial_interval(T, within) is None


def triangle(T: Tournament) -> str:
    return "".join("1" if T.beats(i, j) else "0" for i in range(T.n) for j in range(i + 1, T.n))


def permuted(T: Tournament, perm) -> Tournament:
    out = [0] * T.n
    for i in range(T.n):
        for j in range(T.n):
            if i != j and T.beats(i, j):
                out[perm[i]] |= 1 << perm[j]
    return Tournament(T.n, tuple(out))


def brute_canonical(T: Tournament) -> str:
    return min(triangle(permuted(T, p)) for p in permutations(range(T.n)))


def brute_isomorphic(A: Tournament, B: Tournament) -> bool:
    if A.n != B.n:
        return False
    return any(
        all(A.beats(i, j) == B.beats(p[i], p[j]) for i in range(A.n) for j in range(A.n) if i != j)
        for p in permutations(range(A.n))
    )


def brute_embeds(H: Tournament, T: Tournament) -> bool:
    for image in permutations(range(T.n), H.n):
        if all(H.beats(i, j) == T.beats(image[i], image[j]) for i in range(H.n) for j in range(H.n) if i != j):
            return True
    return False


def definitional_strongly_critical(T: Tournament, indecomposable) -> set[int]:
    """The double loop from the definition: x is kept unless some indecomposable
    ``T[X]`` with ``x`` in ``X``, ``|X| >= 5`` has ``T[X] - x`` indecomposable.

    ``indecomposable(T, mask)`` is supplied by the caller so that the slow
    subset-scan oracle or the pair-closure reference can be plugged in.
    """
    keep = set()
    for x in range(T.n):
        strong = True
        for X in range(1 << T.n):
            if not X >> x & 1 or bin(X).count("1") < 5:
                continue
            if indecomposable(T, X) and indecomposable(T, X & ~(1 << x)):
                strong = False
                break
        if strong:
            keep.add(x)
    return keep


def labeled_tournaments(n: int):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for code in range(1 << len(pairs)):
        out = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        yield Tournament(n, tuple(out))
