"""Isomorphism, canonical forms and induced embeddings."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from . import kernels
from .core import Tournament, members, relabel
from .errors import CapacityError, PreconditionError

MAX_CANONICAL_ORDER = 10


@dataclass(frozen=True)
class CanonicalForm:
    """Least triangle bit-string over all relabelings; equal iff isomorphic."""

    code: str
    order: tuple[int, ...] = field(compare=False)  # order[k] is the vertex that receives label k

    def __str__(self) -> str:
        return self.code


def canonical_form(T: Tournament) -> CanonicalForm:
    if T.n > MAX_CANONICAL_ORDER:
        raise CapacityError(f"canonical form is limited to {MAX_CANONICAL_ORDER} vertices, got {T.n}")
    code, order = kernels.canonical_labeling(T.out, T.n)
    width = T.n * (T.n - 1) // 2
    return CanonicalForm(format(code, f"0{width}b") if width else "", tuple(order))


def canonical_tournament(T: Tournament) -> Tournament:
    """The relabeled copy of ``T`` whose triangle bits equal its canonical code."""
    order = canonical_form(T).order
    perm = [0] * T.n
    for label, v in enumerate(order):
        perm[v] = label
    return relabel(T, perm)


def _signatures(T: Tournament, pool: int) -> dict[int, tuple]:
    deg = {v: kernels.popcount(T.out[v] & pool) for v in members(pool)}
    return {
        v: (deg[v], tuple(sorted(deg[w] for w in members(T.out[v] & pool))))
        for v in deg
    }


def _maps(H: Tournament, T: Tournament, pool: int) -> Iterator[tuple[int, ...]]:
    """Arc-preserving injections of ``H`` onto ``pool`` in lexicographic order."""
    h_sig = _signatures(H, H.full)
    t_sig = _signatures(T, pool)
    if sorted(h_sig.values()) != sorted(t_sig.values()):
        return
    by_sig: dict[tuple, int] = {}
    for v, sig in t_sig.items():
        by_sig[sig] = by_sig.get(sig, 0) | 1 << v
    allowed = [by_sig.get(h_sig[i], 0) for i in range(H.n)]
    image: list[int] = []

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == H.n:
            yield tuple(image)
            return
        cand = allowed[i] & ~used
        for u in range(i):
            cand &= T.out[image[u]] if H.out[u] >> i & 1 else ~T.out[image[u]]
        while cand:
            low = cand & -cand
            cand ^= low
            image.append(low.bit_length() - 1)
            yield from extend(i + 1, used | low)
            image.pop()

    yield from extend(0, 0)


def are_isomorphic(A: Tournament, B: Tournament) -> tuple[int, ...] | None:
    """A bijection ``f`` (as ``f[i]``) with ``i -> j`` in A iff ``f[i] -> f[j]`` in B."""
    if A.n != B.n:
        return None
    return next(_maps(A, B, B.full), None)


def is_isomorphism(A: Tournament, B: Tournament, f) -> bool:
    """Check a proposed bijection, given as a sequence or a mapping."""
    if A.n != B.n or sorted(f[i] for i in range(A.n)) != list(range(B.n)):
        return False
    return all(
        A.beats(i, j) == B.beats(f[i], f[j]) for i in range(A.n) for j in range(A.n) if i != j
    )


def _masks_of_size(n: int, k: int) -> Iterator[int]:
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def embeds(H: Tournament, T: Tournament) -> dict[int, int] | None:
    """An embedding of ``H`` as an induced subtournament of ``T``, or ``None`` if ``T`` omits it.

    Subsets are tried by increasing bitmask, so the witness is the one on the
    least subset and, within it, the lexicographically least map.
    """
    if H.n > T.n:
        raise PreconditionError(f"cannot embed {H.n} vertices into {T.n}")
    for pool in _masks_of_size(T.n, H.n):
        image = next(_maps(H, T, pool), None)
        if image is not None:
            return dict(enumerate(image))
    return None


def copies(H: Tournament, T: Tournament) -> Iterator[int]:
    """Every vertex subset of ``T`` inducing a copy of ``H``, by increasing mask."""
    for pool in _masks_of_size(T.n, H.n):
        if next(_maps(H, T, pool), None) is not None:
            yield pool
