"""Tournaments as out-neighbourhood bitmasks, and the interval predicates.

Vertices are always ``0..n-1``. A vertex set is either an ``int`` bitmask or
any iterable of labels; results come back as ``frozenset``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Union

from . import kernels
from .errors import CapacityError, PreconditionError, TournamentError

MAX_ORDER = 64

VertexSetLike = Union[int, Iterable[int]]


@dataclass(frozen=True)
class Tournament:
    """A tournament on ``0..n-1``; ``out[i]`` is the bitmask of vertices ``i`` beats."""

    n: int
    out: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.out) != self.n:
            raise TournamentError(f"expected {self.n} out-masks, got {len(self.out)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.out):
            if row & ~full:
                raise TournamentError(f"vertex {i} has an arc to a label >= {self.n}")
            if row >> i & 1:
                raise TournamentError(f"loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.out[i] >> j & 1) == (self.out[j] >> i & 1):
                    raise TournamentError(f"pair ({i},{j}) needs exactly one orientation")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def beats(self, i: int, j: int) -> bool:
        return bool(self.out[i] >> j & 1)

    def in_mask(self, i: int) -> int:
        return self.full & ~self.out[i] & ~(1 << i)

    def out_degrees(self) -> tuple[int, ...]:
        return tuple(kernels.popcount(row) for row in self.out)

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in members(self.out[i])]

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, triangle={triangle_bits(self)!r})"


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise TournamentError(f"vertex count must be a positive integer, got {n!r}")
    if n > MAX_ORDER:
        raise CapacityError(f"at most {MAX_ORDER} vertices are supported, got {n}")


def members(mask: int) -> list[int]:
    found = []
    while mask:
        low = mask & -mask
        found.append(low.bit_length() - 1)
        mask ^= low
    return found


def as_mask(T: Tournament, X: VertexSetLike) -> int:
    if isinstance(X, int):
        mask = X
        if mask < 0 or mask & ~T.full:
            raise PreconditionError(f"vertex set {mask:#x} is not a subset of 0..{T.n - 1}")
        return mask
    mask = 0
    for v in X:
        if not 0 <= v < T.n:
            raise PreconditionError(f"vertex {v} is not in 0..{T.n - 1}")
        mask |= 1 << v
    return mask


def make_tournament(n: int, arcs: Iterable[Sequence[int]]) -> Tournament:
    """Build a tournament from an explicit list of arcs ``(i, j)`` meaning ``i -> j``."""
    _check_order(n)
    out = [0] * n
    seen = 0
    for arc in arcs:
        i, j = arc
        if not (0 <= i < n and 0 <= j < n):
            raise TournamentError(f"arc ({i},{j}) has a label outside 0..{n - 1}")
        if i == j:
            raise TournamentError(f"loop ({i},{i}) is not allowed")
        if out[i] >> j & 1:
            raise TournamentError(f"duplicate arc ({i},{j})")
        if out[j] >> i & 1:
            raise TournamentError(f"contradictory arcs ({i},{j}) and ({j},{i})")
        out[i] |= 1 << j
        seen += 1
    if seen != n * (n - 1) // 2:
        for i in range(n):
            for j in range(i + 1, n):
                if not (out[i] >> j & 1 or out[j] >> i & 1):
                    raise TournamentError(f"pair ({i},{j}) has no orientation")
    return Tournament(n, tuple(out))


def from_matrix(rows: Sequence[Sequence[int]]) -> Tournament:
    n = len(rows)
    return Tournament(n, tuple(sum(1 << j for j, b in enumerate(row) if b) for row in rows))


def triangle_bits(T: Tournament) -> str:
    return "".join(
        "1" if T.out[i] >> j & 1 else "0" for i in range(T.n) for j in range(i + 1, T.n)
    )


def is_interval(T: Tournament, I: VertexSetLike) -> bool:
    """Every vertex outside ``I`` beats all of ``I`` or loses to all of ``I``."""
    mask = as_mask(T, I)
    return _is_interval_in(T.out, T.full, mask)


def _is_interval_in(out: Sequence[int], sub: int, mask: int) -> bool:
    rest = sub & ~mask
    while rest:
        low = rest & -rest
        hit = out[low.bit_length() - 1] & mask
        if hit and hit != mask:
            return False
        rest ^= low
    return True


def nontrivial_interval_mask(T: Tournament, sub: int | None = None) -> int | None:
    """Smallest (then numerically least) nontrivial interval of ``T[sub]`` as a mask."""
    if sub is None:
        sub = T.full
    verts = members(sub)
    best = None
    for idx, a in enumerate(verts):
        for b in verts[idx + 1:]:
            closed = kernels.pair_closure(T.out, sub, a, b)
            if closed == sub:
                continue
            key = (kernels.popcount(closed), closed)
            if best is None or key < best:
                best = key
    return None if best is None else best[1]


def find_nontrivial_interval(T: Tournament) -> frozenset[int] | None:
    """A witness of decomposability, or ``None`` when every interval is trivial.

    Among all nontrivial intervals the one of least size is returned, ties
    broken by least bitmask. A minimum-size nontrivial interval is always the
    closure of any pair it contains, so scanning pair closures finds it.
    """
    mask = nontrivial_interval_mask(T)
    return None if mask is None else frozenset(members(mask))


def is_indecomposable(T: Tournament) -> bool:
    """Indecomposability; tournaments below three vertices are never indecomposable."""
    return bool(kernels.is_indecomposable(T.out, T.full))


def is_indecomposable_on(T: Tournament, X: VertexSetLike) -> bool:
    """Same as ``is_indecomposable(induced(T, X))`` without building the subtournament."""
    return bool(kernels.is_indecomposable(T.out, as_mask(T, X)))


def induced(T: Tournament, X: VertexSetLike) -> Tournament:
    """``T[X]`` relabelled ``0..|X|-1`` in increasing order of the original labels."""
    mask = as_mask(T, X)
    if not mask:
        raise PreconditionError("induced subtournament needs a nonempty vertex set")
    verts = members(mask)
    index = {v: k for k, v in enumerate(verts)}
    out = []
    for v in verts:
        row = 0
        for w in members(T.out[v] & mask):
            row |= 1 << index[w]
        out.append(row)
    return Tournament(len(verts), tuple(out))


def delete(T: Tournament, X: VertexSetLike) -> Tournament:
    """``T - X``."""
    return induced(T, T.full & ~as_mask(T, X))


def dual(T: Tournament) -> Tournament:
    return Tournament(T.n, tuple(T.in_mask(i) for i in range(T.n)))


def relabel(T: Tournament, perm: Sequence[int]) -> Tournament:
    """The tournament with arc ``perm[i] -> perm[j]`` for every arc ``i -> j``."""
    if sorted(perm) != list(range(T.n)):
        raise PreconditionError("relabeling must be a permutation of 0..n-1")
    out = [0] * T.n
    for i in range(T.n):
        row = 0
        for j in members(T.out[i]):
            row |= 1 << perm[j]
        out[perm[i]] = row
    return Tournament(T.n, tuple(out))


def is_transitive(T: Tournament) -> bool:
    for i in range(T.n):
        for j in members(T.out[i]):
            if T.out[j] & ~T.out[i]:
                return False
    return True
