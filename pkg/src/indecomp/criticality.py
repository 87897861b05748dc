"""Vertex deletion and extension: critical and strongly critical vertices,
the indecomposability graph, the outer partition and the hereditary searches."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import kernels
from .core import (
    Tournament,
    VertexSetLike,
    _is_interval_in,
    as_mask,
    induced,
    members,
    nontrivial_interval_mask,
)
from .families import recognize
from .errors import CapacityError, FalsificationError, PreconditionError
from .morphisms import _masks_of_size, are_isomorphic

MAX_STRONG_ORDER = 16


def _indec(T: Tournament, mask: int) -> bool:
    return bool(kernels.is_indecomposable(T.out, mask))


def _require_indecomposable(T: Tournament, min_order: int) -> None:
    if T.n < min_order:
        raise PreconditionError(f"needs at least {min_order} vertices, got {T.n}")
    if not _indec(T, T.full):
        raise PreconditionError("tournament is not indecomposable")


def critical_mask(T: Tournament) -> int:
    found = 0
    for x in range(T.n):
        if not _indec(T, T.full ^ (1 << x)):
            found |= 1 << x
    return found


def critical_vertices(T: Tournament) -> frozenset[int]:
    """Vertices ``x`` of an indecomposable ``T`` with ``T - x`` decomposable."""
    _require_indecomposable(T, 4)
    return frozenset(members(critical_mask(T)))


def is_critical_tournament(T: Tournament) -> bool:
    return T.n >= 5 and _indec(T, T.full) and critical_mask(T) == T.full


def is_noncritical_indecomposable(T: Tournament) -> bool:
    return T.n >= 5 and _indec(T, T.full) and critical_mask(T) != T.full


# -- outer partition ---------------------------------------------------------


@dataclass(frozen=True)
class OuterPartition:
    base: frozenset[int]
    ext: frozenset[int]
    hull: frozenset[int]
    twins: dict[int, frozenset[int]] = field(hash=False)

    def blocks(self) -> list[frozenset[int]]:
        """Nonempty members of the family, in the order ext, hull, twins by vertex."""
        parts = [self.ext, self.hull] + [self.twins[u] for u in sorted(self.twins)]
        return [p for p in parts if p]


def outside_roles(T: Tournament, base: int) -> dict[int, list]:
    """For each ``x`` outside ``base``, every block of the outer partition it satisfies.

    Roles are ``"ext"``, ``"hull"`` or ``("twin", u)``; each membership is
    tested from its own definition so that overlaps or gaps would show up.
    """
    roles: dict[int, list] = {}
    base_members = members(base)
    for x in members(T.full & ~base):
        grown = base | (1 << x)
        found: list = []
        if _indec(T, grown):
            found.append("ext")
        if _is_interval_in(T.out, grown, base):
            found.append("hull")
        for u in base_members:
            if _is_interval_in(T.out, grown, (1 << u) | (1 << x)):
                found.append(("twin", u))
        roles[x] = found
    return roles


def outer_partition(T: Tournament, X: VertexSetLike) -> OuterPartition:
    base = as_mask(T, X)
    if kernels.popcount(base) < 3 or not _indec(T, base):
        raise PreconditionError("outer partition needs |X| >= 3 with T[X] indecomposable")
    roles = outside_roles(T, base)
    bad = {x: r for x, r in roles.items() if len(r) != 1}
    if bad:
        raise FalsificationError(
            "outer partition blocks do not partition V \\ X",
            {"X": sorted(members(base)), "roles": {str(x): [str(r) for r in v] for x, v in bad.items()}},
        )
    ext = frozenset(x for x, r in roles.items() if r[0] == "ext")
    hull = frozenset(x for x, r in roles.items() if r[0] == "hull")
    twins = {
        u: frozenset(x for x, r in roles.items() if r[0] == ("twin", u)) for u in members(base)
    }
    return OuterPartition(frozenset(members(base)), ext, hull, twins)


# -- hereditary searches -----------------------------------------------------


def extend_by_two(T: Tournament, X: VertexSetLike) -> tuple[int, int] | None:
    """Least pair ``x < y`` outside ``X`` with ``T[X + {x, y}]`` indecomposable.

    ``None`` means no such pair exists, which would contradict the known extension result
    guaranteeing one; callers report it as a falsification.
    """
    base = as_mask(T, X)
    _require_indecomposable(T, 5)
    size = kernels.popcount(base)
    if not 3 <= size <= T.n - 2 or not _indec(T, base):
        raise PreconditionError("needs 3 <= |X| <= n-2 with T[X] indecomposable")
    for x, y in combinations(members(T.full & ~base), 2):
        if _indec(T, base | (1 << x) | (1 << y)):
            return (x, y)
    return None


@dataclass(frozen=True)
class OneVertexExtension:
    vertex: int
    support: frozenset[int]  # the indecomposable (|X|+1)-set that holds a copy of T[X]
    in_place: bool  # True when support is X plus the vertex


def find_one_vertex_extension(T: Tournament, X: VertexSetLike) -> OneVertexExtension | None:
    base = as_mask(T, X)
    _require_indecomposable(T, 6)
    if critical_mask(T) == T.full:
        raise PreconditionError("tournament is critical")
    size = kernels.popcount(base)
    if not 5 <= size < T.n or not _indec(T, base):
        raise PreconditionError("needs 5 <= |X| < n with T[X] indecomposable")
    for x in members(T.full & ~base):
        if _indec(T, base | (1 << x)):
            return OneVertexExtension(x, frozenset(members(base | (1 << x))), True)
    H = induced(T, base)
    for support in _masks_of_size(T.n, size + 1):
        if not _indec(T, support):
            continue
        for y in members(support):
            if are_isomorphic(H, induced(T, support ^ (1 << y))) is not None:
                return OneVertexExtension(y, frozenset(members(support)), False)
    return None


def extend_by_one(T: Tournament, X: VertexSetLike) -> int | None:
    """A vertex completing an indecomposable ``(|X|+1)``-set that contains a copy of ``T[X]``.

    The least ``x`` with ``T[X + x]`` indecomposable is preferred; failing
    that, the least support set holding an isomorphic copy is used and its
    vertex outside that copy is returned. ``None`` signals a falsification.
    """
    found = find_one_vertex_extension(T, X)
    return None if found is None else found.vertex


def delete_two(T: Tournament) -> tuple[int, int] | None:
    _require_indecomposable(T, 7)
    for x, y in combinations(range(T.n), 2):
        if _indec(T, T.full ^ (1 << x) ^ (1 << y)):
            return (x, y)
    return None


def delete_one_noncritical(T: Tournament) -> int | None:
    """Least ``x`` such that ``T - x`` is again indecomposable and not critical."""
    _require_indecomposable(T, 7)
    if critical_mask(T) == T.full:
        raise PreconditionError("tournament is critical")
    for x in range(T.n):
        rest = T.full ^ (1 << x)
        if not _indec(T, rest):
            continue
        if any(_indec(T, rest ^ (1 << y)) for y in members(rest)):
            return x
    return None


# -- indecomposability graph -------------------------------------------------


@dataclass(frozen=True)
class IndecGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    def neighbors(self, x: int) -> frozenset[int]:
        return frozenset(b if a == x else a for a, b in self.edges if x in (a, b))

    def degree(self, x: int) -> int:
        return len(self.neighbors(x))


def _components(n: int, edges) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(g) for g in sorted(groups.values()))


def indec_graph(T: Tournament) -> IndecGraph:
    """Graph on V(T) joining ``x, y`` whenever ``T - {x, y}`` is indecomposable."""
    if T.n < 5:
        raise PreconditionError(f"indecomposability graph needs at least 5 vertices, got {T.n}")
    edges = tuple(
        (x, y) for x, y in combinations(range(T.n), 2) if _indec(T, T.full ^ (1 << x) ^ (1 << y))
    )
    return IndecGraph(T.n, edges, _components(T.n, edges))


# -- strongly critical vertices ----------------------------------------------


def strongly_critical_mask(T: Tournament) -> int:
    _require_indecomposable(T, 5)
    if T.n > MAX_STRONG_ORDER:
        raise CapacityError(f"strongly critical search is limited to {MAX_STRONG_ORDER} vertices, got {T.n}")
    return kernels.strongly_critical_mask(T.out, T.n)


def strongly_critical(T: Tournament) -> frozenset[int]:
    """Vertices critical in every indecomposable subtournament of order >= 5 containing them.

    One pass over the subset table: whenever ``T[X]`` and ``T[X - x]`` are
    both indecomposable, ``x`` is not strongly critical. Four-vertex
    tournaments are never indecomposable, so ``|X - x| >= 5`` is automatic.
    """
    return frozenset(members(strongly_critical_mask(T)))


def f_value(T: Tournament) -> int:
    return kernels.popcount(strongly_critical_mask(T))


@dataclass(frozen=True)
class CriticalityProfile:
    critical: frozenset[int]
    strongly_critical: frozenset[int]
    f: int
    is_critical_tournament: bool


def profile(T: Tournament) -> CriticalityProfile:
    crit = critical_vertices(T)
    strong = strongly_critical(T)
    return CriticalityProfile(crit, strong, len(strong), T.n >= 5 and len(crit) == T.n)


def analyze(T: Tournament) -> dict:
    """Every computed attribute of ``T`` as a JSON-ready dict."""
    indecomposable = _indec(T, T.full)
    witness = nontrivial_interval_mask(T)
    report: dict = {
        "n": T.n,
        "indecomposable": indecomposable if T.n >= 3 else None,
        "nontrivial_interval": None if witness is None else members(witness),
        "critical": None,
        "strongly_critical": None,
        "f": None,
        "indec_graph": None,
        "families": [str(k) for k in recognize(T)],
    }
    if indecomposable and T.n >= 5:
        report["critical"] = members(critical_mask(T))
        if T.n <= MAX_STRONG_ORDER:
            strong = members(strongly_critical_mask(T))
            report["strongly_critical"] = strong
            report["f"] = len(strong)
    if T.n >= 5:
        graph = indec_graph(T)
        report["indec_graph"] = {
            "edges": [list(e) for e in graph.edges],
            "components": [list(c) for c in graph.components],
        }
    return report
