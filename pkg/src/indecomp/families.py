"""Generators for the named tournaments, on their conventional labels."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import Tournament, dual, induced, make_tournament
from .errors import PreconditionError
from .morphisms import are_isomorphic


class Family(enum.Enum):
    ORDER_On = "ORDER_On"
    C3 = "C3"
    O4 = "O4"
    T4 = "T4"
    D4 = "D4"
    D4_STAR = "D4_STAR"
    T_ODD = "T_ODD"
    U_ODD = "U_ODD"
    W_ODD = "W_ODD"
    W_EVEN = "W_EVEN"
    F_N = "F_N"
    PALEY7 = "PALEY7"
    B6 = "B6"


FIXED_ORDER = {
    Family.C3: 3,
    Family.O4: 4,
    Family.T4: 4,
    Family.D4: 4,
    Family.D4_STAR: 4,
    Family.PALEY7: 7,
    Family.B6: 6,
}

MIN_PARAM = {
    Family.ORDER_On: 1,
    Family.T_ODD: 2,
    Family.U_ODD: 2,
    Family.W_ODD: 2,
    Family.W_EVEN: 2,
    Family.F_N: 5,
}


@dataclass(frozen=True)
class FamilyKind:
    tag: Family
    n: int | None = None

    def __post_init__(self) -> None:
        if self.tag in FIXED_ORDER:
            if self.n is not None:
                raise PreconditionError(f"{self.tag.value} takes no parameter")
        elif self.n is None or self.n < MIN_PARAM[self.tag]:
            raise PreconditionError(
                f"{self.tag.value} needs n >= {MIN_PARAM[self.tag]}, got {self.n}"
            )

    @property
    def order(self) -> int:
        if self.tag in FIXED_ORDER:
            return FIXED_ORDER[self.tag]
        if self.tag in (Family.T_ODD, Family.U_ODD, Family.W_ODD):
            return 2 * self.n + 1
        if self.tag is Family.W_EVEN:
            return 2 * self.n + 2
        return self.n

    def __str__(self) -> str:
        return self.tag.value if self.n is None else f"{self.tag.value}({self.n})"

    @classmethod
    def parse(cls, name: str, n: int | None = None) -> FamilyKind:
        """Accept ``"W_ODD"`` with a separate ``n`` or the combined ``"W_ODD(2)"``."""
        name = name.strip()
        if name.endswith(")") and "(" in name:
            name, _, param = name[:-1].partition("(")
            n = int(param)
        try:
            tag = Family[name]
        except KeyError:
            raise PreconditionError(
                f"unknown family {name!r}; expected one of {[f.value for f in Family]}"
            ) from None
        return cls(tag, n)


def order(n: int) -> Tournament:
    return make_tournament(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def c3() -> Tournament:
    return make_tournament(3, [(0, 1), (1, 2), (2, 0)])


def t4() -> Tournament:
    return make_tournament(4, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 0), (3, 1)])


def d4() -> Tournament:
    return make_tournament(4, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)])


def t_odd(n: int) -> Tournament:
    """T_{2n+1}: two chains 0..n and n+1..2n, with {i+1..n} -> i+n+1 -> {0..i}."""
    arcs = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    arcs += [(i, j) for i in range(n + 1, 2 * n + 1) for j in range(i + 1, 2 * n + 1)]
    for i in range(n):
        hub = i + n + 1
        arcs += [(k, hub) for k in range(i + 1, n + 1)]
        arcs += [(hub, k) for k in range(i + 1)]
    return make_tournament(2 * n + 1, arcs)


def u_odd(n: int) -> Tournament:
    upper = range(n + 1, 2 * n + 1)
    arcs = [(j, i) if i in upper and j in upper else (i, j) for i, j in t_odd(n).arcs()]
    return make_tournament(2 * n + 1, arcs)


def w_odd(n: int) -> Tournament:
    top = 2 * n
    arcs = [(i, j) for i in range(top) for j in range(i + 1, top)]
    arcs += [(k, top) if k % 2 else (top, k) for k in range(top)]
    return make_tournament(top + 1, arcs)


def w_even(n: int) -> Tournament:
    """W_{2n+1} plus a vertex 2n+1 whose out-neighbourhood is exactly {2n-2, 2n}."""
    extra = 2 * n + 1
    wins = {2 * n - 2, 2 * n}
    arcs = w_odd(n).arcs()
    arcs += [(extra, k) if k in wins else (k, extra) for k in range(extra)]
    return make_tournament(extra + 1, arcs)


def f_n(n: int) -> Tournament:
    """The usual order on 0..n-1 with every arc (i, i+1) reversed."""
    arcs = [(i, j) for i in range(n) for j in range(i + 2, n)]
    arcs += [(i + 1, i) for i in range(n - 1)]
    return make_tournament(n, arcs)


def paley7() -> Tournament:
    return make_tournament(7, [(i, j) for i in range(7) for j in range(7) if (j - i) % 7 in (1, 2, 4)])


def b6() -> Tournament:
    return induced(paley7(), range(6))


_BUILDERS = {
    Family.ORDER_On: order,
    Family.C3: c3,
    Family.O4: lambda: order(4),
    Family.T4: t4,
    Family.D4: d4,
    Family.D4_STAR: lambda: dual(d4()),
    Family.T_ODD: t_odd,
    Family.U_ODD: u_odd,
    Family.W_ODD: w_odd,
    Family.W_EVEN: w_even,
    Family.F_N: f_n,
    Family.PALEY7: paley7,
    Family.B6: b6,
}


def gen(kind: FamilyKind | Family | str, n: int | None = None) -> Tournament:
    if isinstance(kind, str):
        kind = FamilyKind.parse(kind, n)
    elif isinstance(kind, Family):
        kind = FamilyKind(kind, n)
    build = _BUILDERS[kind.tag]
    return build() if kind.n is None else build(kind.n)


def kinds_of_order(m: int) -> list[FamilyKind]:
    """Every family member with exactly ``m`` vertices."""
    found = [FamilyKind(Family.ORDER_On, m)]
    found += [FamilyKind(tag) for tag, size in FIXED_ORDER.items() if size == m]
    if m >= 5 and m % 2:
        found += [FamilyKind(tag, (m - 1) // 2) for tag in (Family.T_ODD, Family.U_ODD, Family.W_ODD)]
    if m >= 6 and m % 2 == 0:
        found.append(FamilyKind(Family.W_EVEN, (m - 2) // 2))
    if m >= 5:
        found.append(FamilyKind(Family.F_N, m))
    return found


def recognize(T: Tournament) -> list[FamilyKind]:
    """All named families isomorphic to ``T`` (possibly several, possibly none)."""
    return [kind for kind in kinds_of_order(T.n) if are_isomorphic(gen(kind), T) is not None]


def corpus(max_order: int, min_order: int = 5) -> list[FamilyKind]:
    """All parameterised and fixed family members with order in the given range."""
    return [k for m in range(min_order, max_order + 1) for k in kinds_of_order(m)]
