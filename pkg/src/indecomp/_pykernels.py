"""Pure-Python bitmask kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors every
function here with the same signature and results. A tournament is passed as
``out``, a sequence where ``out[v]`` is the bitmask of out-neighbours of ``v``.
"""

from __future__ import annotations

from collections.abc import Sequence

MAX_TABLE_ORDER = 24


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def pair_closure(out: Sequence[int], sub: int, a: int, b: int) -> int:
    """Smallest interval of ``T[sub]`` containing both ``a`` and ``b``."""
    closed = (1 << a) | (1 << b)
    while True:
        grow = 0
        rest = sub & ~closed
        while rest:
            low = rest & -rest
            hit = out[low.bit_length() - 1] & closed
            if hit and hit != closed:
                grow |= low
            rest ^= low
        if not grow:
            return closed
        closed |= grow


def is_indecomposable(out: Sequence[int], sub: int) -> bool:
    # Every nontrivial interval contains the closure of any pair inside it.
    if popcount(sub) < 3:
        return False
    ra = sub
    while ra:
        la = ra & -ra
        ra ^= la
        a = la.bit_length() - 1
        rb = ra
        while rb:
            lb = rb & -rb
            rb ^= lb
            if pair_closure(out, sub, a, lb.bit_length() - 1) != sub:
                return False
    return True


def indecomposable_table(out: Sequence[int], n: int) -> bytearray:
    if n > MAX_TABLE_ORDER:
        raise OverflowError(f"subset table needs n <= {MAX_TABLE_ORDER}, got {n}")
    table = bytearray(1 << n)
    for sub in range(1 << n):
        if is_indecomposable(out, sub):
            table[sub] = 1
    return table


def strongly_critical_mask(out: Sequence[int], n: int) -> int:
    """Vertices critical in every indecomposable ``T[X]`` of order >= 5 containing them."""
    table = indecomposable_table(out, n)
    marked = 0
    for sub in range(1 << n):
        if not table[sub] or popcount(sub) < 6:
            continue
        rest = sub & ~marked
        while rest:
            low = rest & -rest
            rest ^= low
            if table[sub ^ low]:
                marked |= low
    return ((1 << n) - 1) & ~marked


def canonical_labeling(out: Sequence[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Minimal upper-triangle code over all relabelings, with one optimal order.

    Returns ``(code, order)`` where ``order[k]`` is the original vertex that
    receives label ``k``. The code packs rows ``(0,1..n-1), (1,2..n-1), ...``
    most-significant bit first, bit 1 meaning the lower label beats the higher.
    Labels are assigned one at a time; the remaining vertices stay in an
    ordered partition, and only branches reaching the minimal row survive.
    """
    full = (1 << n) - 1
    states: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), (full,) if n else ())]
    code = 0
    for k in range(n - 1):
        best = -1
        survivors: dict[tuple[int, ...], tuple[int, ...]] = {}
        for labels, cells in states:
            rest = cells[0]
            while rest:
                low = rest & -rest
                rest ^= low
                w = low.bit_length() - 1
                beats = out[w]
                row = 0
                split: list[int] = []
                for idx, cell in enumerate(cells):
                    if idx == 0:
                        cell ^= low
                        if not cell:
                            continue
                    wins = cell & beats
                    losses = cell ^ wins
                    row = (row << popcount(cell)) | ((1 << popcount(wins)) - 1)
                    if losses:
                        split.append(losses)
                    if wins:
                        split.append(wins)
                if best < 0 or row < best:
                    best = row
                    survivors = {}
                if row == best:
                    key = tuple(split)
                    if key not in survivors:
                        survivors[key] = labels + (w,)
        code = (code << (n - 1 - k)) | best
        states = [(labels, cells) for cells, labels in survivors.items()]
    labels, cells = states[0]
    if cells:
        labels = labels + (cells[0].bit_length() - 1,)
    return code, labels
