# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels``; same signatures, same results."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_TABLE_ORDER = 24


cdef u64* _load(out, int n) except NULL:
    cdef u64* buf = <u64*> malloc(max(n, 1) * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        buf[i] = out[i]
    return buf


cdef inline u64 _closure(const u64* out, u64 sub, u64 closed) noexcept nogil:
    cdef u64 grow, rest, low, hit
    while True:
        grow = 0
        rest = sub & ~closed
        while rest:
            low = rest & (~rest + 1)
            hit = out[__builtin_ctzll(rest)] & closed
            if hit != 0 and hit != closed:
                grow |= low
            rest ^= low
        if grow == 0:
            return closed
        closed |= grow


cdef bint _indec(const u64* out, u64 sub) noexcept nogil:
    if __builtin_popcountll(sub) < 3:
        return False
    cdef u64 ra = sub, rb, la, lb
    while ra:
        la = ra & (~ra + 1)
        ra ^= la
        rb = ra
        while rb:
            lb = rb & (~rb + 1)
            rb ^= lb
            if _closure(out, sub, la | lb) != sub:
                return False
    return True


def popcount(u64 mask):
    return __builtin_popcountll(mask)


def pair_closure(out, u64 sub, int a, int b):
    cdef int n = len(out)
    cdef u64* buf = _load(out, n)
    try:
        return _closure(buf, sub, (<u64> 1 << a) | (<u64> 1 << b))
    finally:
        free(buf)


def is_indecomposable(out, u64 sub):
    cdef int n = len(out)
    cdef u64* buf = _load(out, n)
    try:
        return _indec(buf, sub)
    finally:
        free(buf)


cdef unsigned char* _table(const u64* out, int n) noexcept nogil:
    cdef u64 size = (<u64> 1) << n
    cdef unsigned char* table = <unsigned char*> malloc(size)
    cdef u64 sub
    if table == NULL:
        return NULL
    for sub in range(size):
        table[sub] = _indec(out, sub)
    return table


def indecomposable_table(out, int n):
    if n > MAX_TABLE_ORDER:
        raise OverflowError(f"subset table needs n <= {MAX_TABLE_ORDER}, got {n}")
    cdef u64* buf = _load(out, n)
    cdef unsigned char* table
    try:
        with nogil:
            table = _table(buf, n)
        if table == NULL:
            raise MemoryError()
        try:
            return bytearray(table[:(<u64> 1) << n])
        finally:
            free(table)
    finally:
        free(buf)


def strongly_critical_mask(out, int n):
    if n > MAX_TABLE_ORDER:
        raise OverflowError(f"subset table needs n <= {MAX_TABLE_ORDER}, got {n}")
    cdef u64* buf = _load(out, n)
    cdef unsigned char* table
    cdef u64 size = (<u64> 1) << n
    cdef u64 sub, rest, low, marked = 0
    cdef u64 full = size - 1 if n < 64 else <u64> -1
    try:
        with nogil:
            table = _table(buf, n)
            if table != NULL:
                for sub in range(size):
                    if not table[sub] or __builtin_popcountll(sub) < 6:
                        continue
                    rest = sub & ~marked
                    while rest:
                        low = rest & (~rest + 1)
                        rest ^= low
                        if table[sub ^ low]:
                            marked |= low
                free(table)
        if table == NULL:
            raise MemoryError()
        return full & ~marked
    finally:
        free(buf)


def canonical_labeling(out, int n):
    if n * (n - 1) // 2 > 64:
        raise OverflowError(f"canonical code needs n <= 11, got {n}")
    cdef u64* buf = _load(out, n)
    cdef u64 full = ((<u64> 1) << n) - 1 if n < 64 else <u64> -1
    cdef u64 rest, low, beats, cell, wins, losses, row, best
    cdef u64 code = 0
    cdef int k, w, idx, width, nw
    cdef bint have_best
    try:
        states = [((), (full,))]
        for k in range(n - 1):
            have_best = False
            best = 0
            survivors = {}
            for labels, cells in states:
                rest = cells[0]
                while rest:
                    low = rest & (~rest + 1)
                    rest ^= low
                    w = __builtin_ctzll(low)
                    beats = buf[w]
                    row = 0
                    split = []
                    for idx in range(len(cells)):
                        cell = cells[idx]
                        if idx == 0:
                            cell ^= low
                            if cell == 0:
                                continue
                        wins = cell & beats
                        losses = cell ^ wins
                        width = __builtin_popcountll(cell)
                        nw = __builtin_popcountll(wins)
                        row = (row << width) | (((<u64> 1) << nw) - 1)
                        if losses:
                            split.append(losses)
                        if wins:
                            split.append(wins)
                    if not have_best or row < best:
                        have_best = True
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
            labels = labels + (__builtin_ctzll(<u64> cells[0]),)
        return code, labels
    finally:
        free(buf)
