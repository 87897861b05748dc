"""Named checks that test each statement exhaustively on small orders.

Each check walks its domain (census classes up to ``max_n`` plus generated
family members of bounded order), counts the instances it examined, and stops
at the first counterexample. A check whose domain is empty still passes but
is flagged ``vacuous``.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, permutations

from . import kernels
from .core import Tournament, _is_interval_in, delete, induced, is_transitive, members
from .criticality import (
    critical_mask,
    delete_one_noncritical,
    delete_two,
    extend_by_two,
    f_value,
    find_one_vertex_extension,
    indec_graph,
    outside_roles,
    strongly_critical_mask,
)
from .enumeration import MAX_ORDER as CENSUS_MAX, enumerate_census
from .errors import PreconditionError
from .families import Family, FamilyKind, b6, f_n, gen, paley7, t_odd, u_odd, w_even, w_odd, d4
from .formats import to_triangle
from .morphisms import _masks_of_size, are_isomorphic, canonical_form, embeds

log = logging.getLogger(__name__)

FAMILY_MAX = 16


@dataclass
class CheckResult:
    check_id: str
    statement: str
    domain_description: str
    instances_checked: int
    status: str
    vacuous: bool = False
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Instance:
    label: str
    T: Tournament


class _Tally:
    def __init__(self) -> None:
        self.count = 0
        self.failure: dict | None = None
        self.details: dict = {}

    def check(self, ok: bool, inst: Instance, **witness) -> bool:
        self.count += 1
        if not ok and self.failure is None:
            self.failure = {
                "instance": inst.label,
                "tournament": to_triangle(inst.T),
                "witness": _plain(witness),
            }
        return ok

    @property
    def failed(self) -> bool:
        return self.failure is not None


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, FamilyKind):
        return str(value)
    return value


class Context:
    """Shared, lazily built inputs for a harness run."""

    def __init__(self, max_n: int, cache_dir=None, use_cache: bool = True):
        self.max_n = max_n
        self.cache_dir = cache_dir
        self.use_cache = use_cache
        self._census: dict[int, tuple[Tournament, ...]] = {}

    def orders(self, lo: int, hi: int = CENSUS_MAX) -> range:
        return range(lo, min(hi, self.max_n, CENSUS_MAX) + 1)

    def census(self, n: int) -> tuple[Tournament, ...]:
        if n not in self._census:
            self._census[n] = enumerate_census(n, self.cache_dir, self.use_cache).representatives
        return self._census[n]

    def census_instances(self, lo: int, hi: int = CENSUS_MAX, pred=None) -> Iterator[Instance]:
        for n in self.orders(lo, hi):
            for idx, T in enumerate(self.census(n)):
                if pred is None or pred(T):
                    yield Instance(f"census n={n} #{idx}", T)


def _indec(T: Tournament, mask: int | None = None) -> bool:
    return bool(kernels.is_indecomposable(T.out, T.full if mask is None else mask))


def _noncritical(T: Tournament) -> bool:
    return T.n >= 5 and _indec(T) and critical_mask(T) != T.full


def _critical_family(max_order: int) -> list[Instance]:
    return [
        Instance(str(FamilyKind(tag, n)), gen(tag, n))
        for n in range(2, (max_order - 1) // 2 + 1)
        for tag in (Family.T_ODD, Family.U_ODD, Family.W_ODD)
    ]


def _noncritical_family(max_order: int) -> list[Instance]:
    found = [Instance("B6", b6()), Instance("PALEY7", paley7())]
    found += [Instance(f"W_EVEN({n})", w_even(n)) for n in range(2, (max_order - 2) // 2 + 1)]
    found += [
        Instance(f"W_EVEN({n})-{2 * n - 3}", delete(w_even(n), [2 * n - 3]))
        for n in range(3, (max_order - 1) // 2 + 1)
    ]
    found += [Instance(f"F_N({n})", f_n(n)) for n in range(6, max_order + 1)]
    return [i for i in found if i.T.n <= max_order]


def _indecomposable_family(max_order: int) -> list[Instance]:
    return _critical_family(max_order) + _noncritical_family(max_order)


def _indecomposable_census(ctx: Context, lo: int = 5, hi: int = CENSUS_MAX) -> list[Instance]:
    return list(ctx.census_instances(lo, hi, pred=_indec))


def _same_class(A: Tournament, B: Tournament) -> bool:
    return are_isomorphic(A, B) is not None


def _codes(tournaments) -> set[str]:
    return {canonical_form(T).code for T in tournaments}


def _describe(ctx: Context, census: str, family: str) -> str:
    return f"{census} for census orders <= {min(ctx.max_n, CENSUS_MAX)}; {family}"


# -- individual checks ------------------------------------------------------


def check_er_partition(ctx: Context, tally: _Tally) -> str:
    instances = list(ctx.census_instances(3, 7)) + _indecomposable_family(9)
    for inst in instances:
        T = inst.T
        table = kernels.indecomposable_table(T.out, T.n)
        for base in range(1, T.full):
            if not table[base] or kernels.popcount(base) < 3:
                continue
            roles = outside_roles(T, base)
            bad = {x: r for x, r in roles.items() if len(r) != 1}
            if not tally.check(not bad, inst, X=members(base), roles={x: [str(r) for r in v] for x, v in bad.items()}):
                return ""
    return _describe(ctx, "all (T, X), X proper, |X| >= 3, T[X] indecomposable, census orders 3..7", "indecomposable families up to order 9")


def check_er_plus2(ctx: Context, tally: _Tally) -> str:
    for inst in _indecomposable_census(ctx, 5, 7) + _indecomposable_family(11):
        T = inst.T
        table = kernels.indecomposable_table(T.out, T.n)
        for base in range(T.full):
            if table[base] and 3 <= kernels.popcount(base) <= T.n - 2:
                if not tally.check(extend_by_two(T, base) is not None, inst, X=members(base)):
                    return ""
    return _describe(ctx, "indecomposable T (orders 5..7), every indecomposable T[X] with 3 <= |X| <= n-2", "indecomposable families up to order 11")


def check_minus_1_2(ctx: Context, tally: _Tally) -> str:
    for inst in _indecomposable_census(ctx) + _indecomposable_family(FAMILY_MAX):
        T = inst.T
        one = any(_indec(T, T.full ^ (1 << x)) for x in range(T.n))
        two = one or any(_indec(T, T.full ^ (1 << x) ^ (1 << y)) for x, y in combinations(range(T.n), 2))
        if not tally.check(two, inst):
            return ""
    return _describe(ctx, "indecomposable T of order >= 5", f"indecomposable families up to order {FAMILY_MAX}")


def check_er_minus2(ctx: Context, tally: _Tally) -> str:
    family = [i for i in _indecomposable_family(FAMILY_MAX) if i.T.n >= 7]
    for inst in _indecomposable_census(ctx, 7) + family:
        if not tally.check(delete_two(inst.T) is not None, inst):
            return ""
    return _describe(ctx, "indecomposable T of order >= 7", f"indecomposable families of order 7..{FAMILY_MAX}")


def check_bi_minus1(ctx: Context, tally: _Tally) -> str:
    family = [i for i in _noncritical_family(FAMILY_MAX) if i.T.n >= 7]
    for inst in list(ctx.census_instances(7, pred=_noncritical)) + family:
        if not tally.check(delete_one_noncritical(inst.T) is not None, inst):
            return ""
    return _describe(ctx, "non-critical indecomposable T of order >= 7", f"non-critical families of order 7..{FAMILY_MAX}")


def check_gaku_plus1(ctx: Context, tally: _Tally) -> str:
    fallback = 0
    for inst in list(ctx.census_instances(6, 7, pred=_noncritical)) + _noncritical_family(11):
        T = inst.T
        table = kernels.indecomposable_table(T.out, T.n)
        for base in range(T.full):
            if table[base] and kernels.popcount(base) >= 5:
                found = find_one_vertex_extension(T, base)
                if not tally.check(found is not None, inst, X=members(base)):
                    return ""
                fallback += not found.in_place
    tally.details["fallback_needed"] = fallback
    return _describe(ctx, "non-critical indecomposable T (orders 6..7), every indecomposable T[X] with 5 <= |X| < n", "non-critical families up to order 11")


def check_pi_neighbors(ctx: Context, tally: _Tally) -> str:
    for inst in _indecomposable_census(ctx) + _indecomposable_family(FAMILY_MAX):
        T = inst.T
        graph = indec_graph(T)
        for x in members(critical_mask(T)):
            nbrs = sorted(graph.neighbors(x))
            rest = T.full ^ (1 << x)
            if len(nbrs) == 1:
                ok = _is_interval_in(T.out, rest, rest ^ (1 << nbrs[0]))
            elif len(nbrs) == 2:
                ok = _is_interval_in(T.out, rest, (1 << nbrs[0]) | (1 << nbrs[1]))
            else:
                ok = len(nbrs) == 0
            if not tally.check(ok, inst, vertex=x, neighbors=nbrs):
                return ""
    return _describe(ctx, "every critical vertex of every indecomposable T of order >= 5", f"indecomposable families up to order {FAMILY_MAX}")


def check_xxx_component(ctx: Context, tally: _Tally) -> str:
    family = [i for i in _noncritical_family(FAMILY_MAX) if i.T.n >= 7]
    for inst in list(ctx.census_instances(7, pred=_noncritical)) + family:
        T = inst.T
        noncrit = T.full & ~critical_mask(T)
        for comp in indec_graph(T).components:
            if len(comp) >= 2:
                mask = sum(1 << v for v in comp)
                if not tally.check(bool(mask & noncrit), inst, component=comp):
                    return ""
    return _describe(ctx, "every component of size >= 2 of I(T), T non-critical indecomposable of order >= 7", f"non-critical families of order 7..{FAMILY_MAX}")


def check_yyyy_transitive(ctx: Context, tally: _Tally) -> str:
    for n in ctx.orders(4):
        if n % 2:
            continue
        for idx, T in enumerate(ctx.census(n)):
            if any(is_transitive(delete(T, [x])) for x in range(n)):
                if not tally.check(not _indec(T), Instance(f"census n={n} #{idx}", T)):
                    return ""
    family = [Instance(f"ORDER_On({m})", gen(Family.ORDER_On, m)) for m in range(4, FAMILY_MAX + 1, 2)]
    for inst in family:
        tally.check(not _indec(inst.T), inst)
    return _describe(ctx, "even-order T containing a transitive subtournament on all but one vertex", "even transitive orders up to 16")


def _image_graph(edges, mult: int, m: int) -> set[frozenset[int]]:
    return {frozenset(((a * mult) % m, (b * mult) % m)) for a, b in edges}


def check_critical_classification(ctx: Context, tally: _Tally) -> str:
    identified = {}
    for n in ctx.orders(5):
        critical = [T for T in ctx.census(n) if T.n >= 5 and _indec(T) and critical_mask(T) == T.full]
        expected = set()
        if n % 2:
            k = (n - 1) // 2
            expected = _codes([t_odd(k), u_odd(k), w_odd(k)])
        got = _codes(critical)
        identified[str(n)] = len(critical)
        inst = Instance(f"census n={n}", critical[0] if critical else ctx.census(n)[0])
        if not tally.check(got == expected and len(critical) == len(expected), inst, critical_classes=len(critical), expected=len(expected)):
            return ""
    tally.details["critical_classes_by_order"] = identified
    for k in range(2, 7):
        m = 2 * k + 1
        mult = k + 1
        cycle = [(i, (i + 1) % m) for i in range(m)]
        path = [(i, i + 1) for i in range(m - 1)]
        for name, T, expect in (
            ("T_ODD", t_odd(k), _image_graph(cycle, mult, m)),
            ("U_ODD", u_odd(k), _image_graph(path, mult, m)),
            ("W_ODD", w_odd(k), {frozenset((i, i + 1)) for i in range(m - 2)}),
        ):
            got = {frozenset(e) for e in indec_graph(T).edges}
            if not tally.check(got == expect, Instance(f"{name}({k})", T), edges=sorted(map(sorted, got))):
                return ""
    return _describe(ctx, "critical census classes are exactly T, U, W at odd orders and absent at even orders", "indecomposability graph shapes of T, U, W up to order 13")


def _deletion_maps(k: int) -> Iterator[tuple[str, Tournament, int, Tournament, dict[int, int]]]:
    """The explicit relabelings sending D_{2k+1} - X onto D_{2k-1}."""
    top = 2 * k
    W, W_small = w_odd(k), w_odd(k - 1)
    for i in range(top - 1):
        X = {i, i + 1}
        yield "W_ODD", W, (1 << i) | (1 << (i + 1)), W_small, {
            v: v if v <= i - 1 else v - 2 for v in range(top + 1) if v not in X
        }
    T, T_small = t_odd(k), t_odd(k - 1)
    X = {0, k + 1}
    yield "T_ODD", T, 1 | (1 << (k + 1)), T_small, {
        v: v - 1 if 1 <= v <= k else v - 2 for v in range(top + 1) if v not in X
    }
    U, U_small = u_odd(k), u_odd(k - 1)
    for i in range(1, k + 1):
        X = {i, k + i}
        yield "U_ODD", U, (1 << i) | (1 << (k + i)), U_small, {
            v: v if v <= i - 1 else (v - 1 if v <= i + k - 1 else v - 2)
            for v in range(top + 1) if v not in X
        }
        X = {i - 1, k + i}
        yield "U_ODD", U, (1 << (i - 1)) | (1 << (k + i)), U_small, {
            v: v if v <= i - 2 else (v - 1 if v <= i + k - 1 else v - 2)
            for v in range(top + 1) if v not in X
        }


def _maps_to(big: Tournament, removed: int, small: Tournament, f: dict[int, int]) -> bool:
    if sorted(f.values()) != list(range(small.n)) or set(f) != set(members(big.full & ~removed)):
        return False
    return all(big.beats(a, b) == small.beats(f[a], f[b]) for a in f for b in f if a != b)


def check_t_abrite_t(ctx: Context, tally: _Tally) -> str:
    for k in range(2, 6):
        for tag, build in ((Family.T_ODD, t_odd), (Family.U_ODD, u_odd), (Family.W_ODD, w_odd)):
            D = build(k)
            inst = Instance(str(FamilyKind(tag, k)), D)
            table = kernels.indecomposable_table(D.out, D.n)
            for sub in range(1 << D.n):
                size = kernels.popcount(sub)
                if size < 5 or not table[sub]:
                    continue
                ok = size % 2 == 1 and _same_class(induced(D, sub), build((size - 1) // 2))
                if not tally.check(ok, inst, subset=members(sub)):
                    return ""
    for k in range(3, 6):
        T = t_odd(k)
        rotation = [(i + 1) % (2 * k + 1) for i in range(2 * k + 1)]
        if not tally.check(all(T.beats(a, b) == T.beats(rotation[a], rotation[b]) for a in range(T.n) for b in range(T.n) if a != b), Instance(f"T_ODD({k})", T), map="rotation"):
            return ""
        for name, big, removed, small, f in _deletion_maps(k):
            inst = Instance(f"{name}({k})", big)
            edge = _indec(big, big.full & ~removed)
            if not tally.check(edge and _maps_to(big, removed, small, f), inst, removed=members(removed), map=f):
                return ""
    return "indecomposable subtournaments of order >= 5 of T, U, W up to order 11; explicit relabelings for orders 7..11"


def _omission_report(ctx, tally, name: str, keep: Callable[[Tournament], bool], expected_at: Callable[[int], list[tuple[str, Tournament]]]) -> dict:
    identified = {}
    for n in ctx.orders(5):
        census = [T for T in ctx.census(n) if _indec(T)]
        kept = [T for T in census if keep(T)]
        expected = expected_at(n)
        tally.count += len(census) - 1
        labels = sorted(label for label, E in expected if any(_same_class(E, T) for T in kept))
        ok = len(kept) == len(expected) == len(labels)
        identified[str(n)] = labels
        inst = Instance(f"census n={n}", kept[0] if kept else census[0])
        if not tally.check(ok, inst, kept=len(kept), expected=[label for label, _ in expected], matched=labels):
            break
    tally.details[name] = identified
    return identified


def _odd_t(n: int) -> list[tuple[str, Tournament]]:
    return [(f"T_ODD({(n - 1) // 2})", t_odd((n - 1) // 2))] if n % 2 else []


def _latka_expected(n: int) -> list[tuple[str, Tournament]]:
    found = []
    if n % 2:
        k = (n - 1) // 2
        found += [(f"T_ODD({k})", t_odd(k)), (f"U_ODD({k})", u_odd(k))]
    if n == 6:
        found.append(("B6", b6()))
    if n == 7:
        found.append(("PALEY7", paley7()))
    return found


_T5, _U5, _W5, _D4 = t_odd(2), u_odd(2), w_odd(2), d4()


def _omits(H: Tournament, T: Tournament) -> bool:
    return T.n < H.n or embeds(H, T) is None


def check_latka(ctx: Context, tally: _Tally) -> str:
    _omission_report(ctx, tally, "omitting_W5", lambda T: _omits(_W5, T), _latka_expected)
    if not tally.failed:
        for inst in _indecomposable_family(11):
            is_named = any(_same_class(E, inst.T) for _, E in _latka_expected(inst.T.n))
            if not tally.check(_omits(_W5, inst.T) == is_named, inst):
                break
    return _describe(ctx, "indecomposable classes omitting W5 are exactly B6, P7, T, U", "indecomposable families up to order 11")


def check_houma(ctx: Context, tally: _Tally) -> str:
    for inst in _indecomposable_census(ctx) + _indecomposable_family(11):
        T = inst.T
        if _omits(_T5, T):
            continue
        is_t = T.n % 2 == 1 and _same_class(T, t_odd((T.n - 1) // 2))
        if not tally.check(is_t or (not _omits(_U5, T) and not _omits(_W5, T)), inst):
            break
    return _describe(ctx, "indecomposable T embedding T5", "indecomposable families up to order 11")


def check_uw5_free(ctx: Context, tally: _Tally) -> str:
    _omission_report(ctx, tally, "omitting_U5_and_W5", lambda T: _omits(_U5, T) and _omits(_W5, T), _odd_t)
    if not tally.failed:
        for inst in _indecomposable_family(11):
            T = inst.T
            is_t = T.n % 2 == 1 and _same_class(T, t_odd((T.n - 1) // 2))
            if not tally.check((_omits(_U5, T) and _omits(_W5, T)) == is_t, inst):
                break
    return _describe(ctx, "indecomposable T omits U5 and W5 iff T is T_{2n+1}", "indecomposable families up to order 11")


def check_gl_d4(ctx: Context, tally: _Tally) -> str:
    _omission_report(ctx, tally, "omitting_D4", lambda T: _omits(_D4, T), _odd_t)
    if not tally.failed:
        for k in range(2, 7):
            T = t_odd(k)
            for x in range(T.n):
                if not tally.check(is_transitive(induced(T, T.out[x])), Instance(f"T_ODD({k})", T), vertex=x):
                    break
    return _describe(ctx, "indecomposable classes omitting D4 are exactly T_{2n+1}", "out-neighbourhoods of T_{2n+1} up to order 13")


def check_fn_properties(ctx: Context, tally: _Tally) -> str:
    strong = {}
    for n in range(5, 13):
        F = f_n(n)
        inst = Instance(f"F_N({n})", F)
        if not tally.check(_indec(F), inst, property="indecomposable"):
            break
        if n >= 6 and not tally.check(critical_mask(F) == F.full & ~1 & ~(1 << (n - 1)), inst, critical=members(critical_mask(F))):
            break
        sc = members(strongly_critical_mask(F))
        strong[str(n)] = sc
        if n >= 10 and not tally.check(not sc, inst, strongly_critical=sc):
            break
    tally.details["strongly_critical"] = strong
    return "F_n for 5 <= n <= 12"


def check_lemma_ordering(ctx: Context, tally: _Tally) -> str:
    for inst in ctx.census_instances(6, 7, pred=_noncritical):
        T = inst.T
        table = kernels.indecomposable_table(T.out, T.n)
        by_code: dict[str, list[int]] = {}
        for sub in range(T.full):
            if table[sub] and 5 <= kernels.popcount(sub) and T.n - kernels.popcount(sub) <= 2:
                by_code.setdefault(canonical_form(induced(T, sub)).code, []).append(sub)
        for code, subs in by_code.items():
            for sub in subs:
                ok = any(_orderable(T, copy) for copy in subs)
                if not tally.check(ok, inst, H=members(sub)):
                    return ""
    return _describe(ctx, "non-critical indecomposable T (orders 6..7) and indecomposable H with 5 <= |H| < n, n - |H| <= 2", "no family instances")


def _orderable(T: Tournament, base: int) -> bool:
    for order in permutations(members(T.full & ~base)):
        grown = base
        for x in order:
            grown |= 1 << x
            if not (_indec(T, grown) and any(_indec(T, grown ^ (1 << y)) for y in members(grown))):
                break
        else:
            return True
    return False


def check_f_decreasing(ctx: Context, tally: _Tally) -> str:
    f_by_code: dict[str, int] = {}
    hi = min(ctx.max_n, 7)
    hosts = list(ctx.census_instances(6, 7, pred=_noncritical)) + _noncritical_family(12)
    for inst in hosts:
        T = inst.T
        fT = f_value(T)
        table = kernels.indecomposable_table(T.out, T.n)
        seen = set()
        for size in range(6, min(hi, T.n - 1) + 1):
            for sub in _masks_of_size(T.n, size):
                if not table[sub]:
                    continue
                H = induced(T, sub)
                if critical_mask(H) == H.full:
                    continue
                code = canonical_form(H).code
                if code in seen:
                    continue
                seen.add(code)
                if code not in f_by_code:
                    f_by_code[code] = f_value(H)
                if not tally.check(fT <= f_by_code[code], inst, subtournament=members(sub), f_host=fT, f_sub=f_by_code[code]):
                    return ""
    family = _noncritical_family(12)
    for big in family:
        for small in family:
            if small.T.n < big.T.n and embeds(small.T, big.T) is not None:
                if not tally.check(f_value(big.T) <= f_value(small.T), big, embedded=small.label):
                    return ""
    return _describe(ctx, "host T with every embedded non-critical indecomposable census class of order 6..min(max_n,7)", "non-critical families up to order 12, pairwise")


def check_fact_six(ctx: Context, tally: _Tally) -> str:
    for inst in list(ctx.census_instances(6, pred=_noncritical)) + _noncritical_family(FAMILY_MAX):
        T = inst.T
        found = any(_indec(T, sub) for sub in _masks_of_size(T.n, 6))
        if not tally.check(found, inst):
            break
    return _describe(ctx, "non-critical indecomposable T of order >= 6", f"non-critical families up to order {FAMILY_MAX}")


def check_fact_odd(ctx: Context, tally: _Tally) -> str:
    for inst in _indecomposable_census(ctx) + _indecomposable_family(FAMILY_MAX):
        T = inst.T
        if kernels.popcount(T.full & ~critical_mask(T)) <= 1:
            if not tally.check(T.n % 2 == 1, inst):
                break
    return _describe(ctx, "indecomposable T of order >= 5 with at most one non-critical vertex", f"indecomposable families up to order {FAMILY_MAX}")


def check_f_le_4(ctx: Context, tally: _Tally) -> str:
    if 5 in ctx.orders(5):
        five = [T for T in ctx.census(5) if _noncritical(T)]
        if not tally.check(not five, Instance("census n=5", five[0] if five else ctx.census(5)[0]), noncritical_at_order_5=len(five)):
            return ""
    worst = {}
    for inst in list(ctx.census_instances(6, pred=_noncritical)) + _noncritical_family(FAMILY_MAX):
        f = f_value(inst.T)
        worst[str(inst.T.n)] = max(worst.get(str(inst.T.n), 0), f)
        if not tally.check(f <= 4, inst, f=f):
            break
    tally.details["max_f_by_order"] = worst
    return _describe(ctx, "non-critical indecomposable T (none exist at order 5)", f"non-critical families up to order {FAMILY_MAX}")


def check_w2n2_scv(ctx: Context, tally: _Tally) -> str:
    for k in range(2, 7):
        W = w_even(k)
        inst = Instance(f"W_EVEN({k})", W)
        if not tally.check(_noncritical(W), inst, property="indecomposable and non-critical"):
            return ""
        sc = set(members(strongly_critical_mask(W)))
        if not tally.check(sc == {0, 2 * k - 2, 2 * k - 1, 2 * k}, inst, strongly_critical=sc):
            return ""
        if k >= 3:
            D = delete(W, [2 * k - 3])
            inst = Instance(f"W_EVEN({k})-{2 * k - 3}", D)
            if not tally.check(_noncritical(D) and f_value(D) == 4, inst, f=f_value(D) if _indec(D) else None):
                return ""
    return "W_{2n+2} for 2 <= n <= 6 and W_{2n+2}-(2n-3) for 3 <= n <= 6"

def check_zzz_five(ctx: Context, tally: _Tally) -> str:
    for inst in _indecomposable_census(ctx) + _indecomposable_family(FAMILY_MAX):
        T = inst.T
        found = any(not _omits(H, T) for H in (_T5, _U5, _W5))
        if not tally.check(found, inst):
            break
    return _describe(ctx, "indecomposable T of order >= 5", f"indecomposable families up to order {FAMILY_MAX}")


CHECKS: dict[str, tuple[str, Callable[[Context, _Tally], str]]] = {
    "er-partition": ("outer partition blocks partition V \\ X", check_er_partition),
    "er-plus2": ("indecomposable T[X] extends by two vertices", check_er_plus2),
    "minus-1-2": ("indecomposable T embeds an indecomposable tournament of order n-1 or n-2", check_minus_1_2),
    "er-minus2": ("some T - {x, y} is indecomposable, n >= 7", check_er_minus2),
    "bi-minus1": ("some T - x is indecomposable and non-critical, n >= 7", check_bi_minus1),
    "gaku-plus1": ("H embeds in an indecomposable subtournament of order |H|+1", check_gaku_plus1),
    "pi-neighbors": ("critical x has at most two I(T)-neighbours, with the interval clauses", check_pi_neighbors),
    "xxx-component": ("components of I(T) of size >= 2 hold a non-critical vertex", check_xxx_component),
    "yyyy-transitive": ("2n vertices with a transitive (2n-1)-subtournament is decomposable", check_yyyy_transitive),
    "critical-classification": ("critical tournaments are T, U, W with the stated I(T) shapes", check_critical_classification),
    "t-abrite-t": ("indecomposable subtournaments of T, U, W stay in their type", check_t_abrite_t),
    "zzz-five": ("indecomposable T of order >= 5 embeds T5, U5 or W5", check_zzz_five),
    "latka": ("indecomposable T omitting W5 is B6, P7, T or U", check_latka),
    "houma": ("T embedding T5 is T_{2n+1} or embeds both U5 and W5", check_houma),
    "uw5-free": ("T omits U5 and W5 iff T is T_{2n+1}", check_uw5_free),
    "gl-d4": ("T omitting D4 is T_{2n+1}", check_gl_d4),
    "fn-properties": ("F_n indecomposable, critical set, no strongly critical vertex", check_fn_properties),
    "lemma-ordering": ("H' ~ H with an indecomposable non-critical vertex ordering", check_lemma_ordering),
    "f-decreasing": ("T' embedded in T implies f(T) <= f(T')", check_f_decreasing),
    "fact-six": ("non-critical T of order >= 6 embeds an indecomposable 6-tournament", check_fact_six),
    "fact-odd": ("at most one non-critical vertex forces odd order", check_fact_odd),
    "f-le-4": ("f(T) <= 4 for non-critical indecomposable T", check_f_le_4),
    "w2n2-scv": ("strongly critical set of W_{2n+2} and f of W_{2n+2}-(2n-3)", check_w2n2_scv),
}




def run_check(check_id: str, max_n: int = 7, cache_dir=None, use_cache: bool = True, ctx: Context | None = None) -> CheckResult:
    try:
        statement, fn = CHECKS[check_id]
    except KeyError:
        raise PreconditionError(f"unknown check {check_id!r}; expected one of {list(CHECKS)}") from None
    ctx = ctx or Context(max_n, cache_dir, use_cache)
    tally = _Tally()
    start = time.perf_counter()
    domain = fn(ctx, tally)
    elapsed = time.perf_counter() - start
    log.info("%s: %d instances in %.2fs", check_id, tally.count, elapsed)
    return CheckResult(
        check_id=check_id,
        statement=statement,
        domain_description=domain,
        instances_checked=tally.count,
        status="FAIL" if tally.failed else "PASS",
        vacuous=tally.count == 0,
        counterexample=tally.failure,
        details=tally.details,
    )


def _run_one(args) -> CheckResult:
    check_id, max_n, cache_dir, use_cache = args
    return run_check(check_id, max_n, cache_dir, use_cache)


def run_all(max_n: int = 7, cache_dir=None, use_cache: bool = True, jobs: int = 1) -> list[CheckResult]:
    """Every registered check, in registry order."""
    if jobs > 1:
        # Build the census cache once before workers read it.
        ctx = Context(max_n, cache_dir, use_cache)
        for n in ctx.orders(3):
            ctx.census(n)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, [(c, max_n, cache_dir, use_cache) for c in CHECKS]))
    ctx = Context(max_n, cache_dir, use_cache)
    return [run_check(c, max_n, ctx=ctx) for c in CHECKS]
