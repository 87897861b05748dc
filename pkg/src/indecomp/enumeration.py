"""All tournaments of a given order up to isomorphism, with named filters."""

from __future__ import annotations

import logging
import os
import tempfile
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import platformdirs

from .core import Tournament, is_indecomposable, is_transitive
from .criticality import is_critical_tournament, is_noncritical_indecomposable
from .errors import CapacityError, ParseError, PreconditionError
from .families import d4, u_odd, w_odd
from .formats import dump_census, load_census
from .morphisms import canonical_form, canonical_tournament, embeds

log = logging.getLogger(__name__)

MIN_ORDER = 3
MAX_ORDER = 8
FORMAT_VERSION = 1
CACHE_ENV = "INDECOMP_CACHE"


@dataclass(frozen=True)
class Census:
    order: int
    representatives: tuple[Tournament, ...]
    counts: dict[str, int] = field(default_factory=dict, hash=False)

    def __len__(self) -> int:
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)


def _omits(H: Tournament) -> Callable[[Tournament], bool]:
    return lambda T: T.n < H.n or embeds(H, T) is None


_W5, _U5, _D4 = w_odd(2), u_odd(2), d4()

PREDICATES: dict[str, Callable[[Tournament], bool]] = {
    "indecomposable": is_indecomposable,
    "critical-tournament": is_critical_tournament,
    "noncritical-indecomposable": is_noncritical_indecomposable,
    "omits-W5": _omits(_W5),
    "omits-D4": _omits(_D4),
    "omits-U5-and-W5": lambda T: _omits(_U5)(T) and _omits(_W5)(T),
    "transitive": is_transitive,
}


def resolve_cache_dir(cache_dir: str | os.PathLike | None = None) -> Path:
    if cache_dir is not None:
        return Path(cache_dir)
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    return Path(platformdirs.user_cache_dir("indecomp"))


def _cache_path(cache_dir: Path, n: int) -> Path:
    return cache_dir / f"census-v{FORMAT_VERSION}-n{n}.txt"


def _extend_chunk(reps: list[Tournament]) -> dict[str, Tournament]:
    found: dict[str, Tournament] = {}
    for T in reps:
        k = T.n
        for wins in range(1 << k):
            out = tuple(row if wins >> v & 1 else row | 1 << k for v, row in enumerate(T.out))
            child = Tournament(k + 1, out + (wins,))
            code = canonical_form(child).code
            if code not in found:
                found[code] = child
    return found


def extend_classes(reps: Iterable[Tournament], jobs: int = 1) -> list[Tournament]:
    """Classes of order ``k+1`` from all classes of order ``k``, canonically labelled, sorted by code."""
    reps = list(reps)
    if jobs > 1 and len(reps) > jobs:
        chunks = [reps[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_extend_chunk, chunks))
    else:
        parts = [_extend_chunk(reps)]
    merged: dict[str, Tournament] = {}
    for part in parts:
        for code, child in part.items():
            merged.setdefault(code, child)
    return [canonical_tournament(merged[code]) for code in sorted(merged)]


def _read_cache(path: Path, n: int) -> list[Tournament] | None:
    try:
        order, reps = load_census(path.read_text())
    except (OSError, ParseError) as exc:
        if path.exists():
            log.warning("ignoring unreadable census cache %s: %s", path, exc)
        return None
    return reps if order == n else None


def _write_cache(path: Path, n: int, reps: list[Tournament]) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile("w", dir=path.parent, delete=False, suffix=".tmp") as fh:
            fh.write(dump_census(n, reps))
        os.replace(fh.name, path)
    except OSError as exc:
        log.warning("could not write census cache %s: %s", path, exc)


def enumerate_census(
    n: int,
    cache_dir: str | os.PathLike | None = None,
    use_cache: bool = True,
    jobs: int = 1,
) -> Census:
    """Every ``n``-vertex tournament up to isomorphism, one canonical representative each."""
    if n > MAX_ORDER:
        raise CapacityError(f"census is limited to order {MAX_ORDER}, got {n}")
    if n < MIN_ORDER:
        raise PreconditionError(f"census needs order >= {MIN_ORDER}, got {n}")
    directory = resolve_cache_dir(cache_dir) if use_cache else None
    reps = _build(n, directory, jobs)
    return Census(n, tuple(reps), {"all": len(reps)})


def _build(n: int, directory: Path | None, jobs: int) -> list[Tournament]:
    if n == 1:
        return [Tournament(1, (0,))]
    if directory is not None and n >= MIN_ORDER:
        cached = _read_cache(_cache_path(directory, n), n)
        if cached is not None:
            return cached
    reps = extend_classes(_build(n - 1, directory, jobs), jobs)
    if directory is not None and n >= MIN_ORDER:
        _write_cache(_cache_path(directory, n), n, reps)
    return reps


def filter_census(census: Census, predicate: str) -> Census:
    try:
        test = PREDICATES[predicate]
    except KeyError:
        raise PreconditionError(
            f"unknown predicate {predicate!r}; expected one of {sorted(PREDICATES)}"
        ) from None
    kept = tuple(T for T in census.representatives if test(T))
    return Census(census.order, kept, {**census.counts, predicate: len(kept)})
