"""Text and JSON serialization: triangle/v1, arc lists, JSON, census files."""

from __future__ import annotations

import json
from collections.abc import Iterable

from .core import Tournament, make_tournament, triangle_bits
from .errors import ParseError, TournamentError

CENSUS_HEADER = "census/v1"


def to_triangle(T: Tournament) -> str:
    return f"{T.n}\n{triangle_bits(T)}\n"


def to_arcs(T: Tournament) -> str:
    return f"{T.n}\n" + "".join(f"{i} {j}\n" for i, j in T.arcs())


def to_json(T: Tournament) -> str:
    return json.dumps({"n": T.n, "arcs": [list(a) for a in T.arcs()]}) + "\n"


WRITERS = {"triangle": to_triangle, "arcs": to_arcs, "json": to_json}


def dumps(T: Tournament, fmt: str = "triangle") -> str:
    try:
        return WRITERS[fmt](T)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of {sorted(WRITERS)}") from None


def _parse_order(line: str, lineno: int = 1) -> int:
    token = line.strip()
    if not token.isdigit():
        col = len(line) - len(line.lstrip()) + 1
        raise ParseError(f"expected a vertex count, got {token!r}", lineno, col)
    return int(token)


def from_bits(n: int, bits: str, lineno: int = 2) -> Tournament:
    expected = n * (n - 1) // 2
    if len(bits) != expected:
        raise ParseError(f"expected {expected} bits for n={n}, got {len(bits)}", lineno, 1)
    out = [0] * n
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            ch = bits[pos]
            if ch == "1":
                out[i] |= 1 << j
            elif ch == "0":
                out[j] |= 1 << i
            else:
                raise ParseError(f"unexpected character {ch!r}", lineno, pos + 1)
            pos += 1
    return Tournament(n, tuple(out))


def parse_triangle(text: str) -> Tournament:
    lines = text.split("\n")
    n = _parse_order(lines[0])
    bits = lines[1].strip() if len(lines) > 1 else ""
    return from_bits(n, bits)


def parse_arcs(text: str) -> Tournament:
    lines = text.split("\n")
    n = _parse_order(lines[0])
    arcs = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ParseError(f"expected 'i j', got {line.strip()!r}", lineno, 1)
        arcs.append((int(parts[0]), int(parts[1])))
    try:
        return make_tournament(n, arcs)
    except TournamentError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), 1, 1) from exc


def parse_json(text: str) -> Tournament:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(data, dict) or "n" not in data or "arcs" not in data:
        raise ParseError('expected an object with keys "n" and "arcs"')
    try:
        return make_tournament(data["n"], [tuple(a) for a in data["arcs"]])
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def sniff(text: str) -> str:
    """Guess the format of serialized input from its first two lines."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    if stripped.startswith(CENSUS_HEADER):
        return "census"
    lines = text.split("\n")
    second = lines[1].strip() if len(lines) > 1 else ""
    # A single token on line 2 is a bit-string (possibly malformed); arcs have two.
    if second and len(second.split()) == 1:
        return "triangle"
    if not second and len([ln for ln in lines[1:] if ln.strip()]) == 0:
        return "triangle"
    return "arcs"


def loads(text: str) -> Tournament:
    fmt = sniff(text)
    if fmt == "json":
        return parse_json(text)
    if fmt == "census":
        raise ParseError("census files hold many tournaments; expected a single one")
    if fmt == "triangle":
        return parse_triangle(text)
    return parse_arcs(text)


def dump_census(n: int, representatives: Iterable[Tournament]) -> str:
    reps = list(representatives)
    body = "".join(triangle_bits(T) + "\n" for T in reps)
    return f"{CENSUS_HEADER} n={n} count={len(reps)}\n" + body


def load_census(text: str) -> tuple[int, list[Tournament]]:
    lines = text.split("\n")
    fields = lines[0].split()
    if not fields or fields[0] != CENSUS_HEADER:
        raise ParseError(f"expected header starting with {CENSUS_HEADER!r}")
    try:
        meta = dict(f.split("=", 1) for f in fields[1:])
        n, count = int(meta["n"]), int(meta["count"])
    except (KeyError, ValueError) as exc:
        raise ParseError("header needs n=<int> count=<int>", 1, len(fields[0]) + 2) from exc
    reps = [from_bits(n, ln.strip(), lineno) for lineno, ln in enumerate(lines[1:], 2) if ln.strip()]
    if len(reps) != count:
        raise ParseError(f"header announces {count} records, found {len(reps)}")
    return n, reps
