"""Text interchange format for permutation arrays.

Every CLI subcommand reads and writes this format:

    psca n=<n> k=<k>
    # optional comments
    1 2 3 4 5
    5 4 3 2 1

Line 1 declares the ground-set size and the intended k (a declaration, not a
verified claim).  Each following non-comment line is one permutation as n
space-separated 1-based integers.  Trailing whitespace is ignored.
"""

from __future__ import annotations

import io
from typing import TextIO

from psca.errors import InputError
from psca.perms import PermutationArray


def format_array(X: PermutationArray, k: int) -> str:
    lines = [f"psca n={X.n} k={k}"]
    lines.extend(" ".join(str(s) for s in perm) for perm in X.perms)
    return "\n".join(lines) + "\n"


def write_array(X: PermutationArray, k: int, fp: TextIO) -> None:
    fp.write(format_array(X, k))


def read_array(fp: TextIO) -> tuple[PermutationArray, int]:
    """Parse an array file; returns the array and its declared k."""
    header = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(fp, start=1):
        line = raw.rstrip()
        if not line or line.lstrip().startswith("#"):
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise InputError(f"line {lineno}: not a permutation line: {line!r}") from exc
    if header is None:
        raise InputError("missing header line 'psca n=<n> k=<k>'")
    n, k = header
    try:
        return PermutationArray.from_rows(n, rows), k
    except InputError as exc:
        raise InputError(f"bad permutation row: {exc}") from exc


def parse_array(text: str) -> tuple[PermutationArray, int]:
    return read_array(io.StringIO(text))


def _parse_header(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 3 or parts[0] != "psca":
        raise InputError(f"line {lineno}: expected header 'psca n=<n> k=<k>', got {line!r}")
    values = {}
    for part in parts[1:]:
        key, _, val = part.partition("=")
        if key not in ("n", "k") or not val.isdigit():
            raise InputError(f"line {lineno}: bad header field {part!r}")
        values[key] = int(val)
    if set(values) != {"n", "k"}:
        raise InputError(f"line {lineno}: header must declare both n and k")
    return values["n"], values["k"]
