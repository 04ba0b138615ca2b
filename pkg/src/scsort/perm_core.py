"""
Permutation values and the elementary transforms used throughout the package.

A permutation of length n is represented as a tuple of the integers 1..n in
one-line notation, e.g. ``(5, 2, 4, 1, 3)``.  All positions in public
interfaces are 1-based.

Text format (shared by the CLI and all exports):

- Compact form: one digit character per entry, no separators ("52413").
  Only valid for n <= 9.
- Separated form: entries joined by spaces or commas ("10 3 1 2 4 5 6 7 8 9"),
  required once n >= 10.
- A token containing any space or comma is parsed as separated form,
  otherwise as compact form.  Serialization emits compact form for n <= 9
  and space-separated form for larger n.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Perm = tuple[int, ...]

#: The six length-3 patterns, in lexicographic order.
PATTERNS: tuple[Perm, ...] = (
    (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1),
)

_SEPARATORS = re.compile(r"[,\s]+")


def as_perm(entries: Iterable[int]) -> Perm:
    """
    Validate and return ``entries`` as a permutation tuple.

    Raises ValueError unless the entries are exactly 1..n, each once, n >= 1.

    >>> as_perm([2, 1, 3])
    (2, 1, 3)
    """
    p = tuple(entries)
    if len(p) < 1:
        raise ValueError("permutation must have length >= 1")
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"entries are not a permutation of 1..{len(p)}: {p}")
    return p


def as_pattern(value: str | Iterable[int]) -> Perm:
    """
    Validate a length-3 pattern given as a string ("213") or a sequence.

    >>> as_pattern("213")
    (2, 1, 3)
    """
    p = parse_perm(value) if isinstance(value, str) else as_perm(value)
    if len(p) != 3:
        raise ValueError(f"pattern must have length exactly 3, got {p}")
    return p


def standardize(seq: Sequence[int]) -> Perm:
    """
    Replace the i-th smallest entry of a distinct-integer sequence with i.

    >>> standardize((4, 8, 2, 9))
    (2, 3, 1, 4)
    >>> standardize((7, 2, 9))
    (2, 1, 3)
    """
    if len(seq) < 1:
        raise ValueError("cannot standardize an empty sequence")
    if len(set(seq)) != len(seq):
        raise ValueError(f"entries must be distinct: {tuple(seq)}")
    rank = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return tuple(rank[v] for v in seq)


def reverse(p: Sequence[int]) -> Perm:
    """
    The reverse: entry i of the result is entry n+1-i of the input.

    >>> reverse((3, 4, 1, 2))
    (2, 1, 4, 3)
    """
    return tuple(p[::-1])


def complement(p: Sequence[int]) -> Perm:
    """
    The complement: each entry x becomes n+1-x.

    >>> complement((1, 2, 3))
    (3, 2, 1)
    """
    n = len(p)
    return tuple(n + 1 - x for x in p)


def index_of(p: Sequence[int], x: int) -> int:
    """
    1-based position of the entry ``x`` in ``p``.

    >>> index_of((5, 1, 2, 4, 3), 2)
    3
    """
    if not 1 <= x <= len(p):
        raise ValueError(f"entry {x} out of range 1..{len(p)}")
    return p.index(x) + 1


def parse_perm(text: str) -> Perm:
    """
    Parse the text format described in the module docstring.

    >>> parse_perm("52413")
    (5, 2, 4, 1, 3)
    >>> parse_perm("10 3 1 2 4 5 6 7 8 9")[0]
    10
    """
    token = text.strip()
    if not token:
        raise ValueError("empty permutation string")
    if " " in token or "," in token:
        parts = [s for s in _SEPARATORS.split(token) if s]
    else:
        parts = list(token)
    try:
        entries = [int(s) for s in parts]
    except ValueError:
        raise ValueError(f"malformed permutation string: {text!r}") from None
    return as_perm(entries)


def format_perm(p: Sequence[int]) -> str:
    """
    Serialize: compact form for n <= 9, space-separated otherwise.

    >>> format_perm((5, 2, 4, 1, 3))
    '52413'
    """
    if len(p) <= 9:
        return "".join(str(x) for x in p)
    return " ".join(str(x) for x in p)
