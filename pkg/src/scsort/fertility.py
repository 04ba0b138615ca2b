"""
Preimage enumeration and fertility counts for the SC machine.

The fertility of a target permutation under a pattern is the number of
inputs the machine sends to it.  No closed form is known, so these routines
enumerate candidate inputs exhaustively, in lexicographic order.  Two
exact-size reductions keep the search at desk scale:

- Pruning: the machine always emits the first input entry last, so only
  candidates whose first entry equals the target's last entry can match.
  This cuts the search space by a factor of n and is on by default; the
  ``use_pruning=False`` path exists to cross-validate it.
- Partitioning: the lexicographic space splits into contiguous blocks by
  the entry in the first free position, so blocks can be scanned by
  parallel workers and concatenated without re-sorting.  Worker processes
  engage automatically only when the search space is large.

Enumeration is guarded at n <= 11 (about 4e7 machine runs); pass
``force=True`` to go beyond.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator

from . import sc_machine
from .perm_core import Perm, as_pattern, as_perm, format_perm

#: Largest permutation length enumerated without ``force=True``.
MAX_ENUM_N = 11

# Free-slot count above which a scan spreads over worker processes.
_PARALLEL_THRESHOLD = 10


class EnumerationLimitError(RuntimeError):
    """Raised when an enumeration would exceed the factorial guard."""


@dataclass(frozen=True)
class FertilityReport:
    """Result of one preimage search: the count, optionally the sorted list."""

    sigma: Perm
    target: Perm
    count: int
    preimages: tuple[Perm, ...] | None = None


@dataclass
class SpectrumTable:
    """
    Fertility of every permutation of S_n under one pattern.

    ``counts`` stores only permutations actually hit by the machine; any
    permutation of S_n absent from it has fertility 0 (see
    ``fertility_of``).  ``histogram`` maps each fertility value, including
    0 when non-image permutations exist, to how many permutations attain it.
    """

    sigma: Perm
    n: int
    counts: dict[Perm, int] = field(repr=False)
    histogram: dict[int, int]

    def fertility_of(self, pi: Iterable[int]) -> int:
        pi = as_perm(pi)
        if len(pi) != self.n:
            raise ValueError(f"expected a permutation of length {self.n}, got {pi}")
        return self.counts.get(pi, 0)

    def iter_rows(self) -> Iterator[tuple[Perm, int]]:
        """All of S_n in lexicographic order with each fertility (0 included)."""
        for p in permutations(range(1, self.n + 1)):
            yield p, self.counts.get(p, 0)

    def counts_csv(self) -> str:
        lines = ["permutation,fertility"]
        lines.extend(f"{format_perm(p)},{f}" for p, f in self.iter_rows())
        return "\n".join(lines) + "\n"

    def histogram_csv(self) -> str:
        lines = ["fertility,count"]
        lines.extend(f"{f},{c}" for f, c in sorted(self.histogram.items()))
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "sigma": format_perm(self.sigma),
            "n": self.n,
            "counts": {format_perm(p): f for p, f in self.iter_rows()},
            "histogram": {str(f): c for f, c in sorted(self.histogram.items())},
        }


def _check_guard(n: int, force: bool) -> None:
    if n > MAX_ENUM_N and not force:
        raise EnumerationLimitError(
            f"enumeration over S_{n} exceeds the n <= {MAX_ENUM_N} guard "
            f"({math.factorial(n)} machine runs); pass force=True / --force to override"
        )


def _scan_block(args: tuple[Perm, Perm, Perm, tuple[int, ...], bool]) -> list[Perm] | int:
    """
    Scan one lexicographic block: candidates are ``prefix`` followed by every
    arrangement of ``rest``.  Returns the matches, or only their number when
    ``collect`` is false.
    """
    sigma, target, prefix, rest, collect = args
    rule = sc_machine._pop_rule(sigma)
    run = sc_machine._map_raw
    matches: list[Perm] = []
    count = 0
    for suffix in permutations(rest):
        tau = prefix + suffix
        if run(rule, tau) == target:
            if collect:
                matches.append(tau)
            else:
                count += 1
    return matches if collect else count


def _effective_jobs(jobs: int | None, free_slots: int) -> int:
    if jobs is not None:
        if jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {jobs}")
        return jobs
    if free_slots >= _PARALLEL_THRESHOLD:
        return min(os.cpu_count() or 1, 8)
    return 1


def _scan(sigma: Perm, target: Perm, use_pruning: bool, jobs: int | None,
          collect: bool) -> list[Perm] | int:
    n = len(target)
    if use_pruning:
        prefix: Perm = (target[-1],)
        rest = tuple(x for x in range(1, n + 1) if x != target[-1])
    else:
        prefix = ()
        rest = tuple(range(1, n + 1))
    njobs = _effective_jobs(jobs, len(rest))
    if njobs <= 1 or len(rest) < 2:
        return _scan_block((sigma, target, prefix, rest, collect))
    # One block per choice of the first free entry; ascending choices keep
    # the concatenation in lexicographic order.
    tasks = [
        (sigma, target, prefix + (c,), tuple(x for x in rest if x != c), collect)
        for c in rest
    ]
    with ProcessPoolExecutor(max_workers=njobs) as pool:
        results = list(pool.map(_scan_block, tasks))
    if collect:
        merged: list[Perm] = []
        for block in results:
            merged.extend(block)
        return merged
    return sum(results)


def preimages(sigma: Perm | str, pi: Iterable[int], *, use_pruning: bool = True,
              force: bool = False, jobs: int | None = None) -> FertilityReport:
    """
    Enumerate every input the machine maps to ``pi``, sorted
    lexicographically.

    >>> preimages("213", (1, 2, 4, 3)).preimages
    ((3, 4, 1, 2), (3, 4, 2, 1))
    """
    sigma = as_pattern(sigma)
    pi = as_perm(pi)
    _check_guard(len(pi), force)
    matches = _scan(sigma, pi, use_pruning, jobs, collect=True)
    return FertilityReport(sigma, pi, len(matches), tuple(matches))


def fertility(sigma: Perm | str, pi: Iterable[int], *, use_pruning: bool = True,
              force: bool = False, jobs: int | None = None) -> int:
    """
    Number of preimages of ``pi`` under the machine; 0 when ``pi`` is not in
    the image.

    >>> fertility("213", (1, 2, 4, 3))
    2
    """
    sigma = as_pattern(sigma)
    pi = as_perm(pi)
    _check_guard(len(pi), force)
    return _scan(sigma, pi, use_pruning, jobs, collect=False)


def spectrum(sigma: Perm | str, n: int, *, force: bool = False) -> SpectrumTable:
    """
    Fertility of every permutation of S_n under ``sigma``, computed by one
    forward sweep: run the machine on every input and tally the outputs.
    """
    sigma = as_pattern(sigma)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_guard(n, force)
    rule = sc_machine._pop_rule(sigma)
    run = sc_machine._map_raw
    counts: dict[Perm, int] = {}
    for tau in permutations(range(1, n + 1)):
        out = run(rule, tau)
        counts[out] = counts.get(out, 0) + 1
    histogram = dict(Counter(counts.values()))
    missed = math.factorial(n) - len(counts)
    if missed:
        histogram[0] = missed
    return SpectrumTable(sigma, n, counts, dict(sorted(histogram.items())))
