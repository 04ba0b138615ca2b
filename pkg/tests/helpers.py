"""Shared helpers: exhaustive iteration and structural invariant checks."""

from __future__ import annotations

from itertools import permutations

from scsort import EventKind, MachineTrace, sc_map
from scsort.fertility import FertilityReport


def all_perms(n: int):
    """S_n in lexicographic order."""
    return permutations(range(1, n + 1))


def check_trace(trace: MachineTrace) -> None:
    """Assert the structural invariants every machine trace must satisfy."""
    n = len(trace.input)
    pushes = [e for e in trace.events if e.kind is EventKind.PUSH]
    pops = [e for e in trace.events if e.kind is not EventKind.PUSH]
    assert len(pushes) == n
    assert len(pops) == n
    # steps strictly increase and number the events 1..2n
    assert [e.step for e in trace.events] == list(range(1, 2 * n + 1))
    # pop values, in event order, spell the output
    assert tuple(e.value for e in pops) == trace.output
    # pushes consume the input front-first
    assert tuple(e.value for e in pushes) == trace.input
    # drain pops only after the final push
    last_push = max(e.step for e in pushes)
    for e in pops:
        if e.kind is EventKind.POP_DRAIN:
            assert e.step > last_push
        else:
            assert e.step < last_push
    assert sorted(trace.output) == sorted(trace.input)
    assert trace.events[0].kind is EventKind.PUSH


def check_report(report: FertilityReport) -> None:
    """Assert the invariants of a preimage report carrying its list."""
    assert report.preimages is not None
    assert report.count == len(report.preimages)
    assert len(set(report.preimages)) == len(report.preimages)
    assert list(report.preimages) == sorted(report.preimages)
    for tau in report.preimages:
        assert sc_map(report.sigma, tau) == report.target
