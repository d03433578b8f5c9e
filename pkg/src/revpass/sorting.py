"""
The two sorting machines.

The single-stack machine pushes the input left to right and pops an entry
only when it is the next value needed by the output.  When no legal move
remains, the stack contents are returned to the input in the reverse of
their prior order (popped top to bottom) and the pass repeats; the rev-tier
is the number of such returns, i.e. the pass count minus one.

The equivalent network machine uses ``k`` stacks in series.  An entry may
leave a stack only to travel directly to the output (when it is the next
needed value) or, once nothing remains to its right, to hop one stack
leftward.  Sorting succeeds with k stacks exactly when the rev-tier is at
most k-1; that equivalence is enforced by exhaustive test, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .permutation import format_permutation

__all__ = [
    "PassRecord",
    "SortTrace",
    "SeriesMachineState",
    "single_pass",
    "rev_tier_by_simulation",
    "sortable_within",
    "series_machine_sort",
    "trace_lines",
    "trace_json_dict",
    "machine_trace_lines",
    "machine_trace_json_dict",
]


@dataclass(frozen=True)
class PassRecord:
    """One reverse pass: what came in, what was emitted, what stayed behind."""

    input_at_start: tuple[int, ...]
    emitted: tuple[int, ...]
    residual_stack_bottom_to_top: tuple[int, ...]
    # (action, value) steps, recorded only when a rendered trace is wanted.
    events: tuple[tuple[str, int], ...] | None = None


@dataclass(frozen=True)
class SortTrace:
    passes: tuple[PassRecord, ...]
    final_output: tuple[int, ...]
    tier: int


def single_pass(
    values: Sequence[int],
    next_needed: int,
    events: list[tuple[str, int]] | None = None,
) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """
    Run one pass of the restricted stack over the given input.

    Pushes values left to right; whenever the stack top equals the next
    needed output value it is popped, repeatedly.  Returns the emitted
    values, the residual input for the following pass (the stack popped top
    to bottom), and the new next-needed value.

    >>> single_pass((2, 4, 1, 3), 1)
    ((1,), (3, 4, 2), 2)
    >>> single_pass((3, 4, 2), 2)
    ((2,), (4, 3), 3)
    >>> single_pass((1, 2, 3), 1)
    ((1, 2, 3), (), 4)
    """
    stack: list[int] = []
    emitted: list[int] = []
    for v in values:
        stack.append(v)
        if events is not None:
            events.append(("push", v))
        while stack and stack[-1] == next_needed:
            emitted.append(stack.pop())
            if events is not None:
                events.append(("pop", next_needed))
            next_needed += 1
    residual_input = tuple(reversed(stack))
    return tuple(emitted), residual_input, next_needed


def rev_tier_by_simulation(
    perm: Sequence[int], record_steps: bool = False
) -> tuple[int, SortTrace]:
    """
    Sort a permutation by repeated reverse passes, measuring the rev-tier.

    Iterates single_pass until the residual is empty; every pass over a
    non-empty residual emits at least the current next-needed value, so the
    loop always terminates.  The tier is the number of passes minus one.

    >>> rev_tier_by_simulation((2, 3, 1))[0]
    1
    >>> rev_tier_by_simulation((2, 4, 1, 3))[0]
    2
    >>> rev_tier_by_simulation((1, 2, 3, 4, 5))[0]
    0
    """
    remaining = tuple(perm)
    next_needed = 1
    passes: list[PassRecord] = []
    output: list[int] = []
    while remaining:
        events: list[tuple[str, int]] | None = [] if record_steps else None
        emitted, residual, next_needed = single_pass(remaining, next_needed, events)
        passes.append(
            PassRecord(
                input_at_start=remaining,
                emitted=emitted,
                residual_stack_bottom_to_top=tuple(reversed(residual)),
                events=tuple(events) if events is not None else None,
            )
        )
        output.extend(emitted)
        remaining = residual
    tier = max(len(passes) - 1, 0)
    return tier, SortTrace(tuple(passes), tuple(output), tier)


def _tier_by_simulation(perm: Sequence[int]) -> int:
    """Tier via the same pass loop, without building a trace (sweep path)."""
    remaining: Sequence[int] = perm
    next_needed = 1
    passes = 0
    while remaining:
        _, remaining, next_needed = single_pass(remaining, next_needed)
        passes += 1
    return max(passes - 1, 0)


def sortable_within(perm: Sequence[int], passes: int) -> bool:
    """
    True iff the permutation sorts within the given number of reverse passes.

    >>> sortable_within((2, 3, 1), 2)
    True
    >>> sortable_within((2, 3, 1), 1)
    False
    """
    if passes < 1:
        raise ValueError(f"need at least one pass, got {passes}")
    return _tier_by_simulation(perm) <= passes - 1


@dataclass(frozen=True)
class SeriesMachineState:
    """
    Snapshot of the stacks-in-series machine after one move.

    ``stacks[0]`` is the rightmost stack (nearest the input) and the last one
    is nearest the output; each stack is bottom to top.  ``action`` is the
    move that produced this state ("start" for the initial snapshot) and
    ``value`` the moved entry.
    """

    stacks: tuple[tuple[int, ...], ...]
    input: tuple[int, ...]
    output: tuple[int, ...]
    action: str = "start"
    value: int | None = None


def series_machine_sort(
    perm: Sequence[int], num_stacks: int, record_states: bool = True
) -> tuple[bool, list[SeriesMachineState]]:
    """
    Run the deterministic stacks-in-series policy.

    Moves, in priority order: (a) if the next needed value is at the front
    of the input or atop any stack, it goes directly to the output; (b) else
    the input front is pushed onto the rightmost stack; (c) else the
    rightmost non-empty stack transfers its top one stack leftward; (d) when
    only the leftmost stack remains and its top is not the next needed
    value, the machine halts unsorted.

    >>> series_machine_sort((2, 4, 1, 3), 3)[0]
    True
    >>> series_machine_sort((2, 4, 1, 3), 2)[0]
    False
    >>> series_machine_sort((2, 3, 1), 2)[0]
    True
    """
    if num_stacks < 1:
        raise ValueError(f"need at least one stack, got {num_stacks}")
    n = len(perm)
    stacks: list[list[int]] = [[] for _ in range(num_stacks)]
    inp = list(perm)
    head = 0  # index of the current input front
    out_next = 1
    output: list[int] = []

    states: list[SeriesMachineState] = []

    def snapshot(action: str, value: int | None) -> None:
        if record_states:
            states.append(
                SeriesMachineState(
                    stacks=tuple(tuple(s) for s in stacks),
                    input=tuple(inp[head:]),
                    output=tuple(output),
                    action=action,
                    value=value,
                )
            )

    snapshot("start", None)
    step_limit = 10 * n * n + 10  # guard only; the policy terminates on its own
    sorted_ok = True
    for _ in range(step_limit):
        if out_next > n:
            break
        if head < n and inp[head] == out_next:
            output.append(inp[head])
            head += 1
            out_next += 1
            snapshot("output", output[-1])
            continue
        popped = False
        for stack in stacks:
            if stack and stack[-1] == out_next:
                output.append(stack.pop())
                out_next += 1
                snapshot("output", output[-1])
                popped = True
                break
        if popped:
            continue
        if head < n:
            stacks[0].append(inp[head])
            head += 1
            snapshot("push", stacks[0][-1])
            continue
        source = next((j for j in range(num_stacks) if stacks[j]), None)
        if source is None or source == num_stacks - 1:
            # Only the leftmost stack (or nothing) remains and its top is
            # not the next needed value: no legal move.
            sorted_ok = False
            break
        stacks[source + 1].append(stacks[source].pop())
        snapshot("transfer", stacks[source + 1][-1])
    else:
        raise RuntimeError("series machine exceeded its step bound")
    return sorted_ok and out_next > n, states


# --- trace rendering -------------------------------------------------------


def _join(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in values)


def trace_lines(perm: Sequence[int], trace: SortTrace) -> list[str]:
    """
    Render a reverse-pass trace as text lines: output | stack | input per step.

    Requires the trace to have been recorded with ``record_steps=True``.
    """
    lines = [f"permutation {format_permutation(perm)}  rev-tier {trace.tier}"]
    emitted_so_far: list[int] = []
    for index, record in enumerate(trace.passes, start=1):
        if record.events is None:
            raise ValueError("trace was recorded without step events")
        lines.append(f"pass {index}")
        stack: list[int] = []
        pending = list(record.input_at_start)
        lines.append(f"  {_join(emitted_so_far)} | {_join(stack)} | {_join(pending)}")
        for action, value in record.events:
            if action == "push":
                stack.append(pending.pop(0))
            else:
                stack.pop()
                emitted_so_far.append(value)
            lines.append(
                f"  {_join(emitted_so_far)} | {_join(stack)} | {_join(pending)}"
            )
    return lines


def trace_json_dict(perm: Sequence[int], trace: SortTrace) -> dict:
    """Structured trace: pass index, then (action, moved value) steps."""
    passes = []
    for index, record in enumerate(trace.passes, start=1):
        entry: dict = {
            "pass": index,
            "input": list(record.input_at_start),
            "emitted": list(record.emitted),
            "residual_stack_bottom_to_top": list(
                record.residual_stack_bottom_to_top
            ),
        }
        if record.events is not None:
            entry["steps"] = [
                {"action": action, "value": value}
                for action, value in record.events
            ]
        passes.append(entry)
    return {
        "schema": "revpass.trace/1",
        "permutation": list(perm),
        "tier": trace.tier,
        "passes": passes,
        "final_output": list(trace.final_output),
    }


def machine_trace_lines(
    perm: Sequence[int], sorted_ok: bool, states: Sequence[SeriesMachineState]
) -> list[str]:
    """One line per machine state: output | stacks left to right | input."""
    verdict = "sorted" if sorted_ok else "not sorted"
    lines = [
        f"permutation {format_permutation(perm)}  "
        f"stacks {len(states[0].stacks)}  {verdict}"
    ]
    for state in states:
        stacks_left_to_right = " | ".join(
            _join(s) for s in reversed(state.stacks)
        )
        move = state.action if state.value is None else f"{state.action} {state.value}"
        lines.append(
            f"  {_join(state.output)} | {stacks_left_to_right} | "
            f"{_join(state.input)}   [{move}]"
        )
    return lines


def machine_trace_json_dict(
    perm: Sequence[int], sorted_ok: bool, states: Sequence[SeriesMachineState]
) -> dict:
    return {
        "schema": "revpass.machine/1",
        "permutation": list(perm),
        "num_stacks": len(states[0].stacks),
        "sorted": sorted_ok,
        "steps": [
            {
                "action": state.action,
                "value": state.value,
                "stacks_rightmost_first": [list(s) for s in state.stacks],
                "input": list(state.input),
                "output": list(state.output),
            }
            for state in states
        ],
    }
