"""Reachability decisions for planar vector addition systems with states.

The capped breadth-first search explores (automaton state, configuration)
pairs with both counters bounded by a cap.  A positive answer comes with
a shortest in-cap witness; a negative answer is only ever "unreachable
within this cap", because the cap for the general system is heuristic.
Unconditional negative answers are reserved for the simple-scheme
decider, whose cap is backed by an explicit bound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import Configuration, PlaneVector, Vass, Word, run
from .errors import BudgetExceededError, PreconditionError

REACHABLE = "Reachable"
UNREACHABLE_WITHIN_CAP = "UnreachableWithinCap"
UNREACHABLE = "Unreachable"


@dataclass(frozen=True)
class Verdict:
    """A decision with provenance: the cap used, the witness (word and
    state trace) when reachable, and an explored-state statistic."""

    kind: str
    cap: int
    witness: Optional[Word] = None
    states: Optional[tuple[str, ...]] = None
    explored: int = 0
    length: Optional[int] = None  # witness length; oracles report it without a word

    def __post_init__(self):
        if self.witness is not None and self.length is None:
            object.__setattr__(self, "length", len(self.witness))


def default_cap(vass: Vass, source: Configuration, target: Configuration) -> int:
    """Pragmatic pseudo-polynomial cap: 64*(n+1)*(norm+1)^4 over the
    state count and the norm of the alphabet plus both endpoints.

    A heuristic default, not a completeness guarantee.
    """
    n = len(vass.states)
    norm = max(vass.norm, source.norm, target.norm)
    return 64 * (n + 1) * (norm + 1) ** 4


def witness_violation(
    vass: Vass, source: Configuration, target: Configuration, word: Word, states
) -> Optional[str]:
    """Check a reachability witness against the automaton and the counters;
    None when valid, else the violated condition."""
    if states is None or len(states) != len(word) + 1:
        return "state trace length must be word length plus one"
    if states[0] not in vass.initial:
        return f"first state {states[0]!r} is not initial"
    if states[-1] not in vass.accepting:
        return f"last state {states[-1]!r} is not accepting"
    edges = set(vass.edges)
    for i, letter in enumerate(word):
        if (states[i], letter, states[i + 1]) not in edges:
            return f"no edge {states[i]} -> {states[i + 1]} with label {letter}"
    trace = run(word, source)
    if not trace.admissible:
        return "witness run leaves the non-negative quadrant"
    if trace.target != target.to_vector():
        return f"witness run ends at {trace.target}, not {target}"
    return None


def _reconstruct(parents, goal):
    word: list[PlaneVector] = []
    states: list[str] = [goal[0]]
    node = goal
    while parents[node] is not None:
        prev, letter = parents[node]
        word.append(letter)
        states.append(prev[0])
        node = prev
    word.reverse()
    states.reverse()
    return tuple(word), tuple(states)


def decide_capped_bfs(
    vass: Vass, source: Configuration, target: Configuration, cap: int
) -> Verdict:
    """Breadth-first search over (state, x, y) with x, y <= cap.

    Returns a shortest in-cap witness when one exists, else
    UnreachableWithinCap.
    """
    if cap < max(source.norm, target.norm):
        raise PreconditionError(
            f"cap {cap} below the endpoint norms {max(source.norm, target.norm)}"
        )
    goal_xy = (target.x, target.y)
    parents: dict[tuple, Optional[tuple]] = {}
    queue: deque[tuple] = deque()
    for q in sorted(vass.initial):
        node = (q, source.x, source.y)
        if node not in parents:
            parents[node] = None
            queue.append(node)
    goal = None
    explored = 0
    while queue:
        node = queue.popleft()
        if node[0] in vass.accepting and (node[1], node[2]) == goal_xy:
            goal = node
            break
        explored += 1
        q, x, y = node
        for letter, nxt_state in vass.edges_from(q):
            nx, ny = x + letter.x, y + letter.y
            if nx < 0 or ny < 0 or nx > cap or ny > cap:
                continue
            nxt = (nxt_state, nx, ny)
            if nxt not in parents:
                parents[nxt] = (node, letter)
                queue.append(nxt)
    if goal is None:
        return Verdict(kind=UNREACHABLE_WITHIN_CAP, cap=cap, explored=explored)
    word, states = _reconstruct(parents, goal)
    return Verdict(kind=REACHABLE, cap=cap, witness=word, states=states, explored=explored)


def decide_bounded_witness(
    vass: Vass,
    source: Configuration,
    target: Configuration,
    length_bound: int,
    budget: int = 2_000_000,
) -> Verdict:
    """Search admissible accepted words of length at most length_bound.

    Level-by-level frontier over (state, configuration); the counters are
    unbounded but each level only holds points reachable within the
    length bound.  Never returns an unconditional negative: the bound is
    the caller's assertion, not a completeness guarantee.
    """
    parents: dict[tuple, Optional[tuple]] = {}
    frontier: list[tuple] = []
    explored = 0
    for q in sorted(vass.initial):
        node = (q, source.x, source.y, 0)
        parents[node] = None
        frontier.append(node)
    goal = None
    for depth in range(length_bound + 1):
        for node in frontier:
            if goal is None and node[0] in vass.accepting and node[1:3] == (target.x, target.y):
                goal = node
        if goal is not None or depth == length_bound:
            break
        nxt_frontier = []
        for node in frontier:
            explored += 1
            if explored > budget:
                raise BudgetExceededError(f"bounded search exceeded its budget of {budget} states")
            q, x, y, _ = node
            for letter, nxt_state in vass.edges_from(q):
                nx, ny = x + letter.x, y + letter.y
                if nx < 0 or ny < 0:
                    continue
                nxt = (nxt_state, nx, ny, depth + 1)
                if nxt not in parents:
                    parents[nxt] = (node, letter)
                    nxt_frontier.append(nxt)
        frontier = nxt_frontier
    if goal is None:
        return Verdict(kind=UNREACHABLE_WITHIN_CAP, cap=length_bound, explored=explored)
    word, states = _reconstruct(parents, goal)
    return Verdict(
        kind=REACHABLE, cap=length_bound, witness=word, states=states, explored=explored
    )


def brute_force_oracle(
    vass: Vass, source: Configuration, target: Configuration, cap: int, budget: int = 200_000
) -> Verdict:
    """Independent oracle: naive level-set fixpoint over explicit word
    prefixes within the cap, no data structures shared with the decider.

    Returns the same verdict kind, and for positive answers the length of
    a shortest in-cap witness (no witness word is produced).
    """
    level = {(q, source.x, source.y) for q in vass.initial}
    seen = set(level)
    explored = 0
    length = 0
    goal = {(q, target.x, target.y) for q in vass.accepting}
    while level:
        if level & goal:
            return Verdict(kind=REACHABLE, cap=cap, explored=explored, length=length)
        explored += len(level)
        if explored > budget:
            raise BudgetExceededError(f"oracle exceeded its budget of {budget} states")
        nxt = set()
        for q, x, y in level:
            for p, letter, r in vass.edges:
                if p != q:
                    continue
                nx, ny = x + letter.x, y + letter.y
                if 0 <= nx <= cap and 0 <= ny <= cap and (r, nx, ny) not in seen:
                    nxt.add((r, nx, ny))
        seen |= nxt
        level = nxt
        length += 1
    return Verdict(kind=UNREACHABLE_WITHIN_CAP, cap=cap, explored=explored)
